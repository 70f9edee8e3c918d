#pragma once

#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "modzone/lexicon.hpp"
#include "modzone/postag.hpp"
#include "modzone/preprocess.hpp"

namespace modzone {

// Accepted shape sequences of the naming automaton. FN is a first name
// known to the name lexicon, LN any other capitalized word, ABB an
// initial-style abbreviation.
enum class NamePattern { FN_LN, ABB_LN, FN_ABB_LN, FN, LN, ABB_ABB_LN };

inline std::string_view name_pattern_name(NamePattern p) {
  switch (p) {
    case NamePattern::FN_LN: return "FN_LN";
    case NamePattern::ABB_LN: return "ABB_LN";
    case NamePattern::FN_ABB_LN: return "FN_ABB_LN";
    case NamePattern::FN: return "FN";
    case NamePattern::LN: return "LN";
    case NamePattern::ABB_ABB_LN: return "ABB_ABB_LN";
  }
  return "";
}

enum class PersonSource { ReferenceList, NameLexicon, Manual };

inline std::string_view person_source_name(PersonSource s) {
  switch (s) {
    case PersonSource::ReferenceList: return "reference-list";
    case PersonSource::NameLexicon: return "name-lexicon";
    case PersonSource::Manual: return "manual";
  }
  return "";
}

struct Mention {
  std::size_t sentence = 0;
  std::size_t first_token = 0;
  std::size_t last_token = 0;  // inclusive
};

struct PersonEntity {
  int id = 0;
  std::string canonical_name;
  std::optional<NamePattern> pattern;  // empty for manually accepted entities
  std::vector<Mention> mentions;
  PersonSource source = PersonSource::NameLexicon;
};

struct PronounLink {
  std::size_t sentence = 0;
  std::size_t token = 0;
  int antecedent = 0;  // PersonEntity id
};

struct CandidateRun {
  std::size_t sentence = 0;
  std::size_t first_token = 0;
  std::size_t last_token = 0;  // inclusive
  std::string surface;         // tokens joined by single spaces
};

// Last names harvested from a trailing References/Bibliography section.
class ReferenceNames {
 public:
  void add(std::string_view display) {
    std::string folded = fold_case(display);
    if (folded.empty()) return;
    display_.emplace(std::move(folded), std::string(display));
  }
  bool contains(std::string_view name) const {
    return display_.count(fold_case(name)) > 0;
  }
  std::set<std::string> names() const {
    std::set<std::string> out;
    for (const auto& [folded, display] : display_) out.insert(display);
    return out;
  }
  std::size_t size() const { return display_.size(); }

 private:
  std::map<std::string, std::string> display_;
};

namespace detail {

inline bool is_reference_heading(std::string_view line) {
  std::string t = trim(line);
  std::size_t i = 0;  // tolerate section numbering
  while (i < t.size() && (is_ascii_digit(t[i]) || t[i] == '.' || t[i] == ' ')) ++i;
  std::string body = fold_case(t.substr(i));
  while (!body.empty() && (body.back() == ':' || body.back() == '.')) body.pop_back();
  return body == "references" || body == "bibliography";
}

inline bool is_reference_stopword(const std::string& folded) {
  static const std::set<std::string> stop = {
      "the", "a", "an", "in", "of", "and", "for", "on", "journal", "nature",
      "science", "proceedings", "press", "university", "vol", "no", "eds",
      "ed", "new", "san", "pages", "page",
  };
  return stop.count(folded) > 0;
}

}  // namespace detail

// Harvests last names from the lines following a trailing "References" or
// "Bibliography" heading: capitalized words preceding initials or a year.
// Works on the source text, before placeholder substitution.
inline ReferenceNames extract_reference_names(const Document& doc) {
  ReferenceNames refs;
  auto lines = [&doc]() {
    std::vector<std::string> out;
    std::string cur;
    for (char c : doc.source_text) {
      if (c == '\n') {
        out.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    out.push_back(cur);
    return out;
  }();
  std::size_t heading = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (detail::is_reference_heading(lines[i])) heading = i;
  }
  if (heading == lines.size()) return refs;
  static const std::regex before_initials(R"(([A-Z][A-Za-z'-]+)\s*,\s*[A-Z]\.)");
  static const std::regex before_year(R"(([A-Z][A-Za-z'-]+)[\s,]*\(?(1[5-9][0-9][0-9]|20[0-9][0-9])\)?)");
  for (std::size_t i = heading + 1; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    for (const auto* re : {&before_initials, &before_year}) {
      for (std::sregex_iterator it(line.begin(), line.end(), *re), end; it != end; ++it) {
        std::string display = (*it)[1].str();
        if (!detail::is_reference_stopword(fold_case(display))) refs.add(display);
      }
    }
  }
  return refs;
}

namespace detail {

inline bool is_abbreviation_shape(std::string_view surface) {
  return is_initials(surface);
}

inline bool is_capitalized_word(std::string_view surface) {
  if (!starts_upper(surface)) return false;
  std::size_t letters = 0;
  for (char c : surface)
    if (is_ascii_alpha(c)) ++letters;
  return letters >= 2;  // bare "I"/"A" are never name candidates
}

}  // namespace detail

// Maximal runs of capitalized words and initials. A sentence-initial word
// qualifies only when it was tagged as a proper noun.
inline std::vector<CandidateRun> detect_name_candidates(const Sentence& sentence) {
  std::vector<CandidateRun> runs;
  std::size_t first_word = sentence.tokens.size();
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (!is_punct_token(sentence.tokens[i])) {
      first_word = i;
      break;
    }
  }
  std::optional<std::size_t> run_start;
  auto close_run = [&](std::size_t end_idx) {
    if (!run_start) return;
    CandidateRun run;
    run.sentence = sentence.index;
    run.first_token = *run_start;
    run.last_token = end_idx - 1;
    for (std::size_t i = run.first_token; i <= run.last_token; ++i) {
      if (i > run.first_token) run.surface += ' ';
      run.surface += sentence.tokens[i].surface;
    }
    runs.push_back(std::move(run));
    run_start.reset();
  };
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token& t = sentence.tokens[i];
    bool candidate = !is_punct_token(t) &&
                     (detail::is_abbreviation_shape(t.surface) ||
                      detail::is_capitalized_word(t.surface)) &&
                     t.surface != "FIG" && t.surface != "MATH" &&
                     t.lemma != "references" && t.lemma != "bibliography";
    if (candidate && i == first_word && t.tag != Tag::NP) candidate = false;
    if (candidate) {
      if (!run_start) run_start = i;
    } else {
      close_run(i);
    }
  }
  close_run(sentence.tokens.size());
  return runs;
}

// Classifies the token shapes of a candidate run and accepts the known
// shape sequences; a lone last name is accepted only when it appears in
// the harvested reference names.
inline std::optional<NamePattern> run_name_automaton(const Sentence& sentence,
                                                     const CandidateRun& run,
                                                     const NameLexicon& names,
                                                     const ReferenceNames& refs) {
  enum class Shape { FN, ABB, LN };
  std::vector<Shape> shapes;
  for (std::size_t i = run.first_token; i <= run.last_token; ++i) {
    const Token& t = sentence.tokens[i];
    if (names.contains(t.lemma))
      shapes.push_back(Shape::FN);
    else if (detail::is_abbreviation_shape(t.surface))
      shapes.push_back(Shape::ABB);
    else if (starts_upper(t.surface))
      shapes.push_back(Shape::LN);
    else
      return std::nullopt;
  }
  using S = Shape;
  if (shapes == std::vector<S>{S::FN, S::LN}) return NamePattern::FN_LN;
  if (shapes == std::vector<S>{S::ABB, S::LN}) return NamePattern::ABB_LN;
  if (shapes == std::vector<S>{S::FN, S::ABB, S::LN}) return NamePattern::FN_ABB_LN;
  if (shapes == std::vector<S>{S::ABB, S::ABB, S::LN}) return NamePattern::ABB_ABB_LN;
  if (shapes == std::vector<S>{S::FN}) return NamePattern::FN;
  if (shapes == std::vector<S>{S::LN}) {
    const Token& t = sentence.tokens[run.first_token];
    if (refs.contains(t.lemma)) return NamePattern::LN;
  }
  return std::nullopt;
}

struct NameDecision {
  bool accept = false;
  std::string canonical_name;  // optional; defaults to the run's last token
};

// Decision source for candidates the automaton rejected.
class NameChannel {
 public:
  virtual ~NameChannel() = default;
  virtual std::optional<NameDecision> decide(const CandidateRun& run) = 0;
};

struct PersonIndex {
  std::vector<PersonEntity> entities;
  std::vector<CandidateRun> queued;  // rejected runs left undecided

  const PersonEntity* by_id(int id) const {
    for (const auto& e : entities)
      if (e.id == id) return &e;
    return nullptr;
  }
};

// Marks person mentions across the document: automaton-accepted runs first
// (reference-list provenance when the canonical name was harvested),
// remaining candidates go through the decision channel. Mentions sharing a
// canonical name merge into one entity.
inline PersonIndex mark_persons(const Document& doc, const NameLexicon& names,
                                const ReferenceNames& refs,
                                NameChannel* channel = nullptr) {
  PersonIndex index;
  std::map<std::string, std::size_t> by_canonical;
  auto upsert = [&](const std::string& canonical, std::optional<NamePattern> pattern,
                    PersonSource source, const Mention& mention) {
    std::string key = fold_case(canonical);
    auto it = by_canonical.find(key);
    if (it == by_canonical.end()) {
      PersonEntity e;
      e.id = static_cast<int>(index.entities.size());
      e.canonical_name = canonical;
      e.pattern = pattern;
      e.source = source;
      e.mentions.push_back(mention);
      by_canonical.emplace(key, index.entities.size());
      index.entities.push_back(std::move(e));
    } else {
      index.entities[it->second].mentions.push_back(mention);
    }
  };
  for (const Sentence& sentence : doc.sentences) {
    for (const CandidateRun& run : detect_name_candidates(sentence)) {
      Mention mention{sentence.index, run.first_token, run.last_token};
      if (auto pattern = run_name_automaton(sentence, run, names, refs)) {
        std::string canonical = *pattern == NamePattern::FN
                                    ? run.surface
                                    : sentence.tokens[run.last_token].surface;
        PersonSource source = refs.contains(canonical) ? PersonSource::ReferenceList
                                                       : PersonSource::NameLexicon;
        upsert(canonical, pattern, source, mention);
        continue;
      }
      std::optional<NameDecision> decision;
      if (channel) decision = channel->decide(run);
      if (decision && decision->accept) {
        std::string canonical = decision->canonical_name.empty()
                                    ? sentence.tokens[run.last_token].surface
                                    : decision->canonical_name;
        upsert(canonical, std::nullopt, PersonSource::Manual, mention);
      } else if (!decision) {
        index.queued.push_back(run);
      }
    }
  }
  return index;
}

enum class EntityGender { Male, Female, Unknown };

// Gender is known only when a mention starts with a first name from the
// gazetteer that is unique to one list.
inline EntityGender entity_gender(const PersonEntity& entity, const Document& doc,
                                  const NameLexicon& names) {
  for (const Mention& m : entity.mentions) {
    if (m.sentence >= doc.sentences.size()) continue;
    const auto& tokens = doc.sentences[m.sentence].tokens;
    if (m.first_token >= tokens.size()) continue;
    const std::string& lemma = tokens[m.first_token].lemma;
    bool female = names.is_female(lemma);
    bool male = names.is_male(lemma);
    if (female && !male) return EntityGender::Female;
    if (male && !female) return EntityGender::Male;
  }
  return EntityGender::Unknown;
}

// Links "who" to the nearest preceding mention in the same sentence, and
// "he"/"she" to the nearest preceding mention in the current or previous
// sentence, preferring gender-compatible antecedents. "they" and forward
// references are never linked.
inline std::vector<PronounLink> link_pronouns(const Document& doc,
                                              const PersonIndex& persons,
                                              const NameLexicon& names) {
  std::vector<PronounLink> links;
  struct Anchor {
    std::size_t sentence;
    std::size_t last_token;
    int entity;
  };
  std::vector<std::vector<Anchor>> per_sentence(doc.sentences.size());
  for (const PersonEntity& e : persons.entities) {
    for (const Mention& m : e.mentions) {
      if (m.sentence < per_sentence.size())
        per_sentence[m.sentence].push_back(Anchor{m.sentence, m.last_token, e.id});
    }
  }
  std::map<int, EntityGender> gender;
  for (const PersonEntity& e : persons.entities)
    gender[e.id] = entity_gender(e, doc, names);
  for (const Sentence& sentence : doc.sentences) {
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      const Token& t = sentence.tokens[i];
      bool is_who = t.tag == Tag::WPS && t.lemma == "who";
      bool is_he_she = t.tag == Tag::PPS && (t.lemma == "he" || t.lemma == "she");
      if (!is_who && !is_he_she) continue;
      std::vector<Anchor> scope;  // ordered nearest first
      for (const Anchor& a : per_sentence[sentence.index])
        if (a.last_token < i) scope.push_back(a);
      std::sort(scope.begin(), scope.end(), [](const Anchor& a, const Anchor& b) {
        return a.last_token > b.last_token;
      });
      if (is_he_she && sentence.index > 0) {
        std::vector<Anchor> prev = per_sentence[sentence.index - 1];
        std::sort(prev.begin(), prev.end(), [](const Anchor& a, const Anchor& b) {
          return a.last_token > b.last_token;
        });
        scope.insert(scope.end(), prev.begin(), prev.end());
      }
      if (scope.empty()) continue;
      const Anchor* chosen = nullptr;
      if (is_he_she) {
        EntityGender incompatible =
            t.lemma == "he" ? EntityGender::Female : EntityGender::Male;
        for (const Anchor& a : scope) {
          if (gender[a.entity] != incompatible) {
            chosen = &a;
            break;
          }
        }
      }
      if (!chosen) chosen = &scope.front();  // gender filter is advisory
      links.push_back(PronounLink{sentence.index, i, chosen->entity});
    }
  }
  return links;
}

}  // namespace modzone
