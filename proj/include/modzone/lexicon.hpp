#pragma once

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "modzone/tag.hpp"
#include "modzone/util.hpp"

namespace modzone {

namespace detail {

inline LoadError line_error(const std::filesystem::path& path, std::size_t line,
                            const std::string& msg) {
  return LoadError(path.string() + ":" + std::to_string(line) + ": " + msg);
}

// Data rows of a TSV resource: (line number, fields). '#' lines and blank
// lines are skipped.
inline std::vector<std::pair<std::size_t, std::vector<std::string>>> read_tsv(
    const std::filesystem::path& path) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string& line = lines[i];
    if (line.empty() || line[0] == '#') continue;
    rows.emplace_back(i + 1, split_on(line, '\t'));
  }
  return rows;
}

}  // namespace detail

struct PosEntry {
  Tag tag = Tag::NONE;
  long long count = 0;
};

// Word-form -> syntactic categories with corpus frequencies, most frequent
// first (ties broken by tag enumeration order). Lowercase rows are matched
// case-insensitively; rows written with an initial capital are kept apart
// and matched against the original surface only.
class PosLexicon {
 public:
  static PosLexicon load(const std::filesystem::path& path) {
    PosLexicon lex;
    auto rows = detail::read_tsv(path);
    if (rows.empty()) throw LoadError(path.string() + ": empty lexicon");
    for (const auto& [line, fields] : rows) {
      if (fields.size() != 3)
        throw detail::line_error(path, line, "expected word<TAB>TAG<TAB>count");
      const std::string& word = fields[0];
      if (word.empty()) throw detail::line_error(path, line, "empty word");
      std::optional<Tag> tag = parse_tag(fields[1]);
      if (!tag) tag = reduce_brown_tag(fields[1]);
      if (!tag || *tag == Tag::NONE)
        throw detail::line_error(path, line, "unknown tag '" + fields[1] + "'");
      long long count = 0;
      auto [p, ec] = std::from_chars(fields[2].data(),
                                     fields[2].data() + fields[2].size(), count);
      if (ec != std::errc() || p != fields[2].data() + fields[2].size() || count < 0)
        throw detail::line_error(path, line, "bad count '" + fields[2] + "'");
      auto& entries = starts_upper(word) ? lex.cased_[word] : lex.folded_[fold_case(word)];
      bool merged = false;
      for (auto& e : entries) {
        if (e.tag == *tag) {
          e.count += count;
          merged = true;
          break;
        }
      }
      if (!merged) entries.push_back(PosEntry{*tag, count});
    }
    auto order = [](const PosEntry& a, const PosEntry& b) {
      if (a.count != b.count) return a.count > b.count;
      return static_cast<int>(a.tag) < static_cast<int>(b.tag);
    };
    for (auto& [w, entries] : lex.folded_) std::sort(entries.begin(), entries.end(), order);
    for (auto& [w, entries] : lex.cased_) std::sort(entries.begin(), entries.end(), order);
    return lex;
  }

  // Case-insensitive lookup; expects an already folded key or any casing.
  const std::vector<PosEntry>* lookup(std::string_view word) const {
    auto it = folded_.find(fold_case(word));
    return it == folded_.end() ? nullptr : &it->second;
  }

  // Exact lookup against capitalized rows.
  const std::vector<PosEntry>* lookup_cased(std::string_view surface) const {
    auto it = cased_.find(std::string(surface));
    return it == cased_.end() ? nullptr : &it->second;
  }

  std::optional<PosEntry> head(std::string_view word) const {
    const auto* entries = lookup(word);
    if (entries && !entries->empty()) return entries->front();
    return std::nullopt;
  }

  // True when any category listed for the word is verbal (VB/VPA/VPR).
  bool has_verbal(std::string_view word) const {
    const auto* entries = lookup(word);
    if (!entries) return false;
    return std::any_of(entries->begin(), entries->end(),
                       [](const PosEntry& e) { return is_verbal(e.tag); });
  }

  std::size_t size() const { return folded_.size() + cased_.size(); }

  std::string dump() const {
    std::string out;
    auto emit = [&out](const std::map<std::string, std::vector<PosEntry>, std::less<>>& m) {
      for (const auto& [word, entries] : m)
        for (const auto& e : entries) {
          out += word;
          out += '\t';
          out += tag_name(e.tag);
          out += '\t';
          out += std::to_string(e.count);
          out += '\n';
        }
    };
    emit(folded_);
    emit(cased_);
    return out;
  }

 private:
  std::map<std::string, std::vector<PosEntry>, std::less<>> folded_;
  std::map<std::string, std::vector<PosEntry>, std::less<>> cased_;
};

// First-name gazetteer split by gender; membership is case-insensitive.
class NameLexicon {
 public:
  static NameLexicon load(const std::filesystem::path& female_path,
                          const std::filesystem::path& male_path) {
    NameLexicon lex;
    lex.female_ = load_set(female_path);
    lex.male_ = load_set(male_path);
    return lex;
  }

  bool is_female(std::string_view name) const {
    return !name.empty() && female_.count(fold_case(name)) > 0;
  }
  bool is_male(std::string_view name) const {
    return !name.empty() && male_.count(fold_case(name)) > 0;
  }
  bool contains(std::string_view name) const {
    return is_female(name) || is_male(name);
  }

  std::size_t female_count() const { return female_.size(); }
  std::size_t male_count() const { return male_.size(); }

  std::string dump() const {
    std::string out;
    for (const auto& n : female_) out += "F " + n + "\n";
    for (const auto& n : male_) out += "M " + n + "\n";
    return out;
  }

 private:
  static std::set<std::string> load_set(const std::filesystem::path& path) {
    std::set<std::string> names;
    for (const auto& line : read_lines(path)) {
      std::string name = trim(line);
      if (name.empty() || name[0] == '#') continue;
      names.insert(fold_case(name));
    }
    return names;
  }

  std::set<std::string> female_;
  std::set<std::string> male_;
};

enum class LexCategory { ModalVerb, CognitiveVerb, Adverb, Adjective, Noun };
enum class ModalityClass { Epistemic, Deontic, Contextual };

inline std::string_view lex_category_name(LexCategory c) {
  switch (c) {
    case LexCategory::ModalVerb: return "modal-verb";
    case LexCategory::CognitiveVerb: return "cognitive-verb";
    case LexCategory::Adverb: return "adverb";
    case LexCategory::Adjective: return "adjective";
    case LexCategory::Noun: return "noun";
  }
  return "";
}

inline std::string_view modality_class_name(ModalityClass c) {
  switch (c) {
    case ModalityClass::Epistemic: return "epistemic";
    case ModalityClass::Deontic: return "deontic";
    case ModalityClass::Contextual: return "contextual";
  }
  return "";
}

inline std::optional<LexCategory> parse_lex_category(std::string_view s) {
  if (s == "modal-verb") return LexCategory::ModalVerb;
  if (s == "cognitive-verb") return LexCategory::CognitiveVerb;
  if (s == "adverb") return LexCategory::Adverb;
  if (s == "adjective") return LexCategory::Adjective;
  if (s == "noun") return LexCategory::Noun;
  return std::nullopt;
}

inline std::optional<ModalityClass> parse_modality_class(std::string_view s) {
  if (s == "epistemic") return ModalityClass::Epistemic;
  if (s == "deontic") return ModalityClass::Deontic;
  if (s == "contextual") return ModalityClass::Contextual;
  return std::nullopt;
}

// Class a modal verb resolves to when no collocation context applies.
// must/should resolve contextually and are absent here.
inline std::optional<ModalityClass> unconditional_modal_class(std::string_view lemma) {
  if (lemma == "could" || lemma == "may" || lemma == "might" || lemma == "will" ||
      lemma == "would")
    return ModalityClass::Epistemic;
  if (lemma == "can" || lemma == "shall") return ModalityClass::Deontic;
  return std::nullopt;
}

struct ModalityEntry {
  std::string lemma;
  LexCategory category = LexCategory::ModalVerb;
  ModalityClass cls = ModalityClass::Contextual;
};

// Lemma -> (lexical category, modality class) table driving trigger search.
class ModalityLexicon {
 public:
  static ModalityLexicon load(const std::filesystem::path& path) {
    ModalityLexicon lex;
    for (const auto& [line, fields] : detail::read_tsv(path)) {
      if (fields.size() != 3)
        throw detail::line_error(path, line, "expected lemma<TAB>category<TAB>class");
      std::string lemma = fold_case(trim(fields[0]));
      if (lemma.empty()) throw detail::line_error(path, line, "empty lemma");
      auto category = parse_lex_category(fields[1]);
      if (!category)
        throw detail::line_error(path, line, "unknown category '" + fields[1] + "'");
      auto cls = parse_modality_class(fields[2]);
      if (!cls) throw detail::line_error(path, line, "unknown class '" + fields[2] + "'");
      if (*category == LexCategory::ModalVerb) {
        if (*cls != ModalityClass::Contextual &&
            unconditional_modal_class(lemma) != *cls)
          throw detail::line_error(
              path, line, "modal verb '" + lemma + "' must be classed contextual");
      } else if (*cls == ModalityClass::Contextual) {
        throw detail::line_error(
            path, line, "class contextual is reserved for modal verbs");
      }
      for (const auto& e : lex.entries_) {
        if (e.lemma == lemma && e.category == *category)
          throw detail::line_error(path, line,
                                   "duplicate entry for '" + lemma + "'");
      }
      lex.entries_.push_back(ModalityEntry{lemma, *category, *cls});
    }
    for (std::size_t i = 0; i < lex.entries_.size(); ++i)
      lex.by_lemma_[lex.entries_[i].lemma].push_back(i);
    return lex;
  }

  // All entries registered for a lemma, in file order.
  std::vector<const ModalityEntry*> match(std::string_view lemma) const {
    std::vector<const ModalityEntry*> out;
    auto it = by_lemma_.find(fold_case(lemma));
    if (it != by_lemma_.end())
      for (std::size_t i : it->second) out.push_back(&entries_[i]);
    return out;
  }

  const ModalityEntry* find(std::string_view lemma, LexCategory category) const {
    for (const ModalityEntry* e : match(lemma))
      if (e->category == category) return e;
    return nullptr;
  }

  const std::vector<ModalityEntry>& entries() const { return entries_; }

  std::string dump() const {
    std::string out;
    for (const auto& e : entries_) {
      out += e.lemma;
      out += '\t';
      out += lex_category_name(e.category);
      out += '\t';
      out += modality_class_name(e.cls);
      out += '\n';
    }
    return out;
  }

 private:
  std::vector<ModalityEntry> entries_;
  std::map<std::string, std::vector<std::size_t>, std::less<>> by_lemma_;
};

// Closure of the seed lemmas under a caller-supplied synonym function,
// applied at most `depth` times. Results are case-folded, deduplicated and
// sorted. Synonym lookups that fail should return an empty set.
inline std::vector<std::string> expand_modality_seeds(
    const std::vector<std::string>& seeds,
    const std::function<std::set<std::string>(const std::string&)>& synonyms,
    int depth) {
  if (depth < 0 || depth > 3)
    throw std::invalid_argument("expansion depth must be within [0, 3]");
  std::set<std::string> closure;
  std::set<std::string> frontier;
  for (const auto& s : seeds) {
    std::string f = fold_case(trim(s));
    if (f.empty()) continue;
    closure.insert(f);
    frontier.insert(f);
  }
  for (int d = 0; d < depth && !frontier.empty(); ++d) {
    std::set<std::string> next;
    for (const auto& lemma : frontier) {
      for (const auto& syn : synonyms(lemma)) {
        std::string f = fold_case(trim(syn));
        if (!f.empty() && closure.insert(f).second) next.insert(f);
      }
    }
    frontier = std::move(next);
  }
  return std::vector<std::string>(closure.begin(), closure.end());
}

}  // namespace modzone
