#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "modzone/lexicon.hpp"
#include "modzone/preprocess.hpp"
#include "modzone/tag.hpp"

namespace modzone {

struct SuffixRule {
  std::string suffix;
  Tag tag = Tag::NN;
};

// Morphological guess table, applied in order; first match wins. The noun
// suffixes come first, then their plural forms, then the verbal, adverbial
// and adjectival endings.
inline const std::vector<SuffixRule>& default_suffix_rules() {
  static const std::vector<SuffixRule> rules = {
      {"tion", Tag::NN},  {"sion", Tag::NN},  {"ment", Tag::NN},
      {"ness", Tag::NN},  {"ity", Tag::NN},   {"tions", Tag::NNS},
      {"sions", Tag::NNS}, {"ments", Tag::NNS}, {"nesss", Tag::NNS},
      {"itys", Tag::NNS}, {"ed", Tag::VPA},   {"ing", Tag::VPR},
      {"ly", Tag::RB},    {"ous", Tag::ADJ},  {"ive", Tag::ADJ},
      {"al", Tag::ADJ},   {"ic", Tag::ADJ},
  };
  return rules;
}

// Rows `suffix<TAB>TAG`, priority order preserved.
inline std::vector<SuffixRule> load_suffix_rules(const std::filesystem::path& path) {
  std::vector<SuffixRule> rules;
  for (const auto& [line, fields] : detail::read_tsv(path)) {
    if (fields.size() != 2)
      throw detail::line_error(path, line, "expected suffix<TAB>TAG");
    auto tag = parse_tag(fields[1]);
    if (!tag || *tag == Tag::NONE)
      throw detail::line_error(path, line, "unknown tag '" + fields[1] + "'");
    rules.push_back(SuffixRule{fold_case(trim(fields[0])), *tag});
  }
  return rules;
}

// Guess for words absent from the lexicon: suffix table first, then
// capitalized words become proper nouns, everything else a noun.
inline Tag morph_guess(std::string_view surface,
                       const std::vector<SuffixRule>& rules = default_suffix_rules()) {
  std::string folded = fold_case(surface);
  for (const SuffixRule& r : rules) {
    if (folded.size() > r.suffix.size() && ends_with(folded, r.suffix)) return r.tag;
  }
  if (starts_upper(surface)) return Tag::NP;
  return Tag::NN;
}

inline bool is_punct_surface(std::string_view surface) {
  if (surface.empty()) return false;
  std::size_t i = 0;
  while (i < surface.size()) {
    char c = surface[i];
    if (static_cast<unsigned char>(c) >= 0x80) {
      std::size_t mb = detail::multibyte_punct_len(surface, i);
      if (mb == 0) return false;
      i += mb;
      continue;
    }
    if (is_ascii_alnum(c)) return false;
    ++i;
  }
  return true;
}

inline bool is_punct_token(const Token& t) { return is_punct_surface(t.surface); }

// Two-pass tagging: lexicon lookup by most frequent category, then the
// morphological guesser for the remaining unknowns. Negation words are
// pinned to NEG and punctuation to PUNCT regardless of lexicon content.
inline void tag_tokens(std::vector<Token>& tokens, const PosLexicon& lexicon,
                       const std::vector<SuffixRule>& rules = default_suffix_rules()) {
  for (Token& t : tokens) {
    if (is_punct_surface(t.surface)) {
      t.tag = Tag::PUNCT;
      continue;
    }
    if (t.lemma == "not" || t.lemma == "n't") {
      t.tag = Tag::NEG;
      continue;
    }
    if (auto entry = lexicon.head(t.lemma)) {
      t.tag = entry->tag;
      continue;
    }
    if (starts_upper(t.surface)) {
      const auto* cased = lexicon.lookup_cased(t.surface);
      if (cased && !cased->empty()) {
        t.tag = cased->front().tag;
        continue;
      }
    }
    t.tag = Tag::NONE;
  }
  for (Token& t : tokens) {
    if (t.tag == Tag::NONE) t.tag = morph_guess(t.surface, rules);
  }
}

inline void tag_document(Document& doc, const PosLexicon& lexicon,
                         const std::vector<SuffixRule>& rules = default_suffix_rules()) {
  for (Sentence& s : doc.sentences) tag_tokens(s.tokens, lexicon, rules);
}

}  // namespace modzone
