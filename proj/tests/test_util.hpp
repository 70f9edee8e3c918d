#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "modzone/modzone.hpp"

namespace testutil {

inline std::filesystem::path data_dir() { return MODZONE_DATA_DIR; }

inline std::filesystem::path lexicon_dir() { return data_dir() / "lexicons"; }

inline const modzone::LexiconSet& lexicons() {
  static const modzone::LexiconSet set = modzone::LexiconSet::load(lexicon_dir());
  return set;
}

// Builds and tags a single-document pipeline input.
inline modzone::Document tagged_document(const std::string& text) {
  modzone::Document doc = modzone::build_document(text, lexicons().abbreviations);
  modzone::tag_document(doc, lexicons().pos, lexicons().suffix_rules);
  return doc;
}

inline std::vector<std::string> surfaces(const modzone::Sentence& s) {
  std::vector<std::string> out;
  for (const auto& t : s.tokens) out.push_back(t.surface);
  return out;
}

// Fixture rows of data/gold/micro_suite.tsv: (id, label, text).
inline std::vector<std::array<std::string, 3>> micro_suite() {
  std::vector<std::array<std::string, 3>> rows;
  for (const auto& [line, fields] :
       modzone::detail::read_tsv(data_dir() / "gold" / "micro_suite.tsv")) {
    (void)line;
    rows.push_back({fields.at(0), fields.at(1), fields.at(2)});
  }
  return rows;
}

// A sentence fabricated directly from (surface, tag) pairs, bypassing the
// tokenizer; spans are synthesized.
inline modzone::Sentence make_sentence(
    const std::vector<std::pair<std::string, modzone::Tag>>& items,
    std::size_t index = 0) {
  modzone::Sentence s;
  s.index = index;
  std::size_t pos = 0;
  for (const auto& [surface, tag] : items) {
    modzone::Token t;
    t.surface = surface;
    t.lemma = modzone::fold_case(surface);
    t.tag = tag;
    t.begin = pos;
    t.end = pos + surface.size();
    pos = t.end + 1;
    s.tokens.push_back(std::move(t));
  }
  return s;
}

}  // namespace testutil
