#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <unordered_map>

#include "modzone/util.hpp"

namespace modzone {

// Reduced syntactic category set. The pipeline operates on these 22 tags
// only; richer input tagsets are collapsed via reduce_brown_tag below.
// NONE marks a token that has not been tagged yet and never survives the
// second tagging pass.
enum class Tag {
  ART,
  ADJ,
  NN,
  NNS,
  NP,
  IN,
  PPO,
  PPS,
  WPS,
  RB,
  MV,
  NEG,
  HAVE,
  BE,
  BEEN,
  VB,
  VPA,
  VPR,
  CONJ,
  PUNCT,
  OTHER,
  NONE,
};

inline constexpr std::array<std::string_view, 22> kTagNames = {
    "ART",  "ADJ", "NN",   "NNS", "NP",   "IN",  "PPO",  "PPS",
    "WPS",  "RB",  "MV",   "NEG", "HAVE", "BE",  "BEEN", "VB",
    "VPA",  "VPR", "CONJ", "PUNCT", "OTHER", "NONE",
};

constexpr std::string_view tag_name(Tag t) {
  return kTagNames[static_cast<std::size_t>(t)];
}

// Surface form used in rendered annotations; the negation tag prints as "*".
constexpr std::string_view render_tag(Tag t) {
  return t == Tag::NEG ? std::string_view("*") : tag_name(t);
}

inline std::optional<Tag> parse_tag(std::string_view s) {
  if (s == "*") return Tag::NEG;
  for (std::size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == s) return static_cast<Tag>(i);
  }
  return std::nullopt;
}

inline bool is_verbal(Tag t) {
  return t == Tag::VB || t == Tag::VPA || t == Tag::VPR;
}

// Collapses a Brown-corpus-style tag onto the reduced set. Hyphenated
// variants (JJ-TL, NN-HL, ...), possessives (NP$) and composites (PPSS+MD)
// are normalized to their principal tag first. Returns nullopt for tags
// that have no mapping.
inline std::optional<Tag> reduce_brown_tag(std::string_view raw) {
  static const std::unordered_map<std::string_view, Tag> table = {
      {"AT", Tag::ART},   {"DT", Tag::ART},   {"DTI", Tag::ART},
      {"DTS", Tag::ART},  {"DTX", Tag::ART},
      {"JJ", Tag::ADJ},   {"JJR", Tag::ADJ},  {"JJS", Tag::ADJ},
      {"JJT", Tag::ADJ},  {"OD", Tag::ADJ},   {"AP", Tag::ADJ},
      {"NN", Tag::NN},    {"NR", Tag::NN},
      {"NNS", Tag::NNS},  {"NRS", Tag::NNS},
      {"NP", Tag::NP},    {"NPS", Tag::NP},
      {"IN", Tag::IN},    {"TO", Tag::IN},
      {"PPO", Tag::PPO},  {"PPL", Tag::PPO},  {"PPLS", Tag::PPO},
      {"WPO", Tag::PPO},
      {"PPS", Tag::PPS},  {"PPSS", Tag::PPS},
      {"WPS", Tag::WPS},  {"WDT", Tag::WPS},
      {"RB", Tag::RB},    {"RBR", Tag::RB},   {"RBT", Tag::RB},
      {"RN", Tag::RB},    {"RP", Tag::RB},    {"QL", Tag::RB},
      {"QLP", Tag::RB},   {"WRB", Tag::RB},
      {"MD", Tag::MV},
      {"*", Tag::NEG},
      {"HV", Tag::HAVE},  {"HVZ", Tag::HAVE}, {"HVD", Tag::HAVE},
      {"HVG", Tag::HAVE}, {"HVN", Tag::HAVE},
      {"BE", Tag::BE},    {"BEZ", Tag::BE},   {"BED", Tag::BE},
      {"BEDZ", Tag::BE},  {"BER", Tag::BE},   {"BEM", Tag::BE},
      {"BEG", Tag::BE},
      {"BEN", Tag::BEEN},
      {"VB", Tag::VB},    {"VBZ", Tag::VB},   {"VBD", Tag::VB},
      {"DO", Tag::VB},    {"DOZ", Tag::VB},   {"DOD", Tag::VB},
      {"VBN", Tag::VPA},
      {"VBG", Tag::VPR},
      {"CC", Tag::CONJ},  {"CS", Tag::CONJ},
      {".", Tag::PUNCT},  {",", Tag::PUNCT},  {":", Tag::PUNCT},
      {";", Tag::PUNCT},  {"(", Tag::PUNCT},  {")", Tag::PUNCT},
      {"--", Tag::PUNCT}, {"``", Tag::PUNCT}, {"''", Tag::PUNCT},
      {"CD", Tag::OTHER}, {"PN", Tag::OTHER}, {"EX", Tag::OTHER},
      {"UH", Tag::OTHER}, {"FW", Tag::OTHER}, {"NIL", Tag::OTHER},
      {"PP$", Tag::OTHER}, {"PP$$", Tag::OTHER}, {"WP$", Tag::OTHER},
      {"ABN", Tag::OTHER}, {"ABL", Tag::OTHER}, {"ABX", Tag::OTHER},
  };
  auto exact = table.find(raw);
  if (exact != table.end()) return exact->second;
  // Normalize: keep the principal part before '-', '+' or a trailing '$'.
  std::size_t cut = raw.size();
  for (std::size_t i = 1; i < raw.size(); ++i) {
    if (raw[i] == '-' || raw[i] == '+') {
      cut = i;
      break;
    }
  }
  std::string_view head = raw.substr(0, cut);
  while (!head.empty() && head.back() == '$') head.remove_suffix(1);
  if (head != raw) {
    auto it = table.find(head);
    if (it != table.end()) return it->second;
  }
  return std::nullopt;
}

}  // namespace modzone
