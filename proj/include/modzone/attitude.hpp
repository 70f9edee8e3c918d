#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "modzone/modality.hpp"
#include "modzone/persons.hpp"
#include "modzone/preprocess.hpp"

namespace modzone {

enum class ModalPolarity { M, NotM };
enum class PropositionPolarity { H, NotH, Undecided };
enum class AttitudeGroup { Pro, Contra, Neutral };

inline std::string_view modal_polarity_name(ModalPolarity p) {
  return p == ModalPolarity::M ? "M" : "notM";
}

inline std::string_view proposition_polarity_name(PropositionPolarity p) {
  switch (p) {
    case PropositionPolarity::H: return "H";
    case PropositionPolarity::NotH: return "notH";
    case PropositionPolarity::Undecided: return "UNDECIDED";
  }
  return "";
}

inline std::string_view attitude_group_name(AttitudeGroup g) {
  switch (g) {
    case AttitudeGroup::Pro: return "Pro";
    case AttitudeGroup::Contra: return "Contra";
    case AttitudeGroup::Neutral: return "Neutral";
  }
  return "";
}

// Holder id of the document author (any person entity id is >= 0).
inline constexpr int kAuthorHolder = -1;

struct AttitudeRecord {
  std::size_t sentence = 0;
  int holder = kAuthorHolder;
  ModalPolarity modal = ModalPolarity::M;
  PropositionPolarity proposition = PropositionPolarity::Undecided;
  AttitudeGroup group = AttitudeGroup::Neutral;
};

struct AttitudeGraph {
  std::vector<int> pro;
  std::vector<int> contra;
  std::vector<int> neutral;
};

inline const std::vector<std::string>& default_downtoners() {
  static const std::vector<std::string> words = {
      "less", "hardly", "scarcely", "rarely", "never", "none", "not",
  };
  return words;
}

inline std::vector<std::string> load_downtoners(const std::filesystem::path& path) {
  std::vector<std::string> words;
  for (const auto& line : read_lines(path)) {
    std::string w = trim(line);
    if (w.empty() || w[0] == '#') continue;
    words.push_back(fold_case(w));
  }
  return words;
}

// The modal part reads as negated when an epistemic trigger is negated or
// has a downtoner within two word tokens on either side. This is a
// proposal; the decision channel may override it.
inline ModalPolarity propose_modal_polarity(
    const Sentence& sentence, const std::vector<ModalOccurrence>& occurrences,
    const std::vector<std::string>& downtoners = default_downtoners()) {
  auto is_downtoner = [&downtoners](const std::string& lemma) {
    return std::find(downtoners.begin(), downtoners.end(), lemma) != downtoners.end();
  };
  for (const ModalOccurrence& occ : occurrences) {
    if (occ.resolved != Modality::Epistemic) continue;
    if (occ.negated) return ModalPolarity::NotM;
    // Two word tokens in each direction, punctuation skipped.
    for (int dir : {-1, 1}) {
      int seen = 0;
      std::size_t i = occ.token;
      while (seen < 2) {
        if (dir < 0 && i == 0) break;
        i = static_cast<std::size_t>(static_cast<long long>(i) + dir);
        if (i >= sentence.tokens.size()) break;
        if (is_punct_token(sentence.tokens[i])) continue;
        ++seen;
        if (is_downtoner(sentence.tokens[i].lemma)) return ModalPolarity::NotM;
      }
    }
  }
  return ModalPolarity::M;
}

// The opinion holder of a sentence: the person mention or linked pronoun
// nearest to the first epistemic trigger, the author otherwise.
inline int resolve_holder(const Sentence& sentence,
                          const std::vector<ModalOccurrence>& occurrences,
                          const PersonIndex& persons,
                          const std::vector<PronounLink>& links) {
  std::size_t trigger = 0;
  bool found = false;
  for (const ModalOccurrence& occ : occurrences) {
    if (occ.resolved == Modality::Epistemic) {
      trigger = occ.token;
      found = true;
      break;
    }
  }
  if (!found && !occurrences.empty()) trigger = occurrences.front().token;
  struct Anchor {
    std::size_t position;
    int entity;
  };
  std::vector<Anchor> anchors;
  for (const PersonEntity& e : persons.entities) {
    for (const Mention& m : e.mentions) {
      if (m.sentence != sentence.index) continue;
      std::size_t pos = trigger < m.first_token
                            ? m.first_token
                            : (trigger > m.last_token ? m.last_token : trigger);
      anchors.push_back(Anchor{pos, e.id});
    }
  }
  for (const PronounLink& link : links) {
    if (link.sentence == sentence.index)
      anchors.push_back(Anchor{link.token, link.antecedent});
  }
  if (anchors.empty()) return kAuthorHolder;
  auto distance = [trigger](const Anchor& a) {
    return a.position > trigger ? a.position - trigger : trigger - a.position;
  };
  const Anchor* best = &anchors.front();
  for (const Anchor& a : anchors) {
    if (distance(a) < distance(*best) ||
        (distance(a) == distance(*best) && a.position < best->position)) {
      best = &a;
    }
  }
  return best->entity;
}

// Truth table over the two polarities; any undecided proposition lands in
// Neutral.
inline AttitudeGroup assign_group(ModalPolarity modal, PropositionPolarity proposition) {
  if (proposition == PropositionPolarity::Undecided) return AttitudeGroup::Neutral;
  bool m = modal == ModalPolarity::M;
  bool h = proposition == PropositionPolarity::H;
  return m == h ? AttitudeGroup::Pro : AttitudeGroup::Contra;
}

// Places every holder into the group holding the strict majority of its
// records; ties go to Neutral. The author is always present in exactly one
// group, Neutral when it has no records.
inline AttitudeGraph build_attitude_graph(const std::vector<AttitudeRecord>& records) {
  AttitudeGraph graph;
  std::map<int, std::array<std::size_t, 3>> tallies;
  for (const AttitudeRecord& r : records) {
    tallies[r.holder][static_cast<std::size_t>(r.group)] += 1;
  }
  if (tallies.find(kAuthorHolder) == tallies.end())
    tallies[kAuthorHolder] = {0, 0, 1};
  for (const auto& [holder, tally] : tallies) {
    std::size_t best = std::max({tally[0], tally[1], tally[2]});
    int winners = 0;
    std::size_t winner_index = 0;
    for (std::size_t g = 0; g < 3; ++g) {
      if (tally[g] == best) {
        ++winners;
        winner_index = g;
      }
    }
    AttitudeGroup group = winners == 1 ? static_cast<AttitudeGroup>(winner_index)
                                       : AttitudeGroup::Neutral;
    switch (group) {
      case AttitudeGroup::Pro: graph.pro.push_back(holder); break;
      case AttitudeGroup::Contra: graph.contra.push_back(holder); break;
      case AttitudeGroup::Neutral: graph.neutral.push_back(holder); break;
    }
  }
  return graph;
}

}  // namespace modzone
