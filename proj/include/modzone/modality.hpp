#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modzone/lexicon.hpp"
#include "modzone/postag.hpp"
#include "modzone/preprocess.hpp"

namespace modzone {

// Outcome labels of the disambiguation automaton. The four collocation
// paths exist plain and negated; unconditional and fallback ids cover the
// verbs whose class does not depend on context, and LEX_MARKER marks
// non-verb triggers resolved directly from the lexicon.
enum class PatternId {
  MV_HAVE_BEEN,
  MV_BE_VPR,
  MV_HAVE_VPA,
  MV_HAVE_BEEN_VPR,
  NEG_MV_HAVE_BEEN,
  NEG_MV_BE_VPR,
  NEG_MV_HAVE_VPA,
  NEG_MV_HAVE_BEEN_VPR,
  UNCOND_EPISTEMIC,
  UNCOND_DEONTIC,
  FALLBACK_DEONTIC,
  LEX_MARKER,
};

inline std::string_view pattern_name(PatternId p) {
  switch (p) {
    case PatternId::MV_HAVE_BEEN: return "MV_HAVE_BEEN";
    case PatternId::MV_BE_VPR: return "MV_BE_VPR";
    case PatternId::MV_HAVE_VPA: return "MV_HAVE_VPA";
    case PatternId::MV_HAVE_BEEN_VPR: return "MV_HAVE_BEEN_VPR";
    case PatternId::NEG_MV_HAVE_BEEN: return "negMV_HAVE_BEEN";
    case PatternId::NEG_MV_BE_VPR: return "negMV_BE_VPR";
    case PatternId::NEG_MV_HAVE_VPA: return "negMV_HAVE_VPA";
    case PatternId::NEG_MV_HAVE_BEEN_VPR: return "negMV_HAVE_BEEN_VPR";
    case PatternId::UNCOND_EPISTEMIC: return "UNCOND_EPISTEMIC";
    case PatternId::UNCOND_DEONTIC: return "UNCOND_DEONTIC";
    case PatternId::FALLBACK_DEONTIC: return "FALLBACK_DEONTIC";
    case PatternId::LEX_MARKER: return "LEX_MARKER";
  }
  return "";
}

enum class Modality { Epistemic, Deontic };

inline std::string_view modality_name(Modality m) {
  return m == Modality::Epistemic ? "epistemic" : "deontic";
}

struct ModalOccurrence {
  std::size_t sentence = 0;
  std::size_t token = 0;
  std::string lemma;
  LexCategory category = LexCategory::ModalVerb;
  bool negated = false;
  PatternId pattern = PatternId::LEX_MARKER;
  std::optional<Modality> resolved;
};

struct SentenceLabel {
  bool epistemic = false;
  bool deontic = false;

  std::string_view render() const {
    if (epistemic && deontic) return "EPISTEMIC-DEONTIC";
    if (epistemic) return "EPISTEMIC";
    if (deontic) return "DEONTIC";
    return "NON-MODAL";
  }
};

inline const std::vector<std::string>& sentence_label_names() {
  static const std::vector<std::string> names = {"EPISTEMIC", "DEONTIC", "NON-MODAL",
                                                 "EPISTEMIC-DEONTIC"};
  return names;
}

namespace detail {

// The four collocation sequences accepted after a modal verb, longest
// match preferred (HAVE BEEN VPR subsumes HAVE BEEN).
enum class CollocationSeq { HaveBeenVpr, HaveBeen, HaveVpa, BeVpr };

inline const std::vector<std::pair<CollocationSeq, std::vector<Tag>>>&
collocation_sequences() {
  static const std::vector<std::pair<CollocationSeq, std::vector<Tag>>> seqs = {
      {CollocationSeq::HaveBeenVpr, {Tag::HAVE, Tag::BEEN, Tag::VPR}},
      {CollocationSeq::HaveBeen, {Tag::HAVE, Tag::BEEN}},
      {CollocationSeq::HaveVpa, {Tag::HAVE, Tag::VPA}},
      {CollocationSeq::BeVpr, {Tag::BE, Tag::VPR}},
  };
  return seqs;
}

struct WindowMatch {
  std::optional<CollocationSeq> seq;
  bool negated = false;
};

// Scans the tokens following the trigger. One negation token and up to two
// adverbs may intervene before the auxiliary sequence; the sequence itself
// must then match contiguously.
inline WindowMatch match_collocation(const std::vector<Token>& tokens,
                                     std::size_t trigger) {
  WindowMatch m;
  std::size_t i = trigger + 1;
  int adverbs = 0;
  while (i < tokens.size()) {
    Tag t = tokens[i].tag;
    if (t == Tag::NEG && !m.negated) {
      m.negated = true;
      ++i;
      continue;
    }
    if (t == Tag::RB && adverbs < 2) {
      ++adverbs;
      ++i;
      continue;
    }
    break;
  }
  for (const auto& [seq, tags] : collocation_sequences()) {
    if (i + tags.size() > tokens.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < tags.size(); ++k) {
      if (tokens[i + k].tag != tags[k]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      m.seq = seq;
      return m;
    }
  }
  return m;
}

inline PatternId collocation_pattern(CollocationSeq seq, bool negated) {
  switch (seq) {
    case CollocationSeq::HaveBeen:
      return negated ? PatternId::NEG_MV_HAVE_BEEN : PatternId::MV_HAVE_BEEN;
    case CollocationSeq::BeVpr:
      return negated ? PatternId::NEG_MV_BE_VPR : PatternId::MV_BE_VPR;
    case CollocationSeq::HaveVpa:
      return negated ? PatternId::NEG_MV_HAVE_VPA : PatternId::MV_HAVE_VPA;
    case CollocationSeq::HaveBeenVpr:
      return negated ? PatternId::NEG_MV_HAVE_BEEN_VPR : PatternId::MV_HAVE_BEEN_VPR;
  }
  return PatternId::FALLBACK_DEONTIC;
}

}  // namespace detail

// Resolves a modal-verb trigger. must/should are epistemic exactly when a
// collocation sequence follows, deontic otherwise. can is deontic unless
// negated; negated can reads as an epistemic impossibility. could, may,
// might, will and would are epistemic, shall deontic, in any context. A
// matched collocation is always recorded as the occurrence's pattern, also
// for the unconditional verbs; lemmas outside the table fall back to
// deontic and are flagged.
inline void disambiguate_modal(const std::vector<Token>& tokens, ModalOccurrence& occ,
                               std::vector<std::string>* diagnostics = nullptr) {
  detail::WindowMatch m = detail::match_collocation(tokens, occ.token);
  occ.negated = m.negated;
  const std::string& lemma = occ.lemma;
  bool conditional = lemma == "must" || lemma == "should";
  if (conditional) {
    if (m.seq) {
      occ.resolved = Modality::Epistemic;
      occ.pattern = detail::collocation_pattern(*m.seq, m.negated);
    } else {
      occ.resolved = Modality::Deontic;
      occ.pattern = PatternId::FALLBACK_DEONTIC;
    }
    return;
  }
  if (lemma == "can" && m.negated) {
    occ.resolved = Modality::Epistemic;
    occ.pattern = m.seq ? detail::collocation_pattern(*m.seq, true)
                        : PatternId::UNCOND_EPISTEMIC;
    return;
  }
  if (auto cls = unconditional_modal_class(lemma)) {
    occ.resolved =
        *cls == ModalityClass::Epistemic ? Modality::Epistemic : Modality::Deontic;
    if (m.seq) {
      occ.pattern = detail::collocation_pattern(*m.seq, m.negated);
    } else {
      occ.pattern = occ.resolved == Modality::Epistemic ? PatternId::UNCOND_EPISTEMIC
                                                        : PatternId::UNCOND_DEONTIC;
    }
    return;
  }
  occ.resolved = Modality::Deontic;
  occ.pattern = PatternId::FALLBACK_DEONTIC;
  if (diagnostics)
    diagnostics->push_back("modal verb '" + lemma + "' has no rule; classified deontic");
}

// One occurrence per token whose lemma matches a lexicon entry of a
// compatible category: modal verbs need tag MV, adverbs RB, adjectives
// ADJ, nouns NN/NNS; cognitive verbs need a verbal tag or a verbal reading
// listed in the word lexicon. Non-verb triggers carry their lexicon class
// immediately; modal verbs stay unresolved here.
inline std::vector<ModalOccurrence> find_modal_occurrences(
    const Sentence& sentence, const ModalityLexicon& lexicon,
    const PosLexicon* words = nullptr) {
  std::vector<ModalOccurrence> occurrences;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token& t = sentence.tokens[i];
    if (t.tag == Tag::PUNCT) continue;
    auto entries = lexicon.match(t.lemma);
    if (entries.empty()) continue;
    const ModalityEntry* hit = nullptr;
    for (const ModalityEntry* e : entries) {
      bool compatible = false;
      switch (e->category) {
        case LexCategory::ModalVerb: compatible = t.tag == Tag::MV; break;
        case LexCategory::Adverb: compatible = t.tag == Tag::RB; break;
        case LexCategory::Adjective: compatible = t.tag == Tag::ADJ; break;
        case LexCategory::Noun:
          compatible = t.tag == Tag::NN || t.tag == Tag::NNS;
          break;
        case LexCategory::CognitiveVerb:
          compatible = is_verbal(t.tag) || (words && words->has_verbal(t.lemma));
          break;
      }
      if (!compatible) continue;
      // Modal-verb readings take precedence, then the tag-exact category.
      if (!hit || e->category == LexCategory::ModalVerb ||
          (hit->category == LexCategory::CognitiveVerb && !is_verbal(t.tag))) {
        hit = e;
        if (e->category == LexCategory::ModalVerb) break;
      }
    }
    if (!hit) continue;
    ModalOccurrence occ;
    occ.sentence = sentence.index;
    occ.token = i;
    occ.lemma = t.lemma;
    occ.category = hit->category;
    if (hit->category == LexCategory::ModalVerb) {
      occ.pattern = PatternId::FALLBACK_DEONTIC;  // resolved by disambiguation
    } else {
      occ.pattern = PatternId::LEX_MARKER;
      occ.resolved = hit->cls == ModalityClass::Epistemic ? Modality::Epistemic
                                                          : Modality::Deontic;
    }
    occurrences.push_back(std::move(occ));
  }
  return occurrences;
}

// Label union over the sentence's resolved occurrences.
inline SentenceLabel classify_sentence(const std::vector<ModalOccurrence>& occurrences) {
  SentenceLabel label;
  for (const ModalOccurrence& occ : occurrences) {
    if (!occ.resolved) continue;
    if (*occ.resolved == Modality::Epistemic) label.epistemic = true;
    if (*occ.resolved == Modality::Deontic) label.deontic = true;
  }
  return label;
}

struct SentenceAnalysis {
  std::vector<ModalOccurrence> occurrences;
  SentenceLabel label;
};

// Convenience wrapper: trigger search, disambiguation and labelling.
inline SentenceAnalysis analyze_sentence(const Sentence& sentence,
                                         const ModalityLexicon& lexicon,
                                         const PosLexicon* words = nullptr,
                                         std::vector<std::string>* diagnostics = nullptr) {
  SentenceAnalysis out;
  out.occurrences = find_modal_occurrences(sentence, lexicon, words);
  for (ModalOccurrence& occ : out.occurrences) {
    if (occ.category == LexCategory::ModalVerb)
      disambiguate_modal(sentence.tokens, occ, diagnostics);
  }
  out.label = classify_sentence(out.occurrences);
  return out;
}

}  // namespace modzone
