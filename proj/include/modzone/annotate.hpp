#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "modzone/attitude.hpp"
#include "modzone/modality.hpp"
#include "modzone/persons.hpp"
#include "modzone/preprocess.hpp"

namespace modzone {

struct SentenceAnnotation {
  SentenceLabel label;
  std::vector<ModalOccurrence> occurrences;
};

struct AnnotatedDocument {
  Document doc;
  PersonIndex persons;
  std::vector<PronounLink> links;
  std::vector<SentenceAnnotation> sentences;  // parallel to doc.sentences
  std::vector<std::string> diagnostics;
};

inline AnnotatedDocument annotate_document(Document doc, PersonIndex persons,
                                           std::vector<PronounLink> links,
                                           std::vector<SentenceAnnotation> sentences,
                                           std::vector<std::string> diagnostics = {}) {
  AnnotatedDocument out;
  out.doc = std::move(doc);
  out.persons = std::move(persons);
  out.links = std::move(links);
  out.sentences = std::move(sentences);
  out.diagnostics = std::move(diagnostics);
  return out;
}

inline std::string holder_display(int holder, const PersonIndex& persons) {
  if (holder == kAuthorHolder) return "AUTHOR";
  const PersonEntity* e = persons.by_id(holder);
  return e ? e->canonical_name : "AUTHOR";
}

// Inline-tagged rendering: each sentence on its own line, wrapped in its
// label tag unless non-modal; person mentions and linked pronouns wrapped
// in Person tags. Debug mode renders tokens as "(surface, TAG)" pairs.
inline std::string render_annotated_text(const AnnotatedDocument& ann,
                                         bool debug_tags = false) {
  std::string out;
  for (std::size_t si = 0; si < ann.doc.sentences.size(); ++si) {
    const Sentence& sentence = ann.doc.sentences[si];
    const SentenceAnnotation& sa = ann.sentences[si];
    std::string_view label = sa.label.render();
    bool tagged = label != "NON-MODAL";
    // Person tag openings/closings by token index.
    std::map<std::size_t, std::string> open;
    std::map<std::size_t, int> close;
    for (const PersonEntity& e : ann.persons.entities) {
      for (const Mention& m : e.mentions) {
        if (m.sentence != sentence.index) continue;
        open[m.first_token] = e.canonical_name;
        close[m.last_token] += 1;
      }
    }
    for (const PronounLink& link : ann.links) {
      if (link.sentence != sentence.index) continue;
      open[link.token] = holder_display(link.antecedent, ann.persons);
      close[link.token] += 1;
    }
    std::vector<std::string> parts;
    if (tagged) parts.push_back("<" + std::string(label) + ">");
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      const Token& t = sentence.tokens[i];
      auto o = open.find(i);
      if (o != open.end()) parts.push_back("<Person Name=" + o->second + ">");
      if (debug_tags) {
        std::string pair = "(" + t.surface + ", " + std::string(render_tag(t.tag)) + ")";
        if (!parts.empty() && parts.back().size() > 1 && parts.back().back() == ')')
          parts.back() += ",";  // comma-join consecutive token pairs
        parts.push_back(std::move(pair));
      } else {
        parts.push_back(t.surface);
      }
      auto c = close.find(i);
      if (c != close.end())
        for (int k = 0; k < c->second; ++k) parts.push_back("</Person>");
    }
    if (tagged) parts.push_back("</" + std::string(label) + ">");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i > 0) out += ' ';
      out += parts[i];
    }
    out += '\n';
  }
  return out;
}

// One JSON object per sentence: labels, occurrences, and the resolved
// holder when the attitude pass ran.
inline void append_records_jsonl(std::string& out, const AnnotatedDocument& ann,
                                 std::string_view doc_label,
                                 const std::map<std::size_t, int>* holders = nullptr) {
  for (std::size_t si = 0; si < ann.doc.sentences.size(); ++si) {
    const SentenceAnnotation& sa = ann.sentences[si];
    nlohmann::ordered_json record;
    record["doc"] = std::string(doc_label);
    record["sentence"] = ann.doc.sentences[si].index;
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    if (sa.label.epistemic) labels.push_back("EPISTEMIC");
    if (sa.label.deontic) labels.push_back("DEONTIC");
    record["labels"] = labels;
    nlohmann::ordered_json occurrences = nlohmann::ordered_json::array();
    for (const ModalOccurrence& occ : sa.occurrences) {
      nlohmann::ordered_json o;
      o["lemma"] = occ.lemma;
      o["pattern"] = std::string(pattern_name(occ.pattern));
      o["negated"] = occ.negated;
      o["class"] = occ.resolved ? std::string(modality_name(*occ.resolved)) : "";
      occurrences.push_back(std::move(o));
    }
    record["occurrences"] = occurrences;
    if (holders) {
      auto it = holders->find(ann.doc.sentences[si].index);
      if (it != holders->end())
        record["holder"] = holder_display(it->second, ann.persons);
    }
    out += record.dump();
    out += '\n';
  }
}

// Pass-through inspection format: surface<TAB>TAG per token, runner-up
// lexicon categories in a third column, blank line between sentences.
inline std::string render_tag_debug(const AnnotatedDocument& ann,
                                    const PosLexicon& lexicon) {
  std::string out;
  for (const Sentence& sentence : ann.doc.sentences) {
    for (const Token& t : sentence.tokens) {
      out += t.surface;
      out += '\t';
      out += render_tag(t.tag);
      const auto* entries = lexicon.lookup(t.lemma);
      if (entries && entries->size() > 1) {
        out += '\t';
        for (std::size_t i = 1; i < entries->size(); ++i) {
          if (i > 1) out += ',';
          out += tag_name((*entries)[i].tag);
        }
      }
      out += '\n';
    }
    out += '\n';
  }
  return out;
}

}  // namespace modzone
