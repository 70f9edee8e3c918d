#pragma once

#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "modzone/annotate.hpp"
#include "modzone/attitude.hpp"
#include "modzone/decision.hpp"
#include "modzone/lexicon.hpp"
#include "modzone/modality.hpp"
#include "modzone/persons.hpp"
#include "modzone/postag.hpp"
#include "modzone/preprocess.hpp"
#include "modzone/report.hpp"

namespace modzone {

// A pipeline failure attributed to the stage it happened in.
class StageError : public std::runtime_error {
 public:
  StageError(std::string stage, const std::string& message)
      : std::runtime_error("[stage " + stage + "] " + message), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

// All lexical resources loaded from one directory. The word lexicon, the
// name lists and the modality lexicon are required; abbreviation,
// downtoner and suffix-rule files fall back to the built-in defaults.
struct LexiconSet {
  PosLexicon pos;
  NameLexicon names;
  ModalityLexicon modality;
  std::vector<std::string> abbreviations = default_abbreviations();
  std::vector<std::string> downtoners = default_downtoners();
  std::vector<SuffixRule> suffix_rules = default_suffix_rules();

  static LexiconSet load(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
      throw LoadError("lexicon directory not found: " + dir.string());
    LexiconSet set;
    set.pos = PosLexicon::load(dir / "pos_lexicon.tsv");
    set.names = NameLexicon::load(dir / "female_names.txt", dir / "male_names.txt");
    set.modality = ModalityLexicon::load(dir / "modality_lexicon.tsv");
    if (fs::exists(dir / "abbreviations.txt"))
      set.abbreviations = load_abbreviations(dir / "abbreviations.txt");
    if (fs::exists(dir / "downtoners.txt"))
      set.downtoners = load_downtoners(dir / "downtoners.txt");
    if (fs::exists(dir / "suffix_rules.tsv"))
      set.suffix_rules = load_suffix_rules(dir / "suffix_rules.tsv");
    return set;
  }
};

struct RunConfig {
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path lexicon_dir;
  std::optional<std::filesystem::path> annotated_out;
  std::optional<std::filesystem::path> records_out;
  std::optional<std::filesystem::path> report_out;
  std::optional<std::filesystem::path> gold_path;
  std::optional<std::filesystem::path> names_transcript;
  std::optional<std::filesystem::path> attitude_transcript;
  bool interactive = false;
  bool debug_tags = false;
  bool skip_attitude = false;
  std::istream* prompt_in = &std::cin;
  std::ostream* prompt_out = &std::cout;
};

struct DocumentResult {
  std::string label;  // input file stem
  AnnotatedDocument ann;
  std::vector<AttitudeRecord> records;
  AttitudeGraph graph;
};

inline std::string render_attitude_text(const DocumentResult& doc_result) {
  std::ostringstream out;
  out << "Attitude graph (" << doc_result.label << ")\n";
  auto emit = [&out, &doc_result](std::string_view group, const std::vector<int>& ids) {
    out << "  " << group << ":";
    if (ids.empty()) out << " -";
    for (int id : ids) out << " " << holder_display(id, doc_result.ann.persons);
    out << "\n";
  };
  emit("Pro", doc_result.graph.pro);
  emit("Contra", doc_result.graph.contra);
  emit("Neutral", doc_result.graph.neutral);
  return out.str();
}

struct PipelineResult {
  std::vector<DocumentResult> docs;
  DistributionReport dist;
  std::optional<AccuracyReport> accuracy;
  std::string annotated_text;
  std::string records_jsonl;
  std::string report_text;
  std::string report_json;
};

namespace detail {

inline std::string sentence_gold_id(const std::string& label, std::size_t index,
                                    bool multi_doc) {
  return multi_doc ? label + ":" + std::to_string(index) : std::to_string(index);
}

inline nlohmann::ordered_json graph_json(const AttitudeGraph& graph,
                                         const PersonIndex& persons) {
  auto names = [&persons](const std::vector<int>& ids) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int id : ids) arr.push_back(holder_display(id, persons));
    return arr;
  };
  nlohmann::ordered_json j;
  j["pro"] = names(graph.pro);
  j["contra"] = names(graph.contra);
  j["neutral"] = names(graph.neutral);
  return j;
}

}  // namespace detail

// Runs preprocess, tagging, person detection, modality classification,
// the attitude pass and reporting over every input, then writes the
// requested artifacts. Identical inputs and transcripts produce
// byte-identical outputs.
inline PipelineResult run_pipeline(const RunConfig& config) {
  namespace fs = std::filesystem;
  PipelineResult result;

  LexiconSet lexica = [&config]() {
    try {
      return LexiconSet::load(config.lexicon_dir);
    } catch (const std::exception& e) {
      throw StageError("lexica", e.what());
    }
  }();

  std::vector<NameDecisionRow> name_rows;
  std::vector<AttitudeRow> attitude_rows;
  try {
    if (config.names_transcript && fs::exists(*config.names_transcript))
      name_rows = load_name_transcript(*config.names_transcript);
    if (config.attitude_transcript && fs::exists(*config.attitude_transcript))
      attitude_rows = load_attitude_transcript(*config.attitude_transcript);
  } catch (const std::exception& e) {
    throw StageError("transcripts", e.what());
  }

  std::vector<NameDecisionRow> gathered_names;
  std::vector<AttitudeRow> gathered_attitude;
  std::map<std::string, Prediction> predictions;
  std::vector<std::string> all_labels;
  bool multi_doc = config.inputs.size() > 1;

  for (const fs::path& input : config.inputs) {
    std::string label = input.stem().string();

    Document doc = [&]() {
      try {
        return build_document(read_file(input), lexica.abbreviations);
      } catch (const std::exception& e) {
        throw StageError("preprocess", e.what());
      }
    }();

    try {
      tag_document(doc, lexica.pos, lexica.suffix_rules);
    } catch (const std::exception& e) {
      throw StageError("postag", e.what());
    }

    PersonIndex persons;
    std::vector<PronounLink> links;
    TranscriptNameChannel name_channel(label, name_rows, config.interactive,
                                       config.prompt_in, config.prompt_out);
    try {
      ReferenceNames refs = extract_reference_names(doc);
      persons = mark_persons(doc, lexica.names, refs, &name_channel);
      links = link_pronouns(doc, persons, lexica.names);
    } catch (const std::exception& e) {
      throw StageError("persons", e.what());
    }
    for (const NameDecisionRow& row : name_channel.gathered())
      gathered_names.push_back(row);

    std::vector<SentenceAnnotation> annotations;
    std::vector<std::string> diagnostics;
    try {
      for (const Sentence& sentence : doc.sentences) {
        SentenceAnalysis analysis =
            analyze_sentence(sentence, lexica.modality, &lexica.pos, &diagnostics);
        annotations.push_back(
            SentenceAnnotation{analysis.label, std::move(analysis.occurrences)});
      }
    } catch (const std::exception& e) {
      throw StageError("modality", e.what());
    }

    DocumentResult doc_result;
    doc_result.label = label;
    doc_result.ann = annotate_document(std::move(doc), std::move(persons),
                                       std::move(links), std::move(annotations),
                                       std::move(diagnostics));

    if (!config.skip_attitude) {
      try {
        const AnnotatedDocument& ann = doc_result.ann;
        for (std::size_t si = 0; si < ann.doc.sentences.size(); ++si) {
          const SentenceAnnotation& sa = ann.sentences[si];
          if (!sa.label.epistemic) continue;
          AttitudeRecord record;
          record.sentence = ann.doc.sentences[si].index;
          record.holder = resolve_holder(ann.doc.sentences[si], sa.occurrences,
                                         ann.persons, ann.links);
          record.modal = propose_modal_polarity(ann.doc.sentences[si], sa.occurrences,
                                                lexica.downtoners);
          doc_result.records.push_back(record);
        }
        AttitudeChannel channel(label, attitude_rows, config.interactive,
                                config.prompt_in, config.prompt_out);
        channel.apply(doc_result.records, doc_result.ann);
        for (AttitudeRecord& record : doc_result.records)
          record.group = assign_group(record.modal, record.proposition);
        doc_result.graph = build_attitude_graph(doc_result.records);
        for (const AttitudeRow& row : channel.gathered())
          gathered_attitude.push_back(row);
      } catch (const std::exception& e) {
        throw StageError("attitude", e.what());
      }
    }

    for (std::size_t si = 0; si < doc_result.ann.doc.sentences.size(); ++si) {
      const SentenceAnnotation& sa = doc_result.ann.sentences[si];
      std::string rendered(sa.label.render());
      all_labels.push_back(rendered);
      Prediction p;
      p.label = rendered;
      for (const ModalOccurrence& occ : sa.occurrences) p.lemmas.push_back(occ.lemma);
      predictions.emplace(
          detail::sentence_gold_id(label, doc_result.ann.doc.sentences[si].index,
                                   multi_doc),
          std::move(p));
    }

    result.docs.push_back(std::move(doc_result));
  }

  try {
    result.dist = distribution(all_labels);
    if (config.gold_path) {
      auto gold = load_gold(*config.gold_path);
      result.accuracy = evaluate(predictions, gold);
    }
  } catch (const std::exception& e) {
    throw StageError("report", e.what());
  }

  // Assemble output artifacts.
  try {
    for (const DocumentResult& doc_result : result.docs) {
      if (multi_doc) result.annotated_text += "### " + doc_result.label + "\n";
      result.annotated_text +=
          render_annotated_text(doc_result.ann, config.debug_tags);
      std::map<std::size_t, int> holders;
      if (!config.skip_attitude)
        for (const AttitudeRecord& r : doc_result.records)
          holders[r.sentence] = r.holder;
      append_records_jsonl(result.records_jsonl, doc_result.ann, doc_result.label,
                           config.skip_attitude ? nullptr : &holders);
    }
    result.report_text = render_distribution_text(result.dist);
    if (result.accuracy)
      result.report_text += render_accuracy_text(*result.accuracy);
    nlohmann::ordered_json rj;
    nlohmann::ordered_json dist_json;
    const auto& names = sentence_label_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
      dist_json[names[i]] = {{"count", result.dist.counts[i]},
                             {"percent", result.dist.percentages[i]}};
    }
    dist_json["total"] = result.dist.total;
    rj["distribution"] = dist_json;
    if (result.accuracy) {
      nlohmann::ordered_json acc;
      acc["correct"] = result.accuracy->correct;
      acc["total"] = result.accuracy->total;
      acc["percent"] = result.accuracy->percentage;
      acc["errorsByLemma"] = result.accuracy->errors_by_lemma;
      rj["accuracy"] = acc;
    }
    if (!config.skip_attitude) {
      nlohmann::ordered_json docs = nlohmann::ordered_json::array();
      for (const DocumentResult& doc_result : result.docs) {
        nlohmann::ordered_json dj;
        dj["doc"] = doc_result.label;
        dj["graph"] = detail::graph_json(doc_result.graph, doc_result.ann.persons);
        nlohmann::ordered_json records = nlohmann::ordered_json::array();
        for (const AttitudeRecord& r : doc_result.records) {
          nlohmann::ordered_json rec;
          rec["sentence"] = r.sentence;
          rec["holder"] = holder_display(r.holder, doc_result.ann.persons);
          rec["modal"] = std::string(modal_polarity_name(r.modal));
          rec["proposition"] = std::string(proposition_polarity_name(r.proposition));
          rec["group"] = std::string(attitude_group_name(r.group));
          records.push_back(std::move(rec));
        }
        dj["records"] = records;
        docs.push_back(std::move(dj));
        result.report_text += render_attitude_text(doc_result);
      }
      rj["attitude"] = docs;
    }
    result.report_json = rj.dump(2);
    result.report_json += '\n';
  } catch (const std::exception& e) {
    throw StageError("report", e.what());
  }

  try {
    if (config.annotated_out) write_file(*config.annotated_out, result.annotated_text);
    if (config.records_out) write_file(*config.records_out, result.records_jsonl);
    if (config.report_out) {
      write_file(*config.report_out, result.report_text);
      write_file(config.report_out->string() + ".json", result.report_json);
    }
    if (config.annotated_out && config.debug_tags) {
      std::string tags;
      for (const DocumentResult& doc_result : result.docs)
        tags += render_tag_debug(doc_result.ann, lexica.pos);
      write_file(config.annotated_out->string() + ".tags", tags);
    }
    if (config.interactive && config.names_transcript)
      write_file(*config.names_transcript, dump_name_transcript(gathered_names));
    if (config.interactive && config.attitude_transcript)
      write_file(*config.attitude_transcript, dump_attitude_transcript(gathered_attitude));
  } catch (const std::exception& e) {
    throw StageError("output", e.what());
  }

  return result;
}

}  // namespace modzone
