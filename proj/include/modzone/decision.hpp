#pragma once

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "modzone/annotate.hpp"
#include "modzone/attitude.hpp"
#include "modzone/persons.hpp"
#include "modzone/util.hpp"

namespace modzone {

// ---------------------------------------------------------------------------
// Name disambiguation transcript: JSON lines
//   {"candidate": "...", "sentence": N, "decision": "accept"|"reject",
//    "canonicalName": "...", "doc": "..."}
// canonicalName and doc are optional; a row without doc applies to every
// input document.
// ---------------------------------------------------------------------------

struct NameDecisionRow {
  std::string doc;
  std::size_t sentence = 0;
  std::string candidate;
  bool accept = false;
  std::string canonical_name;
};

inline std::vector<NameDecisionRow> load_name_transcript(
    const std::filesystem::path& path) {
  std::vector<NameDecisionRow> rows;
  auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("candidate") ||
        !j.contains("sentence") || !j.contains("decision"))
      throw detail::line_error(path, i + 1, "malformed name decision row");
    std::string decision = j["decision"].get<std::string>();
    if (decision != "accept" && decision != "reject")
      throw detail::line_error(path, i + 1, "decision must be accept or reject");
    NameDecisionRow row;
    row.candidate = j["candidate"].get<std::string>();
    row.sentence = j["sentence"].get<std::size_t>();
    row.accept = decision == "accept";
    if (j.contains("canonicalName")) row.canonical_name = j["canonicalName"].get<std::string>();
    if (j.contains("doc")) row.doc = j["doc"].get<std::string>();
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string dump_name_transcript(const std::vector<NameDecisionRow>& rows) {
  std::string out;
  for (const NameDecisionRow& row : rows) {
    nlohmann::ordered_json j;
    if (!row.doc.empty()) j["doc"] = row.doc;
    j["candidate"] = row.candidate;
    j["sentence"] = row.sentence;
    j["decision"] = row.accept ? "accept" : "reject";
    if (row.accept && !row.canonical_name.empty()) j["canonicalName"] = row.canonical_name;
    out += j.dump();
    out += '\n';
  }
  return out;
}

// Replays recorded decisions and falls through to an interactive prompt
// when enabled; every produced decision is gathered for persisting.
class TranscriptNameChannel : public NameChannel {
 public:
  TranscriptNameChannel(std::string doc_label, std::vector<NameDecisionRow> rows,
                        bool interactive = false, std::istream* in = nullptr,
                        std::ostream* out = nullptr)
      : doc_label_(std::move(doc_label)), interactive_(interactive), in_(in), out_(out) {
    for (NameDecisionRow& row : rows) recorded_[key(row.doc, row.sentence, row.candidate)] = row;
  }

  std::optional<NameDecision> decide(const CandidateRun& run) override {
    auto it = recorded_.find(key(doc_label_, run.sentence, run.surface));
    if (it == recorded_.end())
      it = recorded_.find(key("", run.sentence, run.surface));
    if (it != recorded_.end()) {
      gathered_.push_back(it->second);
      return NameDecision{it->second.accept, it->second.canonical_name};
    }
    if (!interactive_ || !in_ || !out_) return std::nullopt;
    *out_ << "person candidate \"" << run.surface << "\" (sentence " << run.sentence
          << "): accept? [y/N] " << std::flush;
    std::string answer;
    if (!std::getline(*in_, answer)) return std::nullopt;
    NameDecisionRow row;
    row.doc = doc_label_;
    row.sentence = run.sentence;
    row.candidate = run.surface;
    row.accept = !answer.empty() && (answer[0] == 'y' || answer[0] == 'Y');
    if (row.accept) {
      *out_ << "canonical name [" << run.surface << "]: " << std::flush;
      std::string canonical;
      if (std::getline(*in_, canonical) && !trim(canonical).empty())
        row.canonical_name = trim(canonical);
    }
    gathered_.push_back(row);
    return NameDecision{row.accept, row.canonical_name};
  }

  const std::vector<NameDecisionRow>& gathered() const { return gathered_; }

 private:
  static std::string key(const std::string& doc, std::size_t sentence,
                         const std::string& candidate) {
    return doc + "\x1f" + std::to_string(sentence) + "\x1f" + candidate;
  }

  std::string doc_label_;
  bool interactive_ = false;
  std::istream* in_ = nullptr;
  std::ostream* out_ = nullptr;
  std::map<std::string, NameDecisionRow> recorded_;
  std::vector<NameDecisionRow> gathered_;
};

// ---------------------------------------------------------------------------
// Attitude transcript: JSON lines
//   {"sentence": N, "proposition": "H"|"notH", "modal": "M"|"notM",
//    "doc": "..."}
// modal overrides the automatic proposal; doc is optional.
// ---------------------------------------------------------------------------

struct AttitudeRow {
  std::string doc;
  std::size_t sentence = 0;
  PropositionPolarity proposition = PropositionPolarity::Undecided;
  std::optional<ModalPolarity> modal;
};

inline std::vector<AttitudeRow> load_attitude_transcript(
    const std::filesystem::path& path) {
  std::vector<AttitudeRow> rows;
  auto lines = read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = trim(lines[i]);
    if (line.empty() || line[0] == '#') continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("sentence") ||
        !j.contains("proposition"))
      throw detail::line_error(path, i + 1, "malformed attitude row");
    AttitudeRow row;
    row.sentence = j["sentence"].get<std::size_t>();
    std::string prop = j["proposition"].get<std::string>();
    if (prop == "H")
      row.proposition = PropositionPolarity::H;
    else if (prop == "notH")
      row.proposition = PropositionPolarity::NotH;
    else
      throw detail::line_error(path, i + 1, "proposition must be H or notH");
    if (j.contains("modal")) {
      std::string modal = j["modal"].get<std::string>();
      if (modal == "M")
        row.modal = ModalPolarity::M;
      else if (modal == "notM")
        row.modal = ModalPolarity::NotM;
      else
        throw detail::line_error(path, i + 1, "modal must be M or notM");
    }
    if (j.contains("doc")) row.doc = j["doc"].get<std::string>();
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string dump_attitude_transcript(const std::vector<AttitudeRow>& rows) {
  std::string out;
  for (const AttitudeRow& row : rows) {
    if (row.proposition == PropositionPolarity::Undecided) continue;
    nlohmann::ordered_json j;
    if (!row.doc.empty()) j["doc"] = row.doc;
    j["sentence"] = row.sentence;
    j["proposition"] = std::string(proposition_polarity_name(row.proposition));
    if (row.modal) j["modal"] = std::string(modal_polarity_name(*row.modal));
    out += j.dump();
    out += '\n';
  }
  return out;
}

// Fills each record's proposition polarity from the recorded transcript
// and, in interactive mode, from prompts; records without a decision stay
// undecided. Rows addressing a sentence with no record are rejected.
class AttitudeChannel {
 public:
  AttitudeChannel(std::string doc_label, std::vector<AttitudeRow> rows,
                  bool interactive = false, std::istream* in = nullptr,
                  std::ostream* out = nullptr)
      : doc_label_(std::move(doc_label)), rows_(std::move(rows)),
        interactive_(interactive), in_(in), out_(out) {}

  void apply(std::vector<AttitudeRecord>& records, const AnnotatedDocument& ann) {
    for (const AttitudeRow& row : rows_) {
      if (!row.doc.empty() && row.doc != doc_label_) continue;
      bool found = false;
      for (AttitudeRecord& r : records) {
        if (r.sentence != row.sentence) continue;
        r.proposition = row.proposition;
        if (row.modal) r.modal = *row.modal;
        found = true;
      }
      if (!found)
        throw LoadError("attitude decision for sentence " +
                        std::to_string(row.sentence) + " matches no epistemic sentence");
      AttitudeRow gathered = row;
      gathered.doc = doc_label_;
      gathered_.push_back(std::move(gathered));
    }
    if (!interactive_ || !in_ || !out_) return;
    for (AttitudeRecord& r : records) {
      if (r.proposition != PropositionPolarity::Undecided) continue;
      *out_ << "sentence " << r.sentence << " [holder "
            << holder_display(r.holder, ann.persons) << ", modal "
            << modal_polarity_name(r.modal) << "]:\n  "
            << sentence_text(ann, r.sentence) << "\n"
            << "  proposition supports the hypothesis? [h=H, n=notH, enter=skip] "
            << std::flush;
      std::string answer;
      if (!std::getline(*in_, answer)) return;
      if (answer.empty()) continue;
      if (answer[0] == 'h' || answer[0] == 'H')
        r.proposition = PropositionPolarity::H;
      else if (answer[0] == 'n' || answer[0] == 'N')
        r.proposition = PropositionPolarity::NotH;
      else
        continue;
      *out_ << "  modal polarity [enter=keep " << modal_polarity_name(r.modal)
            << ", m=M, n=notM] " << std::flush;
      AttitudeRow row;
      row.doc = doc_label_;
      row.sentence = r.sentence;
      row.proposition = r.proposition;
      std::string modal_answer;
      if (std::getline(*in_, modal_answer) && !modal_answer.empty()) {
        if (modal_answer[0] == 'm' || modal_answer[0] == 'M')
          r.modal = ModalPolarity::M;
        else if (modal_answer[0] == 'n' || modal_answer[0] == 'N')
          r.modal = ModalPolarity::NotM;
        row.modal = r.modal;
      }
      gathered_.push_back(std::move(row));
    }
  }

  const std::vector<AttitudeRow>& gathered() const { return gathered_; }

 private:
  static std::string sentence_text(const AnnotatedDocument& ann, std::size_t index) {
    for (const Sentence& s : ann.doc.sentences) {
      if (s.index != index) continue;
      std::string text;
      for (const Token& t : s.tokens) {
        if (!text.empty()) text += ' ';
        text += t.surface;
      }
      return text;
    }
    return "";
  }

  std::string doc_label_;
  std::vector<AttitudeRow> rows_;
  bool interactive_ = false;
  std::istream* in_ = nullptr;
  std::ostream* out_ = nullptr;
  std::vector<AttitudeRow> gathered_;
};

}  // namespace modzone
