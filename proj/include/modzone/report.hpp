#pragma once

#include <algorithm>
#include <array>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "modzone/modality.hpp"
#include "modzone/util.hpp"

namespace modzone {

// Sentence counts and percentages per rendered label, fixed order
// EPISTEMIC, DEONTIC, NON-MODAL, EPISTEMIC-DEONTIC.
struct DistributionReport {
  std::array<std::size_t, 4> counts = {0, 0, 0, 0};
  std::array<double, 4> percentages = {0, 0, 0, 0};
  std::size_t total = 0;
};

inline DistributionReport distribution(const std::vector<std::string>& labels) {
  DistributionReport report;
  const auto& names = sentence_label_names();
  for (const std::string& label : labels) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (label == names[i]) {
        report.counts[i] += 1;
        report.total += 1;
        break;
      }
    }
  }
  if (report.total > 0) {
    for (std::size_t i = 0; i < report.counts.size(); ++i)
      report.percentages[i] =
          100.0 * static_cast<double>(report.counts[i]) / static_cast<double>(report.total);
  }
  return report;
}

struct AccuracyReport {
  std::size_t correct = 0;
  std::size_t total = 0;
  double percentage = 0;
  // Trigger lemmas tallied over misclassified sentences.
  std::map<std::string, std::size_t> errors_by_lemma;
};

struct Prediction {
  std::string label;
  std::vector<std::string> lemmas;  // trigger lemmas of the sentence
};

// Gold rows `sentence-id<TAB>label`.
inline std::map<std::string, std::string> load_gold(const std::filesystem::path& path) {
  std::map<std::string, std::string> gold;
  for (const auto& [line, fields] : detail::read_tsv(path)) {
    if (fields.size() != 2)
      throw detail::line_error(path, line, "expected id<TAB>label");
    const auto& names = sentence_label_names();
    if (std::find(names.begin(), names.end(), fields[1]) == names.end())
      throw detail::line_error(path, line, "unknown label '" + fields[1] + "'");
    if (!gold.emplace(fields[0], fields[1]).second)
      throw detail::line_error(path, line, "duplicate id '" + fields[0] + "'");
  }
  return gold;
}

// Exact-match accuracy of rendered labels against a gold standard. All
// gold ids must be present among the predictions.
inline AccuracyReport evaluate(const std::map<std::string, Prediction>& predictions,
                               const std::map<std::string, std::string>& gold) {
  std::vector<std::string> missing;
  for (const auto& [id, label] : gold) {
    if (predictions.find(id) == predictions.end()) missing.push_back(id);
  }
  if (!missing.empty()) {
    std::string msg = "gold ids missing from predictions:";
    for (const auto& id : missing) msg += " " + id;
    throw LoadError(msg);
  }
  AccuracyReport report;
  report.total = gold.size();
  for (const auto& [id, label] : gold) {
    const Prediction& p = predictions.at(id);
    if (p.label == label) {
      report.correct += 1;
    } else {
      for (const std::string& lemma : p.lemmas) report.errors_by_lemma[lemma] += 1;
    }
  }
  report.percentage = report.total == 0
                          ? 0
                          : 100.0 * static_cast<double>(report.correct) /
                                static_cast<double>(report.total);
  return report;
}

inline std::string render_distribution_text(const DistributionReport& report) {
  std::ostringstream out;
  out << "Label distribution\n";
  const auto& names = sentence_label_names();
  for (std::size_t i = 0; i < names.size(); ++i) {
    out << "  " << std::left << std::setw(18) << names[i] << std::right << std::setw(6)
        << report.counts[i] << "  " << std::fixed << std::setprecision(2)
        << std::setw(6) << report.percentages[i] << "%\n";
  }
  out << "  " << std::left << std::setw(18) << "total" << std::right << std::setw(6)
      << report.total << "\n";
  return out.str();
}

inline std::string render_accuracy_text(const AccuracyReport& report) {
  std::ostringstream out;
  out << "Classification accuracy\n";
  out << "  correct " << report.correct << " / " << report.total << " = " << std::fixed
      << std::setprecision(2) << report.percentage << "%\n";
  if (report.errors_by_lemma.empty()) {
    out << "  errors by trigger: (none)\n";
  } else {
    out << "  errors by trigger:";
    for (const auto& [lemma, count] : report.errors_by_lemma)
      out << " " << lemma << "=" << count;
    out << "\n";
  }
  return out.str();
}

}  // namespace modzone
