// Acceptance suite: runs every acceptance criterion and prints one
// PASS/FAIL line per criterion. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "modzone/modzone.hpp"

using namespace modzone;
namespace fs = std::filesystem;

namespace {

fs::path g_data_dir = MODZONE_DATA_DIR;

const LexiconSet& lexicons() {
  static const LexiconSet set = LexiconSet::load(g_data_dir / "lexicons");
  return set;
}

Document tagged_document(const std::string& text) {
  Document doc = build_document(text, lexicons().abbreviations);
  tag_document(doc, lexicons().pos, lexicons().suffix_rules);
  return doc;
}

struct Criterion {
  std::string name;
  bool passed = true;
  std::string detail;

  explicit Criterion(std::string n) : name(std::move(n)) {}

  void fail(const std::string& message) {
    passed = false;
    if (!detail.empty()) detail += "; ";
    detail += message;
  }
};

// --- 1. gold micro-suite ---------------------------------------------------

Criterion micro_suite() {
  Criterion c{"gold micro-suite classifies exactly"};
  auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  for (const auto& [line, fields] :
       detail::read_tsv(g_data_dir / "gold" / "micro_suite.tsv")) {
    (void)line;
    const std::string& id = fields.at(0);
    const std::string& expected = fields.at(1);
    Document doc = tagged_document(fields.at(2));
    if (doc.sentences.size() != 1) {
      c.fail(id + ": split into " + std::to_string(doc.sentences.size()) + " sentences");
      continue;
    }
    SentenceAnalysis analysis =
        analyze_sentence(doc.sentences[0], lexicons().modality, &lexicons().pos);
    std::string got(analysis.label.render());
    if (got != expected) c.fail(id + ": got " + got + ", want " + expected);
    if (id == "m04") {
      bool via_path = false;
      for (const ModalOccurrence& occ : analysis.occurrences)
        via_path = via_path || occ.pattern == PatternId::NEG_MV_HAVE_VPA;
      if (!via_path) c.fail("m04: negMV_HAVE_VPA path not taken");
    }
    ++checked;
  }
  if (checked < 12) c.fail("fewer than 12 fixtures");
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  if (elapsed.count() >= 1000)
    c.fail("runtime " + std::to_string(elapsed.count()) + " ms");
  return c;
}

// --- 2. tagging trace ------------------------------------------------------

Criterion tagging_trace() {
  Criterion c{"tagging reproduces the worked trace"};
  Document doc = tagged_document(
      "\"The individual grains in them could not have accumulated "
      "mechanically because the slope of the cone is too great,\" says "
      "Stanley Awramik, a stromatolite expert at the University of "
      "California, Santa Barbara, who was not involved in the research.");
  if (doc.sentences.size() != 1) {
    c.fail("expected one sentence");
    return c;
  }
  const auto& tokens = doc.sentences[0].tokens;
  std::size_t start = 0;
  while (start < tokens.size() && is_punct_token(tokens[start])) ++start;
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"The", "ART"},  {"individual", "ADJ"}, {"grains", "NNS"},
      {"in", "IN"},    {"them", "PPO"},       {"could", "MV"},
      {"not", "*"},    {"have", "HAVE"},      {"accumulated", "VPA"},
      {"mechanically", "RB"},
  };
  if (tokens.size() < start + expected.size()) {
    c.fail("sentence too short");
    return c;
  }
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const Token& t = tokens[start + i];
    if (t.surface != expected[i].first ||
        std::string(render_tag(t.tag)) != expected[i].second)
      c.fail("token " + std::to_string(i) + ": (" + t.surface + ", " +
             std::string(render_tag(t.tag)) + ") != (" + expected[i].first + ", " +
             expected[i].second + ")");
  }
  return c;
}

// --- 3. name automaton fixtures ---------------------------------------------

Criterion name_fixtures() {
  Criterion c{"name automaton fixtures"};
  ReferenceNames refs;
  auto classify = [&](const std::string& text) -> std::optional<NamePattern> {
    Document doc = tagged_document("He met " + text + " yesterday.");
    auto runs = detect_name_candidates(doc.sentences[0]);
    if (runs.size() != 1) return std::nullopt;
    return run_name_automaton(doc.sentences[0], runs[0], lexicons().names, refs);
  };
  if (classify("Peter Green") != NamePattern::FN_LN) c.fail("Peter Green != FN_LN");
  if (classify("P. Green") != NamePattern::ABB_LN) c.fail("P. Green != ABB_LN");
  if (classify("Max-Planck Institute").has_value())
    c.fail("Max-Planck Institute was accepted");

  Document doc = tagged_document(
      "\"The individual grains in them could not have accumulated "
      "mechanically because the slope of the cone is too great,\" says "
      "Stanley Awramik, a stromatolite expert at the University of "
      "California, Santa Barbara, who was not involved in the research.");
  PersonIndex persons = mark_persons(doc, lexicons().names, refs);
  const PersonEntity* awramik = nullptr;
  for (const auto& e : persons.entities)
    if (e.canonical_name == "Awramik") awramik = &e;
  if (!awramik) {
    c.fail("Stanley Awramik not detected");
    return c;
  }
  if (awramik->pattern != NamePattern::FN_LN) c.fail("Awramik pattern != FN_LN");
  for (const auto& e : persons.entities) {
    if (e.canonical_name.find("Institute") != std::string::npos ||
        e.canonical_name.find("University") != std::string::npos)
      c.fail("institution accepted as person: " + e.canonical_name);
  }
  auto links = link_pronouns(doc, persons, lexicons().names);
  bool who_linked = false;
  for (const PronounLink& link : links) {
    const Token& t = doc.sentences[link.sentence].tokens[link.token];
    if (t.lemma == "who" && link.antecedent == awramik->id) who_linked = true;
  }
  if (!who_linked) c.fail("who does not link to Awramik");
  return c;
}

// --- 4. automaton vs brute force ---------------------------------------------

// Independent reference: explicit enumeration of skip prefixes and the four
// collocation sequences, then the per-verb table.
struct OracleResult {
  bool epistemic = false;
  std::string pattern;
  bool negated = false;
};

OracleResult oracle_disambiguate(const std::string& lemma, const std::vector<Tag>& window) {
  static const std::vector<std::vector<Tag>> prefixes = {
      {},
      {Tag::NEG},
      {Tag::RB},
      {Tag::NEG, Tag::RB},
      {Tag::RB, Tag::NEG},
      {Tag::RB, Tag::RB},
      {Tag::NEG, Tag::RB, Tag::RB},
      {Tag::RB, Tag::NEG, Tag::RB},
      {Tag::RB, Tag::RB, Tag::NEG},
  };
  static const std::vector<std::pair<std::string, std::vector<Tag>>> seqs = {
      {"MV_HAVE_BEEN_VPR", {Tag::HAVE, Tag::BEEN, Tag::VPR}},
      {"MV_HAVE_BEEN", {Tag::HAVE, Tag::BEEN}},
      {"MV_HAVE_VPA", {Tag::HAVE, Tag::VPA}},
      {"MV_BE_VPR", {Tag::BE, Tag::VPR}},
  };
  OracleResult r;
  {
    bool neg_seen = false;
    int adverbs = 0;
    for (Tag t : window) {
      if (t == Tag::NEG && !neg_seen) {
        neg_seen = true;
        r.negated = true;
        continue;
      }
      if (t == Tag::RB && adverbs < 2) {
        ++adverbs;
        continue;
      }
      break;
    }
  }
  std::string matched;
  for (const auto& [name, seq] : seqs) {
    for (const auto& prefix : prefixes) {
      if (window.size() < prefix.size() + seq.size()) continue;
      bool ok = true;
      for (std::size_t i = 0; i < prefix.size() && ok; ++i)
        ok = window[i] == prefix[i];
      for (std::size_t i = 0; i < seq.size() && ok; ++i)
        ok = window[prefix.size() + i] == seq[i];
      if (ok) {
        matched = name;
        r.negated = std::find(prefix.begin(), prefix.end(), Tag::NEG) != prefix.end();
        break;
      }
    }
    if (!matched.empty()) break;
  }
  auto with_neg = [&r](const std::string& base) {
    return r.negated ? "neg" + base : base;
  };
  if (lemma == "must" || lemma == "should") {
    r.epistemic = !matched.empty();
    r.pattern = matched.empty() ? "FALLBACK_DEONTIC" : with_neg(matched);
  } else if (lemma == "can") {
    r.epistemic = r.negated;
    if (r.negated)
      r.pattern = matched.empty() ? "UNCOND_EPISTEMIC" : with_neg(matched);
    else
      r.pattern = matched.empty() ? "UNCOND_DEONTIC" : matched;
  } else if (lemma == "could" || lemma == "may" || lemma == "might" ||
             lemma == "will" || lemma == "would") {
    r.epistemic = true;
    r.pattern = matched.empty() ? "UNCOND_EPISTEMIC" : with_neg(matched);
  } else if (lemma == "shall") {
    r.epistemic = false;
    r.pattern = matched.empty() ? "UNCOND_DEONTIC" : with_neg(matched);
  } else {
    r.epistemic = false;
    r.pattern = "FALLBACK_DEONTIC";
  }
  return r;
}

Criterion automaton_equivalence() {
  Criterion c{"automaton matches brute-force enumeration"};
  const std::vector<Tag> alphabet = {Tag::MV,  Tag::NEG, Tag::HAVE, Tag::BE,
                                     Tag::BEEN, Tag::VB, Tag::VPA,  Tag::VPR,
                                     Tag::RB,  Tag::NN};
  const std::vector<std::string> lemmas = {"must", "can",   "could",  "may",
                                           "might", "will", "would",  "shall",
                                           "should"};
  std::mt19937 rng(1234567);
  std::uniform_int_distribution<std::size_t> pick_tag(0, alphabet.size() - 1);
  std::uniform_int_distribution<std::size_t> pick_lemma(0, lemmas.size() - 1);
  std::uniform_int_distribution<int> pick_len(0, 8);
  std::size_t cases = 0;
  std::size_t disagreements = 0;
  for (int trial = 0; trial < 12000; ++trial) {
    std::vector<Tag> window;
    int len = pick_len(rng);
    for (int i = 0; i < len; ++i) window.push_back(alphabet[pick_tag(rng)]);
    const std::string& lemma = lemmas[pick_lemma(rng)];

    Sentence s;
    Token trigger;
    trigger.surface = lemma;
    trigger.lemma = lemma;
    trigger.tag = Tag::MV;
    s.tokens.push_back(trigger);
    for (Tag t : window) {
      Token tok;
      tok.surface = "w";
      tok.lemma = "w";
      tok.tag = t;
      s.tokens.push_back(tok);
    }
    ModalOccurrence occ;
    occ.token = 0;
    occ.lemma = lemma;
    occ.category = LexCategory::ModalVerb;
    disambiguate_modal(s.tokens, occ);

    OracleResult expected = oracle_disambiguate(lemma, window);
    bool epistemic = occ.resolved == Modality::Epistemic;
    if (epistemic != expected.epistemic || occ.negated != expected.negated ||
        std::string(pattern_name(occ.pattern)) != expected.pattern)
      ++disagreements;
    ++cases;
  }
  if (cases < 10000) c.fail("only " + std::to_string(cases) + " cases");
  if (disagreements > 0)
    c.fail(std::to_string(disagreements) + " disagreements in " +
           std::to_string(cases) + " cases");
  else
    c.detail = std::to_string(cases) + " cases, 0 disagreements";
  return c;
}

// --- 5. attitude truth table -------------------------------------------------

Criterion attitude_truth_table() {
  Criterion c{"attitude truth table and graph invariants"};
  struct Row {
    ModalPolarity m;
    PropositionPolarity h;
    AttitudeGroup want;
  };
  const std::vector<Row> table = {
      {ModalPolarity::M, PropositionPolarity::H, AttitudeGroup::Pro},
      {ModalPolarity::NotM, PropositionPolarity::NotH, AttitudeGroup::Pro},
      {ModalPolarity::M, PropositionPolarity::NotH, AttitudeGroup::Contra},
      {ModalPolarity::NotM, PropositionPolarity::H, AttitudeGroup::Contra},
      {ModalPolarity::M, PropositionPolarity::Undecided, AttitudeGroup::Neutral},
      {ModalPolarity::NotM, PropositionPolarity::Undecided, AttitudeGroup::Neutral},
  };
  for (const Row& row : table) {
    if (assign_group(row.m, row.h) != row.want)
      c.fail(std::string("assign_group(") + std::string(modal_polarity_name(row.m)) +
             ", " + std::string(proposition_polarity_name(row.h)) + ")");
  }
  std::mt19937 rng(271828);
  std::uniform_int_distribution<int> holder(-1, 6);
  std::uniform_int_distribution<int> group(0, 2);
  std::uniform_int_distribution<int> count(0, 24);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<AttitudeRecord> records;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
      AttitudeRecord r;
      r.holder = holder(rng);
      r.group = static_cast<AttitudeGroup>(group(rng));
      records.push_back(r);
    }
    AttitudeGraph g = build_attitude_graph(records);
    std::set<int> pro(g.pro.begin(), g.pro.end());
    std::set<int> contra(g.contra.begin(), g.contra.end());
    std::set<int> neutral(g.neutral.begin(), g.neutral.end());
    for (int id : pro)
      if (contra.count(id) || neutral.count(id)) c.fail("sets overlap");
    for (int id : contra)
      if (neutral.count(id)) c.fail("sets overlap");
    if (!records.empty() && pro.empty() && contra.empty() && neutral.empty())
      c.fail("all groups empty despite records");
    for (const AttitudeRecord& r : records) {
      if (pro.count(r.holder) + contra.count(r.holder) + neutral.count(r.holder) != 1)
        c.fail("holder not in exactly one group");
    }
    if (c.passed == false) break;
  }
  return c;
}

// --- 6. determinism ----------------------------------------------------------

Criterion determinism() {
  Criterion c{"pipeline runs are byte-identical"};
  auto run_into = [](const fs::path& dir) {
    fs::remove_all(dir);
    fs::create_directories(dir);
    RunConfig config;
    config.inputs = {g_data_dir / "samples" / "stromatolites.txt"};
    config.lexicon_dir = g_data_dir / "lexicons";
    config.annotated_out = dir / "annotated.txt";
    config.records_out = dir / "records.jsonl";
    config.report_out = dir / "report.txt";
    config.names_transcript = g_data_dir / "samples" / "names_transcript.jsonl";
    config.attitude_transcript = g_data_dir / "samples" / "attitude_transcript.jsonl";
    config.debug_tags = true;
    run_pipeline(config);
  };
  fs::path a = fs::temp_directory_path() / "modzone_accept_a";
  fs::path b = fs::temp_directory_path() / "modzone_accept_b";
  try {
    run_into(a);
    run_into(b);
  } catch (const std::exception& e) {
    c.fail(e.what());
    return c;
  }
  for (const char* raw : {"annotated.txt", "records.jsonl", "report.txt",
                                  "report.txt.json", "annotated.txt.tags"}) {
    std::string name(raw);
    if (read_file(a / name) != read_file(b / name)) c.fail(name + " differs");
  }
  return c;
}

// --- 7. report arithmetic ------------------------------------------------------

Criterion report_arithmetic() {
  Criterion c{"report arithmetic"};
  std::mt19937 rng(333);
  const auto& names = sentence_label_names();
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  std::uniform_int_distribution<int> count(1, 80);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> labels;
    int n = count(rng);
    for (int i = 0; i < n; ++i) labels.push_back(names[pick(rng)]);
    DistributionReport dist = distribution(labels);
    double sum = 0;
    for (double p : dist.percentages) sum += p;
    if (std::abs(sum - 100.0) > 0.1)
      c.fail("percentages sum to " + std::to_string(sum));
  }
  std::map<std::string, Prediction> predictions;
  std::map<std::string, std::string> gold;
  for (const auto& [line, fields] :
       detail::read_tsv(g_data_dir / "gold" / "micro_suite.tsv")) {
    (void)line;
    Document doc = tagged_document(fields.at(2));
    SentenceAnalysis analysis =
        analyze_sentence(doc.sentences[0], lexicons().modality, &lexicons().pos);
    Prediction p;
    p.label = std::string(analysis.label.render());
    for (const auto& occ : analysis.occurrences) p.lemmas.push_back(occ.lemma);
    predictions[fields.at(0)] = p;
    gold[fields.at(0)] = p.label;  // self-comparison
  }
  AccuracyReport acc = evaluate(predictions, gold);
  if (acc.percentage != 100.0)
    c.fail("self-comparison accuracy " + std::to_string(acc.percentage));
  return c;
}

// --- 8. name lexicon sizes ------------------------------------------------------

Criterion name_lexicon_sizes() {
  Criterion c{"name lists hold 5001 female and 3000 male names"};
  const NameLexicon& names = lexicons().names;
  if (names.female_count() != 5001)
    c.fail("female count " + std::to_string(names.female_count()));
  if (names.male_count() != 3000)
    c.fail("male count " + std::to_string(names.male_count()));
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_data_dir = argv[1];
  std::vector<Criterion> results;
  results.push_back(micro_suite());
  results.push_back(tagging_trace());
  results.push_back(name_fixtures());
  results.push_back(automaton_equivalence());
  results.push_back(attitude_truth_table());
  results.push_back(determinism());
  results.push_back(report_arithmetic());
  results.push_back(name_lexicon_sizes());

  int failures = 0;
  for (const Criterion& c : results) {
    if (c.passed) {
      std::printf("PASS  %s%s%s\n", c.name.c_str(), c.detail.empty() ? "" : " — ",
                  c.detail.c_str());
    } else {
      ++failures;
      std::printf("FAIL  %s — %s\n", c.name.c_str(), c.detail.c_str());
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures;
}
