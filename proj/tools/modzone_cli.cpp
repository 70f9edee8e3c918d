// Command-line driver for the modality zoning pipeline.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modzone/modzone.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "modzone - tags parts of speech, detects persons, labels sentences as "
      "epistemic / deontic / non-modal and groups opinion holders"};

  std::vector<std::string> inputs;
  std::string lexicons;
  std::string out, records, report, gold, names_transcript, attitude_transcript;
  bool interactive = false;
  bool debug_tags = false;
  bool skip_attitude = false;

  app.add_option("--input", inputs, "input text file(s), UTF-8")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--lexicons", lexicons, "lexicon directory")->required();
  app.add_option("--out", out, "annotated text output path");
  app.add_option("--records", records, "JSON-lines sentence records output path");
  app.add_option("--report", report, "report output path (plain text; <path>.json too)");
  app.add_option("--gold", gold, "gold labels for accuracy (id<TAB>label)")
      ->check(CLI::ExistingFile);
  app.add_flag("--interactive,!--no-interactive", interactive,
               "prompt for name and attitude decisions (default: off)");
  app.add_option("--names-transcript", names_transcript,
                 "name decision transcript (replayed; written when interactive)");
  app.add_option("--attitude-transcript", attitude_transcript,
                 "attitude decision transcript (replayed; written when interactive)");
  app.add_flag("--debug-tags", debug_tags, "render (surface, TAG) pairs and dump <out>.tags");
  app.add_flag("--skip-attitude", skip_attitude, "stop after modality labelling");

  CLI11_PARSE(app, argc, argv);

  modzone::RunConfig config;
  for (const auto& p : inputs) config.inputs.emplace_back(p);
  config.lexicon_dir = lexicons;
  if (!out.empty()) config.annotated_out = out;
  if (!records.empty()) config.records_out = records;
  if (!report.empty()) config.report_out = report;
  if (!gold.empty()) config.gold_path = gold;
  if (!names_transcript.empty()) config.names_transcript = names_transcript;
  if (!attitude_transcript.empty()) config.attitude_transcript = attitude_transcript;
  if (interactive) {
    if (names_transcript.empty()) config.names_transcript = "names_transcript.jsonl";
    if (attitude_transcript.empty())
      config.attitude_transcript = "attitude_transcript.jsonl";
  }
  config.interactive = interactive;
  config.debug_tags = debug_tags;
  config.skip_attitude = skip_attitude;

  try {
    modzone::PipelineResult result = modzone::run_pipeline(config);
    if (!config.annotated_out) std::cout << result.annotated_text;
    if (!config.report_out) std::cerr << result.report_text;
    return 0;
  } catch (const modzone::StageError& e) {
    std::cerr << "error " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
