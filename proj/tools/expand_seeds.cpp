// Offline helper: expands seed lemmas through a synonym table.
// The synonym table is TSV: lemma<TAB>syn1,syn2,...

#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modzone/lexicon.hpp"

int main(int argc, char** argv) {
  CLI::App app{"modzone-expand-seeds - closure of seed lemmas under a synonym table"};

  std::vector<std::string> seeds;
  std::string synonyms_path;
  int depth = 1;
  app.add_option("--seeds", seeds, "seed lemmas")->required();
  app.add_option("--synonyms", synonyms_path, "synonym table (lemma<TAB>syn1,syn2,...)")
      ->required()
      ->check(CLI::ExistingFile);
  app.add_option("--depth", depth, "expansion depth, 0-3")->check(CLI::Range(0, 3));

  CLI11_PARSE(app, argc, argv);

  std::map<std::string, std::set<std::string>> table;
  try {
    for (const auto& [line, fields] : modzone::detail::read_tsv(synonyms_path)) {
      if (fields.size() != 2) {
        std::cerr << synonyms_path << ":" << line << ": expected lemma<TAB>synonyms\n";
        return 1;
      }
      auto& syns = table[modzone::fold_case(modzone::trim(fields[0]))];
      for (const auto& s : modzone::split_on(fields[1], ',')) {
        std::string t = modzone::trim(s);
        if (!t.empty()) syns.insert(modzone::fold_case(t));
      }
    }
    auto lookup = [&table](const std::string& lemma) {
      auto it = table.find(lemma);
      return it == table.end() ? std::set<std::string>{} : it->second;
    };
    for (const auto& lemma : modzone::expand_modality_seeds(seeds, lookup, depth))
      std::cout << lemma << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
