#include <catch2/catch_amalgamated.hpp>

#include <fstream>

#include "test_util.hpp"

using namespace modzone;

TEST_CASE("morph guess: suffix table") {
  CHECK(morph_guess("flobbulation") == Tag::NN);
  CHECK(morph_guess("flobbulations") == Tag::NNS);
  CHECK(morph_guess("glorping") == Tag::VPR);
  CHECK(morph_guess("glorped") == Tag::VPA);
  CHECK(morph_guess("glorply") == Tag::RB);
  CHECK(morph_guess("glorpous") == Tag::ADJ);
  CHECK(morph_guess("glorpive") == Tag::ADJ);
  CHECK(morph_guess("glorpal") == Tag::ADJ);
  CHECK(morph_guess("glorpic") == Tag::ADJ);
}

TEST_CASE("morph guess: capitalized unknowns are proper nouns") {
  CHECK(morph_guess("Awramik") == Tag::NP);
  CHECK(morph_guess("Buddenbrockia") == Tag::NP);
  CHECK(morph_guess("stromatolite") == Tag::NN);
}

TEST_CASE("morph guess: a bare suffix is not a match") {
  CHECK(morph_guess("ing") == Tag::NN);
  CHECK(morph_guess("ed") == Tag::NN);
}

TEST_CASE("suffix rules: bundled file pins the built-in table") {
  auto loaded = load_suffix_rules(testutil::lexicon_dir() / "suffix_rules.tsv");
  const auto& defaults = default_suffix_rules();
  REQUIRE(loaded.size() == defaults.size());
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    CHECK(loaded[i].suffix == defaults[i].suffix);
    CHECK(loaded[i].tag == defaults[i].tag);
  }
}

TEST_CASE("tagging: the worked sentence prefix") {
  Document doc = testutil::tagged_document(
      "\"The individual grains in them could not have accumulated "
      "mechanically because the slope of the cone is too great,\" says "
      "Stanley Awramik, a stromatolite expert at the University of "
      "California, Santa Barbara, who was not involved in the research.");
  REQUIRE(doc.sentences.size() == 1);
  const auto& tokens = doc.sentences[0].tokens;
  // Skip the opening quote.
  std::size_t start = 0;
  while (start < tokens.size() && is_punct_token(tokens[start])) ++start;
  std::vector<std::pair<std::string, std::string>> expected = {
      {"The", "ART"},  {"individual", "ADJ"}, {"grains", "NNS"},
      {"in", "IN"},    {"them", "PPO"},       {"could", "MV"},
      {"not", "*"},    {"have", "HAVE"},      {"accumulated", "VPA"},
      {"mechanically", "RB"},
  };
  REQUIRE(tokens.size() >= start + expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(tokens[start + i].surface == expected[i].first);
    CHECK(std::string(render_tag(tokens[start + i].tag)) == expected[i].second);
  }
}

TEST_CASE("tagging: lexicon lookups") {
  Document doc = testutil::tagged_document("They must show results.");
  const auto& tokens = doc.sentences[0].tokens;
  CHECK(tokens[1].lemma == "must");
  CHECK(tokens[1].tag == Tag::MV);
  CHECK(tokens[2].tag == Tag::VB);   // show: verb reading outranks the noun
  CHECK(tokens[3].tag == Tag::NNS);  // results
}

TEST_CASE("tagging: unknown words go through the guesser") {
  Document doc = testutil::tagged_document("The flobbulation was glorping.");
  const auto& tokens = doc.sentences[0].tokens;
  CHECK(tokens[1].tag == Tag::NN);
  CHECK(tokens[3].tag == Tag::VPR);
}

TEST_CASE("tagging: negation is pinned to NEG") {
  Document doc = testutil::tagged_document("It cannot work and will not work.");
  std::size_t neg_count = 0;
  for (const Token& t : doc.sentences[0].tokens)
    if (t.tag == Tag::NEG) ++neg_count;
  CHECK(neg_count == 2);
}

TEST_CASE("tagging: no token is left untagged") {
  for (const auto& row : testutil::micro_suite()) {
    Document doc = testutil::tagged_document(row[2]);
    for (const Sentence& s : doc.sentences)
      for (const Token& t : s.tokens) CHECK(t.tag != Tag::NONE);
  }
}

TEST_CASE("tagging: identical input yields identical tags") {
  const std::string text = "Researchers argue that the structures are likely artifacts.";
  Document a = testutil::tagged_document(text);
  Document b = testutil::tagged_document(text);
  REQUIRE(a.sentences.size() == b.sentences.size());
  for (std::size_t s = 0; s < a.sentences.size(); ++s) {
    REQUIRE(a.sentences[s].tokens.size() == b.sentences[s].tokens.size());
    for (std::size_t i = 0; i < a.sentences[s].tokens.size(); ++i)
      CHECK(a.sentences[s].tokens[i].tag == b.sentences[s].tokens[i].tag);
  }
}

TEST_CASE("tagging: lexicon beats the guesser") {
  // "glorping" would guess VPR; a lexicon row must win.
  auto path = std::filesystem::temp_directory_path() / "pos_priority.tsv";
  {
    std::ofstream out(path, std::ios::binary);
    out << "glorping\tNN\t7\n";
  }
  PosLexicon lex = PosLexicon::load(path);
  std::string text = "glorping";
  auto tokens = tokenize(text, Span{0, text.size()});
  tag_tokens(tokens, lex);
  CHECK(tokens[0].tag == Tag::NN);
}
