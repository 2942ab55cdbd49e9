#include <doctest.h>

#include <sstream>

#include "genotag/errors.h"
#include "genotag/evaluation.h"
#include "genotag/synthetic.h"
#include "test_util.h"

using namespace genotag;
using genotag::testing::G;
using genotag::testing::tok;

namespace {

std::vector<OutputSentence> tagged(const std::string &text) {
  std::istringstream in(text);
  return read_tagged(in);
}

TaggedSentence sentence_of_sizes(const std::vector<int> &sizes) {
  const char *tags[] = {"a", "b", "c", "d", "e", "f", "g", "h", "i"};
  TaggedSentence s = {tok("<S>", "^")};
  for (int k : sizes) {
    std::string g;
    for (int i = 0; i < k; ++i) g += std::string(tags[i]) + " ";
    s.push_back(tok("w", g));
  }
  s.push_back(tok("</S>", "$"));
  return s;
}

}  // namespace

TEST_CASE("read_tagged handles markers, blank lines and candidate lists") {
  auto out = tagged("<S>\nla\tBD3S RDF\nporte\tNFS\n</S>\n\nil\tBS3MS\n");
  REQUIRE(out.size() == 2);
  CHECK(out[0].size() == 2);
  CHECK(out[0][0].candidates == G("BD3S RDF"));
  CHECK(out[1][0].surface == "il");
  CHECK_THROWS_AS(tagged("la BD3S\n"), ParseError);
  CHECK_THROWS_AS(tagged("la\t\n"), ParseError);
}

TEST_CASE("score counts correct, incorrect and ambiguous tokens") {
  std::string gold_text, sys_text;
  for (int i = 0; i < 10; ++i) {
    gold_text += "w\tNFS\n";
    sys_text += i < 9 ? "w\tNFS\n" : "w\tNFS V3SPI\n";
  }
  ScoreReport r = score(tagged(sys_text), tagged(gold_text));
  CHECK(r.total == 10);
  CHECK(r.correct == 9);
  CHECK(r.incorrect == 0);
  CHECK(r.ambiguous == 1);
  CHECK(r.gold_in_candidates == 10);
  CHECK(r.accuracy() == doctest::Approx(90.0));
  CHECK(r.oracle_recall() == doctest::Approx(100.0));

  std::ostringstream out;
  write_report(out, r);
  CHECK(out.str().find("90.00%") != std::string::npos);
  CHECK(out.str().find("10.00%") != std::string::npos);
}

TEST_CASE("a wrong resolved tag is incorrect and misses recall") {
  ScoreReport r = score(tagged("a\tV3SPI\nb\tX\n"), tagged("a\tNFS\nb\tX\n"));
  CHECK(r.correct == 1);
  CHECK(r.incorrect == 1);
  CHECK(r.gold_in_candidates == 1);
}

TEST_CASE("identical files score 100 percent") {
  auto gold = read_tagged(genotag::testing::kDataDir / "desk_corpus.txt");
  ScoreReport r = score(gold, gold);
  CHECK(r.correct == r.total);
  CHECK(r.total > 0);
}

TEST_CASE("misaligned files raise AlignmentError") {
  CHECK_THROWS_AS(score(tagged("a\tX\n"), tagged("b\tX\n")), AlignmentError);
  CHECK_THROWS_AS(score(tagged("a\tX\n"), tagged("a\tX\nb\tY\n")), AlignmentError);
  CHECK_THROWS_AS(score(tagged("a\tX\n"), tagged("a\tX Y\n")), AlignmentError);
}

TEST_CASE("sentence boundaries do not affect alignment") {
  ScoreReport r = score(tagged("a\tX\nb\tY\n"), tagged("a\tX\n\nb\tY\n"));
  CHECK(r.correct == 2);
}

TEST_CASE("empty streams score zero tokens") {
  ScoreReport r = score({}, {});
  CHECK(r.total == 0);
  CHECK(r.accuracy() == 0.0);
}

TEST_CASE("ambiguity profile histogram and factor") {
  std::vector<TaggedSentence> corpus = {sentence_of_sizes({1, 1, 2, 3}),
                                        sentence_of_sizes({9})};
  corpus[0].insert(corpus[0].begin() + 1, tok(",", "."));
  AmbiguityProfile p = ambiguity_profile(corpus);
  CHECK(p.total_tokens == 5);
  CHECK(p.total_tags == 16);
  CHECK(p.histogram[0] == 2);
  CHECK(p.histogram[1] == 1);
  CHECK(p.histogram[2] == 1);
  CHECK(p.histogram[7] == 1);  // 8 and more
  CHECK(p.factor() == doctest::Approx(3.2));

  std::ostringstream out;
  write_profile_tsv(out, p);
  CHECK(out.str().find("8+\t1\t20.00\n") != std::string::npos);
  CHECK(out.str().find("factor\t3.2000\n") != std::string::npos);
}

TEST_CASE("an empty corpus has a zero profile") {
  AmbiguityProfile p = ambiguity_profile({});
  CHECK(p.total_tokens == 0);
  CHECK(p.factor() == 0.0);
}

TEST_CASE("genotype growth is monotone and bounded") {
  SyntheticOptions options;
  options.train_sentences = 200;
  options.test_sentences = 0;
  SyntheticCorpus c = generate_synthetic(options);
  std::vector<TaggedSentence> corpus;
  std::uint64_t tokens = 0;
  for (const auto &s : c.train) {
    TaggedSentence t;
    for (const auto &g : s) t.push_back(AnalyzedToken(g.surface, *c.lexicon.find(g.surface)));
    tokens += t.size();
    corpus.push_back(std::move(t));
  }
  auto checkpoints = default_checkpoints(tokens);
  CHECK(checkpoints.size() == 10);
  CHECK(checkpoints.back() == tokens);
  auto growth = genotype_growth(corpus, checkpoints);
  REQUIRE(growth.size() == checkpoints.size());
  for (std::size_t i = 0; i < growth.size(); ++i) {
    CHECK(growth[i].distinct_genotypes <= growth[i].distinct_words);
    if (i > 0) {
      CHECK(growth[i].distinct_words >= growth[i - 1].distinct_words);
      CHECK(growth[i].distinct_genotypes >= growth[i - 1].distinct_genotypes);
    }
  }
  std::ostringstream out;
  write_growth(out, growth);
  CHECK(out.str().rfind("tokens\t", 0) == 0);
}
