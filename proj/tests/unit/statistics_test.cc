#include <doctest.h>

#include <cmath>
#include <sstream>

#include "genotag/errors.h"
#include "genotag/statistics.h"
#include "genotag/training.h"
#include "test_util.h"

using namespace genotag;
using genotag::testing::G;

namespace {

std::vector<GoldSentence> gold(const std::string &text) {
  std::istringstream in(text);
  return read_gold_corpus(in);
}

Lexicon lexicon(const std::string &text) {
  std::istringstream in(text);
  return Lexicon::parse(in);
}

std::string model_text(const Model &m) {
  std::ostringstream out;
  save_model(m, out);
  return out.str();
}

Model model_from(const std::string &text) {
  std::istringstream in(text);
  return load_model(in);
}

}  // namespace

TEST_CASE("strength_formula matches the published decision table") {
  struct Row { std::uint64_t f, n; double expected; };
  const Row rows[] = {{82, 82, 98.54},   {172, 173, 98.44}, {195, 199, 96.70},
                      {107, 109, 96.30}, {768, 793, 96.16}, {30, 30, 96.09},
                      {90, 92, 95.63},   {25, 25, 95.33}};
  for (const Row &r : rows) {
    CAPTURE(r.f);
    CAPTURE(r.n);
    CHECK(std::fabs(strength_formula(r.f, r.n) - r.expected) < 0.005);
  }
}

TEST_CASE("strength_formula on a single observation") {
  // p = 0.75, sd = sqrt(0.1875) = 0.4330...
  CHECK(strength_formula(1, 1) == doctest::Approx(31.6987).epsilon(1e-5));
  CHECK(strength_formula(0, 1) < 0.0);
}

TEST_CASE("strength_formula rejects impossible counts") {
  CHECK_THROWS_AS(strength_formula(0, 0), InvalidCounts);
  CHECK_THROWS_AS(strength_formula(3, 2), InvalidCounts);
}

TEST_CASE("strength grows with evidence and stays below 100") {
  double previous = -1e9;
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    const double s = strength_formula(n, n);
    CHECK(s > previous);
    CHECK(s < 100.0);
    previous = s;
  }
  for (std::uint64_t f = 1; f <= 200; ++f) {
    CHECK(strength_formula(f, 200) > strength_formula(f - 1, 200));
  }
}

TEST_CASE("counter orders rows by count then by choice") {
  NgramCounter counter(1);
  counter.add({G("jfs nfs v3s")}, {Tag("v3s")}, 27);
  counter.add({G("jfs nfs v3s")}, {Tag("jfs")}, 23);
  counter.add({G("jfs nfs v3s")}, {Tag("nfs")}, 15);
  DecisionTable table = counter.build();
  const auto *rows = table.find({G("jfs nfs v3s")});
  REQUIRE(rows != nullptr);
  REQUIRE(rows->size() == 3);
  CHECK((*rows)[0].choice == std::vector<Tag>{Tag("v3s")});
  CHECK((*rows)[0].n == 65);
  CHECK((*rows)[2].f == 15);
  CHECK(table.decision_count() == 3);

  NgramCounter tie(1);
  tie.add({G("a b")}, {Tag("b")}, 4);
  tie.add({G("a b")}, {Tag("a")}, 4);
  CHECK(tie.build().find({G("a b")})->front().choice == std::vector<Tag>{Tag("a")});
}

TEST_CASE("decide respects the threshold") {
  NgramCounter counter(1);
  counter.add({G("jfs nfs v3s")}, {Tag("v3s")}, 27);
  counter.add({G("jfs nfs v3s")}, {Tag("jfs")}, 38);
  DecisionTable table = counter.build();
  auto d = decide(table, {G("jfs nfs v3s")}, 0.0);
  REQUIRE(d.has_value());
  CHECK(d->choice.front() == Tag("jfs"));
  CHECK_FALSE(decide(table, {G("jfs nfs v3s")}, 90.0).has_value());
  CHECK_FALSE(decide(table, {G("a b")}, 0.0).has_value());
}

TEST_CASE("decision tables reject inconsistent rows") {
  DecisionTable table(1);
  Decision ok{{G("a b")}, {Tag("a")}, 3, 4, strength_formula(3, 4)};
  table.insert(ok);
  Decision outside{{G("a b")}, {Tag("c")}, 1, 4, 0.0};
  CHECK_THROWS(table.insert(outside));
  Decision other_n{{G("a b")}, {Tag("b")}, 1, 5, 0.0};
  CHECK_THROWS(table.insert(other_n));
  Decision too_many{{G("a b")}, {Tag("b")}, 2, 4, 0.0};
  CHECK_THROWS(table.insert(too_many));
  Decision wrong_order{{G("a b"), G("c")}, {Tag("a"), Tag("c")}, 1, 1, 0.0};
  CHECK_THROWS(table.insert(wrong_order));
}

TEST_CASE("format_key joins tags with + and genotypes with |") {
  CHECK(format_key({G("RDM BD3S"), G("P")}) == "BD3S+RDM|P");
}

TEST_CASE("model files round trip") {
  Model m;
  NgramCounter uni(1);
  uni.add({G("jfs nfs v3s")}, {Tag("v3s")}, 27);
  uni.add({G("jfs nfs v3s")}, {Tag("jfs")}, 23);
  m.unigram = uni.build();
  NgramCounter bi(2);
  bi.add({G("nfs"), G("jfs nfs v3s")}, {Tag("nfs"), Tag("jfs")}, 23);
  m.bigram = bi.build();
  const std::string text = model_text(m);
  CHECK(text.rfind("genotag-model v1\n", 0) == 0);
  Model back = model_from(text);
  CHECK(back == m);
  CHECK(model_text(back) == text);

  genotag::testing::TempDir dir;
  save_model(m, dir / "m.txt");
  CHECK(load_model(dir / "m.txt") == m);
}

TEST_CASE("model loader reports malformed lines") {
  auto line_of = [](const std::string &text) -> std::size_t {
    try {
      model_from(text);
    } catch (const ModelFormatError &e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("not a model\n") == 1);
  CHECK(line_of("genotag-model v1\n[UNIGRAM]\na+b\ta\t3\n") == 3);
  CHECK(line_of("genotag-model v1\n[QUADGRAM]\n") == 2);
  CHECK(line_of("genotag-model v1\n[UNIGRAM]\na+b\ta\t3\t4\t99.0\n") == 3);
  CHECK(line_of("genotag-model v1\n[UNIGRAM]\na+b\ta\t5\t4\t1.0\n") == 3);
  CHECK(line_of("genotag-model v1\n[BIGRAM]\na+b\ta\t1\t1\t31.69872981077807\n") == 3);
  CHECK_THROWS_AS(load_model("/nonexistent/model.txt"), IoError);
}

TEST_CASE("gold corpus reader skips markers and checks lines") {
  auto corpus = gold("<S>\nle\tRDM\nchat\tNMS\n</S>\n\nil\tBS3MS\n");
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].size() == 2);
  CHECK(corpus[0][1].tag == Tag("NMS"));
  CHECK_THROWS_AS(gold("le RDM\n"), TrainingDataError);
  CHECK_THROWS_AS(gold("le\tV3S*I\n"), TrainingDataError);

  std::ostringstream out;
  write_gold_corpus(out, corpus);
  CHECK(gold(out.str()).size() == 2);
}

TEST_CASE("training counts genotypes, not words") {
  Lexicon lex = lexicon("le\tBD3S RDM\nla\tBD3S NMS RDF\nchat\tNMS\n");
  auto result = train(gold("le\tRDM\nchat\tNMS\n\nle\tBD3S\n"), lex);
  const auto *rows = result.model.unigram.find({G("BD3S RDM")});
  REQUIRE(rows != nullptr);
  CHECK(rows->size() == 2);
  CHECK(rows->front().n == 2);
  CHECK(result.model.unigram.find({G("NMS")}) == nullptr);  // unambiguous
  CHECK(result.warnings.empty());
  // The bigram over markers and an ambiguous word is kept.
  CHECK(result.model.bigram.find({G("^"), G("BD3S RDM")}) != nullptr);
}

TEST_CASE("a single le/RDM observation has strength 31.70") {
  Lexicon lex = lexicon("le\tBD3S RDM\n");
  auto result = train(gold("le\tRDM\n"), lex);
  const auto *rows = result.model.unigram.find({G("BD3S RDM")});
  REQUIRE(rows != nullptr);
  CHECK(rows->front().strength == doctest::Approx(31.70).epsilon(1e-4));
}

TEST_CASE("training warns and skips gold tags outside the genotype") {
  Lexicon lex = lexicon("le\tBD3S RDM\n");
  auto result = train(gold("le\tNMS\n\nle\tRDM\n"), lex);
  REQUIRE(result.warnings.size() == 1);
  CHECK(result.warnings[0].find("NMS") != std::string::npos);
  CHECK(result.model.unigram.find({G("BD3S RDM")})->front().n == 1);
  CHECK(result.model.bigram.find({G("^"), G("BD3S RDM")})->front().n == 1);
}

TEST_CASE("training keeps gold proper nouns apart from the model") {
  Lexicon lex = lexicon("le\tBD3S RDM\n");
  auto result = train(gold("Dupont\tU\nle\tRDM\n"), lex);
  CHECK(result.proper_nouns.contains("Dupont"));
  CHECK(result.warnings.empty());
}

TEST_CASE("renaming words leaves the model unchanged") {
  Lexicon a = lexicon("le\tBD3S RDM\nla\tBD3S NMS RDF\nchat\tNMS\n");
  Lexicon b = lexicon("xa\tBD3S RDM\nxb\tBD3S NMS RDF\nxc\tNMS\n");
  auto ma = train(gold("le\tRDM\nchat\tNMS\nla\tBD3S\n\nla\tRDF\n"), a).model;
  auto mb = train(gold("xa\tRDM\nxc\tNMS\nxb\tBD3S\n\nxb\tRDF\n"), b).model;
  CHECK(model_text(ma) == model_text(mb));
}

TEST_CASE("training on the desk corpus is clean") {
  Lexicon lex = Lexicon::load(genotag::testing::kDataDir / "lexicon.txt");
  auto corpus = read_gold_corpus(genotag::testing::kDataDir / "desk_corpus.txt");
  auto result = train(corpus, lex);
  CHECK(result.warnings.empty());
  CHECK_FALSE(result.model.unigram.empty());
  CHECK_FALSE(result.model.bigram.empty());
  CHECK_FALSE(result.model.trigram.empty());
  CHECK(model_from(model_text(result.model)) == result.model);
}
