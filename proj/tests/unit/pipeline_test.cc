#include <doctest.h>

#include <sstream>

#include "genotag/errors.h"
#include "genotag/pipeline.h"
#include "genotag/training.h"
#include "scenarios.h"
#include "test_util.h"

using namespace genotag;
using genotag::testing::G;
using genotag::testing::kDataDir;
namespace sc = genotag::scenarios;

namespace {

Application app(std::vector<Genotype> key, std::vector<Tag> choice,
                std::uint64_t f, std::uint64_t n, std::size_t position) {
  Decision d{std::move(key), std::move(choice), f, n, strength_formula(f, n)};
  return {d, position};
}

// Candidates of the word tokens, markers dropped.
std::vector<Genotype> words(const TaggedSentence &s) {
  std::vector<Genotype> out;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) out.push_back(s[i].candidates());
  return out;
}

}  // namespace

TEST_CASE("schedules parse and print losslessly") {
  for (const char *text : {"M", "M,D:3,B,U:90", "M,D:5,T3:60,B:70,U:85,R",
                           "M,A:80", "M,U:0", "M,R"}) {
    Schedule s = parse_schedule(text);
    CHECK(to_string(s) == text);
    CHECK(parse_schedule(to_string(s)) == s);
  }
  Schedule s = parse_schedule("M,D,B,U");
  REQUIRE(s.steps.size() == 4);
  CHECK_FALSE(s.steps[1].iterations.has_value());
  CHECK(s.steps[3].threshold == kDefaultUnigramThreshold);
  CHECK(s.uses_constraints());
  CHECK(s.uses_statistics());
  CHECK_FALSE(s.uses_reduction());
}

TEST_CASE("bad schedules are rejected") {
  for (const char *text : {"", "D:3", "M,M", "M,R,R", "M,X", "M:1", "M,R:2",
                           "M,D:x", "M,B:abc", "M,D:-1", "M,,B"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_schedule(text), ScheduleError);
  }
}

TEST_CASE("higher order beats strength") {
  auto tri = app({G("a b"), G("c d"), G("e")}, {Tag("a"), Tag("c"), Tag("e")},
                 5, 6, 0);
  auto bi = app({G("a b"), G("c d")}, {Tag("b"), Tag("d")}, 768, 793, 0);
  auto chosen = resolve_conflicts({bi, tri});
  REQUIRE(chosen.size() == 1);
  CHECK(chosen[0].order() == 3);
}

TEST_CASE("stronger decision wins among equal orders") {
  auto strong = app({G("a"), G("b c")}, {Tag("a"), Tag("b")}, 768, 793, 0);  // 96.16
  auto weak = app({G("b c"), G("d")}, {Tag("c"), Tag("d")}, 90, 92, 1);      // 95.63
  auto chosen = resolve_conflicts({weak, strong});
  REQUIRE(chosen.size() == 1);
  CHECK(chosen[0].decision.choice[1] == Tag("b"));
}

TEST_CASE("ties go to the leftmost position and disjoint decisions coexist") {
  auto left = app({G("a b"), G("c")}, {Tag("a"), Tag("c")}, 5, 5, 0);
  auto right = app({G("c"), G("a b")}, {Tag("c"), Tag("b")}, 5, 5, 1);
  // They share only the unambiguous token at position 1.
  CHECK(resolve_conflicts({right, left}).size() == 2);

  auto a = app({G("a"), G("b c")}, {Tag("a"), Tag("b")}, 5, 5, 2);
  auto b = app({G("b c"), G("d")}, {Tag("c"), Tag("d")}, 5, 5, 3);
  auto chosen = resolve_conflicts({b, a});
  REQUIRE(chosen.size() == 1);
  CHECK(chosen[0].position == 2);
}

TEST_CASE("moyenne resolves by its left neighbour") {
  sc::Scenario s = sc::moyenne();
  Model model = train(s.corpus, s.lexicon).model;

  const auto *after_noun = model.bigram.find({G("nfs"), G("jfs nfs v3s")});
  REQUIRE(after_noun != nullptr);
  CHECK(after_noun->size() == 1);
  CHECK(after_noun->front().f == 23);

  auto r = sc::tag(s, model, "femme moyenne\nhomme moyenne", "M,B");
  CHECK(words(r.sentences[0])[1] == G("jfs"));
  CHECK(words(r.sentences[1])[1] == G("v3s"));
}

TEST_CASE("unseen context falls back to the unigram decision") {
  sc::Scenario s = sc::moyenne();
  Model model = train(s.corpus, s.lexicon).model;
  const auto *rows = model.unigram.find({G("jfs nfs v3s")});
  REQUIRE(rows != nullptr);
  CHECK(rows->front().choice.front() == Tag("v3s"));
  CHECK(rows->front().n == 65);

  auto strict = sc::tag(s, model, "tout moyenne", "M,B,U:90");
  CHECK(words(strict.sentences[0])[1] == G("jfs nfs v3s"));
  auto loose = sc::tag(s, model, "tout moyenne", "M,B,U:30");
  CHECK(words(loose.sentences[0])[1] == G("v3s"));
}

TEST_CASE("U:100 never fires") {
  sc::Scenario s = sc::noun_verb();
  Model model = train(s.corpus, s.lexicon).model;
  auto r = sc::tag(s, model, "danse", "M,U:100");
  CHECK(words(r.sentences[0])[0] == G("nfs v3s"));
}

TEST_CASE("an unseen word inherits its genotype's decision") {
  sc::Scenario s = sc::noun_verb();
  Model model = train(s.corpus, s.lexicon).model;
  const auto *rows = model.unigram.find({G("nfs v3s")});
  REQUIRE(rows != nullptr);
  CHECK(rows->front().f == 121);
  CHECK(rows->front().n == 127);
  auto r = sc::tag(s, model, "danse", "M,U:90");
  CHECK(words(r.sentences[0])[0] == G("nfs"));
}

TEST_CASE("apply_statistics needs an ambiguous token in the key") {
  sc::Scenario s = sc::moyenne();
  Model model = train(s.corpus, s.lexicon).model;
  TaggedSentence sentence = {sc::tag(s, model, "femme", "M").sentences[0]};
  const int orders[] = {1, 2, 3};
  CHECK(apply_statistics(sentence, model, orders, Thresholds{}) == 0);
}

TEST_CASE("combined step prefers the higher order") {
  sc::Scenario s = sc::moyenne();
  Model model = train(s.corpus, s.lexicon).model;
  auto r = sc::tag(s, model, "femme moyenne", "M,A:0");
  CHECK(words(r.sentences[0])[1] == G("jfs"));
}

TEST_CASE("reduce_output maps and resolves") {
  TagsetMap map = TagsetMap::load(kDataDir / "tagset.map");
  std::vector<TaggedSentence> out = {
      {genotag::testing::tok("moyenne", "JFS NFS V1SPI V1SPS V2SPM V3SPI V3SPS"),
       genotag::testing::tok("x", "V3SPI V3SPS")}};
  reduce_output(out, map);
  CHECK(out[0][0].candidates() == G("jfs nfs v1s v2s v3s"));
  CHECK(out[0][1].resolved());
  CHECK(out[0][1].resolved_tag() == Tag("v3s"));
}

TEST_CASE("steps without their resources raise MissingResource") {
  Lexicon lex = Lexicon::load(kDataDir / "lexicon.txt");
  Resources res;
  res.lexicon = &lex;
  auto input = sc::sentences("il dort");
  CHECK_THROWS_AS(run(input, parse_schedule("M,U"), res), MissingResource);
  CHECK_THROWS_AS(run(input, parse_schedule("M,D"), res), MissingResource);
  CHECK_THROWS_AS(run(input, parse_schedule("M,R"), res), MissingResource);
  Resources none;
  CHECK_THROWS_AS(run(input, parse_schedule("M"), none), MissingResource);
}

TEST_CASE("constraints and statistics on the shipped data") {
  Lexicon lex = Lexicon::load(kDataDir / "lexicon.txt");
  auto rules = parse_rule_file(kDataDir / "rules.txt");
  auto corpus = read_gold_corpus(kDataDir / "desk_corpus.txt");
  Model model = train(corpus, lex).model;
  Resources res;
  res.lexicon = &lex;
  res.rules = rules;
  res.has_rules = true;
  res.model = &model;

  auto input = sc::sentences("elle l' appelle");
  auto r = run(input, parse_schedule("M,D:3"), res);
  CHECK(words(r.sentences[0])[1] == G("BD3S"));
  CHECK_FALSE(r.rule_log.events().empty());

  // Every step only narrows candidate sets.
  auto m = run(input, parse_schedule("M"), res);
  auto full = run(input, parse_schedule("M,D:3,B,U:90"), res);
  for (std::size_t i = 0; i < m.sentences[0].size(); ++i) {
    for (const Tag &t : full.sentences[0][i].candidates()) {
      CHECK(m.sentences[0][i].candidates().contains(t));
    }
  }
}

TEST_CASE("runs are deterministic and independent of the job count") {
  Lexicon lex = Lexicon::load(kDataDir / "lexicon.txt");
  auto rules = parse_rule_file(kDataDir / "rules.txt");
  auto corpus = read_gold_corpus(kDataDir / "desk_corpus.txt");
  Model model = train(corpus, lex).model;
  Resources res;
  res.lexicon = &lex;
  res.rules = rules;
  res.has_rules = true;
  res.model = &model;

  std::string text;
  for (const auto &sentence : corpus) {
    for (const auto &t : sentence) text += t.surface + " ";
    text += "\n";
  }
  auto input = sc::sentences(text);
  Schedule schedule = parse_schedule("M,D:3,B,U:90");
  auto print = [](const RunResult &r) {
    std::ostringstream out;
    write_tagged(out, r.sentences);
    r.rule_log.write(out);
    return out.str();
  };
  RunOptions two_pass;
  two_pass.two_pass = true;
  const std::string reference = print(run(input, schedule, res, two_pass));
  CHECK(print(run(input, schedule, res, two_pass)) == reference);
  RunOptions parallel;
  parallel.jobs = 4;
  CHECK(print(run(input, schedule, res, parallel)) == reference);
}

TEST_CASE("write_tagged prints candidates and skips markers") {
  std::vector<TaggedSentence> s = {
      {genotag::testing::tok("<S>", "^"), genotag::testing::tok("la", "BD3S RDF"),
       genotag::testing::tok("porte", "NFS"), genotag::testing::tok("</S>", "$")}};
  std::ostringstream out;
  write_tagged(out, s);
  CHECK(out.str() == "la\tBD3S RDF\nporte\tNFS\n\n");
}
