#include <doctest.h>

#include "genotag/cli.h"
#include "test_util.h"

using genotag::testing::CliResult;
using genotag::testing::data;
using genotag::testing::run_genotag;
using genotag::testing::slurp;
using genotag::testing::TempDir;

namespace {

const char *kUranium =
    "La teneur moyenne en uranium des rivières, bien que délicate à "
    "calculer, est faible.\n";

bool has_line(const std::string &text, const std::string &line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("tokenize splits clitics and brackets sentences") {
  CliResult r = run_genotag({"tokenize", "--clitics", data("clitics.txt")},
                            "dit-elle.");
  CHECK(r.code == 0);
  CHECK(r.out == "<S>\ndit\nelle\n.\n</S>\n\n");
}

TEST_CASE("tokenize of an empty file prints nothing") {
  TempDir dir;
  CliResult r = run_genotag({"tokenize", dir.file("empty.txt", "").string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("unreadable input is an I/O error") {
  CliResult r = run_genotag({"tokenize", "/nonexistent/input.txt"});
  CHECK(r.code == 2);
  CHECK(r.err.find("genotag:") != std::string::npos);
}

TEST_CASE("usage errors exit 1 and help exits 0") {
  CHECK(run_genotag({"tag", "--no-such-flag"}).code == 1);
  CHECK(run_genotag({"frobnicate"}).code == 1);
  CHECK(run_genotag({"--help"}).code == 0);
  CliResult v = run_genotag({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find("genotag 0.1.0") != std::string::npos);
}

TEST_CASE("train writes a model and reports row counts") {
  TempDir dir;
  CliResult r = run_genotag({"train", data("desk_corpus.txt"), "--lexicon",
                             data("lexicon.txt"), "--model",
                             (dir / "model.txt").string(), "--pn-out",
                             (dir / "pn.txt").string()});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out.find("unigram\t") != std::string::npos);
  CHECK(r.out.find("unigram\t0 keys") == std::string::npos);
  const std::string model = slurp(dir / "model.txt");
  CHECK(model.rfind("genotag-model v1\n", 0) == 0);
  CHECK(model.find("[UNIGRAM]\n") != std::string::npos);
}

TEST_CASE("train warns about gold tags outside the genotype") {
  TempDir dir;
  auto corpus = dir.file("gold.txt", "le\tNMS\nchat\tNMS\n\nle\tRDM\n");
  CliResult r = run_genotag({"train", corpus.string(), "--lexicon",
                             data("lexicon.txt"), "--model",
                             (dir / "m.txt").string()});
  CHECK(r.code == 0);
  CHECK(r.err.find("warning:") != std::string::npos);
}

TEST_CASE("train without its lexicon is an I/O error") {
  TempDir dir;
  CliResult r = run_genotag({"train", data("desk_corpus.txt"), "--lexicon",
                             "/nonexistent/lexicon.txt", "--model",
                             (dir / "m.txt").string()});
  CHECK(r.code == 2);
}

TEST_CASE("tagging the uranium sentence resolves the conjunction") {
  TempDir dir;
  const std::string model = (dir / "model.txt").string();
  REQUIRE(run_genotag({"train", data("desk_corpus.txt"), "--lexicon",
                       data("lexicon.txt"), "--model", model})
              .code == 0);
  CliResult r = run_genotag(
      {"tag", "--lexicon", data("lexicon.txt"), "--abbrev",
       data("abbreviations.txt"), "--clitics", data("clitics.txt"), "--rules",
       data("rules.txt"), "--model", model, "--tagset-map", data("tagset.map"),
       "--schedule", "M,D:3,B,U:90,R"},
      kUranium);
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "bien_que\tcs"));
  CHECK(has_line(r.out, "de'licate\tjfs"));
}

TEST_CASE("M,R runs analysis and reduction only") {
  CliResult r = run_genotag({"tag", "--lexicon", data("lexicon.txt"),
                             "--tagset-map", data("tagset.map"), "--schedule",
                             "M,R"},
                            "Il dit que la moyenne est faible.\n");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "moyenne\tjfs nfs v1s v2s v3s"));
}

TEST_CASE("statistical steps without a model are a data error") {
  CliResult r = run_genotag({"tag", "--lexicon", data("lexicon.txt"),
                             "--schedule", "M,U:90"},
                            "Il dort.\n");
  CHECK(r.code == 1);
  CHECK(r.err.find("model") != std::string::npos);
}

TEST_CASE("bad schedules are a data error") {
  CliResult r = run_genotag({"tag", "--lexicon", data("lexicon.txt"),
                             "--schedule", "D,M"},
                            "Il dort.\n");
  CHECK(r.code == 1);
}

TEST_CASE("tag writes a rule log") {
  TempDir dir;
  CliResult r = run_genotag({"tag", "--lexicon", data("lexicon.txt"), "--rules",
                             data("rules.txt"), "--schedule", "M,D", "--rule-log",
                             (dir / "log.tsv").string()},
                            "Elle l'appelle.\n");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "l'\tBD3S"));
  CHECK(slurp(dir / "log.tsv").find("R V\t0\t2\t") != std::string::npos);
}

TEST_CASE("eval of identical files is perfect") {
  CliResult r = run_genotag({"eval", data("desk_corpus.txt"),
                             data("desk_corpus.txt"), "--tsv"});
  CHECK(r.code == 0);
  CHECK(r.out.find("correct") != std::string::npos);
  CHECK(r.out.find("100.00") != std::string::npos);
}

TEST_CASE("eval of misaligned files is a data error") {
  TempDir dir;
  auto sys = dir.file("sys.txt", "autre\tNFS\n");
  CliResult r = run_genotag({"eval", data("desk_corpus.txt"), sys.string()});
  CHECK(r.code == 1);
}

TEST_CASE("stats prints the histogram for sizes 1 to 8") {
  CliResult r = run_genotag({"stats", data("desk_corpus.txt"), "--tokenized",
                             "--lexicon", data("lexicon.txt"), "--tsv"});
  CHECK(r.code == 0);
  for (const char *bin : {"\n1\t", "\n2\t", "\n3\t", "\n4\t", "\n5\t", "\n6\t",
                          "\n7\t", "\n8+\t"}) {
    CHECK(r.out.find(bin) != std::string::npos);
  }
  CHECK(r.out.find("factor\t") != std::string::npos);
}

TEST_CASE("tagging is deterministic across runs and job counts") {
  std::vector<std::string> args = {"tag", "--lexicon", data("lexicon.txt"),
                                   "--rules", data("rules.txt"), "--schedule",
                                   "M,D:3"};
  const std::string text = std::string(kUranium) + "Elle l'appelle. Il dort.\n";
  CliResult a = run_genotag(args, text);
  CliResult b = run_genotag(args, text);
  args.insert(args.end(), {"--jobs", "3"});
  CliResult c = run_genotag(args, text);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("seed corpus writes the synthetic files") {
  TempDir dir;
  CliResult r = run_genotag({"--seed-corpus", (dir / "seed").string(),
                             "--sentences", "50"});
  CHECK(r.code == 0);
  for (const char *f : {"lexicon.txt", "rules.txt", "train.txt", "test.txt"}) {
    CHECK(std::filesystem::exists(dir / "seed" / f));
  }
  CliResult t = run_genotag({"train", (dir / "seed" / "train.txt").string(),
                             "--lexicon", (dir / "seed" / "lexicon.txt").string(),
                             "--model", (dir / "m.txt").string()});
  CHECK(t.code == 0);
  CHECK(t.err.empty());
}
