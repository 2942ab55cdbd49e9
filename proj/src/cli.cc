#include "genotag/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <iterator>
#include <optional>
#include <sstream>

#include "genotag/analyzer.h"
#include "genotag/constraints.h"
#include "genotag/errors.h"
#include "genotag/evaluation.h"
#include "genotag/lexicon.h"
#include "genotag/pipeline.h"
#include "genotag/preprocess.h"
#include "genotag/statistics.h"
#include "genotag/synthetic.h"
#include "genotag/tagset_map.h"
#include "genotag/text_util.h"
#include "genotag/training.h"

namespace genotag {

namespace {

namespace fs = std::filesystem;

constexpr const char *kDefaultSchedule = "M,D:3,B,U:90";

struct Options {
  std::string input;
  std::string gold;
  std::string system;
  std::string lexicon;
  std::string rules;
  std::string model;
  std::string tagset_map;
  std::string abbrev;
  std::string clitics;
  std::string proper_nouns;
  std::string pn_out;
  std::string suffix_rules;
  std::string guess;
  std::string rule_log;
  std::string schedule = kDefaultSchedule;
  std::string checkpoints;
  int iterations = kDefaultConstraintIterations;
  int jobs = 1;
  double unigram_threshold = kDefaultUnigramThreshold;
  double bigram_threshold = 75.0;
  double trigram_threshold = 50.0;
  bool tokenized = false;
  bool tsv = false;
  bool initial_proper_noun = false;
  bool two_pass = false;
  std::string seed_corpus;
  std::uint64_t seed = 1;
  std::size_t sentences = 3000;
};

// Fails fast on input files that are missing or unreadable.
void require_input(const std::string &path, const char *what) {
  if (path.empty()) return;
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw IoError(std::string(what) + " '" + path + "' does not exist or is not a file");
  }
  auto probe = open_input(path);
}

void require_output_dir(const std::string &path, const char *what) {
  if (path.empty()) return;
  fs::path parent = fs::path(path).parent_path();
  std::error_code ec;
  if (!parent.empty() && !fs::is_directory(parent, ec)) {
    throw IoError(std::string("directory for ") + what + " '" + path +
                  "' does not exist");
  }
}

std::string read_input(const std::string &path, std::istream &in) {
  if (!path.empty()) return read_file(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

PreprocessConfig preprocess_config(const Options &o, const Lexicon *lexicon) {
  PreprocessConfig config = PreprocessConfig::defaults();
  if (!o.abbrev.empty()) config.abbreviations = load_word_list(o.abbrev);
  if (!o.clitics.empty()) config.clitics = load_word_list(o.clitics);
  if (lexicon) config.compounds = lexicon->compound_keys();
  return config;
}

AnalyzerConfig analyzer_config(const Options &o) {
  AnalyzerConfig config;
  if (!o.guess.empty()) config.open_class_guess = parse_genotype(o.guess);
  if (!o.suffix_rules.empty()) config.suffix_rules = load_suffix_rules(o.suffix_rules);
  config.initial_proper_noun = o.initial_proper_noun;
  return config;
}

std::vector<Sentence> read_sentences(const Options &o, std::istream &in,
                                     const Lexicon *lexicon) {
  if (o.tokenized) {
    if (o.input.empty()) return read_token_stream(in);
    auto file = open_input(o.input);
    return read_token_stream(file);
  }
  return preprocess(read_input(o.input, in), preprocess_config(o, lexicon));
}

std::vector<std::uint64_t> parse_checkpoints(const std::string &text) {
  std::vector<std::uint64_t> out;
  for (auto part : split(text, ',')) {
    part = trim(part);
    std::uint64_t v = 0;
    auto res = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || res.ec != std::errc() ||
        res.ptr != part.data() + part.size()) {
      throw Error("bad checkpoint '" + std::string(part) + "'");
    }
    out.push_back(v);
  }
  return out;
}

void cmd_tokenize(const Options &o, std::istream &in, std::ostream &out) {
  require_input(o.input, "input");
  require_input(o.abbrev, "abbreviation list");
  require_input(o.clitics, "clitic list");
  require_input(o.lexicon, "lexicon");
  std::optional<Lexicon> lexicon;
  if (!o.lexicon.empty()) lexicon = Lexicon::load(o.lexicon);
  auto config = preprocess_config(o, lexicon ? &*lexicon : nullptr);
  write_token_stream(out, preprocess(read_input(o.input, in), config));
}

struct LoadedResources {
  std::optional<Lexicon> lexicon;
  std::vector<NegativeRule> rules;
  std::optional<Model> model;
  std::optional<TagsetMap> tagset_map;
  std::optional<ProperNounDict> names;

  Resources view() const {
    Resources r;
    r.lexicon = lexicon ? &*lexicon : nullptr;
    r.rules = rules;
    r.has_rules = has_rules;
    r.model = model ? &*model : nullptr;
    r.tagset_map = tagset_map ? &*tagset_map : nullptr;
    r.model_names = names ? &*names : nullptr;
    return r;
  }
  bool has_rules = false;
};

LoadedResources load_resources(const Options &o) {
  require_input(o.input, "input");
  require_input(o.lexicon, "lexicon");
  require_input(o.rules, "rule file");
  require_input(o.model, "model");
  require_input(o.tagset_map, "tagset map");
  require_input(o.abbrev, "abbreviation list");
  require_input(o.clitics, "clitic list");
  require_input(o.proper_nouns, "proper-noun list");
  require_input(o.suffix_rules, "suffix rules");
  require_output_dir(o.rule_log, "rule log");

  LoadedResources res;
  if (!o.lexicon.empty()) res.lexicon = Lexicon::load(o.lexicon);
  if (!o.rules.empty()) {
    res.rules = parse_rule_file(o.rules);
    res.has_rules = true;
  }
  if (!o.model.empty()) res.model = load_model(fs::path(o.model));
  if (!o.tagset_map.empty()) res.tagset_map = TagsetMap::load(o.tagset_map);
  if (!o.proper_nouns.empty()) res.names = ProperNounDict::load(o.proper_nouns);
  return res;
}

RunOptions run_options(const Options &o) {
  RunOptions options;
  options.analyzer = analyzer_config(o);
  options.thresholds.unigram = o.unigram_threshold;
  options.thresholds.bigram = o.bigram_threshold;
  options.thresholds.trigram = o.trigram_threshold;
  options.default_iterations = o.iterations;
  options.two_pass = o.two_pass;
  options.jobs = o.jobs;
  return options;
}

void cmd_tag(const Options &o, const std::string &schedule_text,
             std::istream &in, std::ostream &out) {
  const Schedule schedule = parse_schedule(schedule_text);
  LoadedResources res = load_resources(o);
  const Resources view = res.view();
  // Resource errors surface before any input is read.
  run({}, schedule, view, run_options(o));

  auto sentences = read_sentences(o, in, view.lexicon);
  RunResult result = run(sentences, schedule, view, run_options(o));
  write_tagged(out, result.sentences);
  if (!o.rule_log.empty()) {
    auto log = open_output(o.rule_log);
    result.rule_log.write(log);
  }
}

void cmd_train(const Options &o, std::ostream &out, std::ostream &err) {
  require_input(o.input, "corpus");
  require_input(o.lexicon, "lexicon");
  require_input(o.suffix_rules, "suffix rules");
  require_output_dir(o.model, "model");
  require_output_dir(o.pn_out, "proper-noun list");
  if (o.input.empty()) throw Error("train needs a corpus path");
  if (o.lexicon.empty()) throw MissingResource("train needs --lexicon");
  if (o.model.empty()) throw Error("train needs --model OUT");

  const Lexicon lexicon = Lexicon::load(o.lexicon);
  const auto corpus = read_gold_corpus(fs::path(o.input));
  TrainingResult result = train(corpus, lexicon, analyzer_config(o));
  for (const auto &w : result.warnings) err << "warning: " << w << '\n';
  save_model(result.model, fs::path(o.model));
  if (!o.pn_out.empty()) {
    auto pn = open_output(o.pn_out);
    result.proper_nouns.save(pn);
  }
  const char *names[] = {"unigram", "bigram", "trigram"};
  for (int order = 1; order <= 3; ++order) {
    const DecisionTable &t = result.model.table(order);
    out << names[order - 1] << '\t' << t.key_count() << " keys\t"
        << t.decision_count() << " rows\n";
  }
}

void cmd_eval(const Options &o, std::ostream &out) {
  require_input(o.gold, "gold file");
  require_input(o.system, "system file");
  const auto gold = read_tagged(fs::path(o.gold));
  const auto system = read_tagged(fs::path(o.system));
  const ScoreReport report = score(system, gold);
  if (o.tsv) {
    write_report_tsv(out, report);
  } else {
    write_report(out, report);
  }
}

void cmd_stats(const Options &o, std::istream &in, std::ostream &out) {
  LoadedResources res = load_resources(o);
  const Resources view = res.view();
  const Schedule schedule = parse_schedule("M");
  run({}, schedule, view, run_options(o));
  auto sentences = read_sentences(o, in, view.lexicon);
  RunResult result = run(sentences, schedule, view, run_options(o));

  const AmbiguityProfile profile = ambiguity_profile(result.sentences);
  const auto checkpoints = o.checkpoints.empty()
                               ? default_checkpoints(profile.total_tokens)
                               : parse_checkpoints(o.checkpoints);
  const auto growth = genotype_growth(result.sentences, checkpoints);
  if (o.tsv) {
    write_profile_tsv(out, profile);
  } else {
    write_profile(out, profile);
  }
  out << '\n';
  write_growth(out, growth);
}

void cmd_seed_corpus(const Options &o, std::ostream &out) {
  SyntheticOptions options;
  options.seed = o.seed;
  options.train_sentences = o.sentences;
  options.test_sentences = std::max<std::size_t>(1, o.sentences / 6);
  write_synthetic(generate_synthetic(options), o.seed_corpus);
  out << "wrote lexicon.txt rules.txt train.txt test.txt to " << o.seed_corpus
      << '\n';
}

void add_analysis_flags(CLI::App *cmd, Options &o) {
  cmd->add_option("--lexicon", o.lexicon, "Lexicon file (surface<TAB>tags)");
  cmd->add_option("--abbrev", o.abbrev, "Abbreviation list, one per line");
  cmd->add_option("--clitics", o.clitics, "Clitic pronoun list, one per line");
  cmd->add_option("--proper-nouns", o.proper_nouns,
                  "Proper-noun list saved with the model");
  cmd->add_option("--suffix-rules", o.suffix_rules,
                  "Suffix guesses for unknown words (suffix<TAB>tags)");
  cmd->add_option("--guess", o.guess,
                  "Genotype for unknown lowercase words, e.g. \"NFS NMS V\"");
  cmd->add_flag("--initial-proper-noun", o.initial_proper_noun,
                "Add the proper-noun tag to sentence-initial capitalized words");
  cmd->add_flag("--tokenized", o.tokenized,
                "Input is a token stream (first tab field is the surface)");
  cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--two-pass", o.two_pass,
                "Collect proper nouns over the whole input first");
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in,
            std::ostream &out, std::ostream &err) {
  Options o;
  CLI::App app{"Genotype-based part-of-speech tagger", "genotag"};
  app.set_version_flag("--version", std::string("genotag ") + kToolVersion +
                                        " (" + std::string(kModelHeader) + ")");
  app.require_subcommand(0, 1);
  app.add_option("--seed-corpus", o.seed_corpus,
                 "Write a synthetic lexicon, rule file and corpora to DIR");
  app.add_option("--seed", o.seed, "Random seed for --seed-corpus");
  app.add_option("--sentences", o.sentences,
                 "Training sentences for --seed-corpus");

  auto *tokenize = app.add_subcommand("tokenize", "Split raw text into a token stream");
  tokenize->add_option("input", o.input, "Text file (default: standard input)");
  tokenize->add_option("--lexicon", o.lexicon, "Lexicon supplying compounds");
  tokenize->add_option("--abbrev", o.abbrev, "Abbreviation list");
  tokenize->add_option("--clitics", o.clitics, "Clitic pronoun list");

  auto *analyze = app.add_subcommand("analyze", "Print the genotype of every token");
  analyze->add_option("input", o.input, "Text file (default: standard input)");
  add_analysis_flags(analyze, o);

  auto *train_cmd = app.add_subcommand("train", "Build a model from a hand-tagged corpus");
  train_cmd->add_option("corpus", o.input, "Gold corpus (surface<TAB>tag)")->required();
  train_cmd->add_option("--lexicon", o.lexicon, "Lexicon file");
  train_cmd->add_option("--model", o.model, "Model file to write");
  train_cmd->add_option("--pn-out", o.pn_out, "Proper-noun list to write");
  train_cmd->add_option("--suffix-rules", o.suffix_rules, "Suffix guesses");
  train_cmd->add_option("--guess", o.guess, "Genotype for unknown lowercase words");
  train_cmd->add_flag("--initial-proper-noun", o.initial_proper_noun,
                      "Add the proper-noun tag to sentence-initial capitalized words");

  auto *tag = app.add_subcommand("tag", "Run a tagging schedule");
  tag->add_option("input", o.input, "Text file (default: standard input)");
  add_analysis_flags(tag, o);
  tag->add_option("--rules", o.rules, "Negative-constraint file");
  tag->add_option("--model", o.model, "Model file");
  tag->add_option("--tagset-map", o.tagset_map, "Large-to-small tagset map");
  tag->add_option("--schedule", o.schedule, "Steps, e.g. M,D:3,B,U:90,R")
      ->capture_default_str();
  tag->add_option("--iterations", o.iterations, "Sweeps for D without :k")
      ->check(CLI::PositiveNumber);
  tag->add_option("--rule-log", o.rule_log, "Write constraint firings here");
  tag->add_option("--unigram-threshold", o.unigram_threshold, "Default for U")
      ->check(CLI::Range(0.0, 100.0));
  tag->add_option("--bigram-threshold", o.bigram_threshold, "Default for B")
      ->check(CLI::Range(0.0, 100.0));
  tag->add_option("--trigram-threshold", o.trigram_threshold, "Default for T3")
      ->check(CLI::Range(0.0, 100.0));

  auto *eval = app.add_subcommand("eval", "Score tagger output against gold");
  eval->add_option("gold", o.gold, "Gold corpus")->required();
  eval->add_option("system", o.system, "Tagger output")->required();
  eval->add_flag("--tsv", o.tsv, "Tab-separated output");

  auto *stats = app.add_subcommand("stats", "Ambiguity profile and genotype growth");
  stats->add_option("input", o.input, "Corpus (default: standard input)");
  add_analysis_flags(stats, o);
  stats->add_option("--checkpoints", o.checkpoints,
                    "Comma-separated token counts for the growth table");
  stats->add_flag("--tsv", o.tsv, "Tab-separated profile");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDataError;
  }

  try {
    if (*tokenize) {
      cmd_tokenize(o, in, out);
    } else if (*analyze) {
      cmd_tag(o, "M", in, out);
    } else if (*train_cmd) {
      cmd_train(o, out, err);
    } else if (*tag) {
      cmd_tag(o, o.schedule, in, out);
    } else if (*eval) {
      cmd_eval(o, out);
    } else if (*stats) {
      cmd_stats(o, in, out);
    } else if (!o.seed_corpus.empty()) {
      cmd_seed_corpus(o, out);
    } else {
      err << app.help();
      return kExitDataError;
    }
  } catch (const IoError &e) {
    err << "genotag: " << e.what() << '\n';
    return kExitIoError;
  } catch (const Error &e) {
    err << "genotag: " << e.what() << '\n';
    return kExitDataError;
  } catch (const std::exception &e) {
    err << "genotag: " << e.what() << '\n';
    return kExitDataError;
  }
  out.flush();
  return kExitOk;
}

}  // namespace genotag
