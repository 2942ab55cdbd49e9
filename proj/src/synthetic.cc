#include "genotag/synthetic.h"

#include <array>
#include <random>
#include <string>

#include "genotag/errors.h"
#include "genotag/text_util.h"

namespace genotag {

namespace {

// State 0 is the sentence start, state kEnd the sentence end; the rest are
// the toy tags.
constexpr std::array<const char *, 7> kTags = {"d", "n", "j", "v", "p", "r", "c"};
constexpr std::size_t kStates = kTags.size() + 2;
constexpr std::size_t kStart = 0;
constexpr std::size_t kEnd = kStates - 1;

//                 d    n    j    v    p    r    c    $
constexpr double kTransitions[kStates - 1][kStates - 1] = {
    /* ^ */ {0.50, 0.10, 0.00, 0.00, 0.10, 0.30, 0.00, 0.00},
    /* d */ {0.00, 0.70, 0.30, 0.00, 0.00, 0.00, 0.00, 0.00},
    /* n */ {0.00, 0.00, 0.10, 0.50, 0.20, 0.00, 0.05, 0.15},
    /* j */ {0.00, 0.90, 0.10, 0.00, 0.00, 0.00, 0.00, 0.00},
    /* v */ {0.40, 0.00, 0.05, 0.00, 0.20, 0.05, 0.00, 0.30},
    /* p */ {0.70, 0.30, 0.00, 0.00, 0.00, 0.00, 0.00, 0.00},
    /* r */ {0.00, 0.00, 0.00, 1.00, 0.00, 0.00, 0.00, 0.00},
    /* c */ {0.50, 0.00, 0.00, 0.00, 0.00, 0.50, 0.00, 0.00},
};

std::string state_tag(std::size_t state) {
  if (state == kStart) return "^";
  if (state == kEnd) return "$";
  return kTags[state - 1];
}

// Genotype shapes handed out to words in turn; indices into kTags.
const std::vector<std::vector<std::size_t>> kShapes = {
    {0},       {1},       {2},       {3},    {4},    {5}, {6},
    {0, 5},    {1, 3},    {1, 2},    {2, 3}, {0, 4}, {1, 2, 3},
    {1, 3},    {0, 5},    {4, 6},    {1},    {3},    {1, 3},
};

std::string word_name(std::size_t index) {
  std::string name = "w";
  do {
    name += static_cast<char>('a' + index % 26);
    index /= 26;
  } while (index != 0);
  return name;
}

struct ToyLexicon {
  std::vector<std::string> surfaces;
  // For each tag, the words that may carry it and their weights.
  std::array<std::vector<std::size_t>, kTags.size()> words_by_tag;
  std::array<std::vector<double>, kTags.size()> weights_by_tag;
  Lexicon lexicon;
};

ToyLexicon make_lexicon(std::size_t words, std::mt19937_64 &rng) {
  ToyLexicon toy;
  std::uniform_real_distribution<double> weight(0.2, 1.0);
  const std::size_t count = std::max(words, kShapes.size());
  for (std::size_t w = 0; w < count; ++w) {
    const auto &shape = kShapes[w % kShapes.size()];
    std::vector<Tag> tags;
    for (std::size_t t : shape) {
      tags.emplace_back(kTags[t]);
      toy.words_by_tag[t].push_back(w);
      toy.weights_by_tag[t].push_back(weight(rng));
    }
    toy.surfaces.push_back(word_name(w));
    toy.lexicon.add(toy.surfaces.back(), Genotype(std::move(tags)));
  }
  return toy;
}

// Returns an empty sentence when the walk does not reach the end state
// within max_length tags: a truncated sentence could end on a tag that never
// precedes the end marker and would contradict the rules.
GoldSentence sample_sentence(const ToyLexicon &toy, std::size_t max_length,
                             std::mt19937_64 &rng) {
  GoldSentence sentence;
  std::size_t state = kStart;
  for (;;) {
    const double *row = kTransitions[state];
    std::discrete_distribution<std::size_t> next(row, row + kStates - 1);
    std::size_t to = next(rng) + 1;
    if (to == kEnd) break;
    if (sentence.size() == max_length) return {};
    const std::size_t tag = to - 1;
    const auto &weights = toy.weights_by_tag[tag];
    std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
    const std::size_t word = toy.words_by_tag[tag][pick(rng)];
    sentence.push_back({toy.surfaces[word], Tag(kTags[tag])});
    state = to;
  }
  return sentence;
}

}  // namespace

SyntheticCorpus generate_synthetic(const SyntheticOptions &options) {
  if (options.max_length == 0) throw Error("synthetic sentences need max_length >= 1");
  std::mt19937_64 rng(options.seed);
  ToyLexicon toy = make_lexicon(options.words, rng);

  SyntheticCorpus corpus;
  corpus.lexicon = toy.lexicon;
  for (std::size_t from = 0; from < kStates - 1; ++from) {
    for (std::size_t to = 1; to < kStates; ++to) {
      if (kTransitions[from][to - 1] != 0.0) continue;
      // Rules never consist of markers alone.
      corpus.rules.emplace_back(std::vector<TagPattern>{
          TagPattern(state_tag(from)), TagPattern(state_tag(to))});
    }
  }
  auto fill = [&](std::vector<GoldSentence> &out, std::size_t n) {
    while (out.size() < n) {
      GoldSentence s = sample_sentence(toy, options.max_length, rng);
      if (!s.empty()) out.push_back(std::move(s));
    }
  };
  fill(corpus.train, options.train_sentences);
  fill(corpus.test, options.test_sentences);
  return corpus;
}

void write_synthetic(const SyntheticCorpus &corpus,
                     const std::filesystem::path &dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());

  {
    auto out = open_output(dir / "lexicon.txt");
    for (const auto &[surface, genotype] : corpus.lexicon.sorted_entries()) {
      out << surface << '\t' << genotype.join(" ") << '\n';
    }
  }
  {
    auto out = open_output(dir / "rules.txt");
    out << "# tag pairs the generating process never produces\n";
    for (const auto &rule : corpus.rules) out << rule.id() << '\n';
  }
  {
    auto out = open_output(dir / "train.txt");
    write_gold_corpus(out, corpus.train);
  }
  {
    auto out = open_output(dir / "test.txt");
    write_gold_corpus(out, corpus.test);
  }
}

}  // namespace genotag
