#ifndef GENOTAG_SYNTHETIC_H_
#define GENOTAG_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "genotag/constraints.h"
#include "genotag/lexicon.h"
#include "genotag/training.h"

namespace genotag {

// A corpus drawn from a small first-order tag-transition process over a toy
// tagset (d n j v p r c), with an invented lexicon where many words carry
// two or three tags. Transitions of probability zero become negative
// rules, so the rules are sound on every generated sentence.
struct SyntheticOptions {
  std::uint64_t seed = 1;
  std::size_t train_sentences = 3000;
  std::size_t test_sentences = 500;
  std::size_t words = 60;
  std::size_t max_length = 25;
};

struct SyntheticCorpus {
  Lexicon lexicon;
  std::vector<NegativeRule> rules;
  std::vector<GoldSentence> train;
  std::vector<GoldSentence> test;
};

SyntheticCorpus generate_synthetic(const SyntheticOptions &options = {});

// Writes lexicon.txt, rules.txt, train.txt and test.txt into `dir`,
// creating it if needed.
void write_synthetic(const SyntheticCorpus &corpus,
                     const std::filesystem::path &dir);

}  // namespace genotag

#endif  // GENOTAG_SYNTHETIC_H_
