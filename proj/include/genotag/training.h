#ifndef GENOTAG_TRAINING_H_
#define GENOTAG_TRAINING_H_

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "genotag/analyzer.h"
#include "genotag/lexicon.h"
#include "genotag/statistics.h"

namespace genotag {

struct GoldToken {
  std::string surface;
  Tag tag;
};

using GoldSentence = std::vector<GoldToken>;

// Hand-tagged corpus: `surface<TAB>tag` per line, blank line between
// sentences; <S> and </S> lines are skipped. Throws TrainingDataError.
std::vector<GoldSentence> read_gold_corpus(std::istream &in);
std::vector<GoldSentence> read_gold_corpus(const std::filesystem::path &path);

void write_gold_corpus(std::ostream &out,
                       const std::vector<GoldSentence> &corpus);

struct TrainingResult {
  Model model;
  // Surfaces tagged with the proper-noun tag, kept with the model.
  ProperNounDict proper_nouns;
  // One message per token whose gold tag is not in its genotype.
  std::vector<std::string> warnings;
};

// Counts, over genotypes only, which tag (sequence) each unigram, bigram and
// trigram key resolved to. Sentence markers take part as single-tag
// genotypes. Tokens whose gold tag falls outside their genotype are skipped
// together with every n-gram covering them. Unambiguous unigrams, and
// n-grams made only of unambiguous genotypes, are not stored.
TrainingResult train(const std::vector<GoldSentence> &corpus,
                     const Lexicon &lexicon, AnalyzerConfig config = {});

}  // namespace genotag

#endif  // GENOTAG_TRAINING_H_
