#ifndef GENOTAG_EVALUATION_H_
#define GENOTAG_EVALUATION_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "genotag/analyzer.h"
#include "genotag/tag.h"

namespace genotag {

// One line of tagger output: a surface and its remaining candidates. Gold
// files use the same shape with exactly one tag per line.
struct OutputToken {
  std::string surface;
  Genotype candidates;
};

using OutputSentence = std::vector<OutputToken>;

// Reads `surface<TAB>tag1 tag2 ...` lines, blank line between sentences;
// <S> and </S> lines are skipped. Throws ParseError.
std::vector<OutputSentence> read_tagged(std::istream &in);
std::vector<OutputSentence> read_tagged(const std::filesystem::path &path);

// Drops markers and keeps the current candidates.
std::vector<OutputSentence> to_output(const std::vector<TaggedSentence> &sentences);

struct ScoreReport {
  std::uint64_t total = 0;
  std::uint64_t correct = 0;
  std::uint64_t incorrect = 0;
  std::uint64_t ambiguous = 0;
  // Tokens, resolved or not, whose gold tag is among the candidates.
  std::uint64_t gold_in_candidates = 0;

  double percent(std::uint64_t count) const;
  double accuracy() const { return percent(correct); }
  double oracle_recall() const { return percent(gold_in_candidates); }
};

// Resolved tokens count correct iff the tag equals gold; tokens with more
// than one candidate count ambiguous. Both streams are compared token by
// token, ignoring sentence breaks. Throws AlignmentError at the first
// surface mismatch, or when one stream runs out first.
ScoreReport score(const std::vector<OutputSentence> &system,
                  const std::vector<OutputSentence> &gold);

void write_report(std::ostream &out, const ScoreReport &report);
void write_report_tsv(std::ostream &out, const ScoreReport &report);

inline constexpr std::size_t kHistogramBins = 8;

struct AmbiguityProfile {
  // histogram[k] counts tokens with k+1 tags; the last bin is "8 or more".
  std::array<std::uint64_t, kHistogramBins> histogram{};
  std::uint64_t total_tokens = 0;
  std::uint64_t total_tags = 0;

  void add(std::size_t genotype_size);
  double factor() const;
  double percent(std::size_t bin) const;
};

// Genotype sizes over word tokens; markers and punctuation are left out.
AmbiguityProfile ambiguity_profile(const std::vector<TaggedSentence> &corpus);

void write_profile(std::ostream &out, const AmbiguityProfile &profile);
void write_profile_tsv(std::ostream &out, const AmbiguityProfile &profile);

struct GrowthPoint {
  std::uint64_t tokens = 0;
  std::uint64_t distinct_words = 0;
  std::uint64_t distinct_genotypes = 0;

  friend bool operator==(const GrowthPoint &, const GrowthPoint &) = default;
};

// For each checkpoint c, counts over the first c word tokens (markers and
// punctuation left out). A checkpoint past the end reports the whole corpus.
std::vector<GrowthPoint> genotype_growth(const std::vector<TaggedSentence> &corpus,
                                         const std::vector<std::uint64_t> &checkpoints);

// Ten evenly spaced checkpoints ending at `tokens`.
std::vector<std::uint64_t> default_checkpoints(std::uint64_t tokens);

void write_growth(std::ostream &out, const std::vector<GrowthPoint> &growth);

}  // namespace genotag

#endif  // GENOTAG_EVALUATION_H_
