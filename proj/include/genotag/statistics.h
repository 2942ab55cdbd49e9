#ifndef GENOTAG_STATISTICS_H_
#define GENOTAG_STATISTICS_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "genotag/tag.h"

namespace genotag {

// Confidence of a decision seen f times among n observations of its
// genotype key: the smoothed proportion p = (f + 0.5) / (n + 1) minus one
// binomial standard deviation sqrt(p (1 - p) / n), as a percentage. Always
// below 100. Throws InvalidCounts when n == 0 or f > n.
double strength_formula(std::uint64_t f, std::uint64_t n);

// A sequence of genotypes, one per token of an n-gram.
using NgramKey = std::vector<Genotype>;

std::string format_key(const NgramKey &key);  // "BD3S+RDM|P"

struct Decision {
  NgramKey key;
  std::vector<Tag> choice;  // choice[i] is a member of key[i]
  std::uint64_t f = 0;
  std::uint64_t n = 0;
  double strength = 0.0;

  std::size_t order() const { return key.size(); }
  // f / n, the share shown in reports.
  double ratio() const { return n ? static_cast<double>(f) / n : 0.0; }

  friend bool operator==(const Decision &, const Decision &) = default;
};

// Decisions for one n-gram order, grouped by key. Within a key the rows are
// sorted by descending f, ties broken by the lexicographically smaller
// choice, so front() is the decision to take.
class DecisionTable {
 public:
  explicit DecisionTable(int order = 1) : order_(order) {}

  int order() const { return order_; }
  bool empty() const { return rows_.empty(); }
  std::size_t key_count() const { return rows_.size(); }
  std::size_t decision_count() const;

  // Adds a row. Throws InvalidCounts / Error on inconsistent data (wrong
  // length, choice outside its genotype, disagreeing n, sum of f above n).
  void insert(Decision decision);

  const std::vector<Decision> *find(const NgramKey &key) const;
  const std::map<NgramKey, std::vector<Decision>> &rows() const {
    return rows_;
  }

  friend bool operator==(const DecisionTable &, const DecisionTable &) = default;

 private:
  int order_;
  std::map<NgramKey, std::vector<Decision>> rows_;
};

// Counts (key, choice) observations and turns them into a DecisionTable.
class NgramCounter {
 public:
  explicit NgramCounter(int order) : order_(order) {}
  void add(const NgramKey &key, const std::vector<Tag> &choice,
           std::uint64_t count = 1);
  DecisionTable build() const;

 private:
  int order_;
  std::map<NgramKey, std::map<std::vector<Tag>, std::uint64_t>> counts_;
};

// Top decision for `key` when it exists and its strength reaches the
// threshold.
std::optional<Decision> decide(const DecisionTable &table, const NgramKey &key,
                               double threshold);

struct Model {
  DecisionTable unigram{1};
  DecisionTable bigram{2};
  DecisionTable trigram{3};

  const DecisionTable &table(int order) const;
  DecisionTable &table(int order);

  friend bool operator==(const Model &, const Model &) = default;
};

inline constexpr std::string_view kModelHeader = "genotag-model v1";

// Text format: header line, then [UNIGRAM] / [BIGRAM] / [TRIGRAM] sections
// of `G1|G2<TAB>t1 t2<TAB>f<TAB>n<TAB>strength` rows, tags of a genotype
// joined by '+'.
void save_model(const Model &model, std::ostream &out);
void save_model(const Model &model, const std::filesystem::path &path);
// Throws ModelFormatError with a line number. Stored strengths must agree
// with the recomputed ones to 1e-9.
Model load_model(std::istream &in);
Model load_model(const std::filesystem::path &path);

}  // namespace genotag

#endif  // GENOTAG_STATISTICS_H_
