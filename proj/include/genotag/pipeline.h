#ifndef GENOTAG_PIPELINE_H_
#define GENOTAG_PIPELINE_H_

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genotag/analyzer.h"
#include "genotag/constraints.h"
#include "genotag/lexicon.h"
#include "genotag/preprocess.h"
#include "genotag/statistics.h"
#include "genotag/tagset_map.h"

namespace genotag {

// One operator of a tagging schedule.
//   M       morphology (first, exactly once)
//   D[:k]   negative constraints, k sweeps
//   T3[:t]  trigram decisions      B[:t]  bigram decisions
//   U[:t]   unigram decisions (t defaults to 90)
//   A[:t]   all three orders in one step, conflicts settled by order first
//   R       tagset reduction (at most once)
struct ScheduleStep {
  enum class Kind { kMorphology, kConstraints, kTrigram, kBigram, kUnigram,
                    kCombined, kReduction };
  Kind kind;
  std::optional<int> iterations;    // kConstraints
  std::optional<double> threshold;  // statistical steps

  friend bool operator==(const ScheduleStep &, const ScheduleStep &) = default;
};

struct Schedule {
  std::vector<ScheduleStep> steps;

  bool uses_statistics() const;
  bool uses_constraints() const;
  bool uses_reduction() const;

  friend bool operator==(const Schedule &, const Schedule &) = default;
};

inline constexpr double kDefaultUnigramThreshold = 90.0;

// "M,D:3,B,U:90,R". Throws ScheduleError.
Schedule parse_schedule(std::string_view text);
std::string to_string(const Schedule &schedule);

struct Thresholds {
  double unigram = kDefaultUnigramThreshold;
  double bigram = 75.0;
  double trigram = 50.0;

  double for_order(std::size_t order) const;
};

// A decision that matches the current candidates of the tokens starting at
// `position`.
struct Application {
  Decision decision;
  std::size_t position = 0;

  std::size_t order() const { return decision.order(); }
};

// Picks a consistent subset of applicable decisions. Higher order wins, then
// higher strength, then the leftmost position. Two applications conflict
// when they share a token that is still ambiguous.
std::vector<Application> resolve_conflicts(std::vector<Application> applicable);

// Applies n-gram decisions of the given orders until none applies. A
// decision is used only when its key equals the current candidate sets and
// its strength reaches the order's threshold. Returns the number of
// decisions applied.
std::size_t apply_statistics(TaggedSentence &sentence, const Model &model,
                             std::span<const int> orders,
                             const Thresholds &thresholds);

// Maps every candidate through the tagset map; tokens whose candidates
// collapse to one tag become resolved.
void reduce_output(std::vector<TaggedSentence> &sentences,
                   const TagsetMap &map);

// Resources a run may need; a step whose resource is null raises
// MissingResource.
struct Resources {
  const Lexicon *lexicon = nullptr;
  std::span<const NegativeRule> rules;
  bool has_rules = false;
  const Model *model = nullptr;
  const TagsetMap *tagset_map = nullptr;
  const ProperNounDict *model_names = nullptr;
};

struct RunOptions {
  AnalyzerConfig analyzer;
  Thresholds thresholds;
  int default_iterations = kDefaultConstraintIterations;
  // Collect proper nouns over the whole input before analysing it, so the
  // result does not depend on sentence order. Implied by jobs > 1.
  bool two_pass = false;
  int jobs = 1;
};

struct RunResult {
  std::vector<TaggedSentence> sentences;
  ProperNounDict run_names;
  RuleLog rule_log;
};

RunResult run(const std::vector<Sentence> &sentences, const Schedule &schedule,
              const Resources &resources, const RunOptions &options = {});

// `surface<TAB>tag` for resolved tokens, `surface<TAB>t1 t2 ...` for
// ambiguous ones, blank line after each sentence; markers are not written.
void write_tagged(std::ostream &out,
                  const std::vector<TaggedSentence> &sentences);

}  // namespace genotag

#endif  // GENOTAG_PIPELINE_H_
