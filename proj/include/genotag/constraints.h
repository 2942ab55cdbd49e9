#ifndef GENOTAG_CONSTRAINTS_H_
#define GENOTAG_CONSTRAINTS_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "genotag/analyzer.h"
#include "genotag/tag.h"

namespace genotag {

// A tag sequence that may not occur in a sentence, e.g. "R* V*": an article
// is never followed by a verb. Each pattern constrains the leading
// characters of the tag at its position (see tag_matches_prefix).
class NegativeRule {
 public:
  // Throws RuleParseError unless there are 2 or 3 patterns, none of them
  // all wildcards.
  NegativeRule(std::vector<TagPattern> patterns, std::string id = {});

  const std::vector<TagPattern> &patterns() const { return patterns_; }
  std::size_t size() const { return patterns_.size(); }
  const std::string &id() const { return id_; }

 private:
  std::vector<TagPattern> patterns_;
  std::string id_;
};

// One rule per line, patterns separated by blanks, '#' comments. The id of
// each rule is its pattern text.
std::vector<NegativeRule> parse_rules(std::istream &in);
std::vector<NegativeRule> parse_rule_file(const std::filesystem::path &path);

struct RuleEvent {
  enum class Kind {
    kRemoved,  // `tag` was removed from token `token_index`
    kBlocked,  // every reading of the window violates the rule
  };
  Kind kind;
  std::string rule_id;
  std::size_t sentence_index = 0;
  std::size_t token_index = 0;
  std::string tag;
};

// Collects firings for --rule-log. Blocked windows are recorded once.
class RuleLog {
 public:
  void set_sentence(std::size_t index) { sentence_ = index; }
  void removed(const NegativeRule &rule, std::size_t token, const Tag &tag);
  void blocked(const NegativeRule &rule, std::size_t token);

  const std::vector<RuleEvent> &events() const { return events_; }
  void append(const RuleLog &other);
  void write(std::ostream &out) const;

 private:
  std::size_t sentence_ = 0;
  std::vector<RuleEvent> events_;
  std::set<std::tuple<std::string, std::size_t, std::size_t>> blocked_seen_;
};

// Applies one rule to a window of rule.size() tokens. The rule can only act
// when every position but one is settled, i.e. all of its remaining
// candidates match that position's pattern (an anchor is the single-tag
// case). The candidates of the one open position that match its pattern are
// then removed; since that position is not settled, at least one candidate
// always survives. When every position is settled the window cannot be
// repaired and a blocked event is logged instead. Returns true when a
// candidate was removed.
bool apply_rule_window(std::span<AnalyzedToken> window,
                       const NegativeRule &rule, RuleLog *log = nullptr,
                       std::size_t first_token = 0);

struct PropagateStats {
  int sweeps = 0;
  std::size_t removals = 0;
  bool converged = false;
};

inline constexpr int kDefaultConstraintIterations = 3;

// Sweeps left to right over every window, trying rules in order at each
// window, until a sweep changes nothing or `max_iterations` sweeps ran.
// Tokens settled earlier in a sweep act as anchors for later windows.
PropagateStats propagate(TaggedSentence &sentence,
                         std::span<const NegativeRule> rules,
                         int max_iterations = kDefaultConstraintIterations,
                         RuleLog *log = nullptr);

}  // namespace genotag

#endif  // GENOTAG_CONSTRAINTS_H_
