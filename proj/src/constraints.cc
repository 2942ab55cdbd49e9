#include "genotag/constraints.h"

#include <algorithm>

#include "genotag/errors.h"
#include "genotag/text_util.h"

namespace genotag {

NegativeRule::NegativeRule(std::vector<TagPattern> patterns, std::string id)
    : patterns_(std::move(patterns)), id_(std::move(id)) {
  if (patterns_.size() < 2 || patterns_.size() > 3) {
    throw RuleParseError("a rule needs 2 or 3 patterns, got " +
                             std::to_string(patterns_.size()),
                         0);
  }
  for (const auto &p : patterns_) {
    if (p.all_wildcards()) {
      throw RuleParseError("pattern '" + p.str() + "' matches every tag", 0);
    }
  }
  if (id_.empty()) {
    for (const auto &p : patterns_) {
      if (!id_.empty()) id_ += ' ';
      id_ += p.str();
    }
  }
}

std::vector<NegativeRule> parse_rules(std::istream &in) {
  std::vector<NegativeRule> rules;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    chomp(line);
    if (is_comment_or_blank(line)) continue;
    try {
      std::vector<TagPattern> patterns;
      for (auto field : split_ws(line)) patterns.emplace_back(std::string(field));
      rules.emplace_back(std::move(patterns));
    } catch (const Error &e) {
      throw RuleParseError(e.what(), lineno);
    }
  }
  return rules;
}

std::vector<NegativeRule> parse_rule_file(const std::filesystem::path &path) {
  auto in = open_input(path);
  return parse_rules(in);
}

void RuleLog::removed(const NegativeRule &rule, std::size_t token,
                      const Tag &tag) {
  events_.push_back(
      {RuleEvent::Kind::kRemoved, rule.id(), sentence_, token, tag.str()});
}

void RuleLog::blocked(const NegativeRule &rule, std::size_t token) {
  if (!blocked_seen_.emplace(rule.id(), sentence_, token).second) return;
  events_.push_back({RuleEvent::Kind::kBlocked, rule.id(), sentence_, token, {}});
}

void RuleLog::append(const RuleLog &other) {
  events_.insert(events_.end(), other.events_.begin(), other.events_.end());
  blocked_seen_.insert(other.blocked_seen_.begin(), other.blocked_seen_.end());
}

void RuleLog::write(std::ostream &out) const {
  for (const auto &e : events_) {
    out << e.rule_id << '\t' << e.sentence_index << '\t' << e.token_index
        << '\t'
        << (e.kind == RuleEvent::Kind::kRemoved ? e.tag : "BLOCKED") << '\n';
  }
}

namespace {

bool settled(const AnalyzedToken &token, const TagPattern &pattern) {
  return std::all_of(token.candidates().begin(), token.candidates().end(),
                     [&](const Tag &t) { return tag_matches_prefix(t, pattern); });
}

}  // namespace

bool apply_rule_window(std::span<AnalyzedToken> window,
                       const NegativeRule &rule, RuleLog *log,
                       std::size_t first_token) {
  const auto &patterns = rule.patterns();
  if (window.size() != patterns.size()) return false;

  std::size_t open = window.size();
  for (std::size_t k = 0; k < window.size(); ++k) {
    if (settled(window[k], patterns[k])) continue;
    if (open != window.size()) return false;  // two open positions
    open = k;
  }
  if (open == window.size()) {
    if (log) log->blocked(rule, first_token);
    return false;
  }

  AnalyzedToken &target = window[open];
  std::vector<Tag> keep;
  std::vector<Tag> removed;
  for (const Tag &t : target.candidates()) {
    (tag_matches_prefix(t, patterns[open]) ? removed : keep).push_back(t);
  }
  if (removed.empty()) return false;
  target.restrict_to(Genotype(std::move(keep)));
  if (log) {
    for (const Tag &t : removed) log->removed(rule, first_token + open, t);
  }
  return true;
}

PropagateStats propagate(TaggedSentence &sentence,
                         std::span<const NegativeRule> rules,
                         int max_iterations, RuleLog *log) {
  PropagateStats stats;
  std::span<AnalyzedToken> tokens(sentence);
  while (stats.sweeps < max_iterations) {
    ++stats.sweeps;
    bool changed = false;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      for (const NegativeRule &rule : rules) {
        if (i + rule.size() > tokens.size()) continue;
        std::size_t before = tokens[i].candidates().size();
        for (std::size_t k = 1; k < rule.size(); ++k)
          before += tokens[i + k].candidates().size();
        if (apply_rule_window(tokens.subspan(i, rule.size()), rule, log, i)) {
          std::size_t after = 0;
          for (std::size_t k = 0; k < rule.size(); ++k)
            after += tokens[i + k].candidates().size();
          stats.removals += before - after;
          changed = true;
        }
      }
    }
    if (!changed) {
      stats.converged = true;
      break;
    }
  }
  return stats;
}

}  // namespace genotag
