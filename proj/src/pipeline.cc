#include "genotag/pipeline.h"

#include <algorithm>
#include <charconv>
#include <thread>

#include "genotag/errors.h"
#include "genotag/text_util.h"

namespace genotag {

bool Schedule::uses_statistics() const {
  return std::any_of(steps.begin(), steps.end(), [](const ScheduleStep &s) {
    using K = ScheduleStep::Kind;
    return s.kind == K::kTrigram || s.kind == K::kBigram ||
           s.kind == K::kUnigram || s.kind == K::kCombined;
  });
}

bool Schedule::uses_constraints() const {
  return std::any_of(steps.begin(), steps.end(), [](const ScheduleStep &s) {
    return s.kind == ScheduleStep::Kind::kConstraints;
  });
}

bool Schedule::uses_reduction() const {
  return std::any_of(steps.begin(), steps.end(), [](const ScheduleStep &s) {
    return s.kind == ScheduleStep::Kind::kReduction;
  });
}

namespace {

double parse_threshold(std::string_view code, std::string_view text) {
  double v = 0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() ||
      text.empty() || v < 0.0 || v > 100.0) {
    throw ScheduleError("bad threshold '" + std::string(text) + "' for " +
                        std::string(code));
  }
  return v;
}

}  // namespace

Schedule parse_schedule(std::string_view text) {
  using K = ScheduleStep::Kind;
  Schedule schedule;
  bool seen_reduction = false;
  for (std::string_view raw : split(text, ',')) {
    std::string_view item = trim(raw);
    if (item.empty()) throw ScheduleError("empty step in '" + std::string(text) + "'");
    std::string_view code = item;
    std::optional<std::string_view> param;
    if (auto colon = item.find(':'); colon != std::string_view::npos) {
      code = item.substr(0, colon);
      param = item.substr(colon + 1);
    }

    ScheduleStep step{K::kMorphology, std::nullopt, std::nullopt};
    if (code == "M") {
      step.kind = K::kMorphology;
    } else if (code == "D") {
      step.kind = K::kConstraints;
      if (param) {
        int k = 0;
        auto res = std::from_chars(param->data(), param->data() + param->size(), k);
        if (res.ec != std::errc() || res.ptr != param->data() + param->size() ||
            k < 1) {
          throw ScheduleError("bad iteration count '" + std::string(*param) + "'");
        }
        step.iterations = k;
      }
    } else if (code == "T3") {
      step.kind = K::kTrigram;
    } else if (code == "B") {
      step.kind = K::kBigram;
    } else if (code == "U") {
      step.kind = K::kUnigram;
      step.threshold = kDefaultUnigramThreshold;
    } else if (code == "A") {
      step.kind = K::kCombined;
    } else if (code == "R") {
      step.kind = K::kReduction;
      if (seen_reduction) throw ScheduleError("R may appear only once");
      seen_reduction = true;
    } else {
      throw ScheduleError("unknown step '" + std::string(item) + "'");
    }

    bool takes_threshold = step.kind == K::kTrigram || step.kind == K::kBigram ||
                           step.kind == K::kUnigram || step.kind == K::kCombined;
    if (param && step.kind != K::kConstraints) {
      if (!takes_threshold) {
        throw ScheduleError("step '" + std::string(code) + "' takes no parameter");
      }
      step.threshold = parse_threshold(code, *param);
    }

    if (step.kind == K::kMorphology && !schedule.steps.empty()) {
      throw ScheduleError("M must be the first step and appear once");
    }
    if (schedule.steps.empty() && step.kind != K::kMorphology) {
      throw ScheduleError("schedule must start with M");
    }
    schedule.steps.push_back(step);
  }
  if (schedule.steps.empty()) throw ScheduleError("empty schedule");
  return schedule;
}

std::string to_string(const Schedule &schedule) {
  using K = ScheduleStep::Kind;
  std::string out;
  for (const auto &step : schedule.steps) {
    if (!out.empty()) out += ',';
    switch (step.kind) {
      case K::kMorphology: out += "M"; break;
      case K::kConstraints: out += "D"; break;
      case K::kTrigram: out += "T3"; break;
      case K::kBigram: out += "B"; break;
      case K::kUnigram: out += "U"; break;
      case K::kCombined: out += "A"; break;
      case K::kReduction: out += "R"; break;
    }
    if (step.iterations) out += ":" + std::to_string(*step.iterations);
    if (step.threshold) out += ":" + format_double(*step.threshold);
  }
  return out;
}

double Thresholds::for_order(std::size_t order) const {
  switch (order) {
    case 1: return unigram;
    case 2: return bigram;
    default: return trigram;
  }
}

namespace {

bool ambiguous_at(const Application &a, std::size_t token) {
  return a.decision.key[token - a.position].size() > 1;
}

bool conflicts(const Application &a, const Application &b) {
  std::size_t lo = std::max(a.position, b.position);
  std::size_t hi = std::min(a.position + a.order(), b.position + b.order());
  for (std::size_t t = lo; t < hi; ++t) {
    if (ambiguous_at(a, t)) return true;
  }
  return false;
}

}  // namespace

std::vector<Application> resolve_conflicts(std::vector<Application> applicable) {
  std::stable_sort(applicable.begin(), applicable.end(),
                   [](const Application &a, const Application &b) {
                     if (a.order() != b.order()) return a.order() > b.order();
                     if (a.decision.strength != b.decision.strength)
                       return a.decision.strength > b.decision.strength;
                     return a.position < b.position;
                   });
  std::vector<Application> chosen;
  for (auto &app : applicable) {
    bool clash = std::any_of(chosen.begin(), chosen.end(),
                             [&](const Application &c) { return conflicts(c, app); });
    if (!clash) chosen.push_back(std::move(app));
  }
  return chosen;
}

std::size_t apply_statistics(TaggedSentence &sentence, const Model &model,
                             std::span<const int> orders,
                             const Thresholds &thresholds) {
  std::size_t applied = 0;
  for (;;) {
    std::vector<Application> applicable;
    for (int order : orders) {
      const DecisionTable &table = model.table(order);
      const double threshold = thresholds.for_order(order);
      for (std::size_t i = 0; i + order <= sentence.size(); ++i) {
        NgramKey key;
        bool ambiguous = false;
        for (std::size_t k = i; k < i + order; ++k) {
          key.push_back(sentence[k].candidates());
          ambiguous = ambiguous || !sentence[k].resolved();
        }
        if (!ambiguous) continue;
        if (auto d = decide(table, key, threshold)) {
          applicable.push_back({std::move(*d), i});
        }
      }
    }
    if (applicable.empty()) break;
    for (const Application &app : resolve_conflicts(std::move(applicable))) {
      for (std::size_t k = 0; k < app.order(); ++k) {
        sentence[app.position + k].restrict_to(Genotype{app.decision.choice[k]});
      }
      ++applied;
    }
  }
  return applied;
}

void reduce_output(std::vector<TaggedSentence> &sentences,
                   const TagsetMap &map) {
  for (auto &sentence : sentences) {
    for (auto &token : sentence) token.reduce(map);
  }
}

namespace {

// Runs fn(i) for i in [0, n) on up to `jobs` threads.
template <typename Fn>
void parallel_for(std::size_t n, int jobs, Fn fn) {
  if (jobs <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) fn(i);
    });
  }
  for (auto &t : threads) t.join();
}

const char *step_name(ScheduleStep::Kind kind) {
  using K = ScheduleStep::Kind;
  switch (kind) {
    case K::kMorphology: return "M";
    case K::kConstraints: return "D";
    case K::kTrigram: return "T3";
    case K::kBigram: return "B";
    case K::kUnigram: return "U";
    case K::kCombined: return "A";
    case K::kReduction: return "R";
  }
  return "?";
}

void check_resources(const Schedule &schedule, const Resources &res) {
  using K = ScheduleStep::Kind;
  for (const auto &step : schedule.steps) {
    const char *missing = nullptr;
    switch (step.kind) {
      case K::kMorphology:
        if (!res.lexicon) missing = "a lexicon";
        break;
      case K::kConstraints:
        if (!res.has_rules) missing = "a rule file";
        break;
      case K::kReduction:
        if (!res.tagset_map) missing = "a tagset map";
        break;
      default:
        if (!res.model) missing = "a model";
    }
    if (missing) {
      throw MissingResource(std::string("step ") + step_name(step.kind) +
                            " needs " + missing);
    }
  }
}

}  // namespace

RunResult run(const std::vector<Sentence> &sentences, const Schedule &schedule,
              const Resources &resources, const RunOptions &options) {
  using K = ScheduleStep::Kind;
  check_resources(schedule, resources);

  RunResult result;
  const Analyzer analyzer(*resources.lexicon, options.analyzer,
                          resources.model_names);
  const int jobs = std::max(1, options.jobs);

  if (options.two_pass || jobs > 1) {
    for (const auto &s : sentences) analyzer.analyze(s, result.run_names);
  }
  result.sentences.resize(sentences.size());
  if (jobs > 1) {
    parallel_for(sentences.size(), jobs, [&](std::size_t i) {
      result.sentences[i] = analyzer.analyze(sentences[i], result.run_names);
    });
  } else {
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      result.sentences[i] = analyzer.analyze(sentences[i], result.run_names);
    }
  }

  for (std::size_t s = 1; s < schedule.steps.size(); ++s) {
    const ScheduleStep &step = schedule.steps[s];
    switch (step.kind) {
      case K::kMorphology:
        break;
      case K::kConstraints: {
        const int iterations = step.iterations.value_or(options.default_iterations);
        std::vector<RuleLog> logs(result.sentences.size());
        parallel_for(result.sentences.size(), jobs, [&](std::size_t i) {
          logs[i].set_sentence(i);
          propagate(result.sentences[i], resources.rules, iterations, &logs[i]);
        });
        for (const auto &log : logs) result.rule_log.append(log);
        break;
      }
      case K::kReduction:
        reduce_output(result.sentences, *resources.tagset_map);
        break;
      default: {
        Thresholds thresholds = options.thresholds;
        std::vector<int> orders;
        if (step.kind == K::kTrigram) orders = {3};
        if (step.kind == K::kBigram) orders = {2};
        if (step.kind == K::kUnigram) orders = {1};
        if (step.kind == K::kCombined) orders = {3, 2, 1};
        if (step.threshold) {
          thresholds.unigram = thresholds.bigram = thresholds.trigram =
              *step.threshold;
        }
        parallel_for(result.sentences.size(), jobs, [&](std::size_t i) {
          apply_statistics(result.sentences[i], *resources.model, orders,
                           thresholds);
        });
      }
    }
  }
  return result;
}

void write_tagged(std::ostream &out,
                  const std::vector<TaggedSentence> &sentences) {
  for (const auto &sentence : sentences) {
    for (const auto &token : sentence) {
      if (token.is_marker()) continue;
      out << token.surface() << '\t' << token.candidates().join(" ") << '\n';
    }
    out << '\n';
  }
}

}  // namespace genotag
