#include "genotag/evaluation.h"

#include <algorithm>
#include <set>

#include "genotag/errors.h"
#include "genotag/preprocess.h"
#include "genotag/text_util.h"

namespace genotag {

std::vector<OutputSentence> read_tagged(std::istream &in) {
  std::vector<OutputSentence> sentences;
  OutputSentence current;
  auto flush = [&] {
    if (!current.empty()) sentences.push_back(std::move(current));
    current.clear();
  };
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    chomp(line);
    if (trim(line).empty()) {
      flush();
      continue;
    }
    auto fields = split(line, '\t');
    std::string_view surface = trim(fields[0]);
    if (surface == kBeginMarker) continue;
    if (surface == kEndMarker) {
      flush();
      continue;
    }
    if (fields.size() != 2 || surface.empty()) {
      throw ParseError("expected surface<TAB>tags", lineno);
    }
    try {
      current.push_back({std::string(surface), parse_genotype(trim(fields[1]))});
    } catch (const Error &e) {
      throw ParseError(e.what(), lineno);
    }
  }
  flush();
  return sentences;
}

std::vector<OutputSentence> read_tagged(const std::filesystem::path &path) {
  auto in = open_input(path);
  return read_tagged(in);
}

std::vector<OutputSentence> to_output(const std::vector<TaggedSentence> &sentences) {
  std::vector<OutputSentence> out;
  out.reserve(sentences.size());
  for (const auto &sentence : sentences) {
    OutputSentence s;
    for (const auto &token : sentence) {
      if (!token.is_marker()) s.push_back({token.surface(), token.candidates()});
    }
    out.push_back(std::move(s));
  }
  return out;
}

double ScoreReport::percent(std::uint64_t count) const {
  return total == 0 ? 0.0 : 100.0 * static_cast<double>(count) /
                                static_cast<double>(total);
}

ScoreReport score(const std::vector<OutputSentence> &system,
                  const std::vector<OutputSentence> &gold) {
  std::vector<const OutputToken *> sys_tokens;
  std::vector<const OutputToken *> gold_tokens;
  for (const auto &s : system) for (const auto &t : s) sys_tokens.push_back(&t);
  for (const auto &s : gold) for (const auto &t : s) gold_tokens.push_back(&t);

  ScoreReport report;
  const std::size_t common = std::min(sys_tokens.size(), gold_tokens.size());
  for (std::size_t i = 0; i < common; ++i) {
    const OutputToken &sys = *sys_tokens[i];
    const OutputToken &ref = *gold_tokens[i];
    if (sys.surface != ref.surface) {
      throw AlignmentError("token " + std::to_string(i + 1) + ": system '" +
                           sys.surface + "' vs gold '" + ref.surface + "'");
    }
    if (!ref.candidates.unambiguous()) {
      throw AlignmentError("token " + std::to_string(i + 1) + ": gold '" +
                           ref.surface + "' has more than one tag");
    }
    const Tag &want = ref.candidates.tags().front();
    ++report.total;
    if (sys.candidates.contains(want)) ++report.gold_in_candidates;
    if (!sys.candidates.unambiguous()) {
      ++report.ambiguous;
    } else if (sys.candidates.tags().front() == want) {
      ++report.correct;
    } else {
      ++report.incorrect;
    }
  }
  if (sys_tokens.size() != gold_tokens.size()) {
    throw AlignmentError("token " + std::to_string(common + 1) + ": " +
                         (sys_tokens.size() < gold_tokens.size()
                              ? "system output ends before gold"
                              : "gold ends before system output"));
  }
  return report;
}

void write_report(std::ostream &out, const ScoreReport &r) {
  auto row = [&](const char *label, std::uint64_t count) {
    std::string n = std::to_string(count);
    out << label << std::string(12 - std::string_view(label).size(), ' ')
        << std::string(n.size() < 9 ? 9 - n.size() : 0, ' ') << n << "  "
        << format_fixed(r.percent(count), 2) << "%\n";
  };
  row("correct", r.correct);
  row("incorrect", r.incorrect);
  row("ambiguous", r.ambiguous);
  row("total", r.total);
  row("recall", r.gold_in_candidates);
}

void write_report_tsv(std::ostream &out, const ScoreReport &r) {
  out << "measure\tcount\tpercent\n";
  auto row = [&](const char *label, std::uint64_t count) {
    out << label << '\t' << count << '\t' << format_fixed(r.percent(count), 2)
        << '\n';
  };
  row("correct", r.correct);
  row("incorrect", r.incorrect);
  row("ambiguous", r.ambiguous);
  row("total", r.total);
  row("recall", r.gold_in_candidates);
}

void AmbiguityProfile::add(std::size_t genotype_size) {
  const std::size_t bin = std::min(std::max<std::size_t>(genotype_size, 1),
                                   kHistogramBins) - 1;
  ++histogram[bin];
  ++total_tokens;
  total_tags += genotype_size;
}

double AmbiguityProfile::factor() const {
  return total_tokens == 0 ? 0.0 : static_cast<double>(total_tags) /
                                       static_cast<double>(total_tokens);
}

double AmbiguityProfile::percent(std::size_t bin) const {
  return total_tokens == 0 ? 0.0 : 100.0 * static_cast<double>(histogram[bin]) /
                                       static_cast<double>(total_tokens);
}

namespace {

bool counts_as_word(const AnalyzedToken &token) {
  return !token.is_marker() && !is_punctuation(token.surface());
}

}  // namespace

AmbiguityProfile ambiguity_profile(const std::vector<TaggedSentence> &corpus) {
  AmbiguityProfile profile;
  for (const auto &sentence : corpus) {
    for (const auto &token : sentence) {
      if (counts_as_word(token)) profile.add(token.genotype().size());
    }
  }
  return profile;
}

void write_profile(std::ostream &out, const AmbiguityProfile &p) {
  out << "tags    tokens  percent\n";
  for (std::size_t bin = 0; bin < kHistogramBins; ++bin) {
    std::string label = std::to_string(bin + 1);
    if (bin + 1 == kHistogramBins) label += "+";
    std::string n = std::to_string(p.histogram[bin]);
    out << label << std::string(label.size() < 4 ? 4 - label.size() : 0, ' ')
        << std::string(n.size() < 10 ? 10 - n.size() : 0, ' ') << n << "  "
        << format_fixed(p.percent(bin), 2) << "%\n";
  }
  out << "tokens  " << p.total_tokens << '\n';
  out << "tags    " << p.total_tags << '\n';
  out << "factor  " << format_fixed(p.factor(), 4) << '\n';
}

void write_profile_tsv(std::ostream &out, const AmbiguityProfile &p) {
  out << "tags\ttokens\tpercent\n";
  for (std::size_t bin = 0; bin < kHistogramBins; ++bin) {
    out << bin + 1 << (bin + 1 == kHistogramBins ? "+" : "") << '\t'
        << p.histogram[bin] << '\t' << format_fixed(p.percent(bin), 2) << '\n';
  }
  out << "tokens\t" << p.total_tokens << '\n';
  out << "tags\t" << p.total_tags << '\n';
  out << "factor\t" << format_fixed(p.factor(), 4) << '\n';
}

std::vector<GrowthPoint> genotype_growth(const std::vector<TaggedSentence> &corpus,
                                         const std::vector<std::uint64_t> &checkpoints) {
  std::vector<std::uint64_t> sorted(checkpoints);
  std::sort(sorted.begin(), sorted.end());

  std::set<std::string> words;
  std::set<Genotype> genotypes;
  std::uint64_t seen = 0;
  std::vector<GrowthPoint> by_checkpoint;
  std::size_t next = 0;
  auto emit_reached = [&] {
    while (next < sorted.size() && sorted[next] <= seen) {
      by_checkpoint.push_back({seen, words.size(), genotypes.size()});
      ++next;
    }
  };
  emit_reached();
  for (const auto &sentence : corpus) {
    for (const auto &token : sentence) {
      if (!counts_as_word(token)) continue;
      ++seen;
      words.insert(token.surface());
      genotypes.insert(token.genotype());
      emit_reached();
    }
  }
  while (next < sorted.size()) {
    by_checkpoint.push_back({seen, words.size(), genotypes.size()});
    ++next;
  }

  // Report in the caller's order.
  std::vector<GrowthPoint> out;
  for (std::uint64_t c : checkpoints) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
    out.push_back(by_checkpoint[static_cast<std::size_t>(it - sorted.begin())]);
  }
  return out;
}

std::vector<std::uint64_t> default_checkpoints(std::uint64_t tokens) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= 10; ++k) out.push_back(tokens * k / 10);
  return out;
}

void write_growth(std::ostream &out, const std::vector<GrowthPoint> &growth) {
  out << "tokens\twords\tgenotypes\n";
  for (const auto &g : growth) {
    out << g.tokens << '\t' << g.distinct_words << '\t' << g.distinct_genotypes
        << '\n';
  }
}

}  // namespace genotag
