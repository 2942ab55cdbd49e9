#include "genotag/statistics.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <utility>

#include "genotag/errors.h"
#include "genotag/text_util.h"

namespace genotag {

double strength_formula(std::uint64_t f, std::uint64_t n) {
  if (n == 0) throw InvalidCounts("n must be at least 1");
  if (f > n) {
    throw InvalidCounts("f (" + std::to_string(f) + ") exceeds n (" +
                        std::to_string(n) + ")");
  }
  const double p = (static_cast<double>(f) + 0.5) / (static_cast<double>(n) + 1.0);
  const double sd = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
  return (p - sd) * 100.0;
}

std::string format_key(const NgramKey &key) {
  std::string out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out += '|';
    out += key[i].join("+");
  }
  return out;
}

namespace {

bool decision_before(const Decision &a, const Decision &b) {
  if (a.f != b.f) return a.f > b.f;
  return a.choice < b.choice;
}

}  // namespace

std::size_t DecisionTable::decision_count() const {
  std::size_t total = 0;
  for (const auto &[key, decisions] : rows_) total += decisions.size();
  return total;
}

void DecisionTable::insert(Decision d) {
  if (d.key.size() != static_cast<std::size_t>(order_) ||
      d.choice.size() != d.key.size()) {
    throw Error("decision of order " + std::to_string(d.key.size()) +
                " in a table of order " + std::to_string(order_));
  }
  for (std::size_t i = 0; i < d.key.size(); ++i) {
    if (!d.key[i].contains(d.choice[i])) {
      throw Error("choice '" + d.choice[i].str() + "' is not in genotype " +
                  d.key[i].join("+"));
    }
  }
  d.strength = strength_formula(d.f, d.n);

  auto &decisions = rows_[d.key];
  std::uint64_t sum = d.f;
  for (const auto &other : decisions) {
    if (other.n != d.n) throw InvalidCounts("rows of one key disagree on n");
    if (other.choice == d.choice) throw Error("duplicate decision");
    sum += other.f;
  }
  if (sum > d.n) throw InvalidCounts("decision counts of a key exceed n");
  decisions.insert(
      std::upper_bound(decisions.begin(), decisions.end(), d, decision_before),
      std::move(d));
}

const std::vector<Decision> *DecisionTable::find(const NgramKey &key) const {
  auto it = rows_.find(key);
  return it == rows_.end() ? nullptr : &it->second;
}

void NgramCounter::add(const NgramKey &key, const std::vector<Tag> &choice,
                       std::uint64_t count) {
  counts_[key][choice] += count;
}

DecisionTable NgramCounter::build() const {
  DecisionTable table(order_);
  for (const auto &[key, choices] : counts_) {
    std::uint64_t n = 0;
    for (const auto &[choice, f] : choices) n += f;
    for (const auto &[choice, f] : choices) {
      table.insert(Decision{key, choice, f, n, 0.0});
    }
  }
  return table;
}

std::optional<Decision> decide(const DecisionTable &table, const NgramKey &key,
                               double threshold) {
  const auto *decisions = table.find(key);
  if (decisions == nullptr || decisions->empty()) return std::nullopt;
  const Decision &top = decisions->front();
  if (top.strength < threshold) return std::nullopt;
  return top;
}

const DecisionTable &Model::table(int order) const {
  switch (order) {
    case 1: return unigram;
    case 2: return bigram;
    case 3: return trigram;
  }
  throw Error("no table of order " + std::to_string(order));
}

DecisionTable &Model::table(int order) {
  return const_cast<DecisionTable &>(std::as_const(*this).table(order));
}

namespace {

constexpr const char *kSections[] = {"[UNIGRAM]", "[BIGRAM]", "[TRIGRAM]"};

std::uint64_t parse_count(std::string_view s, std::size_t lineno) {
  std::uint64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty()) {
    throw ModelFormatError("bad count '" + std::string(s) + "'", lineno);
  }
  return v;
}

double parse_real(std::string_view s, std::size_t lineno) {
  double v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size() || s.empty()) {
    throw ModelFormatError("bad strength '" + std::string(s) + "'", lineno);
  }
  return v;
}

}  // namespace

void save_model(const Model &model, std::ostream &out) {
  out << kModelHeader << '\n';
  for (int order = 1; order <= 3; ++order) {
    out << kSections[order - 1] << '\n';
    for (const auto &[key, decisions] : model.table(order).rows()) {
      for (const Decision &d : decisions) {
        out << format_key(key) << '\t';
        for (std::size_t i = 0; i < d.choice.size(); ++i) {
          if (i) out << ' ';
          out << d.choice[i];
        }
        out << '\t' << d.f << '\t' << d.n << '\t' << format_double(d.strength)
            << '\n';
      }
    }
  }
}

void save_model(const Model &model, const std::filesystem::path &path) {
  auto out = open_output(path);
  save_model(model, out);
  if (!out) throw IoError("error writing '" + path.string() + "'");
}

Model load_model(std::istream &in) {
  Model model;
  std::string line;
  std::size_t lineno = 0;
  int order = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++lineno;
    chomp(line);
    if (!header) {
      if (line != kModelHeader) {
        throw ModelFormatError("missing '" + std::string(kModelHeader) +
                                   "' header",
                               lineno);
      }
      header = true;
      continue;
    }
    if (trim(line).empty()) continue;
    auto section = std::find(std::begin(kSections), std::end(kSections), line);
    if (section != std::end(kSections)) {
      order = static_cast<int>(section - std::begin(kSections)) + 1;
      continue;
    }
    if (order == 0) throw ModelFormatError("row outside a section", lineno);

    auto fields = split(line, '\t');
    if (fields.size() != 5) {
      throw ModelFormatError("expected 5 tab-separated fields", lineno);
    }
    Decision d;
    try {
      for (auto part : split(fields[0], '|')) {
        d.key.push_back(parse_genotype(part, '+'));
      }
      for (auto t : split_ws(fields[1])) d.choice.push_back(parse_tag(t));
    } catch (const Error &e) {
      throw ModelFormatError(e.what(), lineno);
    }
    d.f = parse_count(fields[2], lineno);
    d.n = parse_count(fields[3], lineno);
    const double stored = parse_real(fields[4], lineno);
    try {
      model.table(order).insert(d);
    } catch (const Error &e) {
      throw ModelFormatError(e.what(), lineno);
    }
    const double expected = strength_formula(d.f, d.n);
    if (std::abs(stored - expected) > 1e-9) {
      throw ModelFormatError("stored strength " + std::string(fields[4]) +
                                 " disagrees with " + format_double(expected),
                             lineno);
    }
  }
  if (!header) throw ModelFormatError("empty model file", 0);
  return model;
}

Model load_model(const std::filesystem::path &path) {
  auto in = open_input(path);
  return load_model(in);
}

}  // namespace genotag
