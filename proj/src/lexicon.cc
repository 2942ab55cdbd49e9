#include "genotag/lexicon.h"

#include <algorithm>
#include <mutex>

#include "genotag/errors.h"
#include "genotag/text_util.h"
#include "genotag/translit.h"

namespace genotag {

Lexicon Lexicon::parse(std::istream &in) {
  Lexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    chomp(line);
    if (is_comment_or_blank(line)) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw LexiconParseError("expected surface<TAB>tags", lineno);
    }
    std::string surface(trim(std::string_view(line).substr(0, tab)));
    if (surface.empty()) throw LexiconParseError("empty surface", lineno);
    if (!apostrophes_unambiguous(surface)) {
      throw LexiconParseError(
          "apostrophe in '" + surface + "' reads as an accent mark", lineno);
    }
    try {
      lex.add(surface, parse_genotype(std::string_view(line).substr(tab + 1)));
    } catch (const MalformedTag &e) {
      throw LexiconParseError(e.what(), lineno);
    } catch (const EmptyGenotype &) {
      throw LexiconParseError("no tags for '" + surface + "'", lineno);
    }
  }
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path &path) {
  auto in = open_input(path);
  return parse(in);
}

void Lexicon::add(const std::string &surface, const Genotype &genotype) {
  auto it = entries_.find(surface);
  if (it == entries_.end()) {
    entries_.emplace(surface, genotype);
  } else {
    it->second = it->second.merged(genotype);
  }
  if (surface.find('_') != std::string::npos) compounds_.insert(surface);
}

const Genotype *Lexicon::find(std::string_view surface) const {
  auto it = entries_.find(std::string(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::pair<std::string, Genotype>> Lexicon::sorted_entries() const {
  std::vector<std::pair<std::string, Genotype>> out(entries_.begin(),
                                                    entries_.end());
  std::sort(out.begin(), out.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  return out;
}

ProperNounDict::ProperNounDict(const ProperNounDict &other) {
  std::shared_lock lock(other.mu_);
  names_ = other.names_;
}

ProperNounDict &ProperNounDict::operator=(const ProperNounDict &other) {
  if (this == &other) return *this;
  std::set<std::string, std::less<>> copy;
  {
    std::shared_lock lock(other.mu_);
    copy = other.names_;
  }
  std::unique_lock lock(mu_);
  names_ = std::move(copy);
  return *this;
}

ProperNounDict ProperNounDict::load(const std::filesystem::path &path) {
  auto in = open_input(path);
  ProperNounDict dict;
  std::string line;
  while (std::getline(in, line)) {
    chomp(line);
    if (is_comment_or_blank(line)) continue;
    dict.names_.emplace(trim(line));
  }
  return dict;
}

void ProperNounDict::save(std::ostream &out) const {
  std::shared_lock lock(mu_);
  for (const auto &n : names_) out << n << '\n';
}

bool ProperNounDict::contains(std::string_view name) const {
  std::shared_lock lock(mu_);
  return names_.find(name) != names_.end();
}

bool ProperNounDict::add(const std::string &name) {
  std::unique_lock lock(mu_);
  return names_.insert(name).second;
}

std::size_t ProperNounDict::size() const {
  std::shared_lock lock(mu_);
  return names_.size();
}

std::set<std::string> ProperNounDict::names() const {
  std::shared_lock lock(mu_);
  return {names_.begin(), names_.end()};
}

void learn_proper_noun(const std::string &word, ProperNounDict &dict) {
  dict.add(word);
}

}  // namespace genotag
