#ifndef GENOTAG_LEXICON_H_
#define GENOTAG_LEXICON_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "genotag/tag.h"

namespace genotag {

// Exact-match dictionary from 7-bit surface forms to genotypes. Inflected
// forms are enumerated in the source file, so a hash lookup gives the same
// answers an inflectional transducer would.
class Lexicon {
 public:
  Lexicon() = default;

  // `surface<TAB>TAG1 TAG2 ...`, '#' comment lines. Repeated surfaces merge
  // their tag sets. Throws LexiconParseError with the offending line.
  static Lexicon parse(std::istream &in);
  static Lexicon load(const std::filesystem::path &path);

  void add(const std::string &surface, const Genotype &genotype);

  const Genotype *find(std::string_view surface) const;
  bool contains(std::string_view surface) const {
    return find(surface) != nullptr;
  }
  std::size_t size() const { return entries_.size(); }

  // Keys containing '_'.
  const std::set<std::string> &compound_keys() const { return compounds_; }

  // Entries sorted by surface, for deterministic dumps.
  std::vector<std::pair<std::string, Genotype>> sorted_entries() const;

 private:
  std::unordered_map<std::string, Genotype> entries_;
  std::set<std::string> compounds_;
};

// Growable set of surfaces known to be proper nouns. Insertions are
// serialized; lookups may run concurrently between them.
class ProperNounDict {
 public:
  ProperNounDict() = default;
  ProperNounDict(const ProperNounDict &other);
  ProperNounDict &operator=(const ProperNounDict &other);

  static ProperNounDict load(const std::filesystem::path &path);
  void save(std::ostream &out) const;

  bool contains(std::string_view name) const;
  // Returns true when the name was new.
  bool add(const std::string &name);
  std::size_t size() const;
  std::set<std::string> names() const;

 private:
  mutable std::shared_mutex mu_;
  std::set<std::string, std::less<>> names_;
};

void learn_proper_noun(const std::string &word, ProperNounDict &dict);

}  // namespace genotag

#endif  // GENOTAG_LEXICON_H_
