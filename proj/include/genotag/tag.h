#ifndef GENOTAG_TAG_H_
#define GENOTAG_TAG_H_

#include <compare>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace genotag {

// A part-of-speech tag: a compact feature string whose first character is
// the syntactic category and whose remaining characters encode features in
// fixed positions (V3SPI = verb, 3rd person, singular, present, indicative).
//
// Tags never contain whitespace or '*'. '+' and '|' are also refused because
// the model file uses them as genotype and key separators.
class Tag {
 public:
  // Throws MalformedTag.
  explicit Tag(std::string text);

  const std::string &str() const { return text_; }
  std::size_t size() const { return text_.size(); }

  friend bool operator==(const Tag &, const Tag &) = default;
  friend std::strong_ordering operator<=>(const Tag &a, const Tag &b) {
    return a.text_.compare(b.text_) <=> 0;
  }

 private:
  std::string text_;
};

std::ostream &operator<<(std::ostream &os, const Tag &tag);

Tag parse_tag(std::string_view s);

// A tag with '*' positions, each matching exactly one arbitrary character.
class TagPattern {
 public:
  // Throws MalformedTag for empty or whitespace-bearing text.
  explicit TagPattern(std::string text);

  const std::string &str() const { return text_; }
  std::size_t size() const { return text_.size(); }
  bool all_wildcards() const;

  friend bool operator==(const TagPattern &, const TagPattern &) = default;

 private:
  std::string text_;
};

// Same length, and every non-'*' position equal.
bool tag_matches_pattern(const Tag &tag, const TagPattern &pattern);

// Pattern constrains only the leading characters of the tag: the tag must be
// at least as long as the pattern and its prefix of that length must match.
// This is how negative constraints address a whole category ("N**" covers
// every noun tag whose first three characters fit).
bool tag_matches_prefix(const Tag &tag, const TagPattern &pattern);

// The set of tags a word form can bear, kept sorted (byte-wise) and free of
// duplicates so that equal sets compare equal.
class Genotype {
 public:
  // Throws EmptyGenotype.
  explicit Genotype(std::vector<Tag> tags);
  Genotype(std::initializer_list<Tag> tags)
      : Genotype(std::vector<Tag>(tags)) {}

  const std::vector<Tag> &tags() const { return tags_; }
  std::size_t size() const { return tags_.size(); }
  bool contains(const Tag &tag) const;
  bool unambiguous() const { return tags_.size() == 1; }

  // Tags joined by `sep`.
  std::string join(std::string_view sep = " ") const;

  // Union with another genotype.
  Genotype merged(const Genotype &other) const;

  auto begin() const { return tags_.begin(); }
  auto end() const { return tags_.end(); }

  friend bool operator==(const Genotype &, const Genotype &) = default;
  friend auto operator<=>(const Genotype &a, const Genotype &b) {
    return a.tags_ <=> b.tags_;
  }

 private:
  std::vector<Tag> tags_;
};

std::ostream &operator<<(std::ostream &os, const Genotype &genotype);

Genotype make_genotype(std::span<const Tag> tags);

// Splits on whitespace (or `sep` when given) and builds a genotype.
// Convenience for tests and file readers. Throws MalformedTag/EmptyGenotype.
Genotype parse_genotype(std::string_view text, char sep = ' ');

}  // namespace genotag

#endif  // GENOTAG_TAG_H_
