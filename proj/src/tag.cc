#include "genotag/tag.h"

#include <algorithm>
#include <cctype>

#include "genotag/errors.h"

namespace genotag {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

Tag::Tag(std::string text) : text_(std::move(text)) {
  if (text_.empty()) throw MalformedTag("empty tag");
  for (char c : text_) {
    if (is_space(c) || c == '*' || c == '+' || c == '|') {
      throw MalformedTag("malformed tag '" + text_ + "'");
    }
  }
}

std::ostream &operator<<(std::ostream &os, const Tag &tag) {
  return os << tag.str();
}

Tag parse_tag(std::string_view s) { return Tag(std::string(s)); }

TagPattern::TagPattern(std::string text) : text_(std::move(text)) {
  if (text_.empty()) throw MalformedTag("empty tag pattern");
  for (char c : text_) {
    if (is_space(c) || c == '+' || c == '|') {
      throw MalformedTag("malformed tag pattern '" + text_ + "'");
    }
  }
}

bool TagPattern::all_wildcards() const {
  return std::all_of(text_.begin(), text_.end(),
                     [](char c) { return c == '*'; });
}

namespace {

bool matches_positions(std::string_view tag, std::string_view pattern) {
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] != '*' && pattern[i] != tag[i]) return false;
  }
  return true;
}

}  // namespace

bool tag_matches_pattern(const Tag &tag, const TagPattern &pattern) {
  return tag.size() == pattern.size() &&
         matches_positions(tag.str(), pattern.str());
}

bool tag_matches_prefix(const Tag &tag, const TagPattern &pattern) {
  return tag.size() >= pattern.size() &&
         matches_positions(tag.str(), pattern.str());
}

Genotype::Genotype(std::vector<Tag> tags) : tags_(std::move(tags)) {
  if (tags_.empty()) throw EmptyGenotype("genotype needs at least one tag");
  std::sort(tags_.begin(), tags_.end());
  tags_.erase(std::unique(tags_.begin(), tags_.end()), tags_.end());
}

bool Genotype::contains(const Tag &tag) const {
  return std::binary_search(tags_.begin(), tags_.end(), tag);
}

std::string Genotype::join(std::string_view sep) const {
  std::string out;
  for (std::size_t i = 0; i < tags_.size(); ++i) {
    if (i) out += sep;
    out += tags_[i].str();
  }
  return out;
}

Genotype Genotype::merged(const Genotype &other) const {
  std::vector<Tag> all = tags_;
  all.insert(all.end(), other.tags_.begin(), other.tags_.end());
  return Genotype(std::move(all));
}

std::ostream &operator<<(std::ostream &os, const Genotype &genotype) {
  return os << '[' << genotype.join(",") << ']';
}

Genotype make_genotype(std::span<const Tag> tags) {
  return Genotype(std::vector<Tag>(tags.begin(), tags.end()));
}

Genotype parse_genotype(std::string_view text, char sep) {
  std::vector<Tag> tags;
  std::size_t i = 0;
  while (i < text.size()) {
    auto at_sep = [&](char c) {
      return sep == ' ' ? is_space(c) : c == sep;
    };
    while (i < text.size() && at_sep(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !at_sep(text[j])) ++j;
    if (j > i) tags.push_back(parse_tag(text.substr(i, j - i)));
    i = j;
  }
  return Genotype(std::move(tags));
}

}  // namespace genotag
