#ifndef GENOTAG_TAGSET_MAP_H_
#define GENOTAG_TAGSET_MAP_H_

#include <filesystem>
#include <istream>
#include <utility>
#include <vector>

#include "genotag/tag.h"

namespace genotag {

// Many-to-one mapping from a fine tagset onto a coarse one. Entries are
// tried in order and the first matching pattern wins; a tag no pattern
// matches maps to itself.
class TagsetMap {
 public:
  TagsetMap() = default;
  explicit TagsetMap(std::vector<std::pair<TagPattern, Tag>> entries)
      : entries_(std::move(entries)) {}

  // Format: `PATTERN<TAB>target`, one per line, '#' comment lines.
  static TagsetMap parse(std::istream &in);
  static TagsetMap load(const std::filesystem::path &path);

  void add(TagPattern pattern, Tag target) {
    entries_.emplace_back(std::move(pattern), std::move(target));
  }
  const std::vector<std::pair<TagPattern, Tag>> &entries() const {
    return entries_;
  }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<TagPattern, Tag>> entries_;
};

Tag reduce_tag(const Tag &tag, const TagsetMap &map);
Genotype reduce_genotype(const Genotype &genotype, const TagsetMap &map);

}  // namespace genotag

#endif  // GENOTAG_TAGSET_MAP_H_
