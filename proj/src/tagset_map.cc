#include "genotag/tagset_map.h"

#include <string>

#include "genotag/errors.h"
#include "genotag/text_util.h"

namespace genotag {

TagsetMap TagsetMap::parse(std::istream &in) {
  TagsetMap map;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    chomp(line);
    if (is_comment_or_blank(line)) continue;
    auto fields = split(line, '\t');
    if (fields.size() != 2) {
      throw TagsetMapParseError("expected PATTERN<TAB>target", lineno);
    }
    try {
      map.add(TagPattern(std::string(trim(fields[0]))),
              parse_tag(trim(fields[1])));
    } catch (const MalformedTag &e) {
      throw TagsetMapParseError(e.what(), lineno);
    }
  }
  return map;
}

TagsetMap TagsetMap::load(const std::filesystem::path &path) {
  auto in = open_input(path);
  return parse(in);
}

Tag reduce_tag(const Tag &tag, const TagsetMap &map) {
  for (const auto &[pattern, target] : map.entries()) {
    if (tag_matches_pattern(tag, pattern)) return target;
  }
  return tag;
}

Genotype reduce_genotype(const Genotype &genotype, const TagsetMap &map) {
  std::vector<Tag> out;
  out.reserve(genotype.size());
  for (const Tag &t : genotype) out.push_back(reduce_tag(t, map));
  return Genotype(std::move(out));
}

}  // namespace genotag
