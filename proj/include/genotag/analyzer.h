#ifndef GENOTAG_ANALYZER_H_
#define GENOTAG_ANALYZER_H_

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genotag/lexicon.h"
#include "genotag/preprocess.h"
#include "genotag/tag.h"
#include "genotag/tagset_map.h"

namespace genotag {

// A token after morphological analysis. `candidates` starts equal to the
// genotype and only ever shrinks; the token is resolved (an anchor) once a
// single candidate is left.
class AnalyzedToken {
 public:
  AnalyzedToken(std::string surface, Genotype genotype)
      : surface_(std::move(surface)),
        genotype_(genotype),
        candidates_(std::move(genotype)) {}

  const std::string &surface() const { return surface_; }
  const Genotype &genotype() const { return genotype_; }
  const Genotype &candidates() const { return candidates_; }
  bool resolved() const { return candidates_.size() == 1; }
  const Tag &resolved_tag() const { return candidates_.tags().front(); }
  bool is_marker() const;

  // Narrows the candidates. `keep` must be a non-empty subset of the current
  // candidates; returns false (and changes nothing) otherwise.
  bool restrict_to(const Genotype &keep);

  // Replaces genotype and candidates with their images under a tagset map.
  void reduce(const TagsetMap &map);

  const std::optional<Tag> &gold() const { return gold_; }
  void set_gold(std::optional<Tag> gold) { gold_ = std::move(gold); }

 private:
  std::string surface_;
  Genotype genotype_;
  Genotype candidates_;
  std::optional<Tag> gold_;
};

using TaggedSentence = std::vector<AnalyzedToken>;

struct SuffixRule {
  std::string suffix;
  Genotype genotype;
};

// `suffix<TAB>TAGS` per line; '#' comments.
std::vector<SuffixRule> load_suffix_rules(const std::filesystem::path &path);

struct AnalyzerConfig {
  Tag begin_tag{"^"};
  Tag end_tag{"$"};
  Tag proper_noun_tag{"U"};
  Tag punctuation_tag{"."};
  Tag number_tag{"W"};
  // Genotype for unknown lowercase words: the open classes.
  Genotype open_class_guess{Tag("NFS"), Tag("NMS"), Tag("JFS"), Tag("JMS"),
                            Tag("V")};
  // Consulted (longest suffix first) before the open-class guess. Empty by
  // default.
  std::vector<SuffixRule> suffix_rules;
  // Give sentence-initial capitalized words the proper-noun tag on top of
  // whatever the lowercase lookup finds.
  bool initial_proper_noun = false;
};

// Assigns genotypes to tokens. The lexicon and the proper-noun dictionary
// carried with a trained model are read-only; the per-run dictionary grows
// as unknown capitalized words are met.
class Analyzer {
 public:
  Analyzer(const Lexicon &lexicon, AnalyzerConfig config = {},
           const ProperNounDict *model_names = nullptr)
      : lexicon_(lexicon),
        config_(std::move(config)),
        model_names_(model_names) {}

  AnalyzedToken analyze(const RawToken &token, ProperNounDict &run_names) const;
  TaggedSentence analyze(const Sentence &sentence,
                         ProperNounDict &run_names) const;

  const AnalyzerConfig &config() const { return config_; }

 private:
  bool known_proper_noun(std::string_view word,
                         const ProperNounDict &run_names) const;
  std::optional<Genotype> lookup_any(const std::vector<std::string> &forms) const;
  Genotype guess(const std::string &word) const;

  const Lexicon &lexicon_;
  AnalyzerConfig config_;
  const ProperNounDict *model_names_;
};

// Default configuration, no model dictionary.
AnalyzedToken analyze(const RawToken &token, const Lexicon &lexicon,
                      ProperNounDict &names);

}  // namespace genotag

#endif  // GENOTAG_ANALYZER_H_
