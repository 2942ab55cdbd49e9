#include "genotag/analyzer.h"

#include <algorithm>
#include <cctype>

#include "genotag/errors.h"
#include "genotag/text_util.h"
#include "genotag/translit.h"

namespace genotag {

bool AnalyzedToken::is_marker() const {
  return surface_ == kBeginMarker || surface_ == kEndMarker;
}

bool AnalyzedToken::restrict_to(const Genotype &keep) {
  for (const Tag &t : keep) {
    if (!candidates_.contains(t)) return false;
  }
  if (keep == candidates_) return false;
  candidates_ = keep;
  return true;
}

void AnalyzedToken::reduce(const TagsetMap &map) {
  genotype_ = reduce_genotype(genotype_, map);
  candidates_ = reduce_genotype(candidates_, map);
  if (gold_) gold_ = reduce_tag(*gold_, map);
}

std::vector<SuffixRule> load_suffix_rules(const std::filesystem::path &path) {
  auto in = open_input(path);
  std::vector<SuffixRule> rules;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    chomp(line);
    if (is_comment_or_blank(line)) continue;
    auto fields = split(line, '\t');
    if (fields.size() != 2 || trim(fields[0]).empty()) {
      throw ParseError("expected suffix<TAB>tags", lineno);
    }
    try {
      rules.push_back({std::string(trim(fields[0])), parse_genotype(fields[1])});
    } catch (const Error &e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return rules;
}

namespace {

bool is_number(std::string_view s) {
  if (s.empty() || !std::isdigit(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == ',' ||
           c == '.' || c == '%';
  });
}

// "Ecole" -> "E'cole": accent restitution on the 7-bit form.
std::string restored(const std::string &word) {
  return transliterate(restore_accents(detransliterate(word)));
}

void push_unique(std::vector<std::string> &forms, std::string form) {
  if (std::find(forms.begin(), forms.end(), form) == forms.end()) {
    forms.push_back(std::move(form));
  }
}

}  // namespace

bool Analyzer::known_proper_noun(std::string_view word,
                                 const ProperNounDict &run_names) const {
  return run_names.contains(word) ||
         (model_names_ != nullptr && model_names_->contains(word));
}

std::optional<Genotype> Analyzer::lookup_any(
    const std::vector<std::string> &forms) const {
  std::optional<Genotype> found;
  for (const auto &form : forms) {
    if (const Genotype *g = lexicon_.find(form)) {
      found = found ? found->merged(*g) : *g;
    }
  }
  return found;
}

Genotype Analyzer::guess(const std::string &word) const {
  const SuffixRule *best = nullptr;
  for (const auto &rule : config_.suffix_rules) {
    if (word.size() > rule.suffix.size() && word.ends_with(rule.suffix) &&
        (best == nullptr || rule.suffix.size() > best->suffix.size())) {
      best = &rule;
    }
  }
  return best ? best->genotype : config_.open_class_guess;
}

AnalyzedToken Analyzer::analyze(const RawToken &token,
                                ProperNounDict &run_names) const {
  const std::string &surface = token.surface;
  if (surface == kBeginMarker) return {surface, Genotype{config_.begin_tag}};
  if (surface == kEndMarker) return {surface, Genotype{config_.end_tag}};

  const Genotype proper{config_.proper_noun_tag};

  if (const Genotype *g = lexicon_.find(surface); g && !token.capitalized) {
    return {surface, *g};
  }
  if (is_punctuation(surface)) {
    return {surface, Genotype{config_.punctuation_tag}};
  }
  if (is_number(surface)) return {surface, Genotype{config_.number_tag}};

  if (!token.capitalized) return {surface, guess(surface)};

  // Headline and acronym spellings are looked up as "Sncf".
  std::string word = surface;
  if (all_caps(word)) word = word.substr(0, 1) + ascii_lower(word.substr(1));

  if (!token.sentence_initial) {
    std::vector<std::string> forms{surface};
    push_unique(forms, word);
    push_unique(forms, restored(word));
    if (auto g = lookup_any(forms)) return {surface, g->merged(proper)};
    learn_proper_noun(surface, run_names);
    return {surface, proper};
  }

  // Sentence-initial: whatever the lookups find prevails over the
  // proper-noun reading.
  std::vector<std::string> forms{surface};
  push_unique(forms, word);
  push_unique(forms, restored(word));
  push_unique(forms, ascii_lower(word));
  push_unique(forms, ascii_lower(restored(word)));
  std::optional<Genotype> found = lookup_any(forms);
  if (known_proper_noun(surface, run_names)) {
    found = found ? found->merged(proper) : proper;
  }
  if (found) {
    if (config_.initial_proper_noun) found = found->merged(proper);
    return {surface, *found};
  }
  learn_proper_noun(surface, run_names);
  return {surface, proper};
}

TaggedSentence Analyzer::analyze(const Sentence &sentence,
                                 ProperNounDict &run_names) const {
  TaggedSentence out;
  out.reserve(sentence.tokens.size());
  for (const RawToken &t : sentence.tokens) {
    out.push_back(analyze(t, run_names));
  }
  return out;
}

AnalyzedToken analyze(const RawToken &token, const Lexicon &lexicon,
                      ProperNounDict &names) {
  return Analyzer(lexicon).analyze(token, names);
}

}  // namespace genotag
