#include "genotag/training.h"

#include <algorithm>

#include "genotag/errors.h"
#include "genotag/text_util.h"

namespace genotag {

std::vector<GoldSentence> read_gold_corpus(std::istream &in) {
  std::vector<GoldSentence> corpus;
  GoldSentence current;
  auto flush = [&] {
    if (!current.empty()) corpus.push_back(std::move(current));
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
      throw TrainingDataError("expected surface<TAB>tag", lineno);
    }
    try {
      current.push_back({std::string(surface), parse_tag(trim(fields[1]))});
    } catch (const MalformedTag &e) {
      throw TrainingDataError(e.what(), lineno);
    }
  }
  flush();
  return corpus;
}

std::vector<GoldSentence> read_gold_corpus(const std::filesystem::path &path) {
  auto in = open_input(path);
  return read_gold_corpus(in);
}

void write_gold_corpus(std::ostream &out,
                       const std::vector<GoldSentence> &corpus) {
  for (const auto &sentence : corpus) {
    for (const auto &t : sentence) out << t.surface << '\t' << t.tag << '\n';
    out << '\n';
  }
}

TrainingResult train(const std::vector<GoldSentence> &corpus,
                     const Lexicon &lexicon, AnalyzerConfig config) {
  TrainingResult result;
  for (const auto &sentence : corpus) {
    for (const auto &t : sentence) {
      if (t.tag == config.proper_noun_tag) result.proper_nouns.add(t.surface);
    }
  }

  const Analyzer analyzer(lexicon, config, &result.proper_nouns);
  ProperNounDict run_names;
  NgramCounter counters[3] = {NgramCounter(1), NgramCounter(2),
                              NgramCounter(3)};

  for (std::size_t s = 0; s < corpus.size(); ++s) {
    std::vector<std::string> surfaces;
    for (const auto &t : corpus[s]) surfaces.push_back(t.surface);
    Sentence raw = make_sentence(surfaces);

    std::vector<Genotype> genotypes;
    std::vector<Tag> gold;
    std::vector<bool> usable;
    for (std::size_t i = 0; i < raw.tokens.size(); ++i) {
      AnalyzedToken a = analyzer.analyze(raw.tokens[i], run_names);
      Tag tag = a.genotype().tags().front();
      bool ok = true;
      if (!a.is_marker()) {
        tag = corpus[s][i - 1].tag;
        if (!a.genotype().contains(tag)) {
          ok = false;
          result.warnings.push_back(
              "sentence " + std::to_string(s + 1) + ", token '" + a.surface() +
              "': gold tag " + tag.str() + " not in genotype " +
              a.genotype().join(" ") + "; skipped");
        }
      }
      genotypes.push_back(a.genotype());
      gold.push_back(tag);
      usable.push_back(ok);
    }

    for (std::size_t order = 1; order <= 3; ++order) {
      for (std::size_t i = 0; i + order <= genotypes.size(); ++i) {
        bool ok = true;
        bool ambiguous = false;
        for (std::size_t k = i; k < i + order; ++k) {
          ok = ok && usable[k];
          ambiguous = ambiguous || !genotypes[k].unambiguous();
        }
        if (!ok || !ambiguous) continue;
        counters[order - 1].add(
            NgramKey(genotypes.begin() + i, genotypes.begin() + i + order),
            std::vector<Tag>(gold.begin() + i, gold.begin() + i + order));
      }
    }
  }

  result.model.unigram = counters[0].build();
  result.model.bigram = counters[1].build();
  result.model.trigram = counters[2].build();
  return result;
}

}  // namespace genotag
