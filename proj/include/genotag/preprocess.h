#ifndef GENOTAG_PREPROCESS_H_
#define GENOTAG_PREPROCESS_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace genotag {

inline constexpr std::string_view kBeginMarker = "<S>";
inline constexpr std::string_view kEndMarker = "</S>";

struct RawToken {
  std::string surface;
  std::size_t position = 0;
  bool sentence_initial = false;
  bool capitalized = false;

  bool is_marker() const {
    return surface == kBeginMarker || surface == kEndMarker;
  }
  friend bool operator==(const RawToken &, const RawToken &) = default;
};

// Tokens bracketed by <S> at index 0 and </S> at the last index.
struct Sentence {
  std::vector<RawToken> tokens;

  // Number of tokens between the markers.
  std::size_t word_count() const {
    return tokens.size() >= 2 ? tokens.size() - 2 : 0;
  }
};

// Builds a bracketed sentence from bare surfaces; positions and flags are
// filled in.
Sentence make_sentence(const std::vector<std::string> &surfaces);

// Recomputes positions, sentence_initial and capitalized for every token.
void refresh_flags(Sentence &sentence);

// True when every byte of `s` is punctuation (ASCII or the guillemets and
// ellipsis), e.g. ",", "...", "«".
bool is_punctuation(std::string_view s);

// Configuration data for tokenization. Lists are plain-text files, one
// entry per line.
struct PreprocessConfig {
  std::set<std::string> abbreviations;  // "M.", "Mme.", ...
  std::set<std::string> clitics;        // pronouns split off after '-'
  std::set<std::string> elisions;       // "l", "qu", ... split after '\''
  std::set<std::string> compounds;      // transliterated, parts joined by '_'

  static PreprocessConfig defaults();
};

std::set<std::string> load_word_list(const std::filesystem::path &path);

// Splits text into sentences. Punctuation is tokenized separately, '.', '!',
// '?' and ellipses close a sentence (with any closing quote or bracket that
// follows), and so does a blank line. Surfaces stay in UTF-8.
std::vector<Sentence> segment_sentences(std::string_view text,
                                        const PreprocessConfig &config);
std::vector<Sentence> segment_sentences(std::string_view text);

// "dit-elle" -> "dit" "elle". Pronouns are peeled from the right while the
// last dash-separated part is in the clitic list.
std::vector<RawToken> split_clitics(const RawToken &token,
                                    const std::set<std::string> &clitics);
std::vector<RawToken> split_clitics(const RawToken &token);

// Joins runs of tokens listed as compounds ("bien" "que" -> "bien_que"),
// longest match first.
std::vector<RawToken> join_compounds(const std::vector<RawToken> &tokens,
                                     const std::set<std::string> &compounds);

// Whole preprocessing chain: segmentation, clitic splitting,
// transliteration to the 7-bit form, compound joining.
std::vector<Sentence> preprocess(std::string_view text,
                                 const PreprocessConfig &config);

// Token stream: one surface per line, <S>/</S> explicit, blank line after
// each sentence.
void write_token_stream(std::ostream &out,
                        const std::vector<Sentence> &sentences);

// Reads a token stream, or any line format whose first tab-separated field
// is the surface. Sentences end at a blank line or </S>; markers are added
// when absent.
std::vector<Sentence> read_token_stream(std::istream &in);

}  // namespace genotag

#endif  // GENOTAG_PREPROCESS_H_
