#include "genotag/preprocess.h"

#include <algorithm>
#include <cctype>
#include <map>

#include "genotag/text_util.h"
#include "genotag/translit.h"

namespace genotag {

namespace {

constexpr std::string_view kRightQuote = "\xE2\x80\x99";  // ’
constexpr std::string_view kOpenGuillemet = "\xC2\xAB";   // «
constexpr std::string_view kCloseGuillemet = "\xC2\xBB";  // »
constexpr std::string_view kEllipsis = "\xE2\x80\xA6";    // …
constexpr std::string_view kNbsp = "\xC2\xA0";

bool is_terminal(std::string_view t) {
  return t == "." || t == "!" || t == "?" || t == "..." || t == kEllipsis;
}

bool is_closer(std::string_view t) {
  return t == ")" || t == "]" || t == "\"" || t == kCloseGuillemet;
}

bool is_upper_utf8(std::string_view s) {
  if (s.empty()) return false;
  auto b0 = static_cast<unsigned char>(s[0]);
  if (b0 < 0x80) return std::isupper(b0) != 0;
  if (s.size() < 2) return false;
  auto b1 = static_cast<unsigned char>(s[1]);
  if (b0 == 0xC3) return b1 >= 0x80 && b1 <= 0x9E && b1 != 0x97;
  return b0 == 0xC5 && b1 == 0xB8;  // Ÿ
}

std::string replace_all(std::string s, std::string_view from,
                        std::string_view to) {
  std::size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
  return s;
}

// Breaks one whitespace-delimited chunk into tokens.
std::vector<std::string> tokenize_chunk(std::string chunk,
                                        const PreprocessConfig &config) {
  chunk = replace_all(std::move(chunk), kRightQuote, "'");
  std::vector<std::string> out;
  std::string_view core = chunk;

  for (;;) {
    if (core.starts_with(kOpenGuillemet)) {
      out.emplace_back(kOpenGuillemet);
      core.remove_prefix(kOpenGuillemet.size());
    } else if (!core.empty() &&
               std::string_view("([\"").find(core.front()) !=
                   std::string_view::npos) {
      out.emplace_back(1, core.front());
      core.remove_prefix(1);
    } else {
      break;
    }
  }

  std::vector<std::string> trailing;
  while (!core.empty()) {
    if (config.abbreviations.count(std::string(core))) break;
    if (core.size() > 3 && core.ends_with("...")) {
      trailing.emplace_back("...");
      core.remove_suffix(3);
    } else if (core == "...") {
      break;
    } else if (core.ends_with(kEllipsis) && core.size() > kEllipsis.size()) {
      trailing.emplace_back(kEllipsis);
      core.remove_suffix(kEllipsis.size());
    } else if (core.ends_with(kCloseGuillemet) &&
               core.size() > kCloseGuillemet.size()) {
      trailing.emplace_back(kCloseGuillemet);
      core.remove_suffix(kCloseGuillemet.size());
    } else if (core.size() > 1 &&
               std::string_view(".,;:!?)]\"").find(core.back()) !=
                   std::string_view::npos) {
      trailing.emplace_back(1, core.back());
      core.remove_suffix(1);
    } else {
      break;
    }
  }

  // Elided articles and pronouns: "l'appelle" -> "l'" "appelle".
  for (;;) {
    std::size_t apos = core.find('\'');
    if (apos == std::string_view::npos || apos == 0 ||
        apos + 1 >= core.size())
      break;
    std::string prefix = ascii_lower(core.substr(0, apos));
    if (!config.elisions.count(prefix)) break;
    out.emplace_back(core.substr(0, apos + 1));
    core.remove_prefix(apos + 1);
  }

  if (!core.empty()) out.emplace_back(core);
  out.insert(out.end(), trailing.rbegin(), trailing.rend());
  return out;
}

RawToken marker(std::string_view s) { return RawToken{std::string(s)}; }

class SentenceBuilder {
 public:
  explicit SentenceBuilder(std::vector<Sentence> &out) : out_(out) {}

  void add(std::string token) {
    if (pending_close_) {
      if (is_closer(token) || is_terminal(token)) {
        words_.push_back(std::move(token));
        return;
      }
      close();
    }
    pending_close_ = is_terminal(token);
    words_.push_back(std::move(token));
  }

  void close() {
    pending_close_ = false;
    if (words_.empty()) return;
    out_.push_back(make_sentence(words_));
    words_.clear();
  }

 private:
  std::vector<Sentence> &out_;
  std::vector<std::string> words_;
  bool pending_close_ = false;
};

}  // namespace

bool is_punctuation(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  while (i < s.size()) {
    std::string_view rest = s.substr(i);
    if (rest.starts_with(kOpenGuillemet) || rest.starts_with(kCloseGuillemet)) {
      i += 2;
    } else if (rest.starts_with(kEllipsis)) {
      i += kEllipsis.size();
    } else if (std::ispunct(static_cast<unsigned char>(s[i]))) {
      ++i;
    } else {
      return false;
    }
  }
  return true;
}

void refresh_flags(Sentence &sentence) {
  bool seen_word = false;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    RawToken &t = sentence.tokens[i];
    t.position = i;
    t.sentence_initial = false;
    t.capitalized = false;
    if (t.is_marker()) continue;
    t.capitalized = is_upper_utf8(t.surface);
    if (!seen_word && !is_punctuation(t.surface)) {
      t.sentence_initial = true;
      seen_word = true;
    }
  }
}

Sentence make_sentence(const std::vector<std::string> &surfaces) {
  Sentence s;
  s.tokens.reserve(surfaces.size() + 2);
  s.tokens.push_back(marker(kBeginMarker));
  for (const auto &w : surfaces) s.tokens.push_back(RawToken{w});
  s.tokens.push_back(marker(kEndMarker));
  refresh_flags(s);
  return s;
}

PreprocessConfig PreprocessConfig::defaults() {
  PreprocessConfig c;
  c.abbreviations = {"M.",   "MM.",  "Mme.", "Mmes.", "Mlle.", "Mlles.",
                     "Dr.",  "Pr.",  "Me.",  "Mgr.",  "St.",   "Ste.",
                     "etc.", "cf.",  "p.",   "av.",   "bd.",   "art.",
                     "no.",  "vol.", "env.", "ex.",   "fig.",  "chap."};
  c.clitics = {"je",  "tu", "il",  "elle", "on",  "nous", "vous", "ils", "elles",
               "ce",  "t",  "moi", "toi",  "le",  "la",   "lui",  "y",   "en"};
  c.elisions = {"l",  "d",     "j",      "m",      "n",      "s",     "t",
                "c",  "qu",    "jusqu",  "lorsqu", "puisqu", "quoiqu"};
  return c;
}

std::set<std::string> load_word_list(const std::filesystem::path &path) {
  auto in = open_input(path);
  std::set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    chomp(line);
    if (is_comment_or_blank(line)) continue;
    words.emplace(trim(line));
  }
  return words;
}

std::vector<Sentence> segment_sentences(std::string_view text,
                                        const PreprocessConfig &config) {
  std::vector<Sentence> out;
  SentenceBuilder builder(out);
  for (std::string_view raw_line : split(text, '\n')) {
    std::string line = replace_all(std::string(raw_line), kNbsp, " ");
    auto chunks = split_ws(line);
    if (chunks.empty()) {
      builder.close();  // paragraph break
      continue;
    }
    for (std::string_view chunk : chunks) {
      for (auto &tok : tokenize_chunk(std::string(chunk), config)) {
        builder.add(std::move(tok));
      }
    }
  }
  builder.close();
  return out;
}

std::vector<Sentence> segment_sentences(std::string_view text) {
  return segment_sentences(text, PreprocessConfig::defaults());
}

std::vector<RawToken> split_clitics(const RawToken &token,
                                    const std::set<std::string> &clitics) {
  std::vector<RawToken> peeled;
  std::string head = token.surface;
  for (;;) {
    std::size_t dash = head.rfind('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 >= head.size())
      break;
    std::string right = head.substr(dash + 1);
    if (!clitics.count(ascii_lower(right))) break;
    RawToken piece = token;
    piece.surface = right;
    piece.sentence_initial = false;
    piece.capitalized = is_upper_utf8(right);
    peeled.push_back(std::move(piece));
    head.resize(dash);
  }
  if (peeled.empty()) return {token};

  std::vector<RawToken> out;
  RawToken first = token;
  first.surface = head;
  out.push_back(std::move(first));
  out.insert(out.end(), peeled.rbegin(), peeled.rend());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].position = token.position + i;
  }
  return out;
}

std::vector<RawToken> split_clitics(const RawToken &token) {
  static const std::set<std::string> clitics =
      PreprocessConfig::defaults().clitics;
  return split_clitics(token, clitics);
}

std::vector<RawToken> join_compounds(const std::vector<RawToken> &tokens,
                                     const std::set<std::string> &compounds) {
  std::size_t longest = 0;
  for (const auto &c : compounds) {
    longest = std::max<std::size_t>(
        longest, std::count(c.begin(), c.end(), '_') + 1);
  }

  std::vector<RawToken> out;
  std::size_t i = 0;
  while (i < tokens.size()) {
    std::size_t matched = 0;
    std::string joined_surface;
    if (!tokens[i].is_marker()) {
      std::size_t max_len = std::min(longest, tokens.size() - i);
      for (std::size_t len = max_len; len >= 2 && !matched; --len) {
        std::string joined = tokens[i].surface;
        bool ok = true;
        for (std::size_t k = 1; k < len; ++k) {
          if (tokens[i + k].is_marker()) {
            ok = false;
            break;
          }
          joined += '_';
          joined += tokens[i + k].surface;
        }
        if (!ok) continue;
        std::string lowered_head = joined;
        if (tokens[i].sentence_initial && !lowered_head.empty()) {
          lowered_head[0] = static_cast<char>(
              std::tolower(static_cast<unsigned char>(lowered_head[0])));
        }
        if (compounds.count(joined) || compounds.count(lowered_head)) {
          matched = len;
          joined_surface = std::move(joined);
        }
      }
    }
    if (matched) {
      RawToken t = tokens[i];
      t.surface = std::move(joined_surface);
      out.push_back(std::move(t));
      i += matched;
    } else {
      out.push_back(tokens[i]);
      ++i;
    }
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k].position = k;
  return out;
}

std::vector<Sentence> preprocess(std::string_view text,
                                 const PreprocessConfig &config) {
  std::vector<Sentence> sentences = segment_sentences(text, config);
  for (Sentence &s : sentences) {
    std::vector<RawToken> split_tokens;
    for (const RawToken &t : s.tokens) {
      if (t.is_marker()) {
        split_tokens.push_back(t);
        continue;
      }
      for (RawToken &piece : split_clitics(t, config.clitics)) {
        piece.surface = transliterate(piece.surface);
        split_tokens.push_back(std::move(piece));
      }
    }
    s.tokens = std::move(split_tokens);
    refresh_flags(s);
    s.tokens = join_compounds(s.tokens, config.compounds);
    refresh_flags(s);
  }
  return sentences;
}

void write_token_stream(std::ostream &out,
                        const std::vector<Sentence> &sentences) {
  for (const Sentence &s : sentences) {
    for (const RawToken &t : s.tokens) out << t.surface << '\n';
    out << '\n';
  }
}

std::vector<Sentence> read_token_stream(std::istream &in) {
  std::vector<Sentence> out;
  std::vector<std::string> words;
  auto flush = [&] {
    if (!words.empty()) out.push_back(make_sentence(words));
    words.clear();
  };
  std::string line;
  while (std::getline(in, line)) {
    chomp(line);
    std::string_view surface = trim(split(line, '\t').front());
    if (surface.empty() || surface == kEndMarker) {
      flush();
    } else if (surface != kBeginMarker) {
      words.emplace_back(surface);
    }
  }
  flush();
  return out;
}

}  // namespace genotag
