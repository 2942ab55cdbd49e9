#include "genotag/translit.h"

#include <algorithm>
#include <array>
#include <cctype>

namespace genotag {

const std::vector<AccentEntry> &accent_table() {
  static const std::vector<AccentEntry> table = {
      {"à", 'a', '`'}, {"â", 'a', '^'}, {"ç", 'c', ','}, {"é", 'e', '\''},
      {"è", 'e', '`'}, {"ê", 'e', '^'}, {"ë", 'e', '"'}, {"î", 'i', '^'},
      {"ï", 'i', '"'}, {"ô", 'o', '^'}, {"ù", 'u', '`'}, {"û", 'u', '^'},
      {"ü", 'u', '"'}, {"ÿ", 'y', '"'}, {"À", 'A', '`'}, {"Â", 'A', '^'},
      {"Ç", 'C', ','}, {"É", 'E', '\''}, {"È", 'E', '`'}, {"Ê", 'E', '^'},
      {"Ë", 'E', '"'}, {"Î", 'I', '^'}, {"Ï", 'I', '"'}, {"Ô", 'O', '^'},
      {"Ù", 'U', '`'}, {"Û", 'U', '^'}, {"Ü", 'U', '"'}, {"Ÿ", 'Y', '"'},
  };
  return table;
}

std::string transliterate(std::string_view word) {
  const auto &table = accent_table();
  std::string out;
  out.reserve(word.size() + 4);
  std::size_t i = 0;
  while (i < word.size()) {
    auto hit = std::find_if(table.begin(), table.end(), [&](const auto &e) {
      return word.substr(i, e.utf8.size()) == e.utf8;
    });
    if (hit != table.end()) {
      out += hit->base;
      out += hit->marker;
      i += hit->utf8.size();
    } else {
      out += word[i++];
    }
  }
  return out;
}

std::string detransliterate(std::string_view word) {
  const auto &table = accent_table();
  std::string out;
  out.reserve(word.size());
  std::size_t i = 0;
  while (i < word.size()) {
    if (i + 1 < word.size()) {
      auto hit = std::find_if(table.begin(), table.end(), [&](const auto &e) {
        return e.base == word[i] && e.marker == word[i + 1];
      });
      if (hit != table.end()) {
        out += hit->utf8;
        i += 2;
        continue;
      }
    }
    out += word[i++];
  }
  return out;
}

namespace {

constexpr std::array<std::string_view, 37> kEcvConsonants = {
    "bl", "br", "ch", "cl", "cr", "dl", "dr", "fl", "fr", "gl", "gr", "ph",
    "pl", "pr", "sl", "sr", "tl", "tr", "vl", "vr", "b",  "c",  "d",  "f",
    "g",  "h",  "j",  "l",  "m",  "n",  "p",  "q",  "r",  "s",  "t",  "v",  "z"};

bool is_ecv_vowel(char c) {
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool is_ascii_vowel(char c) {
  return std::string_view("aeiouyAEIOUY").find(c) != std::string_view::npos;
}

}  // namespace

std::string restore_accents(std::string_view word) {
  if (word == "A") return "À";
  if (word.size() == 4 && word[0] == 'E' &&
      ascii_lower(word.substr(1)) == "tre") {
    return "Ê" + std::string(word.substr(1));
  }
  if (word.size() < 3 || word[0] != 'E') return std::string(word);

  std::string rest = ascii_lower(word.substr(1));
  // Two-letter clusters come first in the list so "Ech..." is tried as
  // "ch" + vowel before "c" + 'h'.
  for (std::string_view cons : kEcvConsonants) {
    if (rest.size() > cons.size() && rest.compare(0, cons.size(), cons) == 0 &&
        is_ecv_vowel(rest[cons.size()])) {
      return "É" + std::string(word.substr(1));
    }
  }
  return std::string(word);
}

bool apostrophes_unambiguous(std::string_view s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] != '\'') continue;
    char prev = s[i - 1];
    if (prev == 'e' || prev == 'E') continue;  // acute pair
    if ((prev == 'u' || prev == 'U') && i >= 2 &&
        (s[i - 2] == 'q' || s[i - 2] == 'Q')) {
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(prev)) && !is_ascii_vowel(prev))
      continue;
    return false;
  }
  return true;
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char &c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool starts_upper(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0]));
}

bool all_caps(std::string_view s) {
  int letters = 0;
  for (char c : s) {
    auto u = static_cast<unsigned char>(c);
    if (std::islower(u)) return false;
    if (std::isupper(u)) ++letters;
  }
  return letters >= 2;
}

}  // namespace genotag
