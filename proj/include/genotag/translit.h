#ifndef GENOTAG_TRANSLIT_H_
#define GENOTAG_TRANSLIT_H_

#include <string>
#include <string_view>
#include <vector>

namespace genotag {

// One accented letter and its 7-bit spelling: base letter followed by a
// marker (' acute, ` grave, ^ circumflex, " diaeresis, , cedilla).
struct AccentEntry {
  std::string_view utf8;
  char base;
  char marker;
};

// Every accented letter the transliteration knows, lower and upper case.
const std::vector<AccentEntry> &accent_table();

// UTF-8 to the 7-bit form: "côtés" -> "co^te's". Bytes outside the table
// pass through unchanged.
std::string transliterate(std::string_view word);

// Inverse of transliterate. A marker is only consumed when it completes a
// pair in the table, so apostrophes after consonants ("l'") survive.
std::string detransliterate(std::string_view word);

// Recovers the accent a capital letter lost: "A" -> "À", "Etre" -> "Être",
// and E followed by a consonant (or listed cluster) and a vowel takes an
// acute accent ("Ecole" -> "École"). Works on UTF-8 text; other words are
// returned unchanged.
std::string restore_accents(std::string_view word);

// Checks the apostrophe convention of a 7-bit surface: every apostrophe
// must follow a consonant, close an acute pair ("e'"), or close the elided
// "qu'". Anything else would read back as an accent mark.
bool apostrophes_unambiguous(std::string_view surface);

// ASCII case helpers for 7-bit surfaces.
std::string ascii_lower(std::string_view s);
bool starts_upper(std::string_view s);
// At least two letters and no lowercase letter ("SNCF").
bool all_caps(std::string_view s);

}  // namespace genotag

#endif  // GENOTAG_TRANSLIT_H_
