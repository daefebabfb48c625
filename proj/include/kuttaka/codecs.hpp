#pragma once

#include <array>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kuttaka/checked.hpp"

namespace kuttaka::codecs {

// Transliteration is ASCII, Harvard-Kyoto flavored. Tokens are matched
// longest-first; an apostrophe is an explicit token boundary, consumed by
// the tokenizer and emitted by renderers only where two adjacent tokens
// would otherwise read back as one. See docs/transliteration.md.

enum class TokenKind { kVarga, kAvarga, kVowel, kWhitespace, kUnknown };

struct Token {
    std::string text;
    TokenKind kind = TokenKind::kUnknown;
    i64 value = 0;       // consonant value or vowel place multiplier
    std::size_t index = 0;   // 1-based position in the token stream
    std::size_t offset = 0;  // byte offset in the source text
};

std::vector<Token> tokenize(std::string_view text);

/// Joins token texts, inserting an apostrophe wherever the concatenation
/// would re-tokenize across a boundary.
std::string render_tokens(const std::vector<Token>& tokens);

/// One or more consonants bound to the vowel that follows them.
struct Syllable {
    std::vector<Token> consonants;
    Token vowel;
    i64 value() const;  // (sum of consonant values) * vowel place
};

std::vector<Syllable> parse_syllables(std::string_view text);
std::string render_syllables(const std::vector<Syllable>& syllables);

enum class SyllableOrder { kDescending, kAscending };

/// Sum of syllable values; syllable order is irrelevant.
i64 aryabhata_decode(std::string_view text);

/// Canonical letter encoding of n in [1, 10^18). Default order puts the
/// highest place first.
std::string aryabhata_encode(i64 n, SyllableOrder order = SyllableOrder::kDescending);
std::vector<Syllable> aryabhata_encode_syllables(i64 n, SyllableOrder order);

struct KatapayadiTable {
    enum class Letters { kHarvardKyoto, kLatin };

    std::string name;
    Letters letters = Letters::kHarvardKyoto;
    std::unordered_map<std::string, int> digit_of;        // consonant -> digit
    std::array<std::vector<std::string>, 10> preimages;   // digit -> consonants, row order
    std::string default_vowel;

    static const KatapayadiTable& sanskrit();
    static const KatapayadiTable& english();
    static const KatapayadiTable& by_name(std::string_view name);
};

/// One digit per mapped consonant, left to right as written; vowels and
/// unmapped tokens contribute nothing. Throws EmptyDecodeError when no
/// mapped consonant is present.
std::string katapayadi_decode(std::string_view word, const KatapayadiTable& table);

using KatapayadiChooser = std::function<std::string(int digit, const std::vector<std::string>& options)>;

/// Deterministic word for a digit string: one consonant per digit via the
/// chooser (default: first table row), the table's default vowel between
/// consecutive consonants.
std::string katapayadi_encode(std::string_view digits, const KatapayadiTable& table,
                              const KatapayadiChooser& chooser = {});

/// Involutory letter-pair substitution. Letters absent from all pairs map
/// to themselves.
class ReciprocalCipher {
public:
    ReciprocalCipher();  // the ten classical pairs
    explicit ReciprocalCipher(const std::vector<std::pair<std::string, std::string>>& pairs);

    static const std::vector<std::pair<std::string, std::string>>& default_pairs();

    /// Partner of a letter token, or nullptr when unpaired.
    const std::string* partner(const std::string& symbol) const;

private:
    std::unordered_map<std::string, std::string> map_;
};

std::vector<Token> mula_apply_tokens(std::vector<Token> tokens, const ReciprocalCipher& cipher,
                                     bool strict = false);
std::string mula_apply(std::string_view text, const ReciprocalCipher& cipher = ReciprocalCipher{},
                       bool strict = false);

}  // namespace kuttaka::codecs
