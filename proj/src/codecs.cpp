#include "kuttaka/codecs.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace kuttaka::codecs {
namespace {

struct TokenDef {
    const char* sym;
    TokenKind kind;
    i64 value;
};

// Varga consonants count 1..25, avarga consonants jump by tens, vowels carry
// the place multiplier for the two-digit group they close.
constexpr TokenDef kTokenDefs[] = {
    {"k", TokenKind::kVarga, 1},    {"kh", TokenKind::kVarga, 2},
    {"g", TokenKind::kVarga, 3},    {"gh", TokenKind::kVarga, 4},
    {"G", TokenKind::kVarga, 5},    {"c", TokenKind::kVarga, 6},
    {"ch", TokenKind::kVarga, 7},   {"j", TokenKind::kVarga, 8},
    {"jh", TokenKind::kVarga, 9},   {"J", TokenKind::kVarga, 10},
    {"T", TokenKind::kVarga, 11},   {"Th", TokenKind::kVarga, 12},
    {"D", TokenKind::kVarga, 13},   {"Dh", TokenKind::kVarga, 14},
    {"N", TokenKind::kVarga, 15},   {"t", TokenKind::kVarga, 16},
    {"th", TokenKind::kVarga, 17},  {"d", TokenKind::kVarga, 18},
    {"dh", TokenKind::kVarga, 19},  {"n", TokenKind::kVarga, 20},
    {"p", TokenKind::kVarga, 21},   {"ph", TokenKind::kVarga, 22},
    {"b", TokenKind::kVarga, 23},   {"bh", TokenKind::kVarga, 24},
    {"m", TokenKind::kVarga, 25},

    {"y", TokenKind::kAvarga, 30},  {"r", TokenKind::kAvarga, 40},
    {"l", TokenKind::kAvarga, 50},  {"v", TokenKind::kAvarga, 60},
    {"z", TokenKind::kAvarga, 70},  {"S", TokenKind::kAvarga, 80},
    {"s", TokenKind::kAvarga, 90},  {"h", TokenKind::kAvarga, 100},

    {"a", TokenKind::kVowel, 1LL},
    {"i", TokenKind::kVowel, 100LL},
    {"u", TokenKind::kVowel, 10000LL},
    {"R", TokenKind::kVowel, 1000000LL},
    {"lR", TokenKind::kVowel, 100000000LL},
    {"e", TokenKind::kVowel, 10000000000LL},
    {"ai", TokenKind::kVowel, 1000000000000LL},
    {"o", TokenKind::kVowel, 100000000000000LL},
    {"au", TokenKind::kVowel, 10000000000000000LL},
};

const std::unordered_map<std::string_view, const TokenDef*>& symbol_table() {
    static const auto* table = [] {
        auto* map = new std::unordered_map<std::string_view, const TokenDef*>;
        for (const TokenDef& def : kTokenDefs) map->emplace(def.sym, &def);
        return map;
    }();
    return *table;
}

const TokenDef* find_def(std::string_view sym) {
    const auto& table = symbol_table();
    const auto it = table.find(sym);
    return it == table.end() ? nullptr : it->second;
}

Token make_token(const TokenDef& def, std::size_t index, std::size_t offset) {
    return Token{def.sym, def.kind, def.value, index, offset};
}

bool is_space_char(char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; }

// True when the concatenation of two token texts would not read back as the
// first token followed by the second.
bool needs_separator(const Token& prev, const Token& next) {
    if (prev.kind == TokenKind::kWhitespace || next.kind == TokenKind::kWhitespace) return false;
    const std::vector<Token> reread = tokenize(prev.text + next.text);
    return reread.empty() || reread.front().text != prev.text;
}

const TokenDef& varga_def(int value) { return kTokenDefs[value - 1]; }  // 1..25

const TokenDef& avarga_def(int tens_value) {  // 30, 40, ..., 100
    return kTokenDefs[25 + (tens_value / 10 - 3)];
}

const TokenDef& vowel_def(int group) {  // 0..8
    return kTokenDefs[33 + group];
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\'') {  // explicit token boundary, not a token itself
            ++i;
            continue;
        }
        if (is_space_char(ch)) {
            out.push_back(Token{std::string(1, ch), TokenKind::kWhitespace, 0, out.size() + 1, i});
            ++i;
            continue;
        }
        const TokenDef* def = nullptr;
        std::size_t len = 1;
        if (i + 1 < text.size()) {
            def = find_def(text.substr(i, 2));
            if (def) len = 2;
        }
        if (!def) def = find_def(text.substr(i, 1));
        if (def) {
            out.push_back(make_token(*def, out.size() + 1, i));
            i += len;
        } else {
            out.push_back(Token{std::string(1, ch), TokenKind::kUnknown, 0, out.size() + 1, i});
            ++i;
        }
    }
    return out;
}

std::string render_tokens(const std::vector<Token>& tokens) {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0 && needs_separator(tokens[i - 1], tokens[i])) out += '\'';
        out += tokens[i].text;
    }
    return out;
}

i64 Syllable::value() const {
    i64 sum = 0;
    for (const Token& tok : consonants) sum = checked_add(sum, tok.value);
    return checked_mul(sum, vowel.value);
}

std::vector<Syllable> parse_syllables(std::string_view text) {
    const std::vector<Token> tokens = tokenize(text);
    std::vector<Syllable> syllables;
    std::vector<Token> pending;
    for (const Token& tok : tokens) {
        switch (tok.kind) {
            case TokenKind::kVarga:
            case TokenKind::kAvarga:
                pending.push_back(tok);
                break;
            case TokenKind::kVowel:
                if (pending.empty())
                    throw ParseError("vowel '" + tok.text + "' with no preceding consonant",
                                     static_cast<long long>(tok.index));
                syllables.push_back(Syllable{std::move(pending), tok});
                pending.clear();
                break;
            case TokenKind::kWhitespace:
                if (!pending.empty())
                    throw ParseError("whitespace splits a syllable",
                                     static_cast<long long>(tok.index));
                break;
            case TokenKind::kUnknown:
                throw ParseError("unknown token '" + tok.text + "'",
                                 static_cast<long long>(tok.index));
        }
    }
    if (!pending.empty())
        throw ParseError("trailing consonant '" + pending.back().text + "' with no vowel",
                         static_cast<long long>(pending.back().index));
    return syllables;
}

std::string render_syllables(const std::vector<Syllable>& syllables) {
    std::vector<Token> tokens;
    for (const Syllable& syl : syllables) {
        tokens.insert(tokens.end(), syl.consonants.begin(), syl.consonants.end());
        tokens.push_back(syl.vowel);
    }
    return render_tokens(tokens);
}

i64 aryabhata_decode(std::string_view text) {
    i64 total = 0;
    for (const Syllable& syl : parse_syllables(text)) total = checked_add(total, syl.value());
    return total;
}

std::vector<Syllable> aryabhata_encode_syllables(i64 n, SyllableOrder order) {
    if (n < 1) throw RangeError("no letter encodes zero; n must be >= 1");
    if (n >= kMagnitudeBound) throw RangeError("n must be below 10^18");

    int groups[9] = {};
    i64 rest = n;
    for (int k = 0; k < 9; ++k) {
        groups[k] = static_cast<int>(rest % 100);
        rest /= 100;
    }

    std::vector<Syllable> syllables;
    for (int k = 8; k >= 0; --k) {
        const int d = groups[k];
        if (d == 0) continue;
        const Token vowel = make_token(vowel_def(k), 0, 0);
        if (d <= 25) {
            syllables.push_back(Syllable{{make_token(varga_def(d), 0, 0)}, vowel});
        } else if (d < 30) {
            // No single letter reaches 26..29; split across two varga
            // letters sharing the vowel, largest letter first.
            syllables.push_back(
                Syllable{{make_token(varga_def(25), 0, 0), make_token(varga_def(d - 25), 0, 0)},
                         vowel});
        } else {
            syllables.push_back(Syllable{{make_token(avarga_def(d / 10 * 10), 0, 0)}, vowel});
            if (d % 10 != 0)
                syllables.push_back(Syllable{{make_token(varga_def(d % 10), 0, 0)}, vowel});
        }
    }
    if (order == SyllableOrder::kAscending) std::reverse(syllables.begin(), syllables.end());
    return syllables;
}

std::string aryabhata_encode(i64 n, SyllableOrder order) {
    return render_syllables(aryabhata_encode_syllables(n, order));
}

namespace {

KatapayadiTable build_table(std::string name, KatapayadiTable::Letters letters,
                            const std::vector<std::vector<const char*>>& rows,
                            std::string default_vowel) {
    KatapayadiTable table;
    table.name = std::move(name);
    table.letters = letters;
    table.default_vowel = std::move(default_vowel);
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            const int digit = static_cast<int>((i + 1) % 10);
            table.digit_of.emplace(row[i], digit);
            table.preimages[digit].push_back(row[i]);
        }
    }
    return table;
}

}  // namespace

const KatapayadiTable& KatapayadiTable::sanskrit() {
    static const KatapayadiTable table = build_table(
        "sanskrit", Letters::kHarvardKyoto,
        {{"k", "kh", "g", "gh", "G", "c", "ch", "j", "jh", "J"},
         {"T", "Th", "D", "Dh", "N", "t", "th", "d", "dh", "n"},
         {"p", "ph", "b", "bh", "m"},
         {"y", "r", "l", "v", "z", "S", "s", "h"}},
        "a");
    return table;
}

const KatapayadiTable& KatapayadiTable::english() {
    static const KatapayadiTable table = build_table(
        "english", Letters::kLatin,
        {{"b", "c", "d", "f", "g", "h", "j", "k", "l", "m"},
         {"n", "p", "q", "r", "s", "t", "v", "w", "x", "y"},
         {"z"}},
        "o");
    return table;
}

const KatapayadiTable& KatapayadiTable::by_name(std::string_view name) {
    if (name == "sanskrit") return sanskrit();
    if (name == "english") return english();
    throw std::invalid_argument("unknown katapayadi table: " + std::string(name));
}

std::string katapayadi_decode(std::string_view word, const KatapayadiTable& table) {
    std::string digits;
    if (table.letters == KatapayadiTable::Letters::kHarvardKyoto) {
        for (const Token& tok : tokenize(word)) {
            if (tok.kind != TokenKind::kVarga && tok.kind != TokenKind::kAvarga) continue;
            const auto it = table.digit_of.find(tok.text);
            if (it != table.digit_of.end()) digits += static_cast<char>('0' + it->second);
        }
    } else {
        for (char ch : word) {
            const char low = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            const auto it = table.digit_of.find(std::string(1, low));
            if (it != table.digit_of.end()) digits += static_cast<char>('0' + it->second);
        }
    }
    if (digits.empty()) throw EmptyDecodeError("no mapped consonant in input");
    return digits;
}

std::string katapayadi_encode(std::string_view digits, const KatapayadiTable& table,
                              const KatapayadiChooser& chooser) {
    if (digits.empty()) throw std::invalid_argument("digit string is empty");
    std::string word;
    bool first = true;
    for (char dc : digits) {
        if (dc < '0' || dc > '9')
            throw std::invalid_argument("digit string may contain only 0-9");
        const int digit = dc - '0';
        const std::vector<std::string>& options = table.preimages[digit];
        const std::string sym = chooser ? chooser(digit, options) : options.front();
        if (std::find(options.begin(), options.end(), sym) == options.end())
            throw std::invalid_argument("chooser returned '" + sym + "' which does not map to " +
                                        std::string(1, dc));
        if (!first) word += table.default_vowel;
        word += sym;
        first = false;
    }
    return word;
}

const std::vector<std::pair<std::string, std::string>>& ReciprocalCipher::default_pairs() {
    static const std::vector<std::pair<std::string, std::string>> pairs = {
        {"a", "k"}, {"kh", "g"}, {"gh", "G"}, {"c", "T"}, {"t", "p"},
        {"J", "N"}, {"n", "m"},  {"r", "S"},  {"l", "s"}, {"y", "z"}};
    return pairs;
}

ReciprocalCipher::ReciprocalCipher() : ReciprocalCipher(default_pairs()) {}

ReciprocalCipher::ReciprocalCipher(const std::vector<std::pair<std::string, std::string>>& pairs) {
    for (const auto& [lhs, rhs] : pairs) {
        for (const std::string& sym : {lhs, rhs}) {
            const TokenDef* def = find_def(sym);
            if (!def) throw std::invalid_argument("'" + sym + "' is not a letter token");
            if (map_.count(sym))
                throw std::invalid_argument("token '" + sym + "' appears in two pairs");
        }
        if (lhs == rhs) throw std::invalid_argument("token '" + lhs + "' paired with itself");
        map_.emplace(lhs, rhs);
        map_.emplace(rhs, lhs);
    }
}

const std::string* ReciprocalCipher::partner(const std::string& symbol) const {
    const auto it = map_.find(symbol);
    return it == map_.end() ? nullptr : &it->second;
}

std::vector<Token> mula_apply_tokens(std::vector<Token> tokens, const ReciprocalCipher& cipher,
                                     bool strict) {
    for (Token& tok : tokens) {
        if (tok.kind == TokenKind::kWhitespace) continue;
        if (tok.kind == TokenKind::kUnknown) {
            if (strict)
                throw UnknownTokenError("unknown token '" + tok.text + "'",
                                        static_cast<long long>(tok.index));
            continue;
        }
        if (const std::string* p = cipher.partner(tok.text)) {
            const TokenDef* def = find_def(*p);
            tok.text = def->sym;
            tok.kind = def->kind;
            tok.value = def->value;
        }
    }
    return tokens;
}

std::string mula_apply(std::string_view text, const ReciprocalCipher& cipher, bool strict) {
    return render_tokens(mula_apply_tokens(tokenize(text), cipher, strict));
}

}  // namespace kuttaka::codecs
