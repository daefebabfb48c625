// Independent reference computations used to cross-check the library.
// Everything here is deliberately written the slow, obvious way and shares
// no code with the implementation under test.
#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace testoracle {

using ll = long long;

struct Chain {
    std::vector<ll> quotients;
    std::vector<ll> remainders;
    ll gcd = 0;
};

// Quotient/remainder chain with each quotient found by repeated subtraction.
inline Chain division_chain_by_subtraction(ll a, ll b) {
    Chain ch;
    ll dividend = a, divisor = b;
    for (;;) {
        ll q = 0, r = dividend;
        while (r >= divisor) {
            r -= divisor;
            ++q;
        }
        ch.quotients.push_back(q);
        ch.remainders.push_back(r);
        if (r == 0) {
            ch.gcd = divisor;
            return ch;
        }
        dividend = divisor;
        divisor = r;
    }
}

// Minimal nonnegative x with a*x + c = b*y solvable, by exhaustive scan
// over one period. Small inputs only.
inline std::optional<std::pair<ll, ll>> brute_solve(ll a, ll c, ll b) {
    const ll g = std::gcd(a, b);
    for (ll x = 0; x < b / g; ++x) {
        const ll lhs = a * x + c;
        if (lhs % b == 0) return std::make_pair(x, lhs / b);
    }
    return std::nullopt;
}

// Folds a chain through the convergent recurrence instead of bottom-up
// rewriting: the leading entries build h/k convergents, the final two
// entries enter linearly.
inline std::pair<ll, ll> fold_via_convergents(const std::vector<ll>& e) {
    if (e.size() < 2) throw std::invalid_argument("need at least two entries");
    ll hp = 1, hpp = 0;  // h_{i-1}, h_{i-2}
    ll kp = 0, kpp = 1;
    for (std::size_t i = 0; i + 2 < e.size(); ++i) {
        const ll h = e[i] * hp + hpp;
        hpp = hp;
        hp = h;
        const ll k = e[i] * kp + kpp;
        kpp = kp;
        kp = k;
    }
    const ll t = e[e.size() - 2], q = e[e.size() - 1];
    return {hp * t + hpp * q, kp * t + kpp * q};
}

// Multiplicative inverse by full scan. Small moduli only.
inline ll inverse_by_scan(ll a, ll m) {
    const ll base = ((a % m) + m) % m;
    for (ll v = 1; v < m; ++v)
        if (base * v % m == 1) return v;
    throw std::runtime_error("no inverse exists");
}

// Least nonnegative solution of a congruence system by scanning [0, lcm).
inline std::optional<ll> congruence_by_scan(const std::vector<std::pair<ll, ll>>& rm) {
    ll lcm = 1;
    for (const auto& [r, m] : rm) lcm = lcm / std::gcd(lcm, m) * m;
    for (ll x = 0; x < lcm; ++x) {
        bool ok = true;
        for (const auto& [r, m] : rm)
            if (x % m != r % m) {
                ok = false;
                break;
            }
        if (ok) return x;
    }
    return std::nullopt;
}

// Hand-built positional reading of the letter numeral code. Independent
// tables, character-by-character scan, no shared tokenizer.
inline ll aryabhata_value_by_tables(const std::string& text) {
    static const std::map<std::string, ll> cons = {
        {"k", 1},   {"kh", 2},  {"g", 3},   {"gh", 4},  {"G", 5},  {"c", 6},  {"ch", 7},
        {"j", 8},   {"jh", 9},  {"J", 10},  {"T", 11},  {"Th", 12}, {"D", 13}, {"Dh", 14},
        {"N", 15},  {"t", 16},  {"th", 17}, {"d", 18},  {"dh", 19}, {"n", 20}, {"p", 21},
        {"ph", 22}, {"b", 23},  {"bh", 24}, {"m", 25},  {"y", 30},  {"r", 40}, {"l", 50},
        {"v", 60},  {"z", 70},  {"S", 80},  {"s", 90},  {"h", 100}};
    static const std::map<std::string, ll> vows = {
        {"a", 1LL},
        {"i", 100LL},
        {"u", 10000LL},
        {"R", 1000000LL},
        {"lR", 100000000LL},
        {"e", 10000000000LL},
        {"ai", 1000000000000LL},
        {"o", 100000000000000LL},
        {"au", 10000000000000000LL}};

    ll total = 0, run = 0;
    bool have_consonant = false;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\'' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
            ++i;
            continue;
        }
        const std::string two = text.substr(i, 2);
        const std::string one = text.substr(i, 1);
        if (auto it = cons.find(two); it != cons.end()) {
            run += it->second;
            have_consonant = true;
            i += 2;
        } else if (auto it2 = vows.find(two); it2 != vows.end()) {
            if (!have_consonant) throw std::runtime_error("oracle: vowel without consonant");
            total += run * it2->second;
            run = 0;
            have_consonant = false;
            i += 2;
        } else if (auto it3 = cons.find(one); it3 != cons.end()) {
            run += it3->second;
            have_consonant = true;
            i += 1;
        } else if (auto it4 = vows.find(one); it4 != vows.end()) {
            if (!have_consonant) throw std::runtime_error("oracle: vowel without consonant");
            total += run * it4->second;
            run = 0;
            have_consonant = false;
            i += 1;
        } else {
            throw std::runtime_error("oracle: unknown character");
        }
    }
    if (have_consonant) throw std::runtime_error("oracle: trailing consonant");
    return total;
}

}  // namespace testoracle
