// Acceptance suite: every check prints one PASS/FAIL line; the process
// exits 0 only when all of them pass.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "cli_app.hpp"
#include "json.hpp"
#include "kuttaka/codecs.hpp"
#include "kuttaka/congruence.hpp"
#include "kuttaka/pulverizer.hpp"
#include "oracles.hpp"

using namespace kuttaka;
using json = nlohmann::ordered_json;

namespace {

int failures = 0;

void check(int number, const std::string& what, const std::function<std::string()>& body) {
    std::string detail;
    try {
        detail = body();
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
        std::cout << "PASS criterion " << number << ": " << what << "\n";
    } else {
        ++failures;
        std::cout << "FAIL criterion " << number << ": " << what << " -- " << detail << "\n";
    }
}

template <typename T>
std::string expect_eq(const T& got, const T& want, const std::string& label) {
    if (got == want) return {};
    std::ostringstream msg;
    msg << label << ": got " << got << ", want " << want;
    return msg.str();
}

const std::vector<std::string>& letter_symbols() {
    static const std::vector<std::string> syms = {
        "k", "kh", "g", "gh", "G", "c", "ch", "j", "jh", "J", "T", "Th", "D", "Dh",
        "N", "t",  "th", "d",  "dh", "n", "p",  "ph", "b",  "bh", "m", "y", "r",  "l",
        "v", "z",  "S",  "s",  "h",  "a", "i",  "u",  "R",  "lR", "e", "ai", "o", "au"};
    return syms;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string source_dir = argc > 1 ? argv[1] : KUTTAKA_SOURCE_DIR;
    const std::string fixtures = source_dir + "/fixtures/paper_vectors.json";

    check(1, "worked example 137x + 10 = 60y", [] {
        using clock = std::chrono::steady_clock;
        std::vector<long long> ns;
        Solution sol;
        for (int i = 0; i < 101; ++i) {
            const auto t0 = clock::now();
            sol = solve(Equation{137, 60, 10});
            const auto t1 = clock::now();
            ns.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        }
        if (auto d = expect_eq<i64>(sol.x_raw, 130, "x_raw"); !d.empty()) return d;
        if (auto d = expect_eq<i64>(sol.y_raw, 297, "y_raw"); !d.empty()) return d;
        if (auto d = expect_eq<i64>(sol.x_min, 10, "x_min"); !d.empty()) return d;
        if (auto d = expect_eq<i64>(sol.y_min, 23, "y_min"); !d.empty()) return d;
        if (137 * sol.x_min + 10 != 60 * sol.y_min) return std::string("minimal pair inexact");
        std::nth_element(ns.begin(), ns.begin() + ns.size() / 2, ns.end());
        const long long median = ns[ns.size() / 2];
        if (median >= 1000000) return "median runtime " + std::to_string(median) + " ns >= 1 ms";
        return std::string{};
    });

    check(2, "inverses 137^-1 mod 60 = 53 and 60^-1 mod 137 = 16", [] {
        if (auto d = expect_eq<i64>(congruence::mod_inverse(137, 60), 53, "137^-1 mod 60");
            !d.empty())
            return d;
        return expect_eq<i64>(congruence::mod_inverse(60, 137), 16, "60^-1 mod 137");
    });

    check(3, "congruence pairs give 1380 and 1385", [] {
        const auto a = congruence::solve_pair({0, 60}, {10, 137});
        if (auto d = expect_eq<i64>(a.value, 1380, "pair (0 mod 60, 10 mod 137)"); !d.empty())
            return d;
        const auto b = congruence::solve_pair({5, 60}, {15, 137});
        return expect_eq<i64>(b.value, 1385, "pair (5 mod 60, 15 mod 137)");
    });

    check(4, "codec vectors decode exactly", [] {
        for (const char* text : {"yijivaka", "kavajiyi", "yivakaji"}) {
            if (auto d = expect_eq<i64>(codecs::aryabhata_decode(text), 3861, text); !d.empty())
                return d;
        }
        const auto& skt = codecs::KatapayadiTable::sanskrit();
        const auto& eng = codecs::KatapayadiTable::english();
        if (auto d = expect_eq<std::string>(codecs::katapayadi_decode("mule dana", skt), "5380",
                                            "mule dana");
            !d.empty())
            return d;
        if (auto d = expect_eq<std::string>(codecs::katapayadi_decode("kava sira", skt), "1472",
                                            "kava sira");
            !d.empty())
            return d;
        return expect_eq<std::string>(
            codecs::katapayadi_decode("fog base game bin rip bone nod", eng), "45155011421113",
            "english sentence");
    });

    check(5, "pulverizer agrees with its oracles", [] {
        const auto start = std::chrono::steady_clock::now();

        std::mt19937_64 rng(2024);
        std::uniform_int_distribution<i64> dist(2, 1000000000);
        for (int trial = 0; trial < 10000; ++trial) {
            i64 a, m;
            do {
                a = dist(rng);
                m = dist(rng);
            } while (std::gcd(a, m) != 1);
            const i64 via_kuttaka = congruence::mod_inverse(a, m);
            const Bezout bz = extended_euclid(a, m);
            const i64 via_euclid = mod_nonneg(bz.s, m);
            if (via_kuttaka != via_euclid)
                return "inverse mismatch at a=" + std::to_string(a) + " m=" + std::to_string(m);
            if (static_cast<__int128>(a) % m * via_kuttaka % m != 1)
                return "inverse contract violated at a=" + std::to_string(a) +
                       " m=" + std::to_string(m);
        }

        for (i64 a = 1; a <= 30; ++a) {
            for (i64 b = 1; b <= 30; ++b) {
                for (i64 c = -30; c <= 30; ++c) {
                    const auto expect = testoracle::brute_solve(a, c, b);
                    bool threw = false;
                    Solution sol;
                    try {
                        sol = solve(Equation{a, b, c});
                    } catch (const NoSolutionError&) {
                        threw = true;
                    }
                    if (expect.has_value() == threw)
                        return "solvability mismatch at a=" + std::to_string(a) +
                               " b=" + std::to_string(b) + " c=" + std::to_string(c);
                    if (expect &&
                        (sol.x_min != expect->first || sol.y_min != expect->second))
                        return "minimal pair mismatch at a=" + std::to_string(a) +
                               " b=" + std::to_string(b) + " c=" + std::to_string(c);
                }
            }
        }

        const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        if (elapsed >= 60) return "oracle sweep took " + std::to_string(elapsed) + " s";
        return std::string{};
    });

    check(6, "roundtrips hold with zero failures", [] {
        for (i64 n = 1; n <= 10000; ++n)
            if (codecs::aryabhata_decode(codecs::aryabhata_encode(n)) != n)
                return "letter roundtrip failed at " + std::to_string(n);

        std::mt19937_64 rng(2025);
        std::uniform_int_distribution<i64> dist(1, 100000000000000000LL - 1);
        for (int trial = 0; trial < 10000; ++trial) {
            const i64 n = dist(rng);
            if (codecs::aryabhata_decode(codecs::aryabhata_encode(n)) != n)
                return "letter roundtrip failed at " + std::to_string(n);
        }
        // Group values 26..29 at several places.
        for (const i64 n : {26LL, 27LL, 28LL, 29LL, 2600LL, 27000000LL, 2900000000000000LL,
                            2626262626262626LL})
            if (codecs::aryabhata_decode(codecs::aryabhata_encode(n)) != n)
                return "cluster roundtrip failed at " + std::to_string(n);

        int chooser_counter = 0;
        const codecs::KatapayadiChooser rotating =
            [&chooser_counter](int, const std::vector<std::string>& options) {
                return options[static_cast<std::size_t>(chooser_counter++) % options.size()];
            };
        for (const codecs::KatapayadiTable* table :
             {&codecs::KatapayadiTable::sanskrit(), &codecs::KatapayadiTable::english()}) {
            for (int v = 0; v < 10000; ++v) {
                char buf[5];
                std::snprintf(buf, sizeof buf, "%04d", v);
                const std::string digits(buf);
                if (codecs::katapayadi_decode(codecs::katapayadi_encode(digits, *table),
                                              *table) != digits)
                    return "katapayadi roundtrip failed at " + digits + " (" + table->name + ")";
                if (codecs::katapayadi_decode(
                        codecs::katapayadi_encode(digits, *table, rotating), *table) != digits)
                    return "katapayadi chooser roundtrip failed at " + digits;
            }
        }

        const auto& syms = letter_symbols();
        std::uniform_int_distribution<std::size_t> pick(0, syms.size());
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<codecs::Token> tokens;
            for (int i = 0; i < 40; ++i) {
                const std::size_t j = pick(rng);
                const auto one = codecs::tokenize(j == syms.size() ? " " : syms[j]);
                tokens.push_back(one.front());
            }
            const std::string text = codecs::render_tokens(tokens);
            if (codecs::mula_apply(codecs::mula_apply(text)) != text)
                return "mula double application changed: " + text;
        }
        return std::string{};
    });

    check(7, "earth-rotation count encodes and self-roundtrips", [] {
        const std::string text = codecs::aryabhata_encode(1582237500);
        return expect_eq<i64>(codecs::aryabhata_decode(text), 1582237500, "decode(" + text + ")");
    });

    check(8, "selftest exits 0 and flags a mutated vector with exit 1", [fixtures] {
        std::ostringstream out, err;
        const int code = cli::run({"selftest", "--fixtures", fixtures}, out, err);
        if (code != 0) return "selftest exited " + std::to_string(code) + "\n" + out.str();

        std::ifstream in(fixtures);
        json doc = json::parse(in);
        bool mutated = false;
        for (json& entry : doc) {
            if (entry.at("id") == "solve-137x+10=60y") {
                entry["expected"]["x_min"] = 11;
                mutated = true;
            }
        }
        if (!mutated) return std::string("fixture id solve-137x+10=60y not found");
        const auto path =
            std::filesystem::temp_directory_path() / "kuttaka_acceptance_mutated.json";
        std::ofstream tmp(path);
        tmp << doc.dump();
        tmp.close();

        std::ostringstream out2, err2;
        const int code2 = cli::run({"selftest", "--fixtures", path.string()}, out2, err2);
        std::filesystem::remove(path);
        if (code2 != 1) return "mutated selftest exited " + std::to_string(code2) + ", want 1";
        if (out2.str().find("FAIL solve-137x+10=60y") == std::string::npos)
            return std::string("mutated selftest did not name the vector");
        return std::string{};
    });

    if (failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
