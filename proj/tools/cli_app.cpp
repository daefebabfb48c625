#include "cli_app.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "kuttaka/codecs.hpp"
#include "kuttaka/congruence.hpp"
#include "kuttaka/pulverizer.hpp"

namespace kuttaka::cli {
namespace {

using json = nlohmann::ordered_json;

std::string join(const std::vector<i64>& values, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string gather_text(const std::vector<std::string>& words) {
    if (!words.empty()) {
        std::string text;
        for (std::size_t i = 0; i < words.size(); ++i) {
            if (i) text += ' ';
            text += words[i];
        }
        return text;
    }
    std::string text(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>{});
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

void emit_ok(bool json_mode, std::ostream& out, json result, json steps,
             const std::string& plain) {
    if (json_mode) {
        json envelope{{"status", "ok"}, {"result", std::move(result)}};
        if (!steps.is_null()) envelope["steps"] = std::move(steps);
        out << envelope.dump() << "\n";
    } else {
        out << plain;
    }
}

int exit_code_for(const std::string& kind) {
    if (kind == "NoSolutionError" || kind == "NotCoprimeError" ||
        kind == "InconsistentSystemError" || kind == "EmptyDecodeError")
        return kExitNoSolution;
    return kExitUsage;
}

int emit_error(bool json_mode, std::ostream& out, std::ostream& err, const std::string& kind,
               const std::string& message, long long position) {
    if (json_mode) {
        json detail{{"kind", kind}, {"message", message}};
        if (position >= 1) detail["position"] = position;
        out << json{{"status", "error"}, {"error", std::move(detail)}}.dump() << "\n";
    }
    err << "error: " << message << "\n";
    return exit_code_for(kind);
}

// ---------------------------------------------------------------------------
// solve

int cmd_solve(i64 a, i64 b, i64 c, bool trace_mode, bool json_mode, std::ostream& out) {
    SolveTrace trace;
    const Solution sol = solve(Equation{a, b, c}, trace_mode ? &trace : nullptr);

    json result{{"a", a},
                {"b", b},
                {"c", c},
                {"x_min", sol.x_min},
                {"y_min", sol.y_min},
                {"x_raw", sol.x_raw},
                {"y_raw", sol.y_raw},
                {"period_x", sol.period_x},
                {"period_y", sol.period_y}};
    json steps;
    std::ostringstream plain;
    plain << "x_min = " << sol.x_min << "   y_min = " << sol.y_min << "\n";
    plain << "x_raw = " << sol.x_raw << "   y_raw = " << sol.y_raw << "\n";
    plain << "period_x = " << sol.period_x << "   period_y = " << sol.period_y << "\n";
    if (trace_mode) {
        steps = json{{"quotients", trace.chain.quotients},
                     {"remainders", trace.chain.remainders},
                     {"gcd", trace.chain.gcd},
                     {"retained", trace.retained},
                     {"r_last", trace.r_last},
                     {"d_prev", trace.d_prev},
                     {"parity", trace.parity == Parity::kEven ? "even" : "odd"},
                     {"mati", trace.mati.mati},
                     {"q", trace.mati.q},
                     {"dividend", trace.swapped ? "b" : "a"},
                     {"valli_columns", trace.columns}};
        plain << "quotients:  " << join(trace.chain.quotients) << "\n";
        plain << "remainders: " << join(trace.chain.remainders) << "\n";
        plain << "gcd: " << trace.chain.gcd << "\n";
        plain << "retained: " << join(trace.retained) << "   mati: " << trace.mati.mati
              << "   q: " << trace.mati.q << "\n";
        plain << "valli columns:\n";
        for (const std::vector<i64>& column : trace.columns)
            plain << "  " << join(column) << "\n";
    }
    emit_ok(json_mode, out, std::move(result), std::move(steps), plain.str());
    return kExitOk;
}

// ---------------------------------------------------------------------------
// selftest

congruence::Congruence congruence_from(const json& pair) {
    return congruence::Congruence{pair.at(0).get<i64>(), pair.at(1).get<i64>()};
}

Parity parity_from(const std::string& name) {
    if (name == "even") return Parity::kEven;
    if (name == "odd") return Parity::kOdd;
    throw std::invalid_argument("parity must be 'even' or 'odd'");
}

codecs::SyllableOrder order_from(const std::string& name) {
    if (name == "descending" || name == "desc") return codecs::SyllableOrder::kDescending;
    if (name == "ascending" || name == "asc") return codecs::SyllableOrder::kAscending;
    throw std::invalid_argument("order must be 'ascending' or 'descending'");
}

json run_vector(const json& entry) {
    const std::string op = entry.at("op").get<std::string>();
    const json& in = entry.at("inputs");

    if (op == "mutual_division") {
        const QuotientChain chain = mutual_division(in.at("a").get<i64>(), in.at("b").get<i64>());
        return json{{"quotients", chain.quotients},
                    {"remainders", chain.remainders},
                    {"gcd", chain.gcd}};
    }
    if (op == "choose_mati") {
        const MatiChoice mc =
            choose_mati(in.at("r_last").get<i64>(), in.at("d_prev").get<i64>(),
                        in.at("c").get<i64>(), parity_from(in.at("parity").get<std::string>()));
        return json{{"mati", mc.mati}, {"q", mc.q}};
    }
    if (op == "reduce_valli") {
        const ValliTop top = reduce_valli(Valli{in.at("entries").get<std::vector<i64>>()});
        return json{{"top", top.top}, {"second", top.second}};
    }
    if (op == "solve") {
        const Solution sol =
            solve(Equation{in.at("a").get<i64>(), in.at("b").get<i64>(), in.at("c").get<i64>()});
        return json{{"x_raw", sol.x_raw},     {"y_raw", sol.y_raw},
                    {"x_min", sol.x_min},     {"y_min", sol.y_min},
                    {"period_x", sol.period_x}, {"period_y", sol.period_y}};
    }
    if (op == "extended_euclid") {
        const i64 a = in.at("a").get<i64>(), b = in.at("b").get<i64>();
        const Bezout bz = extended_euclid(a, b);
        if (static_cast<__int128>(bz.s) * a + static_cast<__int128>(bz.t) * b != bz.g)
            return json{{"g", bz.g}, {"s_mod_b", "bezout identity violated"}};
        return json{{"g", bz.g}, {"s_mod_b", mod_nonneg(bz.s, b)}};
    }
    if (op == "mod_inverse") {
        return json{
            {"inverse", congruence::mod_inverse(in.at("a").get<i64>(), in.at("m").get<i64>())}};
    }
    if (op == "solve_pair") {
        const congruence::CongruenceSolution s = congruence::solve_pair(
            congruence::Congruence{in.at("r1").get<i64>(), in.at("m1").get<i64>()},
            congruence::Congruence{in.at("r2").get<i64>(), in.at("m2").get<i64>()});
        return json{{"value", s.value}, {"modulus", s.combined_modulus}};
    }
    if (op == "solve_system") {
        std::vector<congruence::Congruence> cs;
        for (const json& pair : in.at("congruences")) cs.push_back(congruence_from(pair));
        const congruence::CongruenceSolution s = congruence::solve_system(cs);
        return json{{"value", s.value}, {"modulus", s.combined_modulus}};
    }
    if (op == "aryabhata_decode") {
        return json{{"value", codecs::aryabhata_decode(in.at("text").get<std::string>())}};
    }
    if (op == "aryabhata_encode") {
        return json{{"text", codecs::aryabhata_encode(
                                 in.at("n").get<i64>(),
                                 order_from(in.at("order").get<std::string>()))}};
    }
    if (op == "aryabhata_roundtrip") {
        const i64 n = in.at("n").get<i64>();
        return json{{"value", codecs::aryabhata_decode(codecs::aryabhata_encode(n))}};
    }
    if (op == "katapayadi_decode") {
        const auto& table = codecs::KatapayadiTable::by_name(in.at("table").get<std::string>());
        return json{{"digits", codecs::katapayadi_decode(in.at("word").get<std::string>(), table)}};
    }
    if (op == "katapayadi_encode") {
        const auto& table = codecs::KatapayadiTable::by_name(in.at("table").get<std::string>());
        return json{{"word", codecs::katapayadi_encode(in.at("digits").get<std::string>(), table)}};
    }
    if (op == "mula_apply") {
        return json{{"output", codecs::mula_apply(in.at("text").get<std::string>())}};
    }
    throw std::invalid_argument("unknown fixture op: " + op);
}

int cmd_selftest(const std::string& path, bool json_mode, std::ostream& out, std::ostream& err) {
    std::ifstream in(path);
    if (!in) return emit_error(json_mode, out, err, "UsageError", "cannot open fixture file: " + path, -1);
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        return emit_error(json_mode, out, err, "UsageError",
                          "fixture file is not valid JSON: " + std::string(e.what()), -1);
    }
    if (!doc.is_array() || doc.empty())
        return emit_error(json_mode, out, err, "UsageError", "no vectors", -1);

    int passed = 0;
    std::vector<std::string> failures;
    std::ostringstream plain;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const json& entry = doc[i];
        const std::string id = entry.value("id", "vector-" + std::to_string(i + 1));
        std::string detail;
        bool ok = false;
        try {
            const json actual = run_vector(entry);
            const json& expected = entry.at("expected");
            ok = actual == expected;
            if (!ok) detail = "expected " + expected.dump() + " got " + actual.dump();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        if (ok) {
            ++passed;
            plain << "ok   " << id << "\n";
        } else {
            failures.push_back(id);
            plain << "FAIL " << id << ": " << detail << "\n";
        }
    }
    plain << "passed " << passed << "/" << doc.size() << "\n";

    json result{{"fixtures", path},
                {"total", doc.size()},
                {"passed", passed},
                {"failed", failures.size()},
                {"failures", failures}};
    emit_ok(json_mode, out, std::move(result), json{}, plain.str());
    return failures.empty() ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// bench

long long median_of(std::vector<long long> samples) {
    const auto mid = samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2);
    std::nth_element(samples.begin(), mid, samples.end());
    return *mid;
}

int cmd_bench(i64 trials, int bits, std::uint64_t seed, i64 fixed_a, i64 fixed_m, bool json_mode,
              std::ostream& out, std::ostream& err) {
    const bool fixed = fixed_a != 0 || fixed_m != 0;
    if (fixed && (fixed_a < 1 || fixed_m < 2))
        throw std::invalid_argument("fixed pair needs -a >= 1 and -m >= 2");

    std::mt19937_64 rng(seed);
    const i64 limit = (i64{1} << bits) - 1;
    std::uniform_int_distribution<i64> dist(2, std::max<i64>(limit, 3));

    using clock = std::chrono::steady_clock;
    std::vector<long long> kuttaka_ns, euclid_ns;
    kuttaka_ns.reserve(static_cast<std::size_t>(trials));
    euclid_ns.reserve(static_cast<std::size_t>(trials));
    i64 last_kuttaka = 0, last_euclid = 0;

    for (i64 trial = 0; trial < trials; ++trial) {
        i64 a, m;
        if (fixed) {
            a = fixed_a;
            m = fixed_m;
        } else {
            do {
                a = dist(rng);
                m = dist(rng);
            } while (std::gcd(a, m) != 1);
        }

        const auto t0 = clock::now();
        const i64 via_kuttaka = congruence::mod_inverse(a, m);
        const auto t1 = clock::now();
        const Bezout bz = extended_euclid(a, m);
        const i64 via_euclid = mod_nonneg(bz.s, m);
        const auto t2 = clock::now();

        if (via_kuttaka != via_euclid) {
            const std::string msg = "inverse mismatch for a=" + std::to_string(a) +
                                    " m=" + std::to_string(m) +
                                    ": kuttaka=" + std::to_string(via_kuttaka) +
                                    " euclid=" + std::to_string(via_euclid);
            if (json_mode)
                out << json{{"status", "error"},
                            {"error", {{"kind", "MismatchError"}, {"message", msg}}}}
                              .dump()
                    << "\n";
            err << "error: " << msg << "\n";
            return kExitCheckFailed;
        }
        kuttaka_ns.push_back(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
        euclid_ns.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(t2 - t1).count());
        last_kuttaka = via_kuttaka;
        last_euclid = via_euclid;
    }

    json result{{"trials", trials},
                {"bits", bits},
                {"seed", seed},
                {"fixed", fixed},
                {"mismatches", 0},
                {"kuttaka_median_ns", median_of(kuttaka_ns)},
                {"euclid_median_ns", median_of(euclid_ns)}};
    if (fixed) {
        result["kuttaka_inverse"] = last_kuttaka;
        result["euclid_inverse"] = last_euclid;
    }
    std::ostringstream plain;
    plain << "trials " << trials << "   mismatches 0\n";
    plain << "kuttaka inverse median " << median_of(kuttaka_ns) << " ns\n";
    plain << "extended euclid median " << median_of(euclid_ns) << " ns\n";
    if (fixed) plain << "inverse " << last_kuttaka << "\n";
    emit_ok(json_mode, out, std::move(result), json{}, plain.str());
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"kuttaka-kit: linear indeterminate equations, congruences and classical codes"};
    app.require_subcommand(1);

    bool json_mode = false, trace_mode = false, strict_mode = false;
    std::uint64_t seed = 1;
    app.add_flag("--json", json_mode, "emit a machine-readable JSON envelope");
    app.add_flag("--trace", trace_mode, "show the quotient chain and the folded columns");
    app.add_flag("--strict", strict_mode, "reject unknown tokens instead of passing them through");
    app.add_option("--seed", seed, "seed for randomized commands");

    auto* solve_cmd = app.add_subcommand("solve", "solve a x + c = b y in integers");
    i64 solve_a = 0, solve_b = 0, solve_c = 0;
    solve_cmd->add_option("-a", solve_a, "coefficient of x")->required();
    solve_cmd->add_option("-b", solve_b, "coefficient of y")->required();
    solve_cmd->add_option("-c", solve_c, "additive constant");
    solve_cmd->fallthrough();

    auto* inverse_cmd = app.add_subcommand("inverse", "multiplicative inverse of a modulo m");
    i64 inv_a = 0, inv_m = 0;
    inverse_cmd->add_option("-a", inv_a, "value to invert")->required();
    inverse_cmd->add_option("-m", inv_m, "modulus")->required();
    inverse_cmd->fallthrough();

    auto* cong_cmd =
        app.add_subcommand("congruence", "least x with x = r (mod m) for every given pair");
    std::vector<i64> cong_rs, cong_ms;
    cong_cmd->add_option("-r", cong_rs, "residue (repeatable)");
    cong_cmd->add_option("-m", cong_ms, "modulus (repeatable)");
    cong_cmd->fallthrough();

    auto* encode_cmd = app.add_subcommand("encode", "letter encoding of a number");
    i64 encode_n = 0;
    std::string encode_order = "descending";
    encode_cmd->add_option("n", encode_n, "number to encode")->required();
    encode_cmd->add_option("--order", encode_order, "syllable order")
        ->check(CLI::IsMember({"ascending", "asc", "descending", "desc"}));
    encode_cmd->fallthrough();

    auto* decode_cmd = app.add_subcommand("decode", "number named by letter text");
    std::string decode_code = "aryabhata";
    std::vector<std::string> decode_text;
    decode_cmd->add_option("--code", decode_code, "code to decode")
        ->check(CLI::IsMember({"aryabhata"}));
    decode_cmd->add_option("text", decode_text, "text to decode (stdin when omitted)");
    decode_cmd->fallthrough();

    auto* kata_cmd = app.add_subcommand("katapayadi", "consonant-digit code, both directions");
    std::string kata_table = "sanskrit", kata_digits;
    std::vector<std::string> kata_text;
    kata_cmd->add_option("--table", kata_table, "mapping table")
        ->check(CLI::IsMember({"sanskrit", "english"}));
    kata_cmd->add_option("--digits", kata_digits, "digit string to encode");
    kata_cmd->add_option("text", kata_text, "word to decode (stdin when omitted)");
    kata_cmd->fallthrough();

    auto* mula_cmd = app.add_subcommand("mula", "reciprocal letter-pair substitution");
    std::vector<std::string> mula_text;
    mula_cmd->add_option("text", mula_text, "text to transform (stdin when omitted)");
    mula_cmd->fallthrough();

    auto* selftest_cmd = app.add_subcommand("selftest", "run every fixture vector");
    std::string fixtures_path = "fixtures/paper_vectors.json";
    selftest_cmd->add_option("--fixtures", fixtures_path, "fixture file");
    selftest_cmd->fallthrough();

    auto* bench_cmd =
        app.add_subcommand("bench", "compare the pulverizer inverse with extended Euclid");
    i64 bench_trials = 0, bench_a = 0, bench_m = 0;
    int bench_bits = 32;
    bench_cmd->add_option("--trials", bench_trials, "number of trials")->required();
    bench_cmd->add_option("--bits", bench_bits, "magnitude of random moduli")
        ->check(CLI::Range(2, 59));
    bench_cmd->add_option("-a", bench_a, "fixed value instead of random pairs");
    bench_cmd->add_option("-m", bench_m, "fixed modulus instead of random pairs");
    bench_cmd->fallthrough();

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve_cmd->parsed()) return cmd_solve(solve_a, solve_b, solve_c, trace_mode, json_mode, out);
        if (inverse_cmd->parsed()) {
            const i64 v = congruence::mod_inverse(inv_a, inv_m);
            emit_ok(json_mode, out, json{{"a", inv_a}, {"m", inv_m}, {"inverse", v}}, json{},
                    std::to_string(v) + "\n");
            return kExitOk;
        }
        if (cong_cmd->parsed()) {
            if (cong_rs.empty() || cong_rs.size() != cong_ms.size())
                throw std::invalid_argument("congruence needs matching -r and -m pairs");
            std::vector<congruence::Congruence> cs;
            for (std::size_t i = 0; i < cong_rs.size(); ++i)
                cs.push_back(congruence::Congruence{cong_rs[i], cong_ms[i]});
            const congruence::CongruenceSolution s = congruence::solve_system(cs);
            emit_ok(json_mode, out, json{{"value", s.value}, {"modulus", s.combined_modulus}},
                    json{},
                    std::to_string(s.value) + " (mod " + std::to_string(s.combined_modulus) +
                        ")\n");
            return kExitOk;
        }
        if (encode_cmd->parsed()) {
            const codecs::SyllableOrder order = order_from(encode_order);
            const std::string text = codecs::aryabhata_encode(encode_n, order);
            emit_ok(json_mode, out,
                    json{{"n", encode_n},
                         {"order", order == codecs::SyllableOrder::kDescending ? "descending"
                                                                               : "ascending"},
                         {"text", text}},
                    json{}, text + "\n");
            return kExitOk;
        }
        if (decode_cmd->parsed()) {
            const std::string text = gather_text(decode_text);
            const i64 value = codecs::aryabhata_decode(text);
            emit_ok(json_mode, out,
                    json{{"code", decode_code}, {"text", text}, {"value", value}}, json{},
                    std::to_string(value) + "\n");
            return kExitOk;
        }
        if (kata_cmd->parsed()) {
            const codecs::KatapayadiTable& table = codecs::KatapayadiTable::by_name(kata_table);
            if (!kata_digits.empty() && !kata_text.empty())
                throw std::invalid_argument("give either --digits or text to decode, not both");
            if (!kata_digits.empty()) {
                const std::string word = codecs::katapayadi_encode(kata_digits, table);
                emit_ok(json_mode, out,
                        json{{"table", table.name},
                             {"mode", "encode"},
                             {"digits", kata_digits},
                             {"word", word}},
                        json{}, word + "\n");
            } else {
                const std::string word = gather_text(kata_text);
                const std::string digits = codecs::katapayadi_decode(word, table);
                emit_ok(json_mode, out,
                        json{{"table", table.name},
                             {"mode", "decode"},
                             {"word", word},
                             {"digits", digits}},
                        json{}, digits + "\n");
            }
            return kExitOk;
        }
        if (mula_cmd->parsed()) {
            const std::string text = gather_text(mula_text);
            const std::string output =
                codecs::mula_apply(text, codecs::ReciprocalCipher{}, strict_mode);
            emit_ok(json_mode, out,
                    json{{"strict", strict_mode}, {"text", text}, {"output", output}}, json{},
                    output + "\n");
            return kExitOk;
        }
        if (selftest_cmd->parsed()) return cmd_selftest(fixtures_path, json_mode, out, err);
        if (bench_cmd->parsed()) {
            if (bench_trials < 1) throw std::invalid_argument("bench needs --trials >= 1");
            return cmd_bench(bench_trials, bench_bits, seed, bench_a, bench_m, json_mode, out,
                             err);
        }
    } catch (const KitError& e) {
        return emit_error(json_mode, out, err, e.kind(), e.what(), e.position());
    } catch (const std::invalid_argument& e) {
        return emit_error(json_mode, out, err, "UsageError", e.what(), -1);
    }

    err << "error: no command given\n";
    return kExitUsage;
}

}  // namespace kuttaka::cli
