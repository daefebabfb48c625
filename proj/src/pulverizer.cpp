#include "kuttaka/pulverizer.hpp"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace kuttaka {
namespace {

using i128 = __int128;

void check_positive(i64 v, const char* name) {
    if (v < 1) throw std::invalid_argument(std::string(name) + " must be >= 1");
    if (v > kMagnitudeBound)
        throw std::invalid_argument(std::string(name) + " exceeds the magnitude bound");
}

void check_constant(i64 c) {
    if (c < -kMagnitudeBound || c > kMagnitudeBound)
        throw std::invalid_argument("c exceeds the magnitude bound");
}

}  // namespace

void Equation::validate() const {
    check_positive(a, "a");
    check_positive(b, "b");
    check_constant(c);
}

void Valli::validate() const {
    if (entries.size() < 2) throw std::invalid_argument("valli needs at least two entries");
    for (i64 e : entries)
        if (e < 0) throw std::invalid_argument("valli entries must be nonnegative");
}

QuotientChain mutual_division(i64 a, i64 b) {
    check_positive(a, "a");
    check_positive(b, "b");
    QuotientChain chain;
    i64 dividend = a, divisor = b;
    for (;;) {
        chain.quotients.push_back(dividend / divisor);
        const i64 r = dividend % divisor;
        chain.remainders.push_back(r);
        if (r == 0) {
            chain.gcd = divisor;
            return chain;
        }
        dividend = divisor;
        divisor = r;
    }
}

MatiChoice choose_mati(i64 r_last, i64 d_prev, i64 c, Parity parity) {
    check_positive(r_last, "r_last");
    check_positive(d_prev, "d_prev");
    check_constant(c);
    if (c == 0) return {0, 0};

    const i64 s = parity == Parity::kEven ? -1 : 1;
    const i64 sc = s * c;
    const i64 g = std::gcd(r_last, d_prev);
    if (sc % g != 0)
        throw NoSolutionError("no multiplier makes the division exact: gcd " + std::to_string(g) +
                              " of " + std::to_string(r_last) + " and " + std::to_string(d_prev) +
                              " does not divide " + std::to_string(c));

    // Solutions of r_last*t + sc = 0 (mod d_prev) form t0 + j*step.
    const i64 step = d_prev / g;
    const i64 reduced = r_last / g;
    const i64 rhs = mod_nonneg(-(sc / g), step);
    i64 t0;
    if (step == 1) {
        t0 = 0;
    } else if (reduced == 1) {
        t0 = rhs;
    } else {
        // gcd(reduced, step) = 1, so the pulverizer itself inverts reduced.
        t0 = solve(Equation{reduced, step, -rhs}).x_min;
    }

    // Raise t in whole steps until the adjusted product is positive.
    i128 sum = static_cast<i128>(r_last) * t0 + sc;
    i128 mati = t0;
    if (sum <= 0) {
        const i128 incr = static_cast<i128>(r_last) * step;
        const i128 jumps = (1 - sum + incr - 1) / incr;
        mati += jumps * step;
        sum += jumps * incr;
    }
    return {narrow_i64(mati), narrow_i64(sum / d_prev)};
}

ValliTop reduce_valli(const Valli& v, std::vector<std::vector<i64>>* columns) {
    v.validate();
    std::vector<i64> chain = v.entries;
    if (columns) {
        columns->clear();
        columns->push_back(chain);
    }
    while (chain.size() > 2) {
        const std::size_t k = chain.size();
        chain[k - 3] = checked_add(checked_mul(chain[k - 3], chain[k - 2]), chain[k - 1]);
        chain.pop_back();
        if (columns) columns->push_back(chain);
    }
    return {chain[0], chain[1]};
}

Solution solve(const Equation& eq, SolveTrace* trace) {
    eq.validate();
    const i64 a = eq.a, b = eq.b, c = eq.c;
    const i64 g = std::gcd(a, b);
    if (c % g != 0)
        throw NoSolutionError("no solution: gcd " + std::to_string(g) + " does not divide " +
                              std::to_string(c));

    Solution sol;
    sol.period_x = b / g;
    sol.period_y = a / g;
    if (trace) {
        *trace = SolveTrace{};
        trace->chain.gcd = g;
    }
    if (c == 0) return sol;

    // Always divide the larger coefficient by the smaller; when b is the
    // dividend the equation is read as b*y + (-c) = a*x, so the fold's top
    // and second entries trade roles.
    const bool swapped = a < b;
    const i64 big = swapped ? b : a;
    const i64 small = swapped ? a : b;
    const i64 cc = swapped ? -c : c;

    QuotientChain chain = mutual_division(big, small);
    const std::size_t n = chain.quotients.size();
    std::vector<i64> retained(chain.quotients.begin(), chain.quotients.end() - 1);

    // Keeping all quotients but the forced last one leaves the gcd itself as
    // the final remainder; its divisor is the remainder two steps back.
    const i64 r_last = chain.gcd;
    const i64 d_prev = n >= 3 ? chain.remainders[n - 3] : (n == 2 ? small : big);
    const Parity parity = retained.size() % 2 == 0 ? Parity::kEven : Parity::kOdd;
    const MatiChoice mc = choose_mati(r_last, d_prev, cc, parity);

    Valli valli;
    valli.entries = retained;
    valli.entries.push_back(mc.mati);
    valli.entries.push_back(mc.q);
    const ValliTop folded = reduce_valli(valli, trace ? &trace->columns : nullptr);

    sol.x_raw = swapped ? folded.top : folded.second;
    sol.y_raw = swapped ? folded.second : folded.top;
    if (static_cast<i128>(a) * sol.x_raw + c != static_cast<i128>(b) * sol.y_raw)
        throw std::logic_error("pulverizer produced an inexact solution");

    sol.x_min = sol.x_raw % sol.period_x;
    sol.y_min = narrow_i64((static_cast<i128>(a) * sol.x_min + c) / b);

    if (trace) {
        trace->retained = std::move(retained);
        trace->chain = std::move(chain);
        trace->r_last = r_last;
        trace->d_prev = d_prev;
        trace->parity = parity;
        trace->mati = mc;
        trace->swapped = swapped;
    }
    return sol;
}

Bezout extended_euclid(i64 a, i64 b) {
    check_positive(a, "a");
    check_positive(b, "b");
    i64 old_r = a, r = b;
    i64 old_s = 1, s = 0;
    i64 old_t = 0, t = 1;
    while (r != 0) {
        const i64 q = old_r / r;
        i64 tmp = checked_sub(old_r, checked_mul(q, r));
        old_r = r;
        r = tmp;
        tmp = checked_sub(old_s, checked_mul(q, s));
        old_s = s;
        s = tmp;
        tmp = checked_sub(old_t, checked_mul(q, t));
        old_t = t;
        t = tmp;
    }
    return {old_r, old_s, old_t};
}

}  // namespace kuttaka
