#pragma once

#include <vector>

#include "kuttaka/checked.hpp"

namespace kuttaka {

/// The linear indeterminate equation a*x + c = b*y over the integers.
struct Equation {
    i64 a = 0;  // coefficient of x, >= 1
    i64 b = 0;  // coefficient of y, >= 1
    i64 c = 0;  // additive constant, any sign
    void validate() const;  // throws std::invalid_argument
};

/// Full record of the mutual division of a by b, continued to remainder 0.
struct QuotientChain {
    std::vector<i64> quotients;
    std::vector<i64> remainders;  // parallel to quotients; final entry is 0
    i64 gcd = 0;                  // last nonzero remainder (or the divisor)
};

/// The column that gets folded from the bottom: retained quotients, then
/// the chosen multiplier, then its quotient.
struct Valli {
    std::vector<i64> entries;
    void validate() const;
};

struct ValliTop {
    i64 top = 0;
    i64 second = 0;
};

enum class Parity { kEven, kOdd };

struct MatiChoice {
    i64 mati = 0;
    i64 q = 0;
};

struct Solution {
    i64 x_raw = 0;     // second entry of the reduced valli (or its partner)
    i64 y_raw = 0;     // top entry of the reduced valli (or its partner)
    i64 x_min = 0;     // least nonnegative x, in [0, b/gcd)
    i64 y_min = 0;     // the y paired with x_min; negative only when c < 0
    i64 period_x = 0;  // b / gcd(a, b)
    i64 period_y = 0;  // a / gcd(a, b)
};

/// Intermediate state of solve(), for tracing the column layout.
struct SolveTrace {
    QuotientChain chain;
    std::vector<i64> retained;  // quotients kept in the valli
    i64 r_last = 0;
    i64 d_prev = 0;
    Parity parity = Parity::kEven;
    MatiChoice mati;
    bool swapped = false;  // true when b > a and top/second trade roles
    std::vector<std::vector<i64>> columns;
};

/// Euclidean quotient/remainder chain of a and b (both >= 1).
QuotientChain mutual_division(i64 a, i64 b);

/// Smallest multiplier t >= 0 such that r_last*t + s*c is positive and
/// exactly divisible by d_prev, where s is -1 for an even count of retained
/// quotients and +1 for an odd count. Returns the multiplier and the exact
/// quotient; c == 0 yields (0, 0). Throws NoSolutionError when no multiplier
/// makes the division exact.
MatiChoice choose_mati(i64 r_last, i64 d_prev, i64 c, Parity parity);

/// Folds the chain from the bottom (above-penultimate * penultimate + last,
/// drop the last) until two entries remain. When `columns` is given, every
/// intermediate chain is recorded, first to last.
ValliTop reduce_valli(const Valli& v, std::vector<std::vector<i64>>* columns = nullptr);

/// Solves a*x + c = b*y by mutual division, multiplier selection and valli
/// reduction. Throws NoSolutionError when gcd(a, b) does not divide c.
Solution solve(const Equation& eq, SolveTrace* trace = nullptr);

struct Bezout {
    i64 g = 0;
    i64 s = 0;
    i64 t = 0;  // s*a + t*b = g
};

/// Classical iterative extended Euclid. Shares no code with solve() so the
/// two routes can cross-check each other.
Bezout extended_euclid(i64 a, i64 b);

}  // namespace kuttaka
