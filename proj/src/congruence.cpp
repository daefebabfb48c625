#include "kuttaka/congruence.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace kuttaka::congruence {
namespace {

std::string show(const Congruence& c) {
    return "x = " + std::to_string(c.residue) + " (mod " + std::to_string(c.modulus) + ")";
}

bool consistent(const Congruence& a, const Congruence& b) {
    const i64 g = std::gcd(a.modulus, b.modulus);
    return mod_nonneg(a.residue - b.residue, g) == 0;
}

}  // namespace

void Congruence::validate() const {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    if (modulus > kMagnitudeBound)
        throw std::invalid_argument("modulus exceeds the magnitude bound");
    if (residue < 0 || residue >= modulus)
        throw std::invalid_argument("residue must lie in [0, modulus)");
}

i64 mod_inverse(i64 a, i64 m) {
    if (a < 1 || a > kMagnitudeBound) throw std::invalid_argument("a must be in [1, 10^18]");
    if (m < 2 || m > kMagnitudeBound) throw std::invalid_argument("modulus must be in [2, 10^18]");
    const i64 g = std::gcd(a, m);
    if (g != 1)
        throw NotCoprimeError("no inverse: gcd(" + std::to_string(a) + ", " + std::to_string(m) +
                                  ") = " + std::to_string(g),
                              g);
    // a*x + 1 = m*y, then a^{-1} = -x (mod m).
    const Solution sol = solve(Equation{a, m, 1});
    return mod_nonneg(-sol.x_min, m);
}

CongruenceSolution solve_pair(const Congruence& c1, const Congruence& c2) {
    c1.validate();
    c2.validate();
    const i64 g = std::gcd(c1.modulus, c2.modulus);
    if (mod_nonneg(c1.residue - c2.residue, g) != 0)
        throw InconsistentSystemError("inconsistent pair: " + show(c1) + " and " + show(c2) +
                                      " disagree modulo " + std::to_string(g));
    const i64 lcm = checked_mul(c1.modulus / g, c2.modulus);
    if (lcm > kMagnitudeBound)
        throw OverflowError("combined modulus " + std::to_string(lcm) +
                            " exceeds the magnitude bound");

    // The divisor paired with the greater remainder drives the pulverizer;
    // on equal residues the larger modulus plays that role.
    const bool first_greater =
        c1.residue > c2.residue || (c1.residue == c2.residue && c1.modulus >= c2.modulus);
    const Congruence& hi = first_greater ? c1 : c2;
    const Congruence& lo = first_greater ? c2 : c1;

    const i64 u = solve(Equation{hi.modulus, lo.modulus, hi.residue - lo.residue}).x_min;
    const i64 x = checked_add(checked_mul(hi.modulus, u), hi.residue);
    return {x, lcm};
}

CongruenceSolution solve_system(const std::vector<Congruence>& cs) {
    if (cs.empty()) throw std::invalid_argument("congruence system must be nonempty");
    for (const Congruence& c : cs) c.validate();

    CongruenceSolution acc{cs.front().residue, cs.front().modulus};
    for (std::size_t i = 1; i < cs.size(); ++i) {
        try {
            acc = solve_pair(Congruence{acc.value, acc.combined_modulus}, cs[i]);
        } catch (const InconsistentSystemError&) {
            // Blame the first original pair that conflicts.
            for (std::size_t j = 0; j < i; ++j) {
                if (!consistent(cs[j], cs[i]))
                    throw InconsistentSystemError(
                        "inconsistent system: congruence " + std::to_string(j + 1) + " (" +
                        show(cs[j]) + ") conflicts with congruence " + std::to_string(i + 1) +
                        " (" + show(cs[i]) + ")");
            }
            throw;
        }
    }
    return acc;
}

}  // namespace kuttaka::congruence
