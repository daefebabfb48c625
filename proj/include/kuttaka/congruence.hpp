#pragma once

#include <vector>

#include "kuttaka/pulverizer.hpp"

namespace kuttaka::congruence {

struct Congruence {
    i64 residue = 0;  // in [0, modulus)
    i64 modulus = 0;  // >= 1
    void validate() const;
};

struct CongruenceSolution {
    i64 value = 0;             // least nonnegative solution
    i64 combined_modulus = 0;  // lcm of the input moduli
};

/// Multiplicative inverse of a modulo m (m >= 2, gcd(a, m) = 1), computed
/// through the pulverizer special case a*x + 1 = m*y and negation of x.
i64 mod_inverse(i64 a, i64 m);

/// Least nonnegative x with x = c1 and x = c2; the moduli need not be
/// coprime. Throws InconsistentSystemError when the residues disagree
/// modulo gcd of the moduli.
CongruenceSolution solve_pair(const Congruence& c1, const Congruence& c2);

/// Left-fold of solve_pair over a nonempty list.
CongruenceSolution solve_system(const std::vector<Congruence>& cs);

}  // namespace kuttaka::congruence
