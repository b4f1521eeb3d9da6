#pragma once

#include <array>
#include <vector>

#include "excoll/divisor.hpp"
#include "excoll/geometry.hpp"

namespace excoll {

using ConicTriple = std::array<Coeff, 6>;  // (a1, b1, a2, b2, a3, b3)

/// g(a,b) = (a + 2b + 1) * f(a,b) / 6, the cubic-model Euler characteristic.
Coeff cubic_pair_form(Coeff a, Coeff b);

/// Points (a,b) in [-window, window]^2 with f(-a,-b) = 0.
std::vector<DivisorClass> conic_points(Coeff window);

/// All ordered triples of conic points p1, p2, p3 in [-window, window]^2
/// with g(pi - pj) = 0 for every i < j. Sorted. Requires window >= 1.
std::vector<ConicTriple> solve_conic_triples(Coeff window);

/// Parameter tuples (t1, ..., tk) in [-window, window]^k for which
/// (0, base + t1*direction, ..., base + tk*direction) has verdict Zero.
std::vector<std::vector<Coeff>> family_chains(VarietyTag tag, DivisorClass base, DivisorClass direction,
                                              std::size_t length, Coeff window);

}  // namespace excoll
