#pragma once

// The built-in fixture corpus and randomization helpers.

#include <random>

#include "homlie/ternary.hpp"

namespace homlie::fixtures {

/// e1 even, e2 odd, zero bracket, α = id; zero representation on a (1|1) space with β = id.
Representation a0();
/// [e1,e2] = e2, both even, α = id; adjoint representation.
Representation aff1();
/// gl(1|1) on (h1, h2, q, p) with its defining representation, α = β = id.
Representation gl11();
/// α_t = diag(1, 1, t, 1/t) on (h1, h2, q, p).
Matrix alpha_t(const Scalar &t);
/// gl(1|1) Yau-twisted by α_t, with the adjoint representation (β = α_t).
Representation gl11t(const Scalar &t);

/// [q,p] = h1 stored raw with [p,q] = -h1: fails super-skew symmetry at (q,p).
HomLieSuper negative_skew();
/// gl(1|1) with α swapping h1 and h2: fails multiplicativity at (h1,q).
HomLieSuper negative_multiplicative();
/// Defining representation of gl(1|1) with β = diag(1,2): fails twist compatibility at q.
Representation negative_beta();
/// Induced gl(1|1) with the raw entry [h1,q,p] shifted by h1.
TernaryHomLieSuper negative_ternary_skew();
/// Induced gl(1|1) with [h1,q,p] = 2(h1+h2), stored consistently on all orderings.
TernaryHomLieSuper negative_hom_nambu();

/// The swap h1 ↔ h2 as a map on gl(1|1).
Matrix swap_h1_h2();

/// Random even integer matrix of determinant ±1: a product of elementary row
/// operations inside the parity blocks and sign flips.
Matrix random_even_unimodular(const Parities &parities, std::mt19937_64 &rng, std::size_t steps = 8);
/// Random rational in [-r, r] with denominator at most d.
Scalar random_rational(std::mt19937_64 &rng, long r = 5, long d = 3);

} // namespace homlie::fixtures
