#pragma once

#include "lambdacoh/lattice.hpp"

namespace lambdacoh {

// Closed forms of the Frobenius-congruent endomorphism lattices and the H0
// centralizer lattices, assembled directly from their defining conditions
// (independent of the commutator-kernel route the cohomology module takes).

// n = 2: g(1) = a, g(x) = d x.
// n = 3: lower block [[j, s], [k, t]] with s ≡ 0 ≡ t - j (mod 2).
// n = 4: n, u ≡ 0 (6); r - j ≡ s ≡ 0 (2); w - j ≡ v ≡ 0 (3).
Lattice endbar_closed_form(std::size_t n);

// b_p = 0 family: s = 0, t = j.
Lattice h0_closed_form_zero_b();

// b_2 != 0 family: s = 0 and h(t - j) = k G.
Lattice h0_closed_form_nonzero_b(const Int& G, const Int& h);

// x ↦ (1+x)^p - 1 structure: r = j + 2k, s = 4k + 6l, w = j + 6k + 6l.
Lattice h0_closed_form_binomial();

// n = 4 family with parameters (h, d2):
//   h = 1: r = j + 12k, (6d2+1)s = (8-12d2)k + 60l, w = 6s + j + 12k
//   h = 5: 5(r-j) = 12k, (6d2+25)s = (200-12d2)k + 300l,
//          (6d2+25)w = (6d2+25)j + 300k + 360l
Lattice h0_closed_form_quadratic(const Int& h, const Int& d2);

}  // namespace lambdacoh
