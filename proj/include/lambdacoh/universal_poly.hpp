#pragma once

#include "lambdacoh/multi_poly.hpp"

namespace lambdacoh {

// Desk-scale caps on the universal polynomial expansions. The variable count
// of P_{i,j} is i*j, so the products grow fast past these.
struct UniversalCaps {
    int max_i = 3;
    int max_ij = 6;
};

// Coefficient of t^i in prod_{m,n=1..i} (1 + xi_m eta_n t), as a polynomial in
// the 2i variables (xi_1..xi_i, eta_1..eta_i). Exposed for round-trip checks.
MultiPoly product_coefficient(int i);

// Coefficient of t^i in prod_{l_1<...<l_j} (1 + xi_{l_1}...xi_{l_j} t) over
// ij variables xi_1..xi_{ij}.
MultiPoly product_coefficient_composite(int i, int j);

// P_i rewritten in elementary symmetric generators: variables 0..i-1 are
// s_1..s_i (of the xi block), i..2i-1 are sigma_1..sigma_i (of the eta block).
// Memoized; thread-safe.
const MultiPoly& universal_P(int i, const UniversalCaps& caps = {});

// P_{i,j} in the elementary symmetric generators s_1..s_{ij}. Memoized.
const MultiPoly& universal_P_composite(int i, int j, const UniversalCaps& caps = {});

}  // namespace lambdacoh
