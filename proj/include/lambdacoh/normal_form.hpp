#pragma once

#include "lambdacoh/int_matrix.hpp"

#include <string>
#include <vector>

namespace lambdacoh {

// Isomorphism type of a finitely generated abelian group:
// torsion d_1 | d_2 | ... (each >= 2) plus free rank.
struct AbelianInvariants {
    std::vector<Int> torsion;
    std::size_t free_rank = 0;

    bool operator==(const AbelianInvariants&) const = default;
    bool is_trivial() const { return torsion.empty() && free_rank == 0; }
    std::string to_string() const;

    // Canonical invariants of a direct product of cyclic groups Z/m_1 x ... x Z/m_k
    // (factors with m_i = 1 dropped, m_i = 0 counted as free).
    static AbelianInvariants of_cyclic_product(const std::vector<Int>& orders);
};

struct HnfResult {
    IntMatrix h;  // row Hermite normal form, zero rows at the bottom
    IntMatrix u;  // unimodular, h = u * m
};

// Row-style HNF: pivots positive, entries above each pivot reduced into
// [0, pivot). Canonical for the row lattice.
HnfResult hnf(const IntMatrix& m);

struct SnfResult {
    IntMatrix d;                 // diagonal, d_1 | d_2 | ...
    AbelianInvariants cokernel;  // of Z^cols / rowspan(m)
};

// Smith normal form by alternating row/column reduction with gcd pivoting.
SnfResult snf(const IntMatrix& m);

// Rank over Q (number of nonzero rows of the HNF).
std::size_t rank(const IntMatrix& m);

}  // namespace lambdacoh
