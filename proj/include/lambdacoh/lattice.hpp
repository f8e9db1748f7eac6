#pragma once

#include "lambdacoh/normal_form.hpp"

#include <optional>
#include <vector>

namespace lambdacoh {

// Finitely generated subgroup of Z^ambient. The basis is kept in row HNF with
// no zero rows, so two lattices are equal iff their bases are identical.
class Lattice {
public:
    Lattice() = default;

    static Lattice zero(std::size_t ambient);
    static Lattice full(std::size_t ambient);
    static Lattice from_generators(std::size_t ambient, const IntMatrix& gens);
    static Lattice from_generators(std::size_t ambient, const std::vector<std::vector<Int>>& gens);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }
    std::vector<Int> basis_row(std::size_t i) const { return basis_.row(i); }

    bool contains(const Lattice& other) const;

    bool operator==(const Lattice&) const = default;

private:
    std::size_t ambient_ = 0;
    IntMatrix basis_;  // rank x ambient, row HNF
};

// Coordinates of v in the basis of l (c with c * basis = v), or nullopt.
std::optional<std::vector<Int>> member(const Lattice& l, const std::vector<Int>& v);

// {v in Z^cols : m v = 0}, saturated.
Lattice kernel_lattice(const IntMatrix& m);

// {v : (a v)_i ≡ 0 (mod moduli_i) for all i}. Moduli positive. Solved by the
// kernel of the augmented matrix [a | diag(moduli)] projected to the first block.
Lattice congruence_kernel(const IntMatrix& a, const std::vector<Int>& moduli);

// Invariants of sup/sub. Throws std::domain_error if sub is not inside sup.
AbelianInvariants quotient(const Lattice& sub, const Lattice& sup);

}  // namespace lambdacoh
