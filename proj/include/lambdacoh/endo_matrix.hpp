#pragma once

#include "lambdacoh/int_matrix.hpp"
#include "lambdacoh/trunc_poly.hpp"

#include <vector>

namespace lambdacoh {

// Z-linear self map of Z[x]/(x^n) over the monomial basis {1, x, ..., x^{n-1}}.
// Column j is the image of x^j, so composition g∘f is the matrix product G*F.
class EndoMatrix {
public:
    explicit EndoMatrix(std::size_t n) : n_(n), mat_(n, n) {}
    EndoMatrix(std::size_t n, IntMatrix mat);

    static EndoMatrix identity(std::size_t n);
    // The ring endomorphism determined by x ↦ q. q must have zero constant
    // term so that x^n = 0 is respected and (x) is preserved.
    static EndoMatrix ring_endo_from_gen_image(const TruncPoly& q);

    std::size_t order() const { return n_; }
    const IntMatrix& matrix() const { return mat_; }
    Int& at(std::size_t i, std::size_t j) { return mat_.at(i, j); }
    const Int& at(std::size_t i, std::size_t j) const { return mat_.at(i, j); }

    TruncPoly apply(const TruncPoly& r) const;
    TruncPoly column(std::size_t j) const;

    bool is_zero() const { return mat_.is_zero(); }
    bool divisible_by(const Int& m) const;
    EndoMatrix divided_by(const Int& m) const;
    // maps (x^k) into (x^k) for every k, i.e. strictly lower-triangular profile
    bool preserves_filtration() const;

    std::vector<Int> flatten() const;  // row-major
    static EndoMatrix unflatten(std::size_t n, const std::vector<Int>& v, std::size_t offset = 0);

    bool operator==(const EndoMatrix&) const = default;

private:
    std::size_t n_;
    IntMatrix mat_;
};

EndoMatrix operator+(const EndoMatrix& a, const EndoMatrix& b);
EndoMatrix operator-(const EndoMatrix& a, const EndoMatrix& b);
EndoMatrix operator*(const EndoMatrix& a, const EndoMatrix& b);  // composition a∘b
EndoMatrix operator*(const Int& c, const EndoMatrix& a);

// a∘b - b∘a
EndoMatrix commutator(const EndoMatrix& a, const EndoMatrix& b);

// g(x^i)^p ≡ g(x^{ip}) (mod p) for all basis monomials x^i. Basis checking
// suffices: g is additive and the p-th power is additive mod p.
bool frobenius_congruent(const EndoMatrix& g, long p);

}  // namespace lambdacoh
