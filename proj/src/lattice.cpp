#include "lambdacoh/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace lambdacoh {

namespace {

bool row_is_zero(const IntMatrix& m, std::size_t i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.at(i, j) != 0) return false;
    return true;
}

IntMatrix drop_zero_rows(const IntMatrix& h) {
    std::vector<std::vector<Int>> keep;
    for (std::size_t i = 0; i < h.rows(); ++i)
        if (!row_is_zero(h, i)) keep.push_back(h.row(i));
    return IntMatrix::from_row_vectors(keep, h.cols());
}

}  // namespace

Lattice Lattice::zero(std::size_t ambient) {
    Lattice l;
    l.ambient_ = ambient;
    l.basis_ = IntMatrix(0, ambient);
    return l;
}

Lattice Lattice::full(std::size_t ambient) {
    Lattice l;
    l.ambient_ = ambient;
    l.basis_ = IntMatrix::identity(ambient);
    return l;
}

Lattice Lattice::from_generators(std::size_t ambient, const IntMatrix& gens) {
    if (gens.cols() != ambient && gens.rows() != 0)
        throw std::invalid_argument("generator length mismatch");
    Lattice l;
    l.ambient_ = ambient;
    IntMatrix g = gens;
    if (g.cols() != ambient) g = IntMatrix(0, ambient);
    l.basis_ = drop_zero_rows(hnf(g).h);
    return l;
}

Lattice Lattice::from_generators(std::size_t ambient, const std::vector<std::vector<Int>>& gens) {
    return from_generators(ambient, IntMatrix::from_row_vectors(gens, ambient));
}

bool Lattice::contains(const Lattice& other) const {
    if (ambient_ != other.ambient_) return false;
    for (std::size_t i = 0; i < other.rank(); ++i)
        if (!member(*this, other.basis_row(i))) return false;
    return true;
}

std::optional<std::vector<Int>> member(const Lattice& l, const std::vector<Int>& v) {
    if (v.size() != l.ambient_dim()) throw std::invalid_argument("member: dimension mismatch");
    const IntMatrix& b = l.basis();
    std::vector<Int> rem = v;
    std::vector<Int> coords(b.rows());
    for (std::size_t i = 0; i < b.rows(); ++i) {
        std::size_t pj = 0;
        while (pj < b.cols() && b.at(i, pj) == 0) ++pj;
        if (rem[pj] % b.at(i, pj) != 0) return std::nullopt;
        Int c = rem[pj] / b.at(i, pj);
        coords[i] = c;
        if (c != 0)
            for (std::size_t t = 0; t < b.cols(); ++t) rem[t] -= c * b.at(i, t);
    }
    for (const auto& x : rem)
        if (x != 0) return std::nullopt;
    return coords;
}

Lattice kernel_lattice(const IntMatrix& m) {
    std::size_t n = m.cols();
    if (m.rows() == 0) return Lattice::full(n);
    // HNF of [m^T | I]: rows whose first block vanished carry a kernel basis.
    IntMatrix mt = m.transpose();
    IntMatrix aug(n, m.rows() + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m.rows(); ++j) aug.at(i, j) = mt.at(i, j);
        aug.at(i, m.rows() + i) = 1;
    }
    IntMatrix h = hnf(aug).h;
    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool zero_head = true;
        for (std::size_t j = 0; j < m.rows(); ++j)
            if (h.at(i, j) != 0) {
                zero_head = false;
                break;
            }
        if (!zero_head) continue;
        std::vector<Int> tail(n);
        for (std::size_t j = 0; j < n; ++j) tail[j] = h.at(i, m.rows() + j);
        gens.push_back(std::move(tail));
    }
    return Lattice::from_generators(n, gens);
}

Lattice congruence_kernel(const IntMatrix& a, const std::vector<Int>& moduli) {
    if (moduli.size() != a.rows()) throw std::invalid_argument("congruence_kernel: moduli count");
    for (const auto& m : moduli)
        if (m <= 0) throw std::invalid_argument("congruence_kernel: moduli must be positive");
    std::size_t n = a.cols();
    std::size_t m = a.rows();
    if (m == 0) return Lattice::full(n);
    IntMatrix aug(m, n + m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = moduli[i];
    }
    Lattice k = kernel_lattice(aug);
    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < k.rank(); ++i) {
        std::vector<Int> row = k.basis_row(i);
        gens.emplace_back(row.begin(), row.begin() + static_cast<long>(n));
    }
    return Lattice::from_generators(n, gens);
}

AbelianInvariants quotient(const Lattice& sub, const Lattice& sup) {
    if (sub.ambient_dim() != sup.ambient_dim())
        throw std::invalid_argument("quotient: ambient dimension mismatch");
    IntMatrix coords(sub.rank(), sup.rank());
    for (std::size_t i = 0; i < sub.rank(); ++i) {
        auto c = member(sup, sub.basis_row(i));
        if (!c) throw std::domain_error("quotient: sub is not contained in sup");
        for (std::size_t j = 0; j < sup.rank(); ++j) coords.at(i, j) = (*c)[j];
    }
    return snf(coords).cokernel;
}

}  // namespace lambdacoh
