#include "lambdacoh/endo_matrix.hpp"

#include <stdexcept>

namespace lambdacoh {

EndoMatrix::EndoMatrix(std::size_t n, IntMatrix mat) : n_(n), mat_(std::move(mat)) {
    if (mat_.rows() != n_ || mat_.cols() != n_)
        throw std::invalid_argument("endomorphism matrix must be n x n");
}

EndoMatrix EndoMatrix::identity(std::size_t n) { return {n, IntMatrix::identity(n)}; }

EndoMatrix EndoMatrix::ring_endo_from_gen_image(const TruncPoly& q) {
    if (!q.has_zero_constant_term())
        throw std::invalid_argument("generator image must have zero constant term");
    std::size_t n = q.order();
    EndoMatrix e(n);
    TruncPoly power = TruncPoly::constant(n, 1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) e.at(i, j) = power[i];
        power = power * q;
    }
    return e;
}

TruncPoly EndoMatrix::apply(const TruncPoly& r) const {
    if (r.order() != n_) throw std::invalid_argument("truncation order mismatch");
    TruncPoly out(n_);
    for (std::size_t j = 0; j < n_; ++j) {
        if (r[j] == 0) continue;
        for (std::size_t i = 0; i < n_; ++i) out[i] += mat_.at(i, j) * r[j];
    }
    return out;
}

TruncPoly EndoMatrix::column(std::size_t j) const {
    TruncPoly out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = mat_.at(i, j);
    return out;
}

bool EndoMatrix::divisible_by(const Int& m) const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j)
            if (mat_.at(i, j) % m != 0) return false;
    return true;
}

EndoMatrix EndoMatrix::divided_by(const Int& m) const {
    EndoMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            if (mat_.at(i, j) % m != 0) throw std::domain_error("entries not divisible");
            out.at(i, j) = mat_.at(i, j) / m;
        }
    return out;
}

bool EndoMatrix::preserves_filtration() const {
    for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t i = 0; i < j; ++i)
            if (mat_.at(i, j) != 0) return false;
    return true;
}

std::vector<Int> EndoMatrix::flatten() const {
    std::vector<Int> v;
    v.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) v.push_back(mat_.at(i, j));
    return v;
}

EndoMatrix EndoMatrix::unflatten(std::size_t n, const std::vector<Int>& v, std::size_t offset) {
    if (v.size() < offset + n * n) throw std::invalid_argument("unflatten: vector too short");
    EndoMatrix e(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) e.at(i, j) = v[offset + i * n + j];
    return e;
}

EndoMatrix operator+(const EndoMatrix& a, const EndoMatrix& b) {
    return {a.order(), a.matrix() + b.matrix()};
}

EndoMatrix operator-(const EndoMatrix& a, const EndoMatrix& b) {
    return {a.order(), a.matrix() - b.matrix()};
}

EndoMatrix operator*(const EndoMatrix& a, const EndoMatrix& b) {
    if (a.order() != b.order()) throw std::invalid_argument("truncation order mismatch");
    return {a.order(), a.matrix() * b.matrix()};
}

EndoMatrix operator*(const Int& c, const EndoMatrix& a) { return {a.order(), c * a.matrix()}; }

EndoMatrix commutator(const EndoMatrix& a, const EndoMatrix& b) { return a * b - b * a; }

bool frobenius_congruent(const EndoMatrix& g, long p) {
    std::size_t n = g.order();
    for (std::size_t i = 0; i < n; ++i) {
        TruncPoly lhs = g.column(i).pow(static_cast<unsigned long>(p));
        TruncPoly rhs = (i * p < n) ? g.column(i * p) : TruncPoly(n);
        if (!lhs.congruent_mod(rhs, Int(p))) return false;
    }
    return true;
}

}  // namespace lambdacoh
