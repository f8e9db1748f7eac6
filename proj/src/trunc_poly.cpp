#include "lambdacoh/trunc_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace lambdacoh {

void TruncPoly::throw_bad_order() { throw std::invalid_argument("truncation order must be >= 1"); }

TruncPoly::TruncPoly(std::size_t n, std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (n == 0) throw_bad_order();
    coeffs_.resize(n);
}

TruncPoly TruncPoly::constant(std::size_t n, Int c) {
    TruncPoly p(n);
    p.coeffs_[0] = std::move(c);
    return p;
}

TruncPoly TruncPoly::gen(std::size_t n) {
    if (n < 2) throw std::invalid_argument("the generator x needs order >= 2");
    TruncPoly p(n);
    p.coeffs_[1] = 1;
    return p;
}

bool TruncPoly::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

TruncPoly TruncPoly::pow(unsigned long k) const {
    TruncPoly acc = constant(order(), 1);
    for (unsigned long i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

bool TruncPoly::congruent_mod(const TruncPoly& other, const Int& m) const {
    if (order() != other.order()) return false;
    for (std::size_t i = 0; i < order(); ++i)
        if ((coeffs_[i] - other.coeffs_[i]) % m != 0) return false;
    return true;
}

std::string TruncPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < order(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        Int mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) os << mag;
        if (i > 0) {
            os << 'x';
            if (i > 1) os << '^' << i;
        }
        first = false;
    }
    return first ? "0" : os.str();
}

TruncPoly operator+(const TruncPoly& a, const TruncPoly& b) {
    if (a.order() != b.order()) throw std::invalid_argument("truncation order mismatch");
    TruncPoly r(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) r[i] = a[i] + b[i];
    return r;
}

TruncPoly operator-(const TruncPoly& a, const TruncPoly& b) {
    if (a.order() != b.order()) throw std::invalid_argument("truncation order mismatch");
    TruncPoly r(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) r[i] = a[i] - b[i];
    return r;
}

TruncPoly operator-(const TruncPoly& a) {
    TruncPoly r(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) r[i] = -a[i];
    return r;
}

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
    if (a.order() != b.order()) throw std::invalid_argument("truncation order mismatch");
    std::size_t n = a.order();
    TruncPoly r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

TruncPoly operator*(const Int& c, const TruncPoly& a) {
    TruncPoly r(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) r[i] = c * a[i];
    return r;
}

}  // namespace lambdacoh
