#pragma once

#include "lambdacoh/int.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lambdacoh {

// Element of Z[x]/(x^n): coefficient sequence of length n, x^n = 0.
// n = 1 is the ring Z itself.
class TruncPoly {
public:
    explicit TruncPoly(std::size_t n) : coeffs_(n) {
        if (n == 0) throw_bad_order();
    }
    TruncPoly(std::size_t n, std::vector<Int> coeffs);

    static TruncPoly constant(std::size_t n, Int c);
    // the generator x; requires n >= 2
    static TruncPoly gen(std::size_t n);

    std::size_t order() const { return coeffs_.size(); }
    const Int& operator[](std::size_t i) const { return coeffs_[i]; }
    Int& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool has_zero_constant_term() const { return coeffs_[0] == 0; }

    TruncPoly pow(unsigned long k) const;

    bool congruent_mod(const TruncPoly& other, const Int& m) const;

    bool operator==(const TruncPoly&) const = default;

    std::string to_string() const;

private:
    [[noreturn]] static void throw_bad_order();
    std::vector<Int> coeffs_;
};

TruncPoly operator+(const TruncPoly& a, const TruncPoly& b);
TruncPoly operator-(const TruncPoly& a, const TruncPoly& b);
TruncPoly operator-(const TruncPoly& a);
TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);
TruncPoly operator*(const Int& c, const TruncPoly& a);

}  // namespace lambdacoh
