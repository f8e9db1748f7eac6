#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace lambdacoh {

// Exact arbitrary-precision integer. All arithmetic in this library is over Z.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Floor division (round toward -infinity); b must be nonzero.
inline Int fdiv(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// Extended gcd: g = a*x + b*y with g >= 0.
Int extended_gcd(const Int& a, const Int& b, Int& x, Int& y);

// p-adic valuation of v != 0.
int valuation(Int v, const Int& p);

bool is_prime(long n);
std::vector<long> first_primes(std::size_t count);
long next_prime_after(long n);
// Prime factorization with multiplicity, ascending. n >= 1 (empty for n = 1).
std::vector<long> prime_factors(long n);

std::string to_decimal(const Int& v);
Int parse_decimal(const std::string& s);

}  // namespace lambdacoh
