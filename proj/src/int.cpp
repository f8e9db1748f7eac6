#include "lambdacoh/int.hpp"

#include <stdexcept>

namespace lambdacoh {

Int extended_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    if (b == 0) {
        if (a < 0) {
            x = -1;
            y = 0;
            return -a;
        }
        x = 1;
        y = 0;
        return a;
    }
    Int x1, y1;
    Int g = extended_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

int valuation(Int v, const Int& p) {
    if (v == 0) throw std::invalid_argument("valuation of zero");
    int k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> first_primes(std::size_t count) {
    std::vector<long> out;
    for (long n = 2; out.size() < count; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

long next_prime_after(long n) {
    long m = n + 1;
    while (!is_prime(m)) ++m;
    return m;
}

std::vector<long> prime_factors(long n) {
    if (n < 1) throw std::invalid_argument("prime_factors: n must be positive");
    std::vector<long> out;
    for (long d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::string to_decimal(const Int& v) { return v.str(); }

Int parse_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    return Int(s);
}

}  // namespace lambdacoh
