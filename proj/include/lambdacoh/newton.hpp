#pragma once

#include "lambdacoh/adams_spec.hpp"
#include "lambdacoh/universal_poly.hpp"

#include <vector>

namespace lambdacoh {

// A Newton division failed: the given Adams family is not a lambda-ring
// structure (on a Z-torsionfree ring the converse direction is the point).
struct NonIntegralLambda : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// lambda^1(r), ..., lambda^k(r) by the Newton recursion
//   psi^m(r) - lambda^1(r) psi^{m-1}(r) + ... + (-1)^m m lambda^m(r) = 0;
// every division by m must be exact over Z.
std::vector<TruncPoly> lambda_images(const AdamsSpec& spec, const TruncPoly& r, int k);

// Images of the generator (of the scalar 2 when n = 1).
struct LambdaImages {
    std::size_t n = 1;
    std::vector<TruncPoly> images;  // images[m-1] = lambda^m
};
LambdaImages lambda_from_adams(const AdamsSpec& spec, int k);

// Product axiom lambda^i(rs) = P_i(lambda(r); lambda(s)) on sampled pairs,
// composition axiom lambda^i(lambda^j) at the generator, the i = 2 sum axiom,
// and lambda^i(1) = 0 for i > 1.
bool lambda_axiom_check(const AdamsSpec& spec, int i, int j, const UniversalCaps& caps = {});

}  // namespace lambdacoh
