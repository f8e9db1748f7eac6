#pragma once

#include "lambdacoh/int.hpp"
#include "lambdacoh/trunc_poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace lambdacoh {

// Sparse multivariate polynomial over Z with a fixed variable count.
// Exponent vectors are dense (length nvars); zero coefficients are never stored.
class MultiPoly {
public:
    using Exponents = std::vector<int>;

    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, Int c);
    static MultiPoly var(int nvars, int i);

    int nvars() const { return nvars_; }
    const std::map<Exponents, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Int& c);

    MultiPoly permuted(const std::vector<int>& perm) const;  // variable i ↦ perm[i]
    bool is_symmetric() const;  // invariant under all adjacent transpositions

    // Substitute images[i] for variable i. All images share a variable count.
    MultiPoly substitute(const std::vector<MultiPoly>& images) const;

    TruncPoly eval(const std::vector<TruncPoly>& values) const;
    Int eval_int(const std::vector<Int>& values) const;

    bool operator==(const MultiPoly&) const = default;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    int nvars_;
    std::map<Exponents, Int> terms_;
};

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const Int& c, const MultiPoly& a);

// e_k of nvars variables (e_0 = 1). Throws if k is out of range.
MultiPoly elementary_symmetric(int k, int nvars);

// Rewrite a symmetric polynomial in terms of e_1..e_nvars by leading-term
// elimination in graded lex order. Variable i of the result stands for e_{i+1}.
// Throws std::invalid_argument if p is not symmetric.
MultiPoly express_in_elementary(const MultiPoly& p);

}  // namespace lambdacoh
