#include "lambdacoh/newton.hpp"

#include <sstream>

namespace lambdacoh {

std::vector<TruncPoly> lambda_images(const AdamsSpec& spec, const TruncPoly& r, int k) {
    std::size_t n = spec.n;
    if (r.order() != n) throw std::invalid_argument("lambda_images: order mismatch");
    std::vector<TruncPoly> psi_r;  // psi_r[m-1] = psi^m(r)
    for (int m = 1; m <= k; ++m) psi_r.push_back(adams_composite(spec, m).apply(r));
    std::vector<TruncPoly> lam;  // lam[m-1] = lambda^m(r)
    for (int m = 1; m <= k; ++m) {
        // (-1)^m m lambda^m(r) = -sum_{i=0}^{m-1} (-1)^i lambda^i(r) psi^{m-i}(r)
        TruncPoly acc = psi_r[m - 1];  // i = 0 term, lambda^0 = 1
        int sign = -1;
        for (int i = 1; i <= m - 1; ++i) {
            TruncPoly term = lam[i - 1] * psi_r[m - i - 1];
            acc = (sign < 0) ? acc - term : acc + term;
            sign = -sign;
        }
        // acc = sum_{i=0}^{m-1} (-1)^i lambda^i psi^{m-i}; lambda^m = (-1)^{m+1} acc / m
        TruncPoly lm(n);
        for (std::size_t t = 0; t < n; ++t) {
            if (acc[t] % m != 0) {
                std::ostringstream os;
                os << "Newton division by " << m << " is not exact (coefficient " << acc[t]
                   << " of x^" << t << ")";
                throw NonIntegralLambda(os.str());
            }
            lm[t] = acc[t] / m;
            if (m % 2 == 0) lm[t] = -lm[t];
        }
        lam.push_back(lm);
    }
    return lam;
}

LambdaImages lambda_from_adams(const AdamsSpec& spec, int k) {
    TruncPoly r = spec.n >= 2 ? TruncPoly::gen(spec.n) : TruncPoly::constant(1, 2);
    return {spec.n, lambda_images(spec, r, k)};
}

namespace {

std::vector<TruncPoly> sample_elements(std::size_t n) {
    std::vector<TruncPoly> out;
    out.push_back(TruncPoly::constant(n, 1));
    out.push_back(TruncPoly::constant(n, 3));
    if (n >= 2) {
        out.push_back(TruncPoly::gen(n));
        TruncPoly a(n);
        for (std::size_t i = 1; i < n; ++i) a[i] = Int(i) + 1;
        out.push_back(a);
        TruncPoly b(n);
        b[0] = 2;
        b[1] = -1;
        if (n >= 3) b[2] = 1;
        out.push_back(b);
    } else {
        out.push_back(TruncPoly::constant(1, -4));
    }
    return out;
}

}  // namespace

bool lambda_axiom_check(const AdamsSpec& spec, int i, int j, const UniversalCaps& caps) {
    std::size_t n = spec.n;
    auto samples = sample_elements(n);

    // lambda^m(1) = 0 for m > 1
    {
        auto lam1 = lambda_images(spec, TruncPoly::constant(n, 1), std::max(i, 2));
        for (std::size_t m = 1; m < lam1.size(); ++m)
            if (!lam1[m].is_zero()) return false;
    }

    // product axiom at degree i
    const MultiPoly& Pi = universal_P(i, caps);
    for (const auto& r : samples)
        for (const auto& s : samples) {
            auto lam_r = lambda_images(spec, r, i);
            auto lam_s = lambda_images(spec, s, i);
            auto lam_rs = lambda_images(spec, r * s, i);
            std::vector<TruncPoly> values;
            values.insert(values.end(), lam_r.begin(), lam_r.end());
            values.insert(values.end(), lam_s.begin(), lam_s.end());
            if (!(Pi.eval(values) == lam_rs[i - 1])) return false;
        }

    // composition axiom lambda^i(lambda^j(r)) = P_{i,j}(lambda^1(r), ..., lambda^{ij}(r))
    {
        const MultiPoly& Pij = universal_P_composite(i, j, caps);
        TruncPoly r = n >= 2 ? TruncPoly::gen(n) : TruncPoly::constant(1, 2);
        auto lam_r = lambda_images(spec, r, i * j);
        auto lam_lj = lambda_images(spec, lam_r[j - 1], i);
        if (!(Pij.eval(lam_r) == lam_lj[i - 1])) return false;
    }

    // sum axiom at degree 2: lambda^2(r + s) = lambda^2(r) + rs + lambda^2(s)
    for (const auto& r : samples)
        for (const auto& s : samples) {
            auto l2r = lambda_images(spec, r, 2);
            auto l2s = lambda_images(spec, s, 2);
            auto l2rs = lambda_images(spec, r + s, 2);
            if (!(l2rs[1] == l2r[1] + r * s + l2s[1])) return false;
        }

    return true;
}

}  // namespace lambdacoh
