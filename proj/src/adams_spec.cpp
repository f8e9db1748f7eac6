#include "lambdacoh/adams_spec.hpp"

#include "lambdacoh/newton.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace lambdacoh {

PrimeSeq PrimeSeq::zero() { return {}; }

PrimeSeq PrimeSeq::pow(int r) {
    PrimeSeq s;
    s.kind = Kind::Pow;
    s.exponent = r;
    return s;
}

PrimeSeq PrimeSeq::table(std::map<long, Int> v) {
    PrimeSeq s;
    s.kind = Kind::Table;
    s.values = std::move(v);
    return s;
}

PrimeSeq PrimeSeq::with_override(long p, Int v) const {
    PrimeSeq s = *this;
    s.values[p] = std::move(v);
    return s;
}

bool PrimeSeq::defined_at(long p) const {
    return kind != Kind::Table || values.count(p) > 0;
}

Int PrimeSeq::at(long p) const {
    auto it = values.find(p);
    if (it != values.end()) return it->second;
    switch (kind) {
        case Kind::Zero: return 0;
        case Kind::Pow: {
            Int v = 1;
            for (int i = 0; i < exponent; ++i) v *= p;
            return v;
        }
        case Kind::Table: break;
    }
    std::ostringstream os;
    os << "prime " << p << " outside the declared window";
    throw SpecError(os.str());
}

std::string family_name(Family f) {
    switch (f) {
        case Family::Integers: return "Z";
        case Family::Dual: return "dual";
        case Family::Scp: return "S_cp";
        case Family::Sbph: return "S_bp_h";
        case Family::Sprh: return "S_pr_h";
        case Family::KCP3: return "KCP3";
        case Family::Shd2: return "S_h_d2";
    }
    return "?";
}

std::vector<long> default_window() { return {2, 3, 5, 7}; }

bool AdamsSpec::closed_form() const {
    switch (family) {
        case Family::Integers:
        case Family::Sprh:
        case Family::KCP3:
        case Family::Shd2: return true;
        case Family::Dual: return b.closed_form();
        case Family::Scp: return c.closed_form();
        case Family::Sbph: return b.closed_form() && G_symbolic;
    }
    return false;
}

bool AdamsSpec::psi_defined_at(long p) const {
    switch (family) {
        case Family::Integers:
        case Family::Sprh:
        case Family::KCP3:
        case Family::Shd2: return true;
        case Family::Dual: return b.defined_at(p);
        case Family::Scp: return c.defined_at(p);
        case Family::Sbph: return b.defined_at(p);
    }
    return false;
}

namespace {

Int exact_div(const Int& num, const Int& den, const char* what) {
    if (num % den != 0) {
        std::ostringstream os;
        os << what << ": " << num << " not divisible by " << den;
        throw SpecError(os.str());
    }
    return num / den;
}

Int pow_int(const Int& base, int e) {
    Int v = 1;
    for (int i = 0; i < e; ++i) v *= base;
    return v;
}

Int binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int v = 1;
    for (long i = 1; i <= k; ++i) {
        v *= (n - k + i);
        v /= i;
    }
    return v;
}

}  // namespace

TruncPoly AdamsSpec::psi_gen_image(long p) const {
    if (n < 2) throw SpecError("psi_gen_image needs n >= 2");
    TruncPoly q(n);
    switch (family) {
        case Family::Integers:
            throw SpecError("the ring Z has no generator x");
        case Family::Dual:
            q[1] = b.at(p);
            return q;
        case Family::Scp:
            q[2] = c.at(p);
            return q;
        case Family::Sbph: {
            Int bp = b.at(p);
            q[1] = bp;
            q[2] = exact_div(h * bp * (bp - 1), G, "c_p = h b_p(b_p-1)/G");
            return q;
        }
        case Family::Sprh: {
            Int bp = pow_int(Int(p), r);
            q[1] = bp;
            q[2] = exact_div(h * bp * (bp - 1), G, "c_p = h p^r(p^r-1)/(2^r(2^r-1))");
            return q;
        }
        case Family::KCP3: {
            // (1 + x)^p - 1 truncated
            for (std::size_t i = 1; i < n; ++i) q[i] = binom(p, static_cast<long>(i));
            return q;
        }
        case Family::Shd2: {
            Int p2 = Int(p) * p;
            q[1] = p2;
            q[2] = exact_div(h * p2 * (p2 - 1), 12, "h p^2(p^2-1)/12");
            if (p == 2) {
                q[3] = d2;
            } else {
                Int p4 = p2 * p2;
                Int dp = exact_div(p2 * (p4 - 1), 60, "p^2(p^4-1)/60") * d2 +
                         exact_div(p2 * (p2 - 1) * (p2 - 4), 360, "p^2(p^2-1)(p^2-4)/360") * h * h;
                q[3] = dp;
            }
            return q;
        }
    }
    throw SpecError("unknown family");
}

EndoMatrix AdamsSpec::psi(long p) const {
    if (n == 1) return EndoMatrix::identity(1);
    return EndoMatrix::ring_endo_from_gen_image(psi_gen_image(p));
}

AdamsSpec build_integers() {
    AdamsSpec s;
    s.n = 1;
    s.family = Family::Integers;
    s.label = "Z";
    s.prime_window = default_window();
    return s;
}

AdamsSpec build_dual(const PrimeSeq& b, std::vector<long> window, bool check) {
    if (check)
        for (long p : window) {
            if (!b.defined_at(p)) continue;
            if (b.at(p) % p != 0) {
                std::ostringstream os;
                os << "dual numbers: b_" << p << " = " << b.at(p) << " not divisible by " << p;
                throw ValidationError(os.str());
            }
        }
    AdamsSpec s;
    s.n = 2;
    s.family = Family::Dual;
    s.label = "dual((b_p))";
    s.b = b;
    s.prime_window = std::move(window);
    return s;
}

AdamsSpec build_S_cp(const PrimeSeq& c, std::vector<long> window, bool check) {
    if (check) {
        if (!c.defined_at(2)) throw ValidationError("S((c_p)): c_2 must be given");
        if (c.at(2) % 2 == 0) {
            std::ostringstream os;
            os << "S((c_p)): c_2 = " << c.at(2) << " must be odd";
            throw ValidationError(os.str());
        }
        for (long p : window) {
            if (p == 2 || !c.defined_at(p)) continue;
            if (c.at(p) % p != 0) {
                std::ostringstream os;
                os << "S((c_p)): c_" << p << " = " << c.at(p) << " not divisible by " << p;
                throw ValidationError(os.str());
            }
        }
    }
    AdamsSpec s;
    s.n = 3;
    s.family = Family::Scp;
    s.label = "S((c_p))";
    s.c = c;
    s.prime_window = std::move(window);
    return s;
}

namespace {

// gcd of b_q(b_q - 1) over the window, plus a stabilization probe: unchanged
// when the window grows by the next three primes (only possible for closed
// forms). For b_p = p^r with r in {1, 2, 4} the gcd is exactly 2^r(2^r - 1).
struct GcdResult {
    Int G;
    bool symbolic;
    bool stabilized;
};

GcdResult compute_G(const PrimeSeq& b, const std::vector<long>& window) {
    if (b.kind == PrimeSeq::Kind::Pow && b.values.empty() &&
        (b.exponent == 1 || b.exponent == 2 || b.exponent == 4)) {
        Int two_r = pow_int(2, b.exponent);
        return {two_r * (two_r - 1), true, true};
    }
    Int g = 0;
    for (long p : window) {
        if (!b.defined_at(p)) continue;
        Int bp = b.at(p);
        g = gcd(g, bp * (bp - 1));
    }
    bool stabilized = false;
    if (b.closed_form() && !window.empty()) {
        Int g2 = g;
        long p = window.back();
        for (int i = 0; i < 3; ++i) {
            p = next_prime_after(p);
            Int bp = b.at(p);
            g2 = gcd(g2, bp * (bp - 1));
        }
        stabilized = (g2 == g);
        g = g2;
    }
    return {g, false, stabilized};
}

}  // namespace

AdamsSpec build_S_bp_h(const PrimeSeq& b, const Int& h, std::vector<long> window, bool check) {
    if (!b.defined_at(2) || b.at(2) == 0) throw ValidationError("S((b_p), h): b_2 must be nonzero");
    Int b2 = b.at(2);
    if (check && h % 2 == 0) {
        std::ostringstream os;
        os << "S((b_p), h): h = " << h << " must be odd";
        throw ValidationError(os.str());
    }
    if (check)
        for (long p : window) {
            if (!b.defined_at(p)) continue;
            if (b.at(p) % p != 0) {
                std::ostringstream os;
                os << "S((b_p), h): b_" << p << " = " << b.at(p) << " not divisible by " << p;
                throw ValidationError(os.str());
            }
        }
    if (check) {
        int nu2 = valuation(b2, 2);
        Int two_nu = pow_int(2, nu2);
        for (long p : window) {
            if (!b.defined_at(p)) continue;
            Int bp = b.at(p);
            if ((bp * (bp - 1)) % two_nu != 0) {
                std::ostringstream os;
                os << "S((b_p), h): b_p(b_p-1) not divisible by 2^nu2(b_2) at p = " << p;
                throw ValidationError(os.str());
            }
        }
    }
    GcdResult gr = compute_G(b, window);
    if (gr.G == 0) throw ValidationError("S((b_p), h): G undefined (all b_q(b_q-1) vanish)");
    if (check && (h < 1 || 2 * h > gr.G)) {
        std::ostringstream os;
        os << "S((b_p), h): h = " << h << " outside the range 1 <= h <= G/2 (G = " << gr.G << ")";
        throw ValidationError(os.str());
    }
    // special odd primes: p | b_2(b_2 - 1), b_p != 0, nu_p(b_p) = nu_p(G); each must divide h.
    // nu_p(G) is the minimum of nu_p(b_q(b_q - 1)) by definition of the gcd.
    Int bb2 = abs(b2 * (b2 - 1));
    while (bb2 % 2 == 0) bb2 /= 2;
    for (long p = 3; check && bb2 > 1; p = next_prime_after(p)) {
        if (bb2 % p != 0) {
            if (Int(p) * p > bb2) {  // remaining cofactor is prime
                if (bb2 > std::numeric_limits<long>::max())
                    throw ValidationError("S((b_p), h): b_2(b_2-1) has an oversized prime factor");
                p = bb2.convert_to<long>();
            } else {
                continue;
            }
        }
        while (bb2 % p == 0) bb2 /= p;
        if (!b.defined_at(p) || b.at(p) == 0) continue;
        if (valuation(b.at(p), p) == valuation(gr.G, p) && h % p != 0) {
            std::ostringstream os;
            os << "S((b_p), h): the special odd prime " << p << " must divide h = " << h;
            throw ValidationError(os.str());
        }
    }
    AdamsSpec s;
    s.n = 3;
    s.family = Family::Sbph;
    {
        std::ostringstream os;
        os << "S((b_p), " << h << ")";
        s.label = os.str();
    }
    s.b = b;
    s.h = h;
    s.G = gr.G;
    s.G_symbolic = gr.symbolic;
    s.G_stabilized = gr.stabilized || gr.symbolic;
    s.prime_window = std::move(window);
    return s;
}

AdamsSpec build_S_pr_h(int r, const Int& h, bool check) {
    if (r != 1 && r != 2 && r != 4) throw ValidationError("S((p^r), h): r must be 1, 2 or 4");
    Int two_r = pow_int(2, r);
    Int G = two_r * (two_r - 1);
    bool ok = (h % 2 != 0) && h >= 1 && 2 * h <= G;
    if (check && !ok) {
        std::ostringstream os;
        os << "S((p^" << r << "), h): h = " << h << " outside the admissible odd range [1, " << G / 2
           << "]";
        throw ValidationError(os.str());
    }
    AdamsSpec s;
    s.n = 3;
    s.family = Family::Sprh;
    {
        std::ostringstream os;
        os << "S((p^" << r << "), " << h << ")";
        s.label = os.str();
    }
    s.b = PrimeSeq::pow(r);
    s.h = h;
    s.r = r;
    s.G = G;
    s.D = gcd(h, G);
    s.G_symbolic = true;
    s.prime_window = default_window();
    return s;
}

AdamsSpec build_KCP3() {
    AdamsSpec s;
    s.n = 4;
    s.family = Family::KCP3;
    s.label = "K(CP^3)";
    s.prime_window = default_window();
    return s;
}

AdamsSpec build_S_h_d2(const Int& h, const Int& d2, bool check) {
    if (check && h != 1 && h != 5) throw ValidationError("S(h, d2): h must be 1 or 5");
    if (check && (d2 < 0 || d2 > 58 || d2 % 2 != 0)) {
        std::ostringstream os;
        os << "S(h, d2): d2 = " << d2 << " outside {0, 2, ..., 58}";
        throw ValidationError(os.str());
    }
    AdamsSpec s;
    s.n = 4;
    s.family = Family::Shd2;
    {
        std::ostringstream os;
        os << "S(" << h << ", " << d2 << ")";
        s.label = os.str();
    }
    s.h = h;
    s.d2 = d2;
    s.prime_window = default_window();
    return s;
}

AdamsSpec build_KFP2(ProjectivePlaneField f) {
    int r = f == ProjectivePlaneField::C ? 1 : f == ProjectivePlaneField::H ? 2 : 4;
    AdamsSpec s = build_S_pr_h(r, 1);
    const char* name = f == ProjectivePlaneField::C   ? "K(CP^2)"
                       : f == ProjectivePlaneField::H ? "K(HP^2)"
                                                      : "K(OP^2)";
    s.label = name;
    return s;
}

std::vector<AdamsSpec> enumerate_64() {
    std::vector<AdamsSpec> out;
    out.push_back(build_S_pr_h(1, 1));
    for (int h : {1, 3, 5}) out.push_back(build_S_pr_h(2, h));
    for (int h = 1; h <= 119; h += 2) out.push_back(build_S_pr_h(4, h));
    return out;
}

std::vector<AdamsSpec> enumerate_61() {
    std::vector<AdamsSpec> out;
    out.push_back(build_KCP3());
    for (int h : {1, 5})
        for (int d2 = 0; d2 <= 58; d2 += 2) out.push_back(build_S_h_d2(h, d2));
    return out;
}

namespace {

bool seq_equal_on(const PrimeSeq& a, const PrimeSeq& b, const std::vector<long>& window,
                  bool negate = false) {
    for (long p : window) {
        if (!a.defined_at(p) || !b.defined_at(p)) throw SpecError("sequence undefined on window");
        if (a.at(p) != (negate ? -b.at(p) : b.at(p))) return false;
    }
    return true;
}

}  // namespace

bool isomorphic(const AdamsSpec& a, const AdamsSpec& b, const std::vector<long>& window) {
    if (a.n != b.n) throw SpecError("isomorphic: different truncation orders");
    auto is_bp_family = [](Family f) { return f == Family::Sbph || f == Family::Sprh; };
    switch (a.family) {
        case Family::Integers:
            return b.family == Family::Integers;
        case Family::Dual:
            if (b.family != Family::Dual) throw SpecError("isomorphic: unclassified comparison");
            return seq_equal_on(a.b, b.b, window);
        case Family::Scp:
            if (b.family == Family::Scp)
                return seq_equal_on(a.c, b.c, window) || seq_equal_on(a.c, b.c, window, true);
            if (is_bp_family(b.family)) return false;  // b_2 = 0 vs b_2 != 0
            throw SpecError("isomorphic: unclassified comparison");
        case Family::Sbph:
        case Family::Sprh:
            if (b.family == Family::Scp) return false;
            if (is_bp_family(b.family)) return a.h == b.h && seq_equal_on(a.b, b.b, window);
            throw SpecError("isomorphic: unclassified comparison");
        case Family::KCP3:
            if (b.family == Family::KCP3) return true;
            // psi^2's linear coefficient separates: 2 for K(CP^3), 4 for S(h, d2)
            if (b.family == Family::Shd2) return false;
            throw SpecError("isomorphic: unclassified comparison");
        case Family::Shd2:
            if (b.family == Family::KCP3) return false;
            if (b.family == Family::Shd2) return a.h == b.h && a.d2 == b.d2;
            throw SpecError("isomorphic: unclassified comparison");
    }
    throw SpecError("isomorphic: unclassified comparison");
}

EndoMatrix adams_composite(const AdamsSpec& spec, long k) {
    if (k < 1) throw SpecError("adams_composite: k >= 1 required");
    auto factors = prime_factors(k);
    EndoMatrix acc = EndoMatrix::identity(spec.n);
    for (long p : factors) acc = acc * spec.psi(p);
    EndoMatrix rev = EndoMatrix::identity(spec.n);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) rev = rev * spec.psi(*it);
    if (!(acc == rev)) throw SpecError("adams_composite: prime factors do not commute");
    return acc;
}

ValidationReport verify_wilkerson(const AdamsSpec& spec, const std::vector<long>& window,
                                  int composite_bound) {
    ValidationReport rep;
    std::vector<long> ps;
    std::vector<EndoMatrix> mats;
    for (long p : window) {
        if (!spec.psi_defined_at(p)) continue;
        try {
            mats.push_back(spec.psi(p));
            ps.push_back(p);
        } catch (const SpecError& e) {
            std::ostringstream name;
            name << "psi^" << p << " evaluable";
            rep.add(name.str(), false, e.what());
        }
    }

    // psi^1 = Id
    rep.add("psi^1 = Id", adams_composite(spec, 1) == EndoMatrix::identity(spec.n));

    // ring map: psi^p(1) = 1, multiplicativity on sampled pairs, filtration
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        long p = ps[pi];
        const EndoMatrix& psip = mats[pi];
        bool unit_ok = psip.column(0) == TruncPoly::constant(spec.n, 1);
        bool filt_ok = psip.preserves_filtration();
        bool mult_ok = true;
        std::vector<TruncPoly> samples;
        if (spec.n >= 2) {
            samples.push_back(TruncPoly::gen(spec.n));
            TruncPoly r1(spec.n);
            for (std::size_t i = 0; i < spec.n; ++i) r1[i] = Int(2 * i + 1) - 3;
            samples.push_back(r1);
            TruncPoly r2(spec.n);
            for (std::size_t i = 0; i < spec.n; ++i) r2[i] = Int(7 * i * i) % 5 - 2;
            samples.push_back(r2);
        } else {
            samples.push_back(TruncPoly::constant(1, 3));
            samples.push_back(TruncPoly::constant(1, -2));
        }
        for (const auto& r : samples)
            for (const auto& s : samples)
                if (!(psip.apply(r * s) == psip.apply(r) * psip.apply(s))) mult_ok = false;
        std::ostringstream name;
        name << "psi^" << p << " is a filtered ring map";
        std::ostringstream wit;
        if (!unit_ok) wit << "psi(1) != 1";
        if (!filt_ok) wit << "filtration not preserved";
        if (!mult_ok) wit << "multiplicativity fails";
        rep.add(name.str(), unit_ok && filt_ok && mult_ok, wit.str());
    }

    // commuting family and psi^{pq} consistency
    for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b2 = a + 1; b2 < ps.size(); ++b2) {
            long p = ps[a], q = ps[b2];
            EndoMatrix pq = mats[a] * mats[b2];
            EndoMatrix qp = mats[b2] * mats[a];
            bool ok = pq == qp && pq == adams_composite(spec, p * q);
            std::ostringstream name;
            name << "psi^" << p << " psi^" << q << " = psi^" << (p * q) << " = psi^" << q << " psi^"
                 << p;
            rep.add(name.str(), ok);
        }

    // Frobenius congruence psi^p(r) ≡ r^p (mod p) on basis monomials
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        long p = ps[pi];
        bool ok = true;
        std::string wit;
        const EndoMatrix& psip = mats[pi];
        for (std::size_t i = 0; i < spec.n; ++i) {
            TruncPoly xi(spec.n);
            if (i == 0)
                xi = TruncPoly::constant(spec.n, 1);
            else
                xi[i] = 1;
            TruncPoly lhs = psip.apply(xi);
            TruncPoly rhs = xi.pow(static_cast<unsigned long>(p));
            if (!lhs.congruent_mod(rhs, Int(p))) {
                ok = false;
                std::ostringstream os;
                os << "fails at p = " << p << " on x^" << i;
                wit = os.str();
                break;
            }
        }
        std::ostringstream name;
        name << "Frobenius congruence at p = " << p;
        rep.add(name.str(), ok, wit);
    }

    // Newton integrality up to composite_bound
    {
        bool ok = true;
        std::string wit;
        try {
            if (spec.n >= 2)
                lambda_images(spec, TruncPoly::gen(spec.n), composite_bound);
            else
                lambda_images(spec, TruncPoly::constant(1, 2), composite_bound);
        } catch (const NonIntegralLambda& e) {
            ok = false;
            wit = e.what();
        } catch (const SpecError& e) {
            ok = false;
            wit = e.what();
        }
        std::ostringstream name;
        name << "Newton integrality to depth " << composite_bound;
        rep.add(name.str(), ok, wit);
    }
    return rep;
}

void ValidationReport::add(std::string name, bool pass, std::string witness) {
    overall = overall && pass;
    checks.push_back({std::move(name), pass, std::move(witness)});
}

}  // namespace lambdacoh
