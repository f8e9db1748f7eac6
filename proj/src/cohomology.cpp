#include "lambdacoh/cohomology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lambdacoh {

namespace {

// coefficient rows of the linear map X ↦ [P, X] on flattened n x n matrices
std::vector<std::vector<Int>> commutator_rows(const IntMatrix& P) {
    std::size_t n = P.rows();
    std::vector<std::vector<Int>> rows;
    rows.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Int> row(n * n);
            for (std::size_t k = 0; k < n; ++k) {
                row[k * n + j] += P.at(i, k);   // (P X)_{ij}
                row[i * n + k] -= P.at(k, j);   // (X P)_{ij}
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

// restrict linear functionals to the row space of basis: row ↦ row * basis^T
std::vector<Int> to_basis_coords(const std::vector<Int>& functional, const IntMatrix& basis) {
    std::vector<Int> out(basis.rows());
    for (std::size_t i = 0; i < basis.rows(); ++i) {
        Int acc = 0;
        for (std::size_t j = 0; j < basis.cols(); ++j) acc += functional[j] * basis.at(i, j);
        out[i] = acc;
    }
    return out;
}

Lattice expand_from_basis(const Lattice& inner, const IntMatrix& basis) {
    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < inner.rank(); ++i)
        gens.push_back(row_apply(inner.basis_row(i), basis));
    return Lattice::from_generators(basis.cols(), gens);
}

std::vector<long> small_primes_below(std::size_t n) {
    std::vector<long> out;
    for (long p = 2; static_cast<std::size_t>(p) < n; p = next_prime_after(p)) out.push_back(p);
    return out;
}

std::vector<long> extended_window(const AdamsSpec& spec, const std::vector<long>& primes,
                                  int extra) {
    std::vector<long> ext = primes;
    long p = ext.empty() ? 1 : ext.back();
    for (int i = 0; i < extra; ++i) {
        p = next_prime_after(p);
        if (!spec.psi_defined_at(p)) break;
        ext.push_back(p);
    }
    return ext;
}

}  // namespace

Lattice endbar_lattice(const AdamsSpec& spec) {
    std::size_t n = spec.n;
    std::size_t nn = n * n;
    // exact constraints from primes >= n: g(1) in Z·1 and zero constant terms
    std::vector<std::vector<Int>> eq;
    for (std::size_t i = 1; i < n; ++i) {
        std::vector<Int> r1(nn), r2(nn);
        r1[i * n + 0] = 1;  // first column below the top
        r2[0 * n + i] = 1;  // first row beyond (0,0)
        eq.push_back(std::move(r1));
        eq.push_back(std::move(r2));
    }
    Lattice base = kernel_lattice(IntMatrix::from_row_vectors(eq, nn));
    // residual congruences from p < n: coefficient of x^m in g(x^i)^p - g(x^{ip})
    // is linear mod p (Frobenius linearizes p-th powers)
    std::vector<std::vector<Int>> cong;
    std::vector<Int> moduli;
    for (long p : small_primes_below(n)) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t m = 0; m < n; ++m) {
                std::vector<Int> row(nn);
                if (m % p == 0 && m / p < n) row[(m / p) * n + i] += 1;
                if (i * p < n) row[m * n + i * p] -= 1;
                bool nonzero = std::any_of(row.begin(), row.end(), [](const Int& v) { return v != 0; });
                if (nonzero) {
                    cong.push_back(std::move(row));
                    moduli.push_back(p);
                }
            }
    }
    if (cong.empty()) return base;
    std::vector<std::vector<Int>> w_rows;
    for (const auto& row : cong) w_rows.push_back(to_basis_coords(row, base.basis()));
    Lattice w = congruence_kernel(IntMatrix::from_row_vectors(w_rows, base.rank()), moduli);
    return expand_from_basis(w, base.basis());
}

H0Lattice h0_lattice(const AdamsSpec& spec, const std::vector<long>& primes) {
    if (primes.empty()) throw std::invalid_argument("h0_lattice: window must be nonempty");
    Lattice eb = endbar_lattice(spec);
    auto centralize = [&](const std::vector<long>& ps) {
        std::vector<std::vector<Int>> rows;
        for (long p : ps) {
            auto cr = commutator_rows(spec.psi(p).matrix());
            for (auto& row : cr) rows.push_back(to_basis_coords(row, eb.basis()));
        }
        Lattice w = kernel_lattice(IntMatrix::from_row_vectors(rows, eb.rank()));
        return expand_from_basis(w, eb.basis());
    };
    Lattice here = centralize(primes);
    std::vector<long> ext = extended_window(spec, primes, 3);
    bool stabilized = false;
    if (ext.size() > primes.size()) {
        stabilized = centralize(ext) == here;
    } else {
        stabilized = spec.closed_form();
    }
    return {here, stabilized};
}

H0Algebra h0_algebra(const AdamsSpec& spec, const std::vector<long>& primes) {
    H0Lattice h0 = h0_lattice(spec, primes);
    const Lattice& l = h0.lattice;
    std::size_t n = spec.n;
    H0Algebra alg;
    for (std::size_t i = 0; i < l.rank(); ++i)
        alg.basis.push_back(EndoMatrix::unflatten(n, l.basis_row(i)));
    alg.table.resize(l.rank(), std::vector<std::vector<Int>>(l.rank()));
    for (std::size_t a = 0; a < alg.basis.size(); ++a)
        for (std::size_t b = 0; b < alg.basis.size(); ++b) {
            EndoMatrix prod = alg.basis[a] * alg.basis[b];
            auto coords = member(l, prod.flatten());
            if (!coords)
                throw std::runtime_error(
                    "h0_algebra: basis product escaped the lattice (window not stabilized)");
            alg.table[a][b] = *coords;
            if (!(prod == alg.basis[b] * alg.basis[a])) alg.commutative = false;
        }
    auto unit = member(l, EndoMatrix::identity(n).flatten());
    if (!unit) throw std::runtime_error("h0_algebra: identity not in the lattice");
    alg.unit_coords = *unit;
    return alg;
}

Lattice derbar_lattice(const AdamsSpec& spec, const std::vector<long>& primes) {
    if (primes.empty()) return Lattice::zero(0);
    std::size_t n = spec.n;
    std::size_t nn = n * n;
    std::size_t dim = primes.size() * nn;
    std::vector<EndoMatrix> psis;
    for (long p : primes) psis.push_back(spec.psi(p));

    std::vector<std::vector<Int>> eq;
    // first row/column of every A(p): forced by the relation against any prime
    // q >= n outside the window (psi^q collapses mod q to the constant-term
    // projection, so [psi^q, A(p)] ≡ 0 mod q for infinitely many q)
    for (std::size_t bi = 0; bi < primes.size(); ++bi)
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Int> r1(dim), r2(dim);
            r1[bi * nn + i * n + 0] = 1;
            r2[bi * nn + 0 * n + i] = 1;
            eq.push_back(std::move(r1));
            eq.push_back(std::move(r2));
        }
    // pairwise within the window: q [psi^p, A(q)] = p [psi^q, A(p)]
    for (std::size_t ai = 0; ai < primes.size(); ++ai)
        for (std::size_t bi = ai + 1; bi < primes.size(); ++bi) {
            long p = primes[ai], q = primes[bi];
            const IntMatrix& Pp = psis[ai].matrix();
            const IntMatrix& Pq = psis[bi].matrix();
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    std::vector<Int> row(dim);
                    for (std::size_t k = 0; k < n; ++k) {
                        row[bi * nn + k * n + j] += q * Pp.at(i, k);
                        row[bi * nn + i * n + k] -= q * Pp.at(k, j);
                        row[ai * nn + k * n + j] -= p * Pq.at(i, k);
                        row[ai * nn + i * n + k] += p * Pq.at(k, j);
                    }
                    eq.push_back(std::move(row));
                }
        }
    Lattice base = kernel_lattice(IntMatrix::from_row_vectors(eq, dim));

    // mod-q congruences for small primes outside the window
    std::vector<std::vector<Int>> cong;
    std::vector<Int> moduli;
    for (long q : small_primes_below(n)) {
        if (std::find(primes.begin(), primes.end(), q) != primes.end()) continue;
        if (!spec.psi_defined_at(q)) continue;
        IntMatrix Pq = spec.psi(q).matrix();
        auto cr = commutator_rows(Pq);
        for (std::size_t bi = 0; bi < primes.size(); ++bi)
            for (const auto& row : cr) {
                std::vector<Int> full(dim);
                for (std::size_t t = 0; t < nn; ++t) full[bi * nn + t] = row[t];
                cong.push_back(to_basis_coords(full, base.basis()));
                moduli.push_back(q);
            }
    }
    if (cong.empty()) return base;
    Lattice w = congruence_kernel(IntMatrix::from_row_vectors(cong, base.rank()), moduli);
    return expand_from_basis(w, base.basis());
}

Lattice innbar_lattice(const AdamsSpec& spec, const std::vector<long>& primes) {
    if (primes.empty()) return Lattice::zero(0);
    std::size_t n = spec.n;
    std::size_t nn = n * n;
    Lattice eb = endbar_lattice(spec);
    Lattice der = derbar_lattice(spec, primes);
    std::vector<EndoMatrix> psis;
    for (long p : primes) psis.push_back(spec.psi(p));
    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < eb.rank(); ++i) {
        EndoMatrix g = EndoMatrix::unflatten(n, eb.basis_row(i));
        std::vector<Int> vec;
        vec.reserve(primes.size() * nn);
        for (std::size_t bi = 0; bi < primes.size(); ++bi) {
            EndoMatrix c = commutator(psis[bi], g);
            if (!c.divisible_by(primes[bi]))
                throw std::runtime_error("innbar_lattice: [psi^p, g] not divisible by p");
            auto flat = c.divided_by(primes[bi]).flatten();
            vec.insert(vec.end(), flat.begin(), flat.end());
        }
        gens.push_back(std::move(vec));
    }
    Lattice inn = Lattice::from_generators(primes.size() * nn, gens);
    if (!der.contains(inn))
        throw std::runtime_error("innbar_lattice: image of d0 escapes the cocycle lattice");
    return inn;
}

AbelianInvariants h1_group(const AdamsSpec& spec, const std::vector<long>& primes) {
    if (std::find(primes.begin(), primes.end(), 2) == primes.end())
        throw std::invalid_argument("h1_group: window must contain 2");
    return quotient(innbar_lattice(spec, primes), derbar_lattice(spec, primes));
}

H1Result h1_report(const AdamsSpec& spec, const std::vector<long>& primes) {
    H1Result res;
    res.invariants = h1_group(spec, primes);
    std::vector<long> w1 = extended_window(spec, primes, 1);
    std::vector<long> w2 = extended_window(spec, primes, 2);
    if (w2.size() == primes.size() + 2) {
        AbelianInvariants i1 = h1_group(spec, w1);
        AbelianInvariants i2 = h1_group(spec, w2);
        res.torsion_stable =
            i1.torsion == res.invariants.torsion && i2.torsion == res.invariants.torsion;
        // affine fit free = a + b|P| over three window sizes
        long n0 = static_cast<long>(res.invariants.free_rank);
        long n1 = static_cast<long>(i1.free_rank);
        long n2 = static_cast<long>(i2.free_rank);
        long b = n1 - n0;
        if (n2 - n1 == b) {
            long a = n0 - b * static_cast<long>(primes.size());
            std::ostringstream os;
            if (a == 0)
                os << b << "*|P|";
            else
                os << b << "*|P|" << (a > 0 ? "+" : "") << a;
            res.free_rank_formula = os.str();
        }
    }
    return res;
}

const EndoMatrix& DerBarElement::at(long p) const {
    for (std::size_t i = 0; i < primes.size(); ++i)
        if (primes[i] == p) return f[i];
    throw std::invalid_argument("DerBarElement: prime outside the window");
}

std::vector<Int> DerBarElement::coords() const {
    std::vector<Int> out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        auto flat = f[i].divided_by(primes[i]).flatten();
        out.insert(out.end(), flat.begin(), flat.end());
    }
    return out;
}

bool DerBarElement::is_cocycle() const {
    for (std::size_t a = 0; a < primes.size(); ++a)
        for (std::size_t b = a + 1; b < primes.size(); ++b) {
            EndoMatrix pp = spec.psi(primes[a]);
            EndoMatrix pq = spec.psi(primes[b]);
            if (!(pp * f[b] + f[a] * pq == pq * f[a] + f[b] * pp)) return false;
        }
    return true;
}

DerBarElement DerBarElement::from_coords(const AdamsSpec& spec, const std::vector<long>& primes,
                                         const std::vector<Int>& a_coords) {
    std::size_t nn = spec.n * spec.n;
    if (a_coords.size() != primes.size() * nn)
        throw std::invalid_argument("DerBarElement: coordinate length mismatch");
    DerBarElement el{spec, primes, {}};
    for (std::size_t i = 0; i < primes.size(); ++i)
        el.f.push_back(Int(primes[i]) * EndoMatrix::unflatten(spec.n, a_coords, i * nn));
    return el;
}

EndoMatrix reconstruct(const DerBarElement& f, long m) {
    const AdamsSpec& spec = f.spec;
    auto value = [&](const std::vector<long>& factors) {
        EndoMatrix acc(spec.n);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            long prefix = 1, suffix = 1;
            for (std::size_t t = 0; t < i; ++t) prefix *= factors[t];
            for (std::size_t t = i + 1; t < factors.size(); ++t) suffix *= factors[t];
            acc = acc + adams_composite(spec, prefix) * f.at(factors[i]) *
                            adams_composite(spec, suffix);
        }
        return acc;
    };
    if (m == 1) return EndoMatrix(spec.n);
    auto factors = prime_factors(m);
    for (long p : factors) f.at(p);  // factor outside the window throws here
    EndoMatrix v = value(factors);
    std::vector<long> rev(factors.rbegin(), factors.rend());
    if (!(value(rev) == v))
        throw std::runtime_error("reconstruct: factorization order changed the value");
    return v;
}

DerBarElement d0(const AdamsSpec& spec, const EndoMatrix& g, const std::vector<long>& primes) {
    Lattice eb = endbar_lattice(spec);
    if (!member(eb, g.flatten())) throw std::invalid_argument("d0: g is not in Endbar");
    DerBarElement out{spec, primes, {}};
    for (long p : primes) {
        EndoMatrix c = commutator(spec.psi(p), g);
        if (!c.divisible_by(p)) throw std::runtime_error("d0: [psi^p, g] not divisible by p");
        out.f.push_back(c);
    }
    return out;
}

bool d1_check(const DerBarElement& f, const std::vector<std::pair<long, long>>& pairs) {
    const AdamsSpec& spec = f.spec;
    for (auto [m, k] : pairs) {
        try {
            EndoMatrix lhs = reconstruct(f, m * k);
            EndoMatrix rhs = adams_composite(spec, m) * reconstruct(f, k) +
                             reconstruct(f, m) * adams_composite(spec, k);
            if (!(lhs == rhs)) return false;
        } catch (const std::runtime_error&) {
            return false;  // extension not well-defined off the cocycle lattice
        }
    }
    return true;
}

ComposeClassResult compose_classes(const AdamsSpec& spec, const EndoMatrix& g,
                                   const DerBarElement& f, const std::vector<long>& primes) {
    std::size_t nn = spec.n * spec.n;
    std::vector<Int> vec;
    vec.reserve(primes.size() * nn);
    for (std::size_t i = 0; i < primes.size(); ++i) {
        EndoMatrix c = g * f.f[i] - f.f[i] * g;
        auto a_block = c.divided_by(primes[i]).flatten();  // g p A - p A g is p-divisible
        vec.insert(vec.end(), a_block.begin(), a_block.end());
    }
    Lattice inn = innbar_lattice(spec, primes);
    ComposeClassResult res;
    auto coords = member(inn, vec);
    if (coords) {
        res.is_coboundary = true;
        res.coboundary_coords = *coords;
    } else {
        res.is_coboundary = false;
        res.witness = vec;
    }
    return res;
}

std::pair<EndoMatrix, DerBarElement> noncommutativity_witness_pair(
    const AdamsSpec& spec, const std::vector<long>& primes) {
    if (spec.family != Family::Sprh) throw SpecError("witness pair requires S((p^r), h)");
    EndoMatrix g(3);
    g.at(2, 1) = spec.h / spec.D;
    g.at(2, 2) = spec.G / spec.D;
    DerBarElement f{spec, primes, {}};
    for (long p : primes) {
        Int bp = spec.b.at(p);
        EndoMatrix fp(3);
        fp.at(1, 2) = 2 * bp * (bp - 1) / spec.G;
        f.f.push_back(fp);
    }
    return {g, f};
}

CommutativityResult graded_commutativity(const AdamsSpec& spec, const std::vector<long>& primes) {
    if (std::find(primes.begin(), primes.end(), 2) == primes.end())
        throw std::invalid_argument("graded_commutativity: window must contain 2");
    CommutativityResult res;
    H0Lattice h0 = h0_lattice(spec, primes);
    Lattice der = derbar_lattice(spec, primes);

    // explicit witness first for the S((p^r), h) rings with D > 1
    if (spec.family == Family::Sprh && spec.D > 1) {
        auto [g, f] = noncommutativity_witness_pair(spec, primes);
        if (member(h0.lattice, g.flatten()) && member(der, f.coords())) {
            auto cls = compose_classes(spec, g, f, primes);
            if (!cls.is_coboundary) {
                res.commutative = false;
                res.witness_g = g;
                res.witness_f = f;
                res.note = "explicit witness pair";
                return res;
            }
        }
        res.note = "explicit witness pair degenerated; basis scan used";
    }

    for (std::size_t i = 0; i < h0.lattice.rank(); ++i) {
        EndoMatrix g = EndoMatrix::unflatten(spec.n, h0.lattice.basis_row(i));
        for (std::size_t j = 0; j < der.rank(); ++j) {
            DerBarElement f = DerBarElement::from_coords(spec, primes, der.basis_row(j));
            auto cls = compose_classes(spec, g, f, primes);
            if (!cls.is_coboundary) {
                res.commutative = false;
                res.witness_g = g;
                res.witness_f = f;
                res.note = "basis scan witness";
                return res;
            }
        }
    }
    res.commutative = true;
    return res;
}

Cochain1 cochain_of(const DerBarElement& f) {
    return [f](long m) { return reconstruct(f, m); };
}

Cochain1 seeded_cochain(const AdamsSpec& spec, unsigned seed) {
    std::size_t n = spec.n;
    return [n, seed](long m) {
        EndoMatrix e(n);
        Int scale = is_prime(m) ? Int(m) : Int(1);
        unsigned long state = seed * 2654435761ul + static_cast<unsigned long>(m) * 40503ul;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                state = state * 6364136223846793005ul + 1442695040888963407ul;
                long v = static_cast<long>((state >> 33) % 11) - 5;
                e.at(i, j) = scale * v;
            }
        return e;
    };
}

namespace {

std::vector<long> smooth_samples(const std::vector<long>& primes, int count) {
    std::vector<long> out{1};
    for (long p : primes) out.push_back(p);
    std::size_t i = 0;
    while (static_cast<int>(out.size()) < count && i < out.size()) {
        for (long p : primes) {
            long v = out[i] * p;
            if (v <= 10000 && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
            if (static_cast<int>(out.size()) >= count) break;
        }
        ++i;
    }
    return out;
}

}  // namespace

bool leibnitz_check(const AdamsSpec& spec, const EndoMatrix& g, const Cochain1& f,
                    const std::vector<long>& primes, int samples) {
    auto args = smooth_samples(primes, samples);
    auto psi = [&](long m) { return adams_composite(spec, m); };
    auto d0g = [&](long m) { return commutator(psi(m), g); };
    auto d1f = [&](long m0, long m1) {
        return psi(m0) * f(m1) - f(m0 * m1) + f(m0) * psi(m1);
    };

    // degree (0,0): d0(g g) = d0(g) g + g d0(g)
    for (long m : args) {
        EndoMatrix lhs = commutator(psi(m), g * g);
        EndoMatrix rhs = d0g(m) * g + g * d0g(m);
        if (!(lhs == rhs)) return false;
    }
    // degree (0,1): d1(g∘f) = d0(g)∘f + g∘d1(f)
    for (long m0 : args)
        for (long m1 : args) {
            if (m0 * m1 > 10000) continue;
            EndoMatrix lhs = psi(m0) * (g * f(m1)) - g * f(m0 * m1) + (g * f(m0)) * psi(m1);
            EndoMatrix rhs = d0g(m0) * f(m1) + g * d1f(m0, m1);
            if (!(lhs == rhs)) return false;
        }
    // degree (1,0): d1(f∘g) = d1(f)∘g - f∘d0(g)
    for (long m0 : args)
        for (long m1 : args) {
            if (m0 * m1 > 10000) continue;
            EndoMatrix lhs = psi(m0) * (f(m1) * g) - f(m0 * m1) * g + (f(m0) * g) * psi(m1);
            EndoMatrix rhs = d1f(m0, m1) * g - f(m0) * d0g(m1);
            if (!(lhs == rhs)) return false;
        }
    return true;
}

CohomologyReport cohomology_report(const AdamsSpec& spec, const std::vector<long>& primes) {
    CohomologyReport rep;
    rep.n = spec.n;
    rep.label = spec.label;
    rep.primes = primes;
    H0Algebra alg = h0_algebra(spec, primes);
    H0Lattice h0 = h0_lattice(spec, primes);
    rep.h0_rank = alg.basis.size();
    rep.h0_basis = alg.basis;
    rep.h0_commutative = alg.commutative;
    rep.h0_stabilized = h0.stabilized;
    H1Result h1 = h1_report(spec, primes);
    rep.h1 = h1.invariants;
    rep.h1_torsion_stable = h1.torsion_stable;
    rep.h1_free_rank_formula = h1.free_rank_formula;
    CommutativityResult comm = graded_commutativity(spec, primes);
    rep.graded_commutative = comm.commutative;
    rep.witness_note = comm.note;
    return rep;
}

}  // namespace lambdacoh
