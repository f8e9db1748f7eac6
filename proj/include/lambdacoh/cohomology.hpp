#pragma once

#include "lambdacoh/adams_spec.hpp"
#include "lambdacoh/lattice.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lambdacoh {

// A 1-cochain restricted to prime arguments: f(p) = p * A(p) with the
// pairwise compatibility relation
//   psi^p f(q) + f(p) psi^q = psi^q f(p) + f(q) psi^p.
// Lattice coordinates are the A(p) blocks (divisibility baked in).
struct DerBarElement {
    AdamsSpec spec;
    std::vector<long> primes;
    std::vector<EndoMatrix> f;  // f[i] = f(primes[i]), entries divisible by primes[i]

    const EndoMatrix& at(long p) const;
    std::vector<Int> coords() const;  // concatenated A(p) = f(p)/p blocks
    bool is_cocycle() const;

    static DerBarElement from_coords(const AdamsSpec& spec, const std::vector<long>& primes,
                                     const std::vector<Int>& a_coords);
};

// All g with g(r)^p ≡ g(r^p) (mod p) for every prime, as a lattice in Z^{n^2}.
// Primes >= n collapse mod p to the projection onto the constant term, forcing
// the first row and column of g to vanish away from (0,0); primes p < n
// contribute the residual congruences, solved exactly.
Lattice endbar_lattice(const AdamsSpec& spec);

struct H0Lattice {
    Lattice lattice;   // in Z^{n^2}
    bool stabilized;   // unchanged when the window grows by three primes
};

// Endbar intersected with the centralizer of {psi^p : p in window}.
H0Lattice h0_lattice(const AdamsSpec& spec, const std::vector<long>& primes);

struct H0Algebra {
    std::vector<EndoMatrix> basis;
    // table[a][b] = coordinates of basis[a] * basis[b] in the basis
    std::vector<std::vector<std::vector<Int>>> table;
    std::vector<Int> unit_coords;  // identity in basis coordinates
    bool commutative = true;
};

// Multiplication table of the H0 basis; products must stay in the lattice
// (escape signals a window-stabilization failure and throws).
H0Algebra h0_algebra(const AdamsSpec& spec, const std::vector<long>& primes);

// Window truncation of the prime-indexed cocycle group, in Z^{|P| n^2}
// A-coordinates. Besides the pairwise relations within the window, the
// relations against every prime outside the window are kept: any q >= n
// forces the first row and column of each A(p) to vanish, and each q < n
// outside the window contributes a mod-q congruence block.
Lattice derbar_lattice(const AdamsSpec& spec, const std::vector<long>& primes);

// Image of endbar under g ↦ ([psi^p, g]/p)_p. Always inside derbar_lattice
// (d1 ∘ d0 = 0); an inclusion failure throws.
Lattice innbar_lattice(const AdamsSpec& spec, const std::vector<long>& primes);

// quotient(innbar, derbar) at the window.
AbelianInvariants h1_group(const AdamsSpec& spec, const std::vector<long>& primes);

struct H1Result {
    AbelianInvariants invariants;
    bool torsion_stable = false;            // unchanged when the window grows
    std::optional<std::string> free_rank_formula;  // e.g. "3*|P|" when affine in |P|
};
H1Result h1_report(const AdamsSpec& spec, const std::vector<long>& primes);

// The unique derivation value at m: f(m) = sum psi^{prefix} f(p_i) psi^{suffix}
// over any prime factorization of m (order-independence asserted).
EndoMatrix reconstruct(const DerBarElement& f, long m);

// ([psi^p, g])_p for g in Endbar; divisibility by p verified.
DerBarElement d0(const AdamsSpec& spec, const EndoMatrix& g, const std::vector<long>& primes);

// f(mn) = psi^m f(n) + f(m) psi^n for every supplied pair.
bool d1_check(const DerBarElement& f, const std::vector<std::pair<long, long>>& pairs);

struct ComposeClassResult {
    bool is_coboundary = false;
    std::vector<Int> coboundary_coords;  // in the innbar basis, when a coboundary
    std::vector<Int> witness;            // the commutator family vector otherwise
};

// Class of g∘f - f∘g = (g f(p) - f(p) g)_p modulo innbar.
ComposeClassResult compose_classes(const AdamsSpec& spec, const EndoMatrix& g,
                                   const DerBarElement& f, const std::vector<long>& primes);

struct CommutativityResult {
    bool commutative = true;
    std::optional<EndoMatrix> witness_g;
    std::optional<DerBarElement> witness_f;
    std::string note;
};

// H^{<=1} graded commutativity: compose_classes vanishes on all pairs from an
// H0 basis and a derbar basis. For S((p^r), h) with D > 1 the explicit
// witness pair (g with entries h/D, G/D; f with the (2,3) column) is tried
// first; a basis scan is the fallback.
CommutativityResult graded_commutativity(const AdamsSpec& spec, const std::vector<long>& primes);

// The explicit witness pair for S((p^r), h), D > 1.
std::pair<EndoMatrix, DerBarElement> noncommutativity_witness_pair(const AdamsSpec& spec,
                                                                   const std::vector<long>& primes);

// 1-cochains for cochain-level identities: arbitrary assignments m ↦ End(R)
// with f(p) divisible by p at primes.
using Cochain1 = std::function<EndoMatrix(long)>;

Cochain1 cochain_of(const DerBarElement& f);
// deterministic pseudo-random 1-cochain (seeded), p-divisible at primes
Cochain1 seeded_cochain(const AdamsSpec& spec, unsigned seed);

// d(f∘g) = (df)∘g + (-1)^{|f|} f∘(dg) at degrees (0,0), (0,1), (1,0) on
// sampled window-smooth arguments.
bool leibnitz_check(const AdamsSpec& spec, const EndoMatrix& g, const Cochain1& f,
                    const std::vector<long>& primes, int samples = 12);

struct CohomologyReport {
    std::size_t n = 0;
    std::string label;
    std::vector<long> primes;
    std::size_t h0_rank = 0;
    std::vector<EndoMatrix> h0_basis;
    bool h0_commutative = true;
    bool h0_stabilized = true;
    AbelianInvariants h1;
    bool h1_torsion_stable = true;
    std::optional<std::string> h1_free_rank_formula;
    bool graded_commutative = true;
    std::string witness_note;
};

CohomologyReport cohomology_report(const AdamsSpec& spec, const std::vector<long>& primes);

}  // namespace lambdacoh
