#include "lambdacoh/closed_forms.hpp"

#include <stdexcept>

namespace lambdacoh {

namespace {

std::vector<Int> unit(std::size_t dim, std::size_t idx, long v = 1) {
    std::vector<Int> row(dim);
    row[idx] = v;
    return row;
}

// kernel of equality rows combined with a fixed zero pattern on entries
Lattice pattern_kernel(std::size_t nn, const std::vector<std::size_t>& zero_entries,
                       const std::vector<std::vector<Int>>& relations) {
    std::vector<std::vector<Int>> rows;
    for (std::size_t idx : zero_entries) rows.push_back(unit(nn, idx));
    for (const auto& r : relations) rows.push_back(r);
    return kernel_lattice(IntMatrix::from_row_vectors(rows, nn));
}

}  // namespace

Lattice endbar_closed_form(std::size_t n) {
    std::size_t nn = n * n;
    switch (n) {
        case 1:
            return Lattice::full(1);
        case 2:
            return Lattice::from_generators(4, {unit(4, 0), unit(4, 3)});
        case 3: {
            // entries (row-major): a = 0; j = 4, s = 5, k = 7, t = 8
            std::vector<std::vector<Int>> gens;
            gens.push_back(unit(9, 0));
            auto jt = unit(9, 4);
            jt[8] = 1;  // j = t = 1
            gens.push_back(jt);
            gens.push_back(unit(9, 7));     // k
            gens.push_back(unit(9, 5, 2));  // s = 2
            gens.push_back(unit(9, 8, 2));  // t = 2
            return Lattice::from_generators(9, gens);
        }
        case 4: {
            // [[a,.,.,.],[.,j,n,u],[.,k,r,v],[.,l,s,w]] indices:
            // a=0 j=5 n=6 u=7 k=9 r=10 v=11 l=13 s=14 w=15
            std::vector<std::vector<Int>> gens;
            gens.push_back(unit(16, 0));
            auto jrw = unit(16, 5);
            jrw[10] = 1;
            jrw[15] = 1;  // j = r = w = 1
            gens.push_back(jrw);
            gens.push_back(unit(16, 6, 6));   // n = 6
            gens.push_back(unit(16, 7, 6));   // u = 6
            gens.push_back(unit(16, 9));      // k
            gens.push_back(unit(16, 10, 2));  // r = 2
            gens.push_back(unit(16, 11, 3));  // v = 3
            gens.push_back(unit(16, 13));     // l
            gens.push_back(unit(16, 14, 2));  // s = 2
            gens.push_back(unit(16, 15, 3));  // w = 3
            return Lattice::from_generators(16, gens);
        }
        default:
            throw std::invalid_argument("endbar closed form available for n <= 4 only");
    }
    (void)nn;
}

Lattice h0_closed_form_zero_b() {
    // [[a,.,.],[.,j,.],[.,k,j]]: zero at 1,2,3,5,6; t = j
    std::vector<std::vector<Int>> gens;
    gens.push_back(unit(9, 0));
    auto jj = unit(9, 4);
    jj[8] = 1;
    gens.push_back(jj);
    gens.push_back(unit(9, 7));
    return Lattice::from_generators(9, gens);
}

Lattice h0_closed_form_nonzero_b(const Int& G, const Int& h) {
    // entries a=0, j=4, k=7, t=8; h(t - j) = k G, everything else zero
    std::vector<Int> rel(9);
    rel[4] = -h;
    rel[8] = h;
    rel[7] = -G;
    return pattern_kernel(9, {1, 2, 3, 5, 6}, {rel});
}

Lattice h0_closed_form_binomial() {
    // a=0 j=5 k=9 r=10 l=13 s=14 w=15; r = j+2k, s = 4k+6l, w = j+6k+6l
    std::vector<std::vector<Int>> rels;
    {
        std::vector<Int> r1(16);
        r1[10] = 1;
        r1[5] = -1;
        r1[9] = -2;
        rels.push_back(r1);
        std::vector<Int> r2(16);
        r2[14] = 1;
        r2[9] = -4;
        r2[13] = -6;
        rels.push_back(r2);
        std::vector<Int> r3(16);
        r3[15] = 1;
        r3[5] = -1;
        r3[9] = -6;
        r3[13] = -6;
        rels.push_back(r3);
    }
    return pattern_kernel(16, {1, 2, 3, 4, 8, 12, 6, 7, 11}, rels);
}

Lattice h0_closed_form_quadratic(const Int& h, const Int& d2) {
    std::vector<std::vector<Int>> rels;
    if (h == 1) {
        std::vector<Int> r1(16);
        r1[10] = 1;
        r1[5] = -1;
        r1[9] = -12;
        rels.push_back(r1);
        std::vector<Int> r2(16);
        r2[14] = 6 * d2 + 1;
        r2[9] = -(8 - 12 * d2);
        r2[13] = -60;
        rels.push_back(r2);
        std::vector<Int> r3(16);
        r3[15] = 1;
        r3[14] = -6;
        r3[5] = -1;
        r3[9] = -12;
        rels.push_back(r3);
    } else if (h == 5) {
        std::vector<Int> r1(16);
        r1[10] = 5;
        r1[5] = -5;
        r1[9] = -12;  // 5(r - j) = 12k (forces k ≡ 0 mod 5)
        rels.push_back(r1);
        std::vector<Int> r2(16);
        r2[14] = 6 * d2 + 25;
        r2[9] = -(200 - 12 * d2);
        r2[13] = -300;
        rels.push_back(r2);
        std::vector<Int> r3(16);
        r3[15] = 6 * d2 + 25;
        r3[5] = -(6 * d2 + 25);
        r3[9] = -300;
        r3[13] = -360;
        rels.push_back(r3);
    } else {
        throw std::invalid_argument("quadratic closed form needs h = 1 or 5");
    }
    return pattern_kernel(16, {1, 2, 3, 4, 8, 12, 6, 7, 11}, rels);
}

}  // namespace lambdacoh
