#include "lambdacoh/normal_form.hpp"

#include <algorithm>
#include <sstream>

namespace lambdacoh {

std::string AbelianInvariants::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& d : torsion) {
        if (!first) os << " x ";
        os << "Z/" << d;
        first = false;
    }
    if (free_rank > 0) {
        if (!first) os << " x ";
        os << "Z^" << free_rank;
    }
    return os.str();
}

AbelianInvariants AbelianInvariants::of_cyclic_product(const std::vector<Int>& orders) {
    std::size_t k = orders.size();
    IntMatrix rel(k, k);
    std::size_t free_zero = 0;
    for (std::size_t i = 0; i < k; ++i) {
        rel.at(i, i) = orders[i];
        if (orders[i] == 0) ++free_zero;
    }
    (void)free_zero;
    return snf(rel).cokernel;
}

HnfResult hnf(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        std::size_t piv = r;
        while (piv < h.rows() && h.at(piv, c) == 0) ++piv;
        if (piv == h.rows()) continue;
        h.swap_rows(r, piv);
        u.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < h.rows(); ++i) {
            if (h.at(i, c) == 0) continue;
            Int x, y;
            Int g = extended_gcd(h.at(r, c), h.at(i, c), x, y);
            Int ar = h.at(r, c) / g;
            Int ai = h.at(i, c) / g;
            // unimodular 2x2: [x y; -ai ar], det = x*ar + y*ai = 1
            for (std::size_t t = 0; t < h.cols(); ++t) {
                Int hr = h.at(r, t), hi = h.at(i, t);
                h.at(r, t) = x * hr + y * hi;
                h.at(i, t) = ar * hi - ai * hr;
            }
            for (std::size_t t = 0; t < u.cols(); ++t) {
                Int ur = u.at(r, t), ui = u.at(i, t);
                u.at(r, t) = x * ur + y * ui;
                u.at(i, t) = ar * ui - ai * ur;
            }
        }
        if (h.at(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = fdiv(h.at(i, c), h.at(r, c));
            if (q != 0) {
                h.add_row_multiple(i, r, -q);
                u.add_row_multiple(i, r, -q);
            }
        }
        ++r;
    }
    return {std::move(h), std::move(u)};
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix h = hnf(m).h;
    std::size_t r = 0;
    for (std::size_t i = 0; i < h.rows(); ++i)
        if (!std::all_of(h.row(i).begin(), h.row(i).end(), [](const Int& v) { return v == 0; }))
            ++r;
    return r;
}

namespace {

bool block_is_clear(const IntMatrix& d, std::size_t k) {
    for (std::size_t i = k + 1; i < d.rows(); ++i)
        if (d.at(i, k) != 0) return false;
    for (std::size_t j = k + 1; j < d.cols(); ++j)
        if (d.at(k, j) != 0) return false;
    return true;
}

// smallest nonzero |entry| of the trailing block, or false if all zero
bool find_pivot(const IntMatrix& d, std::size_t k, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = k; i < d.rows(); ++i)
        for (std::size_t j = k; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            Int a = abs(d.at(i, j));
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
    IntMatrix d = m;
    std::size_t nmin = std::min(d.rows(), d.cols());
    for (std::size_t k = 0; k < nmin; ++k) {
        std::size_t pi, pj;
        if (!find_pivot(d, k, pi, pj)) break;
        d.swap_rows(k, pi);
        d.swap_cols(k, pj);
        while (!block_is_clear(d, k)) {
            for (std::size_t i = k + 1; i < d.rows(); ++i) {
                while (d.at(i, k) != 0) {
                    if (abs(d.at(i, k)) < abs(d.at(k, k))) d.swap_rows(k, i);
                    Int q = d.at(i, k) / d.at(k, k);
                    d.add_row_multiple(i, k, -q);
                }
            }
            for (std::size_t j = k + 1; j < d.cols(); ++j) {
                while (d.at(k, j) != 0) {
                    if (abs(d.at(k, j)) < abs(d.at(k, k))) d.swap_cols(k, j);
                    Int q = d.at(k, j) / d.at(k, k);
                    d.add_col_multiple(j, k, -q);
                }
            }
        }
        // divisibility: pivot must divide every entry of the trailing block
        bool redo = true;
        while (redo) {
            redo = false;
            for (std::size_t i = k + 1; i < d.rows() && !redo; ++i)
                for (std::size_t j = k + 1; j < d.cols() && !redo; ++j)
                    if (d.at(i, j) % d.at(k, k) != 0) {
                        d.add_row_multiple(k, i, 1);
                        redo = true;
                    }
            if (redo) {
                while (!block_is_clear(d, k)) {
                    for (std::size_t i = k + 1; i < d.rows(); ++i)
                        while (d.at(i, k) != 0) {
                            if (abs(d.at(i, k)) < abs(d.at(k, k))) d.swap_rows(k, i);
                            Int q = d.at(i, k) / d.at(k, k);
                            d.add_row_multiple(i, k, -q);
                        }
                    for (std::size_t j = k + 1; j < d.cols(); ++j)
                        while (d.at(k, j) != 0) {
                            if (abs(d.at(k, j)) < abs(d.at(k, k))) d.swap_cols(k, j);
                            Int q = d.at(k, j) / d.at(k, k);
                            d.add_col_multiple(j, k, -q);
                        }
                }
            }
        }
        if (d.at(k, k) < 0) d.negate_row(k);
    }
    AbelianInvariants inv;
    std::size_t nonzero = 0;
    for (std::size_t k = 0; k < nmin; ++k) {
        if (d.at(k, k) != 0) {
            ++nonzero;
            if (d.at(k, k) > 1) inv.torsion.push_back(d.at(k, k));
        }
    }
    inv.free_rank = d.cols() - nonzero;
    return {std::move(d), std::move(inv)};
}

}  // namespace lambdacoh
