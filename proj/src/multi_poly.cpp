#include "lambdacoh/multi_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace lambdacoh {

MultiPoly MultiPoly::constant(int nvars, Int c) {
    MultiPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::var(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("variable index out of range");
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

void MultiPoly::add_term(const Exponents& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::permuted(const std::vector<int>& perm) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents pe(nvars_, 0);
        for (int i = 0; i < nvars_; ++i) pe[perm[i]] = e[i];
        out.add_term(pe, c);
    }
    return out;
}

bool MultiPoly::is_symmetric() const {
    std::vector<int> perm(nvars_);
    for (int k = 0; k + 1 < nvars_; ++k) {
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[k], perm[k + 1]);
        if (permuted(perm) != *this) return false;
    }
    return true;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw std::invalid_argument("substitute: wrong number of images");
    int target = nvars_ ? images[0].nvars() : 0;
    MultiPoly out(target);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(target, c);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) term = term * images[i];
        out = out + term;
    }
    return out;
}

TruncPoly MultiPoly::eval(const std::vector<TruncPoly>& values) const {
    if (static_cast<int>(values.size()) != nvars_)
        throw std::invalid_argument("eval: wrong number of values");
    if (values.empty()) throw std::invalid_argument("eval: no values");
    std::size_t n = values[0].order();
    TruncPoly out(n);
    for (const auto& [e, c] : terms_) {
        TruncPoly term = TruncPoly::constant(n, c);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) term = term * values[i];
        out = out + term;
    }
    return out;
}

Int MultiPoly::eval_int(const std::vector<Int>& values) const {
    if (static_cast<int>(values.size()) != nvars_)
        throw std::invalid_argument("eval_int: wrong number of values");
    Int out = 0;
    for (const auto& [e, c] : terms_) {
        Int term = c;
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) term *= values[i];
        out += term;
    }
    return out;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << '-';
        Int mag = abs(c);
        bool any_var = std::any_of(e.begin(), e.end(), [](int x) { return x > 0; });
        if (mag != 1 || !any_var) os << mag;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << names[i];
            if (e[i] > 1) os << '^' << e[i];
        }
        first = false;
    }
    return os.str();
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, c);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms()) out.add_term(e, -c);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
    MultiPoly out(a.nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            MultiPoly::Exponents e(a.nvars());
            for (int i = 0; i < a.nvars(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly operator*(const Int& c, const MultiPoly& a) {
    MultiPoly out(a.nvars());
    for (const auto& [e, ca] : a.terms()) out.add_term(e, c * ca);
    return out;
}

MultiPoly elementary_symmetric(int k, int nvars) {
    if (k < 0 || k > nvars) throw std::invalid_argument("elementary_symmetric: k out of range");
    MultiPoly out(nvars);
    // iterate k-subsets
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (k == 0) return MultiPoly::constant(nvars, 1);
    while (true) {
        MultiPoly::Exponents e(nvars, 0);
        for (int i : idx) e[i] = 1;
        out.add_term(e, 1);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == nvars - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int t = pos + 1; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
    return out;
}

namespace {

// graded lex: total degree first, then lexicographic
bool graded_lex_less(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

MultiPoly express_in_elementary(const MultiPoly& p) {
    if (!p.is_symmetric()) throw std::invalid_argument("express_in_elementary: not symmetric");
    int n = p.nvars();
    std::vector<MultiPoly> elem;
    for (int k = 1; k <= n; ++k) elem.push_back(elementary_symmetric(k, n));
    MultiPoly rest = p;
    MultiPoly result(n);
    while (!rest.is_zero()) {
        auto lead = rest.terms().begin();
        for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
            if (graded_lex_less(lead->first, it->first)) lead = it;
        const auto& e = lead->first;
        for (int i = 0; i + 1 < n; ++i)
            if (e[i] < e[i + 1])
                throw std::invalid_argument("express_in_elementary: leading term not a partition");
        Int c = lead->second;
        // e corresponds to e_1^{a1-a2} e_2^{a2-a3} ... e_n^{an}
        MultiPoly::Exponents powers(n, 0);
        for (int i = 0; i < n; ++i) powers[i] = (i + 1 < n) ? e[i] - e[i + 1] : e[i];
        MultiPoly expanded = MultiPoly::constant(n, c);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < powers[i]; ++k) expanded = expanded * elem[i];
        rest = rest - expanded;
        MultiPoly term(n);
        term.add_term(powers, c);
        result = result + term;
    }
    return result;
}

}  // namespace lambdacoh
