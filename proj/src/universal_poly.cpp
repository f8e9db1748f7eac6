#include "lambdacoh/universal_poly.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace lambdacoh {

namespace {

// multiply the truncated t-series (coeffs by t-degree) by (1 + mono*t)
void multiply_factor(std::vector<MultiPoly>& series, const MultiPoly& mono) {
    for (std::size_t d = series.size(); d-- > 1;) series[d] = series[d] + series[d - 1] * mono;
}

// rewrite the variables in [block_begin, block_end) of p (symmetric there) in
// elementary symmetric generators, keeping the other variables inert. The
// result reuses the same variable slots: slot block_begin+k stands for e_{k+1}.
MultiPoly rewrite_block(const MultiPoly& p, int block_begin, int block_end) {
    int n = p.nvars();
    int bs = block_end - block_begin;
    // group by the exponents outside the block
    std::map<MultiPoly::Exponents, MultiPoly> groups;
    for (const auto& [e, c] : p.terms()) {
        MultiPoly::Exponents outer(e);
        MultiPoly::Exponents inner(bs);
        for (int k = 0; k < bs; ++k) {
            inner[k] = e[block_begin + k];
            outer[block_begin + k] = 0;
        }
        auto it = groups.try_emplace(outer, MultiPoly(bs)).first;
        it->second.add_term(inner, c);
    }
    MultiPoly out(n);
    for (const auto& [outer, inner_poly] : groups) {
        MultiPoly rewritten = express_in_elementary(inner_poly);
        for (const auto& [ie, ic] : rewritten.terms()) {
            MultiPoly::Exponents e(outer);
            for (int k = 0; k < bs; ++k) e[block_begin + k] = ie[k];
            out.add_term(e, ic);
        }
    }
    return out;
}

std::mutex cache_mutex;

}  // namespace

MultiPoly product_coefficient(int i) {
    if (i < 1) throw std::invalid_argument("product_coefficient: i >= 1 required");
    int nv = 2 * i;
    std::vector<MultiPoly> series;
    series.reserve(i + 1);
    series.emplace_back(MultiPoly::constant(nv, 1));
    for (int d = 0; d < i; ++d) series.emplace_back(MultiPoly(nv));
    for (int m = 0; m < i; ++m)
        for (int n = 0; n < i; ++n)
            multiply_factor(series, MultiPoly::var(nv, m) * MultiPoly::var(nv, i + n));
    return series[i];
}

MultiPoly product_coefficient_composite(int i, int j) {
    if (i < 1 || j < 1) throw std::invalid_argument("product_coefficient_composite: i, j >= 1");
    int nv = i * j;
    std::vector<MultiPoly> series;
    series.reserve(i + 1);
    series.emplace_back(MultiPoly::constant(nv, 1));
    for (int d = 0; d < i; ++d) series.emplace_back(MultiPoly(nv));
    // iterate j-subsets of {0..nv-1}
    std::vector<int> idx(j);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        MultiPoly mono = MultiPoly::constant(nv, 1);
        for (int t : idx) mono = mono * MultiPoly::var(nv, t);
        multiply_factor(series, mono);
        int pos = j - 1;
        while (pos >= 0 && idx[pos] == nv - j + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int t = pos + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
    }
    return series[i];
}

const MultiPoly& universal_P(int i, const UniversalCaps& caps) {
    if (i < 1 || i > caps.max_i) throw std::invalid_argument("universal_P: i out of cap range");
    static std::map<int, MultiPoly> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(i);
    if (it != cache.end()) return it->second;
    MultiPoly raw = product_coefficient(i);
    MultiPoly s_done = rewrite_block(raw, 0, i);
    MultiPoly both = rewrite_block(s_done, i, 2 * i);
    return cache.emplace(i, std::move(both)).first->second;
}

const MultiPoly& universal_P_composite(int i, int j, const UniversalCaps& caps) {
    if (i < 1 || j < 1 || i * j > caps.max_ij)
        throw std::invalid_argument("universal_P_composite: ij out of cap range");
    static std::map<std::pair<int, int>, MultiPoly> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(i, j);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    MultiPoly raw = product_coefficient_composite(i, j);
    MultiPoly done = rewrite_block(raw, 0, i * j);
    return cache.emplace(key, std::move(done)).first->second;
}

}  // namespace lambdacoh
