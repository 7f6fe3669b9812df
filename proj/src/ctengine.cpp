#include "qkz/ctengine.hpp"

#include <algorithm>
#include <stdexcept>

#include "qkz/matrix.hpp"
#include "qkz/multipoly.hpp"
#include "qkz/parallel.hpp"

namespace qkz {

ClosingIndex::ClosingIndex(std::vector<int> bb) : n(static_cast<int>(bb.size())), b(std::move(bb)) {
    if (b.empty()) throw std::domain_error("ClosingIndex: empty");
    for (size_t i = 0; i < b.size(); ++i) {
        if (b[i] < 0) throw std::domain_error("ClosingIndex: negative entry");
        if (i > 0 && b[i] <= b[i - 1])
            throw std::domain_error("ClosingIndex: entries must strictly increase");
    }
}

bool ClosingIndex::canonical_even() const {
    for (int i = 0; i < n; ++i)
        if (b[static_cast<size_t>(i)] < 1 || b[static_cast<size_t>(i)] > 2 * i + 1) return false;
    return true;
}

bool ClosingIndex::canonical_odd() const {
    for (int i = 0; i < n; ++i)
        if (b[static_cast<size_t>(i)] < 1 || b[static_cast<size_t>(i)] > 2 * i + 2) return false;
    return true;
}

namespace {

using MP = MultiPoly<TauPoly>;

MP pairs_kernel(int n, const std::vector<int>& caps, bool odd) {
    auto mono = [n, &caps](int v, int e, TauPoly c) {
        MP p(n, caps);
        std::vector<int> ex(static_cast<size_t>(n), 0);
        ex[static_cast<size_t>(v)] = e;
        p.add_term(ex, std::move(c));
        return p;
    };
    auto pair_term = [n, &caps](int v1, int v2, TauPoly c) {
        MP p(n, caps);
        std::vector<int> ex(static_cast<size_t>(n), 0);
        ex[static_cast<size_t>(v1)] += 1;
        ex[static_cast<size_t>(v2)] += 1;
        p.add_term(ex, std::move(c));
        return p;
    };
    const TauPoly one(1), t = TauPoly::tau();
    MP acc = MP::constant(n, one, caps);
    for (int l = 0; l < n; ++l)
        for (int m = l; m < n; ++m) acc = acc * (MP::constant(n, one, caps) - pair_term(l, m, one));
    for (int l = 0; l < n; ++l)
        for (int m = l + 1; m < n; ++m) {
            acc = acc * (mono(m, 1, one) - mono(l, 1, one));
            acc = acc * (MP::constant(n, one, caps) + mono(m, 1, t) + pair_term(l, m, one));
            acc = acc * (MP::constant(n, t, caps) + mono(l, 1, one) + mono(m, 1, one));
        }
    if (odd)
        for (int m = 0; m < n; ++m)
            acc = acc * (MP::constant(n, one, caps) + mono(m, 1, t) + mono(m, 2, one));
    return acc;
}

TauPoly k_value(const ClosingIndex& bi, bool odd) {
    for (int x : bi.b)
        if (x == 0) return TauPoly();
    std::vector<int> caps(bi.b.size());
    std::vector<int> want(bi.b.size());
    for (size_t i = 0; i < bi.b.size(); ++i) caps[i] = want[i] = bi.b[i] - 1;
    return pairs_kernel(bi.n, caps, odd).coeff(want);
}

Int binom_det(const ClosingIndex& bi, bool row_shifted, int top_extra) {
    size_t v = bi.b.size();
    Matrix<Int> M(v, std::vector<Int>(v));
    for (size_t l = 0; l < v; ++l)
        for (size_t m = 0; m < v; ++m) {
            long upper = row_shifted ? static_cast<long>(l) + top_extra : static_cast<long>(m);
            M[l][m] = binom(upper, bi.b[l] - static_cast<long>(m) - 1);
        }
    return bareiss_det(M);
}

}  // namespace

TauPoly k_even(const ClosingIndex& b) { return k_value(b, false); }

TauPoly k_odd(const ClosingIndex& b) { return k_value(b, true); }

std::vector<TauPoly> k_batch(const std::vector<ClosingIndex>& bs, bool odd, int jobs) {
    std::vector<TauPoly> out(bs.size());
    parallel_for(jobs, bs.size(), [&](size_t i) { out[i] = k_value(bs[i], odd); });
    return out;
}

TauLimits tau_limits_even(const ClosingIndex& b) {
    TauLimits lim;
    int sum = 0;
    for (int x : b.b) sum += x;
    lim.valuation = b.n * b.n - sum;
    lim.degree = sum - b.n;
    lim.low = binom_det(b, false, 0);
    lim.top = binom_det(b, true, 0);
    return lim;
}

TauLimits tau_limits_odd(const ClosingIndex& b) {
    TauLimits lim;
    int sum = 0;
    for (int x : b.b) sum += x;
    lim.valuation = b.n * (b.n - 1) - (sum - b.n);
    lim.degree = sum - b.n;
    lim.low = binom_det(b, false, 0);
    lim.top = binom_det(b, true, 1);
    for (int i = 0; i < b.n; ++i)
        if (b.b[static_cast<size_t>(i)] == 2 * (i + 1)) lim.valuation_asserted = false;
    return lim;
}

}
