#include "qkz/basis.hpp"

#include <algorithm>
#include <stdexcept>

#include "qkz/cheb.hpp"
#include "qkz/parallel.hpp"

namespace qkz {

namespace {

// No range validation: entries below 1 or above 2n-1 simply never lie under
// any arch, which makes the product vanish through some U_{-1} factor.
TauPoly entry_product(const std::vector<int>& a, const LinkPattern& pi) {
    int N = pi.size();
    TauPoly out(1);
    for (int i = 1; i <= N; ++i) {
        int j = pi.partner(i);
        if (j <= i) continue;
        int cnt = 0;
        for (int x : a)
            if (x >= i && x < j) ++cnt;
        out = out * cheb_u_ext(cnt + (i - j - 1) / 2);
        if (out.is_zero()) break;
    }
    return out;
}

}  // namespace

TauPoly c_entry(const std::vector<int>& a, const LinkPattern& pi) {
    int N = pi.size();
    if (N % 2 != 0) throw std::domain_error("c_entry: pattern size must be even");
    int n = N / 2;
    if (static_cast<int>(a.size()) != n)
        throw std::domain_error("c_entry: sequence length must equal arch count");
    for (size_t j = 0; j < a.size(); ++j) {
        if (a[j] < 1 || a[j] > N - 1)
            throw std::domain_error("c_entry: sequence entry out of range");
        if (j > 0 && a[j] < a[j - 1])
            throw std::domain_error("c_entry: sequence must be non-decreasing");
    }
    return entry_product(a, pi);
}

BasisMatrix build_matrix(int n, int jobs) {
    if (n < 1) throw std::domain_error("build_matrix: n must be positive");
    BasisMatrix C;
    C.n = n;
    C.index = enumerate_patterns(2 * n);
    size_t v = C.index.size();
    C.entries.assign(v, std::vector<TauPoly>(v));
    parallel_for(jobs, v, [&C, v](size_t r) {
        std::vector<int> a = C.index[r].openings();
        for (size_t c = 0; c < v; ++c) C.entries[r][c] = entry_product(a, C.index[c]);
    });
    return C;
}

BasisMatrix invert(const BasisMatrix& C) {
    size_t v = C.index.size();
    const TauPoly one(1);
    for (size_t r = 0; r < v; ++r) {
        if (C.entries[r][r] != one)
            throw std::runtime_error("invert: diagonal entry is not 1");
        for (size_t c = r + 1; c < v; ++c)
            if (!C.entries[r][c].is_zero())
                throw std::runtime_error("invert: nonzero entry above the diagonal");
    }
    BasisMatrix D;
    D.n = C.n;
    D.index = C.index;
    D.entries = identity_matrix<TauPoly>(v);
    // unit diagonal, so each entry is a sum of products of earlier ones
    for (size_t j = 0; j < v; ++j)
        for (size_t r = j + 1; r < v; ++r) {
            TauPoly s;
            for (size_t m = j; m < r; ++m) s += C.entries[r][m] * D.entries[m][j];
            D.entries[r][j] = -s;
        }
    return D;
}

EActionReport verify_e_action(int n, int i, const std::vector<int>& a) {
    if (n < 1) throw std::domain_error("verify_e_action: n must be positive");
    int N = 2 * n;
    if (i < 1 || i > N - 1) throw std::domain_error("verify_e_action: i out of range");
    if (static_cast<int>(a.size()) != n)
        throw std::domain_error("verify_e_action: sequence length must equal n");
    for (size_t j = 0; j < a.size(); ++j) {
        if (a[j] < 1 || a[j] > N - 1)
            throw std::domain_error("verify_e_action: sequence entry out of range");
        if (j > 0 && a[j] < a[j - 1])
            throw std::domain_error("verify_e_action: sequence must be non-decreasing");
    }
    int k = static_cast<int>(std::count(a.begin(), a.end(), i));

    auto replaced = [&a, i](int first, int second) {
        std::vector<int> s = a;
        auto it = std::find(s.begin(), s.end(), i);
        *it = first;
        if (second != i) {
            it = std::find(it + 1, s.end(), i);
            *it = second;
        }
        std::sort(s.begin(), s.end());
        return s;
    };

    std::vector<std::pair<TauPoly, std::vector<int>>> terms;
    terms.emplace_back(cheb_u_ext(k - 1) * cheb_u_ext(k - 4), a);
    if (k >= 1) {
        TauPoly f = -(cheb_u_ext(k - 1) * cheb_u_ext(k - 3));
        terms.emplace_back(f, replaced(i - 1, i));
        terms.emplace_back(f, replaced(i + 1, i));
    }
    if (k >= 2) terms.emplace_back(cheb_u_ext(k - 1) * cheb_u_ext(k - 2), replaced(i - 1, i + 1));

    EActionReport rep;
    for (const auto& pi : enumerate_patterns(N)) {
        TauPoly lhs = pi.partner(i) == i + 1 ? TauPoly::tau() * entry_product(a, pi)
                                             : entry_product(a, apply_e(pi, i).image);
        TauPoly rhs;
        for (const auto& [f, seq] : terms) rhs += f * entry_product(seq, pi);
        if (lhs != rhs) {
            rep.ok = false;
            rep.detail = "mismatch at " + pi.str() + ": applied side " + lhs.str() +
                         ", expansion side " + rhs.str();
            return rep;
        }
    }
    return rep;
}

}
