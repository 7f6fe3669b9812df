#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "qkz/basis.hpp"
#include "qkz/cheb.hpp"
#include "qkz/linkpattern.hpp"

using namespace qkz;

namespace {

LinkPattern remove_arch_at(const LinkPattern& pi, int i) {
    int N = pi.size();
    std::vector<int> q(static_cast<size_t>(N - 2), 0);
    for (int p = 1; p <= N; ++p) {
        if (p == i || p == i + 1) continue;
        int t = pi.partner(p);
        int np = p - (p > i + 1 ? 2 : 0);
        int nt = t - (t > i + 1 ? 2 : 0);
        q[static_cast<size_t>(np - 1)] = nt;
    }
    return LinkPattern(q);
}

// peels little arches one at a time, consuming one index entry per arch;
// the independent route against the closed product formula
TauPoly removal_route(std::vector<int> a, const LinkPattern& pi) {
    if (pi.size() == 0) return TauPoly(1);
    int i = 0;
    for (int p = 1; p < pi.size(); ++p)
        if (pi.partner(p) == p + 1) {
            i = p;
            break;
        }
    REQUIRE(i > 0);
    long m = std::count(a.begin(), a.end(), i);
    if (m == 0) return TauPoly();
    TauPoly factor = cheb_u(static_cast<int>(m) - 1);
    std::vector<int> na;
    bool consumed = false;
    for (int x : a) {
        if (x < i)
            na.push_back(x);
        else if (x == i) {
            if (!consumed) {
                consumed = true;
                continue;
            }
            na.push_back(i - 1);
        } else
            na.push_back(x - 2);
    }
    std::sort(na.begin(), na.end());
    return factor * removal_route(na, remove_arch_at(pi, i));
}

void gen_sequences(int n, int j, int lo, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (j == n) {
        out.push_back(cur);
        return;
    }
    for (int v = lo; v <= 2 * j + 1; ++v) {
        cur.push_back(v);
        gen_sequences(n, j + 1, v, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> weakly_increasing(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    gen_sequences(n, 0, 1, cur, out);
    return out;
}

}  // namespace

TEST_CASE("diagonal entries are one") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& pi : enumerate_patterns(2 * n))
            CHECK(c_entry(pi.openings(), pi) == TauPoly(1));
}

TEST_CASE("small matrices") {
    auto C1 = build_matrix(1);
    REQUIRE(C1.index.size() == 1);
    CHECK(C1.entries[0][0] == TauPoly(1));

    auto C2 = build_matrix(2);
    REQUIRE(C2.index.size() == 2);
    for (size_t r = 0; r < 2; ++r)
        for (size_t c = 0; c < 2; ++c)
            CHECK(C2.entries[r][c] == TauPoly(r == c ? 1 : 0));
    CHECK(c_entry({1, 3}, rainbow_pattern(4)).is_zero());

    auto C3 = build_matrix(3);
    REQUIRE(C3.index.size() == 5);
    size_t special = 99;
    for (size_t r = 0; r < 5; ++r)
        if (C3.index[r].openings() == std::vector<int>{1, 3, 4}) special = r;
    REQUIRE(special == 3);
    CHECK(c_entry({1, 3, 4}, rainbow_pattern(6)) == TauPoly(1));
    for (size_t r = 0; r < 5; ++r)
        for (size_t c = 0; c < 5; ++c) {
            TauPoly want(r == c || (r == special && c == 0) ? 1 : 0);
            CHECK(C3.entries[r][c] == want);
        }
}

TEST_CASE("entry domain errors") {
    LinkPattern pi = rainbow_pattern(4);
    CHECK_THROWS_AS(c_entry({1}, pi), std::domain_error);
    CHECK_THROWS_AS(c_entry({0, 1}, pi), std::domain_error);
    CHECK_THROWS_AS(c_entry({1, 4}, pi), std::domain_error);
    CHECK_THROWS_AS(c_entry({2, 1}, pi), std::domain_error);
    CHECK_THROWS_AS(c_entry({1}, LinkPattern({0})), std::domain_error);
}

TEST_CASE("removal algorithm agrees with the closed formula") {
    for (int n = 1; n <= 5; ++n) {
        auto lps = enumerate_patterns(2 * n);
        for (const auto& alpha : lps) {
            auto a = alpha.openings();
            for (const auto& pi : lps) CHECK(removal_route(a, pi) == c_entry(a, pi));
        }
    }
    // repeated entries exercise the factor U_{m-1} with m > 1
    for (int n = 1; n <= 3; ++n)
        for (const auto& a : weakly_increasing(n))
            for (const auto& pi : enumerate_patterns(2 * n))
                CHECK(removal_route(a, pi) == c_entry(a, pi));
}

TEST_CASE("triangularity and division-free inverse") {
    for (int n = 1; n <= 5; ++n) {
        auto C = build_matrix(n, 2);
        size_t v = C.index.size();
        for (size_t r = 0; r < v; ++r) {
            CHECK(C.entries[r][r] == TauPoly(1));
            for (size_t c = r + 1; c < v; ++c) CHECK(C.entries[r][c].is_zero());
        }
        // nonzero entries sit at row sequences lexicographically above the column's
        for (size_t r = 0; r < v; ++r)
            for (size_t c = 0; c < v; ++c)
                if (!C.entries[r][c].is_zero())
                    CHECK(C.index[r].openings() >= C.index[c].openings());
        auto D = invert(C);
        auto P = mat_mul(C.entries, D.entries);
        auto I = identity_matrix<TauPoly>(v);
        CHECK(P == I);
        for (size_t r = 0; r < v; ++r) {
            CHECK(D.entries[r][r] == TauPoly(1));
            for (size_t c = r + 1; c < v; ++c) CHECK(D.entries[r][c].is_zero());
        }
    }
    BasisMatrix bad = build_matrix(2);
    bad.entries[0][0] = TauPoly::tau();
    CHECK_THROWS_AS(invert(bad), std::runtime_error);
    bad = build_matrix(2);
    bad.entries[0][1] = TauPoly(1);
    CHECK_THROWS_AS(invert(bad), std::runtime_error);
}

TEST_CASE("entry degrees from height weights") {
    for (int n = 1; n <= 4; ++n) {
        auto C = build_matrix(n);
        size_t v = C.index.size();
        for (size_t r = 0; r < v; ++r)
            for (size_t c = 0; c < v; ++c) {
                if (C.entries[r][c].is_zero()) continue;
                int want = h_weight(C.index[c], C.index[r]) - h_weight(C.index[c], C.index[c]);
                CHECK(C.entries[r][c].degree() == want);
            }
    }
}

TEST_CASE("e action expansion") {
    auto rep = verify_e_action(2, 1, {1, 1});
    CHECK(rep.ok);
    CHECK(rep.detail.empty());
    for (int n = 1; n <= 3; ++n)
        for (int i = 1; i <= 2 * n - 1; ++i)
            for (const auto& a : weakly_increasing(n)) {
                auto r = verify_e_action(n, i, a);
                if (!r.ok) {
                    CAPTURE(n);
                    CAPTURE(i);
                    CAPTURE(r.detail);
                }
                CHECK(r.ok);
            }
    CHECK_THROWS_AS(verify_e_action(2, 0, {1, 1}), std::domain_error);
    CHECK_THROWS_AS(verify_e_action(2, 4, {1, 1}), std::domain_error);
    CHECK_THROWS_AS(verify_e_action(2, 1, {1, 0}), std::domain_error);
    CHECK_THROWS_AS(verify_e_action(2, 1, {1}), std::domain_error);
}

TEST_CASE("local case identities of the e action expansion") {
    for (int k = 0; k <= 8; ++k) {
        auto A = cheb_u_ext(k - 1), B = cheb_u_ext(k - 2), C = cheb_u_ext(k - 3),
             D = cheb_u_ext(k - 4);
        CHECK(A * D - TauPoly::tau() == B * C);
        CHECK(TauPoly::tau() * A == A * D * A - TauPoly(2) * (A * C * B) + A * B * C);
        for (int p = 0; p <= 8; ++p) {
            auto Up = cheb_u_ext(p), Up1 = cheb_u_ext(p - 1);
            for (int q = 0; q <= 8; ++q) {
                auto Uq = cheb_u_ext(q), Uq1 = cheb_u_ext(q - 1);
                auto S = cheb_u_ext(k + p + q - 2), S1 = cheb_u_ext(k + p + q - 3);
                CHECK(A * Uq1 == A * D * (Up1 * S) - A * C * (Up1 * S1) - A * C * (Up * S) +
                                     A * B * (Up * S1));
                CHECK(A * S == A * D * (Up1 * Uq1) - A * C * (Up * Uq1) - A * C * (Up1 * Uq) +
                                   A * B * (Up * Uq));
            }
        }
    }
}
