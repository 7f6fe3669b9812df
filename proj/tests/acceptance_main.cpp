// End-to-end acceptance run: each criterion re-derives one headline result
// from scratch and prints a single pass/fail line with its runtime.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qkz/basis.hpp"
#include "qkz/cheb.hpp"
#include "qkz/ctengine.hpp"
#include "qkz/lemmas.hpp"
#include "qkz/linkpattern.hpp"
#include "qkz/matrix.hpp"
#include "qkz/psivec.hpp"
#include "qkz/qkzoracle.hpp"
#include "qkz/sumrules.hpp"
#include "qkz/tilings.hpp"
#include "qkz/verify.hpp"

using namespace qkz;

namespace {

constexpr int kJobs = 4;

TauPoly tp(std::vector<long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return TauPoly(std::move(v));
}

TauPoly at_tau_squared(const TauPoly& p) {
    TauPoly out;
    for (int k = 0; k <= p.degree(); ++k)
        out += TauPoly::monomial(p.coeff(k), 2 * k);
    return out;
}

// 1. smallest nontrivial vector, exact components and total
bool crit_four_site(std::vector<std::string>& notes) {
    PsiVector v = psi_even(2);
    bool ok = v.at(rainbow_pattern(4)) == tp({0, 1});
    ok = ok && v.at(little_arch_pattern(4)) == tp({1, 0, 1});
    TauPoly sum;
    for (const auto& c : v.components) sum += c;
    ok = ok && sum.eval(1) == 3 && vsasm_count(5) == 3;
    if (ok) notes.push_back("components tau and 1+tau^2, total at tau=1 is 3");
    return ok;
}

// 2. even generating function: direct expansion vs closed determinant
bool crit_even_routes(std::vector<std::string>& notes) {
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
        SumRuleReport rep = sum_rule_report(n, Parity::Even);
        ok = ok && rep.direct == rep.determinant && rep.convention_map == "identity";
        ok = ok && rep.direct == gen_det_even(n);
    }
    Int spot = gen_direct(3, Parity::Even).eval(1, 1);
    ok = ok && spot == 26 && vsasm_count(7) == 26;
    if (ok) notes.push_back("six-arch total at t=tau=1 is 26, the size-7 symmetric count");
    return ok;
}

// 3. odd generating function: the two routes differ by one fixed t substitution
bool crit_odd_routes(std::vector<std::string>& notes) {
    bool ok = true;
    std::string shared;
    for (int n = 1; n <= 4; ++n) {
        std::string conv;
        BiPoly det = gen_det_odd(n, &conv);
        BiPoly dir = gen_direct(n, Parity::Odd);
        ok = ok && dir.at_t_one() == det.at_t_one();
        ok = ok && conv == "t-reversal" && det.t_reversed(n) == dir;
        if (n == 1) shared = conv;
        ok = ok && conv == shared;
    }
    BiPoly t_plus_tau = BiPoly::t_term(TauPoly(1), 1) + BiPoly(TauPoly::tau());
    BiPoly one_plus_t_tau = BiPoly(TauPoly(1)) + BiPoly::t_term(TauPoly::tau(), 1);
    ok = ok && gen_direct(1, Parity::Odd) == t_plus_tau;
    std::string c1;
    ok = ok && gen_det_odd(1, &c1) == one_plus_t_tau;
    if (ok) notes.push_back("routes at one arch are t+tau and 1+t*tau; convention " + shared);
    return ok;
}

// 4. largest even size: both routes, value recorded as the size-9 candidate
bool crit_eight_arch_total(std::vector<std::string>& notes) {
    SumRuleReport rep = sum_rule_report(4, Parity::Even);
    bool ok = rep.direct == rep.determinant;
    Int total = rep.direct.eval(1, 1);
    ok = ok && total == 646;
    notes.push_back("total at t=tau=1 is " + total.get_str() +
                    ", candidate for the size-9 symmetric count (direct"
                    " enumeration at size 9 not attempted)");
    return ok;
}

// 5. every component starts at tau^boxes and ends at tau^(n(n-1)-boxes),
//    with both extreme coefficients given by binomial determinants
bool crit_end_behavior(std::vector<std::string>&) {
    bool ok = true;
    for (int n = 2; n <= 4; ++n) {
        PsiVector v = psi_even(n, kJobs);
        for (size_t i = 0; i < v.index.size(); ++i) {
            const LinkPattern& pi = v.index[i];
            const TauPoly& c = v.components[i];
            int beta = pi.box_count();
            ClosingIndex b(pi.closings());
            TauLimits lim = tau_limits_even(b);
            ok = ok && lim.valuation_asserted;
            ok = ok && c.valuation() == beta && lim.valuation == beta;
            ok = ok && c.lowest() == lim.low && lim.low == count_nilp(b);
            ok = ok && c.degree() == n * (n - 1) - beta && lim.degree == c.degree();
            ok = ok && c.leading() == lim.top;
        }
    }
    return ok;
}

// 6. symbolic exchange solve in the full z variables matches the homogeneous
//    pipeline at z=1 up to one global scalar, sizes 3..6
bool crit_exchange_solve(std::vector<std::string>& notes) {
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
        ZPolyVector sol = solve_exchange(n);
        for (const auto& r : verify_qkz_system(sol)) ok = ok && r.ok;
        LaurentScalar c;
        CheckResult m = homogeneous_match(sol, psi_even(n), &c);
        ok = ok && m.ok;
        if (m.ok && n >= 2)
            notes.push_back(std::to_string(2 * n) + " sites: global factor " + c.str());
        if (n >= 2) {
            ZPolyVector red = odd_reduce(sol);
            LaurentScalar co;
            CheckResult mo = homogeneous_match(red, psi_odd(n - 1), &co);
            ok = ok && mo.ok;
            if (mo.ok)
                notes.push_back(std::to_string(2 * n - 1) + " sites: global factor " +
                                co.str());
        }
    }
    return ok;
}

void sweep_sequences(int n, std::vector<int>& a, bool& ok) {
    size_t j = a.size();
    if (j == static_cast<size_t>(n)) {
        for (int i = 1; i < 2 * n; ++i) ok = ok && verify_e_action(n, i, a).ok;
        return;
    }
    int lo = j == 0 ? 1 : a.back();
    for (int v = lo; v <= 2 * static_cast<int>(j) + 1; ++v) {
        a.push_back(v);
        sweep_sequences(n, a, ok);
        a.pop_back();
    }
}

// 7. operator relations, the little-arch expansion, its three ladder
//    identities, and the lemma apparatus
bool crit_identities(std::vector<std::string>&) {
    bool ok = true;
    for (const auto& r : run_suite("tl", 4)) ok = ok && r.ok;

    for (int n = 1; n <= 3; ++n) {
        std::vector<int> a;
        sweep_sequences(n, a, ok);
    }

    for (int k = 0; k <= 8; ++k) {
        TauPoly uk1 = cheb_u_ext(k - 1);
        ok = ok && TauPoly::tau() * uk1 ==
                       uk1 * cheb_u_ext(k - 4) * uk1 -
                           uk1 * cheb_u_ext(k - 3) * (cheb_u_ext(k - 2) * 2) +
                           uk1 * cheb_u_ext(k - 2) * cheb_u_ext(k - 3);
        for (int p = 0; p <= 8; ++p)
            for (int q = 0; q <= 8; ++q) {
                TauPoly a4 = uk1 * cheb_u_ext(k - 4);
                TauPoly a3 = uk1 * cheb_u_ext(k - 3);
                TauPoly a2 = uk1 * cheb_u_ext(k - 2);
                ok = ok && uk1 * cheb_u_ext(q - 1) ==
                               a4 * cheb_u_ext(p - 1) * cheb_u_ext(k + p + q - 2) -
                                   a3 * cheb_u_ext(p - 1) * cheb_u_ext(k + p + q - 3) -
                                   a3 * cheb_u_ext(p) * cheb_u_ext(k + p + q - 2) +
                                   a2 * cheb_u_ext(p) * cheb_u_ext(k + p + q - 3);
                ok = ok && uk1 * cheb_u_ext(k + p + q - 2) ==
                               a4 * cheb_u_ext(p - 1) * cheb_u_ext(q - 1) -
                                   a3 * cheb_u_ext(p) * cheb_u_ext(q - 1) -
                                   a3 * cheb_u_ext(p - 1) * cheb_u_ext(q) +
                                   a2 * cheb_u_ext(p) * cheb_u_ext(q);
            }
    }

    for (const auto& r : verify_lemma_suite(4, 5, 6)) ok = ok && r.ok;
    return ok;
}

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

// independent route to a basis entry: peel little arches one at a time
TauPoly removal_route(std::vector<int> a, const LinkPattern& pi) {
    if (pi.size() == 0) return TauPoly(1);
    int i = 0;
    for (int p = 1; p < pi.size(); ++p)
        if (pi.partner(p) == p + 1) {
            i = p;
            break;
        }
    if (i == 0) return TauPoly();
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

// 8. change of basis: triangularity, exact inverse, degree law, two routes
bool crit_basis_change(std::vector<std::string>&) {
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
        BasisMatrix C = build_matrix(n, kJobs);
        size_t v = C.index.size();
        for (size_t r = 0; r < v; ++r) {
            ok = ok && C.entries[r][r] == TauPoly(1);
            for (size_t c = r + 1; c < v; ++c) ok = ok && C.entries[r][c].is_zero();
        }
        BasisMatrix Cinv = invert(C);
        auto prod = mat_mul(C.entries, Cinv.entries);
        ok = ok && prod == identity_matrix<TauPoly>(v);
        for (size_t r = 0; r < v; ++r)
            for (size_t c = 0; c < v; ++c) {
                const TauPoly& e = C.entries[r][c];
                if (!e.is_zero())
                    ok = ok && e.degree() == h_weight(C.index[c], C.index[r]) -
                                                 h_weight(C.index[c], C.index[c]);
                ok = ok && e == removal_route(C.index[r].openings(), C.index[c]);
            }
    }
    BasisMatrix C5 = build_matrix(5, kJobs);
    for (size_t r = 0; r < C5.index.size(); ++r) {
        ok = ok && C5.entries[r][r] == TauPoly(1);
        for (size_t c = r + 1; c < C5.index.size(); ++c)
            ok = ok && C5.entries[r][c].is_zero();
    }
    return ok;
}

// 9. special points of the generating functions against independent objects
bool crit_special_points(std::vector<std::string>&) {
    bool ok = true;
    for (int n = 1; n <= 3; ++n) {
        SumRuleReport er = sum_rule_report(n, Parity::Even);
        PsiVector v = psi_even(n);
        ok = ok && er.specializations.at("t=0") == v.at(little_arch_pattern(2 * n));
        ok = ok && er.specializations.at("top-t") == rotated_component_det(n);
        ok = ok && er.specializations.at("t=1/tau") == at_tau_squared(t_poly(n, 1));

        SumRuleReport orp = sum_rule_report(n, Parity::Odd);
        const TauPoly& at_tau = orp.specializations.at("t=tau");
        ok = ok && at_tau == at_tau_squared(t_poly(n + 1, 0));
        ok = ok && at_tau == gen_direct(n + 1, Parity::Even).at_t_zero();
    }
    // the triangular-array identities extend one size further
    SumRuleReport e4 = sum_rule_report(4, Parity::Even);
    ok = ok && e4.specializations.at("t=1/tau") == at_tau_squared(t_poly(4, 1));
    SumRuleReport o4 = sum_rule_report(4, Parity::Odd);
    ok = ok && o4.specializations.at("t=tau") == at_tau_squared(t_poly(5, 0));
    return ok;
}

// 10. everything stays in integer coefficients end to end; nonnegativity of
//     the components is reported as an observation, never enforced
bool crit_integrality(std::vector<std::string>& notes) {
    bool ok = true;
    bool nonneg = true;
    std::string nn_detail;
    for (int n = 1; n <= 4; ++n) {
        PsiVector ve = psi_even(n, kJobs);
        PsiReport re = check_properties(ve);
        ok = ok && re.ok();
        PsiVector vo = psi_odd(n, kJobs);
        PsiReport ro = check_properties(vo);
        ok = ok && ro.ok();
        if (!re.nonnegative || !ro.nonnegative) {
            nonneg = false;
            nn_detail = !re.nonnegative ? re.nonnegative_detail : ro.nonnegative_detail;
        }

        std::vector<ClosingIndex> be, bo;
        for (const auto& pi : enumerate_patterns(2 * n)) be.emplace_back(pi.closings());
        for (const auto& pi : enumerate_patterns(2 * n + 1)) bo.emplace_back(pi.closings());
        k_batch(be, false, kJobs);
        k_batch(bo, true, kJobs);

        invert(build_matrix(n, kJobs));
    }
    if (nonneg)
        notes.push_back("all component coefficients nonnegative through 9 sites");
    else
        notes.push_back("nonnegativity violated: " + nn_detail);
    return ok;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        std::function<bool(std::vector<std::string>&)> run;
    };
    const std::vector<Criterion> criteria = {
        {"four-site components and their total", crit_four_site},
        {"even generating function by two routes", crit_even_routes},
        {"odd generating function under one t convention", crit_odd_routes},
        {"eight-arch total by independent routes", crit_eight_arch_total},
        {"end behavior of every component through eight sites", crit_end_behavior},
        {"symbolic exchange solve matches the pipeline", crit_exchange_solve},
        {"operator relations and expansion identities", crit_identities},
        {"change of basis properties", crit_basis_change},
        {"special-point identities", crit_special_points},
        {"integer coefficients end to end", crit_integrality},
    };

    int passed = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        std::vector<std::string> notes;
        bool ok = false;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = criteria[k].run(notes);
        } catch (const std::exception& e) {
            notes.push_back(std::string("exception: ") + e.what());
        }
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        std::printf("criterion %2zu: %s  %-52s  (%.2fs)\n", k + 1,
                    ok ? "PASS" : "FAIL", criteria[k].label, dt.count());
        for (const auto& n : notes) std::printf("              %s\n", n.c_str());
        if (ok) ++passed;
    }
    std::printf("acceptance: %d of %zu criteria passed\n", passed, criteria.size());
    return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
