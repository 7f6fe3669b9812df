#include "qkz/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "qkz/basis.hpp"
#include "qkz/bigint.hpp"
#include "qkz/ctengine.hpp"
#include "qkz/linkpattern.hpp"
#include "qkz/matrix.hpp"
#include "qkz/psivec.hpp"
#include "qkz/qkzoracle.hpp"
#include "qkz/sumrules.hpp"
#include "qkz/tilings.hpp"

namespace qkz {

namespace {

using Results = std::vector<CheckResult>;
using TMat = Matrix<TauPoly>;

void push(Results& out, std::string name, bool ok, std::string detail = "") {
    out.push_back(CheckResult{std::move(name), ok, std::move(detail)});
}

TMat e_matrix(const std::vector<LinkPattern>& pats,
              const std::map<LinkPattern, size_t>& pos, int i) {
    size_t v = pats.size();
    TMat m(v, std::vector<TauPoly>(v, TauPoly(0)));
    for (size_t c = 0; c < v; ++c) {
        EResult er = apply_e(pats[c], i);
        m[pos.at(er.image)][c] += er.weight;
    }
    return m;
}

bool mat_eq(const TMat& a, const TMat& b) {
    if (a.size() != b.size()) return false;
    for (size_t r = 0; r < a.size(); ++r)
        if (a[r] != b[r]) return false;
    return true;
}

TMat mat_scale(TMat m, const TauPoly& f) {
    for (auto& row : m)
        for (auto& e : row) e = e * f;
    return m;
}

// idempotent, braid-like, and distant-commutation relations of the loop
// operators on the pattern span of one strip size
void tl_relations(Results& out, int N) {
    auto pats = enumerate_patterns(N);
    std::map<LinkPattern, size_t> pos;
    for (size_t i = 0; i < pats.size(); ++i) pos[pats[i]] = i;
    std::vector<TMat> e;
    for (int i = 1; i < N; ++i) e.push_back(e_matrix(pats, pos, i));

    bool ok = true;
    std::string detail;
    auto fail = [&](const std::string& what) {
        if (ok) detail = what;
        ok = false;
    };
    TauPoly tau = TauPoly::tau();
    for (size_t i = 0; i < e.size(); ++i) {
        if (!mat_eq(mat_mul(e[i], e[i]), mat_scale(e[i], tau)))
            fail("idempotent relation fails at i=" + std::to_string(i + 1));
        if (i + 1 < e.size()) {
            if (!mat_eq(mat_mul(mat_mul(e[i], e[i + 1]), e[i]), e[i]))
                fail("descending relation fails at i=" + std::to_string(i + 1));
            if (!mat_eq(mat_mul(mat_mul(e[i + 1], e[i]), e[i + 1]), e[i + 1]))
                fail("ascending relation fails at i=" + std::to_string(i + 1));
        }
        for (size_t j = i + 2; j < e.size(); ++j)
            if (!mat_eq(mat_mul(e[i], e[j]), mat_mul(e[j], e[i])))
                fail("distant operators fail to commute at (" + std::to_string(i + 1) +
                     "," + std::to_string(j + 1) + ")");
    }
    if (ok)
        detail = std::to_string(pats.size()) + " patterns, " + std::to_string(e.size()) +
                 " operators";
    push(out, "loop operator relations, " + std::to_string(N) + " sites", ok, detail);
}

Results suite_tl(int max_n, int) {
    Results out;
    int top = std::min(2 * max_n, 8);
    for (int N = 2; N <= top; ++N) tl_relations(out, N);
    return out;
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

Results suite_basis(int max_n, int jobs) {
    Results out;
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        auto C = build_matrix(n, jobs);
        size_t v = C.index.size();
        bool tri = true;
        for (size_t r = 0; r < v && tri; ++r) {
            if (C.entries[r][r] != TauPoly(1)) tri = false;
            for (size_t c = r + 1; c < v && tri; ++c)
                if (!C.entries[r][c].is_zero()) tri = false;
        }
        push(out, "unit lower triangular, n=" + std::to_string(n), tri,
             std::to_string(v) + " patterns");

        auto D = invert(C);
        bool inv = mat_eq(mat_mul(C.entries, D.entries), identity_matrix<TauPoly>(v));
        push(out, "division-free inverse identity, n=" + std::to_string(n), inv);

        if (n <= std::min(max_n, 4)) {
            bool deg = true;
            std::string detail;
            for (size_t r = 0; r < v && deg; ++r)
                for (size_t c = 0; c < v && deg; ++c) {
                    if (C.entries[r][c].is_zero()) continue;
                    int want = h_weight(C.index[c], C.index[r]) -
                               h_weight(C.index[c], C.index[c]);
                    if (C.entries[r][c].degree() != want) {
                        deg = false;
                        detail = "entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
                    }
                }
            push(out, "entry degrees from height weights, n=" + std::to_string(n), deg, detail);
        }
    }
    for (int n = 1; n <= std::min(max_n, 3); ++n) {
        bool ok = true;
        std::string detail;
        int checked = 0;
        for (const auto& a : weakly_increasing(n))
            for (int i = 1; i <= 2 * n - 1 && ok; ++i) {
                auto rep = verify_e_action(n, i, a);
                ++checked;
                if (!rep.ok) {
                    ok = false;
                    detail = rep.detail;
                }
            }
        if (ok) detail = std::to_string(checked) + " expansions";
        push(out, "little arch action expansion, n=" + std::to_string(n), ok, detail);
    }
    return out;
}

Results suite_lemmas(int max_n, int) {
    return verify_lemma_suite(std::min(max_n, 4), std::min(max_n + 2, 5),
                              std::min(max_n + 3, 6));
}

void limits_one(Results& out, int n, bool odd, int jobs) {
    auto pats = enumerate_patterns(odd ? 2 * n + 1 : 2 * n);
    std::vector<ClosingIndex> bs;
    bs.reserve(pats.size());
    for (const auto& pi : pats) bs.emplace_back(pi.closings());
    auto ks = k_batch(bs, odd, jobs);
    bool ok = true;
    std::string detail;
    for (size_t i = 0; i < bs.size() && ok; ++i) {
        const TauPoly& k = ks[i];
        TauLimits lim = odd ? tau_limits_odd(bs[i]) : tau_limits_even(bs[i]);
        bool good = !k.is_zero() && k.degree() == lim.degree && k.leading() == lim.top;
        if (lim.valuation_asserted)
            good = good && k.valuation() == lim.valuation && k.lowest() == lim.low;
        else
            good = good && lim.low == 0 && k.valuation() > lim.valuation;
        if (!good) {
            ok = false;
            detail = "component " + pats[i].str();
        }
    }
    if (ok) detail = std::to_string(bs.size()) + " components";
    push(out,
         std::string(odd ? "odd" : "even") + " end behavior, " +
             std::to_string(odd ? 2 * n + 1 : 2 * n) + " sites",
         ok, detail);
}

Results suite_limits(int max_n, int jobs) {
    Results out;
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
        limits_one(out, n, false, jobs);
        limits_one(out, n, true, jobs);
    }
    return out;
}

TauPoly at_tau_squared(const TauPoly& p) {
    TauPoly out;
    for (int k = 0; k <= p.degree(); ++k)
        out += TauPoly::monomial(p.coeff(k), 2 * k);
    return out;
}

Results suite_sumrules(int max_n, int) {
    Results out;
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
        auto re = sum_rule_report(n, Parity::Even);
        push(out, "even routes agree, n=" + std::to_string(n),
             re.direct == re.determinant && re.convention_map == "identity");
        push(out, "rotated component coefficient, n=" + std::to_string(n),
             re.specializations.at("top-t") == rotated_component_det(n));
        push(out, "inverse-weight value counts bounded arrays, n=" + std::to_string(n),
             re.specializations.at("t=1/tau") == at_tau_squared(t_poly(n, 1)));

        auto ro = sum_rule_report(n, Parity::Odd);
        BiPoly fixed = ro.convention_map == "t-reversal" ? ro.determinant.t_reversed(n)
                                                         : ro.determinant;
        push(out, "odd routes agree under convention, n=" + std::to_string(n),
             !ro.convention_map.empty() && fixed == ro.direct,
             "convention " + ro.convention_map);
        push(out, "weight-tau value counts shifted arrays, n=" + std::to_string(n),
             ro.specializations.at("t=tau") == at_tau_squared(t_poly(n + 1, 0)));
    }
    return out;
}

Results suite_oracle(int max_n, int jobs) {
    Results out;
    for (int n = 1; n <= std::min(max_n, 3); ++n) {
        auto v = solve_exchange(n);
        for (auto r : verify_qkz_system(v)) {
            r.name += ", " + std::to_string(2 * n) + " sites";
            out.push_back(std::move(r));
        }
        LaurentScalar c;
        auto m = homogeneous_match(v, psi_even(n, jobs), &c);
        m.name = "closing expansion match, " + std::to_string(2 * n) + " sites";
        if (m.ok) m.detail = "global factor " + c.str();
        out.push_back(std::move(m));
        if (n >= 2) {
            auto vo = odd_reduce(v);
            LaurentScalar co;
            auto mo = homogeneous_match(vo, psi_odd(n - 1, jobs), &co);
            mo.name = "closing expansion match, " + std::to_string(2 * n - 1) + " sites";
            if (mo.ok) mo.detail = "global factor " + co.str();
            out.push_back(std::move(mo));
        }
    }
    return out;
}

Int factorial(int k) {
    Int f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

Int asm_product(int k) {
    Int num = 1, den = 1;
    for (int j = 0; j < k; ++j) {
        num *= factorial(3 * j + 1);
        den *= factorial(k + j);
    }
    return divexact_int(num, den, "asm product");
}

Results suite_tilings(int max_n, int) {
    Results out;
    {
        bool ok = true;
        std::string detail;
        int top = std::min(max_n + 3, 7);
        for (int k = 1; k <= top && ok; ++k)
            if (asm_count(k) != asm_product(k)) {
                ok = false;
                detail = "size " + std::to_string(k);
            }
        if (ok) detail = "sizes 1.." + std::to_string(top);
        push(out, "monotone triangle totals match the product formula", ok, detail);
    }
    for (int n = 1; n <= std::min(max_n, 3); ++n) {
        Int total = gen_direct(n, Parity::Even).at_t_one().eval(1);
        Int sym = vsasm_count(2 * n + 1);
        push(out, "symmetric matrix count equals the even total, n=" + std::to_string(n),
             total == sym, total.get_str());
    }
    for (int n = 1; n <= std::min(max_n, 4); ++n) {
        bool ok = true;
        std::string detail;
        for (const auto& pi : enumerate_patterns(2 * n)) {
            ClosingIndex b(pi.closings());
            if (count_nilp(b) != tau_limits_even(b).low) {
                ok = false;
                detail = "component " + pi.str();
                break;
            }
        }
        if (ok) detail = std::to_string(enumerate_patterns(2 * n).size()) + " components";
        push(out, "path families match the determinant lows, n=" + std::to_string(n), ok,
             detail);
    }
    for (int n = 1; n <= std::min(max_n, 3); ++n)
        push(out, "bounded array total equals the symmetric count, n=" + std::to_string(n),
             t_poly(n, 1).eval(1) == vsasm_count(2 * n + 1));
    for (int n = 1; n <= std::min(max_n, 4); ++n)
        push(out, "shifted array total equals the odd total, n=" + std::to_string(n),
             t_poly(n + 1, 0).eval(1) == gen_direct(n, Parity::Odd).at_t_one().eval(1));
    return out;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "tl", "basis", "lemmas", "limits", "sumrules", "oracle", "tilings"};
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name, int max_n, int jobs) {
    if (max_n < 1) throw std::invalid_argument("run_suite: max_n must be positive");
    if (jobs < 1) throw std::invalid_argument("run_suite: jobs must be positive");
    try {
        if (name == "tl") return suite_tl(max_n, jobs);
        if (name == "basis") return suite_basis(max_n, jobs);
        if (name == "lemmas") return suite_lemmas(max_n, jobs);
        if (name == "limits") return suite_limits(max_n, jobs);
        if (name == "sumrules") return suite_sumrules(max_n, jobs);
        if (name == "oracle") return suite_oracle(max_n, jobs);
        if (name == "tilings") return suite_tilings(max_n, jobs);
    } catch (const std::exception& e) {
        // a crashed suite is a failed suite, not a crashed report
        return {CheckResult{name + " suite execution", false, e.what()}};
    }
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

bool VerifyReport::all_ok() const {
    for (const auto& [name, results] : suites)
        for (const auto& r : results)
            if (!r.ok) return false;
    return true;
}

VerifyReport run_suites(std::vector<std::string> names, int max_n, int jobs) {
    if (names.empty()) names = verify_suite_names();
    const auto& known = verify_suite_names();
    std::vector<std::string> order;
    for (const auto& n : names) {
        if (std::find(known.begin(), known.end(), n) == known.end())
            throw std::invalid_argument("unknown suite '" + n + "'");
        if (std::find(order.begin(), order.end(), n) == order.end()) order.push_back(n);
    }
    VerifyReport rep;
    for (const auto& n : order) rep.suites.emplace_back(n, run_suite(n, max_n, jobs));
    return rep;
}

}
