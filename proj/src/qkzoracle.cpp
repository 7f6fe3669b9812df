#include "qkz/qkzoracle.hpp"
#include "qkz/laurent.hpp"
#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qkz {

namespace {

ZPoly two_term(int nvars, int i, const LaurentScalar& ci, int j, const LaurentScalar& cj) {
    ZPoly p(nvars);
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i)] = 1;
    p.add_term(e, ci);
    e[static_cast<size_t>(i)] = 0;
    e[static_cast<size_t>(j)] = 1;
    p.add_term(e, cj);
    return p;
}

// q x_i - q^{-1} x_j
ZPoly qdiff(int nvars, int i, int j) {
    return two_term(nvars, i, LaurentScalar::q_power(1), j, LaurentScalar::q_power(-1, -1));
}

// x_i - x_j
ZPoly zdiff(int nvars, int i, int j) {
    return two_term(nvars, i, LaurentScalar(1), j, LaurentScalar(-1));
}

// q^k - x_i x_j (i == j gives a square)
ZPoly gap(int nvars, int k, int i, int j) {
    ZPoly p = ZPoly::constant(nvars, LaurentScalar::q_power(k));
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(i)] += 1;
    e[static_cast<size_t>(j)] += 1;
    p.add_term(e, LaurentScalar(-1));
    return p;
}

ZPoly scaled(ZPoly p, const LaurentScalar& c) {
    p.scale(c);
    return p;
}

} // namespace

const ZPoly& ZPolyVector::at(const LinkPattern& pi) const {
    for (size_t k = 0; k < index.size(); ++k)
        if (index[k] == pi) return components[k];
    throw std::invalid_argument("ZPolyVector::at: unknown pattern " + pi.str());
}

ZPoly seed_psi0(int n) {
    if (n < 1) throw std::domain_error("seed_psi0: n must be positive");
    const int N = 2 * n;
    ZPoly p = ZPoly::constant(N, LaurentScalar(1));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            p *= qdiff(N, i - 1, j - 1) * gap(N, 2, i - 1, j - 1);
    for (int i = n + 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            p *= qdiff(N, i - 1, j - 1) * gap(N, 4, i - 1, j - 1);
    return p;
}

ZPolyVector solve_exchange(int n) {
    if (n < 1) throw std::domain_error("solve_exchange: n must be positive");
    if (n > 3) throw std::domain_error("solve_exchange: size capped at n = 3");
    const int N = 2 * n;
    ZPolyVector v;
    v.N = N;
    v.index = enumerate_patterns(N);
    const int d = static_cast<int>(v.index.size());
    v.components.assign(static_cast<size_t>(d), ZPoly(N));

    std::map<std::vector<int>, int> pos;
    for (int k = 0; k < d; ++k) pos[v.index[static_cast<size_t>(k)].pairing()] = k;

    // removing a box strictly lowers the count, so solving in decreasing
    // box-count order keeps every right-hand side already known
    std::vector<int> order(static_cast<size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int ba = v.index[static_cast<size_t>(a)].box_count();
        int bb = v.index[static_cast<size_t>(b)].box_count();
        if (ba != bb) return ba > bb;
        return a < b;
    });

    std::vector<char> solved(static_cast<size_t>(d), 0);
    const int root = pos.at(rainbow_pattern(N).pairing());
    v.components[static_cast<size_t>(root)] = seed_psi0(n);
    solved[static_cast<size_t>(root)] = 1;
    if (order[0] != root) throw std::logic_error("solve_exchange: rainbow is not first");

    for (int t = 1; t < d; ++t) {
        const int idx = order[static_cast<size_t>(t)];
        const LinkPattern& star = v.index[static_cast<size_t>(idx)];
        const auto h = star.heights();
        int i = 0;
        for (int k = 1; k < N; ++k)
            if (h[static_cast<size_t>(k - 1)] == h[static_cast<size_t>(k)] + 1 &&
                h[static_cast<size_t>(k + 1)] == h[static_cast<size_t>(k)] + 1) {
                i = k;
                break;
            }
        if (i == 0) throw std::logic_error("solve_exchange: no valley to raise");
        auto hr = h;
        hr[static_cast<size_t>(i)] += 2;
        const LinkPattern raised = pattern_from_heights(hr);
        const int braised = pos.at(raised.pairing());
        if (!solved[static_cast<size_t>(braised)])
            throw std::logic_error("solve_exchange: raised pattern not yet solved");
        const ZPoly& base = v.components[static_cast<size_t>(braised)];

        // divided difference across the little arch of the raised pattern;
        // divisibility by z_{i+1} - z_i is exact by symmetry of the remainder
        ZPoly num = qdiff(N, i - 1, i) * (swap_vars(base, i - 1, i) - base);
        ZPoly res = poly_exact_div(num, zdiff(N, i, i - 1));

        for (int k = 0; k < d; ++k) {
            if (k == idx || k == braised) continue;
            const EResult er = apply_e(v.index[static_cast<size_t>(k)], i);
            if (er.image == raised) {
                if (!solved[static_cast<size_t>(k)])
                    throw std::logic_error("solve_exchange: preimage not yet solved");
                res -= v.components[static_cast<size_t>(k)];
            }
        }
        v.components[static_cast<size_t>(idx)] = std::move(res);
        solved[static_cast<size_t>(idx)] = 1;
    }
    return v;
}

namespace {

using OpMat = std::vector<std::vector<ZPoly>>;

OpMat op_mul(const OpMat& a, const OpMat& b, int nvars) {
    const size_t d = a.size();
    OpMat r(d, std::vector<ZPoly>(d, ZPoly(nvars)));
    for (size_t i = 0; i < d; ++i)
        for (size_t k = 0; k < d; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < d; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

// numerator operator (q x_a - q^{-1} x_b) I + (x_a - x_b) E_i acting on the
// pattern span, over polynomials in nvars formal variables
OpMat n_op(const std::vector<LinkPattern>& pats,
           const std::map<std::vector<int>, int>& pos, int i, int va, int vb, int nvars) {
    const size_t d = pats.size();
    OpMat m(d, std::vector<ZPoly>(d, ZPoly(nvars)));
    const ZPoly diag = qdiff(nvars, va, vb);
    const ZPoly off = zdiff(nvars, va, vb);
    for (size_t c = 0; c < d; ++c) {
        m[c][c] += diag;
        const EResult er = apply_e(pats[c], i);
        const size_t r = static_cast<size_t>(pos.at(er.image.pairing()));
        m[r][c] += scaled(off, tau_to_q(er.weight));
    }
    return m;
}

void note_failure(CheckResult& cr, const std::string& detail) {
    if (cr.ok) {
        cr.ok = false;
        cr.detail = detail;
    }
}

} // namespace

std::vector<CheckResult> verify_qkz_system(const ZPolyVector& v) {
    const int N = v.N;
    if (N < 2 || N % 2 != 0)
        throw std::invalid_argument("verify_qkz_system: even size required");
    const int n = N / 2;
    const int d = static_cast<int>(v.index.size());

    std::map<std::vector<int>, int> pos;
    for (int k = 0; k < d; ++k) pos[v.index[static_cast<size_t>(k)].pairing()] = k;

    CheckResult exchange{"exchange relation", true, ""};
    for (int i = 1; i < N; ++i) {
        std::vector<ZPoly> epsi(static_cast<size_t>(d), ZPoly(N));
        for (int k = 0; k < d; ++k) {
            const EResult er = apply_e(v.index[static_cast<size_t>(k)], i);
            const int img = pos.at(er.image.pairing());
            epsi[static_cast<size_t>(img)] +=
                scaled(v.components[static_cast<size_t>(k)], tau_to_q(er.weight));
        }
        const ZPoly fwd = qdiff(N, i, i - 1);  // q z_{i+1} - q^{-1} z_i
        const ZPoly bwd = qdiff(N, i - 1, i);  // q z_i - q^{-1} z_{i+1}
        const ZPoly dz = zdiff(N, i, i - 1);   // z_{i+1} - z_i
        for (int s = 0; s < d; ++s) {
            const ZPoly& comp = v.components[static_cast<size_t>(s)];
            const ZPoly lhs = fwd * comp + dz * epsi[static_cast<size_t>(s)];
            const ZPoly rhs = bwd * swap_vars(comp, i - 1, i);
            if (lhs != rhs) {
                std::ostringstream os;
                os << "swap " << i << " at " << v.index[static_cast<size_t>(s)].str();
                note_failure(exchange, os.str());
            }
        }
    }

    // left wall: z_1 -> 1/z_1 costs z_1^{-(2n-2)}
    CheckResult left{"left boundary relation", true, ""};
    for (int s = 0; s < d; ++s) {
        const ZPoly& comp = v.components[static_cast<size_t>(s)];
        ZPoly lhs(N), rhs(N);
        for (const auto& [e, c] : comp.terms()) {
            auto e2 = e;
            e2[0] -= 2 * n - 2;
            lhs.add_term(e2, c);
            e2 = e;
            e2[0] = -e2[0];
            rhs.add_term(e2, c);
        }
        if (lhs != rhs)
            note_failure(left, "at " + v.index[static_cast<size_t>(s)].str());
    }

    // right wall: z_N -> q^6/z_N costs (q^3/z_N)^{2n-2}
    CheckResult right{"right boundary relation", true, ""};
    for (int s = 0; s < d; ++s) {
        const ZPoly& comp = v.components[static_cast<size_t>(s)];
        ZPoly lhs(N), rhs(N);
        for (const auto& [e, c] : comp.terms()) {
            auto e2 = e;
            e2[static_cast<size_t>(N - 1)] -= 2 * n - 2;
            lhs.add_term(e2, c * LaurentScalar::q_power(3 * (2 * n - 2)));
            e2 = e;
            const int k = e2[static_cast<size_t>(N - 1)];
            e2[static_cast<size_t>(N - 1)] = -k;
            rhs.add_term(e2, c * LaurentScalar::q_power(6 * k));
        }
        if (lhs != rhs)
            note_failure(right, "at " + v.index[static_cast<size_t>(s)].str());
    }

    // mirror inversion: Psi_pi(z) = prod_i (z_i^2/q^3)^{n-1} Psi_mirror(q^3/z_N..q^3/z_1)
    CheckResult inv{"mirror inversion", true, ""};
    for (int s = 0; s < d; ++s) {
        const ZPoly& target = v.components[static_cast<size_t>(s)];
        const ZPoly& source = v.at(v.index[static_cast<size_t>(s)].mirror());
        ZPoly refl(N);
        for (const auto& [e, c] : source.terms()) {
            const int tot = std::accumulate(e.begin(), e.end(), 0);
            std::vector<int> e2(static_cast<size_t>(N));
            for (int u = 0; u < N; ++u)
                e2[static_cast<size_t>(u)] = 2 * (n - 1) - e[static_cast<size_t>(N - 1 - u)];
            refl.add_term(std::move(e2), c * LaurentScalar::q_power(3 * tot - 6 * n * (n - 1)));
        }
        if (refl != target)
            note_failure(inv, "at " + v.index[static_cast<size_t>(s)].str());
    }

    CheckResult unit{"operator unitarity", true, ""};
    for (int i = 1; i < N; ++i) {
        const OpMat ab = n_op(v.index, pos, i, 0, 1, 2);
        const OpMat ba = n_op(v.index, pos, i, 1, 0, 2);
        const OpMat prod = op_mul(ab, ba, 2);
        const ZPoly want = qdiff(2, 0, 1) * qdiff(2, 1, 0);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                const ZPoly& got = prod[static_cast<size_t>(r)][static_cast<size_t>(c)];
                const bool ok = (r == c) ? got == want : got.is_zero();
                if (!ok) {
                    std::ostringstream os;
                    os << "swap " << i << " entry (" << r << "," << c << ")";
                    note_failure(unit, os.str());
                }
            }
    }

    CheckResult ybe{"Yang-Baxter relation", true, ""};
    for (int i = 1; i + 1 < N; ++i) {
        // variables z, w, x; the scalar denominators agree on both sides
        const OpMat lhs = op_mul(op_mul(n_op(v.index, pos, i, 0, 1, 3),
                                        n_op(v.index, pos, i + 1, 0, 2, 3), 3),
                                 n_op(v.index, pos, i, 1, 2, 3), 3);
        const OpMat rhs = op_mul(op_mul(n_op(v.index, pos, i + 1, 1, 2, 3),
                                        n_op(v.index, pos, i, 0, 2, 3), 3),
                                 n_op(v.index, pos, i + 1, 0, 1, 3), 3);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                if (lhs[static_cast<size_t>(r)][static_cast<size_t>(c)] !=
                    rhs[static_cast<size_t>(r)][static_cast<size_t>(c)]) {
                    std::ostringstream os;
                    os << "swaps (" << i << "," << i + 1 << ") entry (" << r << "," << c << ")";
                    note_failure(ybe, os.str());
                }
    }

    CheckResult deg{"component degree", true, ""};
    for (int s = 0; s < d; ++s)
        if (v.components[static_cast<size_t>(s)].total_degree() != 3 * n * (n - 1))
            note_failure(deg, "at " + v.index[static_cast<size_t>(s)].str());

    return {exchange, left, right, inv, unit, ybe, deg};
}

ZPoly residue_eval_openpsi(const std::vector<int>& a) {
    const int n = static_cast<int>(a.size());
    if (n < 1) throw std::domain_error("residue_eval_openpsi: empty opening sequence");
    if (n > 2) throw std::domain_error("residue_eval_openpsi: size capped at n = 2");
    for (int l = 0; l < n; ++l) {
        if (a[static_cast<size_t>(l)] < 1 || a[static_cast<size_t>(l)] > 2 * l + 1)
            throw std::domain_error("residue_eval_openpsi: not an opening sequence");
        if (l > 0 && a[static_cast<size_t>(l)] <= a[static_cast<size_t>(l - 1)])
            throw std::domain_error("residue_eval_openpsi: openings must increase");
    }
    const int N = 2 * n;

    ZPoly pref = ZPoly::constant(N, LaurentScalar(1));
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            pref *= qdiff(N, i - 1, j - 1) * gap(N, 4, i - 1, j - 1);

    // residues at w_l = z_{ch_l}, ch_l <= a_l; coincident picks cancel anyway
    std::vector<std::vector<int>> picks;
    std::vector<int> ch(static_cast<size_t>(n));
    std::function<void(int)> rec = [&](int l) {
        if (l == n) {
            picks.push_back(ch);
            return;
        }
        for (int k = 1; k <= a[static_cast<size_t>(l)]; ++k) {
            bool dup = false;
            for (int m = 0; m < l; ++m) dup = dup || ch[static_cast<size_t>(m)] == k;
            if (dup) continue;
            ch[static_cast<size_t>(l)] = k;
            rec(l + 1);
        }
    };
    rec(0);

    ZPoly num_total(N);
    ZPoly den_total = ZPoly::constant(N, LaurentScalar(1));
    for (const auto& pick : picks) {
        ZPoly tn = ZPoly::constant(N, LaurentScalar(1));
        for (int l = 0; l < n; ++l)
            for (int m = l + 1; m < n; ++m) {
                const int u = pick[static_cast<size_t>(l)] - 1;
                const int w = pick[static_cast<size_t>(m)] - 1;
                tn *= zdiff(N, w, u) * qdiff(N, u, w) * gap(N, 2, u, w);
            }
        for (int l = 0; l < n; ++l)
            for (int m = l; m < n; ++m)
                tn *= gap(N, 4, pick[static_cast<size_t>(l)] - 1, pick[static_cast<size_t>(m)] - 1);
        ZPoly td = ZPoly::constant(N, LaurentScalar(1));
        for (int l = 0; l < n; ++l) {
            const int k = pick[static_cast<size_t>(l)];
            for (int i = 1; i <= N; ++i) td *= gap(N, 4, k - 1, i - 1);
            for (int i = 1; i <= a[static_cast<size_t>(l)]; ++i)
                if (i != k) td *= zdiff(N, k - 1, i - 1);
            for (int i = a[static_cast<size_t>(l)] + 1; i <= N; ++i)
                td *= qdiff(N, k - 1, i - 1);
        }
        num_total = num_total * td + tn * den_total;
        den_total *= td;
    }
    return poly_exact_div(pref * num_total, den_total);
}

ZPolyVector odd_reduce(const ZPolyVector& v) {
    if (v.N < 2 || v.N % 2 != 0)
        throw std::invalid_argument("odd_reduce: even input required");
    ZPolyVector r;
    r.N = v.N - 1;
    for (const auto& pi : v.index) r.index.push_back(erase_rightmost_arch(pi));
    // erasing keeps the up-step positions, so the canonical order survives
    if (r.index != enumerate_patterns(r.N))
        throw std::logic_error("odd_reduce: canonical order not preserved");
    for (const auto& comp : v.components) {
        const ZPoly cut = set_var_zero(comp, v.N - 1);
        ZPoly out(r.N);
        for (const auto& [e, c] : cut.terms())
            out.add_term(std::vector<int>(e.begin(), e.end() - 1), c);
        r.components.push_back(std::move(out));
    }
    return r;
}

CheckResult homogeneous_match(const ZPolyVector& v, const PsiVector& ref,
                              LaurentScalar* constant) {
    CheckResult cr{"homogeneous match", true, ""};
    if (v.N != ref.N || v.index.size() != ref.index.size()) {
        cr.ok = false;
        cr.detail = "size mismatch";
        return cr;
    }
    for (size_t k = 0; k < v.index.size(); ++k)
        if (v.index[k] != ref.index[k]) {
            cr.ok = false;
            cr.detail = "index mismatch at " + ref.index[k].str();
            return cr;
        }
    const LaurentScalar o0 = v.components[0].eval_all_ones();
    const LaurentScalar p0 = tau_to_q(ref.components[0]);
    if (o0.is_zero() || p0.is_zero()) {
        cr.ok = false;
        cr.detail = "vanishing leading component";
        return cr;
    }
    // cross-multiplied proportionality, one global constant for every entry
    for (size_t k = 0; k < v.index.size(); ++k) {
        const LaurentScalar ok = v.components[k].eval_all_ones();
        const LaurentScalar pk = tau_to_q(ref.components[k]);
        if (ok * p0 != o0 * pk)
            note_failure(cr, "at " + v.index[k].str());
    }
    if (cr.ok && constant != nullptr) *constant = divexact(o0, p0);
    return cr;
}

} // namespace qkz
