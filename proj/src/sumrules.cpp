#include "qkz/sumrules.hpp"

#include <stdexcept>

#include "qkz/ctengine.hpp"
#include "qkz/matrix.hpp"

namespace qkz {

namespace {

// Entry of the even determinant: sum over s of
//   tau^{2i+2j-2s} binom(i,2i-s) (t tau binom(j,2j-s+1) + binom(j,2j-s)).
BiPoly even_entry(int i, int j) {
    BiPoly e;
    for (int s = i; s <= 2 * i; ++s) {
        Int left = binom(i, 2 * i - s);
        if (left == 0) continue;
        int pow = 2 * i + 2 * j - 2 * s;
        Int c0 = left * binom(j, 2 * j - s);
        if (c0 != 0) e += BiPoly(TauPoly::monomial(c0, pow));
        Int c1 = left * binom(j, 2 * j - s + 1);
        if (c1 != 0) e += BiPoly::t_term(TauPoly::monomial(c1, pow + 1), 1);
    }
    return e;
}

// Entry of the odd determinant: sum over r of
//   tau^{2l+2m-2r-1} binom(l,r-l) (tau binom(m-1,2m-r) + t binom(m-1,2m-1-r)).
BiPoly odd_entry(int l, int m) {
    BiPoly e;
    for (int r = l; r <= 2 * l; ++r) {
        Int left = binom(l, r - l);
        if (left == 0) continue;
        int pow = 2 * l + 2 * m - 2 * r;
        Int c0 = left * binom(m - 1, 2 * m - r);
        if (c0 != 0) e += BiPoly(TauPoly::monomial(c0, pow));
        Int c1 = left * binom(m - 1, 2 * m - 1 - r);
        if (c1 != 0) e += BiPoly::t_term(TauPoly::monomial(c1, pow - 1), 1);
    }
    return e;
}

}  // namespace

BiPoly gen_direct(int n, Parity parity) {
    if (n < 1) throw std::domain_error("gen_direct: n must be positive");
    BiPoly total;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> b;
        int weight = 0;
        bool zero = false;
        for (int i = 1; i <= n; ++i) {
            int eps = (mask >> (i - 1)) & 1;
            weight += eps;
            int idx = (parity == Parity::Even ? 2 * i - 1 : 2 * i) - eps;
            if (idx == 0) zero = true;
            b.push_back(idx);
        }
        if (zero) continue;
        ClosingIndex ci(b);
        TauPoly k = parity == Parity::Even ? k_even(ci) : k_odd(ci);
        total += BiPoly::t_term(k, weight);
    }
    return total;
}

BiPoly gen_det_even(int n) {
    if (n < 1) throw std::domain_error("gen_det_even: n must be positive");
    size_t sz = static_cast<size_t>(n - 1);
    Matrix<BiPoly> m(sz, std::vector<BiPoly>(sz));
    for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j)
            m[i][j] = even_entry(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    return bareiss_det(m);
}

BiPoly gen_det_odd(int n, std::string* convention) {
    if (n < 1) throw std::domain_error("gen_det_odd: n must be positive");
    size_t sz = static_cast<size_t>(n);
    Matrix<BiPoly> m(sz, std::vector<BiPoly>(sz));
    for (size_t l = 0; l < sz; ++l)
        for (size_t mm = 0; mm < sz; ++mm)
            m[l][mm] = odd_entry(static_cast<int>(l) + 1, static_cast<int>(mm) + 1);
    BiPoly det = bareiss_det(m);

    BiPoly direct = gen_direct(n, Parity::Odd);
    std::string conv;
    if (det == direct) {
        conv = "identity";
    } else if (det.t_degree() <= n && det.t_reversed(n) == direct) {
        conv = "t-reversal";
    } else {
        throw std::runtime_error("gen_det_odd: no t convention reconciles the two routes");
    }
    if (det.at_t_one() != direct.at_t_one())
        throw std::runtime_error("gen_det_odd: routes disagree at t=1");
    if (convention) *convention = conv;
    return det;
}

TauPoly rotated_component_det(int n) {
    if (n < 1) throw std::domain_error("rotated_component_det: n must be positive");
    size_t sz = static_cast<size_t>(n - 1);
    Matrix<TauPoly> m(sz, std::vector<TauPoly>(sz));
    for (size_t i0 = 0; i0 < sz; ++i0)
        for (size_t j0 = 0; j0 < sz; ++j0) {
            int i = static_cast<int>(i0) + 1, j = static_cast<int>(j0) + 1;
            TauPoly e;
            for (int s = i; s <= 2 * i; ++s) {
                Int c = binom(i, 2 * i - s) * binom(j, 2 * j - s + 1);
                if (c != 0) e += TauPoly::monomial(c, 2 * i + 2 * j - 2 * s + 1);
            }
            m[i0][j0] = e;
        }
    return bareiss_det(m);
}

SumRuleReport sum_rule_report(int n, Parity parity) {
    SumRuleReport rep;
    rep.n = n;
    rep.parity = parity;
    rep.direct = gen_direct(n, parity);
    if (parity == Parity::Even) {
        rep.determinant = gen_det_even(n);
        if (rep.determinant != rep.direct)
            throw std::runtime_error("sum_rule_report: even routes disagree");
        rep.convention_map = "identity";
        rep.specializations["t=0"] = rep.direct.at_t_zero();
        rep.specializations["top-t"] = rep.direct.t_coeff(n - 1);
        rep.specializations["t=1"] = rep.direct.at_t_one();
        rep.specializations["t=1/tau"] = rep.direct.at_t_inv_tau();
    } else {
        rep.determinant = gen_det_odd(n, &rep.convention_map);
        rep.specializations["t=1"] = rep.direct.at_t_one();
        rep.specializations["t=tau"] = rep.determinant.at_t_tau();
    }
    return rep;
}

}
