#include "qkz/lemmas.hpp"

#include <sstream>

#include "qkz/cheb.hpp"
#include "qkz/multipoly.hpp"

namespace qkz {

namespace {

template <class C>
MultiPoly<C> var_mono(int n, const std::vector<int>& caps, int v, int e, C c) {
    MultiPoly<C> p(n, caps);
    std::vector<int> ex(static_cast<size_t>(n), 0);
    ex[static_cast<size_t>(v)] = e;
    p.add_term(std::move(ex), std::move(c));
    return p;
}

template <class C>
MultiPoly<C> two_var_mono(int n, const std::vector<int>& caps, int v1, int v2, C c) {
    MultiPoly<C> p(n, caps);
    std::vector<int> ex(static_cast<size_t>(n), 0);
    ex[static_cast<size_t>(v1)] += 1;
    ex[static_cast<size_t>(v2)] += 1;
    p.add_term(std::move(ex), std::move(c));
    return p;
}

std::vector<int> all_vars(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
    return v;
}

// U_j = (q^{j+1} - q^{-j-1})/(q - q^{-1}) with q specialized to an exact
// rational; j = -1 gives 0.
Rat u_at(const Rat& q, int j) {
    Rat qp(1), qm(1);
    for (int i = 0; i < j + 1; ++i) {
        qp *= q;
        qm /= q;
    }
    return (qp - qm) / (q - 1 / q);
}

}  // namespace

CheckResult check_truncated_expansion(int n) {
    using MP = MultiPoly<TauPoly>;
    CheckResult res;
    {
        std::ostringstream os;
        os << "truncated expansion, n=" << n;
        res.name = os.str();
    }
    const TauPoly one(1), t = TauPoly::tau();
    // Past the leading monomials every factor only adds nonnegative exponent
    // deltas and antisymmetrization merely permutes them, so a term of the
    // accumulating product with any positive exponent can never return to the
    // all-nonpositive region: capping the accumulator at zero is the same as
    // filtering at the end. The factors themselves must stay uncapped.
    std::vector<int> caps(static_cast<size_t>(n), 0);
    MP inner = MP::constant(n, one, caps);
    for (int m = 0; m < n; ++m) inner = inner * var_mono(n, {}, m, -2 * m, one);
    for (int l = 0; l < n; ++l)
        for (int m = l + 1; m < n; ++m)
            inner = inner * (MP::constant(n, one) + var_mono(n, {}, m, 1, t) +
                             two_var_mono(n, {}, l, m, one));
    MP lhs = antisymmetrize(inner, all_vars(n));
    for (int l = 0; l < n; ++l)
        for (int m = l; m < n; ++m)
            lhs = lhs * (MP::constant(n, one) - two_var_mono(n, {}, l, m, one));

    MP rhs = MP::constant(n, one);
    for (int l = 0; l < n; ++l)
        for (int m = l + 1; m < n; ++m) {
            rhs = rhs * (var_mono(n, {}, m, -1, one) - var_mono(n, {}, l, -1, one));
            rhs = rhs * (MP::constant(n, t) + var_mono(n, {}, l, -1, one) +
                         var_mono(n, {}, m, -1, one));
        }
    if (lhs != rhs) {
        res.ok = false;
        res.detail = "kept part " + lhs.str() + " vs product " + rhs.str();
    }
    return res;
}

CheckResult check_qvandermonde_antisym(int k) {
    using MQ = MultiPoly<LaurentScalar>;
    CheckResult res;
    {
        std::ostringstream os;
        os << "antisymmetrized q-Vandermonde, k=" << k;
        res.name = os.str();
    }
    MQ dq = MQ::constant(k, LaurentScalar(1));
    for (int l = 0; l < k; ++l)
        for (int m = l + 1; m < k; ++m)
            dq = dq * (var_mono(k, {}, l, 1, LaurentScalar::q_power(1)) -
                       var_mono(k, {}, m, 1, LaurentScalar::q_power(-1)));
    MQ lhs = antisymmetrize(dq, all_vars(k));

    LaurentScalar pref(1);
    for (int j = 1; j < k; ++j) pref *= tau_to_q(cheb_u(j));
    if ((k * (k - 1) / 2) % 2) pref = -pref;
    MQ rhs = MQ::constant(k, pref);
    for (int l = 0; l < k; ++l)
        for (int m = l + 1; m < k; ++m)
            rhs = rhs * (var_mono(k, {}, m, 1, LaurentScalar(1)) -
                         var_mono(k, {}, l, 1, LaurentScalar(1)));
    if (lhs != rhs) {
        res.ok = false;
        res.detail = "antisymmetrization " + lhs.str() + " vs scaled difference product " + rhs.str();
    }
    return res;
}

CheckResult check_constant_fraction_sum(int k) {
    CheckResult res;
    {
        std::ostringstream os;
        os << "constant fraction sum, k=" << k;
        res.name = os.str();
    }
    const Rat q(2);
    std::vector<Rat> u;
    for (int l = 0; l < k; ++l) u.emplace_back(2 * l + 3);
    Rat sum(0);
    for (int m = 0; m < k; ++m) {
        Rat prod(1);
        for (int l = 0; l < k; ++l) {
            if (l == m) continue;
            prod *= (q * u[static_cast<size_t>(m)] - u[static_cast<size_t>(l)] / q) /
                    (u[static_cast<size_t>(m)] - u[static_cast<size_t>(l)]);
        }
        sum += prod;
    }
    Rat expect = u_at(q, k - 1);
    if (sum != expect) {
        res.ok = false;
        std::ostringstream os;
        os << "sum " << sum << " vs " << expect;
        res.detail = os.str();
    }
    return res;
}

CheckResult check_weighted_fraction_sum(int p) {
    CheckResult res;
    {
        std::ostringstream os;
        os << "weighted fraction sum, p=" << p;
        res.name = os.str();
    }
    const Rat q(2);
    std::vector<Rat> u;
    for (int l = 0; l < p; ++l) u.emplace_back(2 * l + 3);
    for (Rat z : {Rat(1, 3), Rat(-7, 2)}) {
        // explicit return type: gmpxx expression templates must not outlive
        // their operands
        auto f = [&](int l) -> Rat {
            return (u[static_cast<size_t>(l)] - z) / (q * u[static_cast<size_t>(l)] - z / q);
        };
        Rat lhs(1);
        for (int l = 0; l < p; ++l) lhs *= f(l);
        for (int j = 0; j < p; ++j) {
            Rat prod = f(j);
            for (int l = 0; l < p; ++l) {
                if (l == j) continue;
                prod *= (q * u[static_cast<size_t>(j)] - u[static_cast<size_t>(l)] / q) /
                        (u[static_cast<size_t>(j)] - u[static_cast<size_t>(l)]);
            }
            lhs -= prod;
        }
        lhs += u_at(q, p - 2);
        if (lhs != 0) {
            res.ok = false;
            std::ostringstream os;
            os << "left side " << lhs << " at z=" << z;
            res.detail = os.str();
            break;
        }
    }
    return res;
}

std::vector<CheckResult> verify_lemma_suite(int max_n, int max_symbolic, int max_rational) {
    std::vector<CheckResult> out;
    for (int n = 1; n <= max_n; ++n) out.push_back(check_truncated_expansion(n));
    for (int k = 1; k <= max_symbolic; ++k) out.push_back(check_qvandermonde_antisym(k));
    for (int k = 1; k <= max_rational; ++k) out.push_back(check_constant_fraction_sum(k));
    for (int p = 1; p <= max_rational; ++p) out.push_back(check_weighted_fraction_sum(p));
    return out;
}

}
