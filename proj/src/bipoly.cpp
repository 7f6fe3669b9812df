#include "qkz/bipoly.hpp"
#include "qkz/errors.hpp"

namespace qkz {

BiPoly BiPoly::t_term(const TauPoly& coeff, int tpow) {
    BiPoly r;
    if (!coeff.is_zero()) {
        r.rows_.assign(static_cast<size_t>(tpow) + 1, TauPoly());
        r.rows_[static_cast<size_t>(tpow)] = coeff;
    }
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r(*this);
    for (auto& p : r.rows_) p = -p;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
    for (size_t i = 0; i < o.rows_.size(); ++i) rows_[i] += o.rows_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
    for (size_t i = 0; i < o.rows_.size(); ++i) rows_[i] -= o.rows_[i];
    trim();
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    BiPoly r;
    r.rows_.assign(a.rows_.size() + b.rows_.size() - 1, TauPoly());
    for (size_t i = 0; i < a.rows_.size(); ++i) {
        if (a.rows_[i].is_zero()) continue;
        for (size_t j = 0; j < b.rows_.size(); ++j)
            if (!b.rows_[j].is_zero()) r.rows_[i + j] += a.rows_[i] * b.rows_[j];
    }
    r.trim();
    return r;
}

TauPoly BiPoly::at_t_one() const {
    TauPoly acc;
    for (const auto& p : rows_) acc += p;
    return acc;
}

TauPoly BiPoly::at_t_tau() const {
    TauPoly acc;
    for (size_t j = 0; j < rows_.size(); ++j) acc += rows_[j].shifted(static_cast<int>(j));
    return acc;
}

TauPoly BiPoly::at_t_inv_tau() const {
    // sum tau^(d-j) * row_j must be divisible by tau^d
    if (is_zero()) return TauPoly();
    int d = t_degree();
    TauPoly acc;
    for (size_t j = 0; j < rows_.size(); ++j) acc += rows_[j].shifted(d - static_cast<int>(j));
    if (acc.is_zero()) return TauPoly();
    if (acc.valuation() < d)
        throw ExactDivisionError("BiPoly at_t_inv_tau: not a polynomial in tau", acc.str());
    return poly_exact_div(acc, TauPoly::monomial(1, d));
}

BiPoly BiPoly::t_reversed(int n) const {
    if (t_degree() > n) throw std::domain_error("BiPoly::t_reversed: degree exceeds n");
    BiPoly r;
    r.rows_.assign(static_cast<size_t>(n) + 1, TauPoly());
    for (size_t j = 0; j < rows_.size(); ++j)
        r.rows_[static_cast<size_t>(n) - j] = rows_[j];
    r.trim();
    return r;
}

Int BiPoly::eval(const Int& t, const Int& tau) const {
    Int acc = 0;
    for (size_t i = rows_.size(); i-- > 0;) acc = acc * t + rows_[i].eval(tau);
    return acc;
}

std::string BiPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t j = 0; j < rows_.size(); ++j) {
        if (rows_[j].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string part = rows_[j].str();
        if (j == 0) {
            s += part;
        } else {
            std::string tp = (j == 1) ? "t" : "t^" + std::to_string(j);
            if (part == "1") s += tp;
            else s += "(" + part + ")*" + tp;
        }
    }
    return s;
}

BiPoly divexact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw ExactDivisionError("BiPoly division by zero", a.str());
    if (a.is_zero()) return BiPoly();
    if (a.t_degree() < b.t_degree())
        throw ExactDivisionError("BiPoly division: degree too low", a.str());
    BiPoly rem(a), quot;
    const TauPoly lead = b.leading_t_coeff();
    for (int k = a.t_degree() - b.t_degree(); k >= 0; --k) {
        TauPoly top = rem.t_coeff(k + b.t_degree());
        if (top.is_zero()) continue;
        TauPoly f = poly_exact_div(top, lead);
        quot += BiPoly::t_term(f, k);
        rem -= BiPoly::t_term(f, k) * b;
    }
    if (!rem.is_zero())
        throw ExactDivisionError("BiPoly division not exact", rem.str());
    return quot;
}

} // namespace qkz
