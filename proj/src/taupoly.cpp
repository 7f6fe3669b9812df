#include "qkz/taupoly.hpp"
#include "qkz/errors.hpp"

namespace qkz {

TauPoly TauPoly::monomial(const Int& coeff, int k) {
    TauPoly p;
    if (coeff != 0) {
        p.c_.assign(static_cast<size_t>(k) + 1, Int(0));
        p.c_[static_cast<size_t>(k)] = coeff;
    }
    return p;
}

int TauPoly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

Int TauPoly::lowest() const {
    int v = valuation();
    return v < 0 ? Int(0) : c_[static_cast<size_t>(v)];
}

TauPoly TauPoly::operator-() const {
    TauPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

TauPoly& TauPoly::operator+=(const TauPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

TauPoly& TauPoly::operator-=(const TauPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

TauPoly operator*(const TauPoly& a, const TauPoly& b) {
    if (a.is_zero() || b.is_zero()) return TauPoly();
    TauPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

TauPoly TauPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    TauPoly r;
    r.c_.assign(c_.size() + static_cast<size_t>(k), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
    return r;
}

Int TauPoly::eval(const Int& x) const {
    Int acc = 0;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string TauPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (!s.empty()) {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        } else if (a < 0) {
            s += "-";
            a = -a;
        }
        std::string coeff = a.get_str();
        if (i == 0) {
            s += coeff;
        } else {
            if (coeff != "1") s += coeff + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

TauPoly poly_exact_div(const TauPoly& num, const TauPoly& den) {
    if (den.is_zero()) throw ExactDivisionError("TauPoly division by zero", num.str());
    if (num.is_zero()) return TauPoly();
    if (num.degree() < den.degree())
        throw ExactDivisionError("TauPoly division: degree too low", num.str());
    std::vector<Int> r(num.coeffs());
    std::vector<Int> q(static_cast<size_t>(num.degree() - den.degree()) + 1, Int(0));
    const Int& lead = den.leading();
    for (int k = num.degree() - den.degree(); k >= 0; --k) {
        Int& top = r[static_cast<size_t>(k + den.degree())];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw ExactDivisionError("TauPoly division: leading coefficient not divisible",
                                     TauPoly(std::vector<Int>(r)).str());
        Int f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        q[static_cast<size_t>(k)] = f;
        for (int j = 0; j <= den.degree(); ++j)
            r[static_cast<size_t>(k + j)] -= f * den.coeff(j);
    }
    TauPoly rem{std::vector<Int>(r)};
    if (!rem.is_zero())
        throw ExactDivisionError("TauPoly division not exact", rem.str());
    return TauPoly(std::move(q));
}

} // namespace qkz
