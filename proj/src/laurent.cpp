#include "qkz/laurent.hpp"
#include "qkz/errors.hpp"

namespace qkz {

void LaurentScalar::trim() {
    size_t lo = 0;
    while (lo < c_.size() && c_[lo] == 0) ++lo;
    if (lo == c_.size()) {
        c_.clear();
        off_ = 0;
        return;
    }
    size_t hi = c_.size();
    while (c_[hi - 1] == 0) --hi;
    if (lo > 0 || hi < c_.size()) {
        c_ = std::vector<Int>(c_.begin() + static_cast<long>(lo), c_.begin() + static_cast<long>(hi));
        off_ += static_cast<int>(lo);
    }
}

LaurentScalar LaurentScalar::q_power(int k, const Int& coeff) {
    LaurentScalar r;
    if (coeff != 0) {
        r.off_ = k;
        r.c_.assign(1, coeff);
    }
    return r;
}

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) { *this = o; return *this; }
    int lo = std::min(off_, o.off_);
    int hi = std::max(degree(), o.degree());
    std::vector<Int> out(static_cast<size_t>(hi - lo + 1), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) out[static_cast<size_t>(off_ - lo) + i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) out[static_cast<size_t>(o.off_ - lo) + i] += o.c_[i];
    off_ = lo;
    c_ = std::move(out);
    trim();
    return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) {
    *this += -o;
    return *this;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
    if (a.is_zero() || b.is_zero()) return LaurentScalar();
    LaurentScalar r;
    r.off_ = a.off_ + b.off_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

LaurentScalar LaurentScalar::pow(int e) const {
    if (e == 0) return LaurentScalar(1);
    if (e < 0) {
        if (!is_monomial()) throw std::domain_error("LaurentScalar::pow: negative power of a non-monomial");
        if (c_[0] != 1 && c_[0] != -1)
            throw std::domain_error("LaurentScalar::pow: non-unit coefficient");
        LaurentScalar inv = q_power(-off_, c_[0]);
        return inv.pow(-e);
    }
    LaurentScalar acc(1), base(*this);
    int k = e;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string LaurentScalar::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        int e = off_ + static_cast<int>(i);
        Int a = c_[i];
        if (!s.empty()) {
            s += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        } else if (a < 0) {
            s += "-";
            a = -a;
        }
        std::string coeff = a.get_str();
        if (e == 0) {
            s += coeff;
        } else {
            if (coeff != "1") s += coeff + "*";
            s += "q";
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

LaurentScalar divexact(const LaurentScalar& a, const LaurentScalar& b) {
    if (b.is_zero()) throw ExactDivisionError("LaurentScalar division by zero", a.str());
    if (a.is_zero()) return LaurentScalar();
    // long division from the top; q-power offsets cancel separately
    int qoff = a.off_ - b.off_;
    std::vector<Int> r(a.c_);
    int rdeg = static_cast<int>(r.size()) - 1;
    int bdeg = static_cast<int>(b.c_.size()) - 1;
    if (rdeg < bdeg) throw ExactDivisionError("LaurentScalar division: too short", a.str());
    std::vector<Int> q(static_cast<size_t>(rdeg - bdeg) + 1, Int(0));
    const Int& lead = b.c_.back();
    for (int k = rdeg - bdeg; k >= 0; --k) {
        Int& top = r[static_cast<size_t>(k + bdeg)];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
            throw ExactDivisionError("LaurentScalar division: leading coefficient not divisible", a.str());
        Int f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        q[static_cast<size_t>(k)] = f;
        for (int j = 0; j <= bdeg; ++j)
            r[static_cast<size_t>(k + j)] -= f * b.c_[static_cast<size_t>(j)];
    }
    for (const Int& x : r)
        if (x != 0) {
            LaurentScalar rem;
            rem.off_ = a.off_;
            rem.c_ = r;
            rem.trim();
            throw ExactDivisionError("LaurentScalar division not exact", rem.str());
        }
    LaurentScalar out;
    out.off_ = qoff;
    out.c_ = std::move(q);
    out.trim();
    return out;
}

LaurentScalar tau_to_q(const TauPoly& p) {
    LaurentScalar tau = LaurentScalar::q_power(1, -1) + LaurentScalar::q_power(-1, -1);
    LaurentScalar acc;
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * tau;
        acc += LaurentScalar(p.coeff(i));
    }
    return acc;
}

} // namespace qkz
