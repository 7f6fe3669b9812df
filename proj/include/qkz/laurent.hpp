#pragma once
#include "qkz/taupoly.hpp"
#include <string>
#include <vector>

namespace qkz {

// Laurent polynomial in q over arbitrary-precision integers.
// Stored as an offset plus a dense run of coefficients, trimmed at both ends.
class LaurentScalar {
public:
    LaurentScalar() = default;
    LaurentScalar(long v) { if (v != 0) { off_ = 0; c_.assign(1, Int(v)); } }
    LaurentScalar(const Int& v) { if (v != 0) { off_ = 0; c_.assign(1, v); } }

    static LaurentScalar q_power(int k, const Int& coeff = 1);

    bool is_zero() const { return c_.empty(); }
    int valuation() const { return off_; }                              // undefined for zero
    int degree() const { return off_ + static_cast<int>(c_.size()) - 1; }
    Int coeff(int k) const {
        int i = k - off_;
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : Int(0);
    }

    LaurentScalar operator-() const;
    LaurentScalar& operator+=(const LaurentScalar& o);
    LaurentScalar& operator-=(const LaurentScalar& o);
    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { a += b; return a; }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { a -= b; return a; }
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
    LaurentScalar& operator*=(const LaurentScalar& o) { *this = *this * o; return *this; }
    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
        return a.off_ == b.off_ && a.c_ == b.c_;
    }
    friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) { return !(a == b); }

    bool is_monomial() const { return c_.size() == 1; }
    LaurentScalar pow(int e) const; // for monomials any e, otherwise e >= 0

    std::string str() const;

private:
    int off_ = 0;
    std::vector<Int> c_;
    void trim();
    friend LaurentScalar divexact(const LaurentScalar& a, const LaurentScalar& b);
};

// Exact quotient in Z[q, 1/q]; throws ExactDivisionError otherwise.
LaurentScalar divexact(const LaurentScalar& a, const LaurentScalar& b);

// tau -> -q - 1/q
LaurentScalar tau_to_q(const TauPoly& p);

} // namespace qkz
