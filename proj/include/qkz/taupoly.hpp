#pragma once
#include "qkz/bigint.hpp"
#include <string>
#include <vector>

namespace qkz {

// Dense polynomial in tau over arbitrary-precision integers.
// Invariant: no trailing zero coefficient; the zero polynomial stores nothing.
class TauPoly {
public:
    TauPoly() = default;
    TauPoly(long v) { if (v != 0) c_.assign(1, Int(v)); }
    TauPoly(const Int& v) { if (v != 0) c_.assign(1, v); }
    explicit TauPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static TauPoly monomial(const Int& coeff, int k);
    static TauPoly tau() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    int valuation() const; // -1 for zero
    Int coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Int(0);
    }
    const std::vector<Int>& coeffs() const { return c_; }
    Int leading() const { return is_zero() ? Int(0) : c_.back(); }
    Int lowest() const;

    TauPoly operator-() const;
    TauPoly& operator+=(const TauPoly& o);
    TauPoly& operator-=(const TauPoly& o);
    friend TauPoly operator+(TauPoly a, const TauPoly& b) { a += b; return a; }
    friend TauPoly operator-(TauPoly a, const TauPoly& b) { a -= b; return a; }
    friend TauPoly operator*(const TauPoly& a, const TauPoly& b);
    TauPoly& operator*=(const TauPoly& o) { *this = *this * o; return *this; }
    friend bool operator==(const TauPoly& a, const TauPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TauPoly& a, const TauPoly& b) { return !(a == b); }

    TauPoly shifted(int k) const; // * tau^k, k >= 0

    Int eval(const Int& x) const; // Horner
    std::string str(const char* var = "tau") const;

private:
    std::vector<Int> c_;
    void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
};

// Quotient of an exact division; throws ExactDivisionError otherwise.
TauPoly poly_exact_div(const TauPoly& num, const TauPoly& den);

inline TauPoly divexact(const TauPoly& a, const TauPoly& b) { return poly_exact_div(a, b); }
inline Int divexact(const Int& a, const Int& b) { return divexact_int(a, b, "Int"); }

} // namespace qkz
