#pragma once
#include "qkz/taupoly.hpp"
#include <vector>

namespace qkz {

// Polynomial in t whose coefficients are polynomials in tau.
// rows()[j] is the coefficient of t^j; trimmed so the top row is nonzero.
class BiPoly {
public:
    BiPoly() = default;
    BiPoly(const TauPoly& constant) { if (!constant.is_zero()) rows_.assign(1, constant); }
    BiPoly(long v) : BiPoly(TauPoly(v)) {}

    static BiPoly t_term(const TauPoly& coeff, int tpow);

    bool is_zero() const { return rows_.empty(); }
    int t_degree() const { return static_cast<int>(rows_.size()) - 1; } // -1 for zero
    TauPoly t_coeff(int j) const {
        return (j >= 0 && j < static_cast<int>(rows_.size())) ? rows_[static_cast<size_t>(j)] : TauPoly();
    }
    const std::vector<TauPoly>& rows() const { return rows_; }

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { a += b; return a; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { a -= b; return a; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly& operator*=(const BiPoly& o) { *this = *this * o; return *this; }
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.rows_ == b.rows_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    TauPoly at_t_zero() const { return t_coeff(0); }
    TauPoly at_t_one() const;
    TauPoly at_t_tau() const;
    TauPoly at_t_inv_tau() const;   // throws unless the result is a genuine polynomial
    TauPoly leading_t_coeff() const { return is_zero() ? TauPoly() : rows_.back(); }
    BiPoly t_reversed(int n) const; // t^j -> t^(n-j); requires t_degree() <= n

    Int eval(const Int& t, const Int& tau) const;
    std::string str() const;

private:
    std::vector<TauPoly> rows_;
    void trim() { while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back(); }
};

BiPoly divexact(const BiPoly& a, const BiPoly& b);

} // namespace qkz
