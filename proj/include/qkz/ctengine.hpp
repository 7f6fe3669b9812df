#pragma once
#include <vector>

#include "qkz/bigint.hpp"
#include "qkz/taupoly.hpp"

namespace qkz {

// Positions of arch closings counted from the right. Relaxed entries
// (b_1 = 0) appear in sum-rule enumeration; canonical ones obey the
// per-parity range bounds.
struct ClosingIndex {
    int n = 0;
    std::vector<int> b;

    explicit ClosingIndex(std::vector<int> bb);
    bool canonical_even() const;  // 1 <= b_i <= 2i-1
    bool canonical_odd() const;   // 1 <= b_i <= 2i
};

// Coefficient of prod u_l^{b_l - 1} in the closing-basis kernel
//   prod_{l<=m} (1 - u_l u_m) * prod_{l<m} (u_m - u_l)(1 + tau u_m + u_l u_m)(tau + u_l + u_m),
// extracted with per-variable degree caps b_l - 1. Any b_l = 0 gives 0.
TauPoly k_even(const ClosingIndex& b);

// Same extraction with the extra factor prod_m (1 + tau u_m + u_m^2).
TauPoly k_odd(const ClosingIndex& b);

// Deterministic parallel map; out[i] corresponds to bs[i].
std::vector<TauPoly> k_batch(const std::vector<ClosingIndex>& bs, bool odd, int jobs);

// Predicted end behavior of a component: tau^valuation * low at the bottom,
// tau^degree * top at the top. When valuation_asserted is false the bottom
// prediction degenerates (the determinant vanishes) and only the top holds.
struct TauLimits {
    int valuation = 0;
    Int low;
    int degree = 0;
    Int top;
    bool valuation_asserted = true;
};

TauLimits tau_limits_even(const ClosingIndex& b);
TauLimits tau_limits_odd(const ClosingIndex& b);

}
