#pragma once
#include <string>
#include <vector>

namespace qkz {

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
};

// Truncated Laurent identity behind the determinant form of the sum rule:
// keeping only the all-nonpositive-exponent terms of
//   prod_{l<=m}(1-u_l u_m) * A(prod_m u_m^{2-2m} prod_{l<m}(1+tau u_m+u_l u_m))
// reproduces prod_{l<m}(u_m^{-1}-u_l^{-1})(tau+u_l^{-1}+u_m^{-1}).
CheckResult check_truncated_expansion(int n);

// A(prod_{l<m}(q u_l - q^{-1} u_m)) = (-1)^{k(k-1)/2} U_1...U_{k-1} prod_{l<m}(u_m-u_l),
// an identity of multivariate polynomials with Laurent coefficients in q.
CheckResult check_qvandermonde_antisym(int k);

// sum_m prod_{l!=m}(q u_m - q^{-1} u_l)/(u_m - u_l) is the constant U_{k-1};
// evaluated at exact rational points with rational q.
CheckResult check_constant_fraction_sum(int k);

// prod_l f_l - sum_j f_j prod_{l!=j}(q u_j - q^{-1} u_l)/(u_j - u_l) + U_{p-2} = 0
// with f_l = (u_l - z)/(q u_l - q^{-1} z); exact rational points again.
CheckResult check_weighted_fraction_sum(int p);

// Runs every check up to the given bounds and returns all results, failures
// included. max_symbolic bounds the polynomial identities, max_rational the
// rational-point ones.
std::vector<CheckResult> verify_lemma_suite(int max_n, int max_symbolic, int max_rational);

}
