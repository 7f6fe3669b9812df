#pragma once
#include <string>
#include <vector>

#include "qkz/lemmas.hpp"
#include "qkz/linkpattern.hpp"
#include "qkz/taupoly.hpp"

namespace qkz {

// Homogeneous solution vector: one polynomial per link pattern, in the
// pipeline normalization (the rainbow component of an even size 2n is
// exactly tau^{n(n-1)/2}).
struct PsiVector {
    int N = 0;
    std::vector<LinkPattern> index;  // canonical order
    std::vector<TauPoly> components;
    std::string normalization;

    const TauPoly& at(const LinkPattern& pi) const;
};

// Closing-basis values pushed through the inverse change of basis.
PsiVector psi_even(int n, int jobs = 1);

// Size 2n+1. Each pattern is carried to size 2n+2 by joining its unmatched
// point to a new rightmost point; the even change of basis is applied there
// with the odd closing-basis values.
PsiVector psi_odd(int n, int jobs = 1);

// Per-component end behavior against the closing-determinant predictions,
// plus the grand sum against the generating function at t=1. Violations are
// returned with the offending pattern. Coefficient nonnegativity is only
// reported, never counted as a failure.
struct PsiReport {
    std::vector<CheckResult> failures;
    bool nonnegative = true;
    std::string nonnegative_detail;
    TauPoly sum;
    bool ok() const { return failures.empty(); }
};

PsiReport check_properties(const PsiVector& v);

}
