#pragma once
#include "qkz/lemmas.hpp"
#include "qkz/linkpattern.hpp"
#include "qkz/multipoly.hpp"
#include "qkz/psivec.hpp"
#include <vector>

namespace qkz {

// Symbolic solver for the exchange system in the full inhomogeneous variables
// z_1..z_N over Laurent-q scalars. Independent of the closing-position
// expansion: components are produced by the triangular exchange-relation solve
// seeded at the rainbow, and can be cross-checked against the homogeneous
// pipeline at z = 1.
using ZPoly = MultiPoly<LaurentScalar>;

struct ZPolyVector {
    int N = 0;
    std::vector<LinkPattern> index; // canonical enumeration order
    std::vector<ZPoly> components;
    const ZPoly& at(const LinkPattern& pi) const;
};

// Rainbow component: prod_{1<=i<j<=n} (q z_i - q^{-1} z_j)(q^2 - z_i z_j)
// times prod_{n<i<j<=2n} (q z_i - q^{-1} z_j)(q^4 - z_i z_j).
ZPoly seed_psi0(int n);

// Solve for all components of the size-2n vector by removing one box at a
// time from the Dyck path, in decreasing box-count order. Exact in Z[q,1/q];
// sizes are capped (n <= 3) since the expressions grow quickly.
ZPolyVector solve_exchange(int n);

// Re-derive the defining relations on a solved vector: exchange under each
// adjacent swap, both boundary reflections, mirror inversion, unitarity and
// the Yang-Baxter relation for the transfer operators, and the total degree.
std::vector<CheckResult> verify_qkz_system(const ZPolyVector& v);

// Direct evaluation of the contour-integral formula for the component with
// opening positions a (strictly increasing, a_l <= 2l-1) by summing the
// residues at w_l = z_i, i <= a_l. Only the smallest sizes (n <= 2).
ZPoly residue_eval_openpsi(const std::vector<int>& a);

// Specialize z_N = 0 and drop the last point; components reindex along the
// rightmost-arch erasure, which preserves the canonical order.
ZPolyVector odd_reduce(const ZPolyVector& v);

// All components at z = 1 must equal one global Laurent-q constant times the
// tau-polynomial components of the homogeneous vector under tau -> -q - 1/q.
// On success *constant receives that factor when requested.
CheckResult homogeneous_match(const ZPolyVector& v, const PsiVector& ref,
                              LaurentScalar* constant = nullptr);

} // namespace qkz
