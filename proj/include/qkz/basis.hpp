#pragma once
#include <string>
#include <vector>

#include "qkz/linkpattern.hpp"
#include "qkz/matrix.hpp"
#include "qkz/taupoly.hpp"

namespace qkz {

// Change of basis between link patterns and opening-position sequences.
// Rows and columns are both indexed by patterns in the canonical order;
// the row pattern stands for the sequence of its arch openings.
struct BasisMatrix {
    int n = 0;
    std::vector<LinkPattern> index;
    Matrix<TauPoly> entries;
};

// Product over the arches (i, pi(i)) of U_{mu(a,i)} where
// mu(a,i) counts the a_j lying under the arch minus the arch count inside.
// Requires 1 <= a_1 <= ... <= a_n <= 2n-1 and an even-size pattern.
TauPoly c_entry(const std::vector<int>& a, const LinkPattern& pi);

BasisMatrix build_matrix(int n, int jobs = 1);

// Division-free inverse of a unitriangular matrix. Throws std::runtime_error
// if the input is not lower triangular with unit diagonal.
BasisMatrix invert(const BasisMatrix& C);

struct EActionReport {
    bool ok = true;
    std::string detail;
};

// Checks the four-term expansion of applying e_i to a sequence-indexed
// component: both sides are expanded over the pattern basis and compared
// coefficient by coefficient. a is the full sequence, containing i with
// any multiplicity k >= 0.
EActionReport verify_e_action(int n, int i, const std::vector<int>& a);

}
