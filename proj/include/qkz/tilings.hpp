#pragma once
#include "qkz/bigint.hpp"
#include "qkz/ctengine.hpp"
#include "qkz/taupoly.hpp"

namespace qkz {

// Alternating sign matrices of the given size, counted by exhaustive
// monotone-triangle generation. Resource guard: size <= 7.
Int asm_count(int size);

// Those invariant under column reversal. Size must be odd (even sizes
// admit none) and <= 7.
Int vsasm_count(int size);

// Non-intersecting east/north path families: path m runs from (1-2m, m)
// to (-b_m, b_m), and tuples sharing any lattice point are discarded.
// Exhaustive count; b must be canonical even with n <= 4.
Int count_nilp(const ClosingIndex& b);

// Generating polynomial of triangular arrays a_{ij} >= 0 (i, j >= 1,
// i + j <= n) with weakly decreasing rows and columns, the first column
// bounded by n-i+1 (variant 1) or n-i (variant 0). Each part with
// a_{ij} <= j-1 contributes one power of the weight variable.
TauPoly t_poly(int n, int variant);

}
