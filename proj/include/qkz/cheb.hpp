#pragma once
#include "qkz/taupoly.hpp"

namespace qkz {

// Chebyshev-like ladder: U_{-1} = 0, U_0 = 1, U_{k+1} = -tau*U_k - U_{k-1}.
// Memoized and safe to call from several threads. k < -1 is a domain error.
const TauPoly& cheb_u(int k);

// Recurrence-consistent extension to all integers: U_{-k} = -U_{k-2}.
TauPoly cheb_u_ext(int k);

} // namespace qkz
