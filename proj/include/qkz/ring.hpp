#pragma once
#include "qkz/bigint.hpp"
#include "qkz/bipoly.hpp"
#include "qkz/laurent.hpp"
#include "qkz/taupoly.hpp"

namespace qkz {

inline bool ring_is_zero(const Int& x) { return x == 0; }
inline bool ring_is_zero(const TauPoly& x) { return x.is_zero(); }
inline bool ring_is_zero(const LaurentScalar& x) { return x.is_zero(); }
inline bool ring_is_zero(const BiPoly& x) { return x.is_zero(); }

} // namespace qkz
