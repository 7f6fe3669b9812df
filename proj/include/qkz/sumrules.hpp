#pragma once
#include <map>
#include <string>

#include "qkz/bipoly.hpp"

namespace qkz {

enum class Parity { Even, Odd };

// Both routes to the component generating function plus its special values.
// `determinant` is the raw closed form; `convention_map` records the t
// substitution under which it reproduces `direct`.
struct SumRuleReport {
    int n = 0;
    Parity parity = Parity::Even;
    BiPoly direct;
    BiPoly determinant;
    std::string convention_map;
    std::map<std::string, TauPoly> specializations;
};

// Sum of t^{sum eps} times the component at indices (2i-1-eps_i) resp.
// (2i-eps_i), eps ranging over {0,1}^n; a zero index contributes nothing.
BiPoly gen_direct(int n, Parity parity);

// Closed (n-1)x(n-1) determinant form of the even generating function.
// Agrees with gen_direct(n, Even) identically.
BiPoly gen_det_even(int n);

// Closed n x n determinant for the odd case. The raw determinant carries the
// complementary t-weighting; the routine finds which of the two candidate
// substitutions (identity or t^j -> t^{n-j}) reconciles it with the direct
// route, stores its name in *convention, and throws std::runtime_error if
// neither does.
BiPoly gen_det_odd(int n, std::string* convention = nullptr);

// Determinant form of the coefficient of t^{n-1} in the even generating
// function (the component whose arches all sit one step off the boundary).
TauPoly rotated_component_det(int n);

// Assembles both routes and the labeled special values for one parity.
SumRuleReport sum_rule_report(int n, Parity parity);

}
