#pragma once
#include "qkz/taupoly.hpp"
#include <string>
#include <vector>

namespace qkz {

// Planar pairing of points 1..N on a boundary segment. For odd N exactly one
// point is unmatched (partner 0) and no arch may pass over it.
class LinkPattern {
public:
    LinkPattern() = default;
    // pairing[i-1] is the partner of point i, or 0 for the unmatched point
    explicit LinkPattern(std::vector<int> pairing);

    int size() const { return static_cast<int>(p_.size()); }
    int partner(int i) const { return p_[static_cast<size_t>(i - 1)]; } // 1-based
    int unmatched() const;          // 0 when N is even
    const std::vector<int>& pairing() const { return p_; }

    std::vector<int> openings() const;  // arch openings, increasing
    std::vector<int> closings() const;  // arch closings counted from the right, increasing
    LinkPattern mirror() const;         // i -> N+1-i

    // Dyck heights h_0..h_N; the unmatched point steps up, so odd paths end at 1.
    std::vector<int> heights() const;
    std::vector<int> upsteps() const;   // positions of up-steps (canonical sort key)
    int box_count() const;

    bool has_little_arch(int i) const { return partner(i) == i + 1; }

    friend bool operator==(const LinkPattern& a, const LinkPattern& b) { return a.p_ == b.p_; }
    friend bool operator!=(const LinkPattern& a, const LinkPattern& b) { return !(a == b); }
    friend bool operator<(const LinkPattern& a, const LinkPattern& b) { return a.p_ < b.p_; }

    std::string str() const; // "{(1,4),(2,3)}" with "*" marking the unmatched point

private:
    std::vector<int> p_;
};

// All patterns of size N, sorted by increasing lexicographic order of up-step
// positions (openings for even N, openings plus the unmatched point for odd).
std::vector<LinkPattern> enumerate_patterns(int N);

LinkPattern pattern_from_heights(const std::vector<int>& h);
LinkPattern rainbow_pattern(int N);      // all arches nested, minimal in containment
LinkPattern little_arch_pattern(int N);  // (1,2)(3,4)..., maximal in containment

// e_i rewiring. Returned weight is tau when pattern already had the little
// arch (i,i+1) (case "max"), 1 otherwise.
enum class ECase { min, max, slope };
struct EResult {
    LinkPattern image;
    TauPoly weight;
    ECase kind;
};
EResult apply_e(const LinkPattern& pi, int i);

// Containment partial order: a <= b iff the Dyck path of a lies weakly above
// that of b everywhere (the rainbow is the unique minimum).
bool contains_leq(const LinkPattern& a, const LinkPattern& b);

// Sum over ascent positions i of alpha (h_i(alpha) = h_{i-1}(alpha)+1) of the
// height h_i(pi).
int h_weight(const LinkPattern& pi, const LinkPattern& alpha);

// Odd <-> even bijection: join the unmatched point to a new rightmost point,
// or erase the arch at the rightmost point.
LinkPattern embed_odd(const LinkPattern& odd);
LinkPattern erase_rightmost_arch(const LinkPattern& even);

Int catalan(int n);
Int lp_count(int N); // |LP_N| = c_ceil(N/2)

} // namespace qkz
