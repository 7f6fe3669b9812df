#include "qkz/psivec.hpp"

#include <stdexcept>
#include <utility>

#include "qkz/basis.hpp"
#include "qkz/ctengine.hpp"
#include "qkz/sumrules.hpp"

namespace qkz {

const TauPoly& PsiVector::at(const LinkPattern& pi) const {
    for (std::size_t i = 0; i < index.size(); ++i)
        if (index[i] == pi) return components[i];
    throw std::invalid_argument("PsiVector::at: pattern not in this vector");
}

namespace {

// the inverse of a lower unitriangular matrix is again lower unitriangular
std::vector<TauPoly> apply_inverse(const BasisMatrix& cinv, const std::vector<TauPoly>& v) {
    std::vector<TauPoly> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        TauPoly acc;
        for (std::size_t j = 0; j <= i; ++j) {
            if (cinv.entries[i][j].is_zero()) continue;
            acc += cinv.entries[i][j] * v[j];
        }
        out[i] = std::move(acc);
    }
    return out;
}

// canonical position of each pattern's mirror image (an involution)
std::vector<std::size_t> mirror_positions(const std::vector<LinkPattern>& pats) {
    std::vector<std::size_t> perm(pats.size());
    for (std::size_t i = 0; i < pats.size(); ++i) {
        const LinkPattern m = pats[i].mirror();
        std::size_t j = 0;
        while (j < pats.size() && pats[j] != m) ++j;
        if (j == pats.size()) throw std::logic_error("mirror image not enumerated");
        perm[i] = j;
    }
    return perm;
}

}  // namespace

// The closing expansion lives in reflected coordinates: the basis row of a
// pattern alpha carries the component of the mirror image of alpha, keyed by
// that component's own closing sequence (= the openings of alpha). Solving
// in row order and then composing with the mirror keeps every component
// matched to the symbolic oracle at z = 1.
PsiVector psi_even(int n, int jobs) {
    if (n < 1) throw std::domain_error("psi_even: n must be positive");
    BasisMatrix c = build_matrix(n, jobs);
    BasisMatrix cinv = invert(c);
    std::vector<ClosingIndex> bs;
    bs.reserve(c.index.size());
    for (const auto& alpha : c.index) bs.emplace_back(alpha.openings());
    std::vector<TauPoly> v = k_batch(bs, false, jobs);
    std::vector<TauPoly> x = apply_inverse(cinv, v);
    const auto perm = mirror_positions(c.index);
    PsiVector out;
    out.N = 2 * n;
    out.index = std::move(c.index);
    out.components.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.components[i] = std::move(x[perm[i]]);
    out.normalization = "rainbow component tau^{n(n-1)/2}";
    return out;
}

PsiVector psi_odd(int n, int jobs) {
    if (n < 1) throw std::domain_error("psi_odd: n must be positive");
    BasisMatrix c = build_matrix(n + 1, jobs);
    BasisMatrix cinv = invert(c);
    // erasing the rightmost arch keeps the up-step positions, so the odd
    // patterns inherit the canonical order of their embeddings
    std::vector<LinkPattern> odd_index;
    odd_index.reserve(c.index.size());
    for (const auto& alpha : c.index) odd_index.push_back(erase_rightmost_arch(alpha));
    // row alpha carries the odd component of erase(mirror(alpha)), keyed by
    // that component's closing sequence, as in the even case
    const auto perm = mirror_positions(c.index);
    std::vector<ClosingIndex> bs;
    bs.reserve(c.index.size());
    for (std::size_t j = 0; j < c.index.size(); ++j)
        bs.emplace_back(odd_index[perm[j]].closings());
    std::vector<TauPoly> v = k_batch(bs, true, jobs);
    std::vector<TauPoly> x = apply_inverse(cinv, v);
    PsiVector out;
    out.N = 2 * n + 1;
    out.index = std::move(odd_index);
    out.components.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out.components[i] = std::move(x[perm[i]]);
    out.normalization = "inherited from the rightmost-point embedding";
    return out;
}

namespace {

void record(PsiReport& rep, const std::string& what, const LinkPattern& pi,
            const std::string& detail) {
    rep.failures.push_back({what + " at " + pi.str(), false, detail});
}

std::string int_str(const Int& x) { return x.get_str(); }

}  // namespace

PsiReport check_properties(const PsiVector& v) {
    bool odd = v.N % 2 != 0;
    int n = v.N / 2;
    PsiReport rep;
    for (std::size_t i = 0; i < v.index.size(); ++i) {
        const LinkPattern& pi = v.index[i];
        const TauPoly& psi = v.components[i];
        rep.sum += psi;

        ClosingIndex b(pi.closings());
        TauLimits lim = odd ? tau_limits_odd(b) : tau_limits_even(b);
        if (!odd && pi.box_count() != lim.valuation)
            record(rep, "box count vs predicted valuation", pi,
                   std::to_string(pi.box_count()) + " vs " + std::to_string(lim.valuation));
        if (lim.valuation_asserted) {
            if (psi.valuation() != lim.valuation)
                record(rep, "valuation", pi,
                       std::to_string(psi.valuation()) + " vs " + std::to_string(lim.valuation));
            if (psi.lowest() != lim.low)
                record(rep, "lowest coefficient", pi,
                       int_str(psi.lowest()) + " vs " + int_str(lim.low));
        }
        if (psi.degree() != lim.degree)
            record(rep, "degree", pi,
                   std::to_string(psi.degree()) + " vs " + std::to_string(lim.degree));
        if (psi.leading() != lim.top)
            record(rep, "top coefficient", pi, int_str(psi.leading()) + " vs " + int_str(lim.top));

        for (const Int& coeff : psi.coeffs())
            if (coeff < 0 && rep.nonnegative) {
                rep.nonnegative = false;
                rep.nonnegative_detail = "negative coefficient in " + pi.str();
            }
    }
    TauPoly expect = gen_direct(n, odd ? Parity::Odd : Parity::Even).at_t_one();
    if (rep.sum != expect)
        rep.failures.push_back({"component sum vs generating function at t=1", false,
                                rep.sum.str() + " vs " + expect.str()});
    return rep;
}

}
