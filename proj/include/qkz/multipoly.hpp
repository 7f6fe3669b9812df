#pragma once
#include "qkz/errors.hpp"
#include "qkz/ring.hpp"
#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

namespace qkz {

// Sparse multivariate polynomial over an exact coefficient ring C.
// Exponents are plain ints and may go negative (Laurent directions are legal);
// optional per-variable caps silently discard any term whose exponent exceeds
// them, which turns multiplication into arithmetic in the truncated ring.
template <class C>
class MultiPoly {
public:
    using Exps = std::vector<int>;

    explicit MultiPoly(int nvars, std::vector<int> caps = {})
        : nvars_(nvars), caps_(std::move(caps)) {
        if (!caps_.empty() && static_cast<int>(caps_.size()) != nvars_)
            throw std::invalid_argument("MultiPoly: caps size mismatch");
    }

    static MultiPoly constant(int nvars, const C& c, std::vector<int> caps = {}) {
        MultiPoly p(nvars, std::move(caps));
        p.add_term(Exps(static_cast<size_t>(nvars), 0), c);
        return p;
    }

    int nvars() const { return nvars_; }
    const std::vector<int>& caps() const { return caps_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Exps, C>& terms() const { return terms_; }

    bool in_caps(const Exps& e) const {
        if (caps_.empty()) return true;
        for (int v = 0; v < nvars_; ++v)
            if (e[static_cast<size_t>(v)] > caps_[static_cast<size_t>(v)]) return false;
        return true;
    }

    void add_term(Exps e, const C& c) {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("MultiPoly: exponent arity mismatch");
        if (ring_is_zero(c) || !in_caps(e)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (ring_is_zero(it->second)) terms_.erase(it);
        }
    }

    C coeff(const Exps& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? C() : it->second;
    }

    int total_degree() const { // -1 for zero
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
        return d;
    }

    int var_degree(int v) const { // max exponent of variable v, 0 for zero poly
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<size_t>(v)]);
        return d;
    }

    bool all_exponents_nonneg() const {
        for (const auto& [e, c] : terms_)
            for (int x : e)
                if (x < 0) return false;
        return true;
    }

    MultiPoly operator-() const {
        MultiPoly r(*this);
        for (auto& [e, c] : r.terms_) c = negate(c);
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        check_compat(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        check_compat(o);
        for (const auto& [e, c] : o.terms_) add_term(e, negate(c));
        return *this;
    }
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { a += b; return a; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { a -= b; return a; }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_compat(b);
        MultiPoly r(a.nvars_, a.caps_);
        Exps e(static_cast<size_t>(a.nvars_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (int v = 0; v < a.nvars_; ++v)
                    e[static_cast<size_t>(v)] = ea[static_cast<size_t>(v)] + eb[static_cast<size_t>(v)];
                if (!r.in_caps(e)) continue;
                r.add_term(e, ca * cb);
            }
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

    MultiPoly& scale(const C& c) {
        if (ring_is_zero(c)) { terms_.clear(); return *this; }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second = it->second * c;
            if (ring_is_zero(it->second)) it = terms_.erase(it);
            else ++it;
        }
        return *this;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    C eval_all_ones() const {
        C acc{};
        for (const auto& [e, c] : terms_) acc += c;
        return acc;
    }

    MultiPoly without_caps() const {
        MultiPoly r(nvars_);
        for (const auto& [e, c] : terms_) r.add_term(e, c);
        return r;
    }

    std::string str() const;

private:
    int nvars_;
    std::vector<int> caps_;
    std::map<Exps, C> terms_;

    static C negate(const C& c) { return C() - c; }
    void check_compat(const MultiPoly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch");
    }
};

template <class C>
std::string MultiPoly<C>::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(";
        if constexpr (std::is_same_v<C, Int>) os << c.get_str();
        else os << c.str();
        os << ")";
        for (size_t v = 0; v < e.size(); ++v)
            if (e[v] != 0) os << "*x" << v << "^" << e[v];
    }
    return os.str();
}

// Linear substitution helpers.

template <class C>
MultiPoly<C> set_var_zero(const MultiPoly<C>& p, int v) {
    MultiPoly<C> r(p.nvars(), p.caps());
    for (const auto& [e, c] : p.terms())
        if (e[static_cast<size_t>(v)] == 0) r.add_term(e, c);
    return r;
}

template <class C>
MultiPoly<C> swap_vars(const MultiPoly<C>& p, int i, int j) {
    MultiPoly<C> r(p.nvars(), p.caps());
    for (const auto& [e, c] : p.terms()) {
        auto e2 = e;
        std::swap(e2[static_cast<size_t>(i)], e2[static_cast<size_t>(j)]);
        r.add_term(std::move(e2), c);
    }
    return r;
}

// result(x_{perm[0]}, ..., x_{perm[n-1]}) = p(x_0, ..., x_{n-1}); i.e. the
// exponent of old variable v lands on new variable perm[v].
template <class C>
MultiPoly<C> permute_vars(const MultiPoly<C>& p, const std::vector<int>& perm) {
    MultiPoly<C> r(p.nvars(), p.caps());
    for (const auto& [e, c] : p.terms()) {
        typename MultiPoly<C>::Exps e2(e.size());
        for (size_t v = 0; v < e.size(); ++v) e2[static_cast<size_t>(perm[v])] = e[v];
        r.add_term(std::move(e2), c);
    }
    return r;
}

// Signed sum over all permutations of the listed variable positions.
template <class C>
MultiPoly<C> antisymmetrize(const MultiPoly<C>& p, const std::vector<int>& vars) {
    std::vector<int> order(vars.size());
    std::iota(order.begin(), order.end(), 0);
    MultiPoly<C> acc(p.nvars(), p.caps());
    std::vector<int> perm(static_cast<size_t>(p.nvars()));
    do {
        // parity by inversion count; fine at the sizes we ever antisymmetrize
        int inv = 0;
        for (size_t i = 0; i < order.size(); ++i)
            for (size_t j = i + 1; j < order.size(); ++j)
                if (order[i] > order[j]) ++inv;
        std::iota(perm.begin(), perm.end(), 0);
        for (size_t i = 0; i < vars.size(); ++i)
            perm[static_cast<size_t>(vars[i])] = vars[static_cast<size_t>(order[i])];
        MultiPoly<C> img = permute_vars(p, perm);
        if (inv % 2) acc -= img;
        else acc += img;
    } while (std::next_permutation(order.begin(), order.end()));
    return acc;
}

// Exact quotient with respect to lexicographic leading terms. Requires true
// polynomials (no caps, no negative exponents) and throws if anything is left.
template <class C>
MultiPoly<C> poly_exact_div(const MultiPoly<C>& num, const MultiPoly<C>& den) {
    if (!num.caps().empty() || !den.caps().empty())
        throw std::invalid_argument("poly_exact_div: capped operands");
    if (den.is_zero()) throw ExactDivisionError("MultiPoly division by zero", num.str());
    if (!num.all_exponents_nonneg() || !den.all_exponents_nonneg())
        throw std::invalid_argument("poly_exact_div: negative exponents");
    MultiPoly<C> rem = num, quot(num.nvars());
    const auto& dlead = *den.terms().rbegin();
    typename MultiPoly<C>::Exps qe(static_cast<size_t>(num.nvars()));
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        for (size_t v = 0; v < qe.size(); ++v) {
            qe[v] = rlead.first[v] - dlead.first[v];
            if (qe[v] < 0)
                throw ExactDivisionError("MultiPoly division not exact", rem.str());
        }
        C qc = divexact(rlead.second, dlead.second);
        MultiPoly<C> mono(num.nvars());
        mono.add_term(qe, qc);
        quot += mono;
        rem -= mono * den;
    }
    return quot;
}

} // namespace qkz
