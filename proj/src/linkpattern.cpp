#include "qkz/linkpattern.hpp"
#include <algorithm>
#include <stdexcept>

namespace qkz {

LinkPattern::LinkPattern(std::vector<int> pairing) : p_(std::move(pairing)) {
    int N = size();
    int free_count = 0;
    for (int i = 1; i <= N; ++i) {
        int j = partner(i);
        if (j == 0) {
            ++free_count;
            continue;
        }
        if (j < 1 || j > N || j == i || partner(j) != i)
            throw std::invalid_argument("LinkPattern: not an involution");
    }
    if (free_count != N % 2)
        throw std::invalid_argument("LinkPattern: wrong number of unmatched points");
    // planarity, and the unmatched point may not sit under an arch
    int u = unmatched();
    for (int i = 1; i <= N; ++i) {
        int j = partner(i);
        if (j <= i) continue;
        if (u && i < u && u < j)
            throw std::invalid_argument("LinkPattern: unmatched point under an arch");
        for (int k = i + 1; k < j; ++k) {
            int l = partner(k);
            if (l != 0 && (l < i || l > j))
                throw std::invalid_argument("LinkPattern: crossing arches");
        }
    }
}

int LinkPattern::unmatched() const {
    for (int i = 1; i <= size(); ++i)
        if (partner(i) == 0) return i;
    return 0;
}

std::vector<int> LinkPattern::openings() const {
    std::vector<int> a;
    for (int i = 1; i <= size(); ++i)
        if (partner(i) > i) a.push_back(i);
    return a;
}

std::vector<int> LinkPattern::closings() const {
    std::vector<int> b;
    int N = size();
    for (int i = 1; i <= N; ++i)
        if (partner(i) != 0 && partner(i) < i) b.push_back(N + 1 - i);
    std::sort(b.begin(), b.end());
    return b;
}

LinkPattern LinkPattern::mirror() const {
    int N = size();
    std::vector<int> q(static_cast<size_t>(N), 0);
    for (int i = 1; i <= N; ++i) {
        int j = partner(i);
        q[static_cast<size_t>(N - i)] = (j == 0) ? 0 : N + 1 - j;
    }
    return LinkPattern(std::move(q));
}

std::vector<int> LinkPattern::heights() const {
    int N = size();
    std::vector<int> h(static_cast<size_t>(N) + 1, 0);
    for (int i = 1; i <= N; ++i) {
        int j = partner(i);
        int step = (j == 0 || j > i) ? 1 : -1;
        h[static_cast<size_t>(i)] = h[static_cast<size_t>(i - 1)] + step;
    }
    return h;
}

std::vector<int> LinkPattern::upsteps() const {
    std::vector<int> u;
    for (int i = 1; i <= size(); ++i) {
        int j = partner(i);
        if (j == 0 || j > i) u.push_back(i);
    }
    return u;
}

int LinkPattern::box_count() const {
    // area between the path and the minimal zigzag, two height units per box
    auto h = heights();
    int N = size();
    int acc = 0;
    for (int i = 0; i <= N; ++i) acc += h[static_cast<size_t>(i)] - (i % 2);
    return acc / 2;
}

std::string LinkPattern::str() const {
    std::string s = "{";
    bool first = true;
    for (int i = 1; i <= size(); ++i) {
        int j = partner(i);
        if (j > i) {
            if (!first) s += ",";
            first = false;
            s += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        } else if (j == 0) {
            if (!first) s += ",";
            first = false;
            s += std::to_string(i) + "*";
        }
    }
    return s + "}";
}

namespace {

// ballot sequences: nonnegative walks with +-1 steps from 0 to N%2. For odd N
// the single unpopped up-step is the unmatched point; the stack discipline by
// itself guarantees no arch passes over it.
void gen_walks(int N, std::vector<int>& h, int i, std::vector<LinkPattern>& out) {
    if (i == N) {
        if (h[static_cast<size_t>(N)] == N % 2) out.push_back(pattern_from_heights(h));
        return;
    }
    int cur = h[static_cast<size_t>(i)];
    for (int step : {+1, -1}) {
        int nxt = cur + step;
        if (nxt < 0) continue;
        if (nxt - (N % 2) > N - (i + 1)) continue; // cannot come back down in time
        h[static_cast<size_t>(i + 1)] = nxt;
        gen_walks(N, h, i + 1, out);
    }
}

} // namespace

std::vector<LinkPattern> enumerate_patterns(int N) {
    if (N < 1) throw std::domain_error("enumerate_patterns: size must be positive");
    std::vector<LinkPattern> out;
    std::vector<int> h(static_cast<size_t>(N) + 1, 0);
    gen_walks(N, h, 0, out);
    std::sort(out.begin(), out.end(), [](const LinkPattern& a, const LinkPattern& b) {
        return a.upsteps() < b.upsteps();
    });
    return out;
}

LinkPattern pattern_from_heights(const std::vector<int>& h) {
    int N = static_cast<int>(h.size()) - 1;
    std::vector<int> p(static_cast<size_t>(N), 0);
    std::vector<int> stack;
    for (int i = 1; i <= N; ++i) {
        int d = h[static_cast<size_t>(i)] - h[static_cast<size_t>(i - 1)];
        if (d == 1) {
            stack.push_back(i);
        } else if (d == -1) {
            if (stack.empty()) throw std::invalid_argument("pattern_from_heights: below zero");
            int j = stack.back();
            stack.pop_back();
            p[static_cast<size_t>(j - 1)] = i;
            p[static_cast<size_t>(i - 1)] = j;
        } else {
            throw std::invalid_argument("pattern_from_heights: bad step");
        }
    }
    if (stack.size() > 1) throw std::invalid_argument("pattern_from_heights: not balanced");
    return LinkPattern(std::move(p));
}

LinkPattern rainbow_pattern(int N) {
    std::vector<int> p(static_cast<size_t>(N), 0);
    if (N % 2) {
        // point 1 unmatched (an unmatched point under the nest would be
        // illegal), arches (i, N+2-i) nested around the middle
        for (int i = 2; 2 * i <= N + 1; ++i) {
            p[static_cast<size_t>(i - 1)] = N + 2 - i;
            p[static_cast<size_t>(N + 1 - i)] = i;
        }
        return LinkPattern(std::move(p));
    }
    for (int i = 1; 2 * i <= N; ++i) {
        p[static_cast<size_t>(i - 1)] = N + 1 - i;
        p[static_cast<size_t>(N - i)] = i;
    }
    return LinkPattern(std::move(p));
}

LinkPattern little_arch_pattern(int N) {
    std::vector<int> p(static_cast<size_t>(N), 0);
    if (N % 2 == 0) {
        for (int i = 1; i < N; i += 2) {
            p[static_cast<size_t>(i - 1)] = i + 1;
            p[static_cast<size_t>(i)] = i;
        }
    } else {
        for (int i = 1; i + 1 < N; i += 2) {
            p[static_cast<size_t>(i - 1)] = i + 1;
            p[static_cast<size_t>(i)] = i;
        }
        // last point unmatched
    }
    return LinkPattern(std::move(p));
}

EResult apply_e(const LinkPattern& pi, int i) {
    int N = pi.size();
    if (i < 1 || i >= N) throw std::domain_error("apply_e: position out of range");
    auto h = pi.heights();
    ECase kind;
    if (pi.partner(i) == i + 1) {
        kind = ECase::max;
        return {pi, TauPoly::tau(), kind};
    }
    bool up_i = h[static_cast<size_t>(i)] > h[static_cast<size_t>(i - 1)];
    bool up_next = h[static_cast<size_t>(i + 1)] > h[static_cast<size_t>(i)];
    if (!up_i && up_next) kind = ECase::min;
    else kind = ECase::slope;
    std::vector<int> p = pi.pairing();
    int j = pi.partner(i), k = pi.partner(i + 1);
    p[static_cast<size_t>(i - 1)] = i + 1;
    p[static_cast<size_t>(i)] = i;
    if (j == 0) {
        p[static_cast<size_t>(k - 1)] = 0;
    } else if (k == 0) {
        p[static_cast<size_t>(j - 1)] = 0;
    } else {
        p[static_cast<size_t>(j - 1)] = k;
        p[static_cast<size_t>(k - 1)] = j;
    }
    return {LinkPattern(std::move(p)), TauPoly(1), kind};
}

bool contains_leq(const LinkPattern& a, const LinkPattern& b) {
    auto ha = a.heights(), hb = b.heights();
    if (ha.size() != hb.size()) throw std::invalid_argument("contains_leq: size mismatch");
    for (size_t i = 0; i < ha.size(); ++i)
        if (ha[i] < hb[i]) return false;
    return true;
}

int h_weight(const LinkPattern& pi, const LinkPattern& alpha) {
    auto hp = pi.heights(), ha = alpha.heights();
    if (hp.size() != ha.size()) throw std::invalid_argument("h_weight: size mismatch");
    int acc = 0;
    for (size_t i = 1; i < ha.size(); ++i)
        if (ha[i] == ha[i - 1] + 1) acc += hp[i];
    return acc;
}

LinkPattern embed_odd(const LinkPattern& odd) {
    int N = odd.size();
    if (N % 2 == 0) throw std::domain_error("embed_odd: even pattern");
    int u = odd.unmatched();
    std::vector<int> p = odd.pairing();
    p.push_back(u);
    p[static_cast<size_t>(u - 1)] = N + 1;
    return LinkPattern(std::move(p));
}

LinkPattern erase_rightmost_arch(const LinkPattern& even) {
    int N = even.size();
    if (N % 2) throw std::domain_error("erase_rightmost_arch: odd pattern");
    int u = even.partner(N);
    std::vector<int> p = even.pairing();
    p.pop_back();
    p[static_cast<size_t>(u - 1)] = 0;
    return LinkPattern(std::move(p));
}

Int catalan(int n) {
    if (n < 0) throw std::domain_error("catalan: negative");
    return divexact_int(binom(2L * n, n), Int(n + 1), "catalan");
}

Int lp_count(int N) { return catalan((N + 1) / 2); }

} // namespace qkz
