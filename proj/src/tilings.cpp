#include "qkz/tilings.hpp"

#include <functional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qkz {

namespace {

// Monotone triangles over [1, size]: row k has k strictly increasing
// entries, and the row below brackets it, lower[j] <= row[j] <= lower[j+1].
// Row k records the 1-positions of the k-th partial sum of matrix rows, so
// triangles with bottom row (1..size) are exactly the alternating sign
// matrices, and column reversal reflects every row set p -> size+1-p.
bool reflective(const std::vector<int>& row, int size) {
    int k = static_cast<int>(row.size());
    for (int j = 0; j < k; ++j)
        if (row[j] + row[k - 1 - j] != size + 1) return false;
    return true;
}

struct TriangleCounts {
    Int total = 0;
    Int reflective_total = 0;
};

void climb(const std::vector<int>& row, int size, bool sym, TriangleCounts& out) {
    if (row.size() == 1) {
        out.total += 1;
        if (sym) out.reflective_total += 1;
        return;
    }
    int k = static_cast<int>(row.size()) - 1;
    std::vector<int> next(k);
    std::function<void(int)> pick = [&](int j) {
        if (j == k) {
            climb(next, size, sym && reflective(next, size), out);
            return;
        }
        int lo = j == 0 ? row[0] : std::max(row[j], next[j - 1] + 1);
        for (int v = lo; v <= row[j + 1]; ++v) {
            next[j] = v;
            pick(j + 1);
        }
    };
    pick(0);
}

TriangleCounts enumerate_triangles(int size) {
    std::vector<int> bottom(size);
    for (int j = 0; j < size; ++j) bottom[j] = j + 1;
    TriangleCounts out;
    climb(bottom, size, true, out);
    return out;
}

using Point = std::pair<int, int>;

void extend_paths(Point cur, Point end, std::vector<Point>& acc,
                  std::vector<std::vector<Point>>& out) {
    if (cur == end) {
        out.push_back(acc);
        return;
    }
    if (cur.first < end.first) {
        acc.emplace_back(cur.first + 1, cur.second);
        extend_paths(acc.back(), end, acc, out);
        acc.pop_back();
    }
    if (cur.second < end.second) {
        acc.emplace_back(cur.first, cur.second + 1);
        extend_paths(acc.back(), end, acc, out);
        acc.pop_back();
    }
}

}  // namespace

Int asm_count(int size) {
    if (size < 1 || size > 7) throw std::domain_error("asm_count: size must be in 1..7");
    return enumerate_triangles(size).total;
}

Int vsasm_count(int size) {
    if (size < 1 || size > 7) throw std::domain_error("vsasm_count: size must be in 1..7");
    if (size % 2 == 0) throw std::domain_error("vsasm_count: size must be odd");
    return enumerate_triangles(size).reflective_total;
}

Int count_nilp(const ClosingIndex& b) {
    if (!b.canonical_even()) throw std::domain_error("count_nilp: closings must be canonical even");
    if (b.n > 4) throw std::domain_error("count_nilp: n must be <= 4");
    std::vector<std::vector<std::vector<Point>>> routes(b.n);
    for (int m = 1; m <= b.n; ++m) {
        Point start{1 - 2 * m, m};
        Point end{-b.b[m - 1], b.b[m - 1]};
        std::vector<Point> acc{start};
        extend_paths(start, end, acc, routes[m - 1]);
        if (routes[m - 1].empty()) return 0;
    }
    Int count = 0;
    std::set<Point> used;
    std::function<void(int)> place = [&](int m) {
        if (m == b.n) {
            count += 1;
            return;
        }
        for (const auto& path : routes[m]) {
            bool clash = false;
            for (const auto& p : path)
                if (used.count(p)) { clash = true; break; }
            if (clash) continue;
            used.insert(path.begin(), path.end());
            place(m + 1);
            for (const auto& p : path) used.erase(p);
        }
    };
    place(0);
    return count;
}

TauPoly t_poly(int n, int variant) {
    if (n < 1 || n > 5) throw std::domain_error("t_poly: n must be in 1..5");
    if (variant != 0 && variant != 1) throw std::domain_error("t_poly: variant must be 0 or 1");
    std::vector<Point> cells;
    for (int i = 1; i < n; ++i)
        for (int j = 1; i + j <= n; ++j) cells.emplace_back(i, j);
    std::vector<Int> coeff(cells.size() + 1, Int(0));
    int vals[6][6] = {};
    std::function<void(std::size_t, int)> fill = [&](std::size_t k, int weight) {
        if (k == cells.size()) {
            coeff[weight] += 1;
            return;
        }
        auto [i, j] = cells[k];
        // row-major order: the left and upper neighbors are already placed
        int cap = j == 1 ? (variant == 1 ? n - i + 1 : n - i) : vals[i][j - 1];
        if (i > 1 && vals[i - 1][j] < cap) cap = vals[i - 1][j];
        for (int v = 0; v <= cap; ++v) {
            vals[i][j] = v;
            fill(k + 1, weight + (v <= j - 1 ? 1 : 0));
        }
    };
    fill(0, 0);
    return TauPoly(std::move(coeff));
}

}
