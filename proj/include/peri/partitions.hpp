#pragma once

#include <algorithm>
#include <cassert>
#include <set>
#include <vector>

namespace peri {

/// A partition in canonical form: weakly decreasing positive parts, no
/// trailing zeros. The empty vector is the empty partition.
using Partition = std::vector<int>;

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

inline int size_of(const Partition& p) {
    int s = 0;
    for (int x : p) s += x;
    return s;
}

inline Partition transpose(const Partition& p) {
    Partition t;
    if (p.empty()) return t;
    t.assign(p[0], 0);
    for (int part : p)
        for (int j = 0; j < part; ++j) ++t[j];
    return t;
}

/// Extended dominance order: mu is below lambda when mu is strictly larger in
/// size, or of equal size with all partial sums dominated.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
    int smu = size_of(mu), slam = size_of(lambda);
    if (smu != slam) return smu > slam;
    int pm = 0, pl = 0;
    std::size_t k = std::max(mu.size(), lambda.size());
    for (std::size_t i = 0; i < k; ++i) {
        pm += i < mu.size() ? mu[i] : 0;
        pl += i < lambda.size() ? lambda[i] : 0;
        if (pm > pl) return false;
    }
    return true;
}

inline bool dominance_lt(const Partition& mu, const Partition& lambda) {
    return mu != lambda && dominance_leq(mu, lambda);
}

/// Content of the box in row r, column c (1-based).
inline int content(int row, int col) { return col - row; }

/// Residue: the image of the content in the working field.
template <class K>
K residue(int row, int col) {
    return K(content(row, col));
}

/// Sum of the contents of all boxes of lambda.
inline int content_sum(const Partition& lambda) {
    int s = 0;
    for (std::size_t r = 0; r < lambda.size(); ++r)
        for (int c = 1; c <= lambda[r]; ++c) s += content((int)r + 1, c);
    return s;
}

/// Number of boxes with even content minus number with odd content.
inline int gamma_statistic(const Partition& lambda) {
    int g = 0;
    for (std::size_t r = 0; r < lambda.size(); ++r)
        for (int c = 1; c <= lambda[r]; ++c) g += (content((int)r + 1, c) % 2 == 0) ? 1 : -1;
    return g;
}

/// Partitions obtained by removing one box.
inline std::vector<Partition> removable(const Partition& lambda) {
    std::vector<Partition> out;
    for (std::size_t r = 0; r < lambda.size(); ++r) {
        bool corner = (r + 1 == lambda.size()) || lambda[r] > lambda[r + 1];
        if (!corner) continue;
        Partition m = lambda;
        if (--m[r] == 0) m.pop_back();
        out.push_back(std::move(m));
    }
    return out;
}

/// Partitions obtained by adding one box.
inline std::vector<Partition> addable(const Partition& lambda) {
    std::vector<Partition> out;
    for (std::size_t r = 0; r <= lambda.size(); ++r) {
        int cur = r < lambda.size() ? lambda[r] : 0;
        int above = r == 0 ? cur + 1 : lambda[r - 1];
        if (cur + 1 > above) continue;
        Partition m = lambda;
        if (r < m.size())
            ++m[r];
        else
            m.push_back(1);
        out.push_back(std::move(m));
    }
    return out;
}

/// Row/column coordinates (1-based) of the single box of b not in a; requires
/// that b covers a with |b| = |a| + 1.
inline std::pair<int, int> added_box(const Partition& a, const Partition& b) {
    for (std::size_t r = 0; r < b.size(); ++r) {
        int ar = r < a.size() ? a[r] : 0;
        if (b[r] == ar + 1) return {(int)r + 1, b[r]};
        assert(b[r] == ar);
    }
    assert(false && "not a one-box extension");
    return {0, 0};
}

enum class StripKind { Horizontal, Vertical };

/// Partitions obtained from lambda by adding a 2-box horizontal strip (no two
/// boxes in one column) or vertical strip (no two boxes in one row). These are
/// exactly the nu with Littlewood-Richardson coefficient c^nu_{lambda,(2)} = 1,
/// resp. c^nu_{lambda,(1,1)} = 1.
inline std::vector<Partition> pieri_strips(const Partition& lambda, StripKind kind) {
    std::set<Partition> out;
    for (const Partition& mid : addable(lambda)) {
        auto b1 = added_box(lambda, mid);
        for (const Partition& nu : addable(mid)) {
            auto b2 = added_box(mid, nu);
            bool same_col = b1.second == b2.second;
            bool same_row = b1.first == b2.first;
            if (kind == StripKind::Horizontal && same_col) continue;
            if (kind == StripKind::Vertical && same_row) continue;
            out.insert(nu);
        }
    }
    return std::vector<Partition>(out.begin(), out.end());
}

/// True if a's Young diagram is contained in b's.
inline bool contains(const Partition& b, const Partition& a) {
    if (a.size() > b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

namespace detail {
/// Rim 2-hook removals: all partitions obtained by deleting one domino from
/// the rim of lambda.
inline std::vector<Partition> domino_removals(const Partition& lambda) {
    std::vector<Partition> out;
    // horizontal domino at the end of row r
    for (std::size_t r = 0; r < lambda.size(); ++r) {
        int below = r + 1 < lambda.size() ? lambda[r + 1] : 0;
        if (lambda[r] - 2 >= below) {
            Partition m = lambda;
            m[r] -= 2;
            while (!m.empty() && m.back() == 0) m.pop_back();
            if (is_partition(m)) out.push_back(m);
        }
    }
    // vertical domino in rows r, r+1 (same column), needs lambda[r] == lambda[r+1]
    for (std::size_t r = 0; r + 1 < lambda.size(); ++r) {
        int below = r + 2 < lambda.size() ? lambda[r + 2] : 0;
        if (lambda[r] == lambda[r + 1] && lambda[r + 1] - 1 >= below) {
            Partition m = lambda;
            m[r] -= 1;
            m[r + 1] -= 1;
            while (!m.empty() && m.back() == 0) m.pop_back();
            if (is_partition(m)) out.push_back(m);
        }
    }
    return out;
}
} // namespace detail

/// 2-core: iteratively remove rim 2-hooks. The result is a staircase and does
/// not depend on the removal order.
inline Partition two_core(Partition lambda) {
    for (;;) {
        auto rem = detail::domino_removals(lambda);
        if (rem.empty()) return lambda;
        lambda = rem.front();
    }
}

/// All partitions of n, in a fixed deterministic order (reverse lexicographic).
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// Number of standard Young tableaux of shape lambda (hook length formula),
/// used as a counting oracle in tests.
inline long hook_length_count(const Partition& lambda) {
    int n = size_of(lambda);
    Partition t = transpose(lambda);
    long num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    long den = 1;
    for (std::size_t r = 0; r < lambda.size(); ++r)
        for (int c = 1; c <= lambda[r]; ++c) {
            long hook = (lambda[r] - c) + (t[c - 1] - (int)r - 1) + 1;
            den *= hook;
        }
    return num / den;
}

} // namespace peri
