#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "peri/linalg.hpp"
#include "peri/partitions.hpp"
#include "peri/scalars.hpp"

namespace peri {

/// Standard tableau stored by rows; entries 1..n increase along rows and
/// columns.
struct StandardTableau {
    std::vector<std::vector<int>> rows;

    int size() const {
        int s = 0;
        for (auto& r : rows) s += (int)r.size();
        return s;
    }
    Partition shape() const {
        Partition p;
        for (auto& r : rows) p.push_back((int)r.size());
        return p;
    }
    std::pair<int, int> box_of(int entry) const { // 0-based (row, col)
        for (int r = 0; r < (int)rows.size(); ++r)
            for (int c = 0; c < (int)rows[r].size(); ++c)
                if (rows[r][c] == entry) return {r, c};
        throw std::runtime_error("entry not in tableau");
    }
    int content_of(int entry) const {
        auto [r, c] = box_of(entry);
        return c - r;
    }
    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.rows == b.rows;
    }
    friend bool operator<(const StandardTableau& a, const StandardTableau& b) {
        return a.rows < b.rows;
    }
};

/// All standard tableaux of the given shape, in a fixed deterministic order
/// (recursive box insertion, earlier rows first).
inline std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
    std::vector<StandardTableau> out;
    int n = size_of(shape);
    StandardTableau cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t r = 0; r <= cur.rows.size(); ++r) {
            int len = r < cur.rows.size() ? (int)cur.rows[r].size() : 0;
            int above = r == 0 ? len + 1 : (int)cur.rows[r - 1].size();
            if (len + 1 > above) continue;
            if (r >= shape.size() || len + 1 > shape[r]) continue;
            if (r < cur.rows.size())
                cur.rows[r].push_back(next);
            else
                cur.rows.push_back({next});
            self(self, next + 1);
            if (cur.rows[r].size() == 1)
                cur.rows.pop_back();
            else
                cur.rows[r].pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

/// Specht module in Young's seminormal form: the Jucys-Murphy elements of the
/// symmetric group act diagonally with box contents as eigenvalues, and the
/// invariant bilinear form is diagonal.
template <class K>
struct SpechtModule {
    Partition shape;
    int degree = 0;
    std::vector<StandardTableau> tableaux;
    std::map<StandardTableau, int> index;
    std::vector<Matrix<K>> gens; // gens[k-1] = action of s_k, k = 1..degree-1
    std::vector<K> form_diag;    // diagonal invariant form

    int dim() const { return (int)tableaux.size(); }

    Matrix<K> form_matrix() const {
        Matrix<K> f(dim(), dim());
        for (int i = 0; i < dim(); ++i) f(i, i) = form_diag[i];
        return f;
    }

    /// Action matrix of an arbitrary permutation (0-based images, bottom
    /// position q maps to w[q]).
    Matrix<K> permutation_action(std::vector<int> w) const {
        Matrix<K> out = Matrix<K>::identity(dim());
        std::vector<int> word;
        for (;;) {
            int k = -1;
            for (int q = 0; q + 1 < (int)w.size(); ++q)
                if (w[q] > w[q + 1]) {
                    k = q;
                    break;
                }
            if (k < 0) break;
            std::swap(w[k], w[k + 1]);
            word.push_back(k + 1); // 1-based generator index
        }
        for (auto it = word.rbegin(); it != word.rend(); ++it) out = out * gens[*it - 1];
        return out;
    }
};

template <class K>
SpechtModule<K> build_specht(const Partition& shape) {
    SpechtModule<K> mod;
    mod.shape = shape;
    mod.degree = size_of(shape);
    mod.tableaux = standard_tableaux(shape);
    for (int i = 0; i < (int)mod.tableaux.size(); ++i) mod.index[mod.tableaux[i]] = i;
    int dim = mod.dim();
    int n = mod.degree;

    auto swap_entries = [](const StandardTableau& t, int k) {
        StandardTableau u = t;
        auto [r1, c1] = t.box_of(k);
        auto [r2, c2] = t.box_of(k + 1);
        u.rows[r1][c1] = k + 1;
        u.rows[r2][c2] = k;
        return u;
    };

    for (int k = 1; k < n; ++k) {
        Matrix<K> m(dim, dim);
        for (int t = 0; t < dim; ++t) {
            const StandardTableau& tab = mod.tableaux[t];
            auto [r1, c1] = tab.box_of(k);
            auto [r2, c2] = tab.box_of(k + 1);
            if (r1 == r2) {
                m(t, t) = K(1);
            } else if (c1 == c2) {
                m(t, t) = K(-1);
            } else {
                int rho = tab.content_of(k + 1) - tab.content_of(k);
                StandardTableau swapped = swap_entries(tab, k);
                int u = mod.index.at(swapped);
                K inv_rho = K(1) / K(rho);
                m(t, t) = inv_rho;
                if (rho > 0) {
                    m(u, t) = K(1);
                } else {
                    m(u, t) = K(1) - inv_rho * inv_rho;
                }
            }
        }
        mod.gens.push_back(std::move(m));
    }

    // invariant diagonal form: across a seminormal 2x2 block the weights obey
    // g(t_-) = g(t_+)(1 - 1/rho^2); propagate from the first tableau
    mod.form_diag.assign(dim, K(0));
    std::vector<bool> done(dim, false);
    mod.form_diag[0] = K(1);
    done[0] = true;
    for (bool progress = true; progress;) {
        progress = false;
        for (int t = 0; t < dim; ++t) {
            if (!done[t]) continue;
            const StandardTableau& tab = mod.tableaux[t];
            for (int k = 1; k < n; ++k) {
                auto [r1, c1] = tab.box_of(k);
                auto [r2, c2] = tab.box_of(k + 1);
                if (r1 == r2 || c1 == c2) continue;
                int rho = tab.content_of(k + 1) - tab.content_of(k);
                int u = mod.index.at(swap_entries(tab, k));
                K factor = K(1) - K(1) / (K(rho) * K(rho));
                K val = mod.form_diag[t];
                if (rho > 0)
                    val *= factor;
                else
                    val /= factor;
                if (!done[u]) {
                    mod.form_diag[u] = val;
                    done[u] = true;
                    progress = true;
                } else if (mod.form_diag[u] != val) {
                    throw std::runtime_error("inconsistent seminormal form weights");
                }
            }
        }
    }
    for (int t = 0; t < dim; ++t)
        if (!done[t]) throw std::runtime_error("seminormal weight graph not connected");
    return mod;
}

/// Matrix of the symmetric-group Jucys-Murphy element x_i^0 = sum_{j<i} (j,i).
template <class K>
Matrix<K> jm0_action(const SpechtModule<K>& mod, int i) {
    if (i < 2 || i > mod.degree) throw std::runtime_error("jm0_action: index out of range");
    Matrix<K> out(mod.dim(), mod.dim());
    for (int j = 1; j < i; ++j) {
        std::vector<int> w(mod.degree);
        for (int q = 0; q < mod.degree; ++q) w[q] = q;
        std::swap(w[j - 1], w[i - 1]);
        out = out + mod.permutation_action(w);
    }
    return out;
}

/// Restriction sections: for each removable box, the span of the tableaux
/// with the largest entry in that box is a submodule for the smaller
/// symmetric group, isomorphic to the Specht module of the reduced shape.
/// Sections are listed in dominance order, most dominant shape first.
template <class K>
struct BranchingSection {
    Partition shape;               // mu in R(lambda)
    std::vector<int> member_index; // indices into the parent basis
    std::vector<int> reduced_index; // matching indices into SYT(mu)
};

template <class K>
std::vector<BranchingSection<K>> branching_sections(const SpechtModule<K>& mod,
                                                    const SpechtModule<K>* reduced_hint = nullptr) {
    (void)reduced_hint;
    std::vector<BranchingSection<K>> out;
    std::vector<Partition> mus = removable(mod.shape);
    std::sort(mus.begin(), mus.end(), [](const Partition& a, const Partition& b) {
        if (a == b) return false;
        if (dominance_lt(b, a)) return true;
        if (dominance_lt(a, b)) return false;
        return a < b;
    });
    for (const Partition& mu : mus) {
        BranchingSection<K> sec;
        sec.shape = mu;
        auto reduced = standard_tableaux(mu);
        std::map<StandardTableau, int> ridx;
        for (int i = 0; i < (int)reduced.size(); ++i) ridx[reduced[i]] = i;
        auto [row, col] = added_box(mu, mod.shape);
        for (int t = 0; t < mod.dim(); ++t) {
            auto [r, c] = mod.tableaux[t].box_of(mod.degree);
            if (r == row - 1 && c == col - 1) {
                StandardTableau red = mod.tableaux[t];
                if (red.rows[r].size() == 1)
                    red.rows.pop_back();
                else
                    red.rows[r].pop_back();
                sec.member_index.push_back(t);
                sec.reduced_index.push_back(ridx.at(red));
            }
        }
        out.push_back(std::move(sec));
    }
    return out;
}

} // namespace peri
