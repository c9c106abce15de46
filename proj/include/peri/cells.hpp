#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

#include "peri/algebra.hpp"
#include "peri/diagrams.hpp"
#include "peri/linalg.hpp"
#include "peri/partitions.hpp"
#include "peri/specht.hpp"

namespace peri {

// ---- half-diagrams ----

/// All diagrams in Hom(i, n) with i non-crossing (order preserving)
/// propagating lines and (n-i)/2 cups, no caps. These index the diagram part
/// of the cell module basis.
inline std::vector<BrauerDiagram> half_diagrams(int n, int i) {
    std::vector<BrauerDiagram> out;
    if (i > n || (n - i) % 2) return out;
    std::vector<int> subset;
    auto matchings = [&](auto&& self, std::vector<int>& rest,
                         std::vector<std::pair<int, int>>& cur,
                         std::vector<std::vector<std::pair<int, int>>>& acc) -> void {
        if (rest.empty()) {
            acc.push_back(cur);
            return;
        }
        int a = rest[0];
        for (std::size_t t = 1; t < rest.size(); ++t) {
            int b = rest[t];
            std::vector<int> next;
            for (std::size_t q = 1; q < rest.size(); ++q)
                if (q != t) next.push_back(rest[q]);
            cur.push_back({a, b});
            self(self, next, cur, acc);
            cur.pop_back();
        }
    };
    auto rec = [&](auto&& self, int from) -> void {
        if ((int)subset.size() == i) {
            std::vector<int> rest;
            for (int q = 0; q < n; ++q)
                if (std::find(subset.begin(), subset.end(), q) == subset.end()) rest.push_back(q);
            std::vector<std::vector<std::pair<int, int>>> acc;
            std::vector<std::pair<int, int>> cur;
            matchings(matchings, rest, cur, acc);
            for (auto& m : acc) {
                BrauerDiagram d;
                d.src = i;
                d.tgt = n;
                for (int k = 0; k < i; ++k) d.pairs.push_back({k, i + subset[k]});
                for (auto& p : m) d.pairs.push_back({i + p.first, i + p.second});
                d.canonicalize();
                out.push_back(std::move(d));
            }
            return;
        }
        for (int q = from; q < n; ++q) {
            subset.push_back(q);
            self(self, q + 1);
            subset.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// Factor a caps-free diagram in Hom(i, n) with i propagating lines as
/// (half-diagram) o (permutation); the composition on that pair is sign-free.
inline std::pair<BrauerDiagram, std::vector<int>> half_factor(const BrauerDiagram& e) {
    int i = e.src;
    std::vector<int> target(i, -1);
    std::vector<std::pair<int, int>> cups;
    for (auto& p : e.pairs) {
        if (!e.is_top(p.first))
            target[p.first] = p.second;
        else
            cups.push_back(p);
    }
    std::vector<int> sorted_targets = target;
    std::sort(sorted_targets.begin(), sorted_targets.end());
    BrauerDiagram half;
    half.src = i;
    half.tgt = e.tgt;
    for (int k = 0; k < i; ++k) half.pairs.push_back({k, sorted_targets[k]});
    for (auto& c : cups) half.pairs.push_back(c);
    half.canonicalize();
    std::vector<int> w(i);
    for (int k = 0; k < i; ++k)
        w[k] = (int)(std::lower_bound(sorted_targets.begin(), sorted_targets.end(), target[k]) -
                     sorted_targets.begin());
    return {half, w};
}

// ---- Bratteli diagram ----

/// Left-to-right order of a Bratteli row: more dominant partitions (in the
/// extended order, so smaller sizes) come first; reverse-lexicographic breaks
/// the rare incomparable ties.
inline bool bratteli_before(const Partition& a, const Partition& b) {
    if (a == b) return false;
    if (size_of(a) != size_of(b)) return size_of(a) < size_of(b);
    if (dominance_lt(b, a)) return true;
    if (dominance_lt(a, b)) return false;
    return b < a;
}

inline std::vector<Partition> bratteli_row(int k) {
    std::vector<Partition> row;
    for (int i = k % 2; i <= k; i += 2)
        for (auto& p : partitions_of(i)) row.push_back(p);
    std::sort(row.begin(), row.end(), bratteli_before);
    return row;
}

/// Edges between rows k and k+1, as index pairs into the two rows.
inline std::vector<std::pair<int, int>> bratteli_edges(int k) {
    auto a = bratteli_row(k), b = bratteli_row(k + 1);
    std::map<Partition, int> bi;
    for (int t = 0; t < (int)b.size(); ++t) bi[b[t]] = t;
    std::vector<std::pair<int, int>> out;
    for (int s = 0; s < (int)a.size(); ++s) {
        for (auto& m : removable(a[s]))
            if (bi.count(m)) out.push_back({s, bi[m]});
        for (auto& m : addable(a[s]))
            if (bi.count(m)) out.push_back({s, bi[m]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

using BratteliPath = std::vector<Partition>; // entries at levels 1..n, starts at (1)

inline std::vector<BratteliPath> bratteli_paths(int n, const Partition& lambda) {
    std::vector<BratteliPath> out;
    BratteliPath cur{Partition{1}};
    auto rec = [&](auto&& self) -> void {
        if ((int)cur.size() == n) {
            if (cur.back() == lambda) out.push_back(cur);
            return;
        }
        std::vector<Partition> next;
        for (auto& m : removable(cur.back())) next.push_back(m);
        for (auto& m : addable(cur.back())) next.push_back(m);
        std::sort(next.begin(), next.end(), bratteli_before);
        for (auto& m : next) {
            cur.push_back(m);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

/// Strict lexicographic-from-the-top path order.
inline bool path_lt(const BratteliPath& t, const BratteliPath& s) {
    if (t.size() != s.size()) throw std::runtime_error("path_lt: length mismatch");
    for (int k = (int)t.size() - 1; k >= 0; --k)
        if (t[k] != s[k]) return dominance_lt(t[k], s[k]);
    return false;
}

/// Integer content vector (c_t(2), ..., c_t(n)): the residue of the moved box,
/// plus one when the box was removed.
inline std::vector<int> content_vector(const BratteliPath& t) {
    std::vector<int> out;
    for (std::size_t l = 1; l < t.size(); ++l) {
        if (size_of(t[l]) > size_of(t[l - 1])) {
            auto [r, c] = added_box(t[l - 1], t[l]);
            out.push_back(c - r);
        } else {
            auto [r, c] = added_box(t[l], t[l - 1]);
            out.push_back(c - r + 1);
        }
    }
    return out;
}

// ---- cell modules ----

template <class K>
struct CellModule {
    int n = 0;
    Partition shape;
    int weight = 0; // |shape|
    std::vector<BrauerDiagram> half;
    std::map<BrauerDiagram, int> half_index;
    SpechtModule<K> specht;

    int dim() const { return (int)half.size() * specht.dim(); }
    int basis_index(int h, int t) const { return h * specht.dim() + t; }

    mutable std::map<std::vector<int>, Matrix<K>> perm_cache;

    const Matrix<K>& perm_matrix(const std::vector<int>& w) const {
        auto it = perm_cache.find(w);
        if (it != perm_cache.end()) return it->second;
        return perm_cache.emplace(w, specht.permutation_action(w)).first->second;
    }
};

template <class K>
CellModule<K> build_cell_module(int n, const Partition& lambda) {
    CellModule<K> m;
    m.n = n;
    m.shape = lambda;
    m.weight = size_of(lambda);
    if (m.weight > n || (n - m.weight) % 2)
        throw std::runtime_error("build_cell_module: invalid shape for this n");
    m.half = half_diagrams(n, m.weight);
    for (int h = 0; h < (int)m.half.size(); ++h) m.half_index[m.half[h]] = h;
    m.specht = build_specht<K>(lambda);
    return m;
}

/// Action of a single basis diagram of A_n on the cell module.
template <class K>
Matrix<K> act_diagram(const CellModule<K>& m, const BrauerDiagram& a) {
    int f = m.specht.dim();
    Matrix<K> out(m.dim(), m.dim());
    for (int h = 0; h < (int)m.half.size(); ++h) {
        SignedDiagram r = compose(a, m.half[h]);
        if (r.is_zero()) continue;
        if (propagating_count(r.diagram) < m.weight) continue;
        auto [half, w] = half_factor(r.diagram);
        int h2 = m.half_index.at(half);
        const Matrix<K>& wm = m.perm_matrix(w);
        for (int t = 0; t < f; ++t)
            for (int u = 0; u < f; ++u)
                if (!is_zero(wm(u, t)))
                    out(m.basis_index(h2, u), m.basis_index(h, t)) = K(r.sign) * wm(u, t);
    }
    return out;
}

template <class K>
Matrix<K> act_expression(const CellModule<K>& m, const Expression<K>& e) {
    Matrix<K> out(m.dim(), m.dim());
    for (auto& [d, c] : e.terms) out = out + act_diagram(m, d) * c;
    return out;
}

/// Trace of a basis diagram on the cell module, without building the matrix.
template <class K>
K trace_diagram(const CellModule<K>& m, const BrauerDiagram& a) {
    K tr(0);
    for (int h = 0; h < (int)m.half.size(); ++h) {
        SignedDiagram r = compose(a, m.half[h]);
        if (r.is_zero()) continue;
        if (propagating_count(r.diagram) < m.weight) continue;
        auto [half, w] = half_factor(r.diagram);
        if (!(half == m.half[h])) continue;
        tr += K(r.sign) * m.perm_matrix(w).trace();
    }
    return tr;
}

template <class K>
K trace_expression(const CellModule<K>& m, const Expression<K>& e) {
    K tr(0);
    for (auto& [d, c] : e.terms) tr += c * trace_diagram(m, d);
    return tr;
}

// ---- the Gram pairing ----

/// Gram matrix of the cell module, read off the standardly based structure
/// constants: the row index runs over the mirrored half-diagram basis of the
/// right cell module, the column over the module itself. Composing the plain
/// vertical mirror of the row's half-diagram with the column's half-diagram
/// either drops to a lower cell (fewer propagating lines: entry 0) or leaves
/// a signed permutation, paired through the Specht form. The module radical
/// is the right kernel.
template <class K>
Matrix<K> gram_matrix(const CellModule<K>& m) {
    int f = m.specht.dim();
    Matrix<K> g(m.dim(), m.dim());
    for (int h = 0; h < (int)m.half.size(); ++h) {
        BrauerDiagram down = mirror(m.half[h]);
        for (int h2 = 0; h2 < (int)m.half.size(); ++h2) {
            SignedDiagram r = compose(down, m.half[h2]);
            if (r.is_zero()) continue;
            auto perm = as_permutation(r.diagram);
            if (!perm.has_value()) continue; // cups and caps: lower cell
            const Matrix<K>& wm = m.perm_matrix(*perm);
            K s = K(r.sign);
            for (int t = 0; t < f; ++t)
                for (int u = 0; u < f; ++u)
                    if (!is_zero(wm(t, u)))
                        g(m.basis_index(h, t), m.basis_index(h2, u)) =
                            s * m.specht.form_diag[t] * wm(t, u);
        }
    }
    return g;
}

/// Right action of a diagram on the mirrored-basis right cell module; used to
/// verify the bimodule invariance of the Gram pairing.
template <class K>
Matrix<K> right_act_diagram(const CellModule<K>& m, const BrauerDiagram& a) {
    int f = m.specht.dim();
    Matrix<K> out(m.dim(), m.dim());
    for (int h = 0; h < (int)m.half.size(); ++h) {
        SignedDiagram r = compose(mirror(m.half[h]), a);
        if (r.is_zero()) continue;
        if (propagating_count(r.diagram) < m.weight) continue;
        // factor as (permutation on top) o (mirrored half-diagram)
        auto [half2, w] = half_factor(mirror(r.diagram));
        int h2 = m.half_index.at(half2);
        // mirror(r) = half2 o w, so r = mirror(w) o mirror(half2) = w^{-1} o down
        std::vector<int> winv(w.size());
        for (int q = 0; q < (int)w.size(); ++q) winv[w[q]] = q;
        const Matrix<K>& wm = m.perm_matrix(winv);
        // unit-normalised tableau transport: (h, u) . a = sign (h2, M(w)^t u)
        for (int t = 0; t < f; ++t)
            for (int u = 0; u < f; ++u)
                if (!is_zero(wm(u, t)))
                    out(m.basis_index(h2, t), m.basis_index(h, u)) = K(r.sign) * wm(u, t);
    }
    return out;
}

// All ranks here are taken over Q or F_p. The Gram entries live in the prime
// field, so the rank (and with it every dimension derived from it) is the
// same over any field extension.
template <class K>
std::size_t simple_dimension(const CellModule<K>& m) {
    return (std::size_t)m.dim() - kernel(gram_matrix(m)).cols();
}

/// Quotient of the cell module by the Gram radical, with explicit action
/// matrices. Columns of `radical` span the radical; `to_quotient` maps module
/// coordinates to quotient coordinates.
template <class K>
struct SimpleQuotient {
    int dim = 0;
    Matrix<K> radical;     // module_dim x rad_dim
    Matrix<K> basis;       // module_dim x module_dim, [complement | radical]
    Matrix<K> basis_inv;   // inverse of basis
    std::vector<int> complement; // indices of coordinate vectors chosen

    template <class F>
    Matrix<K> quotient_action(F&& act_matrix) const {
        Matrix<K> full = basis_inv * act_matrix * basis;
        Matrix<K> out(dim, dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) out(i, j) = full(i, j);
        return out;
    }
};

template <class K>
SimpleQuotient<K> simple_quotient(const CellModule<K>& m) {
    SimpleQuotient<K> q;
    Matrix<K> g = gram_matrix(m);
    q.radical = kernel(g);
    int dim = m.dim(), rad = (int)q.radical.cols();
    q.dim = dim - rad;
    // choose complement coordinates: rows without a pivot in the echelon form
    Matrix<K> rt = q.radical.transposed();
    std::vector<std::size_t> piv = echelonize(rt);
    std::vector<bool> is_piv(dim, false);
    for (auto p : piv) is_piv[p] = true;
    for (int c = 0; c < dim; ++c)
        if (!is_piv[c]) q.complement.push_back(c);
    q.basis = Matrix<K>(dim, dim);
    for (int c = 0; c < q.dim; ++c) q.basis(q.complement[c], c) = K(1);
    for (int r = 0; r < rad; ++r)
        for (int i = 0; i < dim; ++i) q.basis(i, q.dim + r) = q.radical(i, r);
    // invert by solving basis * X = I column by column
    q.basis_inv = Matrix<K>(dim, dim);
    for (int c = 0; c < dim; ++c) {
        std::vector<K> rhs(dim, K(0)), x;
        rhs[c] = K(1);
        if (!solve(q.basis, rhs, x)) throw std::runtime_error("radical complement not a basis");
        for (int r = 0; r < dim; ++r) q.basis_inv(r, c) = x[r];
    }
    return q;
}

// ---- Murphy bases ----

template <class K>
struct MurphyBasis {
    std::vector<BratteliPath> paths;
    Matrix<K> vectors; // dim x #paths, column p is the Murphy vector of path p
};

/// Shared cache of Specht modules, cell modules and Murphy bases across
/// levels; the Murphy recursion walks down to level 1.
template <class K>
class CellContext {
public:
    const SpechtModule<K>& specht(const Partition& shape) {
        auto it = spechts_.find(shape);
        if (it != spechts_.end()) return it->second;
        return spechts_.emplace(shape, build_specht<K>(shape)).first->second;
    }

    const CellModule<K>& cell(int n, const Partition& shape) {
        auto key = std::make_pair(n, shape);
        auto it = cells_.find(key);
        if (it != cells_.end()) return *it->second;
        auto mod = std::make_unique<CellModule<K>>(build_cell_module<K>(n, shape));
        return *cells_.emplace(key, std::move(mod)).first->second;
    }

    const MurphyBasis<K>& murphy(int n, const Partition& shape);

    /// The inclusion of W_{n-1}(mu) as the dot-n-propagating part of W_n(lambda),
    /// for mu obtained from lambda by removing one box.
    Matrix<K> submodule_map(int n, const Partition& lambda, const Partition& mu);

    /// The projection of W_n(lambda) onto W_{n-1}(nu), for nu obtained by
    /// adding one box; kills the dot-n-propagating part.
    Matrix<K> quotient_map(int n, const Partition& lambda, const Partition& nu);

private:
    std::map<Partition, SpechtModule<K>> spechts_;
    std::map<std::pair<int, Partition>, std::unique_ptr<CellModule<K>>> cells_;
    std::map<std::pair<int, Partition>, MurphyBasis<K>> murphys_;
};

/// Decomposition of a half-diagram whose dot n lies on a cup: peel the cup
/// off through the canonical corner diagram, leaving a smaller half-diagram,
/// a coset permutation and a sign.
template <class K>
struct PeeledCup {
    int sign = 1;
    BrauerDiagram rest;     // half-diagram in Hom(i+1, n-1)
    std::vector<int> coset; // permutation in S_{i+1}
};

template <class K>
PeeledCup<K> peel_last_cup(const BrauerDiagram& d) {
    int i = d.src, n = d.tgt;
    int top_n = i + n - 1;
    int cup_partner = -1;
    std::vector<int> prop_targets;
    std::vector<std::pair<int, int>> other_cups;
    for (auto& p : d.pairs) {
        if (!d.is_top(p.first)) {
            prop_targets.push_back(p.second - i);
        } else if (p.second == top_n) {
            cup_partner = p.first - i;
        } else {
            other_cups.push_back({p.first - i, p.second - i});
        }
    }
    if (cup_partner < 0) throw std::runtime_error("peel_last_cup: dot n is propagating");
    std::sort(prop_targets.begin(), prop_targets.end());
    std::vector<int> targets = prop_targets;
    targets.push_back(cup_partner);
    std::sort(targets.begin(), targets.end());
    int r = (int)(std::lower_bound(targets.begin(), targets.end(), cup_partner) - targets.begin());

    PeeledCup<K> out;
    out.rest.src = i + 1;
    out.rest.tgt = n - 1;
    for (int k = 0; k <= i; ++k) out.rest.pairs.push_back({k, i + 1 + targets[k]});
    for (auto& c : other_cups) out.rest.pairs.push_back({i + 1 + c.first, i + 1 + c.second});
    out.rest.canonicalize();
    // coset representative sending the new bottom dot i (0-based) to slot r
    out.coset.resize(i + 1);
    for (int k = 0; k < i; ++k) out.coset[k] = k < r ? k : k + 1;
    out.coset[i] = r;
    // reconstruct to pin the sign
    BrauerDiagram wd;
    wd.src = wd.tgt = i + 1;
    for (int k = 0; k <= i; ++k) wd.pairs.push_back({k, i + 1 + out.coset[k]});
    wd.canonicalize();
    SignedDiagram rec = compose(SignedDiagram::of(1, tensor(out.rest, identity_diagram(1))),
                                compose(SignedDiagram::of(1, tensor(wd, identity_diagram(1))),
                                        SignedDiagram::of(1, a_diagram(i, i + 2))));
    if (rec.is_zero() || !(rec.diagram == d))
        throw std::runtime_error("peel_last_cup: reconstruction failed");
    out.sign = rec.sign;
    return out;
}

template <class K>
Matrix<K> CellContext<K>::submodule_map(int n, const Partition& lambda, const Partition& mu) {
    const CellModule<K>& big = cell(n, lambda);
    const CellModule<K>& small = cell(n - 1, mu);
    Matrix<K> out(big.dim(), small.dim());
    auto secs = branching_sections(big.specht);
    const BranchingSection<K>* sec = nullptr;
    for (auto& s : secs)
        if (s.shape == mu) sec = &s;
    if (!sec) throw std::runtime_error("submodule_map: mu is not a removable shape");
    for (int h = 0; h < (int)small.half.size(); ++h) {
        BrauerDiagram lifted = tensor(small.half[h], identity_diagram(1));
        int h2 = big.half_index.at(lifted);
        for (std::size_t a = 0; a < sec->member_index.size(); ++a)
            out(big.basis_index(h2, sec->member_index[a]),
                small.basis_index(h, sec->reduced_index[a])) = K(1);
    }
    return out;
}

template <class K>
Matrix<K> CellContext<K>::quotient_map(int n, const Partition& lambda, const Partition& nu) {
    const CellModule<K>& big = cell(n, lambda);
    const CellModule<K>& small = cell(n - 1, nu);
    const SpechtModule<K>& sp_nu = specht(nu);
    int i = big.weight;
    Matrix<K> out(small.dim(), big.dim());
    // inclusion SYT(lambda) -> SYT(nu): place i+1 in the added box
    auto [row, col] = added_box(lambda, nu);
    std::vector<int> include(big.specht.dim());
    for (int t = 0; t < big.specht.dim(); ++t) {
        StandardTableau ext = big.specht.tableaux[t];
        while ((int)ext.rows.size() < row) ext.rows.push_back({});
        ext.rows[row - 1].push_back(i + 1);
        include[t] = sp_nu.index.at(ext);
    }
    for (int h = 0; h < (int)big.half.size(); ++h) {
        // only half-diagrams whose dot n sits on a cup survive the projection
        bool dot_n_on_cup = false;
        int top_n = big.weight + n - 1;
        for (auto& p : big.half[h].pairs)
            if (big.half[h].is_top(p.first) && p.second == top_n) dot_n_on_cup = true;
        if (!dot_n_on_cup) continue;
        PeeledCup<K> peel = peel_last_cup<K>(big.half[h]);
        int h2 = small.half_index.at(peel.rest);
        const Matrix<K>& wm = sp_nu.permutation_action(peel.coset);
        for (int t = 0; t < big.specht.dim(); ++t) {
            int tincl = include[t];
            for (int u = 0; u < sp_nu.dim(); ++u)
                if (!is_zero(wm(u, tincl)))
                    out(small.basis_index(h2, u), big.basis_index(h, t)) =
                        K(peel.sign) * wm(u, tincl);
        }
    }
    return out;
}

template <class K>
const MurphyBasis<K>& CellContext<K>::murphy(int n, const Partition& shape) {
    auto key = std::make_pair(n, shape);
    auto it = murphys_.find(key);
    if (it != murphys_.end()) return it->second;

    MurphyBasis<K> mb;
    mb.paths = bratteli_paths(n, shape);
    const CellModule<K>& mod = cell(n, shape);
    mb.vectors = Matrix<K>(mod.dim(), (int)mb.paths.size());
    if (n == 1) {
        if (!(mb.paths.size() == 1 && mod.dim() == 1))
            throw std::runtime_error("murphy: level 1 must be one-dimensional");
        mb.vectors(0, 0) = K(1);
        return murphys_.emplace(key, std::move(mb)).first->second;
    }

    // group paths by their level-(n-1) vertex
    std::map<Partition, std::vector<int>> by_prev;
    for (int p = 0; p < (int)mb.paths.size(); ++p) by_prev[mb.paths[p][n - 2]].push_back(p);

    // removable: push the smaller Murphy vector through the inclusion
    for (auto& mu : removable(shape)) {
        if (!by_prev.count(mu)) continue;
        Matrix<K> inc = submodule_map(n, shape, mu);
        const MurphyBasis<K>& sub = murphy(n - 1, mu);
        for (int p : by_prev[mu]) {
            BratteliPath prev(mb.paths[p].begin(), mb.paths[p].end() - 1);
            int q = (int)(std::find(sub.paths.begin(), sub.paths.end(), prev) - sub.paths.begin());
            for (int r = 0; r < mod.dim(); ++r) {
                K v(0);
                for (int c = 0; c < (int)sub.paths.size(); ++c)
                    if (!is_zero(inc(r, c) * sub.vectors(c, q))) v += inc(r, c) * sub.vectors(c, q);
                mb.vectors(r, p) = v;
            }
        }
    }

    // addable: solve for the unique preimage inside the cup-complement
    std::vector<Partition> nus;
    for (auto& nu : addable(shape))
        if (by_prev.count(nu)) nus.push_back(nu);
    if (!nus.empty()) {
        std::vector<int> comp_cols; // basis vectors whose half-diagram has dot n on a cup
        int top_n = mod.weight + n - 1;
        for (int h = 0; h < (int)mod.half.size(); ++h) {
            bool on_cup = false;
            for (auto& p : mod.half[h].pairs)
                if (mod.half[h].is_top(p.first) && p.second == top_n) on_cup = true;
            if (on_cup)
                for (int t = 0; t < mod.specht.dim(); ++t)
                    comp_cols.push_back(mod.basis_index(h, t));
        }
        // stack the quotient maps of all addable nu, restricted to the complement
        std::vector<Matrix<K>> qmaps;
        int rows = 0;
        for (auto& nu : nus) {
            qmaps.push_back(quotient_map(n, shape, nu));
            rows += (int)qmaps.back().rows();
        }
        Matrix<K> sys(rows, (int)comp_cols.size());
        int off = 0;
        for (auto& qm : qmaps) {
            for (std::size_t r = 0; r < qm.rows(); ++r)
                for (int c = 0; c < (int)comp_cols.size(); ++c) sys(off + (int)r, c) = qm(r, comp_cols[c]);
            off += (int)qm.rows();
        }
        for (std::size_t v = 0; v < nus.size(); ++v) {
            const Partition& nu = nus[v];
            const MurphyBasis<K>& sub = murphy(n - 1, nu);
            int base = 0;
            for (std::size_t u = 0; u < v; ++u) base += (int)qmaps[u].rows();
            for (int p : by_prev[nu]) {
                BratteliPath prev(mb.paths[p].begin(), mb.paths[p].end() - 1);
                int q = (int)(std::find(sub.paths.begin(), sub.paths.end(), prev) -
                              sub.paths.begin());
                std::vector<K> rhs(rows, K(0));
                for (int r = 0; r < (int)sub.vectors.rows(); ++r) rhs[base + r] = sub.vectors(r, q);
                std::vector<K> x;
                bool unique = false;
                if (!solve(sys, rhs, x, &unique) || !unique)
                    throw std::runtime_error("murphy: complement preimage not unique");
                for (int c = 0; c < (int)comp_cols.size(); ++c) mb.vectors(comp_cols[c], p) = x[c];
            }
        }
    }
    return murphys_.emplace(key, std::move(mb)).first->second;
}

// ---- verification reports ----

struct CheckReport {
    std::string name;
    bool pass = true;
    std::string witness;
};

/// Jucys-Murphy triangularity on the Murphy basis: x_l acts with the path's
/// content on the diagonal and strictly larger paths above.
template <class K>
std::vector<CheckReport> jm_triangularity_check(CellContext<K>& ctx, int n,
                                                const Partition& lambda) {
    std::vector<CheckReport> out;
    const CellModule<K>& mod = ctx.cell(n, lambda);
    const MurphyBasis<K>& mb = ctx.murphy(n, lambda);
    int np = (int)mb.paths.size();
    CheckReport square{"murphy change of basis is square and invertible", true, ""};
    if (np != mod.dim() || rank(mb.vectors) != (std::size_t)np) {
        square.pass = false;
        square.witness = "paths=" + std::to_string(np) + " dim=" + std::to_string(mod.dim());
    }
    out.push_back(square);
    if (!square.pass) return out;

    // express x_l * v_t in the Murphy basis: solve V y = x_l v_t
    for (int l = 2; l <= n; ++l) {
        Matrix<K> xl = act_expression(mod, jm_element<K>(l, n));
        Matrix<K> img = xl * mb.vectors;
        CheckReport rep{"x_" + std::to_string(l) + " triangular on W_" + std::to_string(n), true, ""};
        // solve V * Y = img in one elimination
        Matrix<K> aug(mod.dim(), np + np);
        for (int r = 0; r < mod.dim(); ++r) {
            for (int c = 0; c < np; ++c) aug(r, c) = mb.vectors(r, c);
            for (int c = 0; c < np; ++c) aug(r, np + c) = img(r, c);
        }
        echelonize(aug);
        for (int p = 0; p < np && rep.pass; ++p) {
            auto cv = content_vector(mb.paths[p]);
            for (int q = 0; q < np && rep.pass; ++q) {
                const K& coeff = aug(q, np + p);
                if (q == p) {
                    if (coeff != K(cv[l - 2])) {
                        rep.pass = false;
                        rep.witness = "diagonal entry differs at path " + std::to_string(p);
                    }
                } else if (!is_zero(coeff)) {
                    if (!path_lt(mb.paths[p], mb.paths[q])) {
                        rep.pass = false;
                        rep.witness = "non-dominating path coefficient at (" +
                                      std::to_string(q) + "," + std::to_string(p) + ")";
                    }
                }
            }
        }
        out.push_back(rep);
    }
    return out;
}

/// Murphy basis sanity: the change of basis is square and invertible and the
/// vectors respect the removal/addition block structure.
template <class K>
std::vector<CheckReport> murphy_check(CellContext<K>& ctx, int n, const Partition& lambda) {
    std::vector<CheckReport> out;
    const CellModule<K>& mod = ctx.cell(n, lambda);
    const MurphyBasis<K>& mb = ctx.murphy(n, lambda);
    CheckReport square{"murphy change of basis is square and invertible", true, ""};
    if ((int)mb.paths.size() != mod.dim() || rank(mb.vectors) != (std::size_t)mod.dim()) {
        square.pass = false;
        square.witness = "paths=" + std::to_string(mb.paths.size()) +
                         " dim=" + std::to_string(mod.dim());
    }
    out.push_back(square);
    if (n == 1 || !square.pass) return out;
    CheckReport spans{"murphy vectors respect the restriction splitting", true, ""};
    int top_n = mod.weight + n - 1;
    for (int p = 0; p < (int)mb.paths.size() && spans.pass; ++p) {
        bool removal = size_of(mb.paths[p][n - 2]) < size_of(lambda);
        for (int h = 0; h < (int)mod.half.size() && spans.pass; ++h) {
            bool prop_n = false;
            for (auto& pr : mod.half[h].pairs)
                if (!mod.half[h].is_top(pr.first) && pr.second == top_n) prop_n = true;
            for (int t = 0; t < mod.specht.dim(); ++t)
                if (!is_zero(mb.vectors(mod.basis_index(h, t), p)) && prop_n != removal) {
                    spans.pass = false;
                    spans.witness = "path " + std::to_string(p);
                    break;
                }
        }
    }
    out.push_back(spans);
    return out;
}

/// Restriction to A_{n-1}: submodule stability, the explicit intertwiners in
/// both directions, and the dimension bookkeeping.
template <class K>
std::vector<CheckReport> restriction_check(CellContext<K>& ctx, int n, const Partition& lambda) {
    std::vector<CheckReport> out;
    const CellModule<K>& mod = ctx.cell(n, lambda);
    int i = mod.weight;
    int top_n = i + n - 1;

    std::vector<BrauerDiagram> small_gens;
    for (int k = 1; k + 1 < n; ++k) {
        small_gens.push_back(s_gen(k, n - 1));
        small_gens.push_back(epsilon(k, n - 1));
    }
    if (n == 2) small_gens.push_back(identity_diagram(n - 1));
    std::vector<Expression<K>> gens;
    for (auto& g : small_gens) gens.push_back(Expression<K>::of(embed(g, n)));

    std::vector<bool> in_sub(mod.dim(), false);
    for (int h = 0; h < (int)mod.half.size(); ++h) {
        bool prop_n = false;
        for (auto& p : mod.half[h].pairs)
            if (!mod.half[h].is_top(p.first) && p.second == top_n) prop_n = true;
        if (prop_n)
            for (int t = 0; t < mod.specht.dim(); ++t) in_sub[mod.basis_index(h, t)] = true;
    }

    CheckReport stab{"dot-n-propagating subspace is A_{n-1}-stable", true, ""};
    std::vector<Matrix<K>> gen_acts;
    for (auto& g : gens) gen_acts.push_back(act_expression(mod, g));
    for (std::size_t gi = 0; gi < gens.size() && stab.pass; ++gi)
        for (int c = 0; c < mod.dim() && stab.pass; ++c) {
            if (!in_sub[c]) continue;
            for (int r = 0; r < mod.dim(); ++r)
                if (!in_sub[r] && !is_zero(gen_acts[gi](r, c))) {
                    stab.pass = false;
                    stab.witness = "generator " + std::to_string(gi);
                    break;
                }
        }
    out.push_back(stab);

    long sub_dim = 0, quot_dim = 0;
    for (auto& mu : removable(lambda)) {
        if (size_of(mu) > n - 1 || (n - 1 - size_of(mu)) % 2) continue;
        const CellModule<K>& small = ctx.cell(n - 1, mu);
        Matrix<K> inc = ctx.submodule_map(n, lambda, mu);
        sub_dim += small.dim();
        CheckReport rep{"inclusion of the cell module at " + std::to_string(size_of(mu)) +
                            " boxes intertwines the A_{n-1} action",
                        true, ""};
        for (std::size_t gi = 0; gi < gens.size() && rep.pass; ++gi) {
            if (!(gen_acts[gi] * inc == inc * act_diagram(small, small_gens[gi]))) {
                rep.pass = false;
                rep.witness = "generator " + std::to_string(gi);
            }
        }
        out.push_back(rep);
    }
    for (auto& nu : addable(lambda)) {
        if (size_of(nu) > n - 1 || (n - 1 - size_of(nu)) % 2) continue;
        const CellModule<K>& small = ctx.cell(n - 1, nu);
        Matrix<K> qm = ctx.quotient_map(n, lambda, nu);
        quot_dim += small.dim();
        CheckReport rep{"projection onto the cell module at " + std::to_string(size_of(nu)) +
                            " boxes intertwines the A_{n-1} action",
                        true, ""};
        for (std::size_t gi = 0; gi < gens.size() && rep.pass; ++gi) {
            if (!(qm * gen_acts[gi] == act_diagram(small, small_gens[gi]) * qm)) {
                rep.pass = false;
                rep.witness = "generator " + std::to_string(gi);
            }
        }
        out.push_back(rep);
    }
    CheckReport dims{"dimension bookkeeping", true, ""};
    if (mod.dim() != sub_dim + quot_dim) {
        dims.pass = false;
        dims.witness = std::to_string(mod.dim()) + " != " + std::to_string(sub_dim) + "+" +
                       std::to_string(quot_dim);
    }
    out.push_back(dims);
    return out;
}

} // namespace peri
