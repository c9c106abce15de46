#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "peri/cells.hpp"

namespace peri {

/// Labels of the cell modules of A_n (partitions of n, n-2, ...), in Bratteli
/// row order; Lambda = labels of the simple modules (the empty partition is
/// dropped when present).
inline std::vector<Partition> cell_label_set(int n) { return bratteli_row(n); }

inline std::vector<Partition> simple_label_set(int n) {
    std::vector<Partition> out;
    for (auto& p : cell_label_set(n))
        if (!p.empty()) out.push_back(p);
    return out;
}

/// Necessary condition for [W(lambda):L(mu)] != 0 with |mu| > |lambda|:
/// lambda sits inside mu and the skew boxes pair up with contents differing
/// by one.
inline bool contents_pairable(const Partition& lambda, const Partition& mu) {
    if (!contains(mu, lambda)) return false;
    std::vector<int> skew;
    for (std::size_t r = 0; r < mu.size(); ++r) {
        int lo = r < lambda.size() ? lambda[r] : 0;
        for (int c = lo + 1; c <= mu[r]; ++c) skew.push_back(c - (int)r - 1);
    }
    if (skew.size() % 2) return false;
    std::sort(skew.begin(), skew.end());
    auto rec = [&](auto&& self, std::vector<int> rest) -> bool {
        if (rest.empty()) return true;
        int a = rest[0];
        for (std::size_t t = 1; t < rest.size(); ++t) {
            if (std::abs(rest[t] - a) != 1) continue;
            std::vector<int> next;
            for (std::size_t q = 1; q < rest.size(); ++q)
                if (q != t) next.push_back(rest[q]);
            if (self(self, next)) return true;
        }
        return false;
    };
    return rec(rec, skew);
}

template <class K>
struct DecompositionTable {
    int n = 0;
    std::vector<Partition> rows;                        // all of L
    std::vector<Partition> cols;                        // Lambda
    std::map<std::pair<Partition, Partition>, long> entry;
    std::map<Partition, long> simple_dim;

    long operator()(const Partition& lam, const Partition& mu) const {
        auto it = entry.find({lam, mu});
        return it == entry.end() ? 0 : it->second;
    }
};

/// Decomposition numbers by the trace method: characters of the explicit Gram
/// quotients are linearly independent, so matching traces of a spanning set
/// of algebra elements on W(lambda) determines the multiplicities. Candidate
/// columns are pre-filtered by the 2-core block and the content-pairing
/// screen; the element set grows with seeded random words until every
/// candidate system has full column rank.
template <class K>
DecompositionTable<K> decomposition_matrix(CellContext<K>& ctx, int n,
                                           std::uint64_t seed = 2024) {
    DecompositionTable<K> table;
    table.n = n;
    table.rows = cell_label_set(n);
    table.cols = simple_label_set(n);

    std::map<Partition, SimpleQuotient<K>> quot;
    for (auto& mu : table.cols) {
        quot.emplace(mu, simple_quotient(ctx.cell(n, mu)));
        table.simple_dim[mu] = quot.at(mu).dim;
    }

    // spanning elements: identity, JM elements, quadratic JM monomials,
    // generators; then seeded random words as needed
    std::vector<Expression<K>> elems;
    elems.push_back(identity_expr<K>(n));
    for (int i = 2; i <= n; ++i) elems.push_back(jm_element<K>(i, n));
    for (int i = 2; i <= n; ++i)
        for (int j = i; j <= n; ++j)
            elems.push_back(multiply(jm_element<K>(i, n), jm_element<K>(j, n)));
    for (int k = 1; k < n; ++k) {
        elems.push_back(Expression<K>::of(s_gen(k, n)));
        elems.push_back(Expression<K>::of(epsilon(k, n)));
    }

    std::mt19937_64 rng(seed);
    auto random_word = [&]() {
        Expression<K> e = identity_expr<K>(n);
        int len = 2 + (int)(rng() % 3);
        for (int t = 0; t < len; ++t) {
            int pick = (int)(rng() % (3 * (n - 1)));
            Expression<K> g;
            if (pick < n - 1)
                g = Expression<K>::of(s_gen(pick + 1, n));
            else if (pick < 2 * (n - 1))
                g = Expression<K>::of(epsilon(pick - (n - 1) + 1, n));
            else
                g = jm_element<K>(pick - 2 * (n - 1) + 2, n);
            e = multiply(e, g);
        }
        return e;
    };

    // candidate column sets
    std::map<Partition, std::vector<Partition>> candidates;
    for (auto& lam : table.rows) {
        std::vector<Partition> c;
        for (auto& mu : table.cols) {
            if (mu == lam) {
                c.push_back(mu);
                continue;
            }
            if (size_of(mu) <= size_of(lam)) continue;
            if (two_core(mu) != two_core(lam)) continue;
            if (!contents_pairable(lam, mu)) continue;
            c.push_back(mu);
        }
        candidates[lam] = c;
    }

    // simple traces, extended lazily
    std::map<Partition, std::vector<K>> simple_tr; // per mu, per element
    for (auto& mu : table.cols) simple_tr[mu] = {};
    auto extend_traces = [&]() {
        for (auto& mu : table.cols) {
            const CellModule<K>& m = ctx.cell(n, mu);
            const SimpleQuotient<K>& q = quot.at(mu);
            auto& vec = simple_tr[mu];
            while (vec.size() < elems.size()) {
                Matrix<K> act = act_expression(m, elems[vec.size()]);
                Matrix<K> full = q.basis_inv * act * q.basis;
                K tr(0);
                for (int t = 0; t < q.dim; ++t) tr += full(t, t);
                vec.push_back(tr);
            }
        }
    };

    auto full_rank_for = [&](const Partition& lam) {
        auto& cands = candidates[lam];
        Matrix<K> s(elems.size(), cands.size());
        for (std::size_t r = 0; r < elems.size(); ++r)
            for (std::size_t c = 0; c < cands.size(); ++c) s(r, c) = simple_tr[cands[c]][r];
        return rank(s) == cands.size();
    };

    extend_traces();
    for (int budget = 0; budget < 40; ++budget) {
        bool all_ok = true;
        for (auto& lam : table.rows)
            if (!full_rank_for(lam)) all_ok = false;
        if (all_ok) break;
        for (int t = 0; t < 8; ++t) elems.push_back(random_word());
        extend_traces();
        if (budget == 39) throw std::runtime_error("trace system never reached full rank");
    }

    for (auto& lam : table.rows) {
        const CellModule<K>& w = ctx.cell(n, lam);
        std::vector<K> target;
        for (auto& e : elems) target.push_back(trace_expression(w, e));
        auto& cands = candidates[lam];
        Matrix<K> s(elems.size(), cands.size());
        for (std::size_t r = 0; r < elems.size(); ++r)
            for (std::size_t c = 0; c < cands.size(); ++c) s(r, c) = simple_tr[cands[c]][r];
        std::vector<K> x;
        bool unique = false;
        if (!solve(s, target, x, &unique) || !unique)
            throw std::runtime_error("trace system inconsistent or underdetermined");
        for (std::size_t c = 0; c < cands.size(); ++c) {
            if (!is_integral(x[c])) throw std::runtime_error("non-integral multiplicity");
            long v = to_long(x[c]);
            if (v < 0) throw std::runtime_error("negative multiplicity");
            if (v) table.entry[{lam, cands[c]}] = v;
        }
    }

    // structural sanity: unit diagonal, dominance vanishing, sum rule
    for (auto& lam : table.rows) {
        long total = 0;
        for (auto& mu : table.cols) {
            long v = table(lam, mu);
            if (v && !dominance_leq(mu, lam))
                throw std::runtime_error("unitriangularity violated");
            total += v * table.simple_dim[mu];
        }
        if (total != ctx.cell(n, lam).dim())
            throw std::runtime_error("dimension sum rule violated");
        if (!lam.empty() && table(lam, lam) != 1)
            throw std::runtime_error("diagonal multiplicity is not one");
    }
    return table;
}

/// Cartan matrix via the reciprocity (P(lambda):W(nu)) = [W(nu^t):L(lambda^t)].
template <class K>
std::map<std::pair<Partition, Partition>, long> cartan_matrix(const DecompositionTable<K>& t) {
    std::map<std::pair<Partition, Partition>, long> c;
    for (auto& lam : t.cols)
        for (auto& mu : t.cols) {
            long total = 0;
            for (auto& nu : t.rows) total += t(transpose(nu), transpose(lam)) * t(nu, mu);
            if (total) c[{lam, mu}] = total;
        }
    return c;
}

/// Projective dimensions dim P(lambda) from the same reciprocity.
template <class K>
std::map<Partition, long> projective_dims(CellContext<K>& ctx, const DecompositionTable<K>& t) {
    std::map<Partition, long> out;
    for (auto& lam : t.cols) {
        long d = 0;
        for (auto& nu : t.rows)
            d += t(transpose(nu), transpose(lam)) * ctx.cell(t.n, nu).dim();
        out[lam] = d;
    }
    return out;
}

/// Blocks of Lambda as the transitive closure of shared cell-module
/// composition factors together with the Cartan linking.
template <class K>
std::vector<std::vector<Partition>> block_partition(const DecompositionTable<K>& t) {
    std::map<Partition, int> idx;
    for (int i = 0; i < (int)t.cols.size(); ++i) idx[t.cols[i]] = i;
    std::vector<int> parent(t.cols.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = (int)i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto join = [&](int a, int b) { parent[find(a)] = find(b); };
    for (auto& lam : t.rows) {
        int first = -1;
        for (auto& mu : t.cols) {
            if (!t(lam, mu)) continue;
            if (first < 0)
                first = idx[mu];
            else
                join(first, idx[mu]);
        }
    }
    auto cart = cartan_matrix(t);
    for (auto& [pr, v] : cart) {
        (void)v;
        join(idx[pr.first], idx[pr.second]);
    }
    std::map<int, std::vector<Partition>> classes;
    for (std::size_t i = 0; i < parent.size(); ++i) classes[find((int)i)].push_back(t.cols[i]);
    std::vector<std::vector<Partition>> out;
    for (auto& [root, cls] : classes) {
        (void)root;
        out.push_back(cls);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- quiver oracle ----

struct QuiverPresentation {
    std::vector<Partition> vertices;
    std::vector<std::pair<int, int>> arrows;      // (source, target)
    std::vector<std::pair<int, int>> relations;   // (first arrow, second arrow): second o first = 0
};

/// Count nonzero paths between each ordered vertex pair in the path algebra
/// modulo the quadratic monomial relations. The count must stabilise under the
/// length cutoff (it does for admissible quotients); otherwise this throws.
inline std::vector<std::vector<long>> quiver_cartan_oracle(const QuiverPresentation& q,
                                                           int cutoff = 64) {
    std::size_t nv = q.vertices.size(), na = q.arrows.size();
    std::set<std::pair<int, int>> forbidden(q.relations.begin(), q.relations.end());
    for (auto& rel : q.relations)
        if (rel.first >= (int)na || rel.second >= (int)na)
            throw std::runtime_error("relation references a missing arrow");
    std::vector<std::vector<long>> count(nv, std::vector<long>(nv, 0));
    for (std::size_t v = 0; v < nv; ++v) count[v][v] = 1; // trivial paths
    // states: paths of the current length, keyed by (start, last arrow)
    std::map<std::pair<int, int>, long> state;
    for (std::size_t a = 0; a < na; ++a) {
        state[{q.arrows[a].first, (int)a}] += 1;
        count[q.arrows[a].first][q.arrows[a].second] += 1;
    }
    int len = 1;
    while (!state.empty()) {
        if (++len > cutoff) throw std::runtime_error("path counts do not stabilise");
        std::map<std::pair<int, int>, long> next;
        for (auto& [key, cnt] : state) {
            auto [start, last] = key;
            for (std::size_t a = 0; a < na; ++a) {
                if (q.arrows[a].first != q.arrows[last].second) continue;
                if (forbidden.count({last, (int)a})) continue;
                next[{start, (int)a}] += cnt;
                count[start][q.arrows[a].second] += cnt;
            }
        }
        state = std::move(next);
    }
    return count;
}

/// The displayed quivers for A_2, A_3, A_4 and C_2, C_4.
inline QuiverPresentation quiver_A2() {
    QuiverPresentation q;
    q.vertices = {{1, 1}, {2}};
    q.arrows = {{0, 1}};
    return q;
}
inline QuiverPresentation quiver_C2() {
    QuiverPresentation q;
    q.vertices = {{1, 1}, {}, {2}};
    q.arrows = {{0, 1}, {1, 2}};
    return q;
}
inline QuiverPresentation quiver_A3() {
    QuiverPresentation q;
    q.vertices = {{1, 1, 1}, {1}, {3}, {2, 1}};
    q.arrows = {{0, 1}, {1, 2}};
    return q;
}
inline QuiverPresentation quiver_A4() {
    QuiverPresentation q;
    q.vertices = {{2}, {1, 1}, {4}, {2, 1, 1}, {2, 2}, {3, 1}, {1, 1, 1, 1}};
    // arrows: d2, d3, l1, d4, u4, u3, u2
    q.arrows = {{0, 2}, {0, 4}, {1, 0}, {1, 5}, {3, 0}, {4, 1}, {6, 1}};
    // relations: d2 l1 = d3 l1 = l1 u2 = u3 d3 = l1 u3 = 0
    q.relations = {{2, 0}, {2, 1}, {6, 2}, {1, 5}, {5, 2}};
    return q;
}
inline QuiverPresentation quiver_C4() {
    QuiverPresentation q;
    q.vertices = {{}, {2}, {1, 1}, {4}, {2, 1, 1}, {2, 2}, {3, 1}, {1, 1, 1, 1}};
    // arrows: d1, d2, d3, u1, d4, u4, u3, u2
    q.arrows = {{0, 1}, {1, 3}, {1, 5}, {2, 0}, {2, 6}, {4, 1}, {5, 2}, {7, 2}};
    // relations: d2 d1 = d3 d1 = u1 u2 = u3 d3 = u1 u3 = 0
    q.relations = {{0, 1}, {0, 2}, {7, 3}, {2, 6}, {6, 3}};
    return q;
}

// ---- double centraliser ----

/// dim End_{A_n}(X) for X = (+)_i Hom(i, n). Each block Hom(i, n) is cyclic,
/// generated by a_i (verified); a module map out of it is determined by the
/// image of a_i, constrained to be killed by the annihilator of a_i.
struct DoubleCentralizerReport {
    int n = 0;
    long end_dim = 0;
    long c_dim = 0;
    std::map<std::pair<int, int>, long> block_dims;
};

template <class K>
DoubleCentralizerReport double_centralizer_check(int n) {
    DoubleCentralizerReport rep;
    rep.n = n;
    rep.c_dim = dim_C(n);
    auto an_basis = hom_basis(n, n);
    std::vector<int> arities = arity_set(n);

    std::map<int, std::vector<BrauerDiagram>> mod_basis;
    std::map<int, std::map<BrauerDiagram, int>> mod_index;
    // action table: for arity j, action[a][t] = (row, sign) of basis diagram a
    // applied to the t-th basis vector, or row = -1 on zero
    std::map<int, std::vector<std::vector<std::pair<int, int>>>> action;
    for (int j : arities) {
        mod_basis[j] = hom_basis(j, n);
        for (int t = 0; t < (int)mod_basis[j].size(); ++t) mod_index[j][mod_basis[j][t]] = t;
        auto& tab = action[j];
        tab.assign(an_basis.size(), {});
        for (std::size_t a = 0; a < an_basis.size(); ++a) {
            tab[a].assign(mod_basis[j].size(), {-1, 0});
            for (int t = 0; t < (int)mod_basis[j].size(); ++t) {
                SignedDiagram r = compose(an_basis[a], mod_basis[j][t]);
                if (!r.is_zero()) tab[a][t] = {mod_index[j].at(r.diagram), r.sign};
            }
        }
    }

    for (int i : arities) {
        int di = (int)mod_basis[i].size();
        Matrix<K> to_mod(di, an_basis.size());
        BrauerDiagram gen = a_diagram(i, n);
        int gen_idx = mod_index[i].at(gen);
        for (std::size_t a = 0; a < an_basis.size(); ++a) {
            auto [row, sign] = action[i][a][gen_idx];
            if (row >= 0) to_mod(row, a) = K(sign);
        }
        if (rank(to_mod) != (std::size_t)di)
            throw std::runtime_error("Hom(i,n) is not cyclic on a_i");
        Matrix<K> ann = kernel(to_mod); // columns are algebra coefficient vectors

        for (int j : arities) {
            int dj = (int)mod_basis[j].size();
            RowSpace<K> constraints(dj);
            for (std::size_t c = 0; c < ann.cols(); ++c) {
                Matrix<K> op(dj, dj);
                for (std::size_t a = 0; a < an_basis.size(); ++a) {
                    if (is_zero(ann(a, c))) continue;
                    for (int t = 0; t < dj; ++t) {
                        auto [row, sign] = action[j][a][t];
                        if (row >= 0) op(row, t) += ann(a, c) * K(sign);
                    }
                }
                for (int t = 0; t < dj; ++t) {
                    std::vector<K> row(dj);
                    bool nonzero = false;
                    for (int u = 0; u < dj; ++u) {
                        row[u] = op(t, u);
                        nonzero = nonzero || !is_zero(row[u]);
                    }
                    if (nonzero) constraints.add(std::move(row));
                }
            }
            long hom_dim = dj - (long)constraints.rank();
            rep.block_dims[{i, j}] = hom_dim;
            rep.end_dim += hom_dim;
        }
    }
    return rep;
}

/// Blocks agree with the 2-core fibers, and the gamma statistic is constant
/// per block and separates blocks.
template <class K>
std::vector<CheckReport> blocks_check(const DecompositionTable<K>& t) {
    std::vector<CheckReport> out;
    auto blocks = block_partition(t);
    std::map<Partition, std::set<Partition>> fibers;
    for (auto& mu : t.cols) fibers[two_core(mu)].insert(mu);
    CheckReport match{"computed blocks equal same-2-core fibers", true, ""};
    if (blocks.size() != fibers.size()) {
        match.pass = false;
        match.witness = std::to_string(blocks.size()) + " blocks vs " +
                        std::to_string(fibers.size()) + " fibers";
    } else {
        for (auto& cls : blocks) {
            std::set<Partition> got(cls.begin(), cls.end());
            if (fibers.at(two_core(cls.front())) != got) {
                match.pass = false;
                match.witness = "a block is not a 2-core fiber";
            }
        }
    }
    out.push_back(match);
    CheckReport gam{"gamma statistic constant per block and distinct across blocks", true, ""};
    std::set<int> seen;
    for (auto& cls : blocks) {
        int g = gamma_statistic(cls.front());
        for (auto& mu : cls)
            if (gamma_statistic(mu) != g) gam.pass = false;
        if (seen.count(g)) gam.pass = false;
        seen.insert(g);
    }
    out.push_back(gam);
    return out;
}

/// Theta acting on each constructed simple: zero except at n = 3 on L(2,1).
template <class K>
std::vector<CheckReport> theta_on_simples(CellContext<K>& ctx, int n) {
    std::vector<CheckReport> out;
    const Expression<K>& th = theta<K>(n);
    for (auto& mu : simple_label_set(n)) {
        const CellModule<K>& m = ctx.cell(n, mu);
        SimpleQuotient<K> q = simple_quotient(m);
        if (q.dim == 0) continue;
        Matrix<K> act = q.quotient_action(act_expression(m, th));
        bool zero = act.is_zero_matrix();
        bool expect_zero = !(n == 3 && mu == Partition{2, 1});
        CheckReport rep;
        rep.name = "Theta on the simple at " + std::to_string(size_of(mu)) + " boxes";
        rep.pass = zero == expect_zero;
        if (!rep.pass) rep.witness = zero ? "unexpectedly zero" : "unexpectedly nonzero";
        out.push_back(rep);
    }
    return out;
}

/// Multiplicities of the symmetric group simples in the restriction of the
/// cell module to the span of permutation diagrams, solved from characters.
template <class K>
std::map<Partition, long> sym_restriction_multiplicities(CellContext<K>& ctx, int n,
                                                         const Partition& lambda) {
    const CellModule<K>& m = ctx.cell(n, lambda);
    auto types = partitions_of(n); // cycle types
    // one permutation diagram per cycle type
    std::vector<BrauerDiagram> reps;
    for (auto& ct : types) {
        std::vector<int> w(n);
        int pos = 0;
        for (int part : ct) {
            for (int t = 0; t < part; ++t) w[pos + t] = pos + (t + 1) % part;
            pos += part;
        }
        BrauerDiagram d;
        d.src = d.tgt = n;
        for (int q = 0; q < n; ++q) d.pairs.push_back({q, n + w[q]});
        d.canonicalize();
        reps.push_back(std::move(d));
    }
    auto shapes = partitions_of(n);
    Matrix<K> chi(types.size(), shapes.size());
    for (std::size_t s = 0; s < shapes.size(); ++s) {
        const SpechtModule<K>& sp = ctx.specht(shapes[s]);
        for (std::size_t t = 0; t < types.size(); ++t) {
            auto perm = as_permutation(reps[t]);
            chi(t, s) = sp.permutation_action(*perm).trace();
        }
    }
    std::vector<K> target;
    for (auto& r : reps) target.push_back(trace_diagram(m, r));
    std::vector<K> x;
    bool unique = false;
    if (!solve(chi, target, x, &unique) || !unique)
        throw std::runtime_error("symmetric group character system is singular");
    std::map<Partition, long> out;
    for (std::size_t s = 0; s < shapes.size(); ++s) {
        long v = to_long(x[s]);
        if (v) out[shapes[s]] = v;
    }
    return out;
}

} // namespace peri
