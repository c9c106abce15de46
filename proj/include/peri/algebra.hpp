#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "peri/diagrams.hpp"
#include "peri/scalars.hpp"
#include "peri/util.hpp"

namespace peri {

/// Formal linear combination of Brauer diagrams in a fixed Hom-space.
/// Zero coefficients are never stored.
template <class K>
struct Expression {
    int src = 0, tgt = 0;
    std::map<BrauerDiagram, K> terms;

    static Expression zero(int src, int tgt) { return Expression{src, tgt, {}}; }
    static Expression of(const BrauerDiagram& d, K c = K(1)) {
        Expression e{d.src, d.tgt, {}};
        e.add(d, c);
        return e;
    }
    static Expression of(const SignedDiagram& s) {
        if (s.is_zero()) return zero(0, 0); // arity fixed by caller context
        return of(s.diagram, K(s.sign));
    }

    void add(const BrauerDiagram& d, const K& c) {
        if (is_zero(c)) return;
        auto it = terms.find(d);
        if (it == terms.end()) {
            terms.emplace(d, c);
        } else {
            it->second += c;
            if (is_zero(it->second)) terms.erase(it);
        }
    }

    bool empty() const { return terms.empty(); }

    friend bool operator==(const Expression& a, const Expression& b) {
        return a.terms == b.terms; // arities of stored diagrams agree by construction
    }
    friend Expression operator+(const Expression& a, const Expression& b) {
        Expression r = a;
        for (auto& [d, c] : b.terms) r.add(d, c);
        return r;
    }
    friend Expression operator-(const Expression& a, const Expression& b) {
        Expression r = a;
        for (auto& [d, c] : b.terms) r.add(d, -c);
        return r;
    }
    Expression scaled(const K& s) const {
        Expression r = zero(src, tgt);
        if (is_zero(s)) return r;
        for (auto& [d, c] : terms) r.add(d, c * s);
        return r;
    }
};

/// Bilinear extension of diagram composition: x o y.
template <class K>
Expression<K> multiply(const Expression<K>& x, const Expression<K>& y) {
    if (x.src != y.tgt) throw std::runtime_error("multiply: arity mismatch");
    Expression<K> r = Expression<K>::zero(y.src, x.tgt);
    for (auto& [dx, cx] : x.terms)
        for (auto& [dy, cy] : y.terms) {
            SignedDiagram s = compose(dx, dy);
            if (!s.is_zero()) r.add(s.diagram, cx * cy * K(s.sign));
        }
    return r;
}

template <class K>
Expression<K> identity_expr(int n) {
    return Expression<K>::of(identity_diagram(n));
}

/// Linear extension of the flip anti-equivalence.
template <class K>
Expression<K> flip_expr(const Expression<K>& x) {
    Expression<K> r = Expression<K>::zero(x.tgt, x.src);
    for (auto& [d, c] : x.terms) {
        SignedDiagram f = flip(d);
        r.add(f.diagram, c * K(f.sign));
    }
    return r;
}

/// Jucys-Murphy element x_i in A_n; x_1 = 0.
template <class K>
Expression<K> jm_element(int i, int n) {
    Expression<K> e = Expression<K>::zero(n, n);
    for (int j = 1; j < i; ++j) {
        e.add(transposition(j, i, n), K(1));
        e.add(bar_transposition(j, i, n), K(1));
    }
    return e;
}

/// The nilpotent x generating the kernel of Ac_2* -> Ac_0* (n even).
template <class K>
Expression<K> nilpotent_x(int n) {
    if (n < 4 || n % 2) throw std::runtime_error("nilpotent_x: even n >= 4 required");
    BrauerDiagram first, second;
    first.src = first.tgt = n;
    first.pairs.push_back({0, n + 0});
    first.pairs.push_back({n - 1, n + 1});
    for (int q = 1; q + 1 < n - 1; q += 2) first.pairs.push_back({q, q + 1});
    for (int q = 2; q < n; q += 2) first.pairs.push_back({n + q, n + q + 1});
    first.canonicalize();
    second.src = second.tgt = n;
    second.pairs.push_back({0, n + 2});
    second.pairs.push_back({n - 1, n + 3});
    for (int q = 1; q + 1 < n - 1; q += 2) second.pairs.push_back({q, q + 1});
    second.pairs.push_back({n + 0, n + 1});
    for (int q = 4; q < n; q += 2) second.pairs.push_back({n + q, n + q + 1});
    second.canonicalize();
    Expression<K> e = Expression<K>::zero(n, n);
    e.add(first, K(1));
    e.add(second, K(1));
    return e;
}

/// Theta = prod_{2<=i<j<=n} (1 - (x_i - x_j)^2), with Theta = 0 for n = 2.
/// The n = 5 expansion is the heaviest symbolic product here, so cache it.
template <class K>
const Expression<K>& theta(int n) {
    static std::map<int, Expression<K>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    Expression<K> t = identity_expr<K>(n);
    if (n <= 2) {
        t = Expression<K>::zero(n, n);
    } else {
        for (int i = 2; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Expression<K> diff = jm_element<K>(i, n) - jm_element<K>(j, n);
                Expression<K> factor = identity_expr<K>(n) - multiply(diff, diff);
                t = multiply(t, factor);
            }
    }
    return cache.emplace(n, std::move(t)).first->second;
}

inline long dim_A(int n) {
    long r = 1;
    for (int k = 2 * n - 1; k > 1; k -= 2) r *= k;
    return r;
}

/// Element of the cover algebra C_n = (+)_{i,j} Hom(i,j): a block per
/// (source, target) pair of arities from {n, n-2, ...}. Blocks compose where
/// the arities match and multiply to zero otherwise.
template <class K>
struct CategoryElement {
    int n = 0;
    std::map<std::pair<int, int>, Expression<K>> blocks; // keyed by (src, tgt)

    static CategoryElement unit(int n) {
        CategoryElement e;
        e.n = n;
        for (int i = n; i >= 0; i -= 2) e.blocks[{i, i}] = identity_expr<K>(i);
        return e;
    }
    static CategoryElement of(int n, const Expression<K>& x) {
        CategoryElement e;
        e.n = n;
        if (!x.empty()) e.blocks[{x.src, x.tgt}] = x;
        return e;
    }

    void prune() {
        for (auto it = blocks.begin(); it != blocks.end();)
            it = it->second.empty() ? blocks.erase(it) : std::next(it);
    }

    friend bool operator==(const CategoryElement& a, const CategoryElement& b) {
        return a.n == b.n && a.blocks == b.blocks;
    }
    friend CategoryElement operator+(const CategoryElement& a, const CategoryElement& b) {
        CategoryElement r = a;
        for (auto& [key, x] : b.blocks) {
            auto it = r.blocks.find(key);
            if (it == r.blocks.end())
                r.blocks.emplace(key, x);
            else
                it->second = it->second + x;
        }
        r.prune();
        return r;
    }
    friend CategoryElement operator*(const CategoryElement& a, const CategoryElement& b) {
        CategoryElement r;
        r.n = a.n;
        for (auto& [kb, y] : b.blocks)
            for (auto& [ka, x] : a.blocks) {
                if (ka.first != kb.second) continue; // x o y needs src(x) = tgt(y)
                auto key = std::make_pair(kb.first, ka.second);
                Expression<K> prod = multiply(x, y);
                auto it = r.blocks.find(key);
                if (it == r.blocks.end())
                    r.blocks.emplace(key, std::move(prod));
                else
                    it->second = it->second + prod;
            }
        r.prune();
        return r;
    }
};

/// Arities appearing in C_n: n, n-2, ..., down to 0 or 1.
inline std::vector<int> arity_set(int n) {
    std::vector<int> js;
    for (int i = n; i >= 0; i -= 2) js.push_back(i);
    return js;
}

inline long dim_C(int n) {
    long total = 0;
    for (int i : arity_set(n))
        for (int j : arity_set(n)) {
            if (i + j == 0)
                total += 1;
            else {
                long r = 1;
                for (int k = i + j - 1; k > 1; k -= 2) r *= k;
                total += r;
            }
        }
    return total;
}

struct RelationCheck {
    std::string name;
    bool pass = false;
    std::string witness; // empty on success
};

namespace detail {
template <class K>
void check_eq(std::vector<RelationCheck>& out, const std::string& name,
              const Expression<K>& lhs, const Expression<K>& rhs) {
    RelationCheck c;
    c.name = name;
    c.pass = lhs == rhs;
    if (!c.pass) c.witness = "difference has " + std::to_string((lhs - rhs).terms.size()) + " terms";
    out.push_back(std::move(c));
}
} // namespace detail

/// Theta is central and kills every diagram with a cup from both sides.
template <class K>
std::vector<RelationCheck> theta_checks(int n, unsigned threads = 1) {
    std::vector<RelationCheck> out;
    const Expression<K>& th = theta<K>(n);
    auto basis = hom_basis(n, n);
    std::vector<char> central_ok(basis.size(), 1), annih_ok(basis.size(), 1);
    parallel_for(basis.size(), threads, [&](std::size_t t) {
        auto e = Expression<K>::of(basis[t]);
        auto td = multiply(th, e);
        auto dt = multiply(e, th);
        if (td != dt) central_ok[t] = 0;
        if (cup_count(basis[t]) > 0 && (!td.empty() || !dt.empty())) annih_ok[t] = 0;
    });
    bool central = true, annih = true;
    std::string witc, wita;
    for (std::size_t t = 0; t < basis.size(); ++t) {
        if (!central_ok[t] && central) {
            central = false;
            witc = "basis diagram " + std::to_string(t);
        }
        if (!annih_ok[t] && annih) {
            annih = false;
            wita = "cup diagram " + std::to_string(t);
        }
    }
    out.push_back(RelationCheck{"Theta is central in A_n", central, witc});
    out.push_back(RelationCheck{"Theta annihilates the cup ideal on both sides", annih, wita});
    return out;
}

/// Verify the displayed commutation identities, JM commutativity, the
/// A_{i-1}-centralising property, the eps-sandwich vanishing and the
/// centrality of Theta.
template <class K>
std::vector<RelationCheck> relation_suite(int n, std::uint64_t seed = 2024, unsigned threads = 1) {
    std::vector<RelationCheck> out;
    auto X = [&](int i) { return jm_element<K>(i, n); };
    auto S = [&](int k) { return Expression<K>::of(s_gen(k, n)); };
    auto E = [&](int k) { return Expression<K>::of(epsilon(k, n)); };
    auto I = identity_expr<K>(n);
    using detail::check_eq;

    for (int k = 1; k < n; ++k) {
        auto dk = X(k) - X(k + 1);
        check_eq(out, "eps_k (x_k - x_{k+1}) = eps_k [k=" + std::to_string(k) + "]",
                 multiply(E(k), dk), E(k));
        check_eq(out, "-(x_k - x_{k+1}) eps_k = eps_k [k=" + std::to_string(k) + "]",
                 multiply(dk, E(k)).scaled(K(-1)), E(k));
        check_eq(out, "s_k x_k s_k = x_{k+1} - s_k - eps_k [k=" + std::to_string(k) + "]",
                 multiply(multiply(S(k), X(k)), S(k)), X(k + 1) - S(k) - E(k));
        check_eq(out, "s_k (x_k - x_{k+1}) s_k = -2 s_k - (x_k - x_{k+1}) [k=" + std::to_string(k) + "]",
                 multiply(multiply(S(k), dk), S(k)), S(k).scaled(K(-2)) - dk);
        check_eq(out, "s_k (x_k-x_{k+1})^2 = (x_k-x_{k+1})^2 s_k [k=" + std::to_string(k) + "]",
                 multiply(S(k), multiply(dk, dk)), multiply(multiply(dk, dk), S(k)));
        check_eq(out, "eps_k (x_k-x_{k+1})^2 = eps_k [k=" + std::to_string(k) + "]",
                 multiply(E(k), multiply(dk, dk)), E(k));
        check_eq(out, "(x_k-x_{k+1})^2 eps_k = eps_k [k=" + std::to_string(k) + "]",
                 multiply(multiply(dk, dk), E(k)), E(k));
        auto sum = X(k) + X(k + 1);
        check_eq(out, "s_k (x_k+x_{k+1}) s_k = (x_k+x_{k+1}) - 2 eps_k [k=" + std::to_string(k) + "]",
                 multiply(multiply(S(k), sum), S(k)), sum - E(k).scaled(K(2)));
        check_eq(out, "s_k x_k x_{k+1} = x_k x_{k+1} s_k + x_k eps_k + eps_k x_k [k=" + std::to_string(k) + "]",
                 multiply(S(k), multiply(X(k), X(k + 1))),
                 multiply(multiply(X(k), X(k + 1)), S(k)) + multiply(X(k), E(k)) + multiply(E(k), X(k)));
        for (int l = 1; l <= n; ++l) {
            if (l == k || l == k + 1) continue;
            check_eq(out, "eps_k x_l = x_l eps_k [k=" + std::to_string(k) + ",l=" + std::to_string(l) + "]",
                     multiply(E(k), X(l)), multiply(X(l), E(k)));
            check_eq(out, "s_k x_l = x_l s_k [k=" + std::to_string(k) + ",l=" + std::to_string(l) + "]",
                     multiply(S(k), X(l)), multiply(X(l), S(k)));
        }
    }
    if (n >= 3) {
        check_eq(out, "eps_1 x_3 = 0", multiply(E(1), X(3)), Expression<K>::zero(n, n));
        check_eq(out, "x_3 eps_1 = 0", multiply(X(3), E(1)), Expression<K>::zero(n, n));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            check_eq(out, "[x_" + std::to_string(i) + ", x_" + std::to_string(j) + "] = 0",
                     multiply(X(i), X(j)), multiply(X(j), X(i)));
    // x_i commutes with every basis diagram of A_{i-1}
    for (int i = 3; i <= n; ++i) {
        bool ok = true;
        std::string wit;
        for (auto& d : hom_basis(i - 1, i - 1)) {
            auto e = Expression<K>::of(embed(d, n));
            if (multiply(X(i), e) != multiply(e, X(i))) {
                ok = false;
                wit = "diagram in A_" + std::to_string(i - 1);
                break;
            }
        }
        out.push_back(RelationCheck{"x_" + std::to_string(i) + " centralises A_" + std::to_string(i - 1), ok, wit});
    }
    // eps_k f eps_k = 0 for sampled f in the JM subalgebra
    {
        std::mt19937_64 rng(seed);
        bool ok = true;
        std::string wit;
        for (int trial = 0; trial < 12 && ok; ++trial) {
            Expression<K> f = I;
            int len = 1 + (int)(rng() % 3);
            for (int t = 0; t < len; ++t) f = multiply(f, X(2 + (int)(rng() % (n - 1))));
            for (int k = 1; k < n; ++k)
                if (!multiply(multiply(E(k), f), E(k)).empty()) {
                    ok = false;
                    wit = "k=" + std::to_string(k) + ", trial=" + std::to_string(trial);
                    break;
                }
        }
        out.push_back(RelationCheck{"eps_k f eps_k = 0 on sampled JM monomials", ok, wit});
    }
    for (auto& rep : theta_checks<K>(n, threads)) out.push_back(rep);
    return out;
}

} // namespace peri
