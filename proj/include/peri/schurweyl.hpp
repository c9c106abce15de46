#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "peri/algebra.hpp"
#include "peri/diagrams.hpp"
#include "peri/linalg.hpp"
#include "peri/scalars.hpp"

namespace peri {

/// Tensor-space model over V = k^{m|m}: u_0..u_{m-1} even, u_m..u_{2m-1} odd,
/// with the odd symmetric form <u_i, u_{m+j}> = delta_ij = <u_{m+i}, u_j>.
/// Diagrams act contravariantly: a diagram in Hom(i,j) becomes an operator
/// V^{tensor j} -> V^{tensor i}, evaluated top-down with Koszul signs.
namespace tensorspace {

inline int parity(int basis_index, int m) { return basis_index < m ? 0 : 1; }
inline int dual_index(int basis_index, int m) {
    return basis_index < m ? basis_index + m : basis_index - m;
}

using Word = std::vector<int>; // tensor word in basis indices, length = #slots

/// A sparse linear map V^{tensor n_in} -> V^{tensor n_out}, stored column-major
/// over input words.
struct SparseOp {
    int m = 1;
    int n_in = 0, n_out = 0;
    std::map<Word, std::map<Word, Rational>> cols; // input word -> output support

    static SparseOp zero(int m, int n_in, int n_out) {
        SparseOp op;
        op.m = m;
        op.n_in = n_in;
        op.n_out = n_out;
        return op;
    }

    void add_entry(const Word& in, const Word& out, const Rational& v) {
        if (is_zero(v)) return;
        auto& c = cols[in][out];
        c += v;
        if (is_zero(c)) {
            cols[in].erase(out);
            if (cols[in].empty()) cols.erase(in);
        }
    }

    friend bool operator==(const SparseOp& a, const SparseOp& b) {
        return a.m == b.m && a.n_in == b.n_in && a.n_out == b.n_out && a.cols == b.cols;
    }

    bool is_zero_op() const { return cols.empty(); }

    SparseOp scaled(const Rational& s) const {
        SparseOp r = zero(m, n_in, n_out);
        if (is_zero(s)) return r;
        r.cols = cols;
        for (auto& [in, col] : r.cols)
            for (auto& [out, v] : col) v *= s;
        return r;
    }

    friend SparseOp operator+(const SparseOp& a, const SparseOp& b) {
        SparseOp r = a;
        for (auto& [in, col] : b.cols)
            for (auto& [out, v] : col) r.add_entry(in, out, v);
        return r;
    }
    friend SparseOp operator-(const SparseOp& a, const SparseOp& b) {
        return a + b.scaled(Rational(-1));
    }

    /// Composition a o b (b applied first).
    friend SparseOp operator*(const SparseOp& a, const SparseOp& b) {
        if (a.n_in != b.n_out) throw std::runtime_error("operator dimensions do not compose");
        SparseOp r = zero(a.m, b.n_in, a.n_out);
        for (auto& [in, bcol] : b.cols)
            for (auto& [mid, bv] : bcol) {
                auto it = a.cols.find(mid);
                if (it == a.cols.end()) continue;
                for (auto& [out, av] : it->second) r.add_entry(in, out, av * bv);
            }
        return r;
    }

    /// Flatten into a dense coordinate vector over all (in, out) pairs of the
    /// ambient space; used for span/rank computations.
    std::vector<Rational> flatten() const {
        long din = 1, dout = 1;
        for (int t = 0; t < n_in; ++t) din *= 2 * m;
        for (int t = 0; t < n_out; ++t) dout *= 2 * m;
        std::vector<Rational> v((std::size_t)(din * dout), Rational(0));
        auto index = [&](const Word& w) {
            long x = 0;
            for (int d : w) x = x * 2 * m + d;
            return x;
        };
        for (auto& [in, col] : cols)
            for (auto& [out, val] : col) v[(std::size_t)(index(in) * dout + index(out))] = val;
        return v;
    }
};

inline void enumerate_words(int m, int len, const std::function<void(const Word&)>& fn) {
    Word w(len, 0);
    for (;;) {
        fn(w);
        int p = len - 1;
        while (p >= 0 && w[p] == 2 * m - 1) w[p--] = 0;
        if (p < 0) return;
        ++w[p];
    }
}

inline SparseOp identity_op(int m, int n) {
    SparseOp op = SparseOp::zero(m, n, n);
    enumerate_words(m, n, [&](const Word& w) { op.add_entry(w, w, Rational(1)); });
    return op;
}

namespace detail {

/// Apply one elementary slice, top-down: the slice sits in Hom(w_lo, w_hi) and
/// maps words of length w_hi to combinations of words of length w_lo.
inline void apply_slice(const Slice& s, int m, const Word& in, const Rational& coef,
                        std::map<Word, Rational>& out) {
    auto add = [&](Word w, const Rational& v) {
        auto& c = out[w];
        c += v;
        if (is_zero(c)) out.erase(w);
    };
    int p = s.pos;
    if (s.kind == Slice::Cross) {
        int sgn = parity(in[p], m) * parity(in[p + 1], m);
        Word w = in;
        std::swap(w[p], w[p + 1]);
        add(w, sgn ? -coef : coef);
    } else if (s.kind == Slice::Cup) {
        // evaluate the form on slots p, p+1 of the input
        if (in[p + 1] != dual_index(in[p], m)) return;
        int pre = 0;
        for (int q = 0; q < p; ++q) pre ^= parity(in[q], m);
        Word w;
        w.reserve(in.size() - 2);
        for (int q = 0; q < (int)in.size(); ++q)
            if (q != p && q != p + 1) w.push_back(in[q]);
        add(w, pre ? -coef : coef);
    } else {
        // insert the canonical element T at slots p, p+1
        int pre = 0;
        for (int q = 0; q < p; ++q) pre ^= parity(in[q], m);
        for (int l = 0; l < 2 * m; ++l) {
            Word w;
            w.reserve(in.size() + 2);
            for (int q = 0; q < p; ++q) w.push_back(in[q]);
            w.push_back(l);
            w.push_back(dual_index(l, m));
            for (int q = p; q < (int)in.size(); ++q) w.push_back(in[q]);
            Rational v = coef;
            if (parity(l, m)) v = -v; // T carries (-1)^{|u_l|}
            if (pre) v = -v;          // Koszul prefix: T is odd
            add(w, v);
        }
    }
}

} // namespace detail

/// The contravariant tensor functor on a basis diagram.
inline SparseOp pi_diagram(const BrauerDiagram& d, int m) {
    auto [sgn, slices] = slice_factorization(d);
    SparseOp op = SparseOp::zero(m, d.tgt, d.src);
    enumerate_words(m, d.tgt, [&](const Word& start) {
        std::map<Word, Rational> cur;
        cur[start] = Rational(sgn);
        for (int t = (int)slices.size() - 1; t >= 0; --t) {
            std::map<Word, Rational> next;
            for (auto& [w, v] : cur) detail::apply_slice(slices[t], m, w, v, next);
            cur = std::move(next);
            if (cur.empty()) break;
        }
        for (auto& [w, v] : cur) op.add_entry(start, w, v);
    });
    return op;
}

// ---- the periplectic Lie superalgebra and its dual basis ----

struct GlElement {
    Matrix<Rational> mat; // 2m x 2m
    int parity = 0;
};

inline Rational supertrace(const Matrix<Rational>& x, int m) {
    Rational t(0);
    for (int i = 0; i < m; ++i) t += x(i, i);
    for (int i = m; i < 2 * m; ++i) t -= x(i, i);
    return t;
}

/// Basis of pe(m): block matrices [[A,B],[C,-A^t]] with B symmetric and C
/// antisymmetric. Evens first, then B-type, then C-type.
inline std::vector<GlElement> pe_basis(int m) {
    std::vector<GlElement> out;
    for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
            GlElement e{Matrix<Rational>(2 * m, 2 * m), 0};
            e.mat(r, s) = 1;
            e.mat(m + s, m + r) = -1;
            out.push_back(std::move(e));
        }
    for (int r = 0; r < m; ++r)
        for (int s = r; s < m; ++s) {
            GlElement e{Matrix<Rational>(2 * m, 2 * m), 1};
            e.mat(r, m + s) = 1;
            if (s != r) e.mat(s, m + r) = 1;
            out.push_back(std::move(e));
        }
    for (int r = 0; r < m; ++r)
        for (int s = r + 1; s < m; ++s) {
            GlElement e{Matrix<Rational>(2 * m, 2 * m), 1};
            e.mat(m + r, s) = 1;
            e.mat(m + s, r) = -1;
            out.push_back(std::move(e));
        }
    return out;
}

/// Basis of the (-1)-eigenspace of theta: [[A,B],[C,A^t]] with B antisymmetric
/// and C symmetric.
inline std::vector<GlElement> pe_complement_basis(int m) {
    std::vector<GlElement> out;
    for (int r = 0; r < m; ++r)
        for (int s = 0; s < m; ++s) {
            GlElement e{Matrix<Rational>(2 * m, 2 * m), 0};
            e.mat(r, s) = 1;
            e.mat(m + s, m + r) = 1;
            out.push_back(std::move(e));
        }
    for (int r = 0; r < m; ++r)
        for (int s = r + 1; s < m; ++s) {
            GlElement e{Matrix<Rational>(2 * m, 2 * m), 1};
            e.mat(r, m + s) = 1;
            e.mat(s, m + r) = -1;
            out.push_back(std::move(e));
        }
    for (int r = 0; r < m; ++r)
        for (int s = r; s < m; ++s) {
            GlElement e{Matrix<Rational>(2 * m, 2 * m), 1};
            e.mat(m + r, s) = 1;
            if (s != r) e.mat(m + s, r) = 1;
            out.push_back(std::move(e));
        }
    return out;
}

/// Killing-dual basis: X_a^dagger in the (-1)-eigenspace with
/// STr(X_a X_b^dagger) = delta_ab.
inline std::vector<GlElement> pe_dagger_basis(int m) {
    auto xs = pe_basis(m);
    auto ys = pe_complement_basis(m);
    std::size_t n = xs.size();
    Matrix<Rational> gram(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            gram(a, b) = supertrace(xs[a].mat * ys[b].mat, m);
    // X_a^dagger = sum_b c_{ba} Y_b with gram * c_{.a} = e_a
    std::vector<GlElement> out;
    for (std::size_t a = 0; a < n; ++a) {
        std::vector<Rational> rhs(n, Rational(0)), coef;
        rhs[a] = 1;
        if (!solve(gram, rhs, coef))
            throw std::runtime_error("degenerate pairing between pe(m) and its complement");
        GlElement dag{Matrix<Rational>(2 * m, 2 * m), xs[a].parity};
        for (std::size_t b = 0; b < n; ++b)
            if (!is_zero(coef[b])) dag.mat = dag.mat + ys[b].mat * coef[b];
        out.push_back(std::move(dag));
    }
    return out;
}

/// Apply single-slot operators at the given slots (ascending), rightmost slot
/// first, with Koszul prefixes from the parities currently left of each slot.
inline SparseOp multi_site_op(int m, int n, std::vector<std::tuple<int, const GlElement*>> sites) {
    std::sort(sites.begin(), sites.end(),
              [](auto& a, auto& b) { return std::get<0>(a) > std::get<0>(b); });
    SparseOp op = SparseOp::zero(m, n, n);
    enumerate_words(m, n, [&](const Word& start) {
        std::map<Word, Rational> cur;
        cur[start] = Rational(1);
        for (auto& [slot, g] : sites) {
            std::map<Word, Rational> next;
            for (auto& [w, v] : cur) {
                int pre = 0;
                if (g->parity)
                    for (int q = 0; q < slot; ++q) pre ^= parity(w[q], m);
                for (int r = 0; r < 2 * m; ++r) {
                    const Rational& entry = g->mat(r, w[slot]);
                    if (is_zero(entry)) continue;
                    Word w2 = w;
                    w2[slot] = r;
                    Rational val = v * entry;
                    if (pre) val = -val;
                    auto& c = next[w2];
                    c += val;
                    if (is_zero(c)) next.erase(w2);
                }
            }
            cur = std::move(next);
            if (cur.empty()) break;
        }
        for (auto& [w, v] : cur) op.add_entry(start, w, v);
    });
    return op;
}

/// Diagonal action of one pe(m) element on V^{tensor n}.
inline SparseOp diagonal_action(const GlElement& g, int n, int m) {
    SparseOp total = SparseOp::zero(m, n, n);
    for (int slot = 0; slot < n; ++slot)
        total = total + multi_site_op(m, n, {{slot, &g}});
    return total;
}

struct PeContext {
    int m;
    std::vector<GlElement> basis;   // X_1..X_{m^2} of pe(m)
    std::vector<GlElement> daggers; // Killing duals in the (-1)-eigenspace

    explicit PeContext(int m_) : m(m_), basis(pe_basis(m_)), daggers(pe_dagger_basis(m_)) {}
};

/// sigma_k as the basis sum over pe(m) and its dagger complement; equals the
/// image of the crossing s_k.
inline SparseOp sigma_op(const PeContext& pe, int k, int n) {
    int m = pe.m;
    SparseOp total = SparseOp::zero(m, n, n);
    for (std::size_t a = 0; a < pe.basis.size(); ++a) {
        total = total + multi_site_op(m, n, {{k - 1, &pe.daggers[a]}, {k, &pe.basis[a]}});
        // the dagger of a dagger element is (-1)^{parity} times the original
        GlElement back = pe.basis[a];
        if (back.parity) back.mat = back.mat * Rational(-1);
        total = total + multi_site_op(m, n, {{k - 1, &back}, {k, &pe.daggers[a]}});
    }
    return total;
}

/// c_k as the basis sum over pe(m) only; equals the image of epsilon_k.
inline SparseOp c_op(const PeContext& pe, int k, int n) {
    int m = pe.m;
    SparseOp total = SparseOp::zero(m, n, n);
    for (std::size_t a = 0; a < pe.basis.size(); ++a) {
        SparseOp t1 = multi_site_op(m, n, {{k - 1, &pe.basis[a]}, {k, &pe.daggers[a]}});
        if (pe.basis[a].parity) t1 = t1.scaled(Rational(-1));
        SparseOp t2 = multi_site_op(m, n, {{k - 1, &pe.daggers[a]}, {k, &pe.basis[a]}});
        total = total + t1 - t2;
    }
    return total;
}

/// xi_k = 2 sum_a (-1)^{|X_a|} Delta_{k-1}(X_a) (x) X_a^dagger (x) Id.
inline SparseOp xi_op(const PeContext& pe, int k, int n) {
    int m = pe.m;
    SparseOp total = SparseOp::zero(m, n, n);
    for (std::size_t a = 0; a < pe.basis.size(); ++a)
        for (int l = 0; l < k - 1; ++l) {
            SparseOp t = multi_site_op(m, n, {{l, &pe.basis[a]}, {k - 1, &pe.daggers[a]}});
            if (pe.basis[a].parity) t = t.scaled(Rational(-1));
            total = total + t;
        }
    return total.scaled(Rational(2));
}

/// Linear extension of the tensor functor to expressions.
inline SparseOp pi_expression(const Expression<Rational>& e, int m) {
    SparseOp total = SparseOp::zero(m, e.tgt, e.src);
    for (auto& [d, c] : e.terms) total = total + pi_diagram(d, m).scaled(c);
    return total;
}

/// Dimension of the span of the operator images of all basis diagrams of A_n.
inline std::size_t faithfulness_rank(int n, int m) {
    long dim = 1;
    for (int t = 0; t < 2 * n; ++t) dim *= 2 * m;
    RowSpace<Rational> span((std::size_t)dim);
    for (auto& d : hom_basis(n, n)) span.add(pi_diagram(d, m).flatten());
    return span.rank();
}

} // namespace tensorspace
} // namespace peri
