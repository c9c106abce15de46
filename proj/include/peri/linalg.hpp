#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "peri/scalars.hpp"

namespace peri {

/// Dense matrix over an exact field. All eliminations are exact; there is no
/// rounding anywhere in this library.
template <class K>
class Matrix {
public:
    Matrix() : r_(0), c_(0) {}
    Matrix(std::size_t r, std::size_t c) : r_(r), c_(c), a_(r * c, K(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    K& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const K& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        assert(x.r_ == y.r_ && x.c_ == y.c_);
        Matrix m(x.r_, x.c_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) m.a_[i] = x.a_[i] + y.a_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        assert(x.r_ == y.r_ && x.c_ == y.c_);
        Matrix m(x.r_, x.c_);
        for (std::size_t i = 0; i < x.a_.size(); ++i) m.a_[i] = x.a_[i] - y.a_[i];
        return m;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        assert(x.c_ == y.r_);
        Matrix m(x.r_, y.c_);
        for (std::size_t i = 0; i < x.r_; ++i)
            for (std::size_t k = 0; k < x.c_; ++k) {
                const K& v = x(i, k);
                if (is_zero(v)) continue;
                for (std::size_t j = 0; j < y.c_; ++j) {
                    const K& w = y(k, j);
                    if (!is_zero(w)) m(i, j) += v * w;
                }
            }
        return m;
    }
    Matrix operator*(const K& s) const {
        Matrix m(r_, c_);
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
        return m;
    }
    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
    }

    Matrix transposed() const {
        Matrix m(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    bool is_zero_matrix() const {
        for (const K& v : a_)
            if (!is_zero(v)) return false;
        return true;
    }

    K trace() const {
        assert(r_ == c_);
        K t(0);
        for (std::size_t i = 0; i < r_; ++i) t += (*this)(i, i);
        return t;
    }

    std::vector<K> apply(const std::vector<K>& v) const {
        assert(v.size() == c_);
        std::vector<K> w(r_, K(0));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j)
                if (!is_zero((*this)(i, j))) w[i] += (*this)(i, j) * v[j];
        return w;
    }

private:
    std::size_t r_, c_;
    std::vector<K> a_;
};

/// Row echelon form in place; returns pivot columns. Exact field arithmetic,
/// partial pivoting on the first nonzero entry.
template <class K>
std::vector<std::size_t> echelonize(Matrix<K>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && is_zero(m(p, col))) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
        K inv = K(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m(i, col))) continue;
            K f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class K>
std::size_t rank(Matrix<K> m) {
    return echelonize(m).size();
}

/// Basis of the right kernel {x : m x = 0}, as columns of the result.
template <class K>
Matrix<K> kernel(Matrix<K> m) {
    std::vector<std::size_t> piv = echelonize(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (std::size_t c : piv) is_piv[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Matrix<K> ker(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        ker(fc, k) = K(1);
        for (std::size_t r = 0; r < piv.size(); ++r) ker(piv[r], k) = -m(r, fc);
    }
    return ker;
}

/// One solution of m x = b, or empty if inconsistent. `unique` reports whether
/// the solution is the only one.
template <class K>
bool solve(const Matrix<K>& m, const std::vector<K>& b, std::vector<K>& x, bool* unique = nullptr) {
    Matrix<K> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> piv = echelonize(aug);
    for (std::size_t r = 0; r < piv.size(); ++r)
        if (piv[r] == m.cols()) return false; // pivot in the constant column
    x.assign(m.cols(), K(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols());
    if (unique) *unique = piv.size() == m.cols();
    return true;
}

/// Incremental echelon basis of a row space; used for rank computations on
/// large stacked systems without materialising them.
template <class K>
class RowSpace {
public:
    explicit RowSpace(std::size_t width) : width_(width) {}

    /// Reduce `v` against the basis; if independent, insert and return true.
    bool add(std::vector<K> v) {
        assert(v.size() == width_);
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const K& lead = v[pivots_[i]];
            if (!is_zero(lead)) {
                K f = lead;
                for (std::size_t j = 0; j < width_; ++j) v[j] -= f * rows_[i][j];
            }
        }
        std::size_t p = 0;
        while (p < width_ && is_zero(v[p])) ++p;
        if (p == width_) return false;
        K inv = K(1) / v[p];
        for (std::size_t j = 0; j < width_; ++j) v[j] = v[j] * inv;
        // keep basis rows fully reduced against the new pivot
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            K f = rows_[i][p];
            if (!is_zero(f))
                for (std::size_t j = 0; j < width_; ++j) rows_[i][j] -= f * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    bool contains(std::vector<K> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const K& lead = v[pivots_[i]];
            if (!is_zero(lead)) {
                K f = lead;
                for (std::size_t j = 0; j < width_; ++j) v[j] -= f * rows_[i][j];
            }
        }
        for (const K& e : v)
            if (!is_zero(e)) return false;
        return true;
    }

    std::size_t rank() const { return rows_.size(); }

private:
    std::size_t width_;
    std::vector<std::vector<K>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Basis of {X : N_g X = X M_g for every g}. Unknown X is r_N x r_M,
/// vectorised column-major into a kernel computation.
template <class K>
std::vector<Matrix<K>> intertwiner_space(const std::vector<Matrix<K>>& ms,
                                         const std::vector<Matrix<K>>& ns) {
    assert(ms.size() == ns.size());
    std::size_t rm = ms.empty() ? 0 : ms[0].rows();
    std::size_t rn = ns.empty() ? 0 : ns[0].rows();
    std::size_t unknowns = rm * rn;
    std::size_t eqs = ms.size() * unknowns;
    Matrix<K> sys(eqs, unknowns);
    std::size_t row = 0;
    for (std::size_t g = 0; g < ms.size(); ++g) {
        // (N X - X M)_{i,j} = sum_k N_{ik} X_{kj} - sum_k X_{ik} M_{kj}
        for (std::size_t i = 0; i < rn; ++i)
            for (std::size_t j = 0; j < rm; ++j) {
                for (std::size_t k = 0; k < rn; ++k)
                    if (!is_zero(ns[g](i, k))) sys(row, j * rn + k) += ns[g](i, k);
                for (std::size_t k = 0; k < rm; ++k)
                    if (!is_zero(ms[g](k, j))) sys(row, k * rn + i) -= ms[g](k, j);
                ++row;
            }
    }
    Matrix<K> ker = kernel(sys);
    std::vector<Matrix<K>> basis;
    for (std::size_t b = 0; b < ker.cols(); ++b) {
        Matrix<K> x(rn, rm);
        for (std::size_t j = 0; j < rm; ++j)
            for (std::size_t i = 0; i < rn; ++i) x(i, j) = ker(j * rn + i, b);
        basis.push_back(std::move(x));
    }
    return basis;
}

} // namespace peri
