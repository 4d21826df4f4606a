#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coxwitness/cyclotomic.hpp"
#include "coxwitness/rational.hpp"

namespace coxwitness {

/// Dense row-major matrix over an exact field (Rational or CycloNumber).
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("matrix shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x.is_zero())
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (!b(k, j).is_zero())
                        r(i, j) += x * b(k, j);
            }
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b)
    {
        Matrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i)
            r.data_[i] -= b.data_[i];
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero())
            ++p;
        if (p == m.rows())
            continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(r, j));
        T inv = T(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero())
                continue;
            T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!m(r, j).is_zero())
                    m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m)
{
    return rref(m).size();
}

/// Basis of {v : m v = 0}, one vector per free column.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m)
{
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        std::vector<T> v(m.cols(), T(0));
        v[f] = T(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class T>
T determinant(Matrix<T> m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    T det(1);
    std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero())
            ++p;
        if (p == n)
            return T(0);
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        T inv = T(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero())
                continue;
            T f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

/// Some X with a·X = b, or nullopt if the system is inconsistent.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.rows() != b.rows())
        throw std::invalid_argument("solve: row count mismatch");
    Matrix<T> aug(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j)
            aug(i, a.cols() + j) = b(i, j);
    }
    auto pivots = rref(aug);
    Matrix<T> x(a.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= a.cols())
            return std::nullopt;
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(pivots[r], j) = aug(r, a.cols() + j);
    }
    return x;
}

/// Reduction of cyclotomic numbers of order dividing `order` into F_p for a
/// prime p ≡ 1 (mod order), sending ζ_order to a fixed primitive root. Ranks
/// computed through it are lower bounds for the rank over ℚ(ζ_order).
class ModularImage {
public:
    /// `index` selects among several admissible primes (0 = largest).
    explicit ModularImage(int order, int index = 0);

    std::uint64_t prime() const { return p_; }
    int order() const { return order_; }
    /// Throws std::domain_error if a denominator vanishes mod p.
    std::uint64_t reduce(const Rational& r) const;
    std::uint64_t reduce(const CycloNumber& c) const;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p_ - b) % p_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const
    {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;

private:
    std::uint64_t p_ = 0;
    int order_ = 1;
    std::vector<std::uint64_t> root_powers_;  // g^k for k < order
};

/// Rank over F_p of a row-major rows×cols matrix (entries already reduced).
std::size_t modular_rank(const ModularImage& f, std::vector<std::uint64_t> entries, std::size_t rows,
                         std::size_t cols);

}  // namespace coxwitness
