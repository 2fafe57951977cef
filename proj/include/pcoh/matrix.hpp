#pragma once

#include "pcoh/fields.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace pcoh {

/// Dense row-major matrix over a fixed field instance.
template <class F>
class Matrix {
public:
    using Element = typename F::Element;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Element{}) {}

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Element& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Element& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<Element> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Element> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void set_row(std::size_t r, const std::vector<Element>& v) {
        if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
        for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
    }
    std::vector<Element> row_vec(std::size_t r) const {
        return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
    }

    bool is_zero() const {
        for (const auto& e : data_)
            if (!field_.is_zero(e)) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<Element> data_;
};

template <class F>
void check_same_field(const F& a, const F& b) {
    if (!(a == b)) throw std::invalid_argument("field mismatch");
}

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
    check_same_field(a.field(), b.field());
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    const F& f = a.field();
    Matrix<F> out(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a.at(i, k);
            if (f.is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out.at(i, j) = f.add(out.at(i, j), f.mul(aik, b.at(k, j)));
        }
    return out;
}

template <class F>
struct RrefResult {
    Matrix<F> echelon;               // reduced row echelon form, zero rows trimmed
    std::vector<std::size_t> pivots; // pivot column per echelon row, strictly increasing
    std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form (Gauss-Jordan). The result is the canonical basis
/// of the row space: every subspace has exactly one RREF, so equality of
/// subspaces is equality of echelon matrices.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
    const F& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && f.is_zero(m.at(pr, c))) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t k = c; k < cols; ++k) std::swap(m.at(pr, k), m.at(r, k));
        // normalize pivot row
        if (!f.is_one(m.at(r, c))) {
            const auto inv = f.div(f.one(), m.at(r, c));
            for (std::size_t k = c; k < cols; ++k) m.at(r, k) = f.mul(m.at(r, k), inv);
        }
        // clear the column everywhere else
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || f.is_zero(m.at(i, c))) continue;
            const auto factor = m.at(i, c);
            for (std::size_t k = c; k < cols; ++k)
                m.at(i, k) = f.sub(m.at(i, k), f.mul(factor, m.at(r, k)));
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix<F> ech(f, pivots.size(), cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t c = 0; c < cols; ++c) ech.at(i, c) = m.at(i, c);
    return {std::move(ech), std::move(pivots)};
}

namespace detail {

// Fraction-free integer elimination with per-row gcd clearing; rank only.
// Row scaling by nonzero integers never changes the rank, and the gcd step
// keeps entry growth tame on incidence-style matrices.
inline std::size_t integer_rank(std::vector<std::vector<BigInt>> rows) {
    using boost::multiprecision::gcd;
    const std::size_t n = rows.size();
    const std::size_t cols = n == 0 ? 0 : rows[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < n; ++c) {
        std::size_t pr = rank;
        while (pr < n && rows[pr][c] == 0) ++pr;
        if (pr == n) continue;
        std::swap(rows[pr], rows[rank]);
        const auto& piv = rows[rank];
        for (std::size_t i = rank + 1; i < n; ++i) {
            auto& ri = rows[i];
            if (ri[c] == 0) continue;
            const BigInt a = piv[c], b = ri[c];
            BigInt g;
            for (std::size_t k = c; k < cols; ++k) {
                ri[k] = ri[k] * a - piv[k] * b;
                g = gcd(g, ri[k]);  // gcd(0, x) = |x|
            }
            if (g > 1)
                for (std::size_t k = c; k < cols; ++k) ri[k] /= g;
        }
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// Rank of m. Exact for every field; over Q it clears denominators row-wise
/// and runs fraction-free integer elimination instead of rational RREF.
template <class F>
std::size_t exact_rank(const Matrix<F>& m) {
    if constexpr (std::is_same_v<F, RationalField>) {
        using boost::multiprecision::lcm;
        std::vector<std::vector<BigInt>> rows(m.rows(), std::vector<BigInt>(m.cols()));
        for (std::size_t r = 0; r < m.rows(); ++r) {
            BigInt den = 1;
            for (std::size_t c = 0; c < m.cols(); ++c) den = lcm(den, denominator(m.at(r, c)));
            for (std::size_t c = 0; c < m.cols(); ++c)
                rows[r][c] = numerator(m.at(r, c)) * (den / denominator(m.at(r, c)));
        }
        return detail::integer_rank(std::move(rows));
    } else {
        // forward elimination, no normalization needed for a rank count
        Matrix<F> w = m;
        const F& f = w.field();
        const std::size_t rows = w.rows(), cols = w.cols();
        std::size_t rank = 0;
        for (std::size_t c = 0; c < cols && rank < rows; ++c) {
            std::size_t pr = rank;
            while (pr < rows && f.is_zero(w.at(pr, c))) ++pr;
            if (pr == rows) continue;
            if (pr != rank)
                for (std::size_t k = c; k < cols; ++k) std::swap(w.at(pr, k), w.at(rank, k));
            for (std::size_t i = rank + 1; i < rows; ++i) {
                if (f.is_zero(w.at(i, c))) continue;
                const auto factor = f.div(w.at(i, c), w.at(rank, c));
                for (std::size_t k = c; k < cols; ++k)
                    w.at(i, k) = f.sub(w.at(i, k), f.mul(factor, w.at(rank, k)));
            }
            ++rank;
        }
        return rank;
    }
}

}  // namespace pcoh
