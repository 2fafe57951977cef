#pragma once

#include "pcoh/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace pcoh {

/// Which complement basis to pick when splitting V = U (+) C.
/// pivot_first keeps echelon rows of V whose pivot is not a pivot of U;
/// pivot_last does the same after reversing coordinates, preferring vectors
/// supported on late coordinates. Both are deterministic.
enum class ComplementStrategy { pivot_first, pivot_last };

/// Subspace of F^ambient, stored as the RREF of any generating set.
/// The representation is canonical: equal subspaces compare equal member-wise.
template <class F>
class Subspace {
public:
    using Element = typename F::Element;

    Subspace(F field, std::size_t ambient)
        : field_(std::move(field)), ambient_(ambient) {}

    static Subspace span(F field, std::size_t ambient, const std::vector<std::vector<Element>>& gens) {
        Matrix<F> m(field, gens.size(), ambient);
        for (std::size_t i = 0; i < gens.size(); ++i) m.set_row(i, gens[i]);
        auto e = rref(std::move(m));
        Subspace s(field, ambient);
        s.pivots_ = std::move(e.pivots);
        s.rows_.reserve(s.pivots_.size());
        for (std::size_t i = 0; i < s.pivots_.size(); ++i) s.rows_.push_back(e.echelon.row_vec(i));
        return s;
    }

    const F& field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<std::vector<Element>>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Remainder of v after eliminating along the stored echelon rows.
    std::vector<Element> reduce(std::vector<Element> v) const {
        if (v.size() != ambient_) throw std::invalid_argument("vector length mismatch");
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const auto& coeff = v[pivots_[i]];
            if (field_.is_zero(coeff)) continue;
            const auto c = coeff;  // copy: v[pivot] is overwritten below
            for (std::size_t k = pivots_[i]; k < ambient_; ++k)
                v[k] = field_.sub(v[k], field_.mul(c, rows_[i][k]));
        }
        return v;
    }

    bool contains(const std::vector<Element>& v) const {
        auto r = reduce(v);
        return std::all_of(r.begin(), r.end(), [&](const Element& e) { return field_.is_zero(e); });
    }

    bool contains(const Subspace& other) const {
        check_same_field(field_, other.field_);
        if (ambient_ != other.ambient_) throw std::invalid_argument("ambient mismatch");
        return std::all_of(other.rows_.begin(), other.rows_.end(),
                           [&](const auto& r) { return contains(r); });
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
    }

private:
    F field_;
    std::size_t ambient_;
    std::vector<std::vector<Element>> rows_;
    std::vector<std::size_t> pivots_;
};

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
    check_same_field(a.field(), b.field());
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
    auto gens = a.rows();
    gens.insert(gens.end(), b.rows().begin(), b.rows().end());
    return Subspace<F>::span(a.field(), a.ambient(), gens);
}

/// Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry A /\ B on the right.
template <class F>
Subspace<F> subspace_intersection(const Subspace<F>& a, const Subspace<F>& b) {
    check_same_field(a.field(), b.field());
    if (a.ambient() != b.ambient()) throw std::invalid_argument("ambient mismatch");
    const F& f = a.field();
    const std::size_t n = a.ambient();
    Matrix<F> big(f, a.dim() + b.dim(), 2 * n);
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t c = 0; c < n; ++c) {
            big.at(i, c) = a.rows()[i][c];
            big.at(i, n + c) = a.rows()[i][c];
        }
    for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t c = 0; c < n; ++c) big.at(a.dim() + i, c) = b.rows()[i][c];
    auto e = rref(std::move(big));
    std::vector<std::vector<typename F::Element>> gens;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] < n) continue;  // left half nonzero
        auto full = e.echelon.row_vec(i);
        gens.emplace_back(full.begin() + n, full.end());
    }
    return Subspace<F>::span(f, n, gens);
}

/// Vectors of F^ambient supported on the given coordinates.
template <class F>
Subspace<F> coordinate_subspace(F field, std::size_t ambient, const std::vector<std::size_t>& coords) {
    std::vector<std::vector<typename F::Element>> gens;
    gens.reserve(coords.size());
    for (std::size_t c : coords) {
        if (c >= ambient) throw std::invalid_argument("coordinate out of range");
        std::vector<typename F::Element> e(ambient, typename F::Element{});
        e[c] = field.one();
        gens.push_back(std::move(e));
    }
    return Subspace<F>::span(std::move(field), ambient, gens);
}

template <class F>
std::vector<std::vector<typename F::Element>>
complement_basis(const Subspace<F>& inner, const Subspace<F>& outer,
                 ComplementStrategy strategy = ComplementStrategy::pivot_first) {
    check_same_field(inner.field(), outer.field());
    if (inner.ambient() != outer.ambient()) throw std::invalid_argument("ambient mismatch");
    if (!outer.contains(inner)) throw std::invalid_argument("complement_basis: inner not contained in outer");

    if (strategy == ComplementStrategy::pivot_last) {
        auto rev = [&](const Subspace<F>& s) {
            auto gens = s.rows();
            for (auto& g : gens) std::reverse(g.begin(), g.end());
            return Subspace<F>::span(s.field(), s.ambient(), gens);
        };
        auto out = complement_basis(rev(inner), rev(outer), ComplementStrategy::pivot_first);
        for (auto& v : out) std::reverse(v.begin(), v.end());
        return out;
    }

    // pivots of inner's RREF are a subset of outer's; the outer echelon rows
    // with the leftover pivots span a complement (their leading coordinates
    // are zero in inner + the other chosen rows, so independence is immediate)
    std::vector<std::vector<typename F::Element>> out;
    for (std::size_t i = 0; i < outer.dim(); ++i) {
        const std::size_t p = outer.pivots()[i];
        if (!std::binary_search(inner.pivots().begin(), inner.pivots().end(), p))
            out.push_back(outer.rows()[i]);
    }
    return out;
}

/// Canonical basis of the right kernel {v : m v = 0}.
template <class F>
Subspace<F> kernel_basis(const Matrix<F>& m) {
    const F& f = m.field();
    const std::size_t cols = m.cols();
    auto e = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : e.pivots) is_pivot[p] = true;
    std::vector<std::vector<typename F::Element>> gens;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<typename F::Element> v(cols, typename F::Element{});
        v[c] = f.one();
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = f.neg(e.echelon.at(i, c));
        gens.push_back(std::move(v));
    }
    return Subspace<F>::span(f, cols, gens);
}

}  // namespace pcoh
