#pragma once

#include "pcoh/matrix.hpp"
#include "pcoh/poset.hpp"

#include <functional>
#include <map>
#include <vector>

namespace pcoh {

/// Abstract simplicial complex; simplices are vertex-index lists kept in a
/// fixed order, bucketed by dimension.
struct SimplicialComplex {
    using Simplex = std::vector<std::size_t>;

    std::vector<std::string> vertex_ids;
    std::vector<std::vector<Simplex>> simplices;

    int top_dimension() const { return static_cast<int>(simplices.size()) - 1; }
    std::size_t count(std::size_t d) const { return d < simplices.size() ? simplices[d].size() : 0; }
    std::size_t total() const {
        std::size_t s = 0;
        for (const auto& bucket : simplices) s += bucket.size();
        return s;
    }
};

/// Order complex: one simplex per nonempty chain. Chains are enumerated by
/// depth-first extension along the linear extension, so each bucket is in
/// lexicographic order of topological positions; vertices inside a simplex
/// are in chain order. Deliberately exhaustive - no dimension cap.
inline SimplicialComplex order_complex(const Poset& p) {
    SimplicialComplex c;
    c.vertex_ids = p.ids();
    std::vector<std::size_t> chain;
    std::function<void(Poset::Index)> grow = [&](Poset::Index v) {
        chain.push_back(v);
        if (chain.size() > c.simplices.size()) c.simplices.resize(chain.size());
        c.simplices[chain.size() - 1].push_back(chain);
        for (std::size_t k = p.topo_pos(v) + 1; k < p.size(); ++k) {
            Poset::Index w = p.topo_order()[k];
            if (p.lt(v, w)) grow(w);
        }
        chain.pop_back();
    };
    for (Poset::Index v : p.topo_order()) grow(v);
    return c;
}

/// delta^n as a matrix: rows = (n+1)-simplices, columns = n-simplices,
/// entry (-1)^i where the row simplex drops its i-th vertex to give the column.
template <class F>
Matrix<F> coboundary_matrix(const SimplicialComplex& c, std::size_t n, F field) {
    const std::size_t rows = c.count(n + 1), cols = c.count(n);
    Matrix<F> d(field, rows, cols);
    if (rows == 0 || cols == 0) return d;
    std::map<SimplicialComplex::Simplex, std::size_t> col;
    for (std::size_t j = 0; j < cols; ++j) col[c.simplices[n][j]] = j;
    for (std::size_t r = 0; r < rows; ++r) {
        const auto& tau = c.simplices[n + 1][r];
        for (std::size_t i = 0; i < tau.size(); ++i) {
            SimplicialComplex::Simplex face;
            face.reserve(tau.size() - 1);
            for (std::size_t k = 0; k < tau.size(); ++k)
                if (k != i) face.push_back(tau[k]);
            const auto it = col.find(face);
            if (it == col.end()) throw std::logic_error("complex not closed under faces");
            const auto sign = field.from_int(i % 2 == 0 ? 1 : -1);
            d.at(r, it->second) = field.add(d.at(r, it->second), sign);
        }
    }
    return d;
}

/// Cochain cohomology dimensions h^0..h^top over the given field.
inline std::vector<int> simplicial_cohomology_dims(const SimplicialComplex& c, const FieldSpec& fs) {
    return with_field(fs, [&](auto field) {
        std::vector<int> out;
        const int top = c.top_dimension();
        std::size_t prev_rank = 0;
        for (int d = 0; d <= top; ++d) {
            const std::size_t rk = exact_rank(coboundary_matrix(c, d, field));
            out.push_back(static_cast<int>(c.count(d) - rk - prev_rank));
            prev_rank = rk;
        }
        return out;
    });
}

/// Reduced cohomology, shifted so [0] is degree -1 (the empty complex gives {1}).
inline std::vector<int> reduced_cohomology_dims(const SimplicialComplex& c, const FieldSpec& fs) {
    return with_field(fs, [&](auto field) {
        std::vector<int> out;
        out.push_back(c.count(0) == 0 ? 1 : 0);  // degree -1: 1 - rank of the unit map
        const int top = c.top_dimension();
        std::size_t prev_rank = c.count(0) == 0 ? 0 : 1;
        for (int d = 0; d <= top; ++d) {
            const std::size_t rk = exact_rank(coboundary_matrix(c, d, field));
            out.push_back(static_cast<int>(c.count(d) - rk - prev_rank));
            prev_rank = rk;
        }
        return out;
    });
}

/// Independent oracle for Ext dimensions from S_x to S_b, x < b: degree i
/// carries the reduced cohomology of the open interval (x, b) in degree i-2.
/// Degree 0 is always 0; an empty interval contributes exactly 1 in degree 1.
inline std::vector<int> interval_betti_oracle(const Poset& p, Poset::Index x, Poset::Index b,
                                              const FieldSpec& fs) {
    if (!p.lt(x, b)) throw std::invalid_argument("interval_betti_oracle requires x < b");
    std::vector<int> out{0};
    auto red = reduced_cohomology_dims(order_complex(p.open_interval(x, b)), fs);
    out.insert(out.end(), red.begin(), red.end());
    return out;
}

}  // namespace pcoh
