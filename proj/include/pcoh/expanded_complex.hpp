#pragma once

#include "pcoh/resolution.hpp"

#include <map>
#include <vector>

namespace pcoh {

/// The cycle complex expanded to vector-space dimensions over the base field:
/// level i has one basis pair (cycle, carrier) per cycle c and carrier vertex
/// v >= vertex(c). The differential keeps the carrier and applies the cycle
/// boundary; the augmentation is the coordinate functional at (x, x).
template <class F>
struct ExpandedComplex {
    struct BasisPair {
        std::size_t cycle;          // index into the level's cycle list
        Poset::Index cycle_vertex;  // vertex of that cycle
        Poset::Index carrier;       // v >= cycle_vertex
    };

    F field;
    Poset::Index base;
    std::vector<std::vector<BasisPair>> levels;
    std::vector<Matrix<F>> diffs;  // diffs[i] maps level i to level i-1; diffs[0] is 0 x dim0
    std::vector<typename F::Element> augmentation;  // functional on level 0

    std::size_t dim(std::size_t i) const { return i < levels.size() ? levels[i].size() : 0; }
};

template <class F>
ExpandedComplex<F> expand_complex(const Resolution<F>& r) {
    const Poset& p = r.poset;
    ExpandedComplex<F> e{r.field, r.base, {}, {}, {}};

    // pairs per level: cycles in stored order, carriers ascending in the
    // linear extension. Lookup maps (cycle, carrier) -> position.
    std::vector<std::map<std::pair<std::size_t, Poset::Index>, std::size_t>> pos(r.levels.size());
    for (std::size_t i = 0; i < r.levels.size(); ++i) {
        std::vector<typename ExpandedComplex<F>::BasisPair> pairs;
        for (std::size_t j = 0; j < r.levels[i].vertex.size(); ++j) {
            const Poset::Index z = r.levels[i].vertex[j];
            for (Poset::Index v : p.topo_order())
                if (p.leq(z, v)) {
                    pos[i][{j, v}] = pairs.size();
                    pairs.push_back({j, z, v});
                }
        }
        e.levels.push_back(std::move(pairs));
    }

    e.diffs.push_back(Matrix<F>(r.field, 0, e.levels[0].size()));
    for (std::size_t i = 1; i < r.levels.size(); ++i) {
        Matrix<F> d(r.field, e.levels[i - 1].size(), e.levels[i].size());
        const Matrix<F>& bd = r.levels[i].boundary;
        for (std::size_t t = 0; t < e.levels[i].size(); ++t) {
            const auto& pr = e.levels[i][t];
            for (std::size_t k = 0; k < bd.rows(); ++k) {
                const auto& a = bd.at(k, pr.cycle);
                if (r.field.is_zero(a)) continue;
                // support vertices sit strictly below vertex(cycle) <= carrier,
                // so the target pair (k, carrier) exists
                d.at(pos[i - 1].at({k, pr.carrier}), t) = a;
            }
        }
        e.diffs.push_back(std::move(d));
    }

    e.augmentation.assign(e.levels[0].size(), typename F::Element{});
    for (std::size_t t = 0; t < e.levels[0].size(); ++t)
        if (e.levels[0][t].carrier == r.base) e.augmentation[t] = r.field.one();
    return e;
}

struct VerifyReport {
    bool chain_ok = true;         // D_i o D_{i+1} = 0 and aug o D_1 = 0
    bool exact_ok = true;         // dim ker D_i = rank D_{i+1} at every inner level
    bool minimal_ok = true;       // rows at stationary pairs (carrier = cycle vertex) vanish
    bool augmentation_ok = true;  // augmentation surjective with kernel = image of D_1

    bool all_ok() const { return chain_ok && exact_ok && minimal_ok && augmentation_ok; }
};

template <class F>
VerifyReport verify_resolution(const ExpandedComplex<F>& e) {
    const F& f = e.field;
    VerifyReport rep;
    const std::size_t L = e.levels.size() - 1;

    for (std::size_t i = 1; i + 1 <= L; ++i)
        if (!multiply(e.diffs[i], e.diffs[i + 1]).is_zero()) rep.chain_ok = false;
    if (L >= 1) {
        // augmentation composed with D_1
        for (std::size_t t = 0; t < e.dim(1) && rep.chain_ok; ++t) {
            auto acc = typename F::Element{};
            for (std::size_t s = 0; s < e.dim(0); ++s)
                acc = f.add(acc, f.mul(e.augmentation[s], e.diffs[1].at(s, t)));
            if (!f.is_zero(acc)) rep.chain_ok = false;
        }
    }

    std::vector<std::size_t> rank(L + 2, 0);
    for (std::size_t i = 1; i <= L; ++i) rank[i] = exact_rank(e.diffs[i]);
    for (std::size_t i = 1; i <= L; ++i)
        if (e.dim(i) - rank[i] != rank[i + 1]) rep.exact_ok = false;

    for (std::size_t i = 1; i <= L; ++i)
        for (std::size_t s = 0; s < e.dim(i - 1); ++s) {
            const auto& pr = e.levels[i - 1][s];
            if (pr.carrier != pr.cycle_vertex) continue;  // only stationary rows must vanish
            for (std::size_t t = 0; t < e.dim(i); ++t)
                if (!f.is_zero(e.diffs[i].at(s, t))) rep.minimal_ok = false;
        }

    bool aug_onto = false;
    for (const auto& a : e.augmentation)
        if (!f.is_zero(a)) aug_onto = true;
    rep.augmentation_ok = aug_onto && (e.dim(0) - 1 == rank[1]);

    return rep;
}

}  // namespace pcoh
