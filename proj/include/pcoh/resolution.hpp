#pragma once

#include "pcoh/poset.hpp"
#include "pcoh/subspace.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace pcoh {

/// How the per-vertex kernel slices are computed. Both give identical output;
/// `definition` follows the subspace formulas literally (intersection with a
/// coordinate subspace, sum over cover predecessors), `incremental` solves a
/// constrained system against the kernel basis and reuses the cycles already
/// chosen at lower vertices. `definition` is the cross-check, `incremental`
/// the default.
enum class SubspaceMode { incremental, definition };

struct ResolutionOptions {
    ComplementStrategy strategy = ComplementStrategy::pivot_first;
    SubspaceMode mode = SubspaceMode::incremental;
    std::optional<std::size_t> max_level;
};

/// One level of the cycle complex: cycle j sits at vertex[j] and its boundary
/// is column j of `boundary`, written over the previous level's cycles.
template <class F>
struct CycleLevel {
    std::vector<Poset::Index> vertex;  // grouped by ascending topological position
    Matrix<F> boundary;                // (previous level size) x (this level size)
};

template <class F>
struct Resolution {
    Poset poset;
    Poset::Index base;
    F field;
    std::vector<CycleLevel<F>> levels;
    bool terminated = true;  // false only when max_level cut the recursion short
};

/// The cycle recursion for the simple module at x. Level 0 is x itself,
/// level 1 the cover successors of x; level i+1 picks, vertex by vertex in
/// topological order, a complement B_z inside
///   V_z = { w in ker d_i : all support vertices of w lie strictly below z }
/// against W_z = sum of the V at the cover predecessors of z. The recursion
/// stops when a level comes out empty (guaranteed at the poset height).
template <class F>
Resolution<F> compute_cycles(const Poset& p, Poset::Index x, F field, ResolutionOptions opts = {}) {
    using Element = typename F::Element;
    if (x >= p.size()) throw std::invalid_argument("base vertex out of range");

    Resolution<F> r{p, x, field, {}, true};
    r.levels.push_back({{x}, Matrix<F>(field, 0, 1)});
    if (opts.max_level && *opts.max_level == 0) {
        r.terminated = p.successors(x).empty();
        return r;
    }
    const auto& succ = p.successors(x);
    if (succ.empty()) return r;  // S_x is projective
    {
        CycleLevel<F> l1{succ, Matrix<F>(field, 1, succ.size())};
        for (std::size_t j = 0; j < succ.size(); ++j) l1.boundary.at(0, j) = field.one();
        r.levels.push_back(std::move(l1));
    }

    const std::size_t guard = p.height() + 2;
    for (;;) {
        const CycleLevel<F>& cur = r.levels.back();
        const std::size_t amb = cur.vertex.size();
        Subspace<F> K = kernel_basis(cur.boundary);
        if (K.dim() == 0) break;
        if (opts.max_level && r.levels.size() - 1 >= *opts.max_level) {
            r.terminated = false;
            break;
        }
        if (r.levels.size() > guard) throw std::logic_error("cycle recursion exceeded height bound");

        std::vector<std::vector<Element>> chosen;
        std::vector<Poset::Index> chosen_vertex;
        std::vector<std::optional<Subspace<F>>> vz;  // per vertex, definition mode only
        if (opts.mode == SubspaceMode::definition) vz.assign(p.size(), std::nullopt);

        for (Poset::Index z : p.topo_order()) {
            std::vector<std::size_t> allowed;
            for (std::size_t j = 0; j < amb; ++j)
                if (p.lt(cur.vertex[j], z)) allowed.push_back(j);

            if (opts.mode == SubspaceMode::definition) {
                Subspace<F> V = subspace_intersection(K, coordinate_subspace(field, amb, allowed));
                Subspace<F> W(field, amb);
                for (Poset::Index q : p.predecessors(z)) W = subspace_sum(W, *vz[q]);
                for (auto& w : complement_basis(W, V, opts.strategy)) {
                    chosen.push_back(std::move(w));
                    chosen_vertex.push_back(z);
                }
                vz[z] = std::move(V);
                continue;
            }

            // incremental mode
            if (allowed.empty()) continue;  // V_z = 0
            // W_z: span of the cycles already chosen this level at vertices below z
            std::vector<std::vector<Element>> wgens;
            for (std::size_t t = 0; t < chosen.size(); ++t)
                if (p.lt(chosen_vertex[t], z)) wgens.push_back(chosen[t]);
            Subspace<F> W = Subspace<F>::span(field, amb, wgens);
            if (W.dim() == K.dim()) continue;  // W <= V_z <= K forces V_z = W

            Subspace<F> V = [&] {
                if (allowed.size() == amb) return K;
                // kernel vectors vanishing on the forbidden coordinates: solve
                // for coefficient rows against K's basis, then map back
                std::vector<std::size_t> forbidden;
                std::vector<bool> ok(amb, false);
                for (std::size_t j : allowed) ok[j] = true;
                for (std::size_t j = 0; j < amb; ++j)
                    if (!ok[j]) forbidden.push_back(j);
                Matrix<F> m(field, forbidden.size(), K.dim());
                for (std::size_t a = 0; a < forbidden.size(); ++a)
                    for (std::size_t i = 0; i < K.dim(); ++i)
                        m.at(a, i) = K.rows()[i][forbidden[a]];
                Subspace<F> coeff = kernel_basis(m);
                std::vector<std::vector<Element>> gens;
                gens.reserve(coeff.dim());
                for (const auto& crow : coeff.rows()) {
                    std::vector<Element> v(amb, Element{});
                    for (std::size_t i = 0; i < K.dim(); ++i) {
                        if (field.is_zero(crow[i])) continue;
                        for (std::size_t j = 0; j < amb; ++j)
                            v[j] = field.add(v[j], field.mul(crow[i], K.rows()[i][j]));
                    }
                    gens.push_back(std::move(v));
                }
                return Subspace<F>::span(field, amb, gens);
            }();
            for (auto& w : complement_basis(W, V, opts.strategy)) {
                chosen.push_back(std::move(w));
                chosen_vertex.push_back(z);
            }
        }

        if (chosen.empty()) break;  // every later level is empty too
        CycleLevel<F> next{std::move(chosen_vertex), Matrix<F>(field, amb, chosen.size())};
        for (std::size_t j = 0; j < chosen.size(); ++j)
            for (std::size_t k = 0; k < amb; ++k) next.boundary.at(k, j) = chosen[j][k];
        r.levels.push_back(std::move(next));
    }
    return r;
}

/// counts[i][b] = number of level-i cycles at vertex b; zero beyond the table.
struct BettiTable {
    std::vector<std::vector<int>> counts;

    int at(std::size_t i, std::size_t b) const {
        if (i >= counts.size()) return 0;
        return counts[i].at(b);
    }
    std::size_t level_count() const { return counts.size(); }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

template <class F>
BettiTable betti(const Resolution<F>& r) {
    BettiTable t;
    t.counts.assign(r.levels.size(), std::vector<int>(r.poset.size(), 0));
    for (std::size_t i = 0; i < r.levels.size(); ++i)
        for (Poset::Index v : r.levels[i].vertex) ++t.counts[i][v];
    return t;
}

/// dim ker d_i minus rank d_{i+1}: zero exactly when the cycle complex is
/// exact at level i.
template <class F>
std::size_t nonexactness_gap(const Resolution<F>& r, std::size_t i) {
    if (i + 1 >= r.levels.size() && !r.terminated)
        throw std::out_of_range("level beyond the computed (truncated) resolution");
    if (i >= r.levels.size()) return 0;
    const auto& bd = r.levels[i].boundary;
    const std::size_t ker = bd.cols() - exact_rank(bd);
    const std::size_t img = i + 1 < r.levels.size() ? exact_rank(r.levels[i + 1].boundary) : 0;
    return ker - img;
}

}  // namespace pcoh
