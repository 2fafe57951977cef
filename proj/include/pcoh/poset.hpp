#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcoh {

/// Finite poset over string-labelled elements, index-based internally.
/// Built from an arbitrary relation set (not necessarily covers); the closure,
/// cover relation, a fixed linear extension and neighbour lists are cached.
class Poset {
public:
    using Index = std::size_t;

    /// relations are "a <= b" assertions; cycles between distinct elements are rejected.
    static Poset from_relations(std::vector<std::string> elements,
                                const std::vector<std::pair<std::string, std::string>>& relations) {
        Poset p;
        p.ids_ = std::move(elements);
        const std::size_t n = p.ids_.size();
        std::map<std::string, Index> lookup;
        for (Index i = 0; i < n; ++i) {
            if (!lookup.emplace(p.ids_[i], i).second)
                throw std::invalid_argument("duplicate element '" + p.ids_[i] + "'");
        }
        std::vector<std::vector<Index>> adj(n);
        for (const auto& [sa, sb] : relations) {
            auto ia = lookup.find(sa), ib = lookup.find(sb);
            if (ia == lookup.end()) throw std::invalid_argument("unknown element '" + sa + "' in relation");
            if (ib == lookup.end()) throw std::invalid_argument("unknown element '" + sb + "' in relation");
            if (ia->second != ib->second) adj[ia->second].push_back(ib->second);
        }
        p.build(adj);
        return p;
    }

    /// Elements named "1".."n"; relation pairs are 0-based indices.
    static Poset on_indices(std::size_t n, const std::vector<std::pair<Index, Index>>& relations) {
        std::vector<std::string> ids(n);
        for (std::size_t i = 0; i < n; ++i) ids[i] = std::to_string(i + 1);
        std::vector<std::pair<std::string, std::string>> rel;
        rel.reserve(relations.size());
        for (auto [a, b] : relations) {
            if (a >= n || b >= n) throw std::invalid_argument("relation index out of range");
            rel.emplace_back(ids[a], ids[b]);
        }
        return from_relations(std::move(ids), rel);
    }

    std::size_t size() const { return ids_.size(); }
    const std::vector<std::string>& ids() const { return ids_; }
    const std::string& id(Index i) const { return ids_.at(i); }
    std::optional<Index> index_of(const std::string& id) const {
        for (Index i = 0; i < ids_.size(); ++i)
            if (ids_[i] == id) return i;
        return std::nullopt;
    }

    bool leq(Index a, Index b) const { return leq_[a * size() + b] != 0; }
    bool lt(Index a, Index b) const { return a != b && leq(a, b); }

    const std::vector<std::pair<Index, Index>>& covers() const { return covers_; }
    /// Cover successors of i, sorted by topological position.
    const std::vector<Index>& successors(Index i) const { return succ_.at(i); }
    /// Cover predecessors of i, sorted by topological position.
    const std::vector<Index>& predecessors(Index i) const { return pred_.at(i); }

    /// A fixed linear extension; ties broken by element input order.
    const std::vector<Index>& topo_order() const { return topo_; }
    std::size_t topo_pos(Index i) const { return topo_pos_.at(i); }

    /// Longest chain, counted in cover steps.
    std::size_t height() const { return height_; }

    std::vector<Index> minimal_elements() const {
        std::vector<Index> out;
        for (Index i = 0; i < size(); ++i)
            if (pred_[i].empty()) out.push_back(i);
        return out;
    }
    std::vector<Index> maximal_elements() const {
        std::vector<Index> out;
        for (Index i = 0; i < size(); ++i)
            if (succ_[i].empty()) out.push_back(i);
        return out;
    }

    /// Weakly connected components, each listed ascending, ordered by least member.
    std::vector<std::vector<Index>> components() const {
        const std::size_t n = size();
        std::vector<Index> root(n);
        for (Index i = 0; i < n; ++i) root[i] = i;
        auto find = [&](Index i) {
            while (root[i] != i) i = root[i] = root[root[i]];
            return i;
        };
        for (auto [a, b] : covers_) root[find(a)] = find(b);
        std::map<Index, std::vector<Index>> groups;
        for (Index i = 0; i < n; ++i) groups[find(i)].push_back(i);
        std::vector<std::vector<Index>> out;
        for (auto& [r, members] : groups) out.push_back(std::move(members));
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        return out;
    }

    Poset opposite() const {
        std::vector<std::pair<std::string, std::string>> rel;
        rel.reserve(covers_.size());
        for (auto [a, b] : covers_) rel.emplace_back(ids_[b], ids_[a]);
        return from_relations(ids_, rel);
    }

    /// Full subposet on the given indices (deduplicated, kept in index order).
    Poset induced(std::vector<Index> subset) const {
        std::sort(subset.begin(), subset.end());
        subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
        std::vector<std::string> ids;
        ids.reserve(subset.size());
        for (Index i : subset) ids.push_back(this->id(i));
        std::vector<std::pair<std::string, std::string>> rel;
        for (Index a : subset)
            for (Index b : subset)
                if (lt(a, b)) rel.emplace_back(this->id(a), this->id(b));
        return from_relations(std::move(ids), rel);
    }

    /// The open interval (x, b) = { z : x < z < b } as a poset.
    Poset open_interval(Index x, Index b) const {
        if (!lt(x, b)) throw std::invalid_argument("open_interval requires x < b");
        std::vector<Index> subset;
        for (Index z = 0; z < size(); ++z)
            if (lt(x, z) && lt(z, b)) subset.push_back(z);
        return induced(subset);
    }

    /// Moebius function of the closed interval [x, b].
    long long mobius(Index x, Index b) const {
        if (!leq(x, b)) throw std::invalid_argument("mobius requires x <= b");
        std::vector<Index> zs;
        for (Index t : topo_)
            if (leq(x, t) && leq(t, b)) zs.push_back(t);
        std::map<Index, long long> mu;
        for (Index z : zs) {
            if (z == x) {
                mu[z] = 1;
                continue;
            }
            long long s = 0;
            for (Index w : zs) {
                if (w == z) break;  // zs is in topo order; w >= z cannot satisfy w < z
                if (leq(w, z) && w != z) s += mu[w];
            }
            mu[z] = -s;
        }
        return mu[b];
    }

private:
    Poset() = default;

    void build(const std::vector<std::vector<Index>>& adj) {
        const std::size_t n = ids_.size();
        leq_.assign(n * n, 0);
        // reachability closure by DFS from each source
        for (Index s = 0; s < n; ++s) {
            std::vector<Index> stack{s};
            leq_[s * n + s] = 1;
            while (!stack.empty()) {
                Index u = stack.back();
                stack.pop_back();
                for (Index v : adj[u])
                    if (!leq_[s * n + v]) {
                        leq_[s * n + v] = 1;
                        stack.push_back(v);
                    }
            }
        }
        for (Index a = 0; a < n; ++a)
            for (Index b = a + 1; b < n; ++b)
                if (leq_[a * n + b] && leq_[b * n + a])
                    throw std::invalid_argument("not a poset: cycle through '" + ids_[a] + "' and '" + ids_[b] + "'");

        // transitive reduction
        covers_.clear();
        succ_.assign(n, {});
        pred_.assign(n, {});
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b) {
                if (!lt(a, b)) continue;
                bool direct = true;
                for (Index c = 0; c < n && direct; ++c)
                    if (lt(a, c) && lt(c, b)) direct = false;
                if (direct) {
                    covers_.emplace_back(a, b);
                    succ_[a].push_back(b);
                    pred_[b].push_back(a);
                }
            }

        // Kahn with a min-heap on element index: deterministic linear extension
        std::vector<std::size_t> indeg(n);
        for (Index i = 0; i < n; ++i) indeg[i] = pred_[i].size();
        std::priority_queue<Index, std::vector<Index>, std::greater<>> ready;
        for (Index i = 0; i < n; ++i)
            if (indeg[i] == 0) ready.push(i);
        topo_.clear();
        topo_.reserve(n);
        while (!ready.empty()) {
            Index u = ready.top();
            ready.pop();
            topo_.push_back(u);
            for (Index v : succ_[u])
                if (--indeg[v] == 0) ready.push(v);
        }
        topo_pos_.assign(n, 0);
        for (std::size_t k = 0; k < n; ++k) topo_pos_[topo_[k]] = k;

        auto by_topo = [&](Index a, Index b) { return topo_pos_[a] < topo_pos_[b]; };
        for (Index i = 0; i < n; ++i) {
            std::sort(succ_[i].begin(), succ_[i].end(), by_topo);
            std::sort(pred_[i].begin(), pred_[i].end(), by_topo);
        }

        // longest chain via DP along the linear extension
        std::vector<std::size_t> depth(n, 0);
        height_ = 0;
        for (Index u : topo_)
            for (Index v : succ_[u]) {
                depth[v] = std::max(depth[v], depth[u] + 1);
                height_ = std::max(height_, depth[v]);
            }
    }

    std::vector<std::string> ids_;
    std::vector<unsigned char> leq_;
    std::vector<std::pair<Index, Index>> covers_;
    std::vector<std::vector<Index>> succ_, pred_;
    std::vector<Index> topo_;
    std::vector<std::size_t> topo_pos_;
    std::size_t height_ = 0;
};

/// p with a fresh global minimum and maximum adjoined.
struct StarExtension {
    Poset poset;
    Poset::Index bottom;
    Poset::Index top;
};

inline StarExtension star_extension(const Poset& p) {
    auto fresh = [&](std::string base) {
        while (p.index_of(base)) base += "*";
        return base;
    };
    std::string bot = fresh("*bot"), top = fresh("*top");
    std::vector<std::string> ids = p.ids();
    ids.push_back(bot);
    ids.push_back(top);
    std::vector<std::pair<std::string, std::string>> rel;
    for (auto [a, b] : p.covers()) rel.emplace_back(p.id(a), p.id(b));
    for (auto m : p.minimal_elements()) rel.emplace_back(bot, p.id(m));
    for (auto m : p.maximal_elements()) rel.emplace_back(p.id(m), top);
    if (p.size() == 0) rel.emplace_back(bot, top);
    Poset q = Poset::from_relations(std::move(ids), rel);
    auto bi = q.index_of(bot), ti = q.index_of(top);
    return {std::move(q), *bi, *ti};
}

}  // namespace pcoh
