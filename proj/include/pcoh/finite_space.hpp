#pragma once

#include "pcoh/poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pcoh {

/// Finite topological space given by its full open-set family, validated to
/// be a T0 topology. Point sets are stored as sorted index lists.
struct FiniteSpace {
    std::vector<std::string> points;
    std::vector<std::vector<std::size_t>> opens;          // deduplicated, sorted lexicographically
    std::vector<std::vector<std::size_t>> minimal_opens;  // per point: smallest open containing it

    static FiniteSpace from_sets(std::vector<std::string> points,
                                 const std::vector<std::vector<std::string>>& open_sets) {
        FiniteSpace s;
        s.points = std::move(points);
        std::map<std::string, std::size_t> lookup;
        for (std::size_t i = 0; i < s.points.size(); ++i)
            if (!lookup.emplace(s.points[i], i).second)
                throw std::invalid_argument("duplicate point '" + s.points[i] + "'");

        std::set<std::vector<std::size_t>> family;
        for (const auto& open : open_sets) {
            std::vector<std::size_t> idx;
            for (const auto& id : open) {
                auto it = lookup.find(id);
                if (it == lookup.end())
                    throw std::invalid_argument("unknown point '" + id + "' in open set");
                idx.push_back(it->second);
            }
            std::sort(idx.begin(), idx.end());
            idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
            family.insert(std::move(idx));
        }

        std::vector<std::size_t> full(s.points.size());
        for (std::size_t i = 0; i < full.size(); ++i) full[i] = i;
        if (!family.count({})) throw std::invalid_argument("not a topology: empty set missing");
        if (!family.count(full)) throw std::invalid_argument("not a topology: whole space missing");
        for (const auto& a : family)
            for (const auto& b : family) {
                std::vector<std::size_t> u, n;
                std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(n));
                if (!family.count(u)) throw std::invalid_argument("not a topology: union of two opens missing");
                if (!family.count(n))
                    throw std::invalid_argument("not a topology: intersection of two opens missing");
            }

        s.opens.assign(family.begin(), family.end());
        s.minimal_opens.resize(s.points.size());
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            std::vector<std::size_t> acc = full;
            for (const auto& open : s.opens) {
                if (!std::binary_search(open.begin(), open.end(), i)) continue;
                std::vector<std::size_t> n;
                std::set_intersection(acc.begin(), acc.end(), open.begin(), open.end(),
                                      std::back_inserter(n));
                acc = std::move(n);
            }
            s.minimal_opens[i] = std::move(acc);
        }
        std::map<std::vector<std::size_t>, std::size_t> seen;
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            auto [it, fresh] = seen.emplace(s.minimal_opens[i], i);
            if (!fresh)
                throw std::invalid_argument("not T0: points '" + s.points[it->second] + "' and '" +
                                            s.points[i] + "' share their minimal open set");
        }
        return s;
    }
};

/// Specialization order: x <= y iff x lies in the minimal open set of y.
/// (The opposite convention gives the opposite poset; all cohomological
/// output is invariant under that choice.)
inline Poset specialization_poset(const FiniteSpace& s) {
    std::vector<std::pair<std::string, std::string>> rel;
    for (std::size_t y = 0; y < s.points.size(); ++y)
        for (std::size_t x : s.minimal_opens[y])
            if (x != y) rel.emplace_back(s.points[x], s.points[y]);
    return Poset::from_relations(s.points, rel);
}

}  // namespace pcoh
