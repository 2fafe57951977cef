#pragma once

#include "pcoh/finite_space.hpp"
#include "pcoh/poset.hpp"

#include <array>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

// 10-element tower of two diamonds with a twist; the minimal resolution of
// the simple module at "1" is known level by level and pinned across the
// suite: level sizes 1,2,3,3,1 and the recursion stops after level 4.
inline pcoh::Poset w10() {
    return pcoh::Poset::from_relations(
        {"1", "2", "3", "4", "5", "6", "7", "8", "9", "10"},
        {{"1", "2"}, {"1", "3"},
         {"2", "4"}, {"2", "5"}, {"2", "6"}, {"3", "4"}, {"3", "5"}, {"3", "6"},
         {"4", "7"}, {"5", "7"}, {"5", "8"}, {"6", "8"}, {"6", "9"}, {"7", "9"},
         {"8", "10"}, {"9", "10"}});
}

// 7-element truncation of w10: the cycle complex at "1" fails exactness at
// level 2 with a one-dimensional gap.
inline pcoh::Poset w7() {
    return pcoh::Poset::from_relations(
        {"1", "2", "3", "4", "5", "6", "7"},
        {{"1", "2"}, {"1", "3"},
         {"2", "4"}, {"2", "5"}, {"2", "6"}, {"3", "4"}, {"3", "5"}, {"3", "6"},
         {"4", "7"}, {"5", "7"}});
}

inline pcoh::Poset chain(std::size_t n) {
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> rel;
    for (std::size_t i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
    for (std::size_t i = 1; i < n; ++i) rel.emplace_back(std::to_string(i), std::to_string(i + 1));
    return pcoh::Poset::from_relations(std::move(ids), rel);
}

inline pcoh::Poset antichain(std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
    return pcoh::Poset::from_relations(std::move(ids), {});
}

// minimal finite model of the circle: two points under two points
inline pcoh::Poset circle4() {
    return pcoh::Poset::from_relations(
        {"a", "b", "c", "d"},
        {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

// Face poset of the 6-vertex triangulation of the real projective plane.
// Ids: "3" vertex, "34" edge, "346" triangle.
inline pcoh::Poset rp2_face_poset() {
    const std::vector<std::array<int, 3>> tris = {
        {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {1, 4, 6}, {1, 5, 6},
        {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}};
    std::set<std::string> edges, faces;
    std::vector<std::pair<std::string, std::string>> rel;
    auto edge_id = [](int a, int b) { return std::to_string(a) + std::to_string(b); };
    for (const auto& t : tris) {
        std::string f = std::to_string(t[0]) + std::to_string(t[1]) + std::to_string(t[2]);
        faces.insert(f);
        for (auto [a, b] : {std::pair{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}) {
            edges.insert(edge_id(a, b));
            rel.emplace_back(edge_id(a, b), f);
            rel.emplace_back(std::to_string(a), edge_id(a, b));
            rel.emplace_back(std::to_string(b), edge_id(a, b));
        }
    }
    std::vector<std::string> ids;
    for (int v = 1; v <= 6; ++v) ids.push_back(std::to_string(v));
    ids.insert(ids.end(), edges.begin(), edges.end());
    ids.insert(ids.end(), faces.begin(), faces.end());
    return pcoh::Poset::from_relations(std::move(ids), rel);
}

// Four-point model of the circle as a topology (the "pseudocircle")
inline pcoh::FiniteSpace pseudocircle() {
    return pcoh::FiniteSpace::from_sets(
        {"a", "b", "c", "d"},
        {{}, {"a"}, {"b"}, {"a", "b"}, {"a", "b", "c"}, {"a", "b", "d"}, {"a", "b", "c", "d"}});
}

inline pcoh::FiniteSpace sierpinski() {
    return pcoh::FiniteSpace::from_sets({"o", "c"}, {{}, {"o"}, {"o", "c"}});
}

// Local random-order generator for property tests (independent of the
// library's seeded document generator, which has its own stream contract).
template <class Rng>
pcoh::Poset random_poset(Rng& rng, std::size_t n, double edge_prob) {
    std::vector<std::pair<pcoh::Poset::Index, pcoh::Poset::Index>> rel;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (u(rng) < edge_prob) rel.emplace_back(i, j);
    return pcoh::Poset::on_indices(n, rel);
}

}  // namespace fixtures
