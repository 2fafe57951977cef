#pragma once

#include "pcoh/documents.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace pcoh {

/// Seeded random order document: elements "1".."n"; for every index pair
/// i < j, scanned in a fixed row-major order, one mt19937_64 draw is turned
/// into a uniform double on [0,1) (53-bit mantissa) and the relation is kept
/// when it falls below p. The stream depends only on (n, p, seed), so the
/// same triple reproduces the same poset on any platform. p = 0 gives the
/// antichain, p = 1 the chain 1 < 2 < ... < n.
inline PosetDocument random_poset_document(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    PosetDocument d;
    d.seed = seed;
    d.elements.resize(n);
    for (std::size_t i = 0; i < n; ++i) d.elements[i] = std::to_string(i + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double u = std::ldexp(static_cast<double>(rng() >> 11), -53);
            if (u < p) d.relations.emplace_back(d.elements[i], d.elements[j]);
        }
    return d;
}

}  // namespace pcoh
