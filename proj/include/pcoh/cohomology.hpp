#pragma once

#include "pcoh/finite_space.hpp"
#include "pcoh/order_complex.hpp"
#include "pcoh/resolution.hpp"

#include <stdexcept>
#include <vector>

namespace pcoh {

struct ExtTable {
    Poset::Index base = 0;
    Poset::Index target = 0;
    std::vector<int> dims;  // dims[i] = dim Ext^i(S_base, S_target)

    int dim(std::size_t i) const { return i < dims.size() ? dims[i] : 0; }

    friend bool operator==(const ExtTable&, const ExtTable&) = default;
};

/// Ext dimensions read off the cycle counts at the target vertex.
inline ExtTable ext_dims(const Poset& p, Poset::Index x, Poset::Index b, const FieldSpec& fs) {
    if (x >= p.size() || b >= p.size()) throw std::invalid_argument("vertex out of range");
    return with_field(fs, [&](auto field) {
        auto r = compute_cycles(p, x, field);
        auto t = betti(r);
        ExtTable out{x, b, {}};
        out.dims.reserve(t.level_count());
        for (std::size_t i = 0; i < t.level_count(); ++i) out.dims.push_back(t.at(i, b));
        return out;
    });
}

struct HHTable {
    std::vector<int> dims;     // trailing zeros trimmed, never empty
    std::vector<int> star_low; // diagnostic: cycle counts at the adjoined top in levels 0..2

    int dim(std::size_t i) const { return i < dims.size() ? dims[i] : 0; }

    friend bool operator==(const HHTable&, const HHTable&) = default;
};

/// Hochschild cohomology dimensions of the incidence algebra of p: adjoin a
/// global bottom and top, resolve the simple at the bottom, and read the
/// cycle counts at the top two levels up; degree 0 gains +1. Sanity-checked
/// against the component count of p.
inline HHTable hochschild_dims(const Poset& p, const FieldSpec& fs) {
    if (p.size() == 0) throw std::invalid_argument("hochschild_dims: empty poset");
    return with_field(fs, [&](auto field) {
        auto star = star_extension(p);
        auto r = compute_cycles(star.poset, star.bottom, field);
        auto t = betti(r);
        HHTable out;
        out.star_low = {t.at(0, star.top), t.at(1, star.top), t.at(2, star.top)};
        out.dims.push_back(t.at(2, star.top) + 1);
        for (std::size_t i = 3; i < t.level_count(); ++i)
            out.dims.push_back(t.at(i, star.top));
        while (out.dims.size() > 1 && out.dims.back() == 0) out.dims.pop_back();
        if (out.dims[0] != static_cast<int>(p.components().size()))
            throw std::logic_error("Hochschild degree 0 disagrees with the component count");
        return out;
    });
}

/// Cohomology of a finite T0 space = simplicial cohomology of the order
/// complex of its specialization poset.
inline std::vector<int> finite_space_cohomology(const FiniteSpace& s, const FieldSpec& fs) {
    return simplicial_cohomology_dims(order_complex(specialization_poset(s)), fs);
}

}  // namespace pcoh
