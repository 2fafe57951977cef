#include "pcoh/order_complex.hpp"

#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

using namespace pcoh;

namespace {

// simplices as sorted id-sets, for comparisons that ignore enumeration order
std::set<std::vector<std::string>> id_simplices(const Poset& p, const SimplicialComplex& c) {
    std::set<std::vector<std::string>> out;
    for (const auto& bucket : c.simplices)
        for (const auto& s : bucket) {
            std::vector<std::string> ids;
            for (auto v : s) ids.push_back(p.id(v));
            std::sort(ids.begin(), ids.end());
            out.insert(ids);
        }
    return out;
}

}  // namespace

TEST_CASE("order complex of a chain is the full simplex") {
    auto p = fixtures::chain(3);
    auto c = order_complex(p);
    REQUIRE(c.top_dimension() == 2);
    CHECK(c.count(0) == 3);
    CHECK(c.count(1) == 3);
    CHECK(c.count(2) == 1);
    // chains come out in lexicographic order of topological positions
    CHECK(c.simplices[1] ==
          std::vector<SimplicialComplex::Simplex>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(simplicial_cohomology_dims(c, FieldSpec::rationals()) == std::vector<int>{1, 0, 0});
    CHECK(reduced_cohomology_dims(c, FieldSpec::rationals()) == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("order complex of an antichain is a point cloud") {
    auto c = order_complex(fixtures::antichain(4));
    CHECK(c.top_dimension() == 0);
    CHECK(simplicial_cohomology_dims(c, FieldSpec::gf(2)) == std::vector<int>{4});
    CHECK(reduced_cohomology_dims(c, FieldSpec::gf(2)) == std::vector<int>{0, 3});
}

TEST_CASE("empty poset, empty complex") {
    auto c = order_complex(Poset::from_relations({}, {}));
    CHECK(c.top_dimension() == -1);
    CHECK(c.total() == 0);
    CHECK(simplicial_cohomology_dims(c, FieldSpec::rationals()).empty());
    CHECK(reduced_cohomology_dims(c, FieldSpec::rationals()) == std::vector<int>{1});
}

TEST_CASE("four-point circle model") {
    auto c = order_complex(fixtures::circle4());
    CHECK(c.count(0) == 4);
    CHECK(c.count(1) == 4);
    CHECK(c.top_dimension() == 1);
    for (auto fs : {FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(5)})
        CHECK(simplicial_cohomology_dims(c, fs) == std::vector<int>{1, 1});
}

TEST_CASE("barycentric subdivision of the projective plane sees the characteristic") {
    auto c = order_complex(fixtures::rp2_face_poset());
    CHECK(simplicial_cohomology_dims(c, FieldSpec::gf(2)) == std::vector<int>{1, 1, 1});
    CHECK(simplicial_cohomology_dims(c, FieldSpec::rationals()) == std::vector<int>{1, 0, 0});
    CHECK(simplicial_cohomology_dims(c, FieldSpec::gf(3)) == std::vector<int>{1, 0, 0});
}

TEST_CASE("poset with a least element has contractible order complex") {
    auto c = order_complex(fixtures::w10());
    auto h = simplicial_cohomology_dims(c, FieldSpec::rationals());
    REQUIRE(!h.empty());
    CHECK(h[0] == 1);
    for (std::size_t i = 1; i < h.size(); ++i) CHECK(h[i] == 0);
    long long chi = 0, sign = 1;
    for (int d = 0; d <= c.top_dimension(); ++d, sign = -sign)
        chi += sign * static_cast<long long>(c.count(d));
    CHECK(chi == 1);
}

TEST_CASE("coboundaries compose to zero; complex is face-closed") {
    std::mt19937 rng(160219);
    PrimeField f7(7);
    RationalField q;
    for (int trial = 0; trial < 20; ++trial) {
        auto p = fixtures::random_poset(rng, 1 + rng() % 8,
                                        std::uniform_real_distribution<double>(0.0, 1.0)(rng));
        auto c = order_complex(p);
        for (int d = 0; d + 1 <= c.top_dimension(); ++d) {
            CHECK(multiply(coboundary_matrix(c, d + 1, q), coboundary_matrix(c, d, q)).is_zero());
            CHECK(multiply(coboundary_matrix(c, d + 1, f7), coboundary_matrix(c, d, f7)).is_zero());
        }
        // simplex count telescopes against cohomology: Euler characteristic
        auto h = simplicial_cohomology_dims(c, FieldSpec::rationals());
        long long chi_c = 0, chi_h = 0, sign = 1;
        for (int d = 0; d <= c.top_dimension(); ++d, sign = -sign) {
            chi_c += sign * static_cast<long long>(c.count(d));
            chi_h += sign * h[d];
        }
        CHECK(chi_c == chi_h);
    }
}

TEST_CASE("opposite poset has the same order complex") {
    std::mt19937 rng(887766);
    for (int trial = 0; trial < 15; ++trial) {
        auto p = fixtures::random_poset(rng, 1 + rng() % 8,
                                        std::uniform_real_distribution<double>(0.0, 1.0)(rng));
        auto op = p.opposite();
        CHECK(id_simplices(p, order_complex(p)) == id_simplices(op, order_complex(op)));
        CHECK(simplicial_cohomology_dims(order_complex(p), FieldSpec::gf(2)) ==
              simplicial_cohomology_dims(order_complex(op), FieldSpec::gf(2)));
    }
}

TEST_CASE("interval oracle fixtures") {
    auto p = fixtures::w10();
    auto idx = [&](const char* s) { return *p.index_of(s); };
    CHECK(interval_betti_oracle(p, idx("1"), idx("2"), FieldSpec::rationals()) ==
          std::vector<int>{0, 1});  // empty interval: all of Ext lives in degree 1
    CHECK(interval_betti_oracle(p, idx("1"), idx("7"), FieldSpec::rationals()) ==
          std::vector<int>{0, 0, 0, 1});
    CHECK(interval_betti_oracle(p, idx("1"), idx("10"), FieldSpec::rationals()) ==
          std::vector<int>{0, 0, 0, 0, 1, 0});  // trailing entry: interval chains reach length 4
    CHECK_THROWS_AS(interval_betti_oracle(p, idx("4"), idx("8"), FieldSpec::rationals()),
                    std::invalid_argument);
    CHECK_THROWS_AS(interval_betti_oracle(p, idx("1"), idx("1"), FieldSpec::rationals()),
                    std::invalid_argument);
}
