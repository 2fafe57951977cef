#include "pcoh/cohomology.hpp"

#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace pcoh;

namespace {

bool padded_eq(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i)
        if ((i < a.size() ? a[i] : 0) != (i < b.size() ? b[i] : 0)) return false;
    return true;
}

}  // namespace

TEST_CASE("ext tables on the ten-element fixture") {
    auto p = fixtures::w10();
    auto idx = [&](const char* s) { return *p.index_of(s); };
    auto fs = FieldSpec::rationals();

    CHECK(padded_eq(ext_dims(p, idx("1"), idx("9"), fs).dims, {0, 0, 0, 1}));
    CHECK(padded_eq(ext_dims(p, idx("1"), idx("10"), fs).dims, {0, 0, 0, 0, 1}));
    CHECK(padded_eq(ext_dims(p, idx("1"), idx("5"), fs).dims, {0, 0, 1}));
    CHECK(padded_eq(ext_dims(p, idx("1"), idx("2"), fs).dims, {0, 1}));
    CHECK(padded_eq(ext_dims(p, idx("1"), idx("1"), fs).dims, {1}));
    // incomparable targets carry nothing
    CHECK(padded_eq(ext_dims(p, idx("4"), idx("8"), fs).dims, {}));
    CHECK(padded_eq(ext_dims(p, idx("2"), idx("3"), fs).dims, {}));
    // degree-1 rule: covers in disguise (empty open interval)
    CHECK(ext_dims(p, idx("5"), idx("8"), fs).dim(1) == 1);
    CHECK(ext_dims(p, idx("2"), idx("4"), fs).dim(1) == 1);
    CHECK_THROWS_AS(ext_dims(p, 0, 99, fs), std::invalid_argument);
}

TEST_CASE("ext agrees with the interval oracle and the Moebius function") {
    std::mt19937 rng(31415926);
    const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(3)};
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng() % 9;
        auto p = fixtures::random_poset(rng, n, std::uniform_real_distribution<double>(0.0, 1.0)(rng));
        for (const auto& fs : fields) {
            for (Poset::Index x = 0; x < n; ++x)
                for (Poset::Index b = 0; b < n; ++b) {
                    auto ext = ext_dims(p, x, b, fs);
                    if (!p.leq(x, b)) {
                        for (int d : ext.dims) CHECK(d == 0);
                        continue;
                    }
                    if (x == b) {
                        CHECK(padded_eq(ext.dims, {1}));
                    } else {
                        CHECK(padded_eq(ext.dims, interval_betti_oracle(p, x, b, fs)));
                    }
                    // alternating sum is the Moebius value, any field
                    long long s = 0, sign = 1;
                    for (std::size_t i = 0; i < ext.dims.size(); ++i, sign = -sign)
                        s += sign * ext.dims[i];
                    CHECK(s == p.mobius(x, b));
                }
        }
    }
}

TEST_CASE("hochschild closed forms") {
    auto fs = FieldSpec::rationals();
    CHECK(hochschild_dims(fixtures::chain(1), fs).dims == std::vector<int>{1});
    CHECK(hochschild_dims(fixtures::chain(5), fs).dims == std::vector<int>{1});
    CHECK(hochschild_dims(fixtures::antichain(1), fs).dims == std::vector<int>{1});
    CHECK(hochschild_dims(fixtures::antichain(4), fs).dims == std::vector<int>{4});
    CHECK(hochschild_dims(fixtures::circle4(), fs).dims == std::vector<int>{1, 1});
    CHECK(hochschild_dims(fixtures::w10(), fs).dims == std::vector<int>{1});
    CHECK(hochschild_dims(fixtures::antichain(4), fs).star_low == std::vector<int>{0, 0, 3});
    CHECK_THROWS_AS(hochschild_dims(Poset::from_relations({}, {}), fs), std::invalid_argument);
}

TEST_CASE("hochschild detects the coefficient characteristic") {
    auto rp2 = fixtures::rp2_face_poset();
    CHECK(hochschild_dims(rp2, FieldSpec::gf(2)).dims == std::vector<int>{1, 1, 1});
    CHECK(hochschild_dims(rp2, FieldSpec::rationals()).dims == std::vector<int>{1});
    CHECK(hochschild_dims(rp2, FieldSpec::gf(3)).dims == std::vector<int>{1});
    CHECK(hochschild_dims(rp2, FieldSpec::gf(7)).dims == std::vector<int>{1});
}

TEST_CASE("hochschild equals order-complex cohomology") {
    std::mt19937 rng(271828);
    const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(3)};
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng() % 9;
        auto p = fixtures::random_poset(rng, n, std::uniform_real_distribution<double>(0.0, 1.0)(rng));
        for (const auto& fs : fields) {
            auto hh = hochschild_dims(p, fs);
            CHECK(padded_eq(hh.dims, simplicial_cohomology_dims(order_complex(p), fs)));
            CHECK(hh.dims[0] == static_cast<int>(p.components().size()));
        }
    }
}

TEST_CASE("finite spaces") {
    SECTION("sierpinski: contractible, chain order") {
        auto s = fixtures::sierpinski();
        auto p = specialization_poset(s);
        CHECK(p.lt(*p.index_of("o"), *p.index_of("c")));
        CHECK(finite_space_cohomology(s, FieldSpec::rationals()) == std::vector<int>{1, 0});
    }
    SECTION("pseudocircle looks like the circle") {
        auto s = fixtures::pseudocircle();
        CHECK(finite_space_cohomology(s, FieldSpec::rationals()) == std::vector<int>{1, 1});
        CHECK(finite_space_cohomology(s, FieldSpec::gf(2)) == std::vector<int>{1, 1});
        auto p = specialization_poset(s);
        CHECK(p.covers().size() == 4);
        CHECK(p.height() == 1);
    }
    SECTION("discrete space counts its points") {
        auto s = FiniteSpace::from_sets({"x", "y"}, {{}, {"x"}, {"y"}, {"x", "y"}});
        CHECK(finite_space_cohomology(s, FieldSpec::gf(5)) == std::vector<int>{2});
    }
    SECTION("convention independence") {
        auto s = fixtures::pseudocircle();
        auto p = specialization_poset(s);
        CHECK(simplicial_cohomology_dims(order_complex(p.opposite()), FieldSpec::rationals()) ==
              finite_space_cohomology(s, FieldSpec::rationals()));
    }
}

TEST_CASE("space validation rejects non-topologies and non-T0 families") {
    using S = std::vector<std::vector<std::string>>;
    CHECK_THROWS_WITH(FiniteSpace::from_sets({"a"}, S{{"a"}}),
                      Catch::Matchers::ContainsSubstring("empty set"));
    CHECK_THROWS_WITH(FiniteSpace::from_sets({"a", "b"}, S{{}, {"a"}}),
                      Catch::Matchers::ContainsSubstring("whole space"));
    CHECK_THROWS_WITH(
        FiniteSpace::from_sets({"a", "b", "c"}, S{{}, {"a"}, {"b"}, {"a", "b", "c"}}),
        Catch::Matchers::ContainsSubstring("union"));
    CHECK_THROWS_WITH(
        FiniteSpace::from_sets({"a", "b", "c"},
                               S{{}, {"a", "b"}, {"b", "c"}, {"a", "b", "c"}}),
        Catch::Matchers::ContainsSubstring("intersection"));
    CHECK_THROWS_WITH(FiniteSpace::from_sets({"x", "y"}, S{{}, {"x", "y"}}),
                      Catch::Matchers::ContainsSubstring("not T0"));
    CHECK_THROWS_WITH(FiniteSpace::from_sets({"x"}, S{{}, {"x"}, {"zzz"}}),
                      Catch::Matchers::ContainsSubstring("unknown point"));
    CHECK_THROWS_WITH(FiniteSpace::from_sets({"x", "x"}, S{{}, {"x"}}),
                      Catch::Matchers::ContainsSubstring("duplicate point"));
}

TEST_CASE("hochschild over a larger prime matches the rationals on torsion-free input") {
    // the circle model has integral cohomology without torsion: GF(101) and Q agree
    auto p = fixtures::circle4();
    CHECK(hochschild_dims(p, FieldSpec::gf(101)).dims == hochschild_dims(p, FieldSpec::rationals()).dims);
}
