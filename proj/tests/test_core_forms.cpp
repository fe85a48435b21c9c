#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "canalg/canonical_type.hpp"
#include "canalg/dim_vector.hpp"
#include "canalg/errors.hpp"
#include "canalg/forms.hpp"

using namespace canalg;

namespace {

// Euler form read off the quiver directly: vertices, arrows (source, target)
// and n - 2 relations from infinity to 0, on flat coordinates.
Int quiver_euler(const CanonicalType& t, const DimVector& x, const DimVector& y) {
    const auto a = x.to_flat();
    const auto b = y.to_flat();
    const std::size_t inf = a.size() - 1;
    Int v = 0;
    for (std::size_t k = 0; k < a.size(); ++k) v += Int(a[k]) * b[k];
    std::size_t base = 1;
    for (int m : t.arms()) {
        // arm vertices 0 -> base, base+1, ..., base+m-2 -> inf, arrows point toward 0
        auto idx = [&](int j) -> std::size_t { return j == 0 ? 0 : j == m ? inf : base + static_cast<std::size_t>(j - 1); };
        for (int j = 1; j <= m; ++j) v -= Int(a[idx(j)]) * b[idx(j - 1)];
        base += static_cast<std::size_t>(m - 1);
    }
    v += Int(t.n() - 2) * a[inf] * b[0];
    return v;
}

const DimVector witness237 = DimVector::parse("42;21/28,14/36,30,24,18,12,6;0");

}  // namespace

TEST_CASE("delta values") {
    CHECK(delta(CanonicalType({2, 3, 6})) == 0);
    CHECK(delta(CanonicalType({2, 3, 7})) == Rational(1, 84));
    CHECK(delta(CanonicalType({5, 5, 5, 5, 5})) == 1);
    CHECK(delta(CanonicalType({2, 2, 2})) == Rational(-1, 4));
}

TEST_CASE("canonical type parsing") {
    CHECK(CanonicalType::parse("2,3,7") == CanonicalType({2, 3, 7}));
    CHECK(CanonicalType::parse("2,3,7").str() == "2,3,7");
    CHECK_THROWS_AS(CanonicalType::parse("2,3"), InvalidInput);
    CHECK_THROWS_AS(CanonicalType::parse("2,1,3"), InvalidInput);
    CHECK_THROWS_AS(CanonicalType::parse("2,x,3"), InvalidInput);
    CHECK(CanonicalType({2, 3, 6}).vertex_count() == 10);
    CHECK(CanonicalType({2, 3, 7}).lcm() == 42);
}

TEST_CASE("dim vector text form") {
    const CanonicalType t({2, 3, 7});
    CHECK(witness237.shaped_for(t));
    CHECK(witness237.str() == "42;21/28,14/36,30,24,18,12,6;0");
    CHECK(witness237.at(2, 0) == 42);
    CHECK(witness237.at(2, 3) == 0);
    CHECK(DimVector::from_flat(t, witness237.to_flat()) == witness237);
    CHECK_THROWS_AS(DimVector::parse("1;1/1;0", t), InvalidInput);
    CHECK_THROWS_AS(DimVector::parse("1;1/1/1"), InvalidInput);
}

TEST_CASE("euler form examples") {
    for (auto arms : {std::vector<int>{2, 2, 2}, {2, 3, 6}, {2, 3, 7}, {5, 5, 5, 5, 5}}) {
        const CanonicalType t(arms);
        CHECK(euler_form(t, basis::h(t), basis::h(t)) == 0);
    }
    const CanonicalType t({2, 3, 7});
    CHECK(euler_form(t, witness237, witness237) == -21);
    CHECK(euler_form(t, witness237, basis::h(t)) == 42);
    CHECK_THROWS_AS(euler_form(t, witness237, basis::h(CanonicalType({2, 2, 2}))), InvalidInput);
}

TEST_CASE("euler form agrees with the quiver on random vectors") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> u(-9, 9);
    for (auto arms : {std::vector<int>{2, 2, 2}, {2, 3, 7}, {3, 4, 5, 2}}) {
        const CanonicalType t(arms);
        for (int s = 0; s < 300; ++s) {
            std::vector<std::int64_t> fx(static_cast<std::size_t>(t.vertex_count())), fy(fx.size());
            for (auto& v : fx) v = u(rng);
            for (auto& v : fy) v = u(rng);
            const auto x = DimVector::from_flat(t, fx), y = DimVector::from_flat(t, fy);
            REQUIRE(euler_form(t, x, y) == quiver_euler(t, x, y));
            REQUIRE(quadratic_via_decomposition(t, x) == Rational(euler_form(t, x, x)));
        }
    }
}

TEST_CASE("quadratic via decomposition examples") {
    const CanonicalType t236({2, 3, 6});
    CHECK(quadratic_via_decomposition(t236, basis::h(t236)) == 0);
    CHECK(quadratic_via_decomposition(CanonicalType({2, 3, 7}), witness237) == -21);
    const CanonicalType t222({2, 2, 2});
    CHECK(quadratic_via_decomposition(t222, basis::e_zero(t222)) == 1);
    CHECK(quiver_euler(t222, basis::e_zero(t222), basis::e_zero(t222)) == 1);
}

TEST_CASE("basis vectors") {
    const CanonicalType t222({2, 2, 2});
    CHECK(basis::e(t222, 1, 0) == DimVector::parse("1;0/1/1;1"));
    const CanonicalType t236({2, 3, 6});
    CHECK(basis::e_of(t236, {1, 0, 3}) == DimVector::parse("1;1/0,0/1,1,1,0,0;0"));
    CHECK(basis::e_of(t236, {0, 0, 0}) == basis::e_zero(t236));
    for (const auto& t : {t222, t236, CanonicalType({3, 4, 5, 2})})
        for (int i = 1; i <= t.n(); ++i) {
            DimVector sum = DimVector::zero(t);
            for (int j = 0; j < t.arm_length(i); ++j) sum += basis::e(t, i, j);
            CHECK(sum == basis::h(t));
        }
    CHECK_THROWS_AS(basis::e(t222, 1, 2), InvalidInput);
    CHECK_THROWS_AS(basis::e_of(t222, {2, 0, 0}), InvalidInput);
}

TEST_CASE("a_dim examples") {
    const CanonicalType t222({2, 2, 2}), t236({2, 3, 6});
    CHECK(a_dim(t222, basis::h(t222)) == 5);
    CHECK(affine_dim(t222, basis::h(t222)) - (t222.n() - 2) == 5);
    CHECK(a_dim(t222, DimVector::zero(t222)) == 0);
    // one per vertex: 2 + 1 + 2 + 5
    CHECK(a_dim(t236, basis::h(t236)) == 10);
    CHECK(gl_dim(t236, basis::h(t236)) - euler_form(t236, basis::h(t236), basis::h(t236)) == 10);
    CHECK(affine_dim(t236, basis::h(t236)) - (t236.n() - 2) == 10);
    CHECK_THROWS_AS(a_dim(t222, Int(-1) * basis::h(t222)), InvalidInput);
}

TEST_CASE("quadratic lower bound") {
    const CanonicalType t237({2, 3, 7});
    auto b = lemmineq_bound(t237, witness237);
    CHECK(b.lower_bound == -21);
    CHECK(b.tight);
    for (auto arms : {std::vector<int>{2, 2, 2}, {2, 3, 7}, {5, 5, 5, 5, 5}}) {
        const CanonicalType t(arms);
        b = lemmineq_bound(t, basis::h(t));
        CHECK(b.lower_bound == 0);
        CHECK(b.tight);
    }
    const CanonicalType t222({2, 2, 2});
    b = lemmineq_bound(t222, basis::e_zero(t222));
    CHECK(b.lower_bound == Rational(1, 4));
    CHECK_FALSE(b.tight);
}
