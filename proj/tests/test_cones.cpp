#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "canalg/cones.hpp"
#include "canalg/errors.hpp"
#include "canalg/forms.hpp"

using namespace canalg;

namespace {

// Odometer over the box [0, p]^vertices, keeping vectors with monotone arms.
std::vector<DimVector> box_scan_P(const CanonicalType& t, std::int64_t p) {
    const std::size_t nv = static_cast<std::size_t>(t.vertex_count());
    std::vector<std::int64_t> f(nv, 0);
    std::vector<DimVector> out;
    for (;;) {
        const DimVector d = DimVector::from_flat(t, f);
        bool ok = d.is_zero();
        if (!ok && d.d0() > d.dinf()) {
            ok = true;
            for (int i = 1; i <= t.n() && ok; ++i)
                for (int j = 1; j <= t.arm_length(i) && ok; ++j) ok = d.at(i, j - 1) >= d.at(i, j);
        }
        if (ok) out.push_back(d);
        std::size_t k = 0;
        while (k < nv && f[k] == p) f[k++] = 0;
        if (k == nv) break;
        ++f[k];
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("membership examples") {
    for (auto arms : {std::vector<int>{2, 2, 2}, {2, 3, 7}, {3, 3, 4, 5}}) {
        const CanonicalType t(arms);
        CHECK_FALSE(in_P(t, basis::h(t)));
        CHECK(in_P(t, basis::e_zero(t)));
        CHECK(in_P(t, DimVector::zero(t)));
        CHECK(in_Q(t, basis::e_infinity(t)));
        CHECK_FALSE(in_Q(t, basis::h(t)));
        CHECK(cone_of(t, basis::h(t)) == ConeTag::Neither);
    }
    CHECK(in_P(CanonicalType({2, 3, 7}), DimVector::parse("42;21/28,14/36,30,24,18,12,6;0")));
    const CanonicalType t({2, 2, 2});
    const DimVector d = basis::h(t) - basis::e_zero(t) - basis::e(t, 1, 1) - basis::e(t, 2, 1) - basis::e(t, 3, 1);
    CHECK(d == basis::e_infinity(t));
    CHECK(in_Q(t, d));
}

TEST_CASE("enumerate_P counts against a box scan") {
    const CanonicalType t({2, 2, 2});
    CHECK(enumerate_P(t, 1).size() == 9);
    CHECK(enumerate_P(t, 2).size() == 44);
    CHECK(box_scan_P(t, 1).size() == 9);
    CHECK(box_scan_P(t, 2).size() == 44);
    for (auto arms : {std::vector<int>{2, 2, 2}, {2, 3, 4}, {2, 2, 2, 3}}) {
        const CanonicalType u(arms);
        for (std::int64_t p = 0; p <= 3; ++p) {
            const auto e = enumerate_P(u, p);
            CHECK(std::is_sorted(e.begin(), e.end()));
            CHECK(e == box_scan_P(u, p));
        }
    }
}

TEST_CASE("enumerate_P at level zero and cap") {
    const CanonicalType t({3, 4, 5});
    const auto e = enumerate_P(t, 0);
    REQUIRE(e.size() == 1);
    CHECK(e[0].is_zero());
    CHECK_THROWS_AS(enumerate_P(CanonicalType({2, 2, 2}), 2, 43), CapExceeded);
    CHECK(enumerate_P(CanonicalType({2, 2, 2}), 2, 44).size() == 44);
}

TEST_CASE("P/Q duality over enumerated members") {
    for (auto arms : {std::vector<int>{2, 2, 2}, {2, 3, 5}, {3, 3, 3, 2}}) {
        const CanonicalType t(arms);
        const DimVector h = basis::h(t);
        for (std::int64_t p = 0; p <= 3; ++p)
            for (const auto& d : enumerate_P(t, p)) {
                if (d.is_zero()) continue;  // p h itself is not in Q
                REQUIRE(in_Q(t, Int(p) * h - d));
                REQUIRE(euler_form(t, Int(p) * h - d, d) == -Int(p) * (d.d0() - d.dinf()) - euler_form(t, d, d));
                REQUIRE(in_P(t, d + Int(2) * h));
            }
    }
}

TEST_CASE("slope one decomposition") {
    for (auto arms : {std::vector<int>{2, 2, 2}, {2, 3, 6}}) {
        const CanonicalType t(arms);
        const auto z = decompose_slope_one(t, basis::e_zero(t));
        CHECK(z.r == 0);
        CHECK(z.l == std::vector<int>(static_cast<std::size_t>(t.n()), 0));
    }
    const CanonicalType t236({2, 3, 6});
    const DimVector d = basis::h(t236) + basis::e_of(t236, {1, 0, 3});
    const auto z = decompose_slope_one(t236, d);
    CHECK(z.r == 1);
    CHECK(z.l == std::vector<int>{1, 0, 3});
    CHECK(euler_form(t236, d, d) == 1);

    const CanonicalType t222({2, 2, 2});
    const auto w = decompose_slope_one(t222, basis::e_zero(t222) + basis::e(t222, 1, 1));
    CHECK(w.r == 0);
    CHECK(w.l == std::vector<int>{1, 0, 0});

    CHECK_THROWS_AS(decompose_slope_one(t222, Int(2) * basis::e_zero(t222)), PreconditionError);
    CHECK_THROWS_AS(decompose_slope_one(t222, basis::e_infinity(t222)), PreconditionError);
}
