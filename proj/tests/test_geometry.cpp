#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "canalg/cones.hpp"
#include "canalg/errors.hpp"
#include "canalg/forms.hpp"
#include "canalg/geometry.hpp"
#include "type_list.hpp"

using namespace canalg;

namespace {

const CanonicalType t55555({5, 5, 5, 5, 5});
const DimVector dstar = DimVector::parse("5;4,3,2,1/4,3,2,1/4,3,2,1/4,3,2,1/4,3,2,1;0");

}  // namespace

TEST_CASE("classification") {
    auto c = classify_type(CanonicalType({2, 2, 2}));
    CHECK(c.boundary == Boundary::Above);
    CHECK(c.representation == RepresentationType::Domestic);
    c = classify_type(CanonicalType({3, 3, 3, 3, 3, 3}));
    CHECK(c.boundary == Boundary::On);
    CHECK(c.representation == RepresentationType::Wild);
    c = classify_type(CanonicalType({3, 3, 3, 3, 3, 3, 3}));
    CHECK(c.boundary == Boundary::Below);
    CHECK(c.representation == RepresentationType::Wild);
    CHECK(classify_type(CanonicalType({2, 3, 6})).representation == RepresentationType::Tubular);
    CHECK(classify_type(t55555).boundary == Boundary::On);
    CHECK(to_string(Boundary::Above) == "above_boundary");
    CHECK(to_string(RepresentationType::Wild) == "wild");
}

TEST_CASE("defect examples") {
    const CanonicalType t236({2, 3, 6});
    CHECK(ci_defect(t236, 4) == 0);
    CHECK(ci_defect_naive(t236, 4) == 0);
    CHECK(equality_vectors_naive(t236, 4) == std::vector<DimVector>{DimVector::zero(t236)});
    CHECK(ci_defect(t55555, 5) == 0);
    CHECK(ci_defect(CanonicalType({3, 3, 3, 3, 3, 3, 3}), 2187) < 0);
}

TEST_CASE("complete intersection and normality") {
    const CanonicalType t236({2, 3, 6});
    for (std::int64_t p = 1; p <= 8; ++p) {
        CHECK(is_complete_intersection(t236, p));
        CHECK(is_normal(t236, p));
    }
    CHECK(is_complete_intersection(t55555, 5));
    CHECK_FALSE(is_normal(t55555, 5));
    CHECK(is_complete_intersection(t55555, 3));
    CHECK(is_normal(t55555, 3));
    CHECK_FALSE(is_complete_intersection(CanonicalType({3, 3, 3, 3, 3, 3, 3}), 2187));
}

TEST_CASE("irreducible components") {
    const CanonicalType t236({2, 3, 6});
    CHECK(irreducible_components(t236, 3) == std::vector<DimVector>{DimVector::zero(t236)});
    auto comps = irreducible_components(t55555, 5);
    std::sort(comps.begin(), comps.end());
    CHECK(comps == std::vector<DimVector>{DimVector::zero(t55555), dstar});
    CHECK(irreducible_components(t55555, 4) == std::vector<DimVector>{DimVector::zero(t55555)});
    CHECK_THROWS_AS(irreducible_components(CanonicalType({3, 3, 3, 3, 3, 3, 3}), 2187), PreconditionError);

    const auto g = analyze_geometry(t55555, 5);
    CHECK(g.is_ci);
    CHECK_FALSE(g.is_normal);
    CHECK(g.defect == 0);
    CHECK(g.component_count == 2);
    CHECK(g.components == std::vector<DimVector>{DimVector::zero(t55555), dstar});
    const auto bare = analyze_geometry(t55555, 5, 0);
    CHECK(bare.component_count == 2);
    CHECK(bare.components.empty());
}

TEST_CASE("witnesses") {
    const CanonicalType t237({2, 3, 7});
    const auto w = equality_witness(t237);
    CHECK(w.p == 42);
    CHECK(w.d == DimVector::parse("42;21/28,14/36,30,24,18,12,6;0"));
    CHECK(euler_form(t237, w.d, w.d) == -21);
    CHECK_THROWS_AS(ci_failure_witness(t237), PreconditionError);

    const CanonicalType t36({3, 3, 3, 3, 3, 3});
    const auto on = ci_failure_witness(t36);
    CHECK(on.p == 729);
    for (int i = 1; i <= 6; ++i) CHECK(on.d.arm(i) == std::vector<Int>{486, 243});
    CHECK(euler_form(t36, on.d, on.d) + on.p * (on.d.d0() - on.d.dinf()) == 0);

    const CanonicalType t37({3, 3, 3, 3, 3, 3, 3});
    const auto below = ci_failure_witness(t37);
    CHECK(below.p == 2187);
    CHECK(in_P(t37, below.d));
    CHECK(delta(t37) == Rational(4, 3));
    const Int value = euler_form(t37, below.d, below.d);
    CHECK(Rational(value) == -delta(t37) * Rational(below.p * below.p));
    CHECK(value + below.p * below.p < 0);
}

TEST_CASE("on-boundary prediction") {
    CHECK(theorem2_prediction(t55555, 5) == 2);
    CHECK(theorem2_prediction(t55555, 7) == 1);
    const CanonicalType t36({3, 3, 3, 3, 3, 3});
    CHECK(theorem2_prediction(t36, 6) == 2);
    for (std::int64_t p = 1; p <= 6; ++p) CHECK(analyze_geometry(t36, p, 0).component_count == theorem2_prediction(t36, p));
    CHECK_THROWS(theorem2_prediction(CanonicalType({2, 3, 7}), 5));
}

TEST_CASE("DP against naive enumeration, product up to 60, p up to 4") {
    for (const auto& arms : types_up_to(60)) {
        const CanonicalType t(arms);
        for (std::int64_t p = 1; p <= 4; ++p) {
            CAPTURE(t.str());
            CAPTURE(p);
            REQUIRE(ci_defect(t, p) == ci_defect_naive(t, p));
            auto naive = equality_vectors_naive(t, p);
            std::sort(naive.begin(), naive.end());
            if (is_complete_intersection(t, p)) {
                auto dp = irreducible_components(t, p);
                std::sort(dp.begin(), dp.end());
                REQUIRE(dp == naive);
            }
            if (delta(t) >= 0)
                for (const auto& d : naive)
                    if (!d.is_zero()) CHECK(lemmineq_bound(t, d).tight);
        }
    }
}
