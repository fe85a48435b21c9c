#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "canalg/cones.hpp"
#include "canalg/errors.hpp"
#include "canalg/forms.hpp"
#include "canalg/tubes.hpp"
#include "canalg/zeroset.hpp"

using namespace canalg;

namespace {

const CanonicalType t222({2, 2, 2});
const CanonicalType t236({2, 3, 6});
const CanonicalType t237({2, 3, 7});

bool leq(const DimVector& a, const DimVector& b) { return (b - a).is_nonnegative(); }

// Z_p by multiplicity vectors over every indecomposable below p h.
std::vector<ZTriple> naive_Zp(const CanonicalType& t, std::int64_t p) {
    const DimVector h = basis::h(t);
    const auto indecs = tube_indecs_below(t, Int(p) * h);
    std::vector<ZTriple> out;
    for (std::int64_t q = 1; q <= p; ++q) {
        const DimVector qh = Int(q) * h;
        for (const auto& dp : enumerate_P(t, q)) {
            if (dp.is_zero() || !leq(dp, qh)) continue;
            std::vector<int> mult(indecs.size(), 0);
            for (;;) {
                RegularModuleClass X;
                for (std::size_t k = 0; k < indecs.size(); ++k)
                    for (int c = 0; c < mult[k]; ++c) X.add(indecs[k]);
                const DimVector dd = qh - dp - dim_vector(t, X);
                if (dd.is_nonnegative() && in_Q(t, dd)) {
                    bool covered = true;
                    for (int i = 1; i <= t.n() && covered; ++i)
                        for (int j = 0; j < t.arm_length(i) && covered; ++j)
                            covered = euler_form(t, dp, basis::e(t, i, j)) != 0 || hom_to_simple_nonzero(t, X, i, j);
                    if (covered) out.push_back({dp, dd, X, static_cast<int>(q)});
                }
                // next multiplicity vector whose dimension still fits under q h - d'
                std::size_t k = 0;
                for (; k < mult.size(); ++k) {
                    ++mult[k];
                    RegularModuleClass Y;
                    for (std::size_t a = 0; a < indecs.size(); ++a)
                        for (int c = 0; c < mult[a]; ++c) Y.add(indecs[a]);
                    if (leq(dp + dim_vector(t, Y), qh)) break;
                    mult[k] = 0;
                }
                if (k == mult.size()) break;
            }
        }
    }
    return out;
}

auto triple_key(const ZTriple& z) { return std::tie(z.q, z.dprime, z.X); }

// Triples with <d', h> = 1 and q = p: d' = r h + e(l), X the simples off l,
// completed into Q exactly when r + #{l_i > 0} <= p - 1.
Int slope_one_count(const CanonicalType& t, std::int64_t p) {
    Int total = 0;
    std::vector<int> l(static_cast<std::size_t>(t.n()), 0);
    for (;;) {
        const auto k = std::count_if(l.begin(), l.end(), [](int v) { return v > 0; });
        total += std::max<std::int64_t>(0, p - k);
        std::size_t i = 0;
        while (i < l.size() && ++l[i] == t.arm_length(static_cast<int>(i) + 1)) l[i++] = 0;
        if (i == l.size()) break;
    }
    return total;
}

}  // namespace

TEST_CASE("Z_1 for (2,2,2)") {
    const auto z = enumerate_Zp(t222, 1);
    const ZTriple expected{basis::e_zero(t222), basis::e_infinity(t222), RegularModuleClass({{1, 1, 1}, {2, 1, 1}, {3, 1, 1}}), 1};
    CHECK(std::find(z.begin(), z.end(), expected) != z.end());
    for (const auto& x : z) {
        CHECK_FALSE(x.dprime.is_zero());
        CHECK(in_Zp(t222, 1, x));
    }
    CHECK(stratum_dim(t222, 1, expected) == 0);
    CHECK(a_dim(t222, basis::h(t222)) == 5);
}

TEST_CASE("enumeration against multiplicity vectors") {
    for (auto [arms, pmax] : std::vector<std::pair<std::vector<int>, std::int64_t>>{{{2, 2, 2}, 3}, {{2, 2, 3}, 2}, {{2, 3, 3}, 2}}) {
        const CanonicalType t(arms);
        for (std::int64_t p = 1; p <= pmax; ++p) {
            auto fast = enumerate_Zp(t, p);
            auto naive = naive_Zp(t, p);
            auto cmp = [](const ZTriple& a, const ZTriple& b) { return triple_key(a) < triple_key(b); };
            CHECK(std::is_sorted(fast.begin(), fast.end(), cmp));
            std::sort(naive.begin(), naive.end(), cmp);
            CAPTURE(t.str());
            CAPTURE(p);
            CHECK(fast == naive);
        }
    }
}

TEST_CASE("serial and parallel schedules agree") {
    for (std::int64_t p = 1; p <= 4; ++p)
        CHECK(enumerate_Zp(t222, p, kDefaultCap, Schedule::Serial) == enumerate_Zp(t222, p, kDefaultCap, Schedule::Parallel));
    std::vector<ZTriple> streamed;
    for_each_Zp(t222, 3, [&](const ZTriple& z) {
        streamed.push_back(z);
        return streamed.size() < 100;
    });
    const auto all = enumerate_Zp(t222, 3);
    CHECK(streamed == std::vector<ZTriple>(all.begin(), all.begin() + 100));
    CHECK_THROWS_AS(enumerate_Zp(t222, 3, 10), CapExceeded);
}

TEST_CASE("End bound and pairing with X over Z_p, (2,2,2), p <= 5") {
    const DimVector h = basis::h(t222);
    for (std::int64_t p = 1; p <= 5; ++p) {
        std::size_t seen = 0;
        bool ok = true;
        for_each_Zp(t222, p, [&](const ZTriple& z) {
            ++seen;
            const Int slope = euler_form(t222, z.dprime, h);
            ok = ok && Int(end_dim(t222, z.X)) >= t222.total() - t222.n() * slope;
            ok = ok && euler_form(t222, z.dprime, dim_vector(t222, z.X)) >= 0;
            if (p > 3 && slope > 1) ok = ok && diff(t222, p, z) > 0;
            if (p >= 3) ok = ok && diff(t222, p, z) >= 0;
            return ok;
        });
        CAPTURE(p);
        CHECK(ok);
        CHECK(seen > 0);
    }
}

TEST_CASE("diff examples") {
    const ZTriple z{basis::e_zero(t222), basis::e_infinity(t222), RegularModuleClass({{1, 1, 1}, {2, 1, 1}, {3, 1, 1}}), 1};
    CHECK(diff(t222, 3, z) == 2);
    for (std::int64_t p = 1; p <= 4; ++p)
        for (const auto& x : enumerate_Zp(t222, p))
            if (euler_form(t222, x.dprime, basis::h(t222)) == 1) REQUIRE(diff(t222, p, x) == p - x.q);
}

TEST_CASE("zero set is a complete intersection at the thresholds") {
    CHECK(zeroset_is_ci(t222, 4));
    CHECK(zeroset_is_ci(t236, 5));
    CHECK(zeroset_is_ci(t237, 5));
    CHECK_THROWS_AS(zeroset_is_ci(CanonicalType({5, 5, 5, 5, 5}), 5), PreconditionError);
}

TEST_CASE("decision agrees with the full scan") {
    for (auto arms : {std::vector<int>{2, 2, 2}, {2, 2, 3}, {2, 3, 3}})
        for (std::int64_t p = 1; p <= 3; ++p) {
            const CanonicalType t(arms);
            bool all = true;
            for_each_Zp(t, p, [&](const ZTriple& z) { return all = diff(t, p, z) >= 0; });
            CAPTURE(t.str());
            CAPTURE(p);
            CHECK(zeroset_is_ci(t, p) == all);
        }
}

TEST_CASE("component count formula") {
    CHECK(component_count_formula(t222, 4) == 27);
    CHECK(component_count_formula(t237, 5) == 2 * 42 + (2 + 3 + 7) + (6 + 14 + 21) + 1);
    CHECK(component_count_formula(t237, 5) == 138);
    CHECK(component_count_formula(t222, 3) == 19);
    CHECK(component_count_formula(t236, 3) == (2 + 3 + 6) + (6 + 12 + 18) + 1);
    CHECK_THROWS_AS(component_count_formula(t222, 2), PreconditionError);
}

TEST_CASE("(+)-triples against the slope-one count") {
    for (auto arms : {std::vector<int>{2, 2, 2}, {2, 2, 3}, {2, 3, 3}, {2, 2, 2, 2}})
        for (std::int64_t p = 1; p <= 4; ++p) {
            const CanonicalType t(arms);
            CAPTURE(t.str());
            CAPTURE(p);
            CHECK(Int(components_bruteforce(t, p).size()) == slope_one_count(t, p));
        }
}

TEST_CASE("(+)-triples, (2,2,2)") {
    const auto four = components_bruteforce(t222, 4);
    CHECK(four.size() == 27);
    CHECK(components_bruteforce(t222, 3).size() == 19);
    for (const auto& z : four) {
        CHECK(stratum_dim(t222, 4, z) == target_zero_dim(t222, 4));
        CHECK(diff(t222, 4, z) == 0);
        const auto dec = decompose_slope_one(t222, z.dprime);
        RegularModuleClass off;
        for (int i = 1; i <= 3; ++i)
            for (int j = 0; j < 2; ++j)
                if (j != dec.l[static_cast<std::size_t>(i - 1)]) off.add({i, j, 1});
        CHECK(z.X == off);
    }
    CHECK(target_zero_dim(t222, 4) == a_dim(t222, Int(4) * basis::h(t222)) - 6 - 4 - 1 + 3);
}

TEST_CASE("thresholds") {
    CHECK(threshold_N(t222) == 3);
    CHECK(threshold_N(t236) == 4);
    CHECK(threshold_N(t237) == 5);
    CHECK_THROWS_AS(threshold_N(CanonicalType({5, 5, 5, 5, 5})), OutOfRange);
    CHECK(wild_bound_f(t237, 5, 2) == Rational(20, 21));
    CHECK(wild_bound_f(t237, 5, 5) == Rational(563, 84));
    CHECK(wild_bound_check(t237, 5));
    CHECK_THROWS_AS(wild_bound_check(t237, 4), PreconditionError);
    for (auto arms : {std::vector<int>{2, 3, 7}, {2, 4, 5}, {3, 3, 4}, {2, 2, 2, 3}, {2, 3, 11}})
        CHECK(threshold_gap_holds(CanonicalType(arms)));
}

TEST_CASE("zero set report") {
    const auto r = analyze_zeroset(t222, 4);
    CHECK(r.is_ci);
    REQUIRE(r.component_count);
    CHECK(*r.component_count == 27);
    CHECK(r.count_proved);
    CHECK(r.threshold == 3);
    const auto at_n = analyze_zeroset(t222, 3);
    CHECK_FALSE(at_n.count_proved);
    CHECK_THROWS_AS(analyze_zeroset(CanonicalType({3, 3, 3, 3, 3, 3}), 2), OutOfRange);
}
