// Acceptance battery: one PASS/FAIL line per criterion.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "canalg/cones.hpp"
#include "canalg/errors.hpp"
#include "canalg/forms.hpp"
#include "canalg/geometry.hpp"
#include "canalg/oracle.hpp"
#include "canalg/verify.hpp"
#include "canalg/zeroset.hpp"
#include "type_list.hpp"

using namespace canalg;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream notes;
    void expect(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) notes << "; ";
            ok = false;
            notes << what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void on_boundary_type(Outcome& o) {
    const auto start = std::chrono::steady_clock::now();
    const CanonicalType t({5, 5, 5, 5, 5});
    const DimVector dstar = DimVector::parse("5;4,3,2,1/4,3,2,1/4,3,2,1/4,3,2,1/4,3,2,1;0", t);
    const auto g = analyze_geometry(t, 5);
    o.expect(g.is_ci && !g.is_normal, "p=5 flags");
    o.expect(g.component_count == 2 && g.components.size() == 2, "p=5 component count");
    o.expect(g.components.size() == 2 && g.components[0].is_zero() && g.components[1] == dstar, "p=5 second component");
    for (std::int64_t p : {3, 4, 6, 7}) {
        const auto r = analyze_geometry(t, p);
        o.expect(r.is_ci && r.is_normal && r.component_count == 1, "p=" + std::to_string(p));
    }
    const double secs = seconds_since(start);
    o.expect(secs < 10, "took " + std::to_string(secs) + " s");
}

void boundary_battery(Outcome& o) {
    for (auto arms : {std::vector<int>{2, 2, 2}, {2, 3, 6}, {2, 2, 2, 2}}) {
        const CanonicalType t(arms);
        for (std::int64_t p = 1; p <= 8; ++p)
            o.expect(is_complete_intersection(t, p) && is_normal(t, p), t.str() + " p=" + std::to_string(p));
    }
    const CanonicalType on({3, 3, 3, 3, 3, 3});
    o.expect(classify_type(on).boundary == Boundary::On, "(3^6) not on the boundary");
    for (std::int64_t p = 1; p <= 6; ++p) {
        const auto g = analyze_geometry(on, p, 0);
        o.expect(g.is_ci && g.component_count == theorem2_prediction(on, p), "(3^6) p=" + std::to_string(p));
    }
    const CanonicalType below({3, 3, 3, 3, 3, 3, 3});
    const Witness w = ci_failure_witness(below);
    o.expect(w.p == 2187 && w.d.d0() - w.d.dinf() == w.p, "(3^7) witness level");
    o.expect(in_P(below, w.d) && !w.d.is_zero(), "(3^7) witness not in P");
    o.expect(euler_form(below, w.d, w.d) + w.p * w.p < 0, "(3^7) witness does not violate");
}

void zeroset_counts(Outcome& o) {
    const CanonicalType t({2, 2, 2});
    const std::int64_t p = 4;
    const Int formula = component_count_formula(t, p);
    o.expect(formula == 27, "formula gives " + to_string(formula));
    const auto start = std::chrono::steady_clock::now();
    const auto plus = components_bruteforce(t, p);
    o.expect(plus.size() == 27, "brute force finds " + std::to_string(plus.size()) + " (+)-triples");
    const DimVector h = basis::h(t);
    bool nonneg = true, strict = true;
    for_each_Zp(t, p, [&](const ZTriple& z) {
        const Int d = diff(t, p, z);
        nonneg = nonneg && d >= 0;
        if (euler_form(t, z.dprime, h) > 1) strict = strict && d > 0;
        return true;
    });
    o.expect(nonneg, "diff < 0 on Z_4");
    o.expect(strict, "diff not strict for <d',h> > 1");
    const double secs = seconds_since(start);
    o.expect(secs < 60, "brute force took " + std::to_string(secs) + " s");

    const CanonicalType w({2, 3, 7});
    o.expect(threshold_N(w) == 5, "threshold of (2,3,7)");
    // (p - n) m_1...m_n + sum over nonempty proper subsets of the product + 1
    Int expect = Int(5 - 3) * 42 + 1;
    const auto& m = w.arms();
    for (unsigned mask = 1; mask + 1 < (1u << m.size()); ++mask) {
        Int prod = 1;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (mask & (1u << i)) prod *= m[i];
        expect += prod;
    }
    o.expect(component_count_formula(w, 5) == expect && expect == 138, "(2,3,7) count at p=5");
}

void property_suites(Outcome& o, std::uint64_t seed) {
    VerifyOptions vo;
    vo.seed = seed;
    vo.samples = 1000;
    vo.pmax = 3;
    const std::vector<std::vector<int>> types = {{2, 2, 2}, {2, 3, 6}, {2, 3, 7}, {2, 2, 2, 2}, {5, 5, 5, 5, 5}, {3, 3, 3, 3, 3, 3, 3}};
    for (const auto& arms : types) {
        const CanonicalType t(arms);
        for (const auto& check : {check_pairing_identities(t, vo), check_decomposition(t, vo), check_quadratic_bound(t, vo),
                                  check_cone_duality(t, vo), check_slope_one(t, vo)}) {
            o.expect(check.passed() && check.cases >= 1000, t.str() + " " + check.name + ": " + check.detail);
        }
    }
    vo.pmax = 5;
    const auto z = check_zeroset_triples(CanonicalType({2, 2, 2}), vo);
    o.expect(z.passed() && !z.skipped, "(2,2,2) Z_p triples: " + z.detail);
}

void oracle_equivalence(Outcome& o) {
    const auto start = std::chrono::steady_clock::now();
    for (auto arms : {std::vector<int>{2, 2, 2}, {2, 3, 4}}) {
        const CanonicalType t(arms);
        const oracle::LambdaChoice lam(t, {Rational(1)});
        const auto r = check_oracle_equivalence(t, lam, Rational(2), 3);
        o.expect(r.passed(), t.str() + ": " + r.detail);
        for (std::size_t p = 1; p <= 3; ++p) {
            const auto hp = oracle::build_homogeneous(t, lam, Rational(2), p);
            o.expect(oracle::hom_dim_linear(t, hp, hp) == p, "End of Jordan size " + std::to_string(p));
        }
    }
    const double secs = seconds_since(start);
    o.expect(secs < 30, "took " + std::to_string(secs) + " s");
}

void dp_vs_naive(Outcome& o) {
    std::size_t cases = 0;
    for (const auto& arms : types_up_to(30)) {
        const CanonicalType t(arms);
        for (std::int64_t p = 1; p <= 3; ++p) {
            ++cases;
            const std::string at = t.str() + " p=" + std::to_string(p);
            o.expect(ci_defect(t, p) == ci_defect_naive(t, p), "defect at " + at);
            auto naive = equality_vectors_naive(t, p);
            std::sort(naive.begin(), naive.end());
            // every type in range lies above the boundary, so the DP equality set is defined
            o.expect(is_complete_intersection(t, p), "not CI at " + at);
            if (!is_complete_intersection(t, p)) continue;
            auto dp = irreducible_components(t, p);
            std::sort(dp.begin(), dp.end());
            o.expect(dp == naive, "equality vectors at " + at);
        }
    }
    o.expect(cases > 0, "no types");
}

}  // namespace

int main() {
    const std::uint64_t seed = 20261015;
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"1 on-boundary type (5,5,5,5,5)", on_boundary_type},
        {"2 boundary battery", boundary_battery},
        {"3 zero-set component counts", zeroset_counts},
        {"4 property suites (seed " + std::to_string(seed) + ")", [&](Outcome& o) { property_suites(o, seed); }},
        {"5 oracle equivalence", oracle_equivalence},
        {"6 DP against naive enumeration", dp_vs_naive},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            run(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << name;
        if (!o.ok) std::cout << "  [" << o.notes.str() << "]";
        std::cout << std::endl;
        failed += o.ok ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
