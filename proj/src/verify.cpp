#include "canalg/verify.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>

#include "canalg/cones.hpp"
#include "canalg/errors.hpp"
#include "canalg/forms.hpp"
#include "canalg/geometry.hpp"
#include "canalg/kernels.hpp"
#include "canalg/tubes.hpp"

namespace canalg {
namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// Per-check seed so that each suite is reproducible on its own.
Rng make_rng(const VerifyOptions& o, std::uint64_t salt) {
    std::seed_seq seq{o.seed, salt};
    return Rng(seq);
}

DimVector random_vector(const CanonicalType& t, Rng& rng, std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> flat(static_cast<std::size_t>(t.vertex_count()));
    for (auto& x : flat) x = uniform(rng, lo, hi);
    return DimVector::from_flat(t, flat);
}

DimVector random_P(const CanonicalType& t, Rng& rng, std::int64_t bound) {
    const std::int64_t dinf = uniform(rng, 0, bound);
    const std::int64_t d0 = dinf + uniform(rng, 1, bound);
    DimVector d = DimVector::zero(t);
    d.set_d0(d0);
    d.set_dinf(dinf);
    for (int i = 1; i <= t.n(); ++i) {
        std::vector<std::int64_t> chain;
        for (int j = 1; j < t.arm_length(i); ++j) chain.push_back(uniform(rng, dinf, d0));
        std::sort(chain.rbegin(), chain.rend());
        for (int j = 1; j < t.arm_length(i); ++j) d.set(i, j, chain[static_cast<std::size_t>(j - 1)]);
    }
    return d;
}

std::vector<int> random_l(const CanonicalType& t, Rng& rng) {
    std::vector<int> l;
    for (int m : t.arms()) l.push_back(static_cast<int>(uniform(rng, 0, m - 1)));
    return l;
}

class Tally {
public:
    explicit Tally(std::string name) { r_.name = std::move(name); }
    void expect(bool ok, const std::string& what) {
        ++r_.cases;
        if (ok) return;
        if (r_.failures++ == 0) r_.detail = what;
    }
    void note(const std::string& s) {
        if (r_.failures == 0) r_.detail = r_.detail.empty() ? s : r_.detail + "; " + s;
    }
    CheckResult skip(const std::string& why) {
        r_.skipped = true;
        r_.detail = why;
        return r_;
    }
    CheckResult done() const { return r_; }

private:
    CheckResult r_;
};

std::string join_l(const std::vector<int>& l) {
    std::ostringstream os;
    for (std::size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
    return os.str();
}

// Number of members of P with d_0 <= p, or nullopt above `limit`.
std::optional<std::uint64_t> count_P(const CanonicalType& t, std::int64_t p, std::uint64_t limit) {
    std::uint64_t count = 0;
    try {
        for_each_P_flat(t, p, limit, [&](const std::vector<std::int64_t>&) {
            ++count;
            return true;
        });
    } catch (const CapExceeded&) {
        return std::nullopt;
    }
    return count;
}

}  // namespace

CheckResult check_pairing_identities(const CanonicalType& t, const VerifyOptions& o) {
    Tally tally("pairing_identities");
    auto rng = make_rng(o, 1);
    const DimVector h = basis::h(t);
    for (int s = 0; s < o.samples; ++s) {
        const DimVector d = random_vector(t, rng, -o.entry_bound, o.entry_bound);
        const std::string at = " at " + d.str();
        const Int slope = d.d0() - d.dinf();
        tally.expect(euler_form(t, d, h) == slope, "<d,h>" + at);
        tally.expect(euler_form(t, h, d) == -slope, "<h,d>" + at);
        for (int i = 1; i <= t.n(); ++i) {
            const int m = t.arm_length(i);
            for (int j = 1; j < m; ++j)
                tally.expect(euler_form(t, basis::e(t, i, j), d) == d.at(i, j) - d.at(i, j - 1), "<e_ij,d>" + at);
            tally.expect(euler_form(t, basis::e(t, i, 0), d) == d.at(i, m) - d.at(i, m - 1), "<e_i0,d>" + at);
            for (int j = 0; j < m; ++j)
                tally.expect(euler_form(t, d, basis::e(t, i, j)) == d.at(i, j) - d.at(i, j + 1), "<d,e_ij>" + at);
        }
    }
    return tally.done();
}

CheckResult check_decomposition(const CanonicalType& t, const VerifyOptions& o) {
    Tally tally("decomposition_identity");
    auto rng = make_rng(o, 2);
    for (int s = 0; s < o.samples; ++s) {
        const DimVector d = random_vector(t, rng, -o.entry_bound, o.entry_bound);
        tally.expect(Rational(euler_form(t, d, d)) == quadratic_via_decomposition(t, d), "at " + d.str());
    }
    return tally.done();
}

CheckResult check_translation_and_adim(const CanonicalType& t, const VerifyOptions& o) {
    Tally tally("translation_and_adim");
    auto rng = make_rng(o, 3);
    const DimVector h = basis::h(t);
    for (int s = 0; s < o.samples; ++s) {
        const DimVector d = random_vector(t, rng, -o.entry_bound, o.entry_bound);
        const Int c = uniform(rng, -o.entry_bound, o.entry_bound);
        const DimVector dc = d + c * h;
        tally.expect(euler_form(t, dc, dc) == euler_form(t, d, d), "translation at " + d.str());
        const DimVector nn = random_vector(t, rng, 0, o.entry_bound);
        tally.expect(a_dim(t, nn) == gl_dim(t, nn) - euler_form(t, nn, nn), "a_dim at " + nn.str());
    }
    return tally.done();
}

CheckResult check_quadratic_bound(const CanonicalType& t, const VerifyOptions& o) {
    Tally tally("quadratic_bound");
    auto rng = make_rng(o, 4);
    for (int s = 0; s < o.samples; ++s) {
        const DimVector d = random_vector(t, rng, -o.entry_bound, o.entry_bound);
        const Rational q(euler_form(t, d, d));
        const auto b = lemmineq_bound(t, d);
        tally.expect(q >= b.lower_bound, "bound at " + d.str());
        tally.expect(b.tight == (q == b.lower_bound), "tightness at " + d.str());
    }
    // The equality set is the lattice spanned by h and the primitive witness.
    const Int L = t.lcm();
    DimVector w = DimVector::zero(t);
    w.set_d0(L);
    for (int i = 1; i <= t.n(); ++i)
        for (int j = 1; j < t.arm_length(i); ++j) w.set(i, j, (t.arm_length(i) - j) * (L / t.arm_length(i)));
    const DimVector h = basis::h(t);
    for (int s = 0; s < o.samples; ++s) {
        const DimVector d = Int(uniform(rng, -3, 3)) * w + Int(uniform(rng, -o.entry_bound, o.entry_bound)) * h;
        const auto b = lemmineq_bound(t, d);
        tally.expect(b.tight && Rational(euler_form(t, d, d)) == b.lower_bound, "equality ray at " + d.str());
    }
    return tally.done();
}

CheckResult check_cone_duality(const CanonicalType& t, const VerifyOptions& o) {
    Tally tally("cone_duality");
    auto rng = make_rng(o, 5);
    const DimVector h = basis::h(t);
    auto one = [&](const DimVector& d, const Int& p) {
        const std::string at = " at " + d.str() + ", p=" + to_string(p);
        const DimVector dual = p * h - d;
        tally.expect(in_Q(t, dual), "ph-d in Q" + at);
        tally.expect(euler_form(t, dual, d) == -p * (d.d0() - d.dinf()) - euler_form(t, d, d), "<ph-d,d>" + at);
    };
    for (int s = 0; s < o.samples; ++s) {
        const DimVector d = random_P(t, rng, o.entry_bound);
        tally.expect(in_P(t, d), "random member not in P: " + d.str());
        one(d, d.d0() + uniform(rng, 0, o.entry_bound));
        const Int c = uniform(rng, 0, o.entry_bound);
        tally.expect(in_P(t, d + c * h), "translate leaves P at " + d.str());
        tally.expect(!in_P(t, Int(-1) * d), "-d in P at " + d.str());
    }
    for (std::int64_t p = 0; p <= o.pmax; ++p) {
        try {
            for_each_P_flat(t, p, o.enum_limit, [&](const std::vector<std::int64_t>& flat) {
                const DimVector d = DimVector::from_flat(t, flat);
                if (!d.is_zero()) one(d, p);
                return true;
            });
        } catch (const CapExceeded&) {
            tally.note("exhaustive scan stopped at p=" + std::to_string(p));
            break;
        }
    }
    return tally.done();
}

CheckResult check_slope_one(const CanonicalType& t, const VerifyOptions& o) {
    Tally tally("slope_one_roundtrip");
    auto rng = make_rng(o, 6);
    const DimVector h = basis::h(t);
    for (int s = 0; s < o.samples; ++s) {
        const Int r = uniform(rng, 0, o.entry_bound);
        const auto l = random_l(t, rng);
        const DimVector d = r * h + basis::e_of(t, l);
        const std::string at = " at r=" + to_string(r) + " l=" + join_l(l);
        tally.expect(in_P(t, d) && euler_form(t, d, h) == 1, "not slope one in P" + at);
        tally.expect(euler_form(t, d, d) == 1, "<d,d> != 1" + at);
        const auto dec = decompose_slope_one(t, d);
        tally.expect(dec.r == r && dec.l == l, "decomposition" + at);
    }
    return tally.done();
}

CheckResult check_dp_kernels(const CanonicalType& t, const VerifyOptions& o) {
    Tally tally("dp_kernels");
    std::vector<int> lengths = t.arms();
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    for (int m : lengths) {
        for (std::int64_t s = 0; s <= 40; ++s) {
            const std::string at = " at m=" + std::to_string(m) + " s=" + std::to_string(s);
            const auto ref = kernels::arm_min_reference(m, s);
            tally.expect(kernels::arm_min(m, s) == ref, "arm_min" + at);
            const auto mc = kernels::arm_min_count(m, s);
            tally.expect(mc.min == ref, "arm_min_count" + at);
            if (s <= 12) {
                const auto chains = kernels::arm_minimizers(m, s, 1'000'000);
                tally.expect(Int(chains.size()) == mc.count, "minimiser count" + at);
            }
        }
    }
    const std::int64_t p = std::max<std::int64_t>(o.pmax, 24);
    tally.expect(kernels::slice_minima_serial(t, p) == kernels::slice_minima_parallel(t, p),
                 "serial and parallel slice minima differ at p=" + std::to_string(p));
    return tally.done();
}

CheckResult check_dp_vs_naive(const CanonicalType& t, const VerifyOptions& o) {
    Tally tally("dp_vs_naive");
    for (std::int64_t p = 1; p <= o.pmax; ++p) {
        if (!count_P(t, p, o.enum_limit)) {
            tally.note("naive scan skipped from p=" + std::to_string(p));
            break;
        }
        const std::string at = " at p=" + std::to_string(p);
        tally.expect(ci_defect(t, p) == ci_defect_naive(t, p), "defect" + at);
        if (is_complete_intersection(t, p)) {
            auto dp = irreducible_components(t, p);
            auto naive = equality_vectors_naive(t, p);
            std::sort(dp.begin(), dp.end());
            std::sort(naive.begin(), naive.end());
            tally.expect(dp == naive, "equality vectors" + at);
        }
    }
    return tally.done();
}

CheckResult check_boundary_criteria(const CanonicalType& t, const VerifyOptions& o) {
    Tally tally("boundary_criteria");
    const auto cls = classify_type(t);
    const Witness w = equality_witness(t);
    const Int slope = w.d.d0() - w.d.dinf();
    tally.expect(in_P(t, w.d), "witness not in P");
    tally.expect(Rational(euler_form(t, w.d, w.d)) == -delta(t) * Rational(w.p * slope), "witness value");
    tally.expect(lemmineq_bound(t, w.d).tight, "witness not tight");
    switch (cls.boundary) {
        case Boundary::Above:
            for (std::int64_t p = 1; p <= o.pmax; ++p)
                tally.expect(is_complete_intersection(t, p) && is_normal(t, p),
                             "not CI and normal at p=" + std::to_string(p));
            break;
        case Boundary::On:
            for (std::int64_t p = 1; p <= o.pmax; ++p) {
                const auto g = analyze_geometry(t, p, 0);
                tally.expect(g.is_ci, "not CI at p=" + std::to_string(p));
                tally.expect(g.component_count == theorem2_prediction(t, p),
                             "component count at p=" + std::to_string(p));
                tally.expect(g.is_normal == (theorem2_prediction(t, p) == 1), "normality at p=" + std::to_string(p));
            }
            tally.expect(euler_form(t, w.d, w.d) + w.p * slope == 0, "on-boundary witness value");
            break;
        case Boundary::Below:
            tally.expect(euler_form(t, w.d, w.d) + w.p * slope < 0, "below-boundary witness does not violate");
            break;
    }
    return tally.done();
}

CheckResult check_tube_identities(const CanonicalType& t, const VerifyOptions&) {
    Tally tally("tube_identities");
    const DimVector h = basis::h(t);
    for (int i = 1; i <= t.n(); ++i) {
        const int m = t.arm_length(i);
        const std::string arm = " on arm " + std::to_string(i);
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                const int expect = (j == k ? 1 : 0) - (k == (j - 1 + m) % m ? 1 : 0);
                tally.expect(euler_form(t, basis::e(t, i, j), basis::e(t, i, k)) == expect, "simple pairing" + arm);
                tally.expect(hom_dim_tube(t, {i, j, 1}, {i, k, 1}) == (j == k ? 1 : 0), "simple hom" + arm);
            }
        for (int i2 = i + 1; i2 <= t.n(); ++i2)
            for (int j = 1; j < m; ++j)
                for (int k = 1; k < t.arm_length(i2); ++k) {
                    tally.expect(euler_form(t, basis::e(t, i, j), basis::e(t, i2, k)) == 0, "cross-arm pairing");
                    tally.expect(hom_dim_tube(t, {i, j, 1}, {i2, k, 1}) == 0, "cross-arm hom");
                }
        for (int a = 0; a < m; ++a) {
            for (int l = 1; l <= 2 * m; ++l) {
                const TubeIndec x{i, a, l};
                const std::string at = " at " + x.str();
                tally.expect(end_dim(t, x) == (l - 1) / m + 1, "end_dim" + at);
                tally.expect(dim_vector(t, TubeIndec{i, a, l + m}) == dim_vector(t, x) + h, "periodicity" + at);
                // Regular modules have projective and injective dimension <= 1,
                // so <X, Y> = [X, Y] - [Y, tau X] with tau lowering the socle.
                for (int b = 0; b < m; ++b)
                    for (int l2 = 1; l2 <= 2 * m; ++l2) {
                        const TubeIndec y{i, b, l2};
                        const TubeIndec tx{i, (a - 1 + m) % m, l};
                        tally.expect(euler_form(t, dim_vector(t, x), dim_vector(t, y)) ==
                                         hom_dim_tube(t, x, y) - hom_dim_tube(t, y, tx),
                                     "Auslander-Reiten formula" + at + " vs " + y.str());
                    }
            }
        }
    }
    for (int l = 1; l <= 6; ++l)
        for (int l2 = 1; l2 <= 6; ++l2)
            tally.expect(uniserial_hom_dim(1, 0, l, 0, l2) == std::min(l, l2), "rank one hom");
    return tally.done();
}

CheckResult check_zeroset_triples(const CanonicalType& t, const VerifyOptions& o) {
    Tally tally("zeroset_triples");
    bool any = false;
    const Int n = t.n();
    std::optional<Int> threshold;
    if (delta(t) < 1) threshold = threshold_N(t);
    for (std::int64_t p = 1; p <= o.pmax; ++p) {
        if (!in_bruteforce_scope(t, p, o.scope)) break;
        any = true;
        const DimVector h = basis::h(t);
        const Int target = target_zero_dim(t, p);
        for (const ZTriple& z : enumerate_Zp(t, p)) {
            const std::string at = " at p=" + std::to_string(p) + " " + z.dprime.str() + " | " + z.X.str();
            const Int slope = euler_form(t, z.dprime, h);
            tally.expect(in_Zp(t, p, z), "membership" + at);
            tally.expect(Int(end_dim(t, z.X)) >= t.total() - n * slope, "End bound" + at);
            tally.expect(euler_form(t, z.dprime, dim_vector(t, z.X)) >= 0, "<d',dim X> < 0" + at);
            const Int df = diff(t, p, z);
            if (threshold && p >= *threshold) tally.expect(df >= 0, "diff < 0" + at);
            if (p > t.n() && slope > 1) tally.expect(df > 0, "diff not strict" + at);
            const bool plus = satisfies_plus(t, p, z);
            if (threshold && p > *threshold)
                tally.expect(plus == (stratum_dim(t, p, z) == target), "equality stratum vs (+)" + at);
            if (!plus) continue;
            tally.expect(df == 0 && stratum_dim(t, p, z) == target, "(+) triple not of full dimension" + at);
            const auto dec = decompose_slope_one(t, z.dprime);
            RegularModuleClass expect;
            for (int i = 1; i <= t.n(); ++i)
                for (int j = 0; j < t.arm_length(i); ++j)
                    if (j != dec.l[static_cast<std::size_t>(i - 1)]) expect.add({i, j, 1});
            tally.expect(z.X == expect, "(+) triple X" + at);
        }
    }
    if (!any) return tally.skip("outside brute-force scope");
    return tally.done();
}

CheckResult check_component_count(const CanonicalType& t, const VerifyOptions& o) {
    Tally tally("component_count_formula");
    if (delta(t) >= 1) return tally.skip("delta >= 1");
    const Int threshold = threshold_N(t);
    bool any = false;
    for (std::int64_t p = 1; p <= o.pmax; ++p) {
        if (p <= threshold || p < t.n()) continue;
        if (!in_bruteforce_scope(t, p, o.scope)) break;
        any = true;
        const auto found = components_bruteforce(t, p).size();
        const Int formula = component_count_formula(t, p);
        tally.expect(Int(found) == formula, "p=" + std::to_string(p) + ": brute force " + std::to_string(found) +
                                                ", formula " + to_string(formula));
    }
    if (!any) return tally.skip("no level above the threshold inside the brute-force scope");
    return tally.done();
}

CheckResult check_thresholds(const CanonicalType& t, const VerifyOptions&) {
    Tally tally("thresholds");
    const Rational dl = delta(t);
    if (dl >= 1) {
        bool threw = false;
        try {
            (void)threshold_N(t);
        } catch (const OutOfRange&) {
            threw = true;
        }
        tally.expect(threw, "threshold_N accepted delta >= 1");
        return tally.done();
    }
    const Int N = threshold_N(t);
    if (dl < 0) tally.expect(N == t.n(), "domestic threshold");
    if (dl == 0) tally.expect(N == t.n() + 1, "tubular threshold");
    if (dl > 0) {
        tally.expect(threshold_gap_holds(t), "threshold gap");
        tally.expect(Rational(N) >= Rational(t.n() + 1) / (1 - dl), "threshold below bound");
        for (std::int64_t p = to_int64(N); p <= to_int64(N) + 5; ++p)
            tally.expect(wild_bound_check(t, p), "f not positive at p=" + std::to_string(p));
    }
    return tally.done();
}

CheckResult check_oracle_equivalence(const CanonicalType& t, const oracle::LambdaChoice& lambdas,
                                     const Rational& mu, int max_homogeneous) {
    Tally tally("oracle_equivalence");
    struct Built {
        std::string name;
        oracle::MatrixRep rep;
        std::optional<TubeIndec> tube;  // empty for homogeneous
        int size = 0;                   // homogeneous size
    };
    std::vector<Built> mods;
    for (int i = 1; i <= t.n(); ++i)
        for (int j = 0; j < t.arm_length(i); ++j) {
            const TubeIndec x{i, j, 1};
            mods.push_back({"S" + x.str(), oracle::build_exceptional_simple(t, lambdas, i, j), x, 0});
        }
    for (int i = 1; i <= t.n(); ++i)
        for (int a = 0; a < t.arm_length(i); ++a) {
            const TubeIndec x{i, a, 2};
            mods.push_back({"U" + x.str(), oracle::build_length_two(t, lambdas, i, a), x, 0});
        }
    for (int s = 1; s <= max_homogeneous; ++s)
        mods.push_back({"H" + std::to_string(s),
                        oracle::build_homogeneous(t, lambdas, mu, static_cast<std::size_t>(s)), std::nullopt, s});

    for (const auto& m : mods) {
        tally.expect(oracle::check_relations(t, lambdas, m.rep), "relations fail for " + m.name);
        const DimVector expect = m.tube ? dim_vector(t, *m.tube) : Int(m.size) * basis::h(t);
        tally.expect(m.rep.dim == expect, "dimension vector of " + m.name);
    }
    for (const auto& x : mods)
        for (const auto& y : mods) {
            int predicted = 0;
            if (x.tube && y.tube) predicted = hom_dim_tube(t, *x.tube, *y.tube);
            else if (!x.tube && !y.tube) predicted = std::min(x.size, y.size);
            const auto got = oracle::hom_dim_linear(t, x.rep, y.rep);
            tally.expect(got == static_cast<std::size_t>(predicted),
                         "Hom(" + x.name + "," + y.name + ") = " + std::to_string(got) + ", predicted " +
                             std::to_string(predicted));
        }
    // Additivity on a direct sum of the first two modules of every arm.
    for (std::size_t k = 0; k + 1 < mods.size(); k += 3) {
        const auto sum = oracle::direct_sum(mods[k].rep, mods[k + 1].rep);
        tally.expect(oracle::check_relations(t, lambdas, sum), "relations fail on a direct sum");
        for (const auto& y : mods)
            tally.expect(oracle::hom_dim_linear(t, sum, y.rep) ==
                             oracle::hom_dim_linear(t, mods[k].rep, y.rep) + oracle::hom_dim_linear(t, mods[k + 1].rep, y.rep),
                         "Hom not additive on " + mods[k].name + "+" + mods[k + 1].name);
    }
    return tally.done();
}

std::vector<CheckResult> verify_type(const CanonicalType& t, const VerifyOptions& o) {
    return {check_pairing_identities(t, o), check_decomposition(t, o),  check_translation_and_adim(t, o),
            check_quadratic_bound(t, o),    check_cone_duality(t, o),   check_slope_one(t, o),
            check_dp_kernels(t, o),         check_dp_vs_naive(t, o),    check_boundary_criteria(t, o),
            check_tube_identities(t, o),    check_zeroset_triples(t, o), check_component_count(t, o),
            check_thresholds(t, o),
            check_oracle_equivalence(t, oracle::LambdaChoice::defaults(t), Rational(t.n() - 1), 2)};
}

}  // namespace canalg
