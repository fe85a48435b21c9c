#pragma once
// Seeded invariant suites shared by the `verify` command and the tests.

#include <cstdint>
#include <string>
#include <vector>

#include "canalg/canonical_type.hpp"
#include "canalg/oracle.hpp"
#include "canalg/zeroset.hpp"

namespace canalg {

struct CheckResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    bool skipped = false;
    std::string detail;  // first counterexample, or why the check was skipped
    bool passed() const { return failures == 0; }
};

struct VerifyOptions {
    std::int64_t pmax = 4;
    std::uint64_t seed = 1;
    int samples = 1000;
    std::int64_t entry_bound = 12;  // random coordinates in [-bound, bound]
    std::uint64_t enum_limit = 200'000;  // skip P scans larger than this
    BruteForceScope scope;
};

CheckResult check_pairing_identities(const CanonicalType& t, const VerifyOptions& o);
CheckResult check_decomposition(const CanonicalType& t, const VerifyOptions& o);
CheckResult check_translation_and_adim(const CanonicalType& t, const VerifyOptions& o);
// Lower bound on random vectors plus tightness on random points of the
// equality ray through the witness.
CheckResult check_quadratic_bound(const CanonicalType& t, const VerifyOptions& o);
// Random members of P, and every member of P with d_0 <= pmax when small enough.
CheckResult check_cone_duality(const CanonicalType& t, const VerifyOptions& o);
CheckResult check_slope_one(const CanonicalType& t, const VerifyOptions& o);
CheckResult check_dp_kernels(const CanonicalType& t, const VerifyOptions& o);
CheckResult check_dp_vs_naive(const CanonicalType& t, const VerifyOptions& o);
CheckResult check_boundary_criteria(const CanonicalType& t, const VerifyOptions& o);
CheckResult check_tube_identities(const CanonicalType& t, const VerifyOptions& o);
// End bound, <d', dim X> >= 0, membership and the shape of (+)-triples over Z_p.
CheckResult check_zeroset_triples(const CanonicalType& t, const VerifyOptions& o);
// Brute-force (+)-count against component_count_formula, p in [threshold + 1, pmax].
CheckResult check_component_count(const CanonicalType& t, const VerifyOptions& o);
CheckResult check_thresholds(const CanonicalType& t, const VerifyOptions& o);

// Builds every exceptional simple, every length-two exceptional uniserial and
// the homogeneous uniserials of size 1..max_homogeneous at mu, checks the
// relations on each and compares every pairwise hom_dim_linear with the
// combinatorial tube prediction.
CheckResult check_oracle_equivalence(const CanonicalType& t, const oracle::LambdaChoice& lambdas,
                                     const Rational& mu, int max_homogeneous = 3);

std::vector<CheckResult> verify_type(const CanonicalType& t, const VerifyOptions& o);

}  // namespace canalg
