#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "canalg/canonical_type.hpp"
#include "canalg/cones.hpp"
#include "canalg/dim_vector.hpp"
#include "canalg/numeric.hpp"
#include "canalg/tubes.hpp"

namespace canalg {

// Index of one stratum C_p(d', d'', X) of the zero set: d' in P nonzero,
// d'' in Q, X over the exceptional tubes, d' + d'' + dim X = q h.
struct ZTriple {
    DimVector dprime;
    DimVector ddouble;
    RegularModuleClass X;
    int q = 1;

    friend bool operator==(const ZTriple&, const ZTriple&) = default;
};

// Z_p brute force only runs inside this box.
struct BruteForceScope {
    Int max_product = 20;
    std::int64_t max_level = 6;
};

bool in_bruteforce_scope(const CanonicalType& t, std::int64_t p, const BruteForceScope& scope = {});

// Full membership re-check of a triple in Z_p.
bool in_Zp(const CanonicalType& t, std::int64_t p, const ZTriple& z);

enum class Schedule { Serial, Parallel };

// Streams Z_p in the order of enumerate_Zp without holding it in memory.
// Triples are built in parallel chunks; visit runs on the calling thread.
// Returning false from visit stops the walk.
void for_each_Zp(const CanonicalType& t, std::int64_t p, const std::function<bool(const ZTriple&)>& visit,
                 Schedule schedule = Schedule::Parallel);
void for_each_Zp_levels(const CanonicalType& t, std::int64_t p, std::int64_t q_min, std::int64_t q_max,
                        const std::function<bool(const ZTriple&)>& visit, Schedule schedule = Schedule::Parallel);

// All of Z_p ordered by (q, d', X). Throws CapExceeded past `cap` triples.
std::vector<ZTriple> enumerate_Zp(const CanonicalType& t, std::int64_t p, std::uint64_t cap = kDefaultCap,
                                  Schedule schedule = Schedule::Parallel);

// The triples of Z_p with q in [q_min, q_max].
std::vector<ZTriple> enumerate_Zp_levels(const CanonicalType& t, std::int64_t p, std::int64_t q_min, std::int64_t q_max,
                                         std::uint64_t cap = kDefaultCap, Schedule schedule = Schedule::Parallel);

// (p - q) <d', h> + (p - n)(<d', h> - 1) + (<d', d'> - 1)
Int diff(const CanonicalType& t, std::int64_t p, const ZTriple& z);

// a(p h) - ((2p - q) <d', h> + <d', d'> + <d', dim X> + [X, X])
Int stratum_dim(const CanonicalType& t, std::int64_t p, const ZTriple& z);

// a(p h) - |m| - p - 1 + n
Int target_zero_dim(const CanonicalType& t, std::int64_t p);

// <d', dim X> = 0, [X, X] = |m| - n <d', h>, <d', h> = 1, q = p.
bool satisfies_plus(const CanonicalType& t, std::int64_t p, const ZTriple& z);

std::vector<ZTriple> components_bruteforce(const CanonicalType& t, std::int64_t p, std::uint64_t cap = kDefaultCap);

// (p - n) m_1...m_n + sum_{l in [1, n-1]} e_l(m) + 1, for p >= n.
Int component_count_formula(const CanonicalType& t, std::int64_t p);

// n if delta < 0, n + 1 if delta = 0, ceil((n + 1) / (1 - delta)) if
// 0 < delta < 1. Throws OutOfRange for delta >= 1.
Int threshold_N(const CanonicalType& t);

// f(x) = -delta x^2 + x (p - n) + (n - p - 1)
Rational wild_bound_f(const CanonicalType& t, std::int64_t p, const Rational& x);
// f > 0 at 2, at p and at every integer in between. Needs 0 < delta < 1 and p >= threshold_N.
bool wild_bound_check(const CanonicalType& t, std::int64_t p);
// 4 delta + n + 1 < (n + 1) / (1 - delta), for 0 < delta < 1.
bool threshold_gap_holds(const CanonicalType& t);

// Decides whether Z(p h) is a set theoretic complete intersection, i.e.
// diff >= 0 on Z_p. Requires mod(p h) irreducible. A slice-wise lower bound
// on diff settles most cases; otherwise Z_p is enumerated when the type is in
// scope, and OutOfRange is thrown when it is not.
bool zeroset_is_ci(const CanonicalType& t, std::int64_t p, const BruteForceScope& scope = {},
                   std::uint64_t cap = kDefaultCap);

struct ZeroSetReport {
    std::int64_t p = 0;
    bool is_ci = false;
    std::optional<Int> component_count;  // is_ci and p >= threshold
    bool count_proved = false;           // p is strictly inside the proved range
    std::optional<std::size_t> bruteforce_count;  // |(+)-triples| when in scope
    Int threshold;
    Int target_dim;
};

ZeroSetReport analyze_zeroset(const CanonicalType& t, std::int64_t p, const BruteForceScope& scope = {},
                              std::uint64_t cap = kDefaultCap);

}  // namespace canalg
