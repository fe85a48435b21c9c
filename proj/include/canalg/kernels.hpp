#pragma once

// Per-arm minimisation of the Ringel quadratic form over the slices of P.
//
// With d_inf = 0 and d_0 = s, <d, d> = s^2 + sum_i cost_i, where arm i
// contributes sum_{j=1}^{m_i-1} (x_j^2 - x_j x_{j-1}) over the chain
// s = x_0 >= x_1 >= ... >= x_{m_i-1} >= x_{m_i} = 0. Arms are independent,
// so each slice reduces to one small DP per distinct arm length.
//
// Two implementations are kept side by side: a serial O(m s^2) reference
// that is easy to audit, and an O(m s log s) lower-envelope DP run over the
// slices with OpenMP. Tests require them to agree.

#include <cstdint>
#include <vector>

#include "canalg/canonical_type.hpp"
#include "canalg/numeric.hpp"

namespace canalg::kernels {

// Largest level accepted by the 64-bit DP kernels.
inline constexpr std::int64_t kMaxLevel = 1'000'000;

// Throws OutOfRange when the DP values for (t, p) could overflow int64.
void require_dp_range(const CanonicalType& t, std::int64_t p);

std::int64_t arm_min_reference(int m, std::int64_t s);
std::int64_t arm_min(int m, std::int64_t s);

struct ArmMinCount {
    std::int64_t min;
    Int count;  // number of chains attaining min
};
ArmMinCount arm_min_count(int m, std::int64_t s);

// All minimising chains (x_1, ..., x_{m-1}), lexicographically ascending.
// Throws CapExceeded when there are more than `cap`.
std::vector<std::vector<std::int64_t>> arm_minimizers(int m, std::int64_t s, std::uint64_t cap);

// Entry s in [0, p] is min <d, d> over d in P with d_0 = s, d_inf = 0.
std::vector<std::int64_t> slice_minima_serial(const CanonicalType& t, std::int64_t p);
std::vector<std::int64_t> slice_minima_parallel(const CanonicalType& t, std::int64_t p);

}  // namespace canalg::kernels
