#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "canalg/canonical_type.hpp"
#include "canalg/dim_vector.hpp"

namespace canalg {

enum class ConeTag { P, Q, Neither };

inline constexpr std::uint64_t kDefaultCap = 100'000'000;

// d = 0, or d_0 > d_inf >= 0 with every arm nonincreasing from d_0 to d_inf.
bool in_P(const CanonicalType& t, const DimVector& d);
// d = 0, or 0 <= d_0 < d_inf with every arm nondecreasing from d_0 to d_inf.
bool in_Q(const CanonicalType& t, const DimVector& d);
ConeTag cone_of(const CanonicalType& t, const DimVector& d);

// Visits every d in P with d_0 <= p exactly once, lexicographically in
// (d_0, d_inf, arm entries), as flat coordinates (see DimVector::to_flat).
// Returning false from the visitor stops the walk. Throws CapExceeded once
// more than `cap` vectors have been produced.
void for_each_P_flat(const CanonicalType& t, std::int64_t p, std::uint64_t cap,
                     const std::function<bool(const std::vector<std::int64_t>&)>& visit);

// Same walk restricted to d_0 - d_inf == slope and d_inf == 0.
void for_each_P_slice_flat(const CanonicalType& t, std::int64_t slope,
                           const std::function<bool(const std::vector<std::int64_t>&)>& visit);

std::vector<DimVector> enumerate_P(const CanonicalType& t, std::int64_t p, std::uint64_t cap = kDefaultCap);

struct SlopeOneDecomposition {
    Int r;
    std::vector<int> l;  // l_i in [0, m_i - 1]
};

// d = r h + e(l_1, ..., l_n). Requires d in P with <d, h> = 1.
SlopeOneDecomposition decompose_slope_one(const CanonicalType& t, const DimVector& d);

}  // namespace canalg
