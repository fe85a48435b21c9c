#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "canalg/canonical_type.hpp"
#include "canalg/cones.hpp"
#include "canalg/dim_vector.hpp"
#include "canalg/numeric.hpp"

namespace canalg {

enum class Boundary { Above, On, Below };     // sum 1/m_i against n - 4
enum class RepresentationType { Domestic, Tubular, Wild };

struct TypeClass {
    Boundary boundary;
    RepresentationType representation;
};

TypeClass classify_type(const CanonicalType& t);
std::string to_string(Boundary b);
std::string to_string(RepresentationType r);

// min over d in P with d_0 <= p of <d, d> + p (d_0 - d_inf). Always <= 0
// since d = 0 contributes 0.
Int ci_defect(const CanonicalType& t, std::int64_t p);
// Same value by scanning enumerate_P; used as the cross-check.
Int ci_defect_naive(const CanonicalType& t, std::int64_t p, std::uint64_t cap = kDefaultCap);

bool is_complete_intersection(const CanonicalType& t, std::int64_t p);
bool is_normal(const CanonicalType& t, std::int64_t p);

// d in P, d_0 <= p with <d, d> = -p (d_0 - d_inf), in enumeration order.
// Requires the complete-intersection criterion (throws PreconditionError).
std::vector<DimVector> irreducible_components(const CanonicalType& t, std::int64_t p,
                                              std::uint64_t cap = kDefaultCap);
// The same set by scanning enumerate_P (no precondition).
std::vector<DimVector> equality_vectors_naive(const CanonicalType& t, std::int64_t p,
                                              std::uint64_t cap = kDefaultCap);

struct GeometryReport {
    std::int64_t p = 0;
    bool is_ci = false;
    bool is_normal = false;
    Int defect;
    Int component_count;                 // 0 unless is_ci
    std::vector<DimVector> components;   // materialised when count <= cap
};

GeometryReport analyze_geometry(const CanonicalType& t, std::int64_t p, std::uint64_t cap = kDefaultCap);

struct Witness {
    Int p;
    DimVector d;
};

// p = m_1 ... m_n, d_0 = p, d_inf = 0, d_{i,j} = (m_i - j) p / m_i. Defined
// for every type; attains the lower bound -delta (d_0 - d_inf)^2.
Witness equality_witness(const CanonicalType& t);

// equality_witness restricted to types on or below the boundary, where it
// violates the normality (on) or complete-intersection (below) criterion.
Witness ci_failure_witness(const CanonicalType& t);

// Number of irreducible components predicted for an on-boundary type:
// 2 if lcm(m) divides p, else 1.
int theorem2_prediction(const CanonicalType& t, std::int64_t p);

}  // namespace canalg
