#pragma once

#include <vector>

#include "canalg/canonical_type.hpp"
#include "canalg/dim_vector.hpp"
#include "canalg/numeric.hpp"

namespace canalg {

Rational delta(const CanonicalType& t);

// The Ringel bilinear form <d1, d2>. Throws InvalidInput on shape mismatch.
Int euler_form(const CanonicalType& t, const DimVector& d1, const DimVector& d2);

// <d, d> evaluated through the sum-of-squares identity
//   <d', d'> = -delta d0'^2 + 1/2 sum_{i,j} ((m_i-j+1) d'_{i,j} - (m_i-j) d'_{i,j-1})^2 / ((m_i-j)(m_i-j+1))
// with d' = d - d_inf h. Agrees with euler_form(t, d, d).
Rational quadratic_via_decomposition(const CanonicalType& t, const DimVector& d);

/// Distinguished vectors of the Grothendieck group.
namespace basis {

DimVector h(const CanonicalType& t);
DimVector e_zero(const CanonicalType& t);
DimVector e_infinity(const CanonicalType& t);

// e_{i,j} for j in [0, m_i - 1]; e_{i,0} = h - (e_{i,1} + ... + e_{i,m_i-1}).
DimVector e(const CanonicalType& t, int i, int j);

// e(l_1, ..., l_n) = e_0 + sum_i sum_{j in [1, l_i]} e_{i,j}, with l_i in [0, m_i - 1].
DimVector e_of(const CanonicalType& t, const std::vector<int>& l);

}  // namespace basis

// sum over all vertices of d_x^2.
Int gl_dim(const CanonicalType& t, const DimVector& d);

// dim A(d) = sum_{i, j in [1, m_i]} d_{i,j-1} d_{i,j}.
Int affine_dim(const CanonicalType& t, const DimVector& d);

// a(d) = dim A(d) - (n-2) d_0 d_inf. Throws InvalidInput on negative entries.
Int a_dim(const CanonicalType& t, const DimVector& d);

struct QuadraticBound {
    Rational lower_bound;  // -delta (d_0 - d_inf)^2
    bool tight;            // <d,d> attains the bound
};

// Lower bound on <d,d>; tight iff m_i d_{i,j} = (m_i - j) d_0 + j d_inf at
// every interior vertex.
QuadraticBound lemmineq_bound(const CanonicalType& t, const DimVector& d);

}  // namespace canalg
