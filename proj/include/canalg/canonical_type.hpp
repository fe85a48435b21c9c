#pragma once

#include <string>
#include <vector>

#include "canalg/numeric.hpp"

namespace canalg {

// Arm lengths (m_1, ..., m_n) of a canonical algebra. Arms are numbered
// from 1 in every public accessor.
class CanonicalType {
public:
    // Throws InvalidInput unless n >= 3 and every m_i >= 2.
    explicit CanonicalType(std::vector<int> arms);

    // "2,3,7"
    static CanonicalType parse(const std::string& text);

    int n() const { return static_cast<int>(arms_.size()); }
    int arm_length(int i) const { return arms_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& arms() const { return arms_; }

    int total() const;          // |m|
    Int product() const;        // m_1 * ... * m_n
    Int lcm() const;
    Rational reciprocal_sum() const;  // 1/m_1 + ... + 1/m_n
    Rational delta() const;     // (n - 2 - sum 1/m_i) / 2

    // Number of vertices of the star quiver: 0, infinity and all arm interiors.
    int vertex_count() const;

    std::string str() const;

    friend bool operator==(const CanonicalType&, const CanonicalType&) = default;

private:
    std::vector<int> arms_;
};

}  // namespace canalg
