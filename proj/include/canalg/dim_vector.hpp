#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "canalg/canonical_type.hpp"
#include "canalg/numeric.hpp"

namespace canalg {

// Integer vector on the vertices of the star quiver. Only the interior arm
// coordinates d_{i,1..m_i-1} are stored; at(i, 0) reads d_0 and at(i, m_i)
// reads d_inf.
class DimVector {
public:
    DimVector() = default;
    DimVector(Int d0, std::vector<std::vector<Int>> arms, Int dinf);

    static DimVector zero(const CanonicalType& t);
    static DimVector constant(const CanonicalType& t, const Int& value);

    // Flat coordinates in the order 0, arm 1 interior, ..., arm n interior, inf.
    static DimVector from_flat(const CanonicalType& t, const std::vector<std::int64_t>& flat);
    std::vector<std::int64_t> to_flat() const;  // throws OutOfRange on overflow

    // "d0;a,b/c/...;dinf"
    static DimVector parse(const std::string& text);
    static DimVector parse(const std::string& text, const CanonicalType& t);
    std::string str() const;

    int n() const { return static_cast<int>(arms_.size()); }
    int arm_length(int i) const { return static_cast<int>(arm(i).size()) + 1; }

    const Int& d0() const { return d0_; }
    const Int& dinf() const { return dinf_; }
    const std::vector<Int>& arm(int i) const { return arms_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<std::vector<Int>>& arms() const { return arms_; }

    // j in [0, m_i]; the ends alias d_0 and d_inf.
    const Int& at(int i, int j) const;

    void set_d0(Int v) { d0_ = std::move(v); }
    void set_dinf(Int v) { dinf_ = std::move(v); }
    void set(int i, int j, Int v);  // interior j in [1, m_i - 1]

    bool shaped_for(const CanonicalType& t) const;
    void require_shape(const CanonicalType& t) const;  // throws InvalidInput

    bool is_zero() const;
    bool is_nonnegative() const;

    DimVector& operator+=(const DimVector& o);
    DimVector& operator-=(const DimVector& o);
    DimVector& operator*=(const Int& c);

    friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
    friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }
    friend DimVector operator*(const Int& c, DimVector a) { return a *= c; }
    friend DimVector operator*(DimVector a, const Int& c) { return a *= c; }

    friend bool operator==(const DimVector&, const DimVector&) = default;
    // Lexicographic in (d_0, d_inf, arm entries).
    friend std::strong_ordering operator<=>(const DimVector& a, const DimVector& b);

private:
    void require_same_shape(const DimVector& o) const;

    Int d0_ = 0;
    std::vector<std::vector<Int>> arms_;
    Int dinf_ = 0;
};

}  // namespace canalg
