#pragma once

#include <compare>
#include <string>
#include <vector>

#include "canalg/canonical_type.hpp"
#include "canalg/dim_vector.hpp"

namespace canalg {

// Indecomposable of the exceptional tube on arm `arm`: uniserial with
// composition factors S_{arm,socle}, S_{arm,socle+1}, ..., S_{arm,socle+qlen-1}
// (indices mod m_arm), read from socle to top.
struct TubeIndec {
    int arm = 1;    // [1, n]
    int socle = 0;  // [0, m_arm - 1]
    int qlen = 1;   // >= 1

    int top(const CanonicalType& t) const { return (socle + qlen - 1) % t.arm_length(arm); }

    // "i:a:l"
    std::string str() const;
    static TubeIndec parse(const std::string& text);

    friend auto operator<=>(const TubeIndec&, const TubeIndec&) = default;
};

void validate(const CanonicalType& t, const TubeIndec& x);  // throws InvalidInput

// Multiset of exceptional tube indecomposables, kept sorted.
class RegularModuleClass {
public:
    RegularModuleClass() = default;
    explicit RegularModuleClass(std::vector<TubeIndec> members);

    const std::vector<TubeIndec>& members() const { return members_; }
    bool empty() const { return members_.empty(); }
    void add(const TubeIndec& x);

    // "+"-joined sorted members; the empty class prints as "0".
    std::string str() const;
    static RegularModuleClass parse(const std::string& text);

    friend auto operator<=>(const RegularModuleClass&, const RegularModuleClass&) = default;

private:
    std::vector<TubeIndec> members_;
};

// dim Hom between uniserials of one tube of rank `rank`, given by socle and length.
int uniserial_hom_dim(int rank, int socle_x, int len_x, int socle_y, int len_y);

DimVector dim_vector(const CanonicalType& t, const TubeIndec& x);
DimVector dim_vector(const CanonicalType& t, const RegularModuleClass& xs);

int hom_dim_tube(const CanonicalType& t, const TubeIndec& x, const TubeIndec& y);
int hom_dim_regular(const CanonicalType& t, const RegularModuleClass& xs, const RegularModuleClass& ys);
int end_dim(const CanonicalType& t, const TubeIndec& x);
int end_dim(const CanonicalType& t, const RegularModuleClass& xs);

// Hom(X, S_{i,j}) != 0: some member on arm i has top j.
bool hom_to_simple_nonzero(const CanonicalType& t, const RegularModuleClass& xs, int i, int j);

// Every indecomposable of the exceptional tubes whose dimension vector is
// componentwise <= bound, in canonical order.
std::vector<TubeIndec> tube_indecs_below(const CanonicalType& t, const DimVector& bound);

}  // namespace canalg
