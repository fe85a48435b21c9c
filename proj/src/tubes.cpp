#include "canalg/tubes.hpp"

#include <algorithm>

#include "canalg/errors.hpp"
#include "canalg/forms.hpp"

namespace canalg {

std::string TubeIndec::str() const {
    return std::to_string(arm) + ":" + std::to_string(socle) + ":" + std::to_string(qlen);
}

TubeIndec TubeIndec::parse(const std::string& text) {
    TubeIndec x;
    char c1 = 0;
    char c2 = 0;
    std::size_t used = 0;
    try {
        std::size_t pos = 0;
        x.arm = std::stoi(text, &pos);
        used = pos;
        c1 = text.at(used++);
        x.socle = std::stoi(text.substr(used), &pos);
        used += pos;
        c2 = text.at(used++);
        x.qlen = std::stoi(text.substr(used), &pos);
        used += pos;
    } catch (const std::exception&) {
        throw InvalidInput("malformed tube module '" + text + "', expected i:a:l");
    }
    if (c1 != ':' || c2 != ':' || used != text.size()) {
        throw InvalidInput("malformed tube module '" + text + "', expected i:a:l");
    }
    return x;
}

void validate(const CanonicalType& t, const TubeIndec& x) {
    if (x.arm < 1 || x.arm > t.n()) throw InvalidInput("tube module " + x.str() + ": arm out of range");
    if (x.socle < 0 || x.socle >= t.arm_length(x.arm)) throw InvalidInput("tube module " + x.str() + ": socle out of range");
    if (x.qlen < 1) throw InvalidInput("tube module " + x.str() + ": quasi-length must be positive");
}

RegularModuleClass::RegularModuleClass(std::vector<TubeIndec> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
}

void RegularModuleClass::add(const TubeIndec& x) {
    members_.insert(std::upper_bound(members_.begin(), members_.end(), x), x);
}

std::string RegularModuleClass::str() const {
    if (members_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < members_.size(); ++k) {
        if (k) out += '+';
        out += members_[k].str();
    }
    return out;
}

RegularModuleClass RegularModuleClass::parse(const std::string& text) {
    if (text == "0") return {};
    std::vector<TubeIndec> members;
    std::size_t start = 0;
    while (true) {
        const auto plus = text.find('+', start);
        members.push_back(TubeIndec::parse(text.substr(start, plus == std::string::npos ? std::string::npos : plus - start)));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    return RegularModuleClass(std::move(members));
}

int uniserial_hom_dim(int rank, int socle_x, int len_x, int socle_y, int len_y) {
    // A map X -> Y factors through a quotient of X of length j that is a
    // submodule of Y: top(X) must equal the top of Y's length-j submodule.
    const int residue = ((socle_x + len_x - socle_y) % rank + rank) % rank;
    const int limit = std::min(len_x, len_y);
    int first = residue == 0 ? rank : residue;
    if (first > limit) return 0;
    return (limit - first) / rank + 1;
}

DimVector dim_vector(const CanonicalType& t, const TubeIndec& x) {
    validate(t, x);
    const int m = t.arm_length(x.arm);
    DimVector d = Int(x.qlen / m) * basis::h(t);
    for (int u = 0; u < x.qlen % m; ++u) d += basis::e(t, x.arm, (x.socle + u) % m);
    return d;
}

DimVector dim_vector(const CanonicalType& t, const RegularModuleClass& xs) {
    DimVector d = DimVector::zero(t);
    for (const auto& x : xs.members()) d += dim_vector(t, x);
    return d;
}

int hom_dim_tube(const CanonicalType& t, const TubeIndec& x, const TubeIndec& y) {
    validate(t, x);
    validate(t, y);
    if (x.arm != y.arm) return 0;
    return uniserial_hom_dim(t.arm_length(x.arm), x.socle, x.qlen, y.socle, y.qlen);
}

int hom_dim_regular(const CanonicalType& t, const RegularModuleClass& xs, const RegularModuleClass& ys) {
    int total = 0;
    for (const auto& x : xs.members()) {
        for (const auto& y : ys.members()) total += hom_dim_tube(t, x, y);
    }
    return total;
}

int end_dim(const CanonicalType& t, const TubeIndec& x) { return hom_dim_tube(t, x, x); }

int end_dim(const CanonicalType& t, const RegularModuleClass& xs) { return hom_dim_regular(t, xs, xs); }

bool hom_to_simple_nonzero(const CanonicalType& t, const RegularModuleClass& xs, int i, int j) {
    return std::any_of(xs.members().begin(), xs.members().end(),
                       [&](const TubeIndec& x) { return x.arm == i && x.top(t) == j; });
}

std::vector<TubeIndec> tube_indecs_below(const CanonicalType& t, const DimVector& bound) {
    std::vector<TubeIndec> out;
    for (int i = 1; i <= t.n(); ++i) {
        const int m = t.arm_length(i);
        for (int a = 0; a < m; ++a) {
            for (int len = 1;; ++len) {
                const TubeIndec x{i, a, len};
                const DimVector rest = bound - dim_vector(t, x);
                if (!rest.is_nonnegative()) break;  // dimension grows with length
                out.push_back(x);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace canalg
