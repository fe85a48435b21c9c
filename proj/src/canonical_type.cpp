#include "canalg/canonical_type.hpp"

#include <charconv>
#include <numeric>

#include "canalg/errors.hpp"

namespace canalg {

CanonicalType::CanonicalType(std::vector<int> arms) : arms_(std::move(arms)) {
    if (arms_.size() < 3) throw InvalidInput("a canonical type needs at least 3 arms");
    for (int m : arms_) {
        if (m < 2) throw InvalidInput("arm lengths must be at least 2");
    }
}

CanonicalType CanonicalType::parse(const std::string& text) {
    std::vector<int> arms;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string::npos ? text.size() : comma;
        const char* first = text.data() + start;
        const char* last = text.data() + end;
        int value = 0;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || first == last) {
            throw InvalidInput("malformed type string '" + text + "'");
        }
        arms.push_back(value);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return CanonicalType(std::move(arms));
}

int CanonicalType::total() const { return std::accumulate(arms_.begin(), arms_.end(), 0); }

Int CanonicalType::product() const {
    Int p = 1;
    for (int m : arms_) p *= m;
    return p;
}

Int CanonicalType::lcm() const {
    Int l = 1;
    for (int m : arms_) l = canalg::lcm(l, Int(m));
    return l;
}

Rational CanonicalType::reciprocal_sum() const {
    Rational s = 0;
    for (int m : arms_) s += Rational(1, m);
    return s;
}

Rational CanonicalType::delta() const {
    return (Rational(n() - 2) - reciprocal_sum()) / 2;
}

int CanonicalType::vertex_count() const { return 2 + total() - n(); }

std::string CanonicalType::str() const {
    std::string out;
    for (std::size_t i = 0; i < arms_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(arms_[i]);
    }
    return out;
}

}  // namespace canalg
