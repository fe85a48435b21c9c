#include "canalg/dim_vector.hpp"

#include "canalg/errors.hpp"

namespace canalg {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

Int parse_coordinate(const std::string& text) {
    const Rational r = parse_rational(text);
    if (text.find('/') != std::string::npos || denominator(r) != 1) {
        throw InvalidInput("dimension vector entries must be integers: '" + text + "'");
    }
    return numerator(r);
}

std::strong_ordering compare(const Int& a, const Int& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace

DimVector::DimVector(Int d0, std::vector<std::vector<Int>> arms, Int dinf)
    : d0_(std::move(d0)), arms_(std::move(arms)), dinf_(std::move(dinf)) {
    for (const auto& a : arms_) {
        if (a.empty()) throw InvalidInput("every arm needs at least one interior vertex");
    }
}

DimVector DimVector::zero(const CanonicalType& t) { return constant(t, 0); }

DimVector DimVector::constant(const CanonicalType& t, const Int& value) {
    std::vector<std::vector<Int>> arms;
    arms.reserve(static_cast<std::size_t>(t.n()));
    for (int m : t.arms()) arms.emplace_back(static_cast<std::size_t>(m - 1), value);
    return DimVector(value, std::move(arms), value);
}

DimVector DimVector::from_flat(const CanonicalType& t, const std::vector<std::int64_t>& flat) {
    if (static_cast<int>(flat.size()) != t.vertex_count()) {
        throw InvalidInput("flat vector has the wrong length for type " + t.str());
    }
    std::vector<std::vector<Int>> arms;
    std::size_t k = 1;
    for (int m : t.arms()) {
        std::vector<Int> a;
        for (int j = 1; j < m; ++j) a.emplace_back(flat[k++]);
        arms.push_back(std::move(a));
    }
    return DimVector(flat.front(), std::move(arms), flat.back());
}

std::vector<std::int64_t> DimVector::to_flat() const {
    std::vector<std::int64_t> flat;
    flat.push_back(to_int64(d0_));
    for (const auto& a : arms_) {
        for (const auto& v : a) flat.push_back(to_int64(v));
    }
    flat.push_back(to_int64(dinf_));
    return flat;
}

DimVector DimVector::parse(const std::string& text) {
    const auto parts = split(text, ';');
    if (parts.size() != 3) throw InvalidInput("dimension vector must look like 'd0;arm1/.../armN;dinf': '" + text + "'");
    std::vector<std::vector<Int>> arms;
    for (const auto& arm_text : split(parts[1], '/')) {
        std::vector<Int> a;
        for (const auto& entry : split(arm_text, ',')) a.push_back(parse_coordinate(entry));
        arms.push_back(std::move(a));
    }
    return DimVector(parse_coordinate(parts[0]), std::move(arms), parse_coordinate(parts[2]));
}

DimVector DimVector::parse(const std::string& text, const CanonicalType& t) {
    DimVector d = parse(text);
    d.require_shape(t);
    return d;
}

std::string DimVector::str() const {
    std::string out = d0_.str() + ";";
    for (std::size_t i = 0; i < arms_.size(); ++i) {
        if (i) out += '/';
        for (std::size_t j = 0; j < arms_[i].size(); ++j) {
            if (j) out += ',';
            out += arms_[i][j].str();
        }
    }
    return out + ";" + dinf_.str();
}

const Int& DimVector::at(int i, int j) const {
    const auto& a = arm(i);
    if (j == 0) return d0_;
    if (j == static_cast<int>(a.size()) + 1) return dinf_;
    if (j < 0 || j > static_cast<int>(a.size())) throw InvalidInput("arm position out of range");
    return a[static_cast<std::size_t>(j - 1)];
}

void DimVector::set(int i, int j, Int v) {
    auto& a = arms_.at(static_cast<std::size_t>(i - 1));
    if (j < 1 || j > static_cast<int>(a.size())) throw InvalidInput("interior arm position out of range");
    a[static_cast<std::size_t>(j - 1)] = std::move(v);
}

bool DimVector::shaped_for(const CanonicalType& t) const {
    if (n() != t.n()) return false;
    for (int i = 1; i <= t.n(); ++i) {
        if (arm_length(i) != t.arm_length(i)) return false;
    }
    return true;
}

void DimVector::require_shape(const CanonicalType& t) const {
    if (!shaped_for(t)) throw InvalidInput("dimension vector " + str() + " is not shaped for type " + t.str());
}

bool DimVector::is_zero() const {
    if (d0_ != 0 || dinf_ != 0) return false;
    for (const auto& a : arms_) {
        for (const auto& v : a) {
            if (v != 0) return false;
        }
    }
    return true;
}

bool DimVector::is_nonnegative() const {
    if (d0_ < 0 || dinf_ < 0) return false;
    for (const auto& a : arms_) {
        for (const auto& v : a) {
            if (v < 0) return false;
        }
    }
    return true;
}

void DimVector::require_same_shape(const DimVector& o) const {
    bool same = arms_.size() == o.arms_.size();
    for (std::size_t i = 0; same && i < arms_.size(); ++i) same = arms_[i].size() == o.arms_[i].size();
    if (!same) throw InvalidInput("dimension vectors have different shapes");
}

DimVector& DimVector::operator+=(const DimVector& o) {
    require_same_shape(o);
    d0_ += o.d0_;
    dinf_ += o.dinf_;
    for (std::size_t i = 0; i < arms_.size(); ++i) {
        for (std::size_t j = 0; j < arms_[i].size(); ++j) arms_[i][j] += o.arms_[i][j];
    }
    return *this;
}

DimVector& DimVector::operator-=(const DimVector& o) {
    require_same_shape(o);
    d0_ -= o.d0_;
    dinf_ -= o.dinf_;
    for (std::size_t i = 0; i < arms_.size(); ++i) {
        for (std::size_t j = 0; j < arms_[i].size(); ++j) arms_[i][j] -= o.arms_[i][j];
    }
    return *this;
}

DimVector& DimVector::operator*=(const Int& c) {
    d0_ *= c;
    dinf_ *= c;
    for (auto& a : arms_) {
        for (auto& v : a) v *= c;
    }
    return *this;
}

std::strong_ordering operator<=>(const DimVector& a, const DimVector& b) {
    if (auto c = compare(a.d0_, b.d0_); c != 0) return c;
    if (auto c = compare(a.dinf_, b.dinf_); c != 0) return c;
    const std::size_t arms = std::min(a.arms_.size(), b.arms_.size());
    for (std::size_t i = 0; i < arms; ++i) {
        const std::size_t len = std::min(a.arms_[i].size(), b.arms_[i].size());
        for (std::size_t j = 0; j < len; ++j) {
            if (auto c = compare(a.arms_[i][j], b.arms_[i][j]); c != 0) return c;
        }
        if (auto c = a.arms_[i].size() <=> b.arms_[i].size(); c != 0) return c;
    }
    return a.arms_.size() <=> b.arms_.size();
}

}  // namespace canalg
