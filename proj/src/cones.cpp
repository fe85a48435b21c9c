#include "canalg/cones.hpp"

#include <string>

#include "canalg/errors.hpp"
#include "canalg/forms.hpp"

namespace canalg {

namespace {

bool monotone_arms(const CanonicalType& t, const DimVector& d, bool nonincreasing) {
    for (int i = 1; i <= t.n(); ++i) {
        for (int j = 0; j < t.arm_length(i); ++j) {
            const Int& here = d.at(i, j);
            const Int& next = d.at(i, j + 1);
            if (nonincreasing ? here < next : here > next) return false;
        }
    }
    return true;
}

struct PWalker {
    const CanonicalType& t;
    std::uint64_t cap;
    const std::function<bool(const std::vector<std::int64_t>&)>& visit;
    std::vector<std::int64_t> flat;
    std::vector<std::size_t> arm_start;
    std::uint64_t produced = 0;
    bool stopped = false;

    PWalker(const CanonicalType& type, std::uint64_t c,
            const std::function<bool(const std::vector<std::int64_t>&)>& v)
        : t(type), cap(c), visit(v), flat(static_cast<std::size_t>(type.vertex_count()), 0) {
        std::size_t k = 1;
        for (int m : t.arms()) {
            arm_start.push_back(k);
            k += static_cast<std::size_t>(m - 1);
        }
    }

    void emit() {
        if (++produced > cap) {
            throw CapExceeded("enumeration of P exceeded the cap of " + std::to_string(cap) + " vectors");
        }
        if (!visit(flat)) stopped = true;
    }

    // Fill arm `arm` (0-based) from position `pos`, bounded above by `upper`.
    void fill(std::size_t arm, int pos, std::int64_t upper, std::int64_t lower) {
        if (stopped) return;
        if (arm == arm_start.size()) {
            emit();
            return;
        }
        const int interior = t.arms()[arm] - 1;
        if (pos > interior) {
            fill(arm + 1, 1, flat.front(), lower);
            return;
        }
        const std::size_t k = arm_start[arm] + static_cast<std::size_t>(pos - 1);
        for (std::int64_t v = lower; v <= upper && !stopped; ++v) {
            flat[k] = v;
            fill(arm, pos + 1, v, lower);
        }
    }

    void slice(std::int64_t d0, std::int64_t dinf) {
        flat.front() = d0;
        flat.back() = dinf;
        fill(0, 1, d0, dinf);
    }
};

}  // namespace

bool in_P(const CanonicalType& t, const DimVector& d) {
    d.require_shape(t);
    if (d.is_zero()) return true;
    if (!(d.d0() > d.dinf() && d.dinf() >= 0)) return false;
    return monotone_arms(t, d, true);
}

bool in_Q(const CanonicalType& t, const DimVector& d) {
    d.require_shape(t);
    if (d.is_zero()) return true;
    if (!(d.d0() >= 0 && d.d0() < d.dinf())) return false;
    return monotone_arms(t, d, false);
}

ConeTag cone_of(const CanonicalType& t, const DimVector& d) {
    if (in_P(t, d)) return ConeTag::P;
    if (in_Q(t, d)) return ConeTag::Q;
    return ConeTag::Neither;
}

void for_each_P_flat(const CanonicalType& t, std::int64_t p, std::uint64_t cap,
                     const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
    if (p < 0) throw PreconditionError("enumerate_P needs p >= 0");
    PWalker walker(t, cap, visit);
    walker.emit();  // the zero vector
    for (std::int64_t d0 = 1; d0 <= p && !walker.stopped; ++d0) {
        for (std::int64_t dinf = 0; dinf < d0 && !walker.stopped; ++dinf) walker.slice(d0, dinf);
    }
}

void for_each_P_slice_flat(const CanonicalType& t, std::int64_t slope,
                           const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
    if (slope < 1) throw PreconditionError("slices of P need slope >= 1");
    PWalker walker(t, ~std::uint64_t{0}, visit);
    walker.slice(slope, 0);
}

std::vector<DimVector> enumerate_P(const CanonicalType& t, std::int64_t p, std::uint64_t cap) {
    std::vector<DimVector> out;
    for_each_P_flat(t, p, cap, [&](const std::vector<std::int64_t>& flat) {
        out.push_back(DimVector::from_flat(t, flat));
        return true;
    });
    return out;
}

SlopeOneDecomposition decompose_slope_one(const CanonicalType& t, const DimVector& d) {
    if (!in_P(t, d) || d.d0() - d.dinf() != 1) {
        throw PreconditionError("decompose_slope_one needs d in P with <d,h> = 1");
    }
    SlopeOneDecomposition out{d.dinf(), {}};
    for (int i = 1; i <= t.n(); ++i) {
        int li = 0;
        for (int j = 1; j < t.arm_length(i); ++j) {
            if (d.at(i, j) - d.dinf() == 1) li = j;
        }
        out.l.push_back(li);
    }
    if (out.r * basis::h(t) + basis::e_of(t, out.l) != d) {
        throw PreconditionError("vector does not decompose as r h + e(l)");
    }
    return out;
}

}  // namespace canalg
