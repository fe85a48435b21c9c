#include "canalg/geometry.hpp"

#include <algorithm>

#include "canalg/errors.hpp"
#include "canalg/forms.hpp"
#include "canalg/kernels.hpp"

namespace canalg {

namespace {

void require_level(std::int64_t p) {
    if (p < 1) throw PreconditionError("level p must be at least 1");
}

// <d, d> + p s at each slice s in [0, p] (entry 0 is the zero vector).
std::vector<std::int64_t> slice_values(const CanonicalType& t, std::int64_t p) {
    auto values = kernels::slice_minima_parallel(t, p);
    for (std::int64_t s = 0; s <= p; ++s) values[static_cast<std::size_t>(s)] += p * s;
    return values;
}

// Reduced (d_inf = 0) minimisers of slice s, each arm at its own minimum.
std::vector<DimVector> slice_minimizers(const CanonicalType& t, std::int64_t s, std::uint64_t cap) {
    std::vector<std::vector<std::vector<std::int64_t>>> per_arm;
    for (int m : t.arms()) per_arm.push_back(kernels::arm_minimizers(m, s, cap));

    std::vector<DimVector> out;
    std::vector<std::size_t> pick(per_arm.size(), 0);
    while (true) {
        if (out.size() >= cap) throw CapExceeded("too many equality vectors to materialise");
        std::vector<std::vector<Int>> arms;
        for (std::size_t i = 0; i < per_arm.size(); ++i) {
            const auto& chain = per_arm[i][pick[i]];
            arms.emplace_back(chain.begin(), chain.end());
        }
        out.emplace_back(Int(s), std::move(arms), Int(0));
        std::size_t k = per_arm.size();
        while (k > 0 && ++pick[k - 1] == per_arm[k - 1].size()) pick[--k] = 0;
        if (k == 0) break;
    }
    return out;
}

}  // namespace

TypeClass classify_type(const CanonicalType& t) {
    const Rational sum = t.reciprocal_sum();
    const Rational bound(t.n() - 4);
    TypeClass out{};
    out.boundary = sum > bound ? Boundary::Above : (sum == bound ? Boundary::On : Boundary::Below);
    const Rational d = t.delta();
    out.representation = d < 0 ? RepresentationType::Domestic
                               : (d == 0 ? RepresentationType::Tubular : RepresentationType::Wild);
    return out;
}

std::string to_string(Boundary b) {
    switch (b) {
        case Boundary::Above: return "above_boundary";
        case Boundary::On: return "on_boundary";
        case Boundary::Below: return "below_boundary";
    }
    return "?";
}

std::string to_string(RepresentationType r) {
    switch (r) {
        case RepresentationType::Domestic: return "domestic";
        case RepresentationType::Tubular: return "tubular";
        case RepresentationType::Wild: return "wild";
    }
    return "?";
}

Int ci_defect(const CanonicalType& t, std::int64_t p) {
    require_level(p);
    const auto values = slice_values(t, p);
    return Int(*std::min_element(values.begin(), values.end()));
}

Int ci_defect_naive(const CanonicalType& t, std::int64_t p, std::uint64_t cap) {
    require_level(p);
    Int best = 0;
    for_each_P_flat(t, p, cap, [&](const std::vector<std::int64_t>& flat) {
        const DimVector d = DimVector::from_flat(t, flat);
        const Int value = euler_form(t, d, d) + Int(p) * (d.d0() - d.dinf());
        if (value < best) best = value;
        return true;
    });
    return best;
}

bool is_complete_intersection(const CanonicalType& t, std::int64_t p) { return ci_defect(t, p) >= 0; }

bool is_normal(const CanonicalType& t, std::int64_t p) {
    require_level(p);
    const auto values = slice_values(t, p);
    return std::all_of(values.begin() + 1, values.end(), [](std::int64_t v) { return v > 0; });
}

GeometryReport analyze_geometry(const CanonicalType& t, std::int64_t p, std::uint64_t cap) {
    require_level(p);
    const auto values = slice_values(t, p);
    GeometryReport report;
    report.p = p;
    report.defect = *std::min_element(values.begin(), values.end());
    report.is_ci = report.defect >= 0;
    report.is_normal = std::all_of(values.begin() + 1, values.end(), [](std::int64_t v) { return v > 0; });
    if (!report.is_ci) return report;

    report.component_count = 1;  // d = 0
    std::vector<std::int64_t> equality_slices;
    for (std::int64_t s = 1; s <= p; ++s) {
        if (values[static_cast<std::size_t>(s)] != 0) continue;
        equality_slices.push_back(s);
        Int per_slice = p - s + 1;  // translates by c h, c in [0, p - s]
        for (int m : t.arms()) per_slice *= kernels::arm_min_count(m, s).count;
        report.component_count += per_slice;
    }
    if (report.component_count > Int(cap)) return report;

    const DimVector h = basis::h(t);
    report.components.push_back(DimVector::zero(t));
    for (std::int64_t s : equality_slices) {
        for (const auto& reduced : slice_minimizers(t, s, cap)) {
            for (std::int64_t c = 0; c <= p - s; ++c) report.components.push_back(reduced + Int(c) * h);
        }
    }
    std::sort(report.components.begin(), report.components.end());
    return report;
}

std::vector<DimVector> irreducible_components(const CanonicalType& t, std::int64_t p, std::uint64_t cap) {
    GeometryReport report = analyze_geometry(t, p, cap);
    if (!report.is_ci) {
        throw PreconditionError("mod(p h) is not a complete intersection; components are not classified");
    }
    if (report.component_count > Int(cap)) {
        throw CapExceeded(report.component_count.str() + " components exceed the cap");
    }
    return std::move(report.components);
}

std::vector<DimVector> equality_vectors_naive(const CanonicalType& t, std::int64_t p, std::uint64_t cap) {
    require_level(p);
    std::vector<DimVector> out;
    for_each_P_flat(t, p, cap, [&](const std::vector<std::int64_t>& flat) {
        DimVector d = DimVector::from_flat(t, flat);
        if (euler_form(t, d, d) == -Int(p) * (d.d0() - d.dinf())) out.push_back(std::move(d));
        return true;
    });
    return out;
}

Witness equality_witness(const CanonicalType& t) {
    const Int p = t.product();
    std::vector<std::vector<Int>> arms;
    for (int m : t.arms()) {
        std::vector<Int> arm;
        for (int j = 1; j < m; ++j) arm.push_back(Int(m - j) * p / m);
        arms.push_back(std::move(arm));
    }
    return {p, DimVector(p, std::move(arms), Int(0))};
}

Witness ci_failure_witness(const CanonicalType& t) {
    if (classify_type(t).boundary == Boundary::Above) {
        throw PreconditionError("type " + t.str() + " lies above the boundary; mod(p h) is always a normal complete intersection");
    }
    return equality_witness(t);
}

int theorem2_prediction(const CanonicalType& t, std::int64_t p) {
    require_level(p);
    if (classify_type(t).boundary != Boundary::On) {
        throw PreconditionError("theorem2_prediction applies only to on-boundary types");
    }
    return Int(p) % t.lcm() == 0 ? 2 : 1;
}

}  // namespace canalg
