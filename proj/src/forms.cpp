#include "canalg/forms.hpp"

#include "canalg/errors.hpp"

namespace canalg {

Rational delta(const CanonicalType& t) { return t.delta(); }

Int euler_form(const CanonicalType& t, const DimVector& d1, const DimVector& d2) {
    d1.require_shape(t);
    d2.require_shape(t);
    Int value = d1.d0() * d2.d0() + d1.dinf() * d2.dinf();
    for (int i = 1; i <= t.n(); ++i) {
        const int m = t.arm_length(i);
        for (int j = 1; j < m; ++j) value += d1.at(i, j) * d2.at(i, j);
        // arrow alpha_{i,j} runs from (i,j) to (i,j-1)
        for (int j = 1; j <= m; ++j) value -= d1.at(i, j) * d2.at(i, j - 1);
    }
    value += Int(t.n() - 2) * d1.dinf() * d2.d0();
    return value;
}

Rational quadratic_via_decomposition(const CanonicalType& t, const DimVector& d) {
    d.require_shape(t);
    const DimVector shifted = d - DimVector::constant(t, d.dinf());
    Rational squares = 0;
    for (int i = 1; i <= t.n(); ++i) {
        const int m = t.arm_length(i);
        for (int j = 1; j < m; ++j) {
            const Int term = Int(m - j + 1) * shifted.at(i, j) - Int(m - j) * shifted.at(i, j - 1);
            squares += Rational(term * term, Int(m - j) * Int(m - j + 1));
        }
    }
    return -t.delta() * Rational(shifted.d0() * shifted.d0()) + squares / 2;
}

namespace basis {

DimVector h(const CanonicalType& t) { return DimVector::constant(t, 1); }

DimVector e_zero(const CanonicalType& t) {
    DimVector d = DimVector::zero(t);
    d.set_d0(1);
    return d;
}

DimVector e_infinity(const CanonicalType& t) {
    DimVector d = DimVector::zero(t);
    d.set_dinf(1);
    return d;
}

DimVector e(const CanonicalType& t, int i, int j) {
    if (i < 1 || i > t.n()) throw InvalidInput("arm index out of range");
    const int m = t.arm_length(i);
    if (j < 0 || j >= m) throw InvalidInput("simple index out of range");
    if (j > 0) {
        DimVector d = DimVector::zero(t);
        d.set(i, j, 1);
        return d;
    }
    DimVector d = h(t);
    for (int k = 1; k < m; ++k) d.set(i, k, 0);
    return d;
}

DimVector e_of(const CanonicalType& t, const std::vector<int>& l) {
    if (static_cast<int>(l.size()) != t.n()) throw InvalidInput("e_of needs one index per arm");
    DimVector d = e_zero(t);
    for (int i = 1; i <= t.n(); ++i) {
        const int li = l[static_cast<std::size_t>(i - 1)];
        if (li < 0 || li >= t.arm_length(i)) throw InvalidInput("e_of index out of range");
        for (int j = 1; j <= li; ++j) d.set(i, j, 1);
    }
    return d;
}

}  // namespace basis

Int gl_dim(const CanonicalType& t, const DimVector& d) {
    d.require_shape(t);
    Int s = d.d0() * d.d0() + d.dinf() * d.dinf();
    for (const auto& arm : d.arms()) {
        for (const auto& v : arm) s += v * v;
    }
    return s;
}

Int affine_dim(const CanonicalType& t, const DimVector& d) {
    d.require_shape(t);
    Int s = 0;
    for (int i = 1; i <= t.n(); ++i) {
        for (int j = 1; j <= t.arm_length(i); ++j) s += d.at(i, j - 1) * d.at(i, j);
    }
    return s;
}

Int a_dim(const CanonicalType& t, const DimVector& d) {
    d.require_shape(t);
    if (!d.is_nonnegative()) throw InvalidInput("a(d) needs a nonnegative dimension vector");
    return affine_dim(t, d) - Int(t.n() - 2) * d.d0() * d.dinf();
}

QuadraticBound lemmineq_bound(const CanonicalType& t, const DimVector& d) {
    d.require_shape(t);
    const Int slope = d.d0() - d.dinf();
    QuadraticBound out{-t.delta() * Rational(slope * slope), true};
    for (int i = 1; i <= t.n() && out.tight; ++i) {
        const int m = t.arm_length(i);
        for (int j = 1; j < m; ++j) {
            if (Int(m) * d.at(i, j) != Int(m - j) * d.d0() + Int(j) * d.dinf()) {
                out.tight = false;
                break;
            }
        }
    }
    return out;
}

}  // namespace canalg
