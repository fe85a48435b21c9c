#include "canalg/oracle.hpp"

#include <algorithm>
#include <string>

#include "canalg/errors.hpp"
#include "canalg/forms.hpp"

namespace canalg::oracle {

namespace {

std::size_t size_of(const Int& v) {
    if (v < 0) throw InvalidInput("negative dimension in a matrix representation");
    return static_cast<std::size_t>(to_int64(v));
}

// Composition M_{i,1} ... M_{i,m_i} : M_inf -> M_0.
Matrix arm_path(const MatrixRep& m, int i) {
    Matrix product = m.arrow(i, 1);
    for (int j = 2; j <= m.type.arm_length(i); ++j) product = product * m.arrow(i, j);
    return product;
}

// Flat vertex index 0, arm interiors, infinity.
struct VertexIndex {
    explicit VertexIndex(const CanonicalType& t) : t(t) {
        std::size_t k = 1;
        for (int m : t.arms()) {
            start.push_back(k);
            k += static_cast<std::size_t>(m - 1);
        }
        count = k + 1;
    }
    std::size_t operator()(int i, int j) const {
        if (j == 0) return 0;
        if (j == t.arm_length(i)) return count - 1;
        return start[static_cast<std::size_t>(i - 1)] + static_cast<std::size_t>(j - 1);
    }
    const CanonicalType& t;
    std::vector<std::size_t> start;
    std::size_t count = 0;
};

// Sets arm k to "C on alpha_{k,1}, identities elsewhere" for a constant-dimension arm.
void set_arm_path(MatrixRep& rep, int k, const Matrix& c) {
    rep.arrow(k, 1) = c;
    for (int j = 2; j <= rep.type.arm_length(k); ++j) rep.arrow(k, j) = Matrix::identity(c.rows());
}

// Arm compositions of a module in the tube at lambda_i, as scalars.
std::vector<Rational> tube_compositions(const CanonicalType& t, const LambdaChoice& lambdas, int i) {
    const ProjectivePoint pt = lambdas.tube_point(i);
    std::vector<Rational> c{pt.c1, pt.c2};
    for (int k = 3; k <= t.n(); ++k) c.push_back(pt.c1 + lambdas.lambda(k) * pt.c2);
    return c;
}

// Fills the arms other than i of a representation whose 0, inf and
// off-arm spaces are one-dimensional.
void fill_off_arms(MatrixRep& rep, const LambdaChoice& lambdas, int i) {
    const auto c = tube_compositions(rep.type, lambdas, i);
    for (int k = 1; k <= rep.type.n(); ++k) {
        if (k == i) continue;
        set_arm_path(rep, k, Matrix::scalar(1, c[static_cast<std::size_t>(k - 1)]));
    }
}

void require_arm(const CanonicalType& t, int i) {
    if (i < 1 || i > t.n()) throw InvalidInput("arm index out of range");
}

}  // namespace

Matrix Matrix::identity(std::size_t n) { return scalar(n, 1); }

Matrix Matrix::scalar(std::size_t n, const Rational& c) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = c;
    return m;
}

Matrix Matrix::nilpotent_jordan(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k + 1 < n; ++k) m(k, k + 1) = 1;
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& v) { return v == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& v = a(r, k);
            if (v == 0) continue;
            for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += v * b(k, c);
        }
    }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidInput("matrix sum shape mismatch");
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Rational& c, const Matrix& a) {
    Matrix out = a;
    for (auto& v : out.data_) v *= c;
    return out;
}

std::size_t rank(Matrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, c) == 0) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r) {
            for (std::size_t k = c; k < m.cols(); ++k) std::swap(m(pivot, k), m(r, k));
        }
        const Rational inv = 1 / m(r, c);
        for (std::size_t row = r + 1; row < m.rows(); ++row) {
            if (m(row, c) == 0) continue;
            const Rational factor = m(row, c) * inv;
            for (std::size_t k = c; k < m.cols(); ++k) m(row, k) -= factor * m(r, k);
        }
        ++r;
    }
    return r;
}

LambdaChoice::LambdaChoice(const CanonicalType& t, std::vector<Rational> finite) : finite_(std::move(finite)) {
    if (static_cast<int>(finite_.size()) != t.n() - 2) {
        throw InvalidInput("need " + std::to_string(t.n() - 2) + " lambda values for type " + t.str());
    }
    for (std::size_t a = 0; a < finite_.size(); ++a) {
        if (finite_[a] == 0) throw InvalidInput("lambda values must be nonzero");
        for (std::size_t b = a + 1; b < finite_.size(); ++b) {
            if (finite_[a] == finite_[b]) throw InvalidInput("lambda values must be pairwise distinct");
        }
    }
}

LambdaChoice LambdaChoice::defaults(const CanonicalType& t) {
    std::vector<Rational> values;
    for (int k = 3; k <= t.n(); ++k) values.emplace_back(k - 2);
    return LambdaChoice(t, std::move(values));
}

const Rational& LambdaChoice::lambda(int i) const {
    if (i < 3 || i - 3 >= static_cast<int>(finite_.size())) throw InvalidInput("lambda index out of range");
    return finite_[static_cast<std::size_t>(i - 3)];
}

ProjectivePoint LambdaChoice::tube_point(int i) const {
    if (i == 1) return {0, 1};
    if (i == 2) return {1, 0};
    return {-lambda(i), 1};
}

bool LambdaChoice::is_tube_point(const Rational& mu) const {
    return mu == 0 || std::find(finite_.begin(), finite_.end(), mu) != finite_.end();
}

MatrixRep zero_rep(const CanonicalType& t, const LambdaChoice& lambdas, const DimVector& d) {
    d.require_shape(t);
    MatrixRep rep{t, lambdas, d, {}};
    for (int i = 1; i <= t.n(); ++i) {
        std::vector<Matrix> arm;
        for (int j = 1; j <= t.arm_length(i); ++j) arm.emplace_back(size_of(d.at(i, j - 1)), size_of(d.at(i, j)));
        rep.arrows.push_back(std::move(arm));
    }
    return rep;
}

bool check_relations(const CanonicalType& t, const LambdaChoice& lambdas, const MatrixRep& m) {
    m.dim.require_shape(t);
    if (m.arrows.size() != static_cast<std::size_t>(t.n())) throw InvalidInput("wrong number of arms");
    for (int i = 1; i <= t.n(); ++i) {
        if (m.arrows[static_cast<std::size_t>(i - 1)].size() != static_cast<std::size_t>(t.arm_length(i))) {
            throw InvalidInput("wrong number of arrows on arm " + std::to_string(i));
        }
        for (int j = 1; j <= t.arm_length(i); ++j) {
            const Matrix& a = m.arrow(i, j);
            if (a.rows() != size_of(m.dim.at(i, j - 1)) || a.cols() != size_of(m.dim.at(i, j))) {
                throw InvalidInput("arrow (" + std::to_string(i) + "," + std::to_string(j) + ") has the wrong shape");
            }
        }
    }
    const Matrix first = arm_path(m, 1);
    const Matrix second = arm_path(m, 2);
    for (int k = 3; k <= t.n(); ++k) {
        if (!(first + lambdas.lambda(k) * second - arm_path(m, k)).is_zero()) return false;
    }
    return true;
}

MatrixRep build_exceptional_simple(const CanonicalType& t, const LambdaChoice& lambdas, int i, int j) {
    require_arm(t, i);
    MatrixRep rep = zero_rep(t, lambdas, basis::e(t, i, j));
    if (j == 0) fill_off_arms(rep, lambdas, i);
    return rep;
}

MatrixRep build_homogeneous(const CanonicalType& t, const LambdaChoice& lambdas, const Rational& mu, std::size_t size) {
    if (lambdas.is_tube_point(mu)) throw InvalidInput("mu = " + to_string(mu) + " collides with an exceptional tube");
    if (size == 0) throw InvalidInput("homogeneous module size must be positive");
    MatrixRep rep = zero_rep(t, lambdas, DimVector::constant(t, Int(size)));
    const Matrix c1 = Rational(-1) * (Matrix::scalar(size, mu) + Matrix::nilpotent_jordan(size));
    set_arm_path(rep, 1, c1);
    set_arm_path(rep, 2, Matrix::identity(size));
    for (int k = 3; k <= t.n(); ++k) set_arm_path(rep, k, c1 + Matrix::scalar(size, lambdas.lambda(k)));
    return rep;
}

MatrixRep build_length_two(const CanonicalType& t, const LambdaChoice& lambdas, int i, int a) {
    require_arm(t, i);
    const int m = t.arm_length(i);
    if (a < 0 || a >= m) throw InvalidInput("socle index out of range");
    const int top = (a + 1) % m;
    MatrixRep rep = zero_rep(t, lambdas, basis::e(t, i, a) + basis::e(t, i, top));
    if (a >= 1 && top >= 1) {
        rep.arrow(i, a + 1)(0, 0) = 1;  // (i, a+1) -> (i, a)
        return rep;
    }
    fill_off_arms(rep, lambdas, i);
    if (a == 0) {
        rep.arrow(i, 1)(0, 0) = 1;  // top (i, 1) onto the socle at vertex 0
    } else {
        rep.arrow(i, m)(0, 0) = 1;  // top at infinity onto the socle at (i, m-1)
    }
    return rep;
}

std::size_t hom_dim_linear(const CanonicalType& t, const MatrixRep& m, const MatrixRep& n) {
    if (!check_relations(t, m.lambdas, m) || !check_relations(t, n.lambdas, n)) {
        throw PreconditionError("hom_dim_linear needs representations satisfying the relations");
    }
    const VertexIndex vertex(t);
    std::vector<std::size_t> rows_at(vertex.count);
    std::vector<std::size_t> cols_at(vertex.count);
    std::vector<std::size_t> offset(vertex.count + 1, 0);
    for (int i = 1; i <= t.n(); ++i) {
        for (int j = 0; j <= t.arm_length(i); ++j) {
            const std::size_t x = vertex(i, j);
            rows_at[x] = size_of(n.dim.at(i, j));
            cols_at[x] = size_of(m.dim.at(i, j));
        }
    }
    for (std::size_t x = 0; x < vertex.count; ++x) offset[x + 1] = offset[x] + rows_at[x] * cols_at[x];
    const std::size_t unknowns = offset.back();
    if (unknowns == 0) return 0;
    auto var = [&](std::size_t x, std::size_t r, std::size_t c) { return offset[x] + r * cols_at[x] + c; };

    std::size_t equations = 0;
    for (int i = 1; i <= t.n(); ++i) {
        for (int j = 1; j <= t.arm_length(i); ++j) equations += rows_at[vertex(i, j - 1)] * cols_at[vertex(i, j)];
    }
    Matrix system(equations, unknowns);
    std::size_t row = 0;
    for (int i = 1; i <= t.n(); ++i) {
        for (int j = 1; j <= t.arm_length(i); ++j) {
            const std::size_t src = vertex(i, j);
            const std::size_t dst = vertex(i, j - 1);
            const Matrix& ma = m.arrow(i, j);
            const Matrix& na = n.arrow(i, j);
            // f_dst M_a - N_a f_src = 0
            for (std::size_t r = 0; r < rows_at[dst]; ++r) {
                for (std::size_t c = 0; c < cols_at[src]; ++c, ++row) {
                    for (std::size_t k = 0; k < cols_at[dst]; ++k) system(row, var(dst, r, k)) += ma(k, c);
                    for (std::size_t k = 0; k < rows_at[src]; ++k) system(row, var(src, k, c)) -= na(r, k);
                }
            }
        }
    }
    return unknowns - rank(std::move(system));
}

MatrixRep direct_sum(const MatrixRep& m, const MatrixRep& n) {
    if (!(m.type == n.type) || !(m.lambdas == n.lambdas)) {
        throw InvalidInput("direct_sum needs representations over the same algebra");
    }
    MatrixRep rep = zero_rep(m.type, m.lambdas, m.dim + n.dim);
    for (int i = 1; i <= m.type.n(); ++i) {
        for (int j = 1; j <= m.type.arm_length(i); ++j) {
            const Matrix& a = m.arrow(i, j);
            const Matrix& b = n.arrow(i, j);
            Matrix& out = rep.arrow(i, j);
            for (std::size_t r = 0; r < a.rows(); ++r) {
                for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
            }
            for (std::size_t r = 0; r < b.rows(); ++r) {
                for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
            }
        }
    }
    return rep;
}

}  // namespace canalg::oracle
