#pragma once

#include <cstddef>
#include <vector>

#include "canalg/canonical_type.hpp"
#include "canalg/dim_vector.hpp"
#include "canalg/numeric.hpp"

namespace canalg::oracle {

// Dense matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n);
    static Matrix scalar(std::size_t n, const Rational& c);
    // upper shift: ones on the superdiagonal
    static Matrix nilpotent_jordan(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& c, const Matrix& a);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::size_t rank(Matrix m);

// Point (c1 : c2) of the projective line; the tube at lambda has c1 = -lambda c2.
struct ProjectivePoint {
    Rational c1;
    Rational c2;
};

// lambda_1 = 0, lambda_2 = infinity; lambda_3..lambda_n pairwise distinct and nonzero.
class LambdaChoice {
public:
    LambdaChoice(const CanonicalType& t, std::vector<Rational> finite);
    static LambdaChoice defaults(const CanonicalType& t);  // lambda_k = k - 2

    const std::vector<Rational>& finite() const { return finite_; }
    const Rational& lambda(int i) const;  // i in [3, n]
    ProjectivePoint tube_point(int i) const;
    bool is_tube_point(const Rational& mu) const;

    friend bool operator==(const LambdaChoice&, const LambdaChoice&) = default;

private:
    std::vector<Rational> finite_;
};

// A point of mod(d): one matrix per arrow alpha_{i,j} : (i,j) -> (i,j-1),
// of shape d_{i,j-1} x d_{i,j}.
struct MatrixRep {
    CanonicalType type;
    LambdaChoice lambdas;
    DimVector dim;
    std::vector<std::vector<Matrix>> arrows;  // arrows[i-1][j-1]

    const Matrix& arrow(int i, int j) const { return arrows.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1)); }
    Matrix& arrow(int i, int j) { return arrows.at(static_cast<std::size_t>(i - 1)).at(static_cast<std::size_t>(j - 1)); }
};

// All arrows zero, shapes taken from d.
MatrixRep zero_rep(const CanonicalType& t, const LambdaChoice& lambdas, const DimVector& d);

// Checks every arrow shape (InvalidInput on mismatch), then tests the n - 2
// relations exactly.
bool check_relations(const CanonicalType& t, const LambdaChoice& lambdas, const MatrixRep& m);

// The simple S_{i,j} of the tube at lambda_i; dim e_{i,j}.
MatrixRep build_exceptional_simple(const CanonicalType& t, const LambdaChoice& lambdas, int i, int j);

// Uniserial of length `size` over the homogeneous simple at mu; dim size * h.
MatrixRep build_homogeneous(const CanonicalType& t, const LambdaChoice& lambdas, const Rational& mu, std::size_t size);

// Uniserial of the tube at lambda_i with socle S_{i,a} and top S_{i,a+1 mod m_i}.
MatrixRep build_length_two(const CanonicalType& t, const LambdaChoice& lambdas, int i, int a);

// dim Hom(M, N) as the nullity of the intertwining system.
std::size_t hom_dim_linear(const CanonicalType& t, const MatrixRep& m, const MatrixRep& n);

MatrixRep direct_sum(const MatrixRep& m, const MatrixRep& n);

}  // namespace canalg::oracle
