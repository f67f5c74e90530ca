#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rrmul/ff/field.hpp"

namespace rrmul::ff {

using Vec = std::vector<Elem>;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InconsistentSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    /// Throws DimensionError on ragged rows.
    static Matrix from_rows(FieldPtr field, const std::vector<Vec>& rows, std::size_t cols = 0);
    static Matrix identity(FieldPtr field, std::size_t n);

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Elem at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    Vec apply(const Vec& v) const;  // M v
    bool operator==(const Matrix& o) const;

private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

/// Reduced row echelon form with pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {v : M v = 0}, one vector per free column (that column set to 1).
std::vector<Vec> kernel(const Matrix& m);

struct LinearSolution {
    std::size_t rank = 0;
    std::vector<Vec> kernel;
    std::optional<Vec> particular;  // free variables set to 0
};

/// Full analysis of M v = rhs. Throws DimensionError when rhs has the wrong length.
LinearSolution solve_linear(const Matrix& m, const Vec& rhs);

/// One solution of M v = rhs with free variables set to 0; throws InconsistentSystem.
Vec solve(const Matrix& m, const Vec& rhs);

/// X with M X = B, column by column; throws InconsistentSystem.
Matrix solve_matrix(const Matrix& m, const Matrix& b);

}  // namespace rrmul::ff
