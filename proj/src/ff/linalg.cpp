#include "rrmul/ff/linalg.hpp"

#include <string>

namespace rrmul::ff {

Matrix Matrix::from_rows(FieldPtr field, const std::vector<Vec>& rows, std::size_t cols) {
    if (!rows.empty()) cols = rows.front().size();
    Matrix m(std::move(field), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) {
            if (rows[i][j] >= m.field_->order()) throw std::invalid_argument("matrix entry outside field");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
    Matrix m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

Vec Matrix::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
    const Field& F = *field_;
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t l = 0; l < cols_; ++l) {
            Elem a = at(i, l);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) = F.add(r.at(i, j), F.mul(a, o.at(l, j)));
        }
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionError("vector length does not match matrix columns");
    const Field& F = *field_;
    Vec r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] = F.add(r[i], F.mul(at(i, j), v[j]));
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && field_->same_as(*o.field_);
}

Echelon row_reduce(Matrix m) {
    const Field& F = *m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(piv, j));
        Elem inv = F.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = F.mul(m.at(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Elem f = F.neg(m.at(i, c));
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) = F.add(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

namespace {

std::vector<Vec> kernel_from(const Echelon& e, std::size_t ncols) {
    const Field& F = *e.reduced.field();
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(ncols, 0);
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = F.neg(e.reduced.at(i, f));
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

std::vector<Vec> kernel(const Matrix& m) { return kernel_from(row_reduce(m), m.cols()); }

LinearSolution solve_linear(const Matrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows())
        throw DimensionError("right-hand side has length " + std::to_string(rhs.size()) + ", expected " +
                             std::to_string(m.rows()));
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    Echelon e = row_reduce(std::move(aug));
    LinearSolution sol;
    bool consistent = e.pivots.empty() || e.pivots.back() != m.cols();
    if (!consistent) e.pivots.pop_back();
    sol.rank = e.pivots.size();
    sol.kernel = kernel_from(e, m.cols());
    if (consistent) {
        Vec v(m.cols(), 0);
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = e.reduced.at(i, m.cols());
        sol.particular = std::move(v);
    }
    return sol;
}

Vec solve(const Matrix& m, const Vec& rhs) {
    auto sol = solve_linear(m, rhs);
    if (!sol.particular) throw InconsistentSystem("linear system has no solution");
    return *sol.particular;
}

Matrix solve_matrix(const Matrix& m, const Matrix& b) {
    if (b.rows() != m.rows()) throw DimensionError("right-hand side row count mismatch");
    Matrix x(m.field(), m.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        Vec v = solve(m, b.col(j));
        for (std::size_t i = 0; i < v.size(); ++i) x.at(i, j) = v[i];
    }
    return x;
}

}  // namespace rrmul::ff
