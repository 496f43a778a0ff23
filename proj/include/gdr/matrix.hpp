#pragma once

#include <optional>
#include <vector>

#include "gdr/rational.hpp"

namespace gdr {

using RatVec = std::vector<Rational>;

/// Dense rational matrix, row-major. Small and exact: this backs incidence
/// matrices, Laplacians and the induced cohomology operators, all of which
/// are desk-scale (at most a few hundred rows/columns).
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RationalMatrix identity(int n);
    static RationalMatrix from_rows(const std::vector<RatVec>& rows);
    static RationalMatrix from_columns(const std::vector<RatVec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    RatVec row(int i) const;
    RatVec column(int j) const;
    RationalMatrix transposed() const;

    bool is_zero() const;
    bool is_identity() const;

    friend bool operator==(const RationalMatrix& x, const RationalMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y);
RatVec operator*(const RationalMatrix& m, const RatVec& v);

/// Total order on matrices (dimensions first, then entries); used to
/// deduplicate induced-action operators by exact value.
int compare(const RationalMatrix& x, const RationalMatrix& y);

struct RrefResult {
    RationalMatrix rref;
    std::vector<int> pivot_columns;
    int rank() const { return static_cast<int>(pivot_columns.size()); }
};

/*
 * Elimination is fraction-free (Bareiss): rows are first scaled to integers,
 * the forward sweep stays in arbitrary-precision integers with every division
 * exact, and only the final back-substitution to reduced echelon form divides
 * by pivots. Pivot selection is deterministic: leftmost nonzero column, first
 * nonzero row — so kernel/image bases are reproducible across runs.
 */
RrefResult reduced_row_echelon(const RationalMatrix& m);

int rank(const RationalMatrix& m);

/// Basis of the right null space. Each vector is scaled so its first nonzero
/// entry is +1; vectors are ordered by their free column.
std::vector<RatVec> kernel_basis(const RationalMatrix& m);

/// Columns of m at the pivot positions of its RREF.
std::vector<RatVec> image_basis(const RationalMatrix& m);

/// One exact solution of m x = b (free variables zero), or nullopt when the
/// system is inconsistent. No least-squares fallback.
std::optional<RatVec> solve(const RationalMatrix& m, const RatVec& b);

Rational inner_product(const RatVec& x, const RatVec& y);

/// Orthogonal projection of v onto span(basis) under the standard inner
/// product, exact. Empty basis projects to zero.
RatVec project_orthogonal(const RatVec& v, const std::vector<RatVec>& basis);

RationalMatrix inverse(const RationalMatrix& m);

RatVec operator+(const RatVec& x, const RatVec& y);
RatVec operator-(const RatVec& x, const RatVec& y);
RatVec operator*(const Rational& c, const RatVec& v);
bool is_zero(const RatVec& v);

} // namespace gdr
