#include "gdr/matrix.hpp"

#include <stdexcept>

namespace gdr {

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RatVec>& rows) {
    if (rows.empty()) return RationalMatrix();
    RationalMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows(); ++i) {
        if (static_cast<int>(rows[i].size()) != m.cols())
            throw std::invalid_argument("from_rows: ragged rows");
        for (int j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::from_columns(const std::vector<RatVec>& cols) {
    if (cols.empty()) return RationalMatrix();
    RationalMatrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j) {
        if (static_cast<int>(cols[j].size()) != m.rows())
            throw std::invalid_argument("from_columns: ragged columns");
        for (int i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    }
    return m;
}

RatVec RationalMatrix::row(int i) const {
    RatVec r(cols_);
    for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

RatVec RationalMatrix::column(int j) const {
    RatVec c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool RationalMatrix::is_zero() const {
    for (const auto& x : a_)
        if (sgn(x) != 0) return false;
    return true;
}

bool RationalMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if ((*this)(i, j) != ((i == j) ? 1 : 0)) return false;
    return true;
}

RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
    RationalMatrix z(x.rows(), y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int k = 0; k < x.cols(); ++k) {
            const Rational& xik = x(i, k);
            if (sgn(xik) == 0) continue;
            for (int j = 0; j < y.cols(); ++j) z(i, j) += xik * y(k, j);
        }
    return z;
}

RatVec operator*(const RationalMatrix& m, const RatVec& v) {
    if (m.cols() != static_cast<int>(v.size()))
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    RatVec out(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        Rational s = 0;
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

int compare(const RationalMatrix& x, const RationalMatrix& y) {
    if (x.rows() != y.rows()) return x.rows() < y.rows() ? -1 : 1;
    if (x.cols() != y.cols()) return x.cols() < y.cols() ? -1 : 1;
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) {
            int c = cmp(x(i, j), y(i, j));
            if (c != 0) return c < 0 ? -1 : 1;
        }
    return 0;
}

namespace {

// Integer row-echelon data shared by the RREF entry points.
struct Echelon {
    std::vector<std::vector<Integer>> rows; // forward-eliminated, integer
    std::vector<int> pivot_columns;
};

Integer exact_div(const Integer& num, const Integer& den) {
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (sgn(r) != 0) throw std::logic_error("fraction-free elimination: inexact division");
    return q;
}

Echelon forward_eliminate(const RationalMatrix& m) {
    const int nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Integer>> a(nr, std::vector<Integer>(nc));
    for (int i = 0; i < nr; ++i) {
        Integer l = 1;
        for (int j = 0; j < nc; ++j) l = lcm(l, m(i, j).get_den());
        for (int j = 0; j < nc; ++j) {
            Rational scaled = m(i, j) * Rational(l);
            scaled.canonicalize();
            a[i][j] = scaled.get_num();
        }
    }

    Echelon ech;
    Integer prev = 1;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int p = -1;
        for (int i = r; i < nr; ++i)
            if (sgn(a[i][c]) != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        for (int i = r + 1; i < nr; ++i) {
            for (int j = c + 1; j < nc; ++j)
                a[i][j] = exact_div(a[r][c] * a[i][j] - a[i][c] * a[r][j], prev);
            a[i][c] = 0;
        }
        prev = a[r][c];
        ech.pivot_columns.push_back(c);
        ++r;
    }
    a.resize(ech.pivot_columns.size());
    ech.rows = std::move(a);
    return ech;
}

} // namespace

RrefResult reduced_row_echelon(const RationalMatrix& m) {
    Echelon ech = forward_eliminate(m);
    const int rk = static_cast<int>(ech.pivot_columns.size());
    const int nc = m.cols();

    std::vector<RatVec> rows(rk, RatVec(nc));
    for (int i = rk - 1; i >= 0; --i) {
        const int pc = ech.pivot_columns[i];
        RatVec row(nc);
        for (int j = pc; j < nc; ++j) row[j] = Rational(ech.rows[i][j]);
        // Clear entries above lower pivots, then normalize the pivot to 1.
        for (int k = i + 1; k < rk; ++k) {
            const int kc = ech.pivot_columns[k];
            if (sgn(row[kc]) == 0) continue;
            Rational f = row[kc];
            for (int j = kc; j < nc; ++j) row[j] -= f * rows[k][j];
        }
        Rational pivot = row[pc];
        for (int j = pc; j < nc; ++j) row[j] /= pivot;
        rows[i] = std::move(row);
    }

    RrefResult out;
    out.rref = RationalMatrix(rk, nc);
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < nc; ++j) out.rref(i, j) = rows[i][j];
    out.pivot_columns = std::move(ech.pivot_columns);
    return out;
}

int rank(const RationalMatrix& m) {
    return static_cast<int>(forward_eliminate(m).pivot_columns.size());
}

std::vector<RatVec> kernel_basis(const RationalMatrix& m) {
    RrefResult r = reduced_row_echelon(m);
    const int nc = m.cols();
    std::vector<char> is_pivot(nc, 0);
    std::vector<int> pivot_row(nc, -1);
    for (int i = 0; i < r.rank(); ++i) {
        is_pivot[r.pivot_columns[i]] = 1;
        pivot_row[r.pivot_columns[i]] = i;
    }
    std::vector<RatVec> basis;
    for (int f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(nc);
        v[f] = 1;
        for (int c = 0; c < nc; ++c)
            if (is_pivot[c]) v[c] = -r.rref(pivot_row[c], f);
        // Scale so the first nonzero entry is +1.
        for (int j = 0; j < nc; ++j) {
            if (sgn(v[j]) == 0) continue;
            Rational lead = v[j];
            for (int k = j; k < nc; ++k) v[k] /= lead;
            break;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<RatVec> image_basis(const RationalMatrix& m) {
    Echelon ech = forward_eliminate(m);
    std::vector<RatVec> basis;
    basis.reserve(ech.pivot_columns.size());
    for (int c : ech.pivot_columns) basis.push_back(m.column(c));
    return basis;
}

std::optional<RatVec> solve(const RationalMatrix& m, const RatVec& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    RrefResult r = reduced_row_echelon(aug);
    for (int c : r.pivot_columns)
        if (c == m.cols()) return std::nullopt;
    RatVec x(m.cols());
    for (int i = 0; i < r.rank(); ++i) x[r.pivot_columns[i]] = r.rref(i, m.cols());
    return x;
}

Rational inner_product(const RatVec& x, const RatVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("inner_product: length mismatch");
    Rational s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

RatVec project_orthogonal(const RatVec& v, const std::vector<RatVec>& basis) {
    if (basis.empty()) return RatVec(v.size());
    const int k = static_cast<int>(basis.size());
    RationalMatrix gram(k, k);
    RatVec rhs(k);
    for (int i = 0; i < k; ++i) {
        if (basis[i].size() != v.size())
            throw std::invalid_argument("project_orthogonal: basis length mismatch");
        rhs[i] = inner_product(basis[i], v);
        for (int j = 0; j < k; ++j) gram(i, j) = inner_product(basis[i], basis[j]);
    }
    auto x = solve(gram, rhs);
    if (!x) throw std::logic_error("project_orthogonal: Gram system inconsistent");
    RatVec out(v.size());
    for (int i = 0; i < k; ++i)
        for (size_t j = 0; j < v.size(); ++j) out[j] += (*x)[i] * basis[i][j];
    return out;
}

RationalMatrix inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
    const int n = m.rows();
    RationalMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    RrefResult r = reduced_row_echelon(aug);
    if (r.rank() != n || r.pivot_columns.back() >= n)
        throw std::invalid_argument("inverse: matrix is singular");
    RationalMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = r.rref(i, n + j);
    return inv;
}

RatVec operator+(const RatVec& x, const RatVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vector sum: length mismatch");
    RatVec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
    return z;
}

RatVec operator-(const RatVec& x, const RatVec& y) {
    if (x.size() != y.size()) throw std::invalid_argument("vector difference: length mismatch");
    RatVec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = x[i] - y[i];
    return z;
}

RatVec operator*(const Rational& c, const RatVec& v) {
    RatVec z(v.size());
    for (size_t i = 0; i < v.size(); ++i) z[i] = c * v[i];
    return z;
}

bool is_zero(const RatVec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

} // namespace gdr
