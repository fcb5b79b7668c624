#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "supertensor/rational.hpp"

namespace supertensor {

using Vec = std::vector<Rational>;

struct SubspaceNotContained : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularMatrix : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            assert(rows[i].size() == cols);
            for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const {
        return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    /// Inverse by Gauss-Jordan; throws SingularMatrix.
    Matrix inverse() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

/// Incremental reduced row echelon builder. Rows are kept fully reduced
/// (pivot entries 1, pivot columns zero elsewhere) at all times, so the
/// final row set is the unique RREF of everything inserted.
class Echelon {
public:
    explicit Echelon(std::size_t ambient) : ambient_(ambient), pivot_of_col_(ambient, -1) {}

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces v against the current rows (eliminating pivot coordinates).
    Vec reduce(Vec v) const {
        assert(v.size() == ambient_);
        for (std::size_t c = 0; c < ambient_; ++c) {
            int r = pivot_of_col_[c];
            if (r < 0 || v[c] == 0) continue;
            Rational factor = v[c];
            const Vec& row = rows_[static_cast<std::size_t>(r)];
            for (std::size_t j = c; j < ambient_; ++j)
                if (row[j] != 0) v[j] -= factor * row[j];
        }
        return v;
    }

    /// Inserts a vector; returns true when it enlarged the span.
    bool insert(Vec v) {
        v = reduce(std::move(v));
        std::size_t lead = ambient_;
        for (std::size_t c = 0; c < ambient_; ++c)
            if (v[c] != 0) {
                lead = c;
                break;
            }
        if (lead == ambient_) return false;
        Rational inv = v[lead];
        for (std::size_t j = lead; j < ambient_; ++j)
            if (v[j] != 0) v[j] /= inv;
        // back-eliminate the new pivot from existing rows
        for (auto& row : rows_) {
            if (row[lead] == 0) continue;
            Rational factor = row[lead];
            for (std::size_t j = lead; j < ambient_; ++j)
                if (v[j] != 0) row[j] -= factor * v[j];
        }
        pivot_of_col_[lead] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        pivots_.push_back(lead);
        return true;
    }

    bool contains(Vec v) const {
        v = reduce(std::move(v));
        return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
    }

    /// Rows sorted by pivot column (the canonical RREF ordering).
    std::vector<Vec> sorted_rows() const {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
        std::vector<Vec> out;
        out.reserve(order.size());
        for (auto i : order) out.push_back(rows_[i]);
        return out;
    }

    std::vector<std::size_t> sorted_pivots() const {
        auto p = pivots_;
        std::sort(p.begin(), p.end());
        return p;
    }

private:
    std::size_t ambient_;
    std::vector<Vec> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<int> pivot_of_col_;
};

/// Canonical subspace record: basis in reduced row echelon form,
/// strictly increasing pivots, no zero rows. Equality of records
/// coincides with equality of subspaces.
struct Subspace {
    std::size_t ambient = 0;
    Matrix basis;                       // rank x ambient, RREF
    std::vector<std::size_t> pivots;    // strictly increasing

    std::size_t rank() const { return basis.rows(); }

    static Subspace from_echelon(const Echelon& e) {
        Subspace s;
        s.ambient = e.ambient();
        s.basis = Matrix::from_rows(e.sorted_rows(), e.ambient());
        s.pivots = e.sorted_pivots();
        return s;
    }

    Echelon to_echelon() const {
        Echelon e(ambient);
        for (std::size_t r = 0; r < basis.rows(); ++r) e.insert(basis.row(r));
        return e;
    }

    bool contains(const Vec& v) const { return to_echelon().contains(v); }

    bool contains(const Subspace& other) const {
        auto e = to_echelon();
        for (std::size_t r = 0; r < other.basis.rows(); ++r)
            if (!e.contains(other.basis.row(r))) return false;
        return true;
    }

    bool operator==(const Subspace& o) const {
        return ambient == o.ambient && pivots == o.pivots && basis == o.basis;
    }

    /// Column indices without a pivot (canonical coset representatives).
    std::vector<std::size_t> free_columns() const {
        std::vector<std::size_t> out;
        std::size_t p = 0;
        for (std::size_t c = 0; c < ambient; ++c) {
            if (p < pivots.size() && pivots[p] == c)
                ++p;
            else
                out.push_back(c);
        }
        return out;
    }
};

inline Subspace span(const std::vector<Vec>& vectors, std::size_t ambient_dim) {
    Echelon e(ambient_dim);
    for (const auto& v : vectors) {
        assert(v.size() == ambient_dim);
        e.insert(v);
    }
    return Subspace::from_echelon(e);
}

inline std::pair<Matrix, std::vector<std::size_t>> rref(const Matrix& m) {
    Echelon e(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row(r));
    return {Matrix::from_rows(e.sorted_rows(), m.cols()), e.sorted_pivots()};
}

inline bool contains(const Subspace& s, const Vec& v) {
    assert(v.size() == s.ambient);
    return s.contains(v);
}

inline std::size_t quotient_dim(const Subspace& big, const Subspace& small) {
    if (!big.contains(small))
        throw SubspaceNotContained("quotient_dim: small subspace not contained in big");
    return big.rank() - small.rank();
}

/// Null space of m, canonicalized to a Subspace.
inline Subspace kernel(const Matrix& m) {
    auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(r, f);
        basis.push_back(std::move(v));
    }
    return span(basis, m.cols());
}

inline Matrix Matrix::inverse() const {
    assert(rows_ == cols_);
    std::size_t n = rows_;
    Echelon e(2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        Vec v(2 * n, Rational(0));
        for (std::size_t c = 0; c < n; ++c) v[c] = at(r, c);
        v[n + r] = 1;
        e.insert(v);
    }
    auto pivots = e.sorted_pivots();
    for (std::size_t r = 0; r < n; ++r)
        if (r >= pivots.size() || pivots[r] != r) throw SingularMatrix("matrix not invertible");
    auto rows = e.sorted_rows();
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rows[r][n + c];
    return inv;
}

inline Vec scaled(Vec v, const Rational& c) {
    for (auto& x : v) x *= c;
    return v;
}

inline void add_scaled(Vec& dst, const Vec& src, const Rational& c) {
    assert(dst.size() == src.size());
    if (c == 0) return;
    for (std::size_t i = 0; i < dst.size(); ++i)
        if (src[i] != 0) dst[i] += c * src[i];
}

inline bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace supertensor
