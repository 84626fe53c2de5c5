#pragma once

#include <vector>

#include "dynforms/errors.hpp"
#include "dynforms/unipoly.hpp"

namespace dynforms {

// Small dense matrix over an exact field; just enough linear algebra
// for Sylvester determinants and Mobius-solving null spaces.
template <class K>
class Matrix {
  public:
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows, std::vector<K>(cols, K{})) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    K& at(std::size_t r, std::size_t c) { return a_[r][c]; }
    const K& at(std::size_t r, std::size_t c) const { return a_[r][c]; }

    // Determinant by Gaussian elimination with exact division.
    K det() const {
        if (rows_ != cols_) throw InputError("determinant of non-square matrix");
        if (rows_ == 0) {
            throw InputError("determinant of empty matrix");
        }
        std::vector<std::vector<K>> m = a_;
        bool any_nonzero = false;
        for (const auto& r : m)
            for (const K& x : r) any_nonzero = any_nonzero || !is_zero(x);
        if (!any_nonzero) return K{};
        K result = unit_like_of(m);
        bool negate = false;
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t pivot = col;
            while (pivot < rows_ && is_zero(m[pivot][col])) ++pivot;
            if (pivot == rows_) return K{};
            if (pivot != col) {
                std::swap(m[pivot], m[col]);
                negate = !negate;
            }
            result = static_cast<K>(result * m[col][col]);
            K inv_pivot = static_cast<K>(unit_like(m[col][col]) / m[col][col]);
            for (std::size_t r = col + 1; r < rows_; ++r) {
                if (is_zero(m[r][col])) continue;
                K factor = static_cast<K>(m[r][col] * inv_pivot);
                for (std::size_t c = col; c < cols_; ++c)
                    m[r][c] = static_cast<K>(m[r][c] - static_cast<K>(factor * m[col][c]));
            }
        }
        return negate ? static_cast<K>(-result) : result;
    }

    // Basis of the right null space { x : A x = 0 }, via reduced row
    // echelon form. Works for any shape.
    std::vector<std::vector<K>> null_space() const {
        std::vector<std::vector<K>> m = a_;
        std::vector<long> pivot_of_col(cols_, -1);
        std::size_t row = 0;
        K unit{};
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t p = row;
            while (p < rows_ && is_zero(m[p][col])) ++p;
            if (p == rows_) continue;
            std::swap(m[p], m[row]);
            K inv = static_cast<K>(unit_like(m[row][col]) / m[row][col]);
            for (std::size_t c = 0; c < cols_; ++c)
                m[row][c] = static_cast<K>(m[row][c] * inv);
            unit = unit_like(m[row][col]);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row || is_zero(m[r][col])) continue;
                K factor = m[r][col];
                for (std::size_t c = 0; c < cols_; ++c)
                    m[r][c] = static_cast<K>(m[r][c] - static_cast<K>(factor * m[row][c]));
            }
            pivot_of_col[col] = static_cast<long>(row);
            ++row;
        }
        std::vector<std::vector<K>> basis;
        for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
            if (pivot_of_col[free_col] >= 0) continue;
            std::vector<K> v(cols_, K{});
            if (is_zero(unit)) {
                // No pivots at all: the matrix is zero; any unit works.
                v[free_col] = find_unit();
            } else {
                v[free_col] = unit;
            }
            for (std::size_t col = 0; col < cols_; ++col) {
                long pr = pivot_of_col[col];
                if (pr >= 0)
                    v[col] = static_cast<K>(-m[static_cast<std::size_t>(pr)][free_col]);
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

  private:
    static K unit_like_of(const std::vector<std::vector<K>>& m) {
        for (const auto& row : m)
            for (const K& x : row)
                if (!is_zero(x)) return unit_like(x);
        throw InputError("matrix has no nonzero entry to derive a field unit");
    }
    K find_unit() const {
        for (const auto& row : a_)
            for (const K& x : row)
                if (!is_zero(x)) return unit_like(x);
        // All entries zero: the default unit is only correct for fields
        // whose value-initialized unit exists (rationals).
        return unit_like(K{});
    }

    std::size_t rows_, cols_;
    std::vector<std::vector<K>> a_;
};

// Determinant of the Sylvester matrix of a and b taken at *formal*
// degrees da >= deg a, db >= deg b. With exact degrees this is the
// classical resultant; padding a degree makes the determinant pick up
// the factor lc(other)^(padding) or vanish when both pad (shared root
// at infinity of the corresponding binary forms).
template <class K>
K sylvester_resultant_formal(const UniPoly<K>& a, int da, const UniPoly<K>& b, int db) {
    if (da < a.degree() || db < b.degree())
        throw InputError("formal degree below actual degree");
    if (da < 0 || db < 0) throw InputError("negative formal degree");
    std::size_t n = static_cast<std::size_t>(da + db);
    if (n == 0) {
        // Both constants: empty Sylvester matrix, determinant 1.
        K ua = a.zero() ? K{} : unit_like(a.leading());
        K ub = b.zero() ? K{} : unit_like(b.leading());
        if (!is_zero(ua)) return ua;
        if (!is_zero(ub)) return ub;
        throw InputError("resultant of two zero constants");
    }
    Matrix<K> m(n, n);
    // db rows of a-coefficients, then da rows of b-coefficients, each
    // highest-degree-first as in the textbook Sylvester layout.
    for (int r = 0; r < db; ++r)
        for (int i = 0; i <= da; ++i) m.at(static_cast<std::size_t>(r),
                                           static_cast<std::size_t>(r + i)) = a.coeff(da - i);
    for (int r = 0; r < da; ++r)
        for (int i = 0; i <= db; ++i)
            m.at(static_cast<std::size_t>(db + r), static_cast<std::size_t>(r + i)) =
                b.coeff(db - i);
    return m.det();
}

}  // namespace dynforms
