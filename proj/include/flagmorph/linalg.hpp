#pragma once

#include <vector>

#include <gmpxx.h>

namespace flagmorph::linalg {

/// Exact rational scalar, always kept in lowest terms.
using Rat = mpq_class;

using Vec = std::vector<Rat>;

/// Dense matrix over exact rationals. Small and exact beats sparse and fast
/// here: these matrices never exceed the ambient dimension of a flag.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols);
    static Mat identity(int n);
    static Mat from_columns(int rows, const std::vector<Vec>& columns);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c);
    const Rat& at(int r, int c) const;

    Vec column(int c) const;
    Mat hstack(const Mat& other) const;
    Mat transpose() const;
    Mat operator*(const Mat& other) const;
    bool operator==(const Mat& other) const = default;
    bool is_zero() const;

    /// Rank by fraction-free (Bareiss) elimination on a denominator-cleared
    /// integer copy.
    int rank() const;

    /// Basis of the right nullspace as matrix columns, from an exact
    /// reduced row echelon form. rank() + kernel().cols() == cols() always.
    Mat kernel() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rat> data_;
};

Rat dot(const Vec& a, const Vec& b);

/// Covector-vector pairing c(x).
Rat pair(const Vec& covector, const Vec& x);

/// Whether the column span of `inner` is contained in the column span of
/// `outer` (certified through ranks).
bool span_contained(const Mat& inner, const Mat& outer);

/// Whether two matrices have the same column span.
bool span_equal(const Mat& a, const Mat& b);

}  // namespace flagmorph::linalg
