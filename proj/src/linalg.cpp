#include "flagmorph/linalg.hpp"

#include <stdexcept>

namespace flagmorph::linalg {

Mat::Mat(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative shape");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rat(0));
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_columns(int rows, const std::vector<Vec>& columns) {
    Mat m(rows, static_cast<int>(columns.size()));
    for (int c = 0; c < m.cols_; ++c) {
        const Vec& column = columns[static_cast<std::size_t>(c)];
        if (static_cast<int>(column.size()) != rows)
            throw std::invalid_argument("Mat::from_columns: column length mismatch");
        for (int r = 0; r < rows; ++r) m.at(r, c) = column[static_cast<std::size_t>(r)];
    }
    return m;
}

Rat& Mat::at(int r, int c) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("Mat::at: index out of range");
    return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(c)];
}

const Rat& Mat::at(int r, int c) const {
    return const_cast<Mat*>(this)->at(r, c);
}

Vec Mat::column(int c) const {
    Vec out(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r) out[static_cast<std::size_t>(r)] = at(r, c);
    return out;
}

Mat Mat::hstack(const Mat& other) const {
    if (rows_ != other.rows_) throw std::invalid_argument("Mat::hstack: row count mismatch");
    Mat m(rows_, cols_ + other.cols_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c);
        for (int c = 0; c < other.cols_; ++c) m.at(r, cols_ + c) = other.at(r, c);
    }
    return m;
}

Mat Mat::transpose() const {
    Mat m(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m.at(c, r) = at(r, c);
    return m;
}

Mat Mat::operator*(const Mat& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
    Mat m(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < other.cols_; ++c) {
            Rat sum(0);
            for (int k = 0; k < cols_; ++k) sum += at(r, k) * other.at(k, c);
            m.at(r, c) = sum;
        }
    return m;
}

bool Mat::is_zero() const {
    for (const Rat& x : data_)
        if (x != 0) return false;
    return true;
}

int Mat::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    // clear denominators row by row; row scaling preserves rank
    std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(rows_),
                                          std::vector<mpz_class>(static_cast<std::size_t>(cols_)));
    for (int r = 0; r < rows_; ++r) {
        mpz_class lcm = 1;
        for (int c = 0; c < cols_; ++c) {
            mpz_class den = at(r, c).get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (int c = 0; c < cols_; ++c) {
            Rat scaled = at(r, c) * Rat(lcm);
            scaled.canonicalize();
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = scaled.get_num();
        }
    }

    int pivot_row = 0;
    mpz_class previous_pivot = 1;
    for (int col = 0; col < cols_ && pivot_row < rows_; ++col) {
        int pivot = -1;
        for (int r = pivot_row; r < rows_; ++r)
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(pivot_row)]);
        for (int r = pivot_row + 1; r < rows_; ++r) {
            for (int c = col + 1; c < cols_; ++c) {
                mpz_class value =
                    m[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(col)] *
                        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -
                    m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] *
                        m[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(c)];
                mpz_class quotient, remainder;
                mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), value.get_mpz_t(),
                            previous_pivot.get_mpz_t());
                if (remainder != 0)
                    throw std::logic_error("Mat::rank: fraction-free step produced a remainder");
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = quotient;
            }
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] = 0;
        }
        previous_pivot = m[static_cast<std::size_t>(pivot_row)][static_cast<std::size_t>(col)];
        ++pivot_row;
    }
    return pivot_row;
}

Mat Mat::kernel() const {
    // exact Gauss-Jordan to reduced row echelon form
    Mat rref = *this;
    std::vector<int> pivot_cols;
    int pivot_row = 0;
    for (int col = 0; col < cols_ && pivot_row < rows_; ++col) {
        int pivot = -1;
        for (int r = pivot_row; r < rows_; ++r)
            if (rref.at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int c = 0; c < cols_; ++c) std::swap(rref.at(pivot, c), rref.at(pivot_row, c));
        Rat inv = 1 / rref.at(pivot_row, col);
        for (int c = 0; c < cols_; ++c) rref.at(pivot_row, c) *= inv;
        for (int r = 0; r < rows_; ++r) {
            if (r == pivot_row || rref.at(r, col) == 0) continue;
            Rat factor = rref.at(r, col);
            for (int c = 0; c < cols_; ++c) rref.at(r, c) -= factor * rref.at(pivot_row, c);
        }
        pivot_cols.push_back(col);
        ++pivot_row;
    }

    std::vector<Vec> basis;
    std::size_t next_pivot = 0;
    for (int col = 0; col < cols_; ++col) {
        if (next_pivot < pivot_cols.size() && pivot_cols[next_pivot] == col) {
            ++next_pivot;
            continue;
        }
        Vec v(static_cast<std::size_t>(cols_), Rat(0));
        v[static_cast<std::size_t>(col)] = 1;
        for (std::size_t p = 0; p < pivot_cols.size(); ++p)
            v[static_cast<std::size_t>(pivot_cols[p])] = -rref.at(static_cast<int>(p), col);
        basis.push_back(std::move(v));
    }
    return Mat::from_columns(cols_, basis);
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rat sum(0);
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

Rat pair(const Vec& covector, const Vec& x) { return dot(covector, x); }

bool span_contained(const Mat& inner, const Mat& outer) {
    return outer.hstack(inner).rank() == outer.rank();
}

bool span_equal(const Mat& a, const Mat& b) {
    int ra = a.rank();
    int rb = b.rank();
    return ra == rb && a.hstack(b).rank() == ra;
}

}  // namespace flagmorph::linalg
