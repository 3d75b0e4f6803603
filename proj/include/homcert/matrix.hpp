#pragma once

#include <optional>
#include <vector>

#include "homcert/fp.hpp"

namespace homcert {

// Dense matrix over F_p, row-major. Vectors are columns throughout the
// library; a map is applied as y = M * x.
class Mat {
public:
    Mat() : field_(2), rows_(0), cols_(0) {}
    Mat(PrimeField f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * cols, 0) {
        require(rows >= 0 && cols >= 0, "DimensionMismatch", "negative shape");
    }
    Mat(PrimeField f, int rows, int cols, std::vector<int> entries)
        : field_(f), rows_(rows), cols_(cols), a_(std::move(entries)) {
        require(a_.size() == static_cast<size_t>(rows) * cols,
                "DimensionMismatch", "entry count does not match shape");
        for (auto& v : a_) v = field_.reduce(v);
    }

    static Mat identity(PrimeField f, int n) {
        Mat m(f, n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
    static Mat col_vector(PrimeField f, std::vector<int> entries) {
        int n = static_cast<int>(entries.size());
        return Mat(f, n, 1, std::move(entries));
    }

    const PrimeField& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty_shape() const { return rows_ == 0 || cols_ == 0; }

    int& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    int at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const std::vector<int>& entries() const { return a_; }

    bool operator==(const Mat& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (int v : a_)
            if (v) return false;
        return true;
    }

    Mat transpose() const {
        Mat t(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Mat col(int j) const {
        Mat c(field_, rows_, 1);
        for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
        return c;
    }
    std::vector<int> col_vec(int j) const {
        std::vector<int> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    // Columns selected by index list, in the given order.
    Mat select_cols(const std::vector<int>& idx) const {
        Mat m(field_, rows_, static_cast<int>(idx.size()));
        for (int j = 0; j < m.cols(); ++j)
            for (int i = 0; i < rows_; ++i) m.at(i, j) = at(i, idx[j]);
        return m;
    }
    Mat select_rows(const std::vector<int>& idx) const {
        Mat m(field_, static_cast<int>(idx.size()), cols_);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < cols_; ++j) m.at(i, j) = at(idx[i], j);
        return m;
    }

private:
    PrimeField field_;
    int rows_, cols_;
    std::vector<int> a_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat scale(const Mat& a, int c);

// [a | b] side by side, and a over b.
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);

// Writes block into m with top-left corner (i0, j0).
void paste(Mat& m, const Mat& block, int i0, int j0);

// Block-diagonal sum.
Mat block_diag(const Mat& a, const Mat& b);

// Row echelon data from deterministic Gauss-Jordan elimination with
// leftmost-nonzero pivoting. R = T * input with T invertible.
struct Echelon {
    Mat R;                    // reduced row echelon form
    Mat T;                    // accumulated row transform
    std::vector<int> pivots;  // pivot column per pivot row
    int rank = 0;
};

Echelon rref(const Mat& m);

int rank(const Mat& m);

// Basis of { x : m x = 0 }, as matrix columns. Deterministic: free variables
// in increasing column order, each set to 1 with the others 0.
Mat kernel_basis(const Mat& m);

// Basis of the column space, as matrix columns (the pivot columns of m).
Mat image_basis(const Mat& m);

// One solution of m x = rhs (multiple right-hand sides allowed columnwise)
// with all free variables set to zero, or nullopt if inconsistent.
std::optional<Mat> solve(const Mat& m, const Mat& rhs);

struct SolveResult {
    Mat particular;  // free variables zero
    Mat kernel;      // kernel basis columns
};
std::optional<SolveResult> solve_full(const Mat& m, const Mat& rhs);

// Linear operator G with m * (G * x) = x for every x in the column space of
// m; G x is the canonical (free-variables-zero) preimage. Linearity of the
// preimage choice is what keeps downstream support-closure monotone.
Mat preimage_operator(const Mat& m);

// True iff every column of sub lies in the column space of space.
bool spans_contain(const Mat& space, const Mat& sub);

// True iff the two column spaces are equal.
bool same_span(const Mat& a, const Mat& b);

// Basis (as columns) of span(a) + span(b).
Mat span_union(const Mat& a, const Mat& b);

// Coordinates of each column of v in the basis given by the columns of basis;
// fails if some column is outside the span.
Mat coordinates_in(const Mat& basis, const Mat& v);

}  // namespace homcert
