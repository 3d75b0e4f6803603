#include "homcert/matrix.hpp"

namespace homcert {

static void check_same_field(const Mat& a, const Mat& b) {
    require(a.field() == b.field(), "DimensionMismatch", "mixed moduli");
}

Mat operator*(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    require(a.cols() == b.rows(), "DimensionMismatch",
            "product " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    const int p = a.field().modulus();
    Mat c(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            int v = a.at(i, k);
            if (!v) continue;
            for (int j = 0; j < b.cols(); ++j)
                c.at(i, j) = (c.at(i, j) + v * b.at(k, j)) % p;
        }
    return c;
}

Mat operator+(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    require(a.rows() == b.rows() && a.cols() == b.cols(), "DimensionMismatch", "sum shape");
    Mat c(a.field(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.field().add(a.at(i, j), b.at(i, j));
    return c;
}

Mat operator-(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    require(a.rows() == b.rows() && a.cols() == b.cols(), "DimensionMismatch", "difference shape");
    Mat c(a.field(), a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c.at(i, j) = a.field().sub(a.at(i, j), b.at(i, j));
    return c;
}

Mat scale(const Mat& a, int c) {
    Mat r(a.field(), a.rows(), a.cols());
    int cc = a.field().reduce(c);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.field().mul(cc, a.at(i, j));
    return r;
}

Mat hstack(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    require(a.rows() == b.rows(), "DimensionMismatch", "hstack rows");
    Mat c(a.field(), a.rows(), a.cols() + b.cols());
    paste(c, a, 0, 0);
    paste(c, b, 0, a.cols());
    return c;
}

Mat vstack(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    require(a.cols() == b.cols(), "DimensionMismatch", "vstack cols");
    Mat c(a.field(), a.rows() + b.rows(), a.cols());
    paste(c, a, 0, 0);
    paste(c, b, a.rows(), 0);
    return c;
}

void paste(Mat& m, const Mat& block, int i0, int j0) {
    require(i0 + block.rows() <= m.rows() && j0 + block.cols() <= m.cols(),
            "DimensionMismatch", "paste out of range");
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j) m.at(i0 + i, j0 + j) = block.at(i, j);
}

Mat block_diag(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    Mat c(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    paste(c, a, 0, 0);
    paste(c, b, a.rows(), a.cols());
    return c;
}

Echelon rref(const Mat& m) {
    Echelon e{m, Mat::identity(m.field(), m.rows()), {}, 0};
    Mat& R = e.R;
    Mat& T = e.T;
    const PrimeField& f = m.field();
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (R.at(i, col)) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row) {
            for (int j = 0; j < R.cols(); ++j) std::swap(R.at(piv, j), R.at(row, j));
            for (int j = 0; j < T.cols(); ++j) std::swap(T.at(piv, j), T.at(row, j));
        }
        int iv = f.inv(R.at(row, col));
        if (iv != 1) {
            for (int j = 0; j < R.cols(); ++j) R.at(row, j) = f.mul(iv, R.at(row, j));
            for (int j = 0; j < T.cols(); ++j) T.at(row, j) = f.mul(iv, T.at(row, j));
        }
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row) continue;
            int v = R.at(i, col);
            if (!v) continue;
            for (int j = 0; j < R.cols(); ++j)
                R.at(i, j) = f.sub(R.at(i, j), f.mul(v, R.at(row, j)));
            for (int j = 0; j < T.cols(); ++j)
                T.at(i, j) = f.sub(T.at(i, j), f.mul(v, T.at(row, j)));
        }
        e.pivots.push_back(col);
        ++row;
    }
    e.rank = row;
    return e;
}

int rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
    Echelon e = rref(m);
    const PrimeField& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivots) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < m.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Mat K(f, m.cols(), static_cast<int>(free_cols.size()));
    for (size_t k = 0; k < free_cols.size(); ++k) {
        int fc = free_cols[k];
        K.at(fc, static_cast<int>(k)) = 1;
        for (size_t r = 0; r < e.pivots.size(); ++r)
            K.at(e.pivots[r], static_cast<int>(k)) = f.neg(e.R.at(static_cast<int>(r), fc));
    }
    return K;
}

Mat image_basis(const Mat& m) {
    Echelon e = rref(m);
    return m.select_cols(e.pivots);
}

std::optional<Mat> solve(const Mat& m, const Mat& rhs) {
    auto r = solve_full(m, rhs);
    if (!r) return std::nullopt;
    return r->particular;
}

std::optional<SolveResult> solve_full(const Mat& m, const Mat& rhs) {
    check_same_field(m, rhs);
    require(m.rows() == rhs.rows(), "DimensionMismatch", "solve rhs rows");
    Echelon e = rref(m);
    Mat y = e.T * rhs;  // R x = y
    // Consistency: rows of R beyond the rank must have zero rhs.
    for (int i = e.rank; i < y.rows(); ++i)
        for (int j = 0; j < y.cols(); ++j)
            if (y.at(i, j)) return std::nullopt;
    Mat x(m.field(), m.cols(), rhs.cols());
    for (int r = 0; r < e.rank; ++r)
        for (int j = 0; j < rhs.cols(); ++j) x.at(e.pivots[r], j) = y.at(r, j);
    return SolveResult{x, kernel_basis(m)};
}

Mat preimage_operator(const Mat& m) {
    Echelon e = rref(m);
    Mat G(m.field(), m.cols(), m.rows());
    for (int r = 0; r < e.rank; ++r)
        for (int j = 0; j < m.rows(); ++j) G.at(e.pivots[r], j) = e.T.at(r, j);
    return G;
}

bool spans_contain(const Mat& space, const Mat& sub) {
    if (sub.cols() == 0) return true;
    require(space.rows() == sub.rows(), "DimensionMismatch", "span containment");
    return rank(hstack(space, sub)) == rank(space);
}

bool same_span(const Mat& a, const Mat& b) {
    return spans_contain(a, b) && spans_contain(b, a);
}

Mat span_union(const Mat& a, const Mat& b) { return image_basis(hstack(a, b)); }

Mat coordinates_in(const Mat& basis, const Mat& v) {
    auto sol = solve(basis, v);
    require(sol.has_value(), "DimensionMismatch", "vector outside span");
    return *sol;
}

}  // namespace homcert
