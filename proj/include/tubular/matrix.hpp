#pragma once
// Exact rational linear algebra: dense matrices over Q (GMP-backed),
// Gaussian elimination, kernel/solve/rank, and incremental row spaces.

#include <gmpxx.h>

#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tubular {

using Q = mpq_class;

inline std::string q_to_string(const Q& x) {
    Q c(x);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline Q q_parse(const std::string& s) {
    Q x(s);
    x.canonicalize();
    return x;
}

using Vec = std::vector<Q>;

inline bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_scale(const Q& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

struct Mat {
    int rows = 0, cols = 0;
    Vec a;  // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Q(0)) {}

    Q& at(int i, int j) { return a[size_t(i) * cols + j]; }
    const Q& at(int i, int j) const { return a[size_t(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Mat zero(int r, int c) { return Mat(r, c); }

    bool is_zero() const {
        for (const auto& x : a)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a;
    }

    Mat transpose() const {
        Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        assert(cols == o.rows);
        Mat r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const Q& x = at(i, k);
                if (x == 0) continue;
                for (int j = 0; j < o.cols; ++j) {
                    if (o.at(k, j) == 0) continue;
                    r.at(i, j) += x * o.at(k, j);
                }
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        assert(rows == o.rows && cols == o.cols);
        Mat r(rows, cols);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] + o.a[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        assert(rows == o.rows && cols == o.cols);
        Mat r(rows, cols);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
        return r;
    }

    Mat scaled(const Q& c) const {
        Mat r(rows, cols);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = c * a[i];
        return r;
    }

    Vec apply(const Vec& v) const {
        assert(int(v.size()) == cols);
        Vec r(rows, Q(0));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
        return r;
    }

    Q trace() const {
        assert(rows == cols);
        Q t(0);
        for (int i = 0; i < rows; ++i) t += at(i, i);
        return t;
    }
};

// In-place row reduction to RREF; returns pivot columns (one per pivot row).
inline std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int sel = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        Q inv = 1 / m.at(r, c);
        for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Q f = m.at(i, c);
            for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int rank(const Mat& m) {
    Mat c = m;
    return int(rref(c).size());
}

// Basis of the null space {v : M v = 0}, as column vectors.
inline std::vector<Vec> kernel_basis(const Mat& m) {
    Mat r = m;
    std::vector<int> piv = rref(r);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<Vec> out;
    for (int c = 0; c < m.cols; ++c) {
        if (is_piv[c]) continue;
        Vec v(m.cols, Q(0));
        v[c] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(int(i), c);
        out.push_back(std::move(v));
    }
    return out;
}

// Columns of the result form a kernel basis (cols(M) - rank(M) of them).
inline Mat kernel(const Mat& m) {
    auto basis = kernel_basis(m);
    Mat k(m.cols, int(basis.size()));
    for (int j = 0; j < int(basis.size()); ++j)
        for (int i = 0; i < m.cols; ++i) k.at(i, j) = basis[j][i];
    return k;
}

// One solution of A x = b, or nullopt when b is outside the column space.
inline std::optional<Vec> solve(const Mat& A, const Vec& b) {
    assert(int(b.size()) == A.rows);
    Mat aug(A.rows, A.cols + 1);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    std::vector<int> piv = rref(aug);
    for (int c : piv)
        if (c == A.cols) return std::nullopt;
    Vec x(A.cols, Q(0));
    for (size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(int(i), A.cols);
    return x;
}

inline std::optional<Mat> inverse(const Mat& m) {
    assert(m.rows == m.cols);
    int n = m.rows;
    Mat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<int> piv = rref(aug);
    if (int(piv.size()) != n || piv[n - 1] != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

// Incremental echelon row space. pivot_last=false picks the leftmost nonzero
// coordinate as pivot; pivot_last=true the rightmost (used for ideal
// reduction, where later columns are the longer paths to be eliminated).
class RowSpace {
public:
    explicit RowSpace(int width, bool pivot_last = false)
        : width_(width), pivot_last_(pivot_last) {}

    int width() const { return width_; }
    int dim() const { return int(rows_.size()); }

    // Reduce v by the stored rows (full reduction).
    Vec reduce(Vec v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            const Q& c = v[pivots_[i]];
            if (c == 0) continue;
            Q f = c;  // rows are monic at their pivot
            const Vec& r = rows_[i];
            for (int j = 0; j < width_; ++j)
                if (r[j] != 0) v[j] -= f * r[j];
        }
        return v;
    }

    // Insert v; returns true if it enlarged the space.
    bool insert(Vec v) {
        v = reduce(std::move(v));
        int p = pivot_of(v);
        if (p < 0) return false;
        Q inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        // keep existing rows fully reduced against the new one
        for (size_t i = 0; i < rows_.size(); ++i) {
            Q c = rows_[i][p];
            if (c == 0) continue;
            for (int j = 0; j < width_; ++j)
                if (v[j] != 0) rows_[i][j] -= c * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }

    bool contains(const Vec& v) const { return is_zero(reduce(v)); }

    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool is_pivot(int col) const {
        for (int p : pivots_)
            if (p == col) return true;
        return false;
    }

private:
    int pivot_of(const Vec& v) const {
        if (pivot_last_) {
            for (int j = width_ - 1; j >= 0; --j)
                if (v[j] != 0) return j;
        } else {
            for (int j = 0; j < width_; ++j)
                if (v[j] != 0) return j;
        }
        return -1;
    }

    int width_;
    bool pivot_last_;
    std::vector<Vec> rows_;
    std::vector<int> pivots_;
};

}  // namespace tubular
