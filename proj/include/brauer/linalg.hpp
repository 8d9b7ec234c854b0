#pragma once

#include "brauer/scalar.hpp"

#include <map>
#include <vector>

namespace brauer {

/// Dense matrix over exact scalars.  Row-major.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}

    int rows() const { return r_; }
    int cols() const { return c_; }
    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
        return m;
    }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(const Scalar& s) const;
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
    bool isZero() const {
        for (const auto& x : a_)
            if (!x.isZero()) return false;
        return true;
    }

private:
    int r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

/// Reduced row echelon form in place; returns pivot column indices.
/// Deterministic: pivots are the first nonzero entries scanning columns
/// left to right, rows top to bottom.
std::vector<int> rref(Mat& m);

int rank(Mat m);

/// Basis of the right nullspace {x : m x = 0}, one vector per free column,
/// in the canonical RREF parameterization.
std::vector<std::vector<Scalar>> nullspace(Mat m);

/// Inverse of a square matrix; throws std::domain_error when singular.
Mat inverse(Mat m);

/// Incremental exact rank computation for sparse row vectors.
class SparseRank {
public:
    /// Adds a row; returns true when it enlarged the row space.
    bool add(std::map<long, Scalar> row);
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    // Reduced rows keyed by leading index.
    std::map<long, std::map<long, Scalar>> rows_;
};

} // namespace brauer
