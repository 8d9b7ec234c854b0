#pragma once

#include "brauer/superalg.hpp"

namespace brauer {

/// Supermatrix of block shape (m|n) x (r|s) with AlgElem entries and a
/// declared parity.  Entry (i,j) must be homogeneous of parity
/// |X| + p(i) + p(j), where p is the block parity function.
class SuperMatrix {
public:
    SuperMatrix() = default;
    SuperMatrix(AlgebraPtr A, int m, int n, int r, int s, Parity par)
        : A_(std::move(A)), m_(m), n_(n), r_(r), s_(s), par_(par),
          e_(static_cast<size_t>(m + n) * (r + s)) {}

    static SuperMatrix identity(const AlgebraPtr& A, int m, int n) {
        SuperMatrix X(A, m, n, m, n, Even);
        for (int i = 0; i < m + n; ++i) X.at(i, i) = A->unit();
        return X;
    }

    const AlgebraPtr& algebra() const { return A_; }
    int rowsEven() const { return m_; }
    int rowsOdd() const { return n_; }
    int colsEven() const { return r_; }
    int colsOdd() const { return s_; }
    int rows() const { return m_ + n_; }
    int cols() const { return r_ + s_; }
    Parity declaredParity() const { return par_; }
    Parity rowParity(int i) const { return blockParity(i, m_); }
    Parity colParity(int j) const { return blockParity(j, r_); }

    AlgElem& at(int i, int j) { return e_[static_cast<size_t>(i) * cols() + j]; }
    const AlgElem& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols() + j]; }

    /// Entry parities consistent with the declared parity.
    bool wellFormed() const;

    SuperMatrix operator*(const SuperMatrix& o) const;
    SuperMatrix operator+(const SuperMatrix& o) const;
    SuperMatrix operator-() const;
    SuperMatrix scaled(const Scalar& c) const;
    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.r_ == b.r_ && a.s_ == b.s_ && a.e_ == b.e_;
    }
    friend bool operator!=(const SuperMatrix& a, const SuperMatrix& b) { return !(a == b); }
    bool isZero() const;

    /// Four-block sign rule of the supertranspose.
    SuperMatrix supertranspose() const;
    /// Entrywise anti-involution (requires the algebra to carry one).
    SuperMatrix star() const;
    /// X^sharp = (X^star)^st.
    SuperMatrix sharp() const;
    /// str X = tr X00 - (-1)^{|X|} tr X11 as an algebra element.
    AlgElem str() const;

    /// Left/right multiply every entry by a fixed algebra element.
    SuperMatrix scaledLeft(const AlgElem& a) const;

    /// Gaussian inverse over the (possibly noncommutative) entry algebra.
    /// Requires pivots invertible in A; throws otherwise.  Intended for the
    /// catalog Gram matrices, whose entries are units.
    SuperMatrix inverseMatrix() const;

private:
    AlgebraPtr A_;
    int m_ = 0, n_ = 0, r_ = 0, s_ = 0;
    Parity par_;
    std::vector<AlgElem> e_;
};

/// The isomorphism Mat_{m|n}(A)^op -> Mat_{m|n}(A^op), X -> X_op^st:
/// relabels entries into the opposite algebra (same basis indices) and
/// supertransposes.  Satisfies opIso(XY) = (-1)^{|X||Y|} opIso(Y) opIso(X).
SuperMatrix opIso(const SuperMatrix& X, const AlgebraPtr& Aop);

} // namespace brauer
