#include "brauer/supermatrix.hpp"

#include <stdexcept>

namespace brauer {

bool SuperMatrix::wellFormed() const {
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) {
            const AlgElem& x = at(i, j);
            if (x.isZero()) continue;
            if (!A_->isHomogeneous(x)) return false;
            if (A_->parity(x) != par_ + rowParity(i) + colParity(j)) return false;
        }
    return true;
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
    if (r_ != o.m_ || s_ != o.n_) throw std::invalid_argument("SuperMatrix: shape mismatch");
    SuperMatrix out(A_, m_, n_, o.r_, o.s_, par_ + o.par_);
    for (int i = 0; i < rows(); ++i)
        for (int k = 0; k < cols(); ++k) {
            const AlgElem& v = at(i, k);
            if (v.isZero()) continue;
            for (int j = 0; j < o.cols(); ++j) {
                const AlgElem& w = o.at(k, j);
                if (!w.isZero()) out.at(i, j) += A_->mul(v, w);
            }
        }
    return out;
}

SuperMatrix SuperMatrix::operator+(const SuperMatrix& o) const {
    if (m_ != o.m_ || n_ != o.n_ || r_ != o.r_ || s_ != o.s_)
        throw std::invalid_argument("SuperMatrix: shape mismatch");
    SuperMatrix out = *this;
    for (size_t k = 0; k < e_.size(); ++k) out.e_[k] += o.e_[k];
    return out;
}

SuperMatrix SuperMatrix::operator-() const {
    SuperMatrix out = *this;
    for (auto& x : out.e_) x = -x;
    return out;
}

SuperMatrix SuperMatrix::scaled(const Scalar& c) const {
    SuperMatrix out = *this;
    for (auto& x : out.e_) x = x * c;
    return out;
}

bool SuperMatrix::isZero() const {
    for (const auto& x : e_)
        if (!x.isZero()) return false;
    return true;
}

SuperMatrix SuperMatrix::supertranspose() const {
    SuperMatrix out(A_, r_, s_, m_, n_, par_);
    int sgn = par_.odd() ? -1 : 1;
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) {
            const AlgElem& x = at(i, j);
            if (x.isZero()) continue;
            bool rowOdd = rowParity(i).odd(), colOdd = colParity(j).odd();
            // blocks: 00 -> +, 10 -> +(-1)^{|X|}, 01 -> -(-1)^{|X|}, 11 -> +
            Scalar f(1);
            if (!rowOdd && colOdd) f = Scalar(-sgn); // X01 goes to the (odd,even) slot
            if (rowOdd && !colOdd) f = Scalar(sgn);  // X10
            out.at(j, i) = x * f;
        }
    return out;
}

SuperMatrix SuperMatrix::star() const {
    SuperMatrix out = *this;
    for (auto& x : out.e_) x = A_->star(x);
    return out;
}

SuperMatrix SuperMatrix::sharp() const { return star().supertranspose(); }

AlgElem SuperMatrix::str() const {
    AlgElem out;
    for (int i = 0; i < rows(); ++i) {
        AlgElem d = at(i, i);
        if (rowParity(i).odd() && !par_.odd()) d = -d;
        // odd declared parity: str = tr X00 + tr X11
        out += d;
    }
    return out;
}

SuperMatrix SuperMatrix::scaledLeft(const AlgElem& a) const {
    SuperMatrix out = *this;
    for (auto& x : out.e_) x = A_->mul(a, x);
    return out;
}

SuperMatrix SuperMatrix::inverseMatrix() const {
    if (rows() != cols() || m_ != r_ || n_ != s_)
        throw std::invalid_argument("inverseMatrix: not square");
    const int N = rows();
    // Augmented Gaussian elimination over the entry algebra.  Pivot entries
    // must be invertible; we find the inverse of a pivot by solving inside
    // the algebra via its regular representation.
    auto algInverse = [&](const AlgElem& a) {
        const int d = A_->dim();
        // Solve a * x = 1 in A via ground-field linear algebra.
        std::vector<std::vector<Scalar>> M(static_cast<size_t>(d),
                                           std::vector<Scalar>(static_cast<size_t>(d + 1)));
        for (int c = 0; c < d; ++c) {
            AlgElem ac = A_->mul(a, AlgElem::basis(c));
            for (const auto& [z, v] : ac.coeffs()) M[static_cast<size_t>(z)][static_cast<size_t>(c)] = v;
        }
        for (const auto& [z, v] : A_->unit().coeffs()) M[static_cast<size_t>(z)][static_cast<size_t>(d)] = v;
        // Gauss-Jordan
        int row = 0;
        std::vector<int> pivcol;
        for (int col = 0; col < d && row < d; ++col) {
            int piv = -1;
            for (int r = row; r < d; ++r)
                if (!M[static_cast<size_t>(r)][static_cast<size_t>(col)].isZero()) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(M[static_cast<size_t>(row)], M[static_cast<size_t>(piv)]);
            Scalar inv = Scalar(1) / M[static_cast<size_t>(row)][static_cast<size_t>(col)];
            for (int c = 0; c <= d; ++c) M[static_cast<size_t>(row)][static_cast<size_t>(c)] *= inv;
            for (int r = 0; r < d; ++r) {
                if (r == row) continue;
                Scalar f = M[static_cast<size_t>(r)][static_cast<size_t>(col)];
                if (f.isZero()) continue;
                for (int c = 0; c <= d; ++c)
                    M[static_cast<size_t>(r)][static_cast<size_t>(c)] -= f * M[static_cast<size_t>(row)][static_cast<size_t>(c)];
            }
            pivcol.push_back(col);
            ++row;
        }
        if (static_cast<int>(pivcol.size()) != d)
            throw std::domain_error("inverseMatrix: non-invertible pivot entry");
        AlgElem x;
        for (int r = 0; r < d; ++r)
            x.add(pivcol[static_cast<size_t>(r)], M[static_cast<size_t>(r)][static_cast<size_t>(d)]);
        return x;
    };

    std::vector<std::vector<AlgElem>> L(static_cast<size_t>(N), std::vector<AlgElem>(static_cast<size_t>(N)));
    std::vector<std::vector<AlgElem>> R(static_cast<size_t>(N), std::vector<AlgElem>(static_cast<size_t>(N)));
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) L[static_cast<size_t>(i)][static_cast<size_t>(j)] = at(i, j);
        R[static_cast<size_t>(i)][static_cast<size_t>(i)] = A_->unit();
    }
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int r = col; r < N; ++r)
            if (!L[static_cast<size_t>(r)][static_cast<size_t>(col)].isZero()) { piv = r; break; }
        if (piv < 0) throw std::domain_error("inverseMatrix: singular");
        std::swap(L[static_cast<size_t>(col)], L[static_cast<size_t>(piv)]);
        std::swap(R[static_cast<size_t>(col)], R[static_cast<size_t>(piv)]);
        AlgElem pinv = algInverse(L[static_cast<size_t>(col)][static_cast<size_t>(col)]);
        for (int c = 0; c < N; ++c) {
            L[static_cast<size_t>(col)][static_cast<size_t>(c)] = A_->mul(pinv, L[static_cast<size_t>(col)][static_cast<size_t>(c)]);
            R[static_cast<size_t>(col)][static_cast<size_t>(c)] = A_->mul(pinv, R[static_cast<size_t>(col)][static_cast<size_t>(c)]);
        }
        for (int r = 0; r < N; ++r) {
            if (r == col) continue;
            AlgElem f = L[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f.isZero()) continue;
            for (int c = 0; c < N; ++c) {
                L[static_cast<size_t>(r)][static_cast<size_t>(c)] -= A_->mul(f, L[static_cast<size_t>(col)][static_cast<size_t>(c)]);
                R[static_cast<size_t>(r)][static_cast<size_t>(c)] -= A_->mul(f, R[static_cast<size_t>(col)][static_cast<size_t>(c)]);
            }
        }
    }
    SuperMatrix out(A_, m_, n_, m_, n_, par_); // inverse of homogeneous is same parity
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) out.at(i, j) = R[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return out;
}

SuperMatrix opIso(const SuperMatrix& X, const AlgebraPtr& Aop) {
    SuperMatrix relabeled(Aop, X.rowsEven(), X.rowsOdd(), X.colsEven(), X.colsOdd(),
                          X.declaredParity());
    for (int i = 0; i < X.rows(); ++i)
        for (int j = 0; j < X.cols(); ++j) relabeled.at(i, j) = X.at(i, j);
    return relabeled.supertranspose();
}

} // namespace brauer
