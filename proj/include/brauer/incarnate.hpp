#pragma once

#include "brauer/linalg.hpp"
#include "brauer/oriented.hpp"

#include <functional>

namespace brauer {

/// Ground-field data of the supermodule V = A^{m|n}: basis e_t b ordered
/// t-major then algebra-basis order, with parity p(t) + |b|.
struct GroundModule {
    AlgebraPtr A;
    int m = 0, n = 0;

    int dimA() const { return A->dim(); }
    int dim() const { return (m + n) * A->dim(); }
    int index(int t, int b) const { return t * A->dim() + b; }
    int frame(int idx) const { return idx / A->dim(); }
    int alg(int idx) const { return idx % A->dim(); }
    Parity parity(int idx) const {
        return blockParity(frame(idx), m) + A->parity(alg(idx));
    }
};

/// Sparse linear map between tensor-power spaces, stored column-wise.
struct LinearMap {
    long rows = 0, cols = 0;
    std::vector<std::map<long, Scalar>> col;

    LinearMap() = default;
    LinearMap(long r, long c) : rows(r), cols(c), col(static_cast<size_t>(c)) {}
    static LinearMap identity(long n) {
        LinearMap m(n, n);
        for (long i = 0; i < n; ++i) m.col[static_cast<size_t>(i)][i] = Scalar(1);
        return m;
    }
    void add(long r, long c, const Scalar& v) {
        if (v.isZero()) return;
        auto& column = col[static_cast<size_t>(c)];
        auto it = column.find(r);
        if (it == column.end()) column.emplace(r, v);
        else {
            it->second += v;
            if (it->second.isZero()) column.erase(it);
        }
    }
    Scalar at(long r, long c) const {
        auto it = col[static_cast<size_t>(c)].find(r);
        return it == col[static_cast<size_t>(c)].end() ? Scalar() : it->second;
    }
    LinearMap operator*(const LinearMap& o) const;   // this after o
    LinearMap operator+(const LinearMap& o) const;
    LinearMap operator-(const LinearMap& o) const;
    LinearMap scaled(const Scalar& s) const;
    friend bool operator==(const LinearMap& a, const LinearMap& b) {
        return a.rows == b.rows && a.cols == b.cols && a.col == b.col;
    }
    friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }
    bool isZero() const {
        for (const auto& c : col)
            if (!c.empty()) return false;
        return true;
    }
    /// Flattens to (row * cols + col) keyed sparse coordinates.
    std::map<long, Scalar> flatten() const;
};

/// Mixed tensor power of V and V*; factors listed left to right.
struct TensorSpace {
    GroundModule V;
    std::vector<bool> dual;

    long dim() const {
        long d = 1;
        for (size_t k = 0; k < dual.size(); ++k) d *= V.dim();
        return d;
    }
    int len() const { return static_cast<int>(dual.size()); }
    long stride(int i) const {
        long s = 1;
        for (int k = i + 1; k < len(); ++k) s *= V.dim();
        return s;
    }
    int digit(long idx, int i) const { return static_cast<int>((idx / stride(i)) % V.dim()); }
    Parity parity(long idx) const {
        Parity p;
        for (int i = 0; i < len(); ++i) p += V.parity(digit(idx, i));
        return p;
    }
    Parity parityPrefix(long idx, int i) const {
        Parity p;
        for (int k = 0; k < i; ++k) p += V.parity(digit(idx, k));
        return p;
    }
};

/// Oriented incarnation superfunctor into gl(m|n, A^op)-supermodules,
/// evaluated as explicit ground-field matrices.  Tokens are written in the
/// user algebra; the opposite-algebra relabeling is internal.
class OrientedEvaluator {
public:
    OrientedEvaluator(AlgebraPtr userAlgebra, Scalar d, int m, int n);

    const GroundModule& module() const { return V_; }
    TensorSpace space(const Word& w) const;

    LinearMap eval(const OrMorphism& f) const;
    LinearMap evalDiagram(const Word& src, const Word& tgt, const OrDiagram& d) const;

    /// Ground matrices of the Lie superalgebra gl(m|n, A^op) acting on a
    /// mixed tensor word, with the dual action on V* factors and
    /// Leibniz-Koszul signs across factors; used by the equivariant solver.
    struct LieElement {
        LinearMap onModule; // action on V
        Parity par;
    };
    std::vector<LieElement> glBasis() const;
    LinearMap actOnWord(const LieElement& X, const Word& w) const;

private:
    AlgebraPtr userA_;
    AlgebraPtr B_; // opposite algebra: the coefficient side the functor actually acts through
    OrCategory cat_;
    GroundModule V_;
    Scalar d_;
    int m_, n_;
};

/// Ground-field data of a catalog superhermitian form needed to evaluate
/// the unoriented incarnation functor.
struct GroundForm {
    GroundModule V;
    Parity sigma;
    int nu = 1;
    Mat gram;                        // Phi on the ground basis
    std::vector<std::vector<Scalar>> dualVec; // left dual ground basis wrt Phi
};

/// Computes the left dual basis v -> v^vee with Phi(v^vee, w) = delta_{vw}.
std::vector<std::vector<Scalar>> formDualBasis(const Mat& gram);

class UnorientedEvaluator {
public:
    UnorientedEvaluator(AlgebraPtr algebra, GroundForm form);

    const GroundModule& module() const { return form_.V; }
    TensorSpace space(int len) const;

    /// Evaluates one decorated Brauer diagram (given r, s and the layers of
    /// its canonical factorization are recomputed internally).
    LinearMap evalDiagram(int r, int s, const std::vector<int>& match,
                          const std::vector<int>& token) const;

    LinearMap actOnPower(const LinearMap& onModule, Parity parX, int len) const;
    LinearMap groupActOnPower(const LinearMap& g, int len) const;

private:
    AlgebraPtr A_;
    GroundForm form_;
};

} // namespace brauer
