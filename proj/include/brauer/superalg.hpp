#pragma once

#include "brauer/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace brauer {

/// Formal scalar combination of basis elements of a fixed superalgebra.
/// Zero coefficients are never stored, so equality is structural.
class AlgElem {
public:
    AlgElem() = default;

    static AlgElem basis(int b) {
        AlgElem e;
        e.c_[b] = Scalar(1);
        return e;
    }
    static AlgElem term(int b, Scalar coeff) {
        AlgElem e;
        if (!coeff.isZero()) e.c_[b] = std::move(coeff);
        return e;
    }

    const std::map<int, Scalar>& coeffs() const { return c_; }
    bool isZero() const { return c_.empty(); }

    Scalar coeff(int b) const {
        auto it = c_.find(b);
        return it == c_.end() ? Scalar() : it->second;
    }

    void add(int b, const Scalar& v) {
        if (v.isZero()) return;
        auto it = c_.find(b);
        if (it == c_.end()) {
            c_.emplace(b, v);
        } else {
            it->second += v;
            if (it->second.isZero()) c_.erase(it);
        }
    }

    AlgElem& operator+=(const AlgElem& o) {
        for (const auto& [b, v] : o.c_) add(b, v);
        return *this;
    }
    AlgElem& operator-=(const AlgElem& o) {
        for (const auto& [b, v] : o.c_) add(b, -v);
        return *this;
    }
    friend AlgElem operator+(AlgElem a, const AlgElem& b) { return a += b; }
    friend AlgElem operator-(AlgElem a, const AlgElem& b) { return a -= b; }

    AlgElem operator*(const Scalar& s) const {
        AlgElem r;
        if (s.isZero()) return r;
        for (const auto& [b, v] : c_) r.c_[b] = v * s;
        return r;
    }
    AlgElem operator-() const { return *this * Scalar(-1); }

    friend bool operator==(const AlgElem& a, const AlgElem& b) { return a.c_ == b.c_; }
    friend bool operator!=(const AlgElem& a, const AlgElem& b) { return !(a.c_ == b.c_); }
    friend bool operator<(const AlgElem& a, const AlgElem& b) { return a.c_ < b.c_; }

private:
    std::map<int, Scalar> c_;
};

class SuperAlgebra;
using AlgebraPtr = std::shared_ptr<const SuperAlgebra>;

/// Finite-basis associative superalgebra presented by structure constants,
/// with optional Frobenius form and anti-involution.  All data is exact:
/// scalars are rational, or Gaussian-rational when complexScalars() holds.
class SuperAlgebra {
public:
    SuperAlgebra(std::string name, std::vector<std::string> basisNames,
                 std::vector<Parity> parities, bool complexScalars);

    const std::string& name() const { return name_; }
    int dim() const { return static_cast<int>(names_.size()); }
    bool complexScalars() const { return complex_; }
    const std::vector<std::string>& basisNames() const { return names_; }
    const std::string& basisName(int b) const { return names_[b]; }
    Parity parity(int b) const { return par_[b]; }
    Parity parity(const AlgElem& a) const; // throws if not homogeneous
    bool isHomogeneous(const AlgElem& a) const;
    bool hasOddPart() const;
    int basisIndex(const std::string& nm) const; // -1 if unknown

    // Presentation setup (used by the catalog and derived constructions).
    void setProduct(int b, int c, AlgElem bc);
    void setUnit(AlgElem u) { unit_ = std::move(u); }
    void setFrobenius(std::vector<Scalar> tauOnBasis);
    void setInvolution(std::vector<AlgElem> starOnBasis);
    /// Validates associativity/unitality/parity additivity, and derives the
    /// dual basis and Nakayama automorphism when a Frobenius form is present.
    void finalize();

    const AlgElem& unit() const { return unit_; }
    const AlgElem& mulBasis(int b, int c) const { return mul_[b][static_cast<size_t>(c)]; }
    AlgElem mul(const AlgElem& a, const AlgElem& b) const;

    bool hasFrobenius() const { return static_cast<bool>(frob_); }
    bool hasInvolution() const { return static_cast<bool>(star_); }

    /// Frobenius functional tau.
    Scalar tau(const AlgElem& a) const;
    /// Anti-involution a -> a^star extended linearly.
    AlgElem star(const AlgElem& a) const;
    /// Nakayama automorphism (derived from tau).
    AlgElem nakayama(const AlgElem& a) const;
    /// a^inv = nakayama(a)^star, the involution entering the unoriented category.
    AlgElem inv(const AlgElem& a) const;

    /// Left dual basis b -> b^vee with tau(b^vee c) = delta_{bc}.
    const AlgElem& dualBasis(int b) const;

    /// Supertrace of right multiplication by a on the regular module.
    Scalar supertrace(const AlgElem& a) const;
    /// Superdimension dim A_0 - dim A_1 over the ground field.
    Scalar sdim() const;
    /// True when the supertrace functional vanishes identically.
    bool supertraceIsZero() const;

    std::string format(const AlgElem& a) const;
    AlgElem parseElem(const std::string& text) const;

private:
    std::string name_;
    std::vector<std::string> names_;
    std::vector<Parity> par_;
    bool complex_ = false;
    std::vector<std::vector<AlgElem>> mul_;
    AlgElem unit_;
    std::optional<std::vector<Scalar>> frob_;
    std::optional<std::vector<AlgElem>> star_;
    std::vector<AlgElem> dual_;
    std::vector<AlgElem> nak_;
    bool finalized_ = false;
};

/// Catalog names: R, C_real, C_real_id, H, Cl1R, Cl2R, Cl3R, Cl5R, Cl6R,
/// Cl7R, C_cplx, ClC, ClC_real, kx<n> (truncated polynomials k[x]/(x^n)).
AlgebraPtr makeAlgebra(const std::string& name);

/// Opposite superalgebra; basis names are reused verbatim.
AlgebraPtr oppositeAlgebra(const AlgebraPtr& A);

/// Scalar extension Q -> Q(i); same basis, tau extended linearly.
AlgebraPtr complexifyAlgebra(const AlgebraPtr& A);

/// Mat_{m|n}(A) with basis E_{rs} b ordered (r, s, b); Frobenius form
/// tau_A(str X) when A is Frobenius.
AlgebraPtr matrixAlgebra(const AlgebraPtr& A, int m, int n);

/// Block parity of a row/column index of Mat_{m|n}: 0 for the first m, 1 after.
inline Parity blockParity(int idx, int m) { return Parity(idx < m ? 0 : 1); }

struct EmbeddingReport {
    std::string name;
    bool homomorphism = false;   // preserves products and unit on all basis pairs
    bool parityPreserving = false;
    bool spanning = false;       // image + i*image spans the codomain
    bool ok() const { return homomorphism && parityPreserving && spanning; }
};

/// Verifies one of the catalog embeddings of central real division
/// superalgebras into complex (matrix) superalgebras.
/// Names: R_to_C, H_to_Mat2C, Cl1_to_ClC, Cl2_to_Mat11C, Cl3_to_Mat2ClC,
///        Cl5_to_Mat2ClC, Cl6_to_Mat11C, Cl7_to_ClC.
EmbeddingReport checkEmbedding(const std::string& name);

std::vector<std::string> allEmbeddingNames();

} // namespace brauer
