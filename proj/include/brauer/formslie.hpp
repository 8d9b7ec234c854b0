#pragma once

#include "brauer/incarnate.hpp"
#include "brauer/supermatrix.hpp"
#include "brauer/unoriented.hpp"

namespace brauer {

/// Catalogued superhermitian form phi(v, w) = v^sharp M w on A^{m|n},
/// together with its scalar shadow Phi = tau . phi.
struct FormSpec {
    std::string name;
    AlgebraPtr algebra;
    int m = 0, n = 0;
    int nu = 1;
    Parity sigma;
    SuperMatrix gram; // M

    /// Specialization parameter of the matching diagram category.
    Scalar categoryD() const { return Scalar(nu) * Scalar(m - n); }
};

/// Parses and builds a catalog form.  Names:
///   osp(p,q|2n)        over (R, id)
///   u(p,q|r,s)         over (C, star)
///   osp*(n|p,q)        over (H, star)
///   uq(p,q)            over (Cl(C) as a real algebra, star)
///   periplectic(m,nu)  over (R, id), odd form
///   osp_C(m|2n)        over (C, id), complex scalars
FormSpec catalogForm(const std::string& name);

std::vector<std::string> catalogFormExamples();

/// Ground-field data (scalar Gram and dual basis) of Phi = tau . phi.
GroundForm groundForm(const FormSpec& F);

/// The signature matrix S = diag(I_m, -I_n).
SuperMatrix signatureMatrix(const AlgebraPtr& A, int m, int n);

/// Adjoint with respect to the form: X -> (M^sharp S)^{-1} X^sharp M^sharp S.
SuperMatrix dagger(const SuperMatrix& X, const FormSpec& F);

/// Checks the superhermitian criterion M^sharp = nu (-1)^{|M|} M S.
bool dropCriterion(const FormSpec& F);

struct LieBasis {
    std::vector<SuperMatrix> elements;
    std::vector<Parity> parities;
    int dimEven = 0, dimOdd = 0;
};

/// Exact basis of g(phi) = {X : X^dagger = -X}, solved over the rationals.
LieBasis lieBasis(const FormSpec& F);

/// One representative per non-identity connected component of G_rd(phi).
/// Reflections for the O(p,q) factors; empty for connected groups.
std::vector<SuperMatrix> groupComponents(const FormSpec& F);

/// Ground matrix of the action v -> X v on A^{m|n}.
LinearMap groundAction(const FormSpec& F, const SuperMatrix& X);

struct HomBasis {
    long srcDim = 0, tgtDim = 0;
    std::vector<LinearMap> even, odd;
    int dim() const { return static_cast<int>(even.size() + odd.size()); }
};

/// Exact basis of Hom_{G(Phi)}(V^{tensor r}, V^{tensor s}): super-commutation
/// with a Lie basis of g(phi) plus plain commutation with the group
/// component representatives.
HomBasis equivariantHoms(const FormSpec& F, int r, int s);

/// Oriented analogue for gl(m|n, A^op) acting on mixed words of V and V*.
HomBasis glEquivariantHoms(const AlgebraPtr& A, int m, int n, const Word& src, const Word& tgt);

struct SpanReport {
    long rank = 0;
    long dim = 0;
    long kernelDim = 0;
    bool ok = false; // rank == dim
};

/// Fullness check: rank of the functor images of the diagram basis versus
/// the dimension of the equivariant hom space, both computed independently.
SpanReport spanningCheck(const UnCategory& U, const FormSpec& F, int r, int s);
SpanReport spanningCheckOriented(const OrCategory& C, int m, int n, const Word& src,
                                 const Word& tgt);

struct ButteReport {
    bool hypothesis = false;   // 2m + 2n >= r + s
    bool deltaPairing = false; // F(f)(v_g) = +-delta on Hom(go^{r+s}, 1)
    bool independent = false;  // functor images of the (r, s) basis
    long basisCount = 0;
    long rank = 0;
};

/// Test vector v_f of a closed decorated matching (s = 0): standard frame
/// vectors at right endpoints and form-dual vectors at left endpoints.
std::map<long, Scalar> butteVectors(const FormSpec& F, const GroundForm& g, int r,
                                    const UnDiagram& f);

/// Test-vector pairing and independence of the basis images.
ButteReport butteCheck(const UnCategory& U, const FormSpec& F, int r, int s);

struct PhiJReport {
    bool boar = false;
    bool rabbit = false;
    bool supersymmetric = false; // phi^j is (-nu, id)-supersymmetric
    bool nondegenerate = false;
    bool house = false;
    bool ok() const { return boar && rabbit && supersymmetric && nondegenerate && house; }
};

/// Quaternionic phi = phi^1 + j phi^j decomposition identities.
PhiJReport phiJIdentities(const FormSpec& F);

/// Invariant-count oracle for the complexified unitary case: the dimension
/// of Hom_{gl(m,C)}((V + V*)^{tensor r}, (V + V*)^{tensor s}) counted by
/// classical GL invariant theory (valid for balanced degree at most m).
long unitaryWeightOracle(int m, int r, int s);

} // namespace brauer
