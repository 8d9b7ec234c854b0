#pragma once

#include "brauer/oriented.hpp"

namespace brauer {

/// Object of the Pi-envelope: an oriented word with a parity shift.
struct PiObject {
    Word word;
    Parity shift;
    friend bool operator==(const PiObject& a, const PiObject& b) {
        return a.word == b.word && a.shift == b.shift;
    }
};

/// Morphism of the superadditive envelope Add(OB(A)_pi): a matrix of
/// shifted oriented morphisms.  entry(i, j) maps src[j] to tgt[i]; its
/// shifts are src[j].shift and tgt[i].shift.
class ShiftedMatrixMorphism {
public:
    ShiftedMatrixMorphism() = default;
    ShiftedMatrixMorphism(std::vector<PiObject> src, std::vector<PiObject> tgt);

    static ShiftedMatrixMorphism identity(const OrCategory& C, std::vector<PiObject> objs);

    const std::vector<PiObject>& src() const { return src_; }
    const std::vector<PiObject>& tgt() const { return tgt_; }
    OrMorphism& entry(int i, int j) { return e_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
    const OrMorphism& entry(int i, int j) const {
        return e_[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }

    /// Vertical composition in the Pi-envelope: f_s^u g_r^s = (f g)_r^u.
    ShiftedMatrixMorphism compose(const OrCategory& C, const ShiftedMatrixMorphism& g) const;
    /// Horizontal composition with the Pi-envelope signs
    /// f_r^s tensor g_u^v = (-1)^{r(|g|+u+v) + |f| v} (f tensor g).
    ShiftedMatrixMorphism tensor(const OrCategory& C, const ShiftedMatrixMorphism& g) const;

    ShiftedMatrixMorphism& operator+=(const ShiftedMatrixMorphism& o);
    ShiftedMatrixMorphism scaled(const Scalar& c) const;
    bool isZero() const;
    friend bool operator==(const ShiftedMatrixMorphism& a, const ShiftedMatrixMorphism& b) {
        return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.e_ == b.e_;
    }

    /// Sparse flattening (component index pair, diagram) -> coefficient,
    /// for exact rank computations of families of such morphisms.
    std::map<std::string, Scalar> flatten(const OrCategory& C) const;

private:
    std::vector<PiObject> src_, tgt_;
    std::vector<std::vector<OrMorphism>> e_;
};

/// Decorated unoriented Brauer diagram: a perfect matching of the r bottom
/// and s top endpoints with one token per strand at the jiggy spot
/// (through strands: bottom endpoint, cups: left endpoint, caps: right
/// endpoint).
struct UnDiagram {
    std::vector<int> match;
    std::vector<int> token;
    friend bool operator<(const UnDiagram& a, const UnDiagram& b) {
        if (a.match != b.match) return a.match < b.match;
        return a.token < b.token;
    }
    friend bool operator==(const UnDiagram& a, const UnDiagram& b) {
        return a.match == b.match && a.token == b.token;
    }
};

struct UnMorphism {
    int r = 0, s = 0;
    std::map<UnDiagram, Scalar> terms;

    bool isZero() const { return terms.empty(); }
    void add(const UnDiagram& d, const Scalar& c);
    UnMorphism& operator+=(const UnMorphism& o);
    UnMorphism& operator-=(const UnMorphism& o);
    UnMorphism operator*(const Scalar& c) const;
    UnMorphism operator-() const { return *this * Scalar(-1); }
    friend UnMorphism operator+(UnMorphism a, const UnMorphism& b) { return a += b; }
    friend UnMorphism operator-(UnMorphism a, const UnMorphism& b) { return a -= b; }
    friend bool operator==(const UnMorphism& a, const UnMorphism& b) {
        return a.r == b.r && a.s == b.s && a.terms == b.terms;
    }
    friend bool operator!=(const UnMorphism& a, const UnMorphism& b) { return !(a == b); }
};

/// The unoriented supercategory Brauer^sigma(A, inv; d).  Arithmetic is
/// performed through the orientation-expansion superfunctor into
/// Add(OB(A; d/2)_pi), whose generator images pin every sign; results are
/// decoded back against the images of the diagram basis.
class UnCategory {
public:
    UnCategory(AlgebraPtr A, Parity sigma, Scalar d);

    const AlgebraPtr& algebra() const { return A_; }
    Parity sigma() const { return sigma_; }
    const Scalar& d() const { return d_; }
    const OrCategory& oriented() const { return orCat_; }

    UnMorphism idMorphism(int n) const;
    UnMorphism cross() const;
    UnMorphism cap() const;
    UnMorphism cup() const;
    UnMorphism token(const AlgElem& a) const;

    UnMorphism compose(const UnMorphism& f, const UnMorphism& g) const;
    UnMorphism tensor(const UnMorphism& f, const UnMorphism& g) const;

    /// sigma per cup/cap plus the token parities; r is the bottom count.
    Parity parity(int r, const UnDiagram& d) const;

    std::vector<UnDiagram> enumerateBasis(int r, int s) const;

    /// Components of D(go^{tensor n}): orientation words with shift
    /// sigma * (number of down letters), in lexicographic order (u < d).
    std::vector<PiObject> objectComponents(int n) const;

    /// The superfunctor D applied to a morphism.
    ShiftedMatrixMorphism expand(const UnMorphism& f) const;
    ShiftedMatrixMorphism expandDiagram(int r, int s, const UnDiagram& d) const;

    /// Expresses a morphism of Add(OB_pi) in the images of the diagram
    /// basis; throws if it does not lie in their span (it always does, by
    /// the basis theorem).
    UnMorphism decode(const ShiftedMatrixMorphism& P, int r, int s) const;

    /// Token relabeling isomorphism onto the category over the opposite
    /// algebra: applies inv to all tokens.
    UnMorphism applyXi(const UnMorphism& f) const;

    Scalar categoricalTrace(const UnMorphism& f) const;

    std::string formatDiagram(int r, int s, const UnDiagram& d) const;
    std::string formatMorphism(const UnMorphism& f) const;

private:
    AlgebraPtr A_;
    Parity sigma_;
    Scalar d_;
    OrCategory orCat_; // target category at d/2
};

} // namespace brauer
