#pragma once

#include "brauer/superalg.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace brauer {

enum class Dir : uint8_t { Up, Down };
using Word = std::vector<Dir>;

Word parseWord(const std::string& s); // "ud..." -> word
std::string formatWord(const Word& w);

/// Token-decorated matching between the endpoints of two object words.
/// Endpoints are numbered 0..r-1 along the bottom and r..r+s-1 along the
/// top, left to right.  Exactly one token (an algebra basis index) rides
/// each strand, at its canonical spot: a through strand near its bottom
/// endpoint, a cup near its left (top) endpoint, a cap near its right
/// (bottom) endpoint.
struct OrDiagram {
    std::vector<int> match;  // involution on endpoints
    std::vector<int> token;  // spot endpoint -> basis index, -1 off-spot

    friend bool operator<(const OrDiagram& a, const OrDiagram& b) {
        if (a.match != b.match) return a.match < b.match;
        return a.token < b.token;
    }
    friend bool operator==(const OrDiagram& a, const OrDiagram& b) {
        return a.match == b.match && a.token == b.token;
    }
};

/// Formal scalar combination of normal-form diagrams sharing source and target.
struct OrMorphism {
    Word src, tgt;
    std::map<OrDiagram, Scalar> terms;

    bool isZero() const { return terms.empty(); }
    void add(const OrDiagram& d, const Scalar& c);
    OrMorphism& operator+=(const OrMorphism& o);
    OrMorphism& operator-=(const OrMorphism& o);
    OrMorphism operator*(const Scalar& c) const;
    OrMorphism operator-() const { return *this * Scalar(-1); }
    friend OrMorphism operator+(OrMorphism a, const OrMorphism& b) { return a += b; }
    friend OrMorphism operator-(OrMorphism a, const OrMorphism& b) { return a -= b; }
    friend bool operator==(const OrMorphism& a, const OrMorphism& b) {
        return a.src == b.src && a.tgt == b.tgt && a.terms == b.terms;
    }
    friend bool operator!=(const OrMorphism& a, const OrMorphism& b) { return !(a == b); }
};

/// Elementary layer of a diagram: a single generator tensored with
/// identities.  pos is the leftmost strand position the generator touches,
/// in the frontier word current when the layer is applied (reading bottom
/// to top).
struct Layer {
    enum Kind : uint8_t { Cross, Cap, Cup, Tok } kind;
    int pos;
    int token = -1;      // basis index for Tok
    Dir dirA = Dir::Up;  // orientation data at the layer (oriented diagrams)
    Dir dirB = Dir::Up;
    int endA = -1;       // original endpoint ids the layer touches
    int endB = -1;
};

/// Deterministic generator-layer factorization of a decorated matching:
/// bottom tokens (rightmost lowest), caps brought together with crossings,
/// permutation crossings, cups, top tokens.  Orientation-agnostic; dirs
/// are left defaulted and endpoint ids recorded instead.
std::vector<Layer> factorizeMatching(int r, int s, const std::vector<int>& match,
                                     const std::vector<int>& token,
                                     const std::function<bool(int)>& skipToken);

/// The oriented Frobenius Brauer supercategory OB(A; d).
class OrCategory {
public:
    OrCategory(AlgebraPtr A, Scalar d);

    const AlgebraPtr& algebra() const { return A_; }
    const Scalar& d() const { return d_; }

    // Generators (already in normal form).
    OrMorphism idMorphism(const Word& w) const;
    OrMorphism cross(Dir a, Dir b) const;     // (a,b) -> (b,a)
    OrMorphism capL() const;                  // down tensor up -> unit
    OrMorphism capR() const;                  // up tensor down -> unit
    OrMorphism cupL() const;                  // unit -> up tensor down
    OrMorphism cupR() const;                  // unit -> down tensor up
    OrMorphism token(const AlgElem& a, Dir dir) const;

    OrMorphism compose(const OrMorphism& f, const OrMorphism& g) const; // f after g
    OrMorphism tensor(const OrMorphism& f, const OrMorphism& g) const;  // f left of g

    Parity parity(const OrDiagram& d) const;
    bool isHomogeneous(const OrMorphism& f) const;

    /// All decorated (X,Y)-matchings; empty when the endpoint sets are unbalanced.
    std::vector<OrDiagram> enumerateBasis(const Word& X, const Word& Y) const;

    /// Scalar of the right closure of an endomorphism.
    Scalar categoricalTrace(const OrMorphism& f) const;

    /// Deterministic generator-layer factorization of a normal-form diagram:
    /// bottom tokens (rightmost lowest), caps, permutation crossings, cups,
    /// top tokens.  Recomposing the layers yields the diagram with
    /// coefficient one.
    std::vector<Layer> factorize(const Word& src, const Word& tgt, const OrDiagram& dg) const;

    std::string formatDiagram(const Word& src, const Word& tgt, const OrDiagram& dg) const;
    std::string formatMorphism(const OrMorphism& f) const;

private:
    AlgebraPtr A_;
    Scalar d_;
};

/// Canonical token spot of the strand through endpoint e (r = bottom count).
int strandSpot(const std::vector<int>& match, int r, int e);

} // namespace brauer
