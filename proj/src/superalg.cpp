#include "brauer/superalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace brauer {

SuperAlgebra::SuperAlgebra(std::string name, std::vector<std::string> basisNames,
                           std::vector<Parity> parities, bool complexScalars)
    : name_(std::move(name)), names_(std::move(basisNames)), par_(std::move(parities)),
      complex_(complexScalars) {
    if (names_.size() != par_.size()) throw std::invalid_argument("basis/parity size mismatch");
    mul_.assign(names_.size(), std::vector<AlgElem>(names_.size()));
}

Parity SuperAlgebra::parity(const AlgElem& a) const {
    if (a.isZero()) return Even;
    Parity p = par_[a.coeffs().begin()->first];
    for (const auto& [b, v] : a.coeffs()) {
        (void)v;
        if (par_[b] != p) throw std::invalid_argument("element is not homogeneous");
    }
    return p;
}

bool SuperAlgebra::isHomogeneous(const AlgElem& a) const {
    if (a.isZero()) return true;
    Parity p = par_[a.coeffs().begin()->first];
    for (const auto& [b, v] : a.coeffs()) {
        (void)v;
        if (par_[b] != p) return false;
    }
    return true;
}

bool SuperAlgebra::hasOddPart() const {
    for (Parity p : par_)
        if (p.odd()) return true;
    return false;
}

int SuperAlgebra::basisIndex(const std::string& nm) const {
    for (size_t k = 0; k < names_.size(); ++k)
        if (names_[k] == nm) return static_cast<int>(k);
    return -1;
}

void SuperAlgebra::setProduct(int b, int c, AlgElem bc) {
    mul_[static_cast<size_t>(b)][static_cast<size_t>(c)] = std::move(bc);
}

void SuperAlgebra::setFrobenius(std::vector<Scalar> tauOnBasis) {
    if (tauOnBasis.size() != names_.size()) throw std::invalid_argument("tau size mismatch");
    frob_ = std::move(tauOnBasis);
}

void SuperAlgebra::setInvolution(std::vector<AlgElem> starOnBasis) {
    if (starOnBasis.size() != names_.size()) throw std::invalid_argument("star size mismatch");
    star_ = std::move(starOnBasis);
}

AlgElem SuperAlgebra::mul(const AlgElem& a, const AlgElem& b) const {
    AlgElem out;
    for (const auto& [x, vx] : a.coeffs())
        for (const auto& [y, vy] : b.coeffs()) {
            Scalar c = vx * vy;
            for (const auto& [z, vz] : mulBasis(x, y).coeffs()) out.add(z, c * vz);
        }
    return out;
}

Scalar SuperAlgebra::tau(const AlgElem& a) const {
    if (!frob_) throw std::logic_error(name_ + ": no Frobenius form");
    Scalar out;
    for (const auto& [b, v] : a.coeffs()) out += v * (*frob_)[static_cast<size_t>(b)];
    return out;
}

AlgElem SuperAlgebra::star(const AlgElem& a) const {
    if (!star_) throw std::logic_error(name_ + ": no involution");
    AlgElem out;
    for (const auto& [b, v] : a.coeffs()) out += (*star_)[static_cast<size_t>(b)] * v;
    return out;
}

AlgElem SuperAlgebra::nakayama(const AlgElem& a) const {
    if (nak_.empty()) throw std::logic_error(name_ + ": no Nakayama (needs Frobenius form)");
    AlgElem out;
    for (const auto& [b, v] : a.coeffs()) out += nak_[static_cast<size_t>(b)] * v;
    return out;
}

AlgElem SuperAlgebra::inv(const AlgElem& a) const { return star(nakayama(a)); }

const AlgElem& SuperAlgebra::dualBasis(int b) const {
    if (dual_.empty()) throw std::logic_error(name_ + ": no dual basis (needs Frobenius form)");
    return dual_[static_cast<size_t>(b)];
}

Scalar SuperAlgebra::supertrace(const AlgElem& a) const {
    // str_A(a) = sum_b (-1)^{|b|} (coefficient of b in b*a); no Frobenius needed.
    Scalar out;
    for (int b = 0; b < dim(); ++b) {
        AlgElem ba = mul(AlgElem::basis(b), a);
        Scalar c = ba.coeff(b);
        if (par_[static_cast<size_t>(b)].odd()) c = -c;
        out += c;
    }
    return out;
}

Scalar SuperAlgebra::sdim() const {
    long s = 0;
    for (Parity p : par_) s += p.odd() ? -1 : 1;
    return Scalar(s);
}

bool SuperAlgebra::supertraceIsZero() const {
    for (int b = 0; b < dim(); ++b)
        if (!supertrace(AlgElem::basis(b)).isZero()) return false;
    return true;
}

void SuperAlgebra::finalize() {
    const int n = dim();
    // Parity additivity of the structure constants.
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
            Parity want = par_[b] + par_[c];
            for (const auto& [z, v] : mulBasis(b, c).coeffs()) {
                (void)v;
                if (par_[z] != want)
                    throw std::logic_error(name_ + ": structure constants not parity-additive");
            }
        }
    // Unitality.
    for (int b = 0; b < n; ++b) {
        AlgElem e = AlgElem::basis(b);
        if (mul(unit_, e) != e || mul(e, unit_) != e)
            throw std::logic_error(name_ + ": unit fails");
    }
    // Associativity on basis triples.
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                AlgElem l = mul(mulBasis(a, b), AlgElem::basis(c));
                AlgElem r = mul(AlgElem::basis(a), mulBasis(b, c));
                if (l != r) throw std::logic_error(name_ + ": multiplication not associative");
            }
    if (star_) {
        // star^2 = id and (ab)^star = (-1)^{|a||b|} b^star a^star.
        for (int b = 0; b < n; ++b) {
            if (star(star(AlgElem::basis(b))) != AlgElem::basis(b))
                throw std::logic_error(name_ + ": involution not involutive");
            if (parity(star(AlgElem::basis(b))) != par_[b])
                throw std::logic_error(name_ + ": involution not parity-preserving");
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                AlgElem lhs = star(mulBasis(a, b));
                AlgElem rhs = mul(star(AlgElem::basis(b)), star(AlgElem::basis(a)));
                if (koszul(par_[a], par_[b]) < 0) rhs = -rhs;
                if (lhs != rhs) throw std::logic_error(name_ + ": involution not an anti-homomorphism");
            }
    }
    if (frob_) {
        // tau must be parity-preserving (vanish on odd basis elements).
        for (int b = 0; b < n; ++b)
            if (par_[b].odd() && !(*frob_)[static_cast<size_t>(b)].isZero())
                throw std::logic_error(name_ + ": Frobenius form not parity-preserving");
        // Dual basis via the Gram matrix G_{bc} = tau(b c).
        std::vector<std::vector<Scalar>> G(n, std::vector<Scalar>(n));
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) G[b][static_cast<size_t>(c)] = tau(mulBasis(b, c));
        // Invert G by Gauss-Jordan; singular G means tau is degenerate.
        std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n));
        for (int i = 0; i < n; ++i) inv[i][static_cast<size_t>(i)] = Scalar(1);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int r = col; r < n; ++r)
                if (!G[r][static_cast<size_t>(col)].isZero()) { piv = r; break; }
            if (piv < 0) throw std::logic_error(name_ + ": Frobenius pairing is singular");
            std::swap(G[col], G[piv]);
            std::swap(inv[col], inv[piv]);
            Scalar p = G[col][static_cast<size_t>(col)];
            for (int c = 0; c < n; ++c) {
                G[col][static_cast<size_t>(c)] /= p;
                inv[col][static_cast<size_t>(c)] /= p;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col) continue;
                Scalar f = G[r][static_cast<size_t>(col)];
                if (f.isZero()) continue;
                for (int c = 0; c < n; ++c) {
                    G[r][static_cast<size_t>(c)] -= f * G[col][static_cast<size_t>(c)];
                    inv[r][static_cast<size_t>(c)] -= f * inv[col][static_cast<size_t>(c)];
                }
            }
        }
        // b^vee = sum_a inv[b][a] a  satisfies tau(b^vee c) = delta_{bc}.
        dual_.assign(static_cast<size_t>(n), AlgElem());
        for (int b = 0; b < n; ++b)
            for (int a = 0; a < n; ++a)
                dual_[static_cast<size_t>(b)].add(a, inv[b][static_cast<size_t>(a)]);
        // Nakayama: nu(a) = sum_b (-1)^{|a||b|} tau(a b^vee) b.
        nak_.assign(static_cast<size_t>(n), AlgElem());
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                Scalar c = tau(mul(AlgElem::basis(a), dual_[static_cast<size_t>(b)]));
                if (koszul(par_[a], par_[b]) < 0) c = -c;
                nak_[static_cast<size_t>(a)].add(b, c);
            }
        }
        // Defining property and involutivity of the Nakayama automorphism.
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Scalar lhs = tau(mulBasis(a, b));
                Scalar rhs = tau(mul(AlgElem::basis(b), nak_[static_cast<size_t>(a)]));
                if (koszul(par_[a], par_[b]) < 0) rhs = -rhs;
                if (lhs != rhs) throw std::logic_error(name_ + ": Nakayama defining identity fails");
            }
    }
    finalized_ = true;
}

std::string SuperAlgebra::format(const AlgElem& a) const {
    if (a.isZero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, v] : a.coeffs()) {
        std::string coeff = v.str();
        bool neg = coeff[0] == '-';
        if (neg) coeff = coeff.substr(1);
        out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
        bool needCoeff = !(coeff == "1");
        bool compositeCoeff = coeff.find('+') != std::string::npos ||
                              (coeff.find('-') != std::string::npos);
        if (compositeCoeff) coeff = "(" + coeff + ")";
        if (names_[static_cast<size_t>(b)] == "1") {
            out += coeff;
        } else if (needCoeff) {
            out += coeff + "*" + names_[static_cast<size_t>(b)];
        } else {
            out += names_[static_cast<size_t>(b)];
        }
        first = false;
    }
    return out;
}

namespace {

// Minimal recursive parser for sums of rational multiples of basis names,
// e.g. "1 + 2*i - 1/3*eps".  Gaussian coefficients use "(a+bi)" or "i".
struct ElemParser {
    const SuperAlgebra& A;
    const std::string& s;
    size_t p = 0;

    void skip() { while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p; }
    bool eat(char c) {
        skip();
        if (p < s.size() && s[p] == c) { ++p; return true; }
        return false;
    }

    mpq_class rational() {
        skip();
        bool neg = false;
        if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
            neg = s[p] == '-';
            ++p;
        }
        size_t start = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p < s.size() && s[p] == '/') {
            ++p;
            while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        }
        if (p == start) throw std::invalid_argument("expected number in element at pos " + std::to_string(p));
        mpq_class q(s.substr(start, p - start));
        q.canonicalize();
        if (neg) q = -q;
        return q;
    }

    std::string ident() {
        skip();
        size_t start = p;
        while (p < s.size() && (std::isalnum(static_cast<unsigned char>(s[p])) || s[p] == '_')) ++p;
        if (p == start) throw std::invalid_argument("expected basis name at pos " + std::to_string(p));
        return s.substr(start, p - start);
    }

    AlgElem parse() {
        AlgElem out;
        bool first = true;
        while (true) {
            skip();
            if (p >= s.size()) break;
            int sgn = 1;
            if (eat('+')) sgn = 1;
            else if (eat('-')) sgn = -1;
            else if (!first) throw std::invalid_argument("expected + or - at pos " + std::to_string(p));
            out += term() * Scalar(sgn);
            first = false;
        }
        if (out.isZero() && first) throw std::invalid_argument("empty element");
        return out;
    }

    AlgElem term() {
        skip();
        Scalar coeff(1);
        bool haveCoeff = false;
        if (p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '(')) {
            if (eat('(')) {
                mpq_class re = rational();
                Scalar c(re);
                skip();
                if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
                    mpq_class im = rational();
                    skip();
                    if (!eat('i')) throw std::invalid_argument("expected i in Gaussian coefficient");
                    c = Scalar(re, im);
                }
                if (!eat(')')) throw std::invalid_argument("expected )");
                coeff = c;
            } else {
                coeff = Scalar(rational());
                if (A.complexScalars() && p < s.size() && s[p] == 'i') {
                    // "2i" style pure-imaginary coefficient
                    ++p;
                    coeff = coeff * Scalar::i();
                }
            }
            haveCoeff = true;
        }
        skip();
        if (haveCoeff && eat('*')) skip();
        if (p < s.size() && (std::isalpha(static_cast<unsigned char>(s[p])) || s[p] == '_')) {
            std::string nm = ident();
            if (A.complexScalars() && nm == "i" && A.basisIndex("i") < 0) {
                return A.unit() * (coeff * Scalar::i());
            }
            int b = A.basisIndex(nm);
            if (b < 0) throw std::invalid_argument("unknown basis element '" + nm + "'");
            return AlgElem::term(b, coeff);
        }
        if (!haveCoeff) throw std::invalid_argument("expected coefficient or basis name");
        return A.unit() * coeff;
    }
};

} // namespace

AlgElem SuperAlgebra::parseElem(const std::string& text) const {
    ElemParser ps{*this, text};
    AlgElem e = ps.parse();
    return e;
}

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

namespace {

// Base algebras for the Clifford doubling construction.
struct Base {
    std::vector<std::string> names;
    std::vector<std::vector<std::pair<int, int>>> mul; // (basis index, sign)
    std::vector<std::pair<int, int>> conj;             // complex conjugation
};

Base baseR() { return {{"1"}, {{{0, 1}}}, {{0, 1}}}; }

Base baseC() {
    return {{"1", "i"},
            {{{0, 1}, {1, 1}}, {{1, 1}, {0, -1}}},
            {{0, 1}, {1, -1}}};
}

Base baseH() {
    // 1 i j k with ij=k, jk=i, ki=j.
    Base b;
    b.names = {"1", "i", "j", "k"};
    auto idx = [](int x) { return x; };
    b.mul.assign(4, std::vector<std::pair<int, int>>(4));
    auto set = [&](int x, int y, int z, int s) { b.mul[idx(x)][idx(y)] = {z, s}; };
    set(0, 0, 0, 1); set(0, 1, 1, 1); set(0, 2, 2, 1); set(0, 3, 3, 1);
    set(1, 0, 1, 1); set(1, 1, 0, -1); set(1, 2, 3, 1); set(1, 3, 2, -1);
    set(2, 0, 2, 1); set(2, 1, 3, -1); set(2, 2, 0, -1); set(2, 3, 1, 1);
    set(3, 0, 3, 1); set(3, 1, 2, 1); set(3, 2, 1, -1); set(3, 3, 0, -1);
    b.conj = {{0, 1}, {1, -1}, {2, -1}, {3, -1}};
    return b;
}

/// Clifford double: basis {z} u {eps z}; product rule
///   (eps^e1 z1)(eps^e2 z2) = epsSq^{e1&e2} eps^{e1^e2} (sig^{e2}(z1) z2),
/// where sig is the identity or base conjugation (the rule z eps = eps sig(z)).
std::shared_ptr<SuperAlgebra> cliffordDouble(const std::string& name, const Base& base,
                                             int epsSq, bool sigIsConj, bool complexScalars) {
    int n = static_cast<int>(base.names.size());
    std::vector<std::string> names;
    std::vector<Parity> par;
    for (int z = 0; z < n; ++z) { names.push_back(base.names[static_cast<size_t>(z)]); par.push_back(Even); }
    for (int z = 0; z < n; ++z) {
        names.push_back(base.names[static_cast<size_t>(z)] == "1"
                            ? "eps"
                            : "eps" + base.names[static_cast<size_t>(z)]);
        par.push_back(Odd);
    }
    auto A = std::make_shared<SuperAlgebra>(name, names, par, complexScalars);
    auto id = [&](int e, int z) { return e * n + z; };
    for (int e1 = 0; e1 < 2; ++e1)
        for (int z1 = 0; z1 < n; ++z1)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int z2 = 0; z2 < n; ++z2) {
                    int sgn = (e1 && e2) ? epsSq : 1;
                    int zz1 = z1, s1 = 1;
                    if (e2 && sigIsConj) { zz1 = base.conj[static_cast<size_t>(z1)].first; s1 = base.conj[static_cast<size_t>(z1)].second; }
                    auto [z3, s3] = base.mul[static_cast<size_t>(zz1)][static_cast<size_t>(z2)];
                    A->setProduct(id(e1, z1), id(e2, z2),
                                  AlgElem::term(id(e1 ^ e2, z3), Scalar(sgn * s1 * s3)));
                }
    A->setUnit(AlgElem::basis(0));
    return A;
}

std::shared_ptr<SuperAlgebra> purelyEven(const std::string& name, const Base& base, bool complexScalars) {
    int n = static_cast<int>(base.names.size());
    auto A = std::make_shared<SuperAlgebra>(name, base.names, std::vector<Parity>(static_cast<size_t>(n), Even),
                                            complexScalars);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto [z, s] = base.mul[static_cast<size_t>(x)][static_cast<size_t>(y)];
            A->setProduct(x, y, AlgElem::term(z, Scalar(s)));
        }
    A->setUnit(AlgElem::basis(0));
    return A;
}

std::vector<Scalar> realPartForm(const SuperAlgebra& A) {
    // tau = coefficient of the basis element "1" (real part of even part).
    std::vector<Scalar> t(static_cast<size_t>(A.dim()));
    t[0] = Scalar(1);
    return t;
}

std::shared_ptr<SuperAlgebra> truncatedPoly(int n) {
    // k[x]/(x^n), tau = top coefficient, identity involution.
    std::vector<std::string> names;
    for (int k = 0; k < n; ++k) names.push_back(k == 0 ? "1" : (k == 1 ? "x" : "x" + std::to_string(k)));
    auto A = std::make_shared<SuperAlgebra>("kx" + std::to_string(n), names,
                                            std::vector<Parity>(static_cast<size_t>(n), Even), false);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            A->setProduct(a, b, a + b < n ? AlgElem::basis(a + b) : AlgElem());
    A->setUnit(AlgElem::basis(0));
    std::vector<Scalar> t(static_cast<size_t>(n));
    t[static_cast<size_t>(n - 1)] = Scalar(1);
    A->setFrobenius(t);
    std::vector<AlgElem> st;
    for (int k = 0; k < n; ++k) st.push_back(AlgElem::basis(k));
    A->setInvolution(st);
    A->finalize();
    return A;
}

std::vector<AlgElem> identityInvolution(const SuperAlgebra& A) {
    std::vector<AlgElem> st;
    for (int b = 0; b < A.dim(); ++b) st.push_back(AlgElem::basis(b));
    return st;
}

} // namespace

AlgebraPtr makeAlgebra(const std::string& name) {
    std::shared_ptr<SuperAlgebra> A;
    if (name == "R") {
        A = purelyEven("R", baseR(), false);
        A->setFrobenius(realPartForm(*A));
        A->setInvolution(identityInvolution(*A));
    } else if (name == "C_real" || name == "C_real_id") {
        A = purelyEven(name, baseC(), false);
        A->setFrobenius(realPartForm(*A));
        if (name == "C_real") {
            A->setInvolution({AlgElem::basis(0), -AlgElem::basis(1)});
        } else {
            A->setInvolution(identityInvolution(*A));
        }
    } else if (name == "H") {
        A = purelyEven("H", baseH(), false);
        A->setFrobenius(realPartForm(*A));
        std::vector<AlgElem> st;
        Base b = baseH();
        st.push_back(AlgElem::basis(0));
        for (int k = 1; k < 4; ++k) st.push_back(-AlgElem::basis(k));
        A->setInvolution(st);
    } else if (name == "Cl1R") {
        A = cliffordDouble("Cl1R", baseR(), +1, false, false);
        A->setFrobenius(realPartForm(*A));
    } else if (name == "Cl7R") {
        A = cliffordDouble("Cl7R", baseR(), -1, false, false);
        A->setFrobenius(realPartForm(*A));
    } else if (name == "Cl2R") {
        A = cliffordDouble("Cl2R", baseC(), +1, true, false);
        A->setFrobenius(realPartForm(*A));
    } else if (name == "Cl6R") {
        A = cliffordDouble("Cl6R", baseC(), -1, true, false);
        A->setFrobenius(realPartForm(*A));
    } else if (name == "Cl3R") {
        A = cliffordDouble("Cl3R", baseH(), -1, false, false);
        A->setFrobenius(realPartForm(*A));
    } else if (name == "Cl5R") {
        A = cliffordDouble("Cl5R", baseH(), +1, false, false);
        A->setFrobenius(realPartForm(*A));
    } else if (name == "C_cplx") {
        A = purelyEven("C_cplx", baseR(), true); // one-dimensional over Q(i)
        A->setFrobenius(realPartForm(*A));
        A->setInvolution(identityInvolution(*A));
    } else if (name == "ClC") {
        A = cliffordDouble("ClC", baseR(), +1, false, true);
        A->setFrobenius(realPartForm(*A));
        // No C-linear anti-involution exists; the involutive version is ClC_real.
    } else if (name == "ClC_real") {
        // Cl(C) viewed over R: basis {1, i, eps, epsi}, eps^2 = 1, z eps = eps z.
        A = cliffordDouble("ClC_real", baseC(), +1, false, false);
        A->setFrobenius(realPartForm(*A));
        // (a + eps b)^star = a^star + eps b^star i  (complex conjugation on a, b).
        // On the basis: 1 -> 1, i -> -i, eps -> eps*i = epsi, epsi -> eps.
        std::vector<AlgElem> st(4);
        st[0] = AlgElem::basis(0);
        st[1] = -AlgElem::basis(1);
        st[static_cast<size_t>(A->basisIndex("eps"))] = AlgElem::basis(A->basisIndex("epsi"));
        st[static_cast<size_t>(A->basisIndex("epsi"))] = AlgElem::basis(A->basisIndex("eps"));
        A->setInvolution(st);
    } else if (name.rfind("kx", 0) == 0 && name.size() > 2) {
        int n = std::stoi(name.substr(2));
        if (n < 1) throw std::invalid_argument("kx<n> needs n >= 1");
        return truncatedPoly(n);
    } else {
        throw std::invalid_argument("unknown algebra '" + name + "'");
    }
    A->finalize();
    return A;
}

AlgebraPtr oppositeAlgebra(const AlgebraPtr& A) {
    std::vector<Parity> par;
    for (int b = 0; b < A->dim(); ++b) par.push_back(A->parity(b));
    auto B = std::make_shared<SuperAlgebra>(A->name() + "_op", A->basisNames(), par,
                                            A->complexScalars());
    for (int x = 0; x < A->dim(); ++x)
        for (int y = 0; y < A->dim(); ++y) {
            AlgElem p = A->mulBasis(y, x);
            if (koszul(A->parity(x), A->parity(y)) < 0) p = -p;
            B->setProduct(x, y, p);
        }
    B->setUnit(A->unit());
    if (A->hasFrobenius()) {
        std::vector<Scalar> t;
        for (int b = 0; b < A->dim(); ++b) t.push_back(A->tau(AlgElem::basis(b)));
        B->setFrobenius(t);
    }
    B->finalize();
    return B;
}

AlgebraPtr complexifyAlgebra(const AlgebraPtr& A) {
    if (A->complexScalars()) throw std::invalid_argument("complexify: algebra already complex");
    std::vector<Parity> par;
    for (int b = 0; b < A->dim(); ++b) par.push_back(A->parity(b));
    auto B = std::make_shared<SuperAlgebra>(A->name() + "_C", A->basisNames(), par, true);
    for (int x = 0; x < A->dim(); ++x)
        for (int y = 0; y < A->dim(); ++y) B->setProduct(x, y, A->mulBasis(x, y));
    B->setUnit(A->unit());
    if (A->hasFrobenius()) {
        std::vector<Scalar> t;
        for (int b = 0; b < A->dim(); ++b) t.push_back(A->tau(AlgElem::basis(b)));
        B->setFrobenius(t);
    }
    B->finalize();
    return B;
}

AlgebraPtr matrixAlgebra(const AlgebraPtr& A, int m, int n) {
    if (m + n < 1) throw std::invalid_argument("matrixAlgebra: need m+n >= 1");
    const int sz = m + n;
    const int da = A->dim();
    std::vector<std::string> names;
    std::vector<Parity> par;
    for (int r = 0; r < sz; ++r)
        for (int s = 0; s < sz; ++s)
            for (int b = 0; b < da; ++b) {
                names.push_back("E" + std::to_string(r + 1) + std::to_string(s + 1) + "_" +
                                A->basisName(b));
                par.push_back(blockParity(r, m) + blockParity(s, m) + A->parity(b));
            }
    auto B = std::make_shared<SuperAlgebra>(
        "Mat" + std::to_string(m) + "|" + std::to_string(n) + "(" + A->name() + ")", names, par,
        A->complexScalars());
    auto id = [&](int r, int s, int b) { return (r * sz + s) * da + b; };
    // (E_{rs} b)(E_{tu} c) = delta_{st} E_{ru} (bc); entries commute past E's
    // with no extra sign since E_{tu} carries no algebra content.
    for (int r = 0; r < sz; ++r)
        for (int s = 0; s < sz; ++s)
            for (int b = 0; b < da; ++b)
                for (int t = 0; t < sz; ++t)
                    for (int u = 0; u < sz; ++u)
                        for (int c = 0; c < da; ++c) {
                            AlgElem out;
                            if (s == t) {
                                for (const auto& [z, v] : A->mulBasis(b, c).coeffs())
                                    out.add(id(r, u, z), v);
                            }
                            B->setProduct(id(r, s, b), id(t, u, c), out);
                        }
    AlgElem unit;
    for (int r = 0; r < sz; ++r)
        for (const auto& [z, v] : A->unit().coeffs()) unit.add(id(r, r, z), v);
    B->setUnit(unit);
    if (A->hasFrobenius()) {
        // tau(X) = tau_A(str X) = sum_r (+-) tau_A(X_rr).
        std::vector<Scalar> t(names.size());
        for (int r = 0; r < sz; ++r)
            for (int s = 0; s < sz; ++s)
                for (int b = 0; b < da; ++b) {
                    Scalar v;
                    if (r == s) {
                        v = A->tau(AlgElem::basis(b));
                        // str X = tr X00 - (-1)^{|X|} tr X11; tau kills odd parts,
                        // so only the even case |X| = 0 contributes: minus on the 11 block.
                        if (r >= m) v = -v;
                    }
                    t[static_cast<size_t>(id(r, s, b))] = v;
                }
        B->setFrobenius(t);
    }
    B->finalize();
    return B;
}

// ---------------------------------------------------------------------------
// Catalog embeddings into complex matrix superalgebras
// ---------------------------------------------------------------------------

namespace {

struct Embedding {
    AlgebraPtr dom;
    AlgebraPtr cod;
    std::vector<AlgElem> image; // image of each domain basis element
};

AlgElem matElem(const AlgebraPtr& M, int sz, int da, int r, int s, const AlgElem& a) {
    (void)M;
    AlgElem out;
    for (const auto& [b, v] : a.coeffs()) out.add((r * sz + s) * da + b, v);
    return out;
}

Embedding buildEmbedding(const std::string& name) {
    if (name == "R_to_C") {
        auto dom = makeAlgebra("R");
        auto cod = makeAlgebra("C_cplx");
        return {dom, cod, {cod->unit()}};
    }
    if (name == "H_to_Mat2C" || name == "Cl3_to_Mat2ClC" || name == "Cl5_to_Mat2ClC") {
        auto C = makeAlgebra("C_cplx");
        auto CC = makeAlgebra("ClC");
        bool cliff = name != "H_to_Mat2C";
        AlgebraPtr base = cliff ? CC : C;
        auto cod = matrixAlgebra(base, 2, 0);
        int da = base->dim();
        Scalar I = Scalar::i();
        AlgElem one = base->unit();
        auto E = [&](int r, int s, Scalar z) { return matElem(cod, 2, da, r, s, one * z); };
        // Pauli-type images: i -> diag(i,-i), j -> [[0,-1],[1,0]], k -> [[0,-i],[-i,0]].
        AlgElem im1 = E(0, 0, Scalar(1)) + E(1, 1, Scalar(1));
        AlgElem imi = E(0, 0, I) + E(1, 1, -I);
        AlgElem imj = E(0, 1, Scalar(-1)) + E(1, 0, Scalar(1));
        AlgElem imk = E(0, 1, -I) + E(1, 0, -I);
        if (name == "H_to_Mat2C") {
            auto dom = makeAlgebra("H");
            return {dom, cod, {im1, imi, imj, imk}};
        }
        // Cl3: a + eps b -> iota(a) + eps iota(b) i; Cl5: -> iota(a) + eps iota(b).
        auto dom = makeAlgebra(name == "Cl3_to_Mat2ClC" ? "Cl3R" : "Cl5R");
        int epsIdx = CC->basisIndex("eps");
        auto epsTimes = [&](const AlgElem& x) {
            // multiply every Cl(C) entry on the left by eps
            AlgElem out;
            for (const auto& [idx, v] : x.coeffs()) {
                int rs = idx / da, b = idx % da;
                AlgElem prod = CC->mul(AlgElem::basis(epsIdx), AlgElem::basis(b));
                for (const auto& [z, w] : prod.coeffs()) out.add(rs * da + z, v * w);
            }
            return out;
        };
        std::vector<AlgElem> evenPart = {im1, imi, imj, imk};
        std::vector<AlgElem> image;
        for (auto& x : evenPart) image.push_back(x);
        for (auto& x : evenPart) {
            AlgElem y = epsTimes(x);
            if (name == "Cl3_to_Mat2ClC") y = y * Scalar::i();
            image.push_back(y);
        }
        return {dom, cod, image};
    }
    if (name == "Cl1_to_ClC" || name == "Cl7_to_ClC") {
        auto dom = makeAlgebra(name == "Cl1_to_ClC" ? "Cl1R" : "Cl7R");
        auto cod = makeAlgebra("ClC");
        int eps = cod->basisIndex("eps");
        AlgElem imEps = name == "Cl1_to_ClC" ? AlgElem::basis(eps)
                                             : AlgElem::term(eps, Scalar::i());
        return {dom, cod, {cod->unit(), imEps}};
    }
    if (name == "Cl2_to_Mat11C" || name == "Cl6_to_Mat11C") {
        auto dom = makeAlgebra(name == "Cl2_to_Mat11C" ? "Cl2R" : "Cl6R");
        auto C = makeAlgebra("C_cplx");
        auto cod = matrixAlgebra(C, 1, 1);
        Scalar I = Scalar::i();
        AlgElem one = C->unit();
        auto E = [&](int r, int s, Scalar z) { return matElem(cod, 2, 1, r, s, one * z); };
        // a + eps b -> [[a, sign b*],[b, a*]] with sign = +1 (Cl2), -1 (Cl6).
        Scalar sg = name == "Cl2_to_Mat11C" ? Scalar(1) : Scalar(-1);
        AlgElem im1 = E(0, 0, Scalar(1)) + E(1, 1, Scalar(1));
        AlgElem imi = E(0, 0, I) + E(1, 1, -I);
        AlgElem imEps = E(0, 1, sg) + E(1, 0, Scalar(1));
        AlgElem imEpsi = E(0, 1, sg * (-I)) + E(1, 0, I);
        return {dom, cod, {im1, imi, imEps, imEpsi}};
    }
    throw std::invalid_argument("unknown embedding '" + name + "'");
}

} // namespace

std::vector<std::string> allEmbeddingNames() {
    return {"R_to_C",        "H_to_Mat2C",    "Cl1_to_ClC",    "Cl2_to_Mat11C",
            "Cl3_to_Mat2ClC", "Cl5_to_Mat2ClC", "Cl6_to_Mat11C", "Cl7_to_ClC"};
}

EmbeddingReport checkEmbedding(const std::string& name) {
    Embedding e = buildEmbedding(name);
    EmbeddingReport rep;
    rep.name = name;

    rep.parityPreserving = true;
    for (int b = 0; b < e.dom->dim(); ++b) {
        const AlgElem& img = e.image[static_cast<size_t>(b)];
        if (img.isZero() || !e.cod->isHomogeneous(img) ||
            e.cod->parity(img) != e.dom->parity(b)) {
            rep.parityPreserving = false;
        }
    }

    auto apply = [&](const AlgElem& a) {
        AlgElem out;
        for (const auto& [b, v] : a.coeffs()) out += e.image[static_cast<size_t>(b)] * v;
        return out;
    };
    rep.homomorphism = apply(e.dom->unit()) == e.cod->unit();
    for (int x = 0; x < e.dom->dim() && rep.homomorphism; ++x)
        for (int y = 0; y < e.dom->dim(); ++y) {
            AlgElem lhs = apply(e.dom->mulBasis(x, y));
            AlgElem rhs = e.cod->mul(e.image[static_cast<size_t>(x)], e.image[static_cast<size_t>(y)]);
            if (lhs != rhs) { rep.homomorphism = false; break; }
        }

    // Spanning criterion: every element of the codomain is uniquely X + iY
    // with X, Y in the real span of the image.  Over Q(i) ground scalars this
    // says {img_b, i*img_b} has full rank 2*dim_C(cod) over Q.
    const int dc = e.cod->dim();
    std::vector<std::vector<mpq_class>> rows;
    for (int b = 0; b < e.dom->dim(); ++b)
        for (int mult = 0; mult < 2; ++mult) {
            AlgElem v = e.image[static_cast<size_t>(b)];
            if (mult) v = v * Scalar::i();
            std::vector<mpq_class> row(static_cast<size_t>(2 * dc));
            for (const auto& [idx, s] : v.coeffs()) {
                row[static_cast<size_t>(2 * idx)] = s.re();
                row[static_cast<size_t>(2 * idx + 1)] = s.im();
            }
            rows.push_back(std::move(row));
        }
    // rank by plain Gaussian elimination
    size_t rank = 0;
    size_t cols = static_cast<size_t>(2 * dc);
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            mpq_class f = rows[r][col] / rows[rank][col];
            for (size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    rep.spanning = rank == static_cast<size_t>(2 * dc) &&
                   rows.size() == static_cast<size_t>(2 * dc);
    return rep;
}

} // namespace brauer
