#include "brauer/unoriented.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace brauer {

// ---------------------------------------------------------------------------
// ShiftedMatrixMorphism
// ---------------------------------------------------------------------------

ShiftedMatrixMorphism::ShiftedMatrixMorphism(std::vector<PiObject> src, std::vector<PiObject> tgt)
    : src_(std::move(src)), tgt_(std::move(tgt)) {
    e_.assign(tgt_.size(), std::vector<OrMorphism>(src_.size()));
    for (size_t i = 0; i < tgt_.size(); ++i)
        for (size_t j = 0; j < src_.size(); ++j) {
            e_[i][j].src = src_[j].word;
            e_[i][j].tgt = tgt_[i].word;
        }
}

ShiftedMatrixMorphism ShiftedMatrixMorphism::identity(const OrCategory& C,
                                                      std::vector<PiObject> objs) {
    ShiftedMatrixMorphism m(objs, objs);
    for (size_t i = 0; i < objs.size(); ++i) m.e_[i][i] = C.idMorphism(objs[i].word);
    return m;
}

ShiftedMatrixMorphism ShiftedMatrixMorphism::compose(const OrCategory& C,
                                                     const ShiftedMatrixMorphism& g) const {
    if (!(g.tgt_ == src_)) throw std::invalid_argument("ShiftedMatrixMorphism: type mismatch");
    ShiftedMatrixMorphism out(g.src_, tgt_);
    for (size_t i = 0; i < tgt_.size(); ++i)
        for (size_t k = 0; k < g.src_.size(); ++k)
            for (size_t j = 0; j < src_.size(); ++j) {
                if (e_[i][j].isZero() || g.e_[j][k].isZero()) continue;
                out.e_[i][k] += C.compose(e_[i][j], g.e_[j][k]);
            }
    return out;
}

ShiftedMatrixMorphism ShiftedMatrixMorphism::tensor(const OrCategory& C,
                                                    const ShiftedMatrixMorphism& g) const {
    std::vector<PiObject> nsrc, ntgt;
    for (const auto& a : src_)
        for (const auto& b : g.src_) {
            Word w = a.word;
            w.insert(w.end(), b.word.begin(), b.word.end());
            nsrc.push_back({w, a.shift + b.shift});
        }
    for (const auto& a : tgt_)
        for (const auto& b : g.tgt_) {
            Word w = a.word;
            w.insert(w.end(), b.word.begin(), b.word.end());
            ntgt.push_back({w, a.shift + b.shift});
        }
    ShiftedMatrixMorphism out(nsrc, ntgt);
    const size_t gs = g.src_.size(), gt = g.tgt_.size();
    for (size_t i1 = 0; i1 < tgt_.size(); ++i1)
        for (size_t j1 = 0; j1 < src_.size(); ++j1) {
            const OrMorphism& f = e_[i1][j1];
            if (f.isZero()) continue;
            Parity r = src_[j1].shift;
            for (size_t i2 = 0; i2 < gt; ++i2)
                for (size_t j2 = 0; j2 < gs; ++j2) {
                    const OrMorphism& gm = g.e_[i2][j2];
                    if (gm.isZero()) continue;
                    Parity u = g.src_[j2].shift, v = g.tgt_[i2].shift;
                    // f_r^s tensor g_u^v = (-1)^{r(|g|+u+v)+|f| v} (f tensor g),
                    // applied per homogeneous term
                    for (const auto& [df, cf] : f.terms) {
                        Parity pf = C.parity(df);
                        for (const auto& [dg, cg] : gm.terms) {
                            Parity pg = C.parity(dg);
                            int sgn = 1;
                            if (r.odd() && (pg + u + v).odd()) sgn = -sgn;
                            if (pf.odd() && v.odd()) sgn = -sgn;
                            OrMorphism tf;
                            tf.src = f.src;
                            tf.tgt = f.tgt;
                            tf.add(df, cf);
                            OrMorphism tg;
                            tg.src = gm.src;
                            tg.tgt = gm.tgt;
                            tg.add(dg, cg * Scalar(sgn));
                            out.e_[i1 * gt + i2][j1 * gs + j2] += C.tensor(tf, tg);
                        }
                    }
                }
        }
    return out;
}

ShiftedMatrixMorphism& ShiftedMatrixMorphism::operator+=(const ShiftedMatrixMorphism& o) {
    if (!(o.src_ == src_ && o.tgt_ == tgt_))
        throw std::invalid_argument("ShiftedMatrixMorphism: type mismatch");
    for (size_t i = 0; i < e_.size(); ++i)
        for (size_t j = 0; j < e_[i].size(); ++j) e_[i][j] += o.e_[i][j];
    return *this;
}

ShiftedMatrixMorphism ShiftedMatrixMorphism::scaled(const Scalar& c) const {
    ShiftedMatrixMorphism out = *this;
    for (auto& row : out.e_)
        for (auto& m : row) m = m * c;
    return out;
}

bool ShiftedMatrixMorphism::isZero() const {
    for (const auto& row : e_)
        for (const auto& m : row)
            if (!m.isZero()) return false;
    return true;
}

std::map<std::string, Scalar> ShiftedMatrixMorphism::flatten(const OrCategory& C) const {
    std::map<std::string, Scalar> out;
    for (size_t i = 0; i < tgt_.size(); ++i)
        for (size_t j = 0; j < src_.size(); ++j)
            for (const auto& [d, c] : e_[i][j].terms) {
                std::string key = std::to_string(i) + "|" + std::to_string(j) + "|" +
                                  C.formatDiagram(src_[j].word, tgt_[i].word, d);
                out.emplace(std::move(key), c);
            }
    return out;
}

// ---------------------------------------------------------------------------
// UnMorphism
// ---------------------------------------------------------------------------

void UnMorphism::add(const UnDiagram& d, const Scalar& c) {
    if (c.isZero()) return;
    auto it = terms.find(d);
    if (it == terms.end()) {
        terms.emplace(d, c);
    } else {
        it->second += c;
        if (it->second.isZero()) terms.erase(it);
    }
}

UnMorphism& UnMorphism::operator+=(const UnMorphism& o) {
    if (r != o.r || s != o.s) throw std::invalid_argument("UnMorphism: type mismatch");
    for (const auto& [d, c] : o.terms) add(d, c);
    return *this;
}

UnMorphism& UnMorphism::operator-=(const UnMorphism& o) {
    if (r != o.r || s != o.s) throw std::invalid_argument("UnMorphism: type mismatch");
    for (const auto& [d, c] : o.terms) add(d, -c);
    return *this;
}

UnMorphism UnMorphism::operator*(const Scalar& c) const {
    UnMorphism out;
    out.r = r;
    out.s = s;
    if (!c.isZero())
        for (const auto& [d, v] : terms) out.terms.emplace(d, v * c);
    return out;
}

// ---------------------------------------------------------------------------
// UnCategory
// ---------------------------------------------------------------------------

UnCategory::UnCategory(AlgebraPtr A, Parity sigma, Scalar d)
    : A_(A), sigma_(sigma), d_(d), orCat_(A, d / Scalar(2)) {
    if (!A_->hasInvolution())
        throw std::invalid_argument("UnCategory needs an involutive superalgebra");
    if (!A_->hasFrobenius())
        throw std::invalid_argument("UnCategory needs a Frobenius superalgebra");
    if (sigma_.odd() && !d_.isZero() && !A_->supertraceIsZero())
        throw std::invalid_argument(
            "sigma = 1 with nonzero supertrace forces d = 0 (degenerate specialization)");
}

namespace {

int cupsAndCaps(int r, const std::vector<int>& match) {
    int n = static_cast<int>(match.size());
    int c = 0;
    for (int e = 0; e < n; ++e) {
        int o = match[static_cast<size_t>(e)];
        if (e < o && ((e < r) == (o < r))) ++c;
    }
    return c;
}

UnMorphism expandUnTokens(int r, int s, const std::vector<int>& match,
                          const std::map<int, AlgElem>& spotValues) {
    UnMorphism f;
    f.r = r;
    f.s = s;
    UnDiagram base;
    base.match = match;
    base.token.assign(match.size(), -1);
    std::vector<std::pair<UnDiagram, Scalar>> acc{{base, Scalar(1)}};
    for (const auto& [spot, val] : spotValues) {
        std::vector<std::pair<UnDiagram, Scalar>> next;
        for (const auto& [d, c] : acc)
            for (const auto& [b, v] : val.coeffs()) {
                UnDiagram nd = d;
                nd.token[static_cast<size_t>(spot)] = b;
                next.emplace_back(nd, c * v);
            }
        acc = std::move(next);
    }
    for (auto& [d, c] : acc) f.add(d, c);
    return f;
}

} // namespace

Parity UnCategory::parity(int r, const UnDiagram& d) const {
    Parity p;
    for (int e = 0; e < static_cast<int>(d.match.size()); ++e)
        if (d.token[static_cast<size_t>(e)] >= 0)
            p += A_->parity(d.token[static_cast<size_t>(e)]);
    if (sigma_.odd()) p += Parity(cupsAndCaps(r, d.match));
    return p;
}

UnMorphism UnCategory::idMorphism(int n) const {
    std::vector<int> match(static_cast<size_t>(2 * n));
    std::map<int, AlgElem> vals;
    for (int i = 0; i < n; ++i) {
        match[static_cast<size_t>(i)] = n + i;
        match[static_cast<size_t>(n + i)] = i;
        vals[i] = A_->unit();
    }
    return expandUnTokens(n, n, match, vals);
}

UnMorphism UnCategory::cross() const {
    return expandUnTokens(2, 2, {3, 2, 1, 0}, {{0, A_->unit()}, {1, A_->unit()}});
}

UnMorphism UnCategory::cap() const { return expandUnTokens(2, 0, {1, 0}, {{1, A_->unit()}}); }

UnMorphism UnCategory::cup() const { return expandUnTokens(0, 2, {1, 0}, {{0, A_->unit()}}); }

UnMorphism UnCategory::token(const AlgElem& a) const {
    return expandUnTokens(1, 1, {1, 0}, {{0, a}});
}

std::vector<UnDiagram> UnCategory::enumerateBasis(int r, int s) const {
    std::vector<UnDiagram> out;
    const int n = r + s;
    if (n % 2 != 0 || n == 0) {
        if (n == 0) {
            UnDiagram empty;
            out.push_back(empty);
        }
        return out;
    }
    std::vector<int> match(static_cast<size_t>(n), -1);
    std::function<void()> rec = [&]() {
        int e = -1;
        for (int k = 0; k < n; ++k)
            if (match[static_cast<size_t>(k)] < 0) { e = k; break; }
        if (e < 0) {
            UnDiagram base;
            base.match = match;
            base.token.assign(static_cast<size_t>(n), -1);
            std::vector<int> spots;
            for (int k = 0; k < n; ++k)
                if (strandSpot(match, r, k) == k) spots.push_back(k);
            std::sort(spots.begin(), spots.end());
            std::vector<int> assign(spots.size(), 0);
            while (true) {
                UnDiagram d = base;
                for (size_t k = 0; k < spots.size(); ++k)
                    d.token[static_cast<size_t>(spots[k])] = assign[k];
                out.push_back(d);
                size_t k = spots.size();
                while (k > 0 && assign[k - 1] == A_->dim() - 1) assign[--k] = 0;
                if (k == 0) break;
                ++assign[k - 1];
            }
            return;
        }
        for (int o = e + 1; o < n; ++o) {
            if (match[static_cast<size_t>(o)] >= 0) continue;
            match[static_cast<size_t>(e)] = o;
            match[static_cast<size_t>(o)] = e;
            rec();
            match[static_cast<size_t>(e)] = -1;
            match[static_cast<size_t>(o)] = -1;
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PiObject> UnCategory::objectComponents(int n) const {
    std::vector<PiObject> out;
    for (long mask = 0; mask < (1L << n); ++mask) {
        Word w;
        int downs = 0;
        for (int i = 0; i < n; ++i) {
            bool dn = (mask >> (n - 1 - i)) & 1;
            w.push_back(dn ? Dir::Down : Dir::Up);
            if (dn) ++downs;
        }
        Parity shift = sigma_.odd() ? Parity(downs) : Even;
        out.push_back({w, shift});
    }
    return out;
}

namespace {

ShiftedMatrixMorphism dCross(const UnCategory& U, const OrCategory& C) {
    ShiftedMatrixMorphism m(U.objectComponents(2), U.objectComponents(2));
    // components in lex order: uu(0), ud(1), du(2), dd(3)
    m.entry(0, 0) = C.cross(Dir::Up, Dir::Up);
    m.entry(2, 1) = C.cross(Dir::Up, Dir::Down);
    m.entry(1, 2) = C.cross(Dir::Down, Dir::Up);
    m.entry(3, 3) = C.cross(Dir::Down, Dir::Down) * Scalar(U.sigma().odd() ? -1 : 1);
    return m;
}

ShiftedMatrixMorphism dCap(const UnCategory& U, const OrCategory& C) {
    ShiftedMatrixMorphism m(U.objectComponents(2), U.objectComponents(0));
    m.entry(0, 1) = C.capR(); // up-down component
    m.entry(0, 2) = C.capL(); // down-up component
    return m;
}

ShiftedMatrixMorphism dCup(const UnCategory& U, const OrCategory& C) {
    ShiftedMatrixMorphism m(U.objectComponents(0), U.objectComponents(2));
    m.entry(1, 0) = C.cupL();
    m.entry(2, 0) = C.cupR() * Scalar(U.sigma().odd() ? -1 : 1);
    return m;
}

ShiftedMatrixMorphism dTok(const UnCategory& U, const OrCategory& C, int b) {
    ShiftedMatrixMorphism m(U.objectComponents(1), U.objectComponents(1));
    const auto& A = *U.algebra();
    m.entry(0, 0) = C.token(AlgElem::basis(b), Dir::Up);
    Scalar sgn(1);
    if (U.sigma().odd() && A.parity(b).odd()) sgn = Scalar(-1);
    m.entry(1, 1) = C.token(A.inv(AlgElem::basis(b)), Dir::Down) * sgn;
    return m;
}

} // namespace

ShiftedMatrixMorphism UnCategory::expandDiagram(int r, int s, const UnDiagram& d) const {
    auto skip = [&](int tok) { return AlgElem::basis(tok) == A_->unit(); };
    auto layers = factorizeMatching(r, s, d.match, d.token, skip);
    ShiftedMatrixMorphism M = ShiftedMatrixMorphism::identity(orCat_, objectComponents(r));
    int len = r;
    for (const auto& l : layers) {
        ShiftedMatrixMorphism gen;
        int width = 0;
        switch (l.kind) {
            case Layer::Cross: gen = dCross(*this, orCat_); width = 2; break;
            case Layer::Cap: gen = dCap(*this, orCat_); width = 2; break;
            case Layer::Cup: gen = dCup(*this, orCat_); width = 0; break;
            case Layer::Tok: gen = dTok(*this, orCat_, l.token); width = 1; break;
        }
        ShiftedMatrixMorphism left =
            ShiftedMatrixMorphism::identity(orCat_, objectComponents(l.pos));
        ShiftedMatrixMorphism right = ShiftedMatrixMorphism::identity(
            orCat_, objectComponents(len - l.pos - width));
        ShiftedMatrixMorphism layer = left.tensor(orCat_, gen).tensor(orCat_, right);
        M = layer.compose(orCat_, M);
        if (l.kind == Layer::Cap) len -= 2;
        if (l.kind == Layer::Cup) len += 2;
    }
    assert(len == s);
    return M;
}

ShiftedMatrixMorphism UnCategory::expand(const UnMorphism& f) const {
    ShiftedMatrixMorphism out(objectComponents(f.r), objectComponents(f.s));
    for (const auto& [d, c] : f.terms) out += expandDiagram(f.r, f.s, d).scaled(c);
    return out;
}

UnMorphism UnCategory::decode(const ShiftedMatrixMorphism& P, int r, int s) const {
    UnMorphism out;
    out.r = r;
    out.s = s;
    ShiftedMatrixMorphism residual = P;
    auto cmpsTgt = objectComponents(s);
    auto cmpsSrc = objectComponents(r);
    int guard = 0;
    while (!residual.isZero()) {
        if (++guard > 100000) throw std::logic_error("decode: no convergence");
        int fi = -1, fj = -1;
        OrDiagram fd;
        Scalar fc;
        for (size_t i = 0; i < cmpsTgt.size() && fi < 0; ++i)
            for (size_t j = 0; j < cmpsSrc.size() && fi < 0; ++j)
                if (!residual.entry(static_cast<int>(i), static_cast<int>(j)).isZero()) {
                    fi = static_cast<int>(i);
                    fj = static_cast<int>(j);
                    const auto& t = *residual.entry(fi, fj).terms.begin();
                    fd = t.first;
                    fc = t.second;
                }
        const Word& wSrc = cmpsSrc[static_cast<size_t>(fj)].word;
        const Word& wTgt = cmpsTgt[static_cast<size_t>(fi)].word;
        UnDiagram cand;
        cand.match = fd.match;
        cand.token.assign(static_cast<size_t>(r + s), -1);
        for (int e = 0; e < r + s; ++e) {
            int tok = fd.token[static_cast<size_t>(e)];
            if (tok < 0) continue;
            Dir dir = e < r ? wSrc[static_cast<size_t>(e)] : wTgt[static_cast<size_t>(e - r)];
            if (dir == Dir::Up) {
                cand.token[static_cast<size_t>(e)] = tok;
            } else {
                AlgElem invc = A_->inv(AlgElem::basis(tok));
                if (invc.coeffs().size() != 1)
                    throw std::logic_error(
                        "decode: involution does not permute the basis up to scalars");
                cand.token[static_cast<size_t>(e)] = invc.coeffs().begin()->first;
            }
        }
        ShiftedMatrixMorphism Dh = expandDiagram(r, s, cand);
        Scalar ch = Dh.entry(fi, fj).terms.count(fd) ? Dh.entry(fi, fj).terms.at(fd) : Scalar();
        if (ch.isZero()) throw std::logic_error("decode: residual not in the basis-image span");
        Scalar coeff = fc / ch;
        out.add(cand, coeff);
        residual += Dh.scaled(-coeff);
    }
    return out;
}

UnMorphism UnCategory::compose(const UnMorphism& f, const UnMorphism& g) const {
    if (f.r != g.s) throw std::invalid_argument("compose: interface mismatch");
    ShiftedMatrixMorphism P = expand(f).compose(orCat_, expand(g));
    return decode(P, g.r, f.s);
}

UnMorphism UnCategory::tensor(const UnMorphism& f, const UnMorphism& g) const {
    ShiftedMatrixMorphism P = expand(f).tensor(orCat_, expand(g));
    return decode(P, f.r + g.r, f.s + g.s);
}

UnMorphism UnCategory::applyXi(const UnMorphism& f) const {
    UnMorphism out;
    out.r = f.r;
    out.s = f.s;
    for (const auto& [d, c] : f.terms) {
        std::map<int, AlgElem> vals;
        for (int e = 0; e < f.r + f.s; ++e)
            if (d.token[static_cast<size_t>(e)] >= 0)
                vals[e] = A_->inv(AlgElem::basis(d.token[static_cast<size_t>(e)]));
        out += expandUnTokens(f.r, f.s, d.match, vals) * c;
    }
    return out;
}

Scalar UnCategory::categoricalTrace(const UnMorphism& f) const {
    if (f.r != f.s) throw std::invalid_argument("categoricalTrace: not an endomorphism");
    UnMorphism cur = f;
    while (cur.r > 0) {
        UnMorphism below = tensor(idMorphism(cur.r - 1), cup());
        UnMorphism mid = tensor(cur, idMorphism(1));
        UnMorphism above = tensor(idMorphism(cur.r - 1), cap());
        cur = compose(above, compose(mid, below));
    }
    if (cur.terms.empty()) return Scalar();
    return cur.terms.begin()->second;
}

std::string UnCategory::formatDiagram(int r, int s, const UnDiagram& d) const {
    std::ostringstream os;
    os << "{r:" << r << ",s:" << s << ",match:[";
    bool first = true;
    for (int e = 0; e < r + s; ++e) {
        int o = d.match[static_cast<size_t>(e)];
        if (o < e) continue;
        if (!first) os << ",";
        os << "[" << e + 1 << "," << o + 1 << "]";
        first = false;
    }
    os << "],tokens:{";
    first = true;
    for (int e = 0; e < r + s; ++e) {
        if (d.token[static_cast<size_t>(e)] < 0) continue;
        if (!first) os << ",";
        os << e + 1 << ":\"" << A_->basisName(d.token[static_cast<size_t>(e)]) << "\"";
        first = false;
    }
    os << "}}";
    return os.str();
}

std::string UnCategory::formatMorphism(const UnMorphism& f) const {
    if (f.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : f.terms) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*" << formatDiagram(f.r, f.s, d);
        first = false;
    }
    return os.str();
}

} // namespace brauer
