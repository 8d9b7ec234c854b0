#include "brauer/oriented.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace brauer {

Word parseWord(const std::string& s) {
    Word w;
    for (char c : s) {
        if (c == 'u') w.push_back(Dir::Up);
        else if (c == 'd') w.push_back(Dir::Down);
        else throw std::invalid_argument("word letters must be 'u' or 'd'");
    }
    return w;
}

std::string formatWord(const Word& w) {
    std::string s;
    for (Dir d : w) s += d == Dir::Up ? 'u' : 'd';
    return s;
}

void OrMorphism::add(const OrDiagram& d, const Scalar& c) {
    if (c.isZero()) return;
    auto it = terms.find(d);
    if (it == terms.end()) {
        terms.emplace(d, c);
    } else {
        it->second += c;
        if (it->second.isZero()) terms.erase(it);
    }
}

OrMorphism& OrMorphism::operator+=(const OrMorphism& o) {
    if (src != o.src || tgt != o.tgt) throw std::invalid_argument("OrMorphism: type mismatch");
    for (const auto& [d, c] : o.terms) add(d, c);
    return *this;
}

OrMorphism& OrMorphism::operator-=(const OrMorphism& o) {
    if (src != o.src || tgt != o.tgt) throw std::invalid_argument("OrMorphism: type mismatch");
    for (const auto& [d, c] : o.terms) add(d, -c);
    return *this;
}

OrMorphism OrMorphism::operator*(const Scalar& c) const {
    OrMorphism out;
    out.src = src;
    out.tgt = tgt;
    if (!c.isZero())
        for (const auto& [d, v] : terms) out.terms.emplace(d, v * c);
    return out;
}

int strandSpot(const std::vector<int>& match, int r, int e) {
    int o = match[static_cast<size_t>(e)];
    int a = std::min(e, o), b = std::max(e, o);
    if (a < r && b >= r) return a;  // through: bottom endpoint
    if (b < r) return b;            // cap: right bottom endpoint
    return a;                       // cup: left top endpoint
}

OrCategory::OrCategory(AlgebraPtr A, Scalar d) : A_(std::move(A)), d_(std::move(d)) {
    if (!A_->hasFrobenius())
        throw std::invalid_argument("OrCategory needs a Frobenius superalgebra");
}

Parity OrCategory::parity(const OrDiagram& d) const {
    Parity p;
    for (int t : d.token)
        if (t >= 0) p += A_->parity(t);
    return p;
}

bool OrCategory::isHomogeneous(const OrMorphism& f) const {
    if (f.terms.empty()) return true;
    Parity p = parity(f.terms.begin()->first);
    for (const auto& [d, c] : f.terms) {
        (void)c;
        if (parity(d) != p) return false;
    }
    return true;
}

namespace {

/// Expands a diagram whose strands carry AlgElem tokens into a morphism
/// over pure basis tokens (multilinearity in the token slots; no signs).
OrMorphism expandTokens(const Word& src, const Word& tgt, const std::vector<int>& match,
                        const std::map<int, AlgElem>& spotValues) {
    OrMorphism f;
    f.src = src;
    f.tgt = tgt;
    OrDiagram base;
    base.match = match;
    base.token.assign(match.size(), -1);
    std::vector<std::pair<OrDiagram, Scalar>> acc{{base, Scalar(1)}};
    for (const auto& [spot, val] : spotValues) {
        std::vector<std::pair<OrDiagram, Scalar>> next;
        for (const auto& [d, c] : acc)
            for (const auto& [b, v] : val.coeffs()) {
                OrDiagram nd = d;
                nd.token[static_cast<size_t>(spot)] = b;
                next.emplace_back(nd, c * v);
            }
        acc = std::move(next);
    }
    for (auto& [d, c] : acc) f.add(d, c);
    return f;
}

} // namespace

OrMorphism OrCategory::idMorphism(const Word& w) const {
    const int r = static_cast<int>(w.size());
    std::vector<int> match(static_cast<size_t>(2 * r));
    std::map<int, AlgElem> vals;
    for (int i = 0; i < r; ++i) {
        match[static_cast<size_t>(i)] = r + i;
        match[static_cast<size_t>(r + i)] = i;
        vals[i] = A_->unit();
    }
    return expandTokens(w, w, match, vals);
}

OrMorphism OrCategory::cross(Dir a, Dir b) const {
    return expandTokens({a, b}, {b, a}, {3, 2, 1, 0}, {{0, A_->unit()}, {1, A_->unit()}});
}

OrMorphism OrCategory::capL() const {
    return expandTokens({Dir::Down, Dir::Up}, {}, {1, 0}, {{1, A_->unit()}});
}

OrMorphism OrCategory::capR() const {
    return expandTokens({Dir::Up, Dir::Down}, {}, {1, 0}, {{1, A_->unit()}});
}

OrMorphism OrCategory::cupL() const {
    return expandTokens({}, {Dir::Up, Dir::Down}, {1, 0}, {{0, A_->unit()}});
}

OrMorphism OrCategory::cupR() const {
    return expandTokens({}, {Dir::Down, Dir::Up}, {1, 0}, {{0, A_->unit()}});
}

OrMorphism OrCategory::token(const AlgElem& a, Dir dir) const {
    return expandTokens({dir}, {dir}, {1, 0}, {{0, a}});
}

// ---------------------------------------------------------------------------
// Composition: glue the two matchings, accumulate tokens along composite
// strands, and track signs.  The only sign sources are the super
// interchange law between odd tokens exchanging heights, the down-strand
// token multiplication rule, and loop evaluation.
// ---------------------------------------------------------------------------

namespace {

struct Event {
    int height;
    int strand; // composite strand id, -1 until the walk assigns it
    int label;  // basis index
    Parity par;
};

struct PartialTerm {
    Scalar coeff;
    std::vector<int> label;  // per event slot; -1 for removed
};

} // namespace

OrMorphism OrCategory::compose(const OrMorphism& f, const OrMorphism& g) const {
    if (f.src != g.tgt) throw std::invalid_argument("compose: interface mismatch");
    OrMorphism out;
    out.src = g.src;
    out.tgt = f.tgt;

    const int rg = static_cast<int>(g.src.size());
    const int sg = static_cast<int>(g.tgt.size());
    const int sf = static_cast<int>(f.tgt.size());
    const Word& X = g.src;
    const Word& Y = g.tgt;
    const Word& Z = f.tgt;

    for (const auto& [dg, cg] : g.terms)
        for (const auto& [df, cf] : f.terms) {
            // --- segment tables --------------------------------------------------
            // Segment ids: g-strands then f-strands, keyed by smaller endpoint.
            // Endpoint coordinates: g endpoints 0..rg+sg-1, f endpoints 0..sg+sf-1.
            auto dirAtG = [&](int e) { return e < rg ? X[static_cast<size_t>(e)] : Y[static_cast<size_t>(e - rg)]; };

            // Events in global height order.
            std::vector<Event> events;
            // (diagram, spot) -> event index
            std::map<std::pair<int, int>, int> eventAt; // (0=g/1=f, spot endpoint)
            auto pushEvents = [&](const OrDiagram& d, int nEnd, int r, bool isF) {
                std::vector<int> bottomSpots, topSpots;
                for (int e = 0; e < nEnd; ++e) {
                    if (d.token[static_cast<size_t>(e)] < 0) continue;
                    (e < r ? bottomSpots : topSpots).push_back(e);
                }
                std::sort(bottomSpots.rbegin(), bottomSpots.rend());
                std::sort(topSpots.rbegin(), topSpots.rend());
                for (int e : bottomSpots) {
                    int lab = d.token[static_cast<size_t>(e)];
                    eventAt[{isF ? 1 : 0, e}] = static_cast<int>(events.size());
                    events.push_back({static_cast<int>(events.size()), -1, lab, A_->parity(lab)});
                }
                for (int e : topSpots) {
                    int lab = d.token[static_cast<size_t>(e)];
                    eventAt[{isF ? 1 : 0, e}] = static_cast<int>(events.size());
                    events.push_back({static_cast<int>(events.size()), -1, lab, A_->parity(lab)});
                }
            };
            pushEvents(dg, rg + sg, rg, false);
            pushEvents(df, sg + sf, sg, true);

            // --- walk composite strands ------------------------------------------
            // Visited flags per (diagram, endpoint).
            std::vector<char> visG(static_cast<size_t>(rg + sg), 0), visF(static_cast<size_t>(sg + sf), 0);
            std::vector<int> compMatch(static_cast<size_t>(rg + sf), -1);
            // Per composite strand: ordered event indices along the orientation.
            std::vector<std::vector<int>> strandEvents;
            std::vector<int> strandSpotEnd; // canonical spot in composite coords

            // Walks a maximal oriented path starting inside diagram `inF` at
            // entry endpoint `e`; records events; returns the composite
            // endpoint where it exits, or -1 if it closed into a loop.
            auto recordEvent = [&](bool isF, const OrDiagram& d, int rLocal, int entry, int sid) {
                const std::vector<int>& m = d.match;
                int spot = strandSpot(m, rLocal, entry);
                auto it = eventAt.find({isF ? 1 : 0, spot});
                if (it != eventAt.end()) {
                    Event& ev = events[static_cast<size_t>(it->second)];
                    if (ev.strand < 0) {
                        ev.strand = sid;
                        strandEvents[static_cast<size_t>(sid)].push_back(it->second);
                    }
                }
            };

            auto walk = [&](bool startF, int entry, int sid) -> int {
                bool isF = startF;
                int e = entry;
                while (true) {
                    const OrDiagram& d = isF ? df : dg;
                    int rLocal = isF ? sg : rg;
                    (isF ? visF : visG)[static_cast<size_t>(e)] = 1;
                    recordEvent(isF, d, rLocal, e, sid);
                    int o = d.match[static_cast<size_t>(e)];
                    (isF ? visF : visG)[static_cast<size_t>(o)] = 1;
                    if (!isF) {
                        if (o < rg) return o;            // composite bottom
                        int t = o - rg;                   // into f through interface t
                        if (visF[static_cast<size_t>(t)] && false) {}
                        isF = true;
                        e = t;
                        if (visF[static_cast<size_t>(e)]) return -1; // loop closed
                    } else {
                        if (o >= sg) return rg + (o - sg); // composite top
                        int t = o;                          // back into g at top t
                        isF = false;
                        e = rg + t;
                        if (visG[static_cast<size_t>(e)]) return -1; // loop closed
                    }
                }
            };

            std::vector<char> strandIsLoop;
            // open strands from composite inputs, in deterministic order:
            // bottoms left to right, then tops left to right.
            for (int i = 0; i < rg; ++i) {
                if (X[static_cast<size_t>(i)] != Dir::Up || visG[static_cast<size_t>(i)]) continue;
                int sid = static_cast<int>(strandEvents.size());
                strandEvents.emplace_back();
                strandIsLoop.push_back(0);
                int exitEnd = walk(false, i, sid);
                assert(exitEnd >= 0);
                compMatch[static_cast<size_t>(i)] = exitEnd;
                compMatch[static_cast<size_t>(exitEnd)] = i;
            }
            for (int t = 0; t < sf; ++t) {
                if (Z[static_cast<size_t>(t)] != Dir::Down || visF[static_cast<size_t>(sg + t)]) continue;
                int sid = static_cast<int>(strandEvents.size());
                strandEvents.emplace_back();
                strandIsLoop.push_back(0);
                int exitEnd = walk(true, sg + t, sid);
                assert(exitEnd >= 0);
                compMatch[static_cast<size_t>(rg + t)] = exitEnd;
                compMatch[static_cast<size_t>(exitEnd)] = rg + t;
            }
            // loops: remaining g strands (scan bottom-up, left to right)
            for (int e = 0; e < rg + sg; ++e) {
                if (visG[static_cast<size_t>(e)]) continue;
                // find this strand's input endpoint within g
                Dir de = dirAtG(e);
                bool isIn = (e < rg) ? (de == Dir::Up) : (de == Dir::Down);
                if (!isIn) continue;
                int sid = static_cast<int>(strandEvents.size());
                strandEvents.emplace_back();
                strandIsLoop.push_back(1);
                int res = walk(false, e, sid);
                assert(res == -1);
                (void)res;
            }

            const int nStrand = static_cast<int>(strandEvents.size());
            // composite strand spots for the open strands
            strandSpotEnd.assign(static_cast<size_t>(nStrand), -1);
            std::vector<int> strandOfEndpoint(static_cast<size_t>(rg + sf), -1);
            for (int s = 0; s < nStrand; ++s) {
                if (strandIsLoop[static_cast<size_t>(s)]) continue;
                assert(!strandEvents[static_cast<size_t>(s)].empty());
            }
            // map endpoints to strands via walking again is wasteful; recover
            // from compMatch order: the k-th open walk created strand k.
            {
                int sid = 0;
                std::vector<char> seen(static_cast<size_t>(rg + sf), 0);
                for (int i = 0; i < rg; ++i) {
                    if (X[static_cast<size_t>(i)] != Dir::Up || seen[static_cast<size_t>(i)]) continue;
                    int o = compMatch[static_cast<size_t>(i)];
                    seen[static_cast<size_t>(i)] = seen[static_cast<size_t>(o)] = 1;
                    strandOfEndpoint[static_cast<size_t>(i)] = sid;
                    strandOfEndpoint[static_cast<size_t>(o)] = sid;
                    ++sid;
                }
                for (int t = 0; t < sf; ++t) {
                    int e = rg + t;
                    if (Z[static_cast<size_t>(t)] != Dir::Down || seen[static_cast<size_t>(e)]) continue;
                    int o = compMatch[static_cast<size_t>(e)];
                    seen[static_cast<size_t>(e)] = seen[static_cast<size_t>(o)] = 1;
                    strandOfEndpoint[static_cast<size_t>(e)] = sid;
                    strandOfEndpoint[static_cast<size_t>(o)] = sid;
                    ++sid;
                }
                for (int s = 0; s < nStrand; ++s)
                    if (!strandIsLoop[static_cast<size_t>(s)])
                        assert(std::count(strandOfEndpoint.begin(), strandOfEndpoint.end(), s) == 2);
            }
            for (int e = 0; e < rg + sf; ++e) {
                int s = strandOfEndpoint[static_cast<size_t>(e)];
                if (s < 0) continue;
                strandSpotEnd[static_cast<size_t>(s)] = strandSpot(compMatch, rg, e);
            }

            // --- merge tokens strand by strand ------------------------------------
            std::vector<PartialTerm> terms;
            {
                PartialTerm t0;
                t0.coeff = cg * cf;
                t0.label.resize(events.size());
                for (size_t k = 0; k < events.size(); ++k) t0.label[k] = events[k].label;
                terms.push_back(std::move(t0));
            }

            // Sum of parities of live events with height strictly between two
            // heights, excluding the two given events.
            auto betweenParity = [&](const PartialTerm& t, int h1, int h2, int exA, int exB) {
                int lo = std::min(h1, h2), hi = std::max(h1, h2);
                int p = 0;
                for (size_t k = 0; k < events.size(); ++k) {
                    if (static_cast<int>(k) == exA || static_cast<int>(k) == exB) continue;
                    if (t.label[k] < 0) continue;
                    int h = events[k].height;
                    if (h > lo && h < hi) p ^= A_->parity(t.label[k]).value();
                }
                return Parity(p);
            };

            // Deterministic strand processing order: open strands in creation
            // order (bottom inputs then top inputs), then loops.
            std::vector<int> order(static_cast<size_t>(nStrand));
            std::iota(order.begin(), order.end(), 0);

            for (int s : order) {
                std::vector<int> evs = strandEvents[static_cast<size_t>(s)];
                if (strandIsLoop[static_cast<size_t>(s)]) {
                    // rotate so the minimal-height event comes first
                    size_t best = 0;
                    for (size_t k = 1; k < evs.size(); ++k)
                        if (events[static_cast<size_t>(evs[k])].height <
                            events[static_cast<size_t>(evs[best])].height)
                            best = k;
                    std::rotate(evs.begin(), evs.begin() + static_cast<long>(best), evs.end());
                }
                // Merge successive events e1 -> e2 along the strand.
                for (size_t step = 0; step + 1 < evs.size(); ++step) {
                    int i1 = evs[step], i2 = evs[step + 1];
                    std::vector<PartialTerm> next;
                    for (auto& t : terms) {
                        int a = t.label[static_cast<size_t>(i1)];
                        int b = t.label[static_cast<size_t>(i2)];
                        Parity pa = A_->parity(a), pb = A_->parity(b);
                        Parity crossed = betweenParity(t, events[static_cast<size_t>(i1)].height,
                                                       events[static_cast<size_t>(i2)].height, i1, i2);
                        int sgn = koszul(pa, crossed);
                        // merged token = (later along the strand) * (earlier);
                        // reordering the pair into strand order costs a Koszul
                        // sign when the earlier event sits higher.
                        if (events[static_cast<size_t>(i1)].height >
                            events[static_cast<size_t>(i2)].height)
                            sgn *= koszul(pa, pb);
                        AlgElem prod = A_->mulBasis(b, a);
                        for (const auto& [z, c] : prod.coeffs()) {
                            PartialTerm nt = t;
                            nt.coeff = t.coeff * c * Scalar(sgn);
                            nt.label[static_cast<size_t>(i1)] = -1;
                            nt.label[static_cast<size_t>(i2)] = z;
                            next.push_back(std::move(nt));
                        }
                    }
                    terms = std::move(next);
                    if (terms.empty()) break;
                }
                if (terms.empty()) break;
                if (strandIsLoop[static_cast<size_t>(s)]) {
                    int last = evs.back();
                    std::vector<PartialTerm> next;
                    for (auto& t : terms) {
                        int z = t.label[static_cast<size_t>(last)];
                        Scalar val = d_ * A_->supertrace(AlgElem::basis(z));
                        if (val.isZero()) continue;
                        PartialTerm nt = t;
                        nt.coeff = t.coeff * val;
                        nt.label[static_cast<size_t>(last)] = -1;
                        next.push_back(std::move(nt));
                    }
                    terms = std::move(next);
                    if (terms.empty()) break;
                }
            }
            if (terms.empty()) continue;

            // --- final reorder into canonical positions ---------------------------
            // Target order: bottom-layer spots right to left, then top-layer
            // spots right to left, each event keyed by its composite strand.
            std::vector<int> spotOfStrand = strandSpotEnd;
            std::vector<std::pair<int, int>> canon; // (sort key, strand)
            for (int s2 = 0; s2 < nStrand; ++s2) {
                if (strandIsLoop[static_cast<size_t>(s2)]) continue;
                int spot = spotOfStrand[static_cast<size_t>(s2)];
                bool bottomLayer = spot < rg;
                int key = bottomLayer ? -spot : (rg + sf) * 2 - spot;
                // bottom layer first (ascending height = descending spot),
                // then top layer (descending spot).
                canon.emplace_back(bottomLayer ? key : key + 10 * (rg + sf + 1), s2);
            }
            std::sort(canon.begin(), canon.end());
            std::vector<int> targetRankOfStrand(static_cast<size_t>(nStrand), -1);
            for (size_t k = 0; k < canon.size(); ++k)
                targetRankOfStrand[static_cast<size_t>(canon[k].second)] = static_cast<int>(k);

            // current sequence: last surviving event per open strand, by height
            std::vector<std::pair<int, int>> current; // (height, strand)
            for (int s2 = 0; s2 < nStrand; ++s2) {
                if (strandIsLoop[static_cast<size_t>(s2)]) continue;
                int last = strandEvents[static_cast<size_t>(s2)].back();
                current.emplace_back(events[static_cast<size_t>(last)].height, s2);
            }
            std::sort(current.begin(), current.end());

            for (auto& t : terms) {
                int inv = 0;
                for (size_t a1 = 0; a1 < current.size(); ++a1)
                    for (size_t b1 = a1 + 1; b1 < current.size(); ++b1) {
                        int sa = current[a1].second, sb = current[b1].second;
                        if (targetRankOfStrand[static_cast<size_t>(sa)] >
                            targetRankOfStrand[static_cast<size_t>(sb)]) {
                            int la = t.label[static_cast<size_t>(strandEvents[static_cast<size_t>(sa)].back())];
                            int lb = t.label[static_cast<size_t>(strandEvents[static_cast<size_t>(sb)].back())];
                            if (A_->parity(la).odd() && A_->parity(lb).odd()) inv ^= 1;
                        }
                    }
                OrDiagram res;
                res.match = compMatch;
                res.token.assign(static_cast<size_t>(rg + sf), -1);
                for (int s2 = 0; s2 < nStrand; ++s2) {
                    if (strandIsLoop[static_cast<size_t>(s2)]) continue;
                    int last = strandEvents[static_cast<size_t>(s2)].back();
                    res.token[static_cast<size_t>(spotOfStrand[static_cast<size_t>(s2)])] =
                        t.label[static_cast<size_t>(last)];
                }
                out.add(res, inv ? -t.coeff : t.coeff);
            }
        }
    return out;
}

OrMorphism OrCategory::tensor(const OrMorphism& f, const OrMorphism& g) const {
    OrMorphism out;
    const int rf = static_cast<int>(f.src.size());
    const int sf = static_cast<int>(f.tgt.size());
    const int rgn = static_cast<int>(g.src.size());
    const int sgn = static_cast<int>(g.tgt.size());
    out.src = f.src;
    out.src.insert(out.src.end(), g.src.begin(), g.src.end());
    out.tgt = f.tgt;
    out.tgt.insert(out.tgt.end(), g.tgt.begin(), g.tgt.end());
    const int R = rf + rgn;

    auto mapF = [&](int e) { return e < rf ? e : R + (e - rf); };
    auto mapG = [&](int e) { return e < rgn ? rf + e : R + sf + (e - rgn); };

    for (const auto& [dfd, cf] : f.terms)
        for (const auto& [dgd, cg] : g.terms) {
            OrDiagram res;
            res.match.assign(static_cast<size_t>(R + sf + sgn), -1);
            res.token.assign(static_cast<size_t>(R + sf + sgn), -1);
            for (int e = 0; e < rf + sf; ++e) {
                res.match[static_cast<size_t>(mapF(e))] = mapF(dfd.match[static_cast<size_t>(e)]);
                if (dfd.token[static_cast<size_t>(e)] >= 0)
                    res.token[static_cast<size_t>(mapF(e))] = dfd.token[static_cast<size_t>(e)];
            }
            for (int e = 0; e < rgn + sgn; ++e) {
                res.match[static_cast<size_t>(mapG(e))] = mapG(dgd.match[static_cast<size_t>(e)]);
                if (dgd.token[static_cast<size_t>(e)] >= 0)
                    res.token[static_cast<size_t>(mapG(e))] = dgd.token[static_cast<size_t>(e)];
            }
            // Spots are preserved by horizontal juxtaposition, so no token
            // needs to move.  The only sign: f sits above g, so f's
            // bottom-layer tokens descend past g's top-layer tokens.
            Parity fBottom, gTop;
            for (int e = 0; e < rf; ++e)
                if (dfd.token[static_cast<size_t>(e)] >= 0)
                    fBottom += A_->parity(dfd.token[static_cast<size_t>(e)]);
            for (int e = rgn; e < rgn + sgn; ++e)
                if (dgd.token[static_cast<size_t>(e)] >= 0)
                    gTop += A_->parity(dgd.token[static_cast<size_t>(e)]);
            Scalar c = cf * cg;
            if (koszul(fBottom, gTop) < 0) c = -c;
            out.add(res, c);
        }
    return out;
}

std::vector<OrDiagram> OrCategory::enumerateBasis(const Word& X, const Word& Y) const {
    const int r = static_cast<int>(X.size());
    const int s = static_cast<int>(Y.size());
    std::vector<int> ins, outs;
    for (int i = 0; i < r; ++i) (X[static_cast<size_t>(i)] == Dir::Up ? ins : outs).push_back(i);
    for (int j = 0; j < s; ++j)
        (Y[static_cast<size_t>(j)] == Dir::Down ? ins : outs).push_back(r + j);
    std::vector<OrDiagram> result;
    if (ins.size() != outs.size()) return result;
    const int n = static_cast<int>(ins.size());
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        OrDiagram base;
        base.match.assign(static_cast<size_t>(r + s), -1);
        base.token.assign(static_cast<size_t>(r + s), -1);
        for (int k = 0; k < n; ++k) {
            int a = ins[static_cast<size_t>(k)], b = outs[static_cast<size_t>(perm[static_cast<size_t>(k)])];
            base.match[static_cast<size_t>(a)] = b;
            base.match[static_cast<size_t>(b)] = a;
        }
        std::vector<int> spots;
        for (int k = 0; k < n; ++k) spots.push_back(strandSpot(base.match, r, ins[static_cast<size_t>(k)]));
        std::sort(spots.begin(), spots.end());
        // all token assignments
        std::vector<int> assign(static_cast<size_t>(n), 0);
        while (true) {
            OrDiagram d = base;
            for (int k = 0; k < n; ++k) d.token[static_cast<size_t>(spots[static_cast<size_t>(k)])] = assign[static_cast<size_t>(k)];
            result.push_back(d);
            int k = n - 1;
            while (k >= 0 && assign[static_cast<size_t>(k)] == A_->dim() - 1) {
                assign[static_cast<size_t>(k)] = 0;
                --k;
            }
            if (k < 0) break;
            ++assign[static_cast<size_t>(k)];
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(result.begin(), result.end());
    return result;
}

Scalar OrCategory::categoricalTrace(const OrMorphism& f) const {
    if (f.src != f.tgt) throw std::invalid_argument("categoricalTrace: not an endomorphism");
    OrMorphism cur = f;
    while (!cur.src.empty()) {
        Word P(cur.src.begin(), cur.src.end() - 1);
        Dir x = cur.src.back();
        Dir xbar = x == Dir::Up ? Dir::Down : Dir::Up;
        OrMorphism cup = x == Dir::Up ? cupL() : cupR();
        OrMorphism cap = x == Dir::Up ? capR() : capL();
        OrMorphism below = tensor(idMorphism(P), cup);
        OrMorphism mid = tensor(cur, idMorphism(Word{xbar}));
        OrMorphism above = tensor(idMorphism(P), cap);
        cur = compose(above, compose(mid, below));
    }
    if (cur.terms.empty()) return Scalar();
    return cur.terms.begin()->second;
}

std::vector<Layer> factorizeMatching(int r, int s, const std::vector<int>& match,
                                     const std::vector<int>& token,
                                     const std::function<bool(int)>& skipToken) {
    std::vector<Layer> layers;

    // phase 1: bottom tokens, rightmost lowest
    {
        std::vector<int> spots;
        for (int e = 0; e < r; ++e)
            if (token[static_cast<size_t>(e)] >= 0 && !skipToken(token[static_cast<size_t>(e)]))
                spots.push_back(e);
        std::sort(spots.rbegin(), spots.rend());
        for (int e : spots)
            layers.push_back({Layer::Tok, e, token[static_cast<size_t>(e)],
                              Dir::Up, Dir::Up, e, e});
    }

    // phase 2: caps (bottom-bottom strands), processed by left endpoint
    std::vector<int> frontier(static_cast<size_t>(r));
    std::iota(frontier.begin(), frontier.end(), 0);
    auto posOf = [&](int endpoint) {
        for (size_t k = 0; k < frontier.size(); ++k)
            if (frontier[k] == endpoint) return static_cast<int>(k);
        return -1;
    };
    std::vector<std::pair<int, int>> caps;
    for (int e = 0; e < r; ++e) {
        int o = match[static_cast<size_t>(e)];
        if (o < r && e < o) caps.emplace_back(e, o);
    }
    std::sort(caps.begin(), caps.end());
    for (auto [q1, q2] : caps) {
        int pa = posOf(q1), pb = posOf(q2);
        for (int p = pb - 1; p > pa; --p) {
            layers.push_back({Layer::Cross, p, -1, Dir::Up, Dir::Up,
                              frontier[static_cast<size_t>(p)], frontier[static_cast<size_t>(p + 1)]});
            std::swap(frontier[static_cast<size_t>(p)], frontier[static_cast<size_t>(p + 1)]);
        }
        layers.push_back({Layer::Cap, pa, -1, Dir::Up, Dir::Up, q1, q2});
        frontier.erase(frontier.begin() + pa, frontier.begin() + pa + 2);
    }

    // phase 3: sort through strands by their top endpoints
    {
        std::vector<int> target = frontier;
        std::sort(target.begin(), target.end(), [&](int a, int b) {
            return match[static_cast<size_t>(a)] < match[static_cast<size_t>(b)];
        });
        for (size_t i = 0; i < target.size(); ++i) {
            int j = posOf(target[i]);
            for (int p = j - 1; p >= static_cast<int>(i); --p) {
                layers.push_back({Layer::Cross, p, -1, Dir::Up, Dir::Up,
                                  frontier[static_cast<size_t>(p)],
                                  frontier[static_cast<size_t>(p + 1)]});
                std::swap(frontier[static_cast<size_t>(p)], frontier[static_cast<size_t>(p + 1)]);
            }
        }
    }

    // phase 4: cups, built from the top word downward and reversed
    {
        std::vector<int> topSeq;
        for (int j = 0; j < s; ++j) topSeq.push_back(r + j);
        std::vector<Layer> topDown;
        auto isCupEnd = [&](int e) { return match[static_cast<size_t>(e)] >= r; };
        while (true) {
            bool anyCup = false;
            for (int e : topSeq)
                if (isCupEnd(e)) anyCup = true;
            if (!anyCup) break;
            int found = -1;
            for (size_t p = 0; p + 1 < topSeq.size(); ++p)
                if (match[static_cast<size_t>(topSeq[p])] == topSeq[p + 1]) {
                    found = static_cast<int>(p);
                    break;
                }
            if (found >= 0) {
                topDown.push_back({Layer::Cup, found, -1, Dir::Up, Dir::Up,
                                   topSeq[static_cast<size_t>(found)],
                                   topSeq[static_cast<size_t>(found + 1)]});
                topSeq.erase(topSeq.begin() + found, topSeq.begin() + found + 2);
            } else {
                // bring the cup with the smallest, leftmost gap together
                int bestA = -1, bestGap = 1 << 30;
                for (size_t p = 0; p < topSeq.size(); ++p) {
                    if (!isCupEnd(topSeq[p])) continue;
                    int mt = match[static_cast<size_t>(topSeq[p])];
                    for (size_t q = p + 1; q < topSeq.size(); ++q)
                        if (topSeq[q] == mt && static_cast<int>(q - p) < bestGap) {
                            bestGap = static_cast<int>(q - p);
                            bestA = static_cast<int>(p);
                        }
                }
                assert(bestA >= 0);
                int q = bestA + bestGap;
                topDown.push_back({Layer::Cross, q - 1, -1, Dir::Up, Dir::Up,
                                   topSeq[static_cast<size_t>(q - 1)],
                                   topSeq[static_cast<size_t>(q)]});
                std::swap(topSeq[static_cast<size_t>(q - 1)], topSeq[static_cast<size_t>(q)]);
            }
        }
        std::reverse(topDown.begin(), topDown.end());
        for (auto& l : topDown) layers.push_back(l);
    }

    // phase 5: top tokens, rightmost lowest
    {
        std::vector<int> spots;
        for (int e = r; e < r + s; ++e)
            if (token[static_cast<size_t>(e)] >= 0 && !skipToken(token[static_cast<size_t>(e)]))
                spots.push_back(e);
        std::sort(spots.rbegin(), spots.rend());
        for (int e : spots)
            layers.push_back({Layer::Tok, e - r, token[static_cast<size_t>(e)],
                              Dir::Up, Dir::Up, e, e});
    }
    return layers;
}

std::vector<Layer> OrCategory::factorize(const Word& src, const Word& tgt,
                                         const OrDiagram& dg) const {
    const int r = static_cast<int>(src.size());
    auto dirAt = [&](int e) {
        return e < r ? src[static_cast<size_t>(e)] : tgt[static_cast<size_t>(e - r)];
    };
    auto skip = [&](int tok) { return AlgElem::basis(tok) == A_->unit(); };
    std::vector<Layer> layers = factorizeMatching(
        r, static_cast<int>(tgt.size()), dg.match, dg.token, skip);
    for (auto& l : layers) {
        l.dirA = dirAt(l.endA);
        l.dirB = dirAt(l.endB);
    }
    return layers;
}

std::string OrCategory::formatDiagram(const Word& src, const Word& tgt, const OrDiagram& dg) const {
    const int r = static_cast<int>(src.size());
    std::ostringstream os;
    os << "{src:\"" << formatWord(src) << "\",tgt:\"" << formatWord(tgt) << "\",match:[";
    bool first = true;
    for (int e = 0; e < static_cast<int>(dg.match.size()); ++e) {
        int o = dg.match[static_cast<size_t>(e)];
        if (o < e) continue;
        if (!first) os << ",";
        os << "[" << e + 1 << "," << o + 1 << "]";
        first = false;
    }
    os << "],tokens:{";
    first = true;
    for (int e = 0; e < static_cast<int>(dg.token.size()); ++e) {
        if (dg.token[static_cast<size_t>(e)] < 0) continue;
        if (!first) os << ",";
        os << e + 1 << ":\"" << A_->basisName(dg.token[static_cast<size_t>(e)]) << "\"";
        first = false;
    }
    (void)r;
    os << "}}";
    return os.str();
}

std::string OrCategory::formatMorphism(const OrMorphism& f) const {
    if (f.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : f.terms) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*" << formatDiagram(f.src, f.tgt, d);
        first = false;
    }
    return os.str();
}

} // namespace brauer
