#include "brauer/formslie.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace brauer {

namespace {

std::vector<int> parseInts(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == '|') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            cur += c;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("bad form parameter list '" + s + "'");
        }
    }
    if (!cur.empty()) out.push_back(std::stoi(cur));
    return out;
}

SuperMatrix diagForm(const AlgebraPtr& A, int m, int n, Parity par,
                     const std::vector<AlgElem>& diag) {
    SuperMatrix M(A, m, n, m, n, par);
    for (int i = 0; i < m + n; ++i) M.at(i, i) = diag[static_cast<size_t>(i)];
    return M;
}

} // namespace

FormSpec catalogForm(const std::string& name) {
    auto open = name.find('(');
    auto close = name.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw std::invalid_argument("form name must look like family(params): " + name);
    std::string family = name.substr(0, open);
    std::vector<int> a = parseInts(name.substr(open + 1, close - open - 1));

    FormSpec F;
    F.name = name;
    if (family == "osp") {
        if (a.size() != 3) throw std::invalid_argument("osp(p,q|2n)");
        int p = a[0], q = a[1], odd = a[2];
        if (odd % 2) throw std::invalid_argument("osp: odd dimension must be even");
        int half = odd / 2;
        F.algebra = makeAlgebra("R");
        F.m = p + q;
        F.n = odd;
        F.nu = 1;
        F.sigma = Even;
        SuperMatrix M(F.algebra, F.m, F.n, F.m, F.n, Even);
        for (int i = 0; i < p; ++i) M.at(i, i) = F.algebra->unit();
        for (int i = 0; i < q; ++i) M.at(p + i, p + i) = -F.algebra->unit();
        for (int i = 0; i < half; ++i) {
            M.at(F.m + i, F.m + half + i) = F.algebra->unit();
            M.at(F.m + half + i, F.m + i) = -F.algebra->unit();
        }
        F.gram = M;
    } else if (family == "u") {
        if (a.size() != 4) throw std::invalid_argument("u(p,q|r,s)");
        int p = a[0], q = a[1], r = a[2], s = a[3];
        F.algebra = makeAlgebra("C_real");
        F.m = p + q;
        F.n = r + s;
        F.nu = 1;
        F.sigma = Even;
        std::vector<AlgElem> diag;
        AlgElem one = F.algebra->unit();
        AlgElem iu = AlgElem::basis(F.algebra->basisIndex("i"));
        for (int k = 0; k < p; ++k) diag.push_back(one);
        for (int k = 0; k < q; ++k) diag.push_back(-one);
        for (int k = 0; k < r; ++k) diag.push_back(iu);
        for (int k = 0; k < s; ++k) diag.push_back(-iu);
        F.gram = diagForm(F.algebra, F.m, F.n, Even, diag);
    } else if (family == "osp*") {
        if (a.size() != 3) throw std::invalid_argument("osp*(n|p,q)");
        int nn = a[0], p = a[1], q = a[2];
        F.algebra = makeAlgebra("H");
        F.m = p + q;
        F.n = nn;
        F.nu = 1;
        F.sigma = Even;
        std::vector<AlgElem> diag;
        AlgElem one = F.algebra->unit();
        AlgElem ju = AlgElem::basis(F.algebra->basisIndex("j"));
        for (int k = 0; k < p; ++k) diag.push_back(one);
        for (int k = 0; k < q; ++k) diag.push_back(-one);
        for (int k = 0; k < nn; ++k) diag.push_back(ju);
        F.gram = diagForm(F.algebra, F.m, F.n, Even, diag);
    } else if (family == "uq") {
        if (a.size() != 2) throw std::invalid_argument("uq(p,q)");
        int p = a[0], q = a[1];
        F.algebra = makeAlgebra("ClC_real");
        F.m = p + q;
        F.n = 0;
        F.nu = 1;
        F.sigma = Even;
        std::vector<AlgElem> diag;
        for (int k = 0; k < p; ++k) diag.push_back(F.algebra->unit());
        for (int k = 0; k < q; ++k) diag.push_back(-F.algebra->unit());
        F.gram = diagForm(F.algebra, F.m, F.n, Even, diag);
    } else if (family == "periplectic") {
        if (a.size() != 2) throw std::invalid_argument("periplectic(m,nu)");
        int mm = a[0];
        F.nu = a[1];
        if (F.nu != 1 && F.nu != -1) throw std::invalid_argument("periplectic nu must be +-1");
        F.algebra = makeAlgebra("R");
        F.m = mm;
        F.n = mm;
        F.sigma = Odd;
        SuperMatrix M(F.algebra, mm, mm, mm, mm, Odd);
        for (int i = 0; i < mm; ++i) {
            M.at(i, mm + i) = F.algebra->unit();
            M.at(mm + i, i) = F.algebra->unit() * Scalar(-F.nu);
        }
        F.gram = M;
    } else if (family == "osp_C") {
        if (a.size() != 2) throw std::invalid_argument("osp_C(m|2n)");
        int mm = a[0], odd = a[1];
        if (odd % 2) throw std::invalid_argument("osp_C: odd dimension must be even");
        int half = odd / 2;
        F.algebra = makeAlgebra("C_cplx");
        F.m = mm;
        F.n = odd;
        F.nu = 1;
        F.sigma = Even;
        SuperMatrix M(F.algebra, F.m, F.n, F.m, F.n, Even);
        for (int i = 0; i < mm; ++i) M.at(i, i) = F.algebra->unit();
        for (int i = 0; i < half; ++i) {
            M.at(mm + i, mm + half + i) = F.algebra->unit();
            M.at(mm + half + i, mm + i) = -F.algebra->unit();
        }
        F.gram = M;
    } else {
        throw std::invalid_argument("unknown form family '" + family + "'");
    }
    if (!dropCriterion(F))
        throw std::logic_error("catalog form fails the superhermitian criterion: " + name);
    return F;
}

std::vector<std::string> catalogFormExamples() {
    return {"osp(p,q|2n)", "u(p,q|r,s)", "osp*(n|p,q)", "uq(p,q)", "periplectic(m,nu)",
            "osp_C(m|2n)"};
}

SuperMatrix signatureMatrix(const AlgebraPtr& A, int m, int n) {
    SuperMatrix S(A, m, n, m, n, Even);
    for (int i = 0; i < m; ++i) S.at(i, i) = A->unit();
    for (int i = 0; i < n; ++i) S.at(m + i, m + i) = -A->unit();
    return S;
}

bool dropCriterion(const FormSpec& F) {
    SuperMatrix S = signatureMatrix(F.algebra, F.m, F.n);
    SuperMatrix lhs = F.gram.sharp();
    SuperMatrix rhs = (F.gram * S).scaled(Scalar(F.nu * (F.sigma.odd() ? -1 : 1)));
    return lhs == rhs;
}

SuperMatrix dagger(const SuperMatrix& X, const FormSpec& F) {
    SuperMatrix S = signatureMatrix(F.algebra, F.m, F.n);
    SuperMatrix MS = F.gram.sharp() * S;
    return MS.inverseMatrix() * X.sharp() * MS;
}

GroundForm groundForm(const FormSpec& F) {
    GroundForm g;
    g.V = GroundModule{F.algebra, F.m, F.n};
    g.sigma = F.sigma;
    g.nu = F.nu;
    const auto& A = *F.algebra;
    const int D = g.V.dim();
    g.gram = Mat(D, D);
    for (int sIdx = 0; sIdx < F.m + F.n; ++sIdx)
        for (int c = 0; c < A.dim(); ++c)
            for (int tIdx = 0; tIdx < F.m + F.n; ++tIdx)
                for (int b = 0; b < A.dim(); ++b) {
                    const AlgElem& M = F.gram.at(sIdx, tIdx);
                    if (M.isZero()) continue;
                    // v^sharp picks up (-1)^{|v|} on the odd block
                    AlgElem val = A.mul(A.star(AlgElem::basis(c)), A.mul(M, AlgElem::basis(b)));
                    Scalar tau = A.tau(val);
                    if (blockParity(sIdx, F.m).odd() &&
                        (Parity(1) + A.parity(c)).odd())
                        tau = -tau;
                    g.gram.at(g.V.index(sIdx, c), g.V.index(tIdx, b)) = tau;
                }
    g.dualVec = formDualBasis(g.gram);
    return g;
}

LieBasis lieBasis(const FormSpec& F) {
    const auto& A = *F.algebra;
    const int fr = F.m + F.n;
    const int da = A.dim();
    LieBasis out;
    for (int parity = 0; parity < 2; ++parity) {
        // unknowns: entries (r, s, b) with p(r)+p(s)+|b| = parity
        std::vector<std::tuple<int, int, int>> unknowns;
        for (int r = 0; r < fr; ++r)
            for (int s = 0; s < fr; ++s)
                for (int b = 0; b < da; ++b)
                    if ((blockParity(r, F.m) + blockParity(s, F.m) + A.parity(b)).value() == parity)
                        unknowns.emplace_back(r, s, b);
        if (unknowns.empty()) continue;
        // constraint: dagger(X) + X = 0, entrywise over the ground field
        Mat C(fr * fr * da, static_cast<int>(unknowns.size()));
        for (size_t u = 0; u < unknowns.size(); ++u) {
            auto [r, s, b] = unknowns[u];
            SuperMatrix E(F.algebra, F.m, F.n, F.m, F.n, Parity(parity));
            E.at(r, s) = AlgElem::basis(b);
            SuperMatrix DE = dagger(E, F) + E;
            for (int i = 0; i < fr; ++i)
                for (int j = 0; j < fr; ++j)
                    for (const auto& [z, v] : DE.at(i, j).coeffs())
                        C.at((i * fr + j) * da + z, static_cast<int>(u)) += v;
        }
        auto null = nullspace(C);
        for (const auto& vec : null) {
            SuperMatrix X(F.algebra, F.m, F.n, F.m, F.n, Parity(parity));
            for (size_t u = 0; u < unknowns.size(); ++u) {
                auto [r, s, b] = unknowns[u];
                X.at(r, s).add(b, vec[u]);
            }
            out.elements.push_back(std::move(X));
            out.parities.push_back(Parity(parity));
            (parity == 0 ? out.dimEven : out.dimOdd)++;
        }
    }
    return out;
}

std::vector<SuperMatrix> groupComponents(const FormSpec& F) {
    std::vector<SuperMatrix> out;
    std::string fam = F.name.substr(0, F.name.find('('));
    auto reflect = [&](std::vector<int> flips) {
        SuperMatrix R = SuperMatrix::identity(F.algebra, F.m, F.n);
        for (int i : flips) R.at(i, i) = -F.algebra->unit();
        return R;
    };
    if (fam == "osp") {
        std::vector<int> a = parseInts(F.name.substr(F.name.find('(') + 1,
                                                     F.name.rfind(')') - F.name.find('(') - 1));
        int p = a[0], q = a[1];
        if (p >= 1 && q >= 1) {
            out.push_back(reflect({0}));
            out.push_back(reflect({p}));
            out.push_back(reflect({0, p}));
        } else if (p + q >= 1) {
            out.push_back(reflect({0}));
        }
    } else if (fam == "osp_C") {
        if (F.m >= 1) out.push_back(reflect({0}));
    }
    // u, uq, periplectic, osp*: connected real groups, no representatives.
    return out;
}

LinearMap groundAction(const FormSpec& F, const SuperMatrix& X) {
    const auto& A = *F.algebra;
    GroundModule V{F.algebra, F.m, F.n};
    LinearMap out(V.dim(), V.dim());
    for (int t = 0; t < F.m + F.n; ++t)
        for (int c = 0; c < A.dim(); ++c)
            for (int s = 0; s < F.m + F.n; ++s) {
                const AlgElem& x = X.at(s, t);
                if (x.isZero()) continue;
                AlgElem prod = A.mul(x, AlgElem::basis(c));
                for (const auto& [z, v] : prod.coeffs()) out.add(V.index(s, z), V.index(t, c), v);
            }
    return out;
}

namespace {

HomBasis solveEquivariant(long srcDim, long tgtDim,
                          const std::function<Parity(long)>& srcParity,
                          const std::function<Parity(long)>& tgtParity,
                          const std::vector<std::pair<LinearMap, Parity>>& lieSrc,
                          const std::vector<std::pair<LinearMap, Parity>>& lieTgt,
                          const std::vector<std::pair<LinearMap, LinearMap>>& reps) {
    HomBasis out;
    out.srcDim = srcDim;
    out.tgtDim = tgtDim;
    for (int tpar = 0; tpar < 2; ++tpar) {
        std::vector<std::pair<long, long>> unknowns; // (row, col)
        std::map<std::pair<long, long>, int> idx;
        for (long rIdx = 0; rIdx < tgtDim; ++rIdx)
            for (long cIdx = 0; cIdx < srcDim; ++cIdx)
                if ((tgtParity(rIdx) + srcParity(cIdx)).value() == tpar) {
                    idx[{rIdx, cIdx}] = static_cast<int>(unknowns.size());
                    unknowns.emplace_back(rIdx, cIdx);
                }
        if (unknowns.empty()) continue;
        std::vector<std::map<int, Scalar>> rows;
        auto addConstraintMatrix = [&](const LinearMap& S, const LinearMap& T, int sgn) {
            // T_equiv * S - sgn * T * T_equiv = 0; one row per (row, col) of the result
            std::map<std::pair<long, long>, std::map<int, Scalar>> rowAcc;
            // T_equiv * S: entry (r, c) = sum_k T_equiv[r,k] S[k,c]
            for (long c = 0; c < S.cols; ++c)
                for (const auto& [k, sv] : S.col[static_cast<size_t>(c)])
                    for (long r = 0; r < tgtDim; ++r) {
                        auto it = idx.find({r, k});
                        if (it == idx.end()) continue;
                        rowAcc[{r, c}][it->second] += sv;
                    }
            // sgn * T * T_equiv: entry (r, c) = sum_k T[r,k] T_equiv[k,c]
            for (long k = 0; k < T.cols; ++k)
                for (const auto& [r, tv] : T.col[static_cast<size_t>(k)])
                    for (long c = 0; c < srcDim; ++c) {
                        auto it = idx.find({k, c});
                        if (it == idx.end()) continue;
                        rowAcc[{r, c}][it->second] -= tv * Scalar(sgn);
                    }
            for (auto& [rc, row] : rowAcc) {
                std::map<int, Scalar> clean;
                for (auto& [u, v] : row)
                    if (!v.isZero()) clean.emplace(u, v);
                if (!clean.empty()) rows.push_back(std::move(clean));
            }
        };
        for (size_t k = 0; k < lieSrc.size(); ++k) {
            int sgn = koszul(Parity(tpar), lieSrc[k].second);
            addConstraintMatrix(lieSrc[k].first, lieTgt[k].first, sgn);
        }
        for (const auto& [gS, gT] : reps) addConstraintMatrix(gS, gT, 1);

        Mat C(static_cast<int>(rows.size()), static_cast<int>(unknowns.size()));
        for (size_t rIdx = 0; rIdx < rows.size(); ++rIdx)
            for (const auto& [u, v] : rows[rIdx]) C.at(static_cast<int>(rIdx), u) = v;
        auto null = nullspace(C);
        for (const auto& vec : null) {
            LinearMap T(tgtDim, srcDim);
            for (size_t u = 0; u < unknowns.size(); ++u)
                T.add(unknowns[u].first, unknowns[u].second, vec[u]);
            (tpar == 0 ? out.even : out.odd).push_back(std::move(T));
        }
    }
    return out;
}

} // namespace

HomBasis equivariantHoms(const FormSpec& F, int r, int s) {
    GroundForm g = groundForm(F);
    UnorientedEvaluator ev(F.algebra, g);
    LieBasis lie = lieBasis(F);
    TensorSpace srcSp = ev.space(r), tgtSp = ev.space(s);

    std::vector<std::pair<LinearMap, Parity>> lieSrc, lieTgt;
    for (size_t k = 0; k < lie.elements.size(); ++k) {
        LinearMap onV = groundAction(F, lie.elements[k]);
        lieSrc.emplace_back(ev.actOnPower(onV, lie.parities[k], r), lie.parities[k]);
        lieTgt.emplace_back(ev.actOnPower(onV, lie.parities[k], s), lie.parities[k]);
    }
    std::vector<std::pair<LinearMap, LinearMap>> reps;
    for (const auto& R : groupComponents(F)) {
        LinearMap onV = groundAction(F, R);
        reps.emplace_back(ev.groupActOnPower(onV, r), ev.groupActOnPower(onV, s));
    }
    auto srcParity = [&](long i) { return srcSp.parity(i); };
    auto tgtParity = [&](long i) { return tgtSp.parity(i); };
    return solveEquivariant(srcSp.dim(), tgtSp.dim(), srcParity, tgtParity, lieSrc, lieTgt, reps);
}

HomBasis glEquivariantHoms(const AlgebraPtr& A, int m, int n, const Word& src, const Word& tgt) {
    OrientedEvaluator ev(A, Scalar(m - n), m, n);
    auto gl = ev.glBasis();
    TensorSpace srcSp = ev.space(src), tgtSp = ev.space(tgt);
    std::vector<std::pair<LinearMap, Parity>> lieSrc, lieTgt;
    for (const auto& X : gl) {
        lieSrc.emplace_back(ev.actOnWord(X, src), X.par);
        lieTgt.emplace_back(ev.actOnWord(X, tgt), X.par);
    }
    auto srcParity = [&](long i) { return srcSp.parity(i); };
    auto tgtParity = [&](long i) { return tgtSp.parity(i); };
    return solveEquivariant(srcSp.dim(), tgtSp.dim(), srcParity, tgtParity, lieSrc, lieTgt, {});
}

SpanReport spanningCheck(const UnCategory& U, const FormSpec& F, int r, int s) {
    GroundForm g = groundForm(F);
    UnorientedEvaluator ev(F.algebra, g);
    auto basis = U.enumerateBasis(r, s);
    SparseRank rk;
    for (const auto& d : basis) {
        LinearMap img = ev.evalDiagram(r, s, d.match, d.token);
        auto flat = img.flatten();
        std::map<long, Scalar> row(flat.begin(), flat.end());
        rk.add(std::move(row));
    }
    HomBasis hom = equivariantHoms(F, r, s);
    SpanReport rep;
    rep.rank = rk.rank();
    rep.dim = hom.dim();
    rep.kernelDim = static_cast<long>(basis.size()) - rep.rank;
    rep.ok = rep.rank == rep.dim;
    return rep;
}

SpanReport spanningCheckOriented(const OrCategory& C, int m, int n, const Word& src,
                                 const Word& tgt) {
    OrientedEvaluator ev(C.algebra(), C.d(), m, n);
    auto basis = C.enumerateBasis(src, tgt);
    SparseRank rk;
    for (const auto& d : basis) {
        LinearMap img = ev.evalDiagram(src, tgt, d);
        auto flat = img.flatten();
        std::map<long, Scalar> row(flat.begin(), flat.end());
        rk.add(std::move(row));
    }
    HomBasis hom = glEquivariantHoms(C.algebra(), m, n, src, tgt);
    SpanReport rep;
    rep.rank = rk.rank();
    rep.dim = hom.dim();
    rep.kernelDim = static_cast<long>(basis.size()) - rep.rank;
    rep.ok = rep.rank == rep.dim;
    return rep;
}

std::map<long, Scalar> butteVectors(const FormSpec& F, const GroundForm& g, int r,
                                    const UnDiagram& f) {
    const GroundModule& V = g.V;
    // strand list ordered by right endpoint
    std::vector<std::pair<int, int>> st; // (left, right)
    for (int e = 0; e < r; ++e) {
        int o = f.match[static_cast<size_t>(e)];
        if (e < o) st.emplace_back(e, o);
    }
    std::sort(st.begin(), st.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    if (static_cast<int>(st.size()) > F.m + F.n)
        throw std::invalid_argument("butteVectors: not enough frame vectors");
    // v_i = e_j at right endpoints, (e_j b_j)^vee at left endpoints
    std::vector<std::vector<Scalar>> factors(static_cast<size_t>(r));
    for (size_t j = 0; j < st.size(); ++j) {
        auto [le, re] = st[j];
        int bj = f.token[static_cast<size_t>(strandSpot(f.match, r, le))];
        std::vector<Scalar> eJ(static_cast<size_t>(V.dim()));
        eJ[static_cast<size_t>(V.index(static_cast<int>(j), 0))] = Scalar(1);
        factors[static_cast<size_t>(re)] = eJ;
        factors[static_cast<size_t>(le)] =
            g.dualVec[static_cast<size_t>(V.index(static_cast<int>(j), bj))];
    }
    // assemble the tensor as a sparse column over the power space
    std::map<long, Scalar> vec{{0, Scalar(1)}};
    for (int i = 0; i < r; ++i) {
        std::map<long, Scalar> next;
        for (const auto& [idx, v] : vec)
            for (int z = 0; z < V.dim(); ++z) {
                const Scalar& c = factors[static_cast<size_t>(i)][static_cast<size_t>(z)];
                if (c.isZero()) continue;
                next[idx * V.dim() + z] += v * c;
            }
        vec = std::move(next);
    }
    return vec;
}

ButteReport butteCheck(const UnCategory& U, const FormSpec& F, int r, int s) {
    ButteReport rep;
    rep.hypothesis = 2 * (F.m + F.n) >= r + s;
    GroundForm g = groundForm(F);
    UnorientedEvaluator ev(F.algebra, g);
    GroundModule V = g.V;
    (void)V;

    // delta pairing on Hom(go^{r+s}, 1)
    int R = r + s;
    auto basisClosed = U.enumerateBasis(R, 0);
    rep.basisCount = static_cast<long>(basisClosed.size());
    if (R % 2 == 0 && R > 0) {
        bool delta = true;
        // need at least one frame vector per strand
        if (F.m + F.n >= R / 2) {
            std::vector<std::map<long, Scalar>> vecs;
            for (const auto& d : basisClosed) vecs.push_back(butteVectors(F, g, R, d));
            for (size_t a = 0; a < basisClosed.size() && delta; ++a) {
                LinearMap img = ev.evalDiagram(R, 0, basisClosed[a].match, basisClosed[a].token);
                for (size_t b = 0; b < basisClosed.size() && delta; ++b) {
                    Scalar val;
                    for (const auto& [idx, v] : vecs[b]) val += img.at(0, idx) * v;
                    if (a == b) {
                        if (val != Scalar(1) && val != Scalar(-1)) delta = false;
                    } else if (!val.isZero()) {
                        delta = false;
                    }
                }
            }
            rep.deltaPairing = delta;
        }
    }

    // independence of the (r, s) images
    auto basis = U.enumerateBasis(r, s);
    SparseRank rk;
    for (const auto& d : basis) {
        auto flat = ev.evalDiagram(r, s, d.match, d.token).flatten();
        std::map<long, Scalar> row(flat.begin(), flat.end());
        rk.add(std::move(row));
    }
    rep.rank = rk.rank();
    rep.independent = rep.rank == static_cast<long>(basis.size());
    return rep;
}

PhiJReport phiJIdentities(const FormSpec& F) {
    if (F.algebra->name() != "H")
        throw std::invalid_argument("phiJIdentities: quaternionic forms only");
    const auto& A = *F.algebra;
    GroundModule V{F.algebra, F.m, F.n};
    int iB = A.basisIndex("i"), jB = A.basisIndex("j"), kB = A.basisIndex("k");
    int oneB = A.basisIndex("1");

    // phi(v, w) = v^sharp M w as an algebra element on ground basis vectors
    auto phi = [&](int v, int w) {
        int sF = V.frame(v), tF = V.frame(w);
        const AlgElem& M = F.gram.at(sF, tF);
        AlgElem val = A.mul(A.star(AlgElem::basis(V.alg(v))), A.mul(M, AlgElem::basis(V.alg(w))));
        if (blockParity(sF, F.m).odd() && (Parity(1) + A.parity(V.alg(v))).odd()) val = -val;
        return val;
    };
    auto phi1 = [&](const AlgElem& x) { return Scalar(x.coeff(oneB).re(), x.coeff(iB).re()); };
    auto phij = [&](const AlgElem& x) { return Scalar(x.coeff(jB).re(), -x.coeff(kB).re()); };
    // right multiplication by j on ground indices: (t, b) -> (t, b j)
    auto timesJ = [&](int v) {
        AlgElem bj = A.mul(AlgElem::basis(V.alg(v)), AlgElem::basis(jB));
        // products of basis quaternions are +- a basis element
        auto [z, c] = *bj.coeffs().begin();
        return std::make_pair(V.index(V.frame(v), z), c);
    };

    PhiJReport rep;
    rep.boar = rep.rabbit = rep.supersymmetric = rep.house = true;
    for (int v = 0; v < V.dim(); ++v)
        for (int w = 0; w < V.dim(); ++w) {
            AlgElem p = phi(v, w);
            auto [vj, cv] = timesJ(v);
            auto [wj, cw] = timesJ(w);
            AlgElem pvj = phi(vj, w) * cv;
            AlgElem pwj = phi(v, wj) * cw;
            if (phij(pvj) != -phi1(p)) rep.boar = false;
            if (phi1(pvj) != phij(p)) rep.boar = false;
            if (phij(pwj) != phi1(p).conj()) rep.rabbit = false;
            if (phi1(pwj) != -phij(p).conj()) rep.rabbit = false;
            // (-nu, id)-supersymmetric
            AlgElem q = phi(w, v);
            Scalar rhs = phij(q) * Scalar(-F.nu);
            if (koszul(V.parity(v), V.parity(w)) < 0) rhs = -rhs;
            if (phij(p) != rhs) rep.supersymmetric = false;
            // house: phi^j(v, wj) - phi^j(vj, w) = 2 RP phi(v, w)
            Scalar lhs = phij(pwj) - phij(pvj);
            if (lhs != Scalar(p.coeff(oneB).re()) * Scalar(2)) rep.house = false;
        }

    // nondegeneracy: Gram of phi^j on the C-basis {e_t, e_t j}
    int half = 2 * (F.m + F.n);
    Mat G(half, half);
    auto cIdx = [&](int k) { return k % 2 == 0 ? V.index(k / 2, oneB) : V.index(k / 2, jB); };
    for (int a = 0; a < half; ++a)
        for (int b = 0; b < half; ++b) G.at(a, b) = phij(phi(cIdx(a), cIdx(b)));
    rep.nondegenerate = rank(G) == half;
    return rep;
}

long unitaryWeightOracle(int m, int r, int s) {
    // components of (V + V*)^{tensor r} indexed by the number of V factors;
    // Hom_{gl(m)}(W_a, W_b) has dimension p! for balanced degree p <= m and
    // vanishes otherwise (classical GL invariant counting).
    auto fact = [](int k) {
        long f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    long total = 0;
    for (int a = 0; a <= r; ++a)
        for (int b = 0; b <= s; ++b) {
            int balA = 2 * a - r, balB = 2 * b - s;
            if (balA != balB) continue;
            // invariants of V^{p} (V*)^{p} with p = a + (s - b)
            int p = a + (s - b);
            if (p > m) throw std::logic_error("unitaryWeightOracle: degree exceeds m");
            long choose = 1;
            // number of components with a V's among r factors times b V's among s
            auto binom = [](int nn, int kk) {
                long c = 1;
                for (int i = 0; i < kk; ++i) c = c * (nn - i) / (i + 1);
                return c;
            };
            choose = binom(r, a) * binom(s, b);
            total += choose * fact(p);
        }
    return total;
}

} // namespace brauer
