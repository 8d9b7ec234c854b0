#include "brauer/incarnate.hpp"

#include <cassert>
#include <stdexcept>

namespace brauer {

LinearMap LinearMap::operator*(const LinearMap& o) const {
    if (cols != o.rows) throw std::invalid_argument("LinearMap: shape mismatch");
    LinearMap out(rows, o.cols);
    for (long c = 0; c < o.cols; ++c)
        for (const auto& [k, v] : o.col[static_cast<size_t>(c)])
            for (const auto& [r, w] : col[static_cast<size_t>(k)]) out.add(r, c, w * v);
    return out;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("LinearMap: shape mismatch");
    LinearMap out = *this;
    for (long c = 0; c < cols; ++c)
        for (const auto& [r, v] : o.col[static_cast<size_t>(c)]) out.add(r, c, v);
    return out;
}

LinearMap LinearMap::operator-(const LinearMap& o) const {
    if (rows != o.rows || cols != o.cols) throw std::invalid_argument("LinearMap: shape mismatch");
    LinearMap out = *this;
    for (long c = 0; c < cols; ++c)
        for (const auto& [r, v] : o.col[static_cast<size_t>(c)]) out.add(r, c, -v);
    return out;
}

LinearMap LinearMap::scaled(const Scalar& s) const {
    LinearMap out(rows, cols);
    if (s.isZero()) return out;
    for (long c = 0; c < cols; ++c)
        for (const auto& [r, v] : col[static_cast<size_t>(c)])
            out.col[static_cast<size_t>(c)].emplace(r, v * s);
    return out;
}

std::map<long, Scalar> LinearMap::flatten() const {
    std::map<long, Scalar> out;
    for (long c = 0; c < cols; ++c)
        for (const auto& [r, v] : col[static_cast<size_t>(c)]) out.emplace(r * cols + c, v);
    return out;
}

namespace {

using SparseVec = std::map<long, Scalar>;

long ipow(long base, int e) {
    long r = 1;
    while (e-- > 0) r *= base;
    return r;
}

Parity prefixParity(const GroundModule& V, long idx, int pos, int len) {
    Parity p;
    long rest = idx;
    for (int i = 0; i < len && i < pos; ++i) {
        long st = ipow(V.dim(), len - 1 - i);
        int d = static_cast<int>(rest / st);
        rest %= st;
        p += V.parity(d);
    }
    return p;
}

/// Applies a single-factor substitution at `pos`: digit d -> list of
/// (newDigit, coeff).  `mapParity` is the parity of the generator, used for
/// the Koszul sign against factors to the left.
SparseVec applyOne(const GroundModule& V, int len, int pos, Parity mapParity,
                   const std::function<void(int, std::vector<std::pair<int, Scalar>>&)>& img,
                   const SparseVec& in) {
    SparseVec out;
    long SP = ipow(V.dim(), len - 1 - pos);
    long D = V.dim();
    std::vector<std::pair<int, Scalar>> targets;
    for (const auto& [idx, v] : in) {
        int d = static_cast<int>((idx / SP) % D);
        long left = idx / (SP * D);
        long right = idx % SP;
        Scalar pref = v;
        if (mapParity.odd() && prefixParity(V, idx, pos, len).odd()) pref = -pref;
        targets.clear();
        img(d, targets);
        for (const auto& [z, c] : targets) {
            long nidx = left * SP * D + z * SP + right;
            Scalar add = pref * c;
            if (add.isZero()) continue;
            auto it = out.find(nidx);
            if (it == out.end()) out.emplace(nidx, add);
            else {
                it->second += add;
                if (it->second.isZero()) out.erase(it);
            }
        }
    }
    return out;
}

void accum(SparseVec& out, long idx, const Scalar& v) {
    if (v.isZero()) return;
    auto it = out.find(idx);
    if (it == out.end()) out.emplace(idx, v);
    else {
        it->second += v;
        if (it->second.isZero()) out.erase(it);
    }
}

} // namespace

// ---------------------------------------------------------------------------
// OrientedEvaluator
// ---------------------------------------------------------------------------

OrientedEvaluator::OrientedEvaluator(AlgebraPtr userAlgebra, Scalar d, int m, int n)
    : userA_(userAlgebra), B_(oppositeAlgebra(userAlgebra)),
      cat_(userAlgebra, d), V_{userAlgebra, m, n}, d_(std::move(d)), m_(m), n_(n) {}

TensorSpace OrientedEvaluator::space(const Word& w) const {
    TensorSpace sp;
    sp.V = V_;
    for (Dir d : w) sp.dual.push_back(d == Dir::Down);
    return sp;
}

LinearMap OrientedEvaluator::eval(const OrMorphism& f) const {
    if (d_ != Scalar(m_ - n_) && !userA_->supertraceIsZero())
        throw std::invalid_argument("eval: specialization parameter d must equal m-n");
    LinearMap out(space(f.tgt).dim(), space(f.src).dim());
    for (const auto& [dg, c] : f.terms) out = out + evalDiagram(f.src, f.tgt, dg).scaled(c);
    return out;
}

LinearMap OrientedEvaluator::evalDiagram(const Word& src, const Word& tgt,
                                         const OrDiagram& dg) const {
    const GroundModule& V = V_;
    const long D = V.dim();
    auto layers = cat_.factorize(src, tgt, dg);

    std::vector<bool> dual;
    for (Dir d : src) dual.push_back(d == Dir::Down);

    long srcDim = ipow(D, static_cast<int>(dual.size()));
    std::vector<SparseVec> cols(static_cast<size_t>(srcDim));
    for (long i = 0; i < srcDim; ++i) cols[static_cast<size_t>(i)][i] = Scalar(1);

    const auto& A = *userA_;
    const int da = A.dim();

    for (const auto& l : layers) {
        int len = static_cast<int>(dual.size());
        switch (l.kind) {
            case Layer::Tok: {
                int b = l.token;
                Parity pb = A.parity(b);
                bool isDual = dual[static_cast<size_t>(l.pos)];
                std::function<void(int, std::vector<std::pair<int, Scalar>>&)> img;
                if (!isDual) {
                    // v_{t,c} -> (-1)^{|b| p(t)} sum_z [b c]_z v_{t,z}
                    img = [&, b, pb](int d, std::vector<std::pair<int, Scalar>>& out) {
                        int t = V.frame(d), c = V.alg(d);
                        int sgn = (pb.odd() && blockParity(t, V.m).odd()) ? -1 : 1;
                        for (const auto& [z, v] : A.mulBasis(b, c).coeffs())
                            out.emplace_back(V.index(t, z), v * Scalar(sgn));
                    };
                } else {
                    // Down tokens are the cap-cup conjugates of up tokens;
                    // unwinding the conjugation gives
                    //   (u,c)* -> sum_e (-1)^{|b||c|} [b e]_c (u,e)*.
                    img = [&, b, pb](int d, std::vector<std::pair<int, Scalar>>& out) {
                        int u = V.frame(d), c = V.alg(d);
                        for (int e = 0; e < da; ++e) {
                            Scalar coeff = A.mulBasis(b, e).coeff(c);
                            if (coeff.isZero()) continue;
                            int sgn = koszul(pb, A.parity(c));
                            out.emplace_back(V.index(u, e), coeff * Scalar(sgn));
                        }
                    };
                }
                for (auto& cl : cols) cl = applyOne(V, len, l.pos, pb, img, cl);
                break;
            }
            case Layer::Cross: {
                long SP2 = ipow(D, len - 2 - l.pos);
                for (auto& cl : cols) {
                    SparseVec out;
                    for (const auto& [idx, v] : cl) {
                        int dp = static_cast<int>((idx / (SP2 * D)) % D);
                        int dq = static_cast<int>((idx / SP2) % D);
                        long left = idx / (SP2 * D * D);
                        long right = idx % SP2;
                        long nidx = left * SP2 * D * D + static_cast<long>(dq) * SP2 * D +
                                    static_cast<long>(dp) * SP2 + right;
                        Scalar nv = v;
                        if (koszul(V.parity(dp), V.parity(dq)) < 0) nv = -nv;
                        accum(out, nidx, nv);
                    }
                    cl = std::move(out);
                }
                std::swap(dual[static_cast<size_t>(l.pos)], dual[static_cast<size_t>(l.pos + 1)]);
                break;
            }
            case Layer::Cap: {
                bool leftDual = dual[static_cast<size_t>(l.pos)];
                bool rightDual = dual[static_cast<size_t>(l.pos + 1)];
                assert(leftDual != rightDual);
                (void)rightDual;
                long SP2 = ipow(D, len - 2 - l.pos);
                for (auto& cl : cols) {
                    SparseVec out;
                    for (const auto& [idx, v] : cl) {
                        int dp = static_cast<int>((idx / (SP2 * D)) % D);
                        int dq = static_cast<int>((idx / SP2) % D);
                        if (dp != dq) continue;
                        long left = idx / (SP2 * D * D);
                        long right = idx % SP2;
                        Scalar nv = v;
                        // ev acts on (f, v); ev after flip on (v, f) with a sign
                        if (!leftDual && V.parity(dp).odd()) nv = -nv;
                        accum(out, left * SP2 + right, nv);
                    }
                    cl = std::move(out);
                }
                dual.erase(dual.begin() + l.pos, dual.begin() + l.pos + 2);
                break;
            }
            case Layer::Cup: {
                bool cupLKind = l.dirA == Dir::Up; // inserts (V, V*); else (V*, V)
                long SP = ipow(D, len - l.pos);
                for (auto& cl : cols) {
                    SparseVec out;
                    for (const auto& [idx, v] : cl) {
                        long left = idx / SP;
                        long right = idx % SP;
                        for (long w = 0; w < D; ++w) {
                            long nidx = left * SP * D * D + w * SP * D + w * SP + right;
                            Scalar nv = v;
                            if (!cupLKind && V.parity(static_cast<int>(w)).odd()) nv = -nv;
                            accum(out, nidx, nv);
                        }
                    }
                    cl = std::move(out);
                }
                dual.insert(dual.begin() + l.pos, {!cupLKind, cupLKind});
                break;
            }
        }
    }

    std::vector<bool> want;
    for (Dir d : tgt) want.push_back(d == Dir::Down);
    assert(dual == want);
    long tgtDim = ipow(D, static_cast<int>(tgt.size()));
    LinearMap out(tgtDim, srcDim);
    for (long c = 0; c < srcDim; ++c)
        for (const auto& [r, v] : cols[static_cast<size_t>(c)]) out.add(r, c, v);
    return out;
}

std::vector<OrientedEvaluator::LieElement> OrientedEvaluator::glBasis() const {
    const auto& A = *userA_;
    const int da = A.dim();
    const int fr = m_ + n_;
    std::vector<LieElement> out;
    for (int s = 0; s < fr; ++s)
        for (int t = 0; t < fr; ++t)
            for (int b = 0; b < da; ++b) {
                LieElement X;
                X.par = blockParity(s, m_) + blockParity(t, m_) + A.parity(b);
                X.onModule = LinearMap(V_.dim(), V_.dim());
                // (E_{st} b^op) . v_{u,c} = delta_{tu} (-1)^{|b||c|} sum_z [c b]_z v_{s,z}
                for (int c = 0; c < da; ++c) {
                    int sgn = koszul(A.parity(b), A.parity(c));
                    for (const auto& [z, v] : A.mulBasis(c, b).coeffs())
                        X.onModule.add(V_.index(s, z), V_.index(t, c), v * Scalar(sgn));
                }
                out.push_back(std::move(X));
            }
    return out;
}

LinearMap OrientedEvaluator::actOnWord(const LieElement& X, const Word& w) const {
    TensorSpace sp = space(w);
    const int len = sp.len();
    long dim = sp.dim();
    LinearMap out(dim, dim);
    // transpose of the module action, for the dual factors
    LinearMap tr(V_.dim(), V_.dim());
    for (long c = 0; c < V_.dim(); ++c)
        for (const auto& [r, v] : X.onModule.col[static_cast<size_t>(c)]) tr.add(c, r, v);

    for (int i = 0; i < len; ++i) {
        bool isDual = sp.dual[static_cast<size_t>(i)];
        std::function<void(int, std::vector<std::pair<int, Scalar>>&)> img =
            [&, isDual](int d, std::vector<std::pair<int, Scalar>>& t) {
                if (!isDual) {
                    for (const auto& [r, v] : X.onModule.col[static_cast<size_t>(d)])
                        t.emplace_back(static_cast<int>(r), v);
                } else {
                    // (X f)(v) = -(-1)^{|X||f|} f(X v)
                    Scalar sgn(-1);
                    if (X.par.odd() && V_.parity(d).odd()) sgn = Scalar(1);
                    for (const auto& [r, v] : tr.col[static_cast<size_t>(d)])
                        t.emplace_back(static_cast<int>(r), v * sgn);
                }
            };
        for (long cidx = 0; cidx < dim; ++cidx) {
            SparseVec in{{cidx, Scalar(1)}};
            SparseVec res = applyOne(V_, len, i, X.par, img, in);
            for (const auto& [r, v] : res) out.add(r, cidx, v);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// UnorientedEvaluator
// ---------------------------------------------------------------------------

std::vector<std::vector<Scalar>> formDualBasis(const Mat& gram) {
    // v^vee = sum_a x_a e_a with sum_a x_a Phi(e_a, e_w) = delta_{vw},
    // i.e. x^T G = e_v^T, so x is row v of G^{-1}.
    Mat inv = inverse(gram);
    std::vector<std::vector<Scalar>> out;
    for (int v = 0; v < gram.rows(); ++v) {
        std::vector<Scalar> row(static_cast<size_t>(gram.cols()));
        for (int a = 0; a < gram.cols(); ++a) row[static_cast<size_t>(a)] = inv.at(v, a);
        out.push_back(std::move(row));
    }
    return out;
}

UnorientedEvaluator::UnorientedEvaluator(AlgebraPtr algebra, GroundForm form)
    : A_(std::move(algebra)), form_(std::move(form)) {}

TensorSpace UnorientedEvaluator::space(int len) const {
    TensorSpace sp;
    sp.V = form_.V;
    sp.dual.assign(static_cast<size_t>(len), false);
    return sp;
}

LinearMap UnorientedEvaluator::evalDiagram(int r, int s, const std::vector<int>& match,
                                           const std::vector<int>& token) const {
    const GroundModule& V = form_.V;
    const long D = V.dim();
    const auto& A = *A_;
    auto skip = [&](int tok) { return AlgElem::basis(tok) == A.unit(); };
    auto layers = factorizeMatching(r, s, match, token, skip);

    int len = r;
    long srcDim = ipow(D, r);
    std::vector<SparseVec> cols(static_cast<size_t>(srcDim));
    for (long i = 0; i < srcDim; ++i) cols[static_cast<size_t>(i)][i] = Scalar(1);

    Scalar nu(form_.nu);
    Parity sg = form_.sigma;

    for (const auto& l : layers) {
        switch (l.kind) {
            case Layer::Tok: {
                int b = l.token;
                Parity pb = A.parity(b);
                AlgElem binv = A.inv(AlgElem::basis(b));
                auto img = std::function<void(int, std::vector<std::pair<int, Scalar>>&)>(
                    [&, pb](int d, std::vector<std::pair<int, Scalar>>& out) {
                        // rho_{b^inv}: v -> (-1)^{|b||v|} v b^inv
                        int t = V.frame(d), c = V.alg(d);
                        int sgn = (pb.odd() && V.parity(d).odd()) ? -1 : 1;
                        for (const auto& [bb, vb] : binv.coeffs())
                            for (const auto& [z, v] : A.mulBasis(c, bb).coeffs())
                                out.emplace_back(V.index(t, z), v * vb * Scalar(sgn));
                    });
                for (auto& cl : cols) cl = applyOne(V, len, l.pos, pb, img, cl);
                break;
            }
            case Layer::Cross: {
                long SP2 = ipow(D, len - 2 - l.pos);
                for (auto& cl : cols) {
                    SparseVec out;
                    for (const auto& [idx, v] : cl) {
                        int dp = static_cast<int>((idx / (SP2 * D)) % D);
                        int dq = static_cast<int>((idx / SP2) % D);
                        long left = idx / (SP2 * D * D);
                        long right = idx % SP2;
                        long nidx = left * SP2 * D * D + static_cast<long>(dq) * SP2 * D +
                                    static_cast<long>(dp) * SP2 + right;
                        Scalar nv = v * nu;
                        if (koszul(V.parity(dp), V.parity(dq)) < 0) nv = -nv;
                        accum(out, nidx, nv);
                    }
                    cl = std::move(out);
                }
                break;
            }
            case Layer::Cap: {
                long SP2 = ipow(D, len - 2 - l.pos);
                for (auto& cl : cols) {
                    SparseVec out;
                    for (const auto& [idx, v] : cl) {
                        int dp = static_cast<int>((idx / (SP2 * D)) % D);
                        int dq = static_cast<int>((idx / SP2) % D);
                        Scalar phi = form_.gram.at(dp, dq);
                        if (phi.isZero()) continue;
                        long left = idx / (SP2 * D * D);
                        long right = idx % SP2;
                        Scalar nv = v * phi;
                        if (sg.odd() && prefixParity(V, idx, l.pos, len).odd()) nv = -nv;
                        accum(out, left * SP2 + right, nv);
                    }
                    cl = std::move(out);
                }
                len -= 2;
                break;
            }
            case Layer::Cup: {
                long SP = ipow(D, len - l.pos);
                for (auto& cl : cols) {
                    SparseVec out;
                    for (const auto& [idx, v] : cl) {
                        long left = idx / SP;
                        long right = idx % SP;
                        Scalar pref = v;
                        if (sg.odd() && prefixParity(V, idx, l.pos, len).odd()) pref = -pref;
                        for (long w = 0; w < D; ++w) {
                            Scalar c1 = pref;
                            if (sg.odd() && V.parity(static_cast<int>(w)).odd()) c1 = -c1;
                            const auto& dv = form_.dualVec[static_cast<size_t>(w)];
                            for (long z = 0; z < D; ++z) {
                                const Scalar& dz = dv[static_cast<size_t>(z)];
                                if (dz.isZero()) continue;
                                long nidx = left * SP * D * D + w * SP * D + z * SP + right;
                                accum(out, nidx, c1 * dz);
                            }
                        }
                    }
                    cl = std::move(out);
                }
                len += 2;
                break;
            }
        }
    }
    assert(len == s);
    long tgtDim = ipow(D, s);
    LinearMap out(tgtDim, srcDim);
    for (long c = 0; c < srcDim; ++c)
        for (const auto& [rr, v] : cols[static_cast<size_t>(c)]) out.add(rr, c, v);
    return out;
}

LinearMap UnorientedEvaluator::actOnPower(const LinearMap& onModule, Parity parX, int len) const {
    const GroundModule& V = form_.V;
    long dim = ipow(V.dim(), len);
    LinearMap out(dim, dim);
    auto img = std::function<void(int, std::vector<std::pair<int, Scalar>>&)>(
        [&](int d, std::vector<std::pair<int, Scalar>>& t) {
            for (const auto& [r, v] : onModule.col[static_cast<size_t>(d)])
                t.emplace_back(static_cast<int>(r), v);
        });
    for (int i = 0; i < len; ++i)
        for (long cidx = 0; cidx < dim; ++cidx) {
            SparseVec in{{cidx, Scalar(1)}};
            SparseVec res = applyOne(V, len, i, parX, img, in);
            for (const auto& [r, v] : res) out.add(r, cidx, v);
        }
    return out;
}

LinearMap UnorientedEvaluator::groupActOnPower(const LinearMap& g, int len) const {
    const GroundModule& V = form_.V;
    long dim = ipow(V.dim(), len);
    LinearMap out = LinearMap::identity(dim);
    auto img = std::function<void(int, std::vector<std::pair<int, Scalar>>&)>(
        [&](int d, std::vector<std::pair<int, Scalar>>& t) {
            for (const auto& [r, v] : g.col[static_cast<size_t>(d)])
                t.emplace_back(static_cast<int>(r), v);
        });
    for (int i = 0; i < len; ++i) {
        LinearMap step(dim, dim);
        for (long cidx = 0; cidx < dim; ++cidx) {
            SparseVec in{{cidx, Scalar(1)}};
            SparseVec res = applyOne(V, len, i, Even, img, in);
            for (const auto& [r, v] : res) step.add(r, cidx, v);
        }
        out = step * out;
    }
    return out;
}

} // namespace brauer
