// brauercat: exact computations in oriented and unoriented Frobenius Brauer
// supercategories and their incarnation superfunctors.

#include "brauer/expr.hpp"
#include "brauer/formslie.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace brauer;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string category = "unoriented"; // oriented | unoriented
    std::string algebra = "R";
    int sigma = 0;
    std::string d = "0";
    std::string form;
};

Scalar parseRational(const std::string& text) {
    mpq_class q(text);
    q.canonicalize();
    return Scalar(q);
}

void loadConfigFile(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string t) {
            size_t a = t.find_first_not_of(" \t");
            size_t b = t.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : t.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "category") cfg.category = val;
        else if (key == "algebra") cfg.algebra = val;
        else if (key == "sigma") cfg.sigma = std::stoi(val);
        else if (key == "d") cfg.d = val;
        else if (key == "form") cfg.form = val;
        else throw std::runtime_error("unknown config key '" + key + "'");
    }
}

json diagramJsonOr(const OrCategory& C, const Word& src, const Word& tgt, const OrDiagram& d) {
    json m = json::array();
    for (int e = 0; e < static_cast<int>(d.match.size()); ++e)
        if (d.match[static_cast<size_t>(e)] > e)
            m.push_back({e + 1, d.match[static_cast<size_t>(e)] + 1});
    json toks = json::object();
    for (int e = 0; e < static_cast<int>(d.token.size()); ++e)
        if (d.token[static_cast<size_t>(e)] >= 0)
            toks[std::to_string(e + 1)] = C.algebra()->basisName(d.token[static_cast<size_t>(e)]);
    return json{{"src", formatWord(src)}, {"tgt", formatWord(tgt)}, {"match", m},
                {"tokens", toks}};
}

json diagramJsonUn(const UnCategory& U, int r, int s, const UnDiagram& d) {
    json m = json::array();
    for (int e = 0; e < r + s; ++e)
        if (d.match[static_cast<size_t>(e)] > e)
            m.push_back({e + 1, d.match[static_cast<size_t>(e)] + 1});
    json toks = json::object();
    for (int e = 0; e < r + s; ++e)
        if (d.token[static_cast<size_t>(e)] >= 0)
            toks[std::to_string(e + 1)] = U.algebra()->basisName(d.token[static_cast<size_t>(e)]);
    return json{{"r", r}, {"s", s}, {"match", m}, {"tokens", toks}};
}

json linearMapJson(const LinearMap& m, Parity par) {
    json entries = json::array();
    for (long c = 0; c < m.cols; ++c)
        for (const auto& [r, v] : m.col[static_cast<size_t>(c)])
            entries.push_back({r, c, v.str()});
    return json{{"schema", 1}, {"rows", m.rows}, {"cols", m.cols},
                {"parity", par.value()}, {"entries", entries}};
}

struct RelationCheck {
    std::string name;
    bool ok;
};

std::vector<RelationCheck> relationSuiteOriented(const OrCategory& C) {
    std::vector<RelationCheck> out;
    const auto& A = *C.algebra();
    Word u{Dir::Up}, dn{Dir::Down};
    OrMorphism x = C.cross(Dir::Up, Dir::Up);
    auto push = [&](const std::string& nm, bool ok) { out.push_back({nm, ok}); };
    push("cross.involution", C.compose(x, x) == C.idMorphism({Dir::Up, Dir::Up}));
    OrMorphism x12 = C.tensor(x, C.idMorphism(u)), x23 = C.tensor(C.idMorphism(u), x);
    push("cross.braid",
         C.compose(x12, C.compose(x23, x12)) == C.compose(x23, C.compose(x12, x23)));
    bool tokSlide = true, tokMerge = true, zig = true, bubble = true;
    for (int b = 0; b < A.dim(); ++b) {
        AlgElem a = AlgElem::basis(b);
        tokSlide = tokSlide &&
                   C.compose(x, C.tensor(C.token(a, Dir::Up), C.idMorphism(u))) ==
                       C.compose(C.tensor(C.idMorphism(u), C.token(a, Dir::Up)), x);
        for (int c = 0; c < A.dim(); ++c)
            tokMerge = tokMerge &&
                       C.compose(C.token(a, Dir::Up), C.token(AlgElem::basis(c), Dir::Up)) ==
                           C.token(A.mul(a, AlgElem::basis(c)), Dir::Up);
        OrMorphism bub = C.compose(
            C.capL(), C.compose(C.tensor(C.idMorphism(dn), C.token(a, Dir::Up)), C.cupR()));
        bubble = bubble && bub == C.idMorphism({}) * (C.d() * A.supertrace(a));
    }
    push("token.slide", tokSlide);
    push("token.merge", tokMerge);
    zig = C.compose(C.tensor(C.capL(), C.idMorphism(dn)), C.tensor(C.idMorphism(dn), C.cupL())) ==
              C.idMorphism(dn) &&
          C.compose(C.tensor(C.idMorphism(u), C.capL()), C.tensor(C.cupL(), C.idMorphism(u))) ==
              C.idMorphism(u) &&
          C.compose(C.tensor(C.idMorphism(dn), C.capR()), C.tensor(C.cupR(), C.idMorphism(dn))) ==
              C.idMorphism(dn) &&
          C.compose(C.tensor(C.capR(), C.idMorphism(u)), C.tensor(C.idMorphism(u), C.cupR())) ==
              C.idMorphism(u);
    push("zigzags", zig);
    push("bubble", bubble);
    push("flippy", C.cupR() == C.compose(C.cross(Dir::Up, Dir::Down), C.cupL()) &&
                       C.capR() == C.compose(C.capL(), C.cross(Dir::Up, Dir::Down)));
    return out;
}

std::vector<RelationCheck> relationSuiteUnoriented(const UnCategory& U) {
    std::vector<RelationCheck> out;
    const auto& A = *U.algebra();
    int sg = U.sigma().value();
    UnMorphism id1 = U.idMorphism(1), x = U.cross();
    auto push = [&](const std::string& nm, bool ok) { out.push_back({nm, ok}); };
    push("cross.involution", U.compose(x, x) == U.idMorphism(2));
    UnMorphism x12 = U.tensor(x, id1), x23 = U.tensor(id1, x);
    push("cross.braid",
         U.compose(x12, U.compose(x23, x12)) == U.compose(x23, U.compose(x12, x23)));
    UnMorphism zigR = U.compose(U.tensor(id1, U.cap()), U.tensor(U.cup(), id1));
    UnMorphism zigL = U.compose(U.tensor(U.cap(), id1), U.tensor(id1, U.cup()));
    push("zigzag.right", zigR == id1);
    push("zigzag.left", zigL == (sg ? -id1 : id1));
    push("cap.cross", U.compose(U.cap(), x) == U.cap());
    push("cup.twist", U.compose(x, U.cup()) == (sg ? -U.cup() : U.cup()));
    bool tokCap = true, tokMerge = true, bubbles = true;
    for (int b = 0; b < A.dim(); ++b) {
        AlgElem a = AlgElem::basis(b);
        tokCap = tokCap && U.compose(U.cap(), U.tensor(U.token(a), id1)) ==
                               U.compose(U.cap(), U.tensor(id1, U.token(A.inv(a))));
        for (int c = 0; c < A.dim(); ++c)
            tokMerge = tokMerge && U.compose(U.token(a), U.token(AlgElem::basis(c))) ==
                                       U.token(A.mul(a, AlgElem::basis(c)));
        UnMorphism bub = U.compose(U.cap(), U.compose(U.tensor(id1, U.token(a)), U.cup()));
        Scalar val = bub.terms.empty() ? Scalar() : bub.terms.begin()->second;
        bubbles = bubbles && val == U.d() * A.supertrace(a);
    }
    push("token.cap", tokCap);
    push("token.merge", tokMerge);
    push("bubble", bubbles);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Frobenius Brauer supercategory calculator"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string configPath;
    app.add_option("--config", configPath, "key = value configuration file");
    app.add_option("--category", cfg.category, "oriented | unoriented");
    app.add_option("--algebra", cfg.algebra, "catalog algebra name");
    app.add_option("--sigma", cfg.sigma, "cup/cap parity (unoriented)");
    app.add_option("--d", cfg.d, "specialization parameter (rational)");

    std::string exprText, formName, wordX, wordY;
    int argR = 0, argS = 0, argM = 0, argN = 0;
    bool haveGlmn = false;

    auto* normalize = app.add_subcommand("normalize", "normal form of an expression");
    normalize->add_option("expr", exprText)->required();

    auto* dimhom = app.add_subcommand("dim-hom", "dimension of a hom space");
    dimhom->add_option("X", wordX)->required();
    dimhom->add_option("Y", wordY)->required();

    auto* evalCmd = app.add_subcommand("eval", "evaluate through an incarnation superfunctor");
    evalCmd->add_option("expr", exprText)->required();
    evalCmd->add_option("--form", formName, "catalog form (unoriented)");
    auto* glmnOpt = evalCmd->add_option("--glmn", [&](const std::vector<std::string>& v) {
        if (v.size() != 2) return false;
        argM = std::stoi(v[0]);
        argN = std::stoi(v[1]);
        haveGlmn = true;
        return true;
    }, "m n for gl(m|n) (oriented)");
    glmnOpt->expected(2);

    auto* rel = app.add_subcommand("check-relations", "verify the defining relation suite");

    auto* full = app.add_subcommand("check-fullness", "rank of diagram images vs solver dimension");
    full->add_option("--form", formName);
    full->add_option("--r", argR)->required();
    full->add_option("--s", argS)->required();
    full->add_option("--glmn", [&](const std::vector<std::string>& v) {
        if (v.size() != 2) return false;
        argM = std::stoi(v[0]);
        argN = std::stoi(v[1]);
        haveGlmn = true;
        return true;
    }, "m n for the oriented check")->expected(2);
    full->add_option("--src", wordX, "oriented source word");
    full->add_option("--tgt", wordY, "oriented target word");

    auto* expand = app.add_subcommand("expand-orientations", "orientation expansion of an expression");
    expand->add_option("expr", exprText)->required();

    auto* traceCmd = app.add_subcommand("trace", "categorical trace of an endomorphism");
    traceCmd->add_option("expr", exprText)->required();

    app.add_subcommand("list-forms", "catalog of superhermitian forms");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!configPath.empty()) {
            RunConfig fromFile = cfg;
            loadConfigFile(configPath, fromFile);
            // flags override the file: reparse flags on top
            std::swap(cfg, fromFile);
            for (const auto* opt : app.get_options()) {
                if (opt->count() == 0) continue;
                std::string n = opt->get_name();
                if (n == "--category") cfg.category = fromFile.category;
                if (n == "--algebra") cfg.algebra = fromFile.algebra;
                if (n == "--sigma") cfg.sigma = fromFile.sigma;
                if (n == "--d") cfg.d = fromFile.d;
            }
        }
        bool oriented = cfg.category == "oriented";
        if (!oriented && cfg.category != "unoriented")
            throw std::runtime_error("category must be oriented or unoriented");

        auto A = makeAlgebra(cfg.algebra);
        Scalar d = parseRational(cfg.d);
        std::optional<OrCategory> C;
        std::optional<UnCategory> U;
        if (oriented) C.emplace(A, d);
        else U.emplace(A, Parity(cfg.sigma), d);

        json out;
        out["schema"] = 1;

        if (app.got_subcommand(normalize)) {
            auto ast = parseExpr(exprText);
            json terms = json::array();
            if (oriented) {
                OrMorphism f = elaborateOriented(*ast, *C);
                for (const auto& [dg, c] : f.terms)
                    terms.push_back({{"coeff", c.str()},
                                     {"diagram", diagramJsonOr(*C, f.src, f.tgt, dg)}});
                out["src"] = formatWord(f.src);
                out["tgt"] = formatWord(f.tgt);
            } else {
                UnMorphism f = elaborateUnoriented(*ast, *U);
                for (const auto& [dg, c] : f.terms)
                    terms.push_back(
                        {{"coeff", c.str()}, {"diagram", diagramJsonUn(*U, f.r, f.s, dg)}});
                out["r"] = f.r;
                out["s"] = f.s;
            }
            out["terms"] = terms;
        } else if (app.got_subcommand(dimhom)) {
            if (oriented) {
                out["dim"] = C->enumerateBasis(parseWord(wordX), parseWord(wordY)).size();
            } else {
                out["dim"] = U->enumerateBasis(std::stoi(wordX), std::stoi(wordY)).size();
            }
        } else if (app.got_subcommand(evalCmd)) {
            auto ast = parseExpr(exprText);
            if (oriented) {
                if (!haveGlmn) throw std::runtime_error("oriented eval needs --glmn m n");
                OrMorphism f = elaborateOriented(*ast, *C);
                OrientedEvaluator ev(A, d, argM, argN);
                Parity par;
                if (!C->isHomogeneous(f)) throw std::runtime_error("non-homogeneous morphism");
                if (!f.terms.empty()) par = C->parity(f.terms.begin()->first);
                out = linearMapJson(ev.eval(f), par);
            } else {
                if (formName.empty()) throw std::runtime_error("unoriented eval needs --form");
                FormSpec F = catalogForm(formName);
                if (F.algebra->name() != A->name())
                    throw std::runtime_error("form algebra " + F.algebra->name() +
                                             " does not match configured algebra " + A->name());
                if (F.sigma != U->sigma())
                    throw std::runtime_error("form parity does not match sigma");
                if (U->d() != F.categoryD() && !A->supertraceIsZero())
                    throw std::runtime_error("specialization mismatch: d must be nu (m - n)");
                UnMorphism f = elaborateUnoriented(*ast, *U);
                UnorientedEvaluator ev(F.algebra, groundForm(F));
                LinearMap total(ev.space(f.s).dim(), ev.space(f.r).dim());
                Parity par;
                for (const auto& [dg, c] : f.terms) {
                    total = total + ev.evalDiagram(f.r, f.s, dg.match, dg.token).scaled(c);
                    par = U->parity(f.r, dg);
                }
                out = linearMapJson(total, par);
            }
        } else if (app.got_subcommand(rel)) {
            auto checks = oriented ? relationSuiteOriented(*C) : relationSuiteUnoriented(*U);
            json arr = json::array();
            bool all = true;
            for (const auto& c : checks) {
                arr.push_back({{"relation", c.name}, {"ok", c.ok}});
                all = all && c.ok;
            }
            out["relations"] = arr;
            out["ok"] = all;
            std::cout << out.dump(2) << "\n";
            return all ? 0 : 1;
        } else if (app.got_subcommand(full)) {
            auto t0 = std::chrono::steady_clock::now();
            SpanReport r;
            if (!formName.empty()) {
                FormSpec F = catalogForm(formName);
                UnCategory UF(F.algebra, F.sigma, F.categoryD());
                r = spanningCheck(UF, F, argR, argS);
            } else if (haveGlmn) {
                OrCategory CO(A, Scalar(argM - argN));
                r = spanningCheckOriented(CO, argM, argN, parseWord(wordX), parseWord(wordY));
            } else {
                throw std::runtime_error("check-fullness needs --form or --glmn with --src/--tgt");
            }
            auto t1 = std::chrono::steady_clock::now();
            out["rank"] = r.rank;
            out["dim"] = r.dim;
            out["kernel_dim"] = r.kernelDim;
            out["elapsed"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() / 1000.0;
            out["ok"] = r.ok;
            std::cout << out.dump(2) << "\n";
            return r.ok ? 0 : 1;
        } else if (app.got_subcommand(expand)) {
            if (oriented) throw std::runtime_error("expand-orientations is unoriented-only");
            auto ast = parseExpr(exprText);
            UnMorphism f = elaborateUnoriented(*ast, *U);
            ShiftedMatrixMorphism D = U->expand(f);
            json comps = json::array();
            auto srcC = U->objectComponents(f.r);
            auto tgtC = U->objectComponents(f.s);
            for (size_t i = 0; i < tgtC.size(); ++i)
                for (size_t j = 0; j < srcC.size(); ++j) {
                    const OrMorphism& m = D.entry(static_cast<int>(i), static_cast<int>(j));
                    if (m.isZero()) continue;
                    json terms = json::array();
                    for (const auto& [dg, c] : m.terms)
                        terms.push_back({{"coeff", c.str()},
                                         {"diagram", diagramJsonOr(U->oriented(), m.src, m.tgt, dg)}});
                    comps.push_back({{"src", formatWord(srcC[j].word)},
                                     {"srcShift", srcC[j].shift.value()},
                                     {"tgt", formatWord(tgtC[i].word)},
                                     {"tgtShift", tgtC[i].shift.value()},
                                     {"terms", terms}});
                }
            out["components"] = comps;
        } else if (app.got_subcommand(traceCmd)) {
            auto ast = parseExpr(exprText);
            Scalar t = oriented ? C->categoricalTrace(elaborateOriented(*ast, *C))
                                : U->categoricalTrace(elaborateUnoriented(*ast, *U));
            out["trace"] = t.str();
        } else { // list-forms
            json arr = json::array();
            for (const auto& fam : catalogFormExamples()) arr.push_back(fam);
            out["families"] = arr;
            json algebras = json::array();
            for (const char* nm : {"R", "C_real", "C_real_id", "H", "Cl1R", "Cl2R", "Cl3R",
                                   "Cl5R", "Cl6R", "Cl7R", "C_cplx", "ClC", "ClC_real"})
                algebras.push_back(nm);
            out["algebras"] = algebras;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    } catch (const std::exception& e) {
        json err{{"schema", 1}, {"error", e.what()}};
        std::cerr << err.dump(2) << "\n";
        return 2;
    }
}
