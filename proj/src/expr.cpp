#include "brauer/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace brauer {

namespace {

struct Parser {
    const std::string& s;
    size_t p = 0;

    void skip() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool peek(char c) {
        skip();
        return p < s.size() && s[p] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++p;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("syntax error at position " + std::to_string(p) + ": " + msg);
    }

    std::string ident() {
        skip();
        size_t start = p;
        while (p < s.size() && std::isalpha(static_cast<unsigned char>(s[p]))) ++p;
        return s.substr(start, p - start);
    }

    std::string parenContent() {
        if (!eat('(')) fail("expected (");
        size_t start = p;
        int depth = 1;
        while (p < s.size() && depth > 0) {
            if (s[p] == '(') ++depth;
            if (s[p] == ')') --depth;
            ++p;
        }
        if (depth != 0) fail("unbalanced parentheses");
        return s.substr(start, p - 1 - start);
    }

    Scalar scalarLit() {
        skip();
        size_t start = p;
        auto rat = [&]() {
            size_t st = p;
            if (p < s.size() && s[p] == '-') ++p;
            while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
            if (p < s.size() && s[p] == '/') {
                ++p;
                while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
            }
            if (p == st || (p == st + 1 && s[st] == '-')) fail("expected number");
            mpq_class q(s.substr(st, p - st));
            q.canonicalize();
            return q;
        };
        mpq_class re = rat();
        skip();
        if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
            size_t save = p;
            int sign = s[p] == '-' ? -1 : 1;
            ++p;
            skip();
            if (p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == 'i')) {
                mpq_class im = 1;
                if (std::isdigit(static_cast<unsigned char>(s[p]))) im = rat();
                skip();
                if (eat('i')) return Scalar(re, sign * im);
            }
            p = save;
        } else if (p < s.size() && s[p] == 'i') {
            ++p;
            return Scalar(mpq_class(0), re);
        }
        (void)start;
        return Scalar(re);
    }

    std::unique_ptr<ExprNode> expr() {
        auto n = term();
        while (eat(';')) {
            auto seq = std::make_unique<ExprNode>();
            seq->kind = ExprNode::Seq;
            seq->pos = p;
            seq->children.push_back(std::move(n));
            seq->children.push_back(term());
            n = std::move(seq);
        }
        return n;
    }

    std::unique_ptr<ExprNode> term() {
        auto n = atom();
        while (eat('@')) {
            auto t = std::make_unique<ExprNode>();
            t->kind = ExprNode::Tensor;
            t->pos = p;
            t->children.push_back(std::move(n));
            t->children.push_back(atom());
            n = std::move(t);
        }
        return n;
    }

    std::unique_ptr<ExprNode> atom() {
        skip();
        if (p >= s.size()) fail("unexpected end of input");
        if (peek('(')) {
            eat('(');
            auto n = expr();
            if (!eat(')')) fail("expected )");
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(s[p])) || s[p] == '-') {
            auto n = std::make_unique<ExprNode>();
            n->kind = ExprNode::Scale;
            n->pos = p;
            n->scalar = scalarLit();
            skip();
            if (!eat('*')) fail("expected * after scalar");
            n->children.push_back(atom());
            return n;
        }
        size_t here = p;
        std::string nm = ident();
        if (nm.empty()) fail("expected atom");
        auto n = std::make_unique<ExprNode>();
        n->pos = here;
        if (nm == "id") {
            n->kind = ExprNode::Id;
            n->name = parenContent();
        } else if (nm == "tok" || nm == "tokd") {
            n->kind = ExprNode::Tok;
            n->name = nm == "tokd" ? "d:" + parenContent() : parenContent();
        } else if (nm == "x" || nm == "cap" || nm == "cup" || nm == "capL" || nm == "capR" ||
                   nm == "cupL" || nm == "cupR") {
            n->kind = ExprNode::Gen;
            n->name = nm;
        } else {
            fail("unknown atom '" + nm + "'");
        }
        return n;
    }
};

[[noreturn]] void typeFail(size_t pos, const std::string& what) {
    throw std::invalid_argument("type error near position " + std::to_string(pos) + ": " + what);
}

} // namespace

std::unique_ptr<ExprNode> parseExpr(const std::string& text) {
    Parser ps{text};
    auto n = ps.expr();
    ps.skip();
    if (ps.p != text.size()) ps.fail("trailing input");
    return n;
}

OrMorphism elaborateOriented(const ExprNode& ast, const OrCategory& C) {
    switch (ast.kind) {
        case ExprNode::Seq: {
            OrMorphism g = elaborateOriented(*ast.children[0], C);
            OrMorphism f = elaborateOriented(*ast.children[1], C);
            if (f.src != g.tgt)
                typeFail(ast.pos, "composition interface mismatch: " + formatWord(g.tgt) +
                                      " then " + formatWord(f.src));
            return C.compose(f, g);
        }
        case ExprNode::Tensor:
            return C.tensor(elaborateOriented(*ast.children[0], C),
                            elaborateOriented(*ast.children[1], C));
        case ExprNode::Scale:
            return elaborateOriented(*ast.children[0], C) * ast.scalar;
        case ExprNode::Id:
            return C.idMorphism(parseWord(ast.name));
        case ExprNode::Tok: {
            bool down = ast.name.rfind("d:", 0) == 0;
            std::string body = down ? ast.name.substr(2) : ast.name;
            return C.token(C.algebra()->parseElem(body), down ? Dir::Down : Dir::Up);
        }
        case ExprNode::Gen: {
            if (ast.name == "x") return C.cross(Dir::Up, Dir::Up);
            if (ast.name == "capL") return C.capL();
            if (ast.name == "capR") return C.capR();
            if (ast.name == "cupL") return C.cupL();
            if (ast.name == "cupR") return C.cupR();
            typeFail(ast.pos, "generator '" + ast.name + "' is unoriented; use capL/capR/cupL/cupR");
        }
    }
    typeFail(ast.pos, "unreachable");
}

UnMorphism elaborateUnoriented(const ExprNode& ast, const UnCategory& U) {
    switch (ast.kind) {
        case ExprNode::Seq: {
            UnMorphism g = elaborateUnoriented(*ast.children[0], U);
            UnMorphism f = elaborateUnoriented(*ast.children[1], U);
            if (f.r != g.s)
                typeFail(ast.pos, "composition interface mismatch: " + std::to_string(g.s) +
                                      " strands then " + std::to_string(f.r));
            return U.compose(f, g);
        }
        case ExprNode::Tensor:
            return U.tensor(elaborateUnoriented(*ast.children[0], U),
                            elaborateUnoriented(*ast.children[1], U));
        case ExprNode::Scale:
            return elaborateUnoriented(*ast.children[0], U) * ast.scalar;
        case ExprNode::Id: {
            for (char c : ast.name)
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    typeFail(ast.pos, "unoriented id takes a strand count");
            return U.idMorphism(std::stoi(ast.name));
        }
        case ExprNode::Tok: {
            if (ast.name.rfind("d:", 0) == 0)
                typeFail(ast.pos, "tokd is oriented-only");
            return U.token(U.algebra()->parseElem(ast.name));
        }
        case ExprNode::Gen: {
            if (ast.name == "x") return U.cross();
            if (ast.name == "cap") return U.cap();
            if (ast.name == "cup") return U.cup();
            typeFail(ast.pos, "generator '" + ast.name + "' is oriented; use cap/cup");
        }
    }
    typeFail(ast.pos, "unreachable");
}

} // namespace brauer
