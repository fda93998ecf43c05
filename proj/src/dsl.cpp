#include "diffsys/dsl.hpp"

#include "diffsys/error.hpp"

#include <set>

namespace diffsys {

namespace {

enum class Tok { Ident, Int, Punct, End };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    int line = 1, col = 1;
};

bool isIdentStart(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool isIdentChar(char c) { return isIdentStart(c) || (c >= '0' && c <= '9'); }

std::vector<Token> lex(const std::string& src) {
    static const std::string punct = ";,:()[]{}<>+-*/=";
    std::vector<Token> out;
    int line = 1, col = 1;
    size_t i = 0;
    auto advance = [&](size_t n) {
        for (size_t k = 0; k < n; ++k) {
            if (src[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '#') {
            size_t j = i;
            while (j < src.size() && src[j] != '\n') ++j;
            advance(j - i);
            continue;
        }
        Token t;
        t.line = line;
        t.col = col;
        if (isIdentStart(c)) {
            size_t j = i;
            while (j < src.size() && isIdentChar(src[j])) ++j;
            t.kind = Tok::Ident;
            t.text = src.substr(i, j - i);
            advance(j - i);
        } else if (c >= '0' && c <= '9') {
            size_t j = i;
            while (j < src.size() && src[j] >= '0' && src[j] <= '9') ++j;
            t.kind = Tok::Int;
            t.text = src.substr(i, j - i);
            advance(j - i);
        } else if (punct.find(c) != std::string::npos) {
            t.kind = Tok::Punct;
            t.text = std::string(1, c);
            advance(1);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back(std::move(t));
    }
    out.push_back({Tok::End, "", line, col});
    return out;
}

const std::set<std::string>& reservedNames() {
    static const std::set<std::string> names = {
        "basis", "shift", "let",  "eq",     "solve", "deduce",  "gallery", "min",
        "supnorm", "poly", "T",   "delta",  "chi",   "latfun",  "wintable", "cos",
        "sin",   "cos2pi", "trig", "step",  "off",   "r",       "f",        "x",
        "pi"};
    return names;
}

struct Parser {
    std::vector<Token> toks;
    size_t at = 0;

    BasisPtr ctx;
    std::vector<std::pair<std::string, FormalReal>> shiftBindings;
    std::vector<std::pair<std::string, SymbolicFunction>> functionBindings;
    std::vector<Equation> equations;
    std::vector<WorkbenchScript::Directive> directives;
    bool basisDeclared = false;
    bool pastFirstStatement = false;

    explicit Parser(const std::string& text) : toks(lex(text)), ctx(makeBasis({})) {}

    const Token& peek(size_t ahead = 0) const {
        size_t j = at + ahead;
        return j < toks.size() ? toks[j] : toks.back();
    }
    Token take() { return toks[at < toks.size() - 1 ? at++ : at]; }

    [[noreturn]] void fail(const std::string& expected) const {
        const Token& t = peek();
        std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError("expected " + expected + ", found " + got, t.line, t.col);
    }

    bool isPunct(const char* p, size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == Tok::Punct && t.text == p;
    }
    bool isIdent(const char* name, size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == Tok::Ident && t.text == name;
    }
    bool acceptPunct(const char* p) {
        if (!isPunct(p)) return false;
        ++at;
        return true;
    }
    void expectPunct(const char* p) {
        if (!acceptPunct(p)) fail(std::string("'") + p + "'");
    }
    std::string expectIdent(const std::string& what) {
        if (peek().kind != Tok::Ident) fail(what);
        return take().text;
    }
    void expectKeyword(const char* kw) {
        if (!isIdent(kw)) fail(std::string("'") + kw + "'");
        ++at;
    }

    Int expectInt(const std::string& what) {
        if (peek().kind != Tok::Int) fail(what);
        return Int(take().text);
    }
    /// [-] INT [/ INT]; the sign is included here only where a full rational
    /// literal is legal (thresholds, table values, trig coefficients).
    Rational signedRational() {
        bool neg = acceptPunct("-");
        Rational q = rational();
        return neg ? -q : q;
    }
    Rational rational() {
        Int n = expectInt("a number");
        if (!acceptPunct("/")) return Rational(n);
        const Token& t = peek();
        Int d = expectInt("a denominator");
        if (d == 0) throw ParseError("denominator must be nonzero", t.line, t.col);
        return Rational(n, d);
    }

    // ---- expressions ----

    FormalReal resolveShiftName() {
        const Token& t = peek();
        std::string name = expectIdent("a shift name");
        int idx = ctx->indexOf(name);
        if (idx > 0) return FormalReal::symbol(ctx, idx);
        for (const auto& [n, v] : shiftBindings)
            if (n == name) return v;
        throw ParseError("unknown shift name '" + name + "'", t.line, t.col);
    }

    /// rational | [rational *] name, combined with +/-.
    FormalReal shiftExpr() {
        FormalReal v(ctx);
        bool neg = acceptPunct("-");
        while (true) {
            FormalReal term(ctx);
            if (peek().kind == Tok::Int) {
                Rational q = rational();
                if (acceptPunct("*"))
                    term = resolveShiftName().scaled(q);
                else
                    term = FormalReal::rational(ctx, q);
            } else {
                term = resolveShiftName();
            }
            v = neg ? v - term : v + term;
            if (acceptPunct("+"))
                neg = false;
            else if (acceptPunct("-"))
                neg = true;
            else
                return v;
        }
    }

    /// T[shift] | delta(shift), scaled and combined with +/-; a bare 0 is the
    /// zero operator.
    DifferenceOperator operatorExpr() {
        DifferenceOperator op = DifferenceOperator::zero(ctx);
        bool neg = acceptPunct("-");
        if (!neg && peek().kind == Tok::Int) {
            Rational q = rational();
            if (q == 0 && !isPunct("*")) return op;
            expectPunct("*");
            op = op + operatorAtom().scaled(q);
        } else {
            if (peek().kind == Tok::Int) {
                Rational q = rational();
                expectPunct("*");
                op = op - operatorAtom().scaled(q);
            } else {
                DifferenceOperator a = operatorAtom();
                op = neg ? op - a : op + a;
            }
        }
        while (true) {
            if (acceptPunct("+"))
                neg = false;
            else if (acceptPunct("-"))
                neg = true;
            else
                return op;
            DifferenceOperator a;
            if (peek().kind == Tok::Int) {
                Rational q = rational();
                expectPunct("*");
                a = operatorAtom().scaled(q);
            } else {
                a = operatorAtom();
            }
            op = neg ? op - a : op + a;
        }
    }

    DifferenceOperator operatorAtom() {
        if (isIdent("T")) {
            ++at;
            expectPunct("[");
            FormalReal b = shiftExpr();
            expectPunct("]");
            return DifferenceOperator::translation(b);
        }
        if (isIdent("delta")) {
            ++at;
            expectPunct("(");
            FormalReal b = shiftExpr();
            expectPunct(")");
            return DifferenceOperator::delta(b);
        }
        fail("'T[...]' or 'delta(...)'");
    }

    Lattice latticeGens() {
        expectPunct("<");
        std::vector<FormalReal> gens;
        if (!isPunct(">")) {
            gens.push_back(shiftExpr());
            while (acceptPunct(",")) gens.push_back(shiftExpr());
        }
        expectPunct(">");
        return Lattice::fromGenerators(ctx, gens);
    }

    LatticeRule ruleExpr(size_t rank) {
        LatticeRule rule;
        bool neg = acceptPunct("-");
        while (true) {
            Rational q(1);
            bool scaled = false;
            if (peek().kind == Tok::Int) {
                q = rational();
                scaled = acceptPunct("*");
            }
            if (neg) q = -q;
            if (!scaled && peek(0).kind != Tok::Ident) {
                rule.c0 += q;
            } else {
                ruleAtomInto(rule, q, rank);
            }
            if (acceptPunct("+"))
                neg = false;
            else if (acceptPunct("-"))
                neg = true;
            else
                return rule;
        }
    }

    void ruleAtomInto(LatticeRule& rule, const Rational& q, size_t rank) {
        const Token& t = peek();
        std::string name = expectIdent("'k<i>' or 'step(i,c)'");
        if (name == "step") {
            expectPunct("(");
            Int coord = expectInt("a coordinate index");
            expectPunct(",");
            bool neg = acceptPunct("-");
            Int thr = expectInt("a threshold");
            if (neg) thr = -thr;
            expectPunct(")");
            if (coord < 1 || coord > Int(rank))
                throw ParseError("coordinate index out of range", t.line, t.col);
            Rational& slot = rule.steps[{static_cast<int>(coord.convert_to<long>()) - 1, thr}];
            slot += q;
            if (slot == 0) rule.steps.erase({static_cast<int>(coord.convert_to<long>()) - 1, thr});
            return;
        }
        if (name.size() > 1 && name[0] == 'k') {
            long idx = 0;
            bool digits = true;
            for (size_t j = 1; j < name.size(); ++j) {
                if (name[j] < '0' || name[j] > '9') digits = false;
                else idx = idx * 10 + (name[j] - '0');
            }
            if (digits && idx >= 1) {
                if (static_cast<size_t>(idx) > rank)
                    throw ParseError("coordinate index out of range", t.line, t.col);
                Rational& slot = rule.linear[static_cast<int>(idx) - 1];
                slot += q;
                if (slot == 0) rule.linear.erase(static_cast<int>(idx) - 1);
                return;
            }
        }
        throw ParseError("expected 'k<i>' or 'step(i,c)', found '" + name + "'", t.line, t.col);
    }

    /// cos(2pi*q*x) and sin(2pi*q*x) bodies after the '(' is consumed.
    Rational freqBody() {
        if (peek().kind != Tok::Int || peek().text != "2") fail("'2pi'");
        ++at;
        expectKeyword("pi");
        expectPunct("*");
        Rational freq(1);
        if (!isIdent("x")) {
            freq = rational();
            expectPunct("*");
        }
        expectKeyword("x");
        expectPunct(")");
        return freq;
    }

    SymbolicFunction resolveFunctionName() {
        const Token& t = peek();
        std::string name = expectIdent("a function name");
        for (const auto& [n, v] : functionBindings)
            if (n == name) return v;
        throw ParseError("unknown function name '" + name + "'", t.line, t.col);
    }

    SymbolicFunction functionAtom() {
        if (acceptPunct("(")) {
            SymbolicFunction f = functionExpr();
            expectPunct(")");
            return f;
        }
        if (isIdent("poly")) {
            ++at;
            expectPunct("(");
            std::vector<Rational> coeffs;
            coeffs.push_back(signedRational());
            while (acceptPunct(",")) coeffs.push_back(signedRational());
            expectPunct(")");
            return SymbolicFunction::polynomial(ctx, std::move(coeffs));
        }
        if (isIdent("cos2pi")) {
            ++at;
            expectPunct("(");
            Rational freq = signedRational();
            expectPunct(",");
            expectKeyword("x");
            expectPunct(")");
            return SymbolicFunction::cosTwoPi(ctx, freq);
        }
        if (isIdent("cos")) {
            ++at;
            expectPunct("(");
            return SymbolicFunction::cosTwoPi(ctx, freqBody());
        }
        if (isIdent("sin")) {
            ++at;
            expectPunct("(");
            Rational freq = freqBody();
            return SymbolicFunction::trig(
                ctx, {{freq, CyclotomicNumber::rootOfUnity(PhaseQ(Rational(-1, 4)))}});
        }
        if (isIdent("trig")) {
            ++at;
            expectPunct("(");
            Rational freq = rational();
            expectPunct(";");
            Int order = expectInt("a root-of-unity order");
            CyclotomicNumber coeff;
            while (acceptPunct(";")) {
                bool neg = acceptPunct("-");
                Int e = expectInt("an exponent");
                if (neg) e = -e;
                expectPunct(":");
                Rational q = signedRational();
                coeff = coeff + CyclotomicNumber::rootOfUnity(
                                    PhaseQ(Rational(e, order))).scaled(q);
            }
            expectPunct(")");
            return SymbolicFunction::trig(ctx, {{freq, coeff}});
        }
        if (isIdent("chi")) {
            ++at;
            expectPunct("(");
            Lattice L = latticeGens();
            expectPunct("+");
            FormalReal off = shiftExpr();
            expectPunct(")");
            return SymbolicFunction::cosetIndicator(std::move(L), off);
        }
        if (isIdent("latfun")) {
            ++at;
            expectPunct("(");
            Lattice L = latticeGens();
            expectPunct(";");
            LatticeRule rule = ruleExpr(L.rank());
            Rational off(0);
            if (acceptPunct(";")) {
                expectKeyword("off");
                expectPunct("=");
                off = signedRational();
            }
            expectPunct(")");
            return SymbolicFunction::latticeFunction(std::move(L), std::move(rule), off);
        }
        if (isIdent("wintable")) {
            ++at;
            expectPunct("(");
            Lattice L = latticeGens();
            expectPunct(";");
            expectKeyword("r");
            expectPunct("=");
            Int radius = expectInt("a radius");
            expectPunct(";");
            expectPunct("{");
            std::map<LatticePoint, Rational> table;
            while (!isPunct("}")) {
                if (!table.empty()) expectPunct(",");
                expectPunct("(");
                LatticePoint pt;
                while (!isPunct(")")) {
                    if (!pt.empty()) expectPunct(",");
                    bool neg = acceptPunct("-");
                    Int c = expectInt("a coordinate");
                    pt.push_back(neg ? Int(-c) : c);
                }
                expectPunct(")");
                expectPunct(":");
                table[pt] = signedRational();
            }
            expectPunct("}");
            Rational off(0);
            if (acceptPunct(";")) {
                expectKeyword("off");
                expectPunct("=");
                off = signedRational();
            }
            expectPunct(")");
            return SymbolicFunction::windowTable(std::move(L),
                                                 static_cast<int>(radius.convert_to<long>()),
                                                 std::move(table), off);
        }
        if (peek().kind == Tok::Ident) return resolveFunctionName();
        fail("a function");
    }

    SymbolicFunction functionExpr() {
        std::vector<std::pair<Rational, SymbolicFunction>> parts;
        bool neg = acceptPunct("-");
        while (true) {
            Rational q = neg ? Rational(-1) : Rational(1);
            if (peek().kind == Tok::Int) {
                Rational lit = rational();
                if (acceptPunct("*")) {
                    parts.push_back({q * lit, functionAtom()});
                } else {
                    parts.push_back({q * lit, SymbolicFunction::constant(ctx, 1)});
                }
            } else {
                parts.push_back({q, functionAtom()});
            }
            if (acceptPunct("+"))
                neg = false;
            else if (acceptPunct("-"))
                neg = true;
            else
                break;
        }
        if (parts.size() == 1 && parts[0].first == 1) return std::move(parts[0].second);
        return SymbolicFunction::linComb(ctx, std::move(parts));
    }

    // ---- statements ----

    void checkBindingName(const Token& t, const std::string& name) {
        if (reservedNames().count(name))
            throw ParseError("'" + name + "' is a reserved word", t.line, t.col);
        if (ctx->indexOf(name) > 0)
            throw ParseError("'" + name + "' is already a basis symbol", t.line, t.col);
        for (const auto& [n, v] : shiftBindings)
            if (n == name) throw ParseError("'" + name + "' is already bound", t.line, t.col);
        for (const auto& [n, v] : functionBindings)
            if (n == name) throw ParseError("'" + name + "' is already bound", t.line, t.col);
    }

    std::string galleryName() {
        std::string name = expectIdent("a gallery name");
        while (isPunct("-") && peek(1).kind == Tok::Ident) {
            ++at;
            name += "-" + take().text;
        }
        return name;
    }

    void statement() {
        const Token& head = peek();
        if (isIdent("basis")) {
            if (basisDeclared)
                throw ParseError("duplicate basis declaration", head.line, head.col);
            if (pastFirstStatement)
                throw ParseError("basis declaration must be the first statement", head.line,
                                 head.col);
            ++at;
            std::vector<std::string> names;
            while (peek().kind == Tok::Ident) {
                const Token& t = peek();
                std::string name = take().text;
                if (reservedNames().count(name))
                    throw ParseError("'" + name + "' is a reserved word", t.line, t.col);
                for (const auto& n : names)
                    if (n == name)
                        throw ParseError("duplicate basis symbol '" + name + "'", t.line, t.col);
                names.push_back(std::move(name));
            }
            if (names.empty()) fail("at least one basis symbol name");
            expectPunct(";");
            ctx = makeBasis(std::move(names));
            basisDeclared = true;
            return;
        }
        if (isIdent("shift")) {
            ++at;
            const Token& t = peek();
            std::string name = expectIdent("a new shift name");
            checkBindingName(t, name);
            expectPunct("=");
            FormalReal v = shiftExpr();
            expectPunct(";");
            shiftBindings.emplace_back(std::move(name), std::move(v));
            return;
        }
        if (isIdent("let")) {
            ++at;
            const Token& t = peek();
            std::string name = expectIdent("a new function name");
            checkBindingName(t, name);
            expectPunct("=");
            SymbolicFunction f = functionExpr();
            expectPunct(";");
            functionBindings.emplace_back(std::move(name), std::move(f));
            return;
        }
        if (isIdent("eq")) {
            ++at;
            DifferenceOperator op = operatorExpr();
            expectKeyword("f");
            expectPunct("=");
            SymbolicFunction rhs = functionExpr();
            expectPunct(";");
            equations.push_back({std::move(op), std::move(rhs)});
            return;
        }
        if (isIdent("solve")) {
            ++at;
            expectPunct(";");
            directives.push_back({WorkbenchScript::Directive::Kind::Solve, {}, "", {}});
            return;
        }
        if (isIdent("min")) {
            ++at;
            expectPunct("-");
            expectKeyword("supnorm");
            expectPunct(";");
            directives.push_back({WorkbenchScript::Directive::Kind::MinSupnorm, {}, "", {}});
            return;
        }
        if (isIdent("poly")) {
            ++at;
            expectPunct("-");
            expectKeyword("solve");
            expectPunct(";");
            directives.push_back({WorkbenchScript::Directive::Kind::PolySolve, {}, "", {}});
            return;
        }
        if (isIdent("deduce")) {
            ++at;
            std::vector<WorkbenchScript::DeduceEntry> entries;
            while (true) {
                DifferenceOperator mult = operatorExpr();
                expectPunct(":");
                const Token& t = peek();
                Int idx = expectInt("an equation index");
                if (idx < 1 || idx > Int(equations.size()))
                    throw ParseError("equation index out of range", t.line, t.col);
                entries.push_back({std::move(mult), static_cast<int>(idx.convert_to<long>())});
                if (!acceptPunct(",")) break;
            }
            expectPunct(";");
            directives.push_back(
                {WorkbenchScript::Directive::Kind::Deduce, std::move(entries), "", {}});
            return;
        }
        if (isIdent("gallery")) {
            ++at;
            std::string name = galleryName();
            std::vector<std::pair<std::string, std::string>> params;
            while (peek().kind == Tok::Ident) {
                std::string key = take().text;
                expectPunct("=");
                if (peek().kind != Tok::Int) fail("an integer parameter value");
                params.emplace_back(std::move(key), take().text);
            }
            expectPunct(";");
            directives.push_back(
                {WorkbenchScript::Directive::Kind::Gallery, {}, std::move(name), std::move(params)});
            return;
        }
        fail("a statement ('basis', 'shift', 'let', 'eq', 'solve', 'min-supnorm', "
             "'poly-solve', 'deduce' or 'gallery')");
    }

    WorkbenchScript run() {
        while (peek().kind != Tok::End) {
            statement();
            pastFirstStatement = true;
        }
        return {std::move(ctx), std::move(shiftBindings), std::move(functionBindings),
                std::move(equations), std::move(directives)};
    }
};

} // namespace

WorkbenchScript parseScript(const std::string& text) { return Parser(text).run(); }

std::string renderScript(const WorkbenchScript& s) {
    std::string out;
    if (s.ctx && s.ctx->symbolCount() > 0) {
        out += "basis";
        for (size_t i = 1; i <= s.ctx->symbolCount(); ++i)
            out += " " + s.ctx->name(static_cast<int>(i));
        out += ";\n";
    }
    for (const auto& [name, v] : s.shiftBindings)
        out += "shift " + name + " = " + v.render() + ";\n";
    for (const auto& [name, f] : s.functionBindings)
        out += "let " + name + " = " + f.render() + ";\n";
    for (const auto& eq : s.equations)
        out += "eq " + eq.op.render() + " f = " + eq.rhs.render() + ";\n";
    for (const auto& d : s.directives) {
        switch (d.kind) {
        case WorkbenchScript::Directive::Kind::Solve:
            out += "solve;\n";
            break;
        case WorkbenchScript::Directive::Kind::MinSupnorm:
            out += "min-supnorm;\n";
            break;
        case WorkbenchScript::Directive::Kind::PolySolve:
            out += "poly-solve;\n";
            break;
        case WorkbenchScript::Directive::Kind::Deduce: {
            out += "deduce ";
            for (size_t i = 0; i < d.entries.size(); ++i) {
                if (i) out += ", ";
                out += d.entries[i].multiplier.render() + ":" +
                       std::to_string(d.entries[i].equation);
            }
            out += ";\n";
            break;
        }
        case WorkbenchScript::Directive::Kind::Gallery: {
            out += "gallery " + d.galleryName;
            for (const auto& [k, v] : d.galleryParams) out += " " + k + "=" + v;
            out += ";\n";
            break;
        }
        }
    }
    return out;
}

bool scriptsEquivalent(const WorkbenchScript& a, const WorkbenchScript& b) {
    if (*a.ctx != *b.ctx) return false;
    if (a.shiftBindings != b.shiftBindings) return false;
    if (a.functionBindings.size() != b.functionBindings.size()) return false;
    for (size_t i = 0; i < a.functionBindings.size(); ++i)
        if (a.functionBindings[i].first != b.functionBindings[i].first ||
            a.functionBindings[i].second != b.functionBindings[i].second)
            return false;
    if (a.equations.size() != b.equations.size()) return false;
    for (size_t i = 0; i < a.equations.size(); ++i)
        if (a.equations[i].op != b.equations[i].op || a.equations[i].rhs != b.equations[i].rhs)
            return false;
    if (a.directives.size() != b.directives.size()) return false;
    for (size_t i = 0; i < a.directives.size(); ++i) {
        const auto& da = a.directives[i];
        const auto& db = b.directives[i];
        if (da.kind != db.kind || da.galleryName != db.galleryName ||
            da.galleryParams != db.galleryParams || da.entries.size() != db.entries.size())
            return false;
        for (size_t j = 0; j < da.entries.size(); ++j)
            if (da.entries[j].multiplier != db.entries[j].multiplier ||
                da.entries[j].equation != db.entries[j].equation)
                return false;
    }
    return true;
}

namespace {

Parser expressionParser(const BasisPtr& ctx, const std::string& text) {
    Parser p(text);
    p.ctx = ctx;
    return p;
}

} // namespace

FormalReal parseShiftText(const BasisPtr& ctx, const std::string& text) {
    Parser p = expressionParser(ctx, text);
    FormalReal v = p.shiftExpr();
    if (p.peek().kind != Tok::End) p.fail("end of input");
    return v;
}

DifferenceOperator parseOperatorText(const BasisPtr& ctx, const std::string& text) {
    Parser p = expressionParser(ctx, text);
    DifferenceOperator op = p.operatorExpr();
    if (p.peek().kind != Tok::End) p.fail("end of input");
    return op;
}

SymbolicFunction parseFunctionText(const BasisPtr& ctx, const std::string& text) {
    Parser p = expressionParser(ctx, text);
    SymbolicFunction f = p.functionExpr();
    if (p.peek().kind != Tok::End) p.fail("end of input");
    return f;
}

} // namespace diffsys
