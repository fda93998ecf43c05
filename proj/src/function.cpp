#include "diffsys/function_detail.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace diffsys {

void LatticeRule::addScaled(const LatticeRule& o, const Rational& q) {
    if (q == 0) return;
    c0 += q * o.c0;
    for (const auto& [i, c] : o.linear) {
        auto [it, fresh] = linear.emplace(i, q * c);
        if (!fresh) {
            it->second += q * c;
            if (it->second == 0) linear.erase(it);
        }
    }
    for (const auto& [key, c] : o.steps) {
        auto [it, fresh] = steps.emplace(key, q * c);
        if (!fresh) {
            it->second += q * c;
            if (it->second == 0) steps.erase(it);
        }
    }
}

LatticeRule LatticeRule::shifted(const LatticePoint& t) const {
    LatticeRule r;
    r.c0 = c0;
    for (const auto& [i, c] : linear) {
        r.linear[i] = c;
        r.c0 += c * Rational(t.at(static_cast<size_t>(i)));
    }
    for (const auto& [key, c] : steps)
        r.steps[{key.first, key.second - t.at(static_cast<size_t>(key.first))}] = c;
    return r;
}

Rational LatticeRule::evaluate(const LatticePoint& k) const {
    Rational v = c0;
    for (const auto& [i, c] : linear) v += c * Rational(k.at(static_cast<size_t>(i)));
    for (const auto& [key, c] : steps)
        if (k.at(static_cast<size_t>(key.first)) > key.second) v += c;
    return v;
}

bool LatticeRule::operator==(const LatticeRule& o) const {
    return c0 == o.c0 && linear == o.linear && steps == o.steps;
}

LatticeRule LatticeRule::cardinality(const std::vector<int>& coords) {
    LatticeRule r;
    for (int i : coords) r.steps[{i, Int(0)}] += 1;
    return r;
}

LatticeRule LatticeRule::constant(const Rational& q) {
    LatticeRule r;
    r.c0 = q;
    return r;
}

std::string LatticeRule::render() const {
    std::string out;
    auto add = [&](const Rational& q, const std::string& atom) {
        bool first = out.empty();
        Rational a = ratAbs(q);
        out += q < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
        if (atom.empty())
            out += renderRational(a);
        else if (a == 1)
            out += atom;
        else
            out += renderRational(a) + "*" + atom;
    };
    if (c0 != 0) add(c0, "");
    for (const auto& [i, c] : linear) add(c, "k" + std::to_string(i + 1));
    for (const auto& [key, c] : steps)
        add(c, "step(" + std::to_string(key.first + 1) + "," + key.second.str() + ")");
    return out.empty() ? "0" : out;
}

FuncKind SymbolicFunction::kind() const { return d_->kind; }
const BasisPtr& SymbolicFunction::context() const { return d_->ctx; }
const Rational& SymbolicFunction::constantValue() const { return d_->constant; }
const std::vector<Rational>& SymbolicFunction::polyCoeffs() const { return d_->poly; }
const std::map<Rational, CyclotomicNumber>& SymbolicFunction::trigTerms() const {
    return d_->trig;
}
const Lattice& SymbolicFunction::lattice() const { return *d_->lattice; }
const FormalReal& SymbolicFunction::cosetOffset() const { return d_->offset; }
const LatticeRule& SymbolicFunction::rule() const { return d_->rule; }
const Rational& SymbolicFunction::offLatticeValue() const { return d_->offValue; }
int SymbolicFunction::windowRadius() const { return d_->radius; }
const std::map<LatticePoint, Rational>& SymbolicFunction::windowValues() const {
    return d_->table;
}
const std::vector<std::pair<Rational, SymbolicFunction>>& SymbolicFunction::parts() const {
    return d_->parts;
}

SymbolicFunction SymbolicFunction::constant(BasisPtr ctx, const Rational& c) {
    auto d = std::make_shared<Data>();
    d->kind = FuncKind::Constant;
    d->ctx = std::move(ctx);
    d->constant = c;
    return SymbolicFunction(std::move(d));
}

SymbolicFunction SymbolicFunction::polynomial(BasisPtr ctx, std::vector<Rational> coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    if (coeffs.empty()) return constant(std::move(ctx), Rational(0));
    if (coeffs.size() == 1) return constant(std::move(ctx), coeffs[0]);
    auto d = std::make_shared<Data>();
    d->kind = FuncKind::Polynomial;
    d->ctx = std::move(ctx);
    d->poly = std::move(coeffs);
    return SymbolicFunction(std::move(d));
}

SymbolicFunction SymbolicFunction::trig(BasisPtr ctx,
                                        std::map<Rational, CyclotomicNumber> terms,
                                        const Rational& constantTerm) {
    std::map<Rational, CyclotomicNumber> canon;
    Rational c0 = constantTerm;
    for (auto& [freq, coeff] : terms) {
        if (coeff.isZero()) continue;
        if (freq > 0) {
            auto [it, fresh] = canon.emplace(freq, coeff);
            if (!fresh) it->second = it->second + coeff;
        } else if (freq < 0) {
            auto [it, fresh] = canon.emplace(-freq, coeff.conj());
            if (!fresh) it->second = it->second + coeff.conj();
        } else {
            CyclotomicNumber re = coeff.realPart();
            if (!re.isRational())
                throw RepresentabilityError(
                    "frequency-zero term with irrational value has no representable class");
            c0 += re.asRational();
        }
    }
    for (auto it = canon.begin(); it != canon.end();)
        it = it->second.isZero() ? canon.erase(it) : std::next(it);
    if (canon.empty()) return constant(std::move(ctx), c0);

    auto d = std::make_shared<Data>();
    d->kind = FuncKind::TrigPoly;
    d->ctx = ctx;
    d->trig = std::move(canon);
    SymbolicFunction pure{std::move(d)};
    if (c0 == 0) return pure;
    return linComb(ctx, {{Rational(1), constant(ctx, c0)}, {Rational(1), pure}});
}

SymbolicFunction SymbolicFunction::cosTwoPi(BasisPtr ctx, const Rational& freq) {
    std::map<Rational, CyclotomicNumber> t;
    t[freq] = CyclotomicNumber::fromRational(Rational(1));
    return trig(std::move(ctx), std::move(t));
}

SymbolicFunction SymbolicFunction::cosetIndicator(Lattice L, const FormalReal& offset) {
    auto d = std::make_shared<Data>();
    d->kind = FuncKind::CosetIndicator;
    d->ctx = L.context();
    d->offset = L.reduceOffset(offset);
    d->lattice = std::move(L);
    return SymbolicFunction(std::move(d));
}

SymbolicFunction SymbolicFunction::latticeFunction(Lattice L, LatticeRule rule,
                                                   const Rational& offValue) {
    for (auto it = rule.linear.begin(); it != rule.linear.end();)
        it = it->second == 0 ? rule.linear.erase(it) : std::next(it);
    for (auto it = rule.steps.begin(); it != rule.steps.end();)
        it = it->second == 0 ? rule.steps.erase(it) : std::next(it);
    if (rule.isZero() && offValue == 0) return constant(L.context(), Rational(0));
    auto d = std::make_shared<Data>();
    d->kind = FuncKind::LatticeFunction;
    d->ctx = L.context();
    d->lattice = std::move(L);
    d->rule = std::move(rule);
    d->offValue = offValue;
    return SymbolicFunction(std::move(d));
}

SymbolicFunction SymbolicFunction::windowTable(Lattice L, int radius,
                                               std::map<LatticePoint, Rational> values,
                                               const Rational& offValue) {
    auto d = std::make_shared<Data>();
    d->kind = FuncKind::WindowTable;
    d->ctx = L.context();
    d->lattice = std::move(L);
    d->radius = radius;
    d->table = std::move(values);
    d->offValue = offValue;
    return SymbolicFunction(std::move(d));
}

SymbolicFunction SymbolicFunction::linComb(
    BasisPtr ctx, std::vector<std::pair<Rational, SymbolicFunction>> parts) {
    std::vector<Rational> poly;            // merged scalar and polynomial part
    std::map<Rational, CyclotomicNumber> trigAcc;
    std::map<std::pair<Lattice, FormalReal>, Rational, CosetKeyLess> cosets;
    std::vector<std::tuple<Lattice, LatticeRule, Rational>> rules;
    std::vector<std::tuple<Lattice, int, std::map<LatticePoint, Rational>, Rational>> tables;

    std::function<void(const Rational&, const SymbolicFunction&)> fold =
        [&](const Rational& q, const SymbolicFunction& f) {
            if (q == 0) return;
            requireSameContext(ctx, f.context());
            switch (f.kind()) {
            case FuncKind::Constant:
                if (poly.empty()) poly.resize(1, Rational(0));
                poly[0] += q * f.constantValue();
                break;
            case FuncKind::Polynomial: {
                const auto& c = f.polyCoeffs();
                if (poly.size() < c.size()) poly.resize(c.size(), Rational(0));
                for (size_t i = 0; i < c.size(); ++i) poly[i] += q * c[i];
                break;
            }
            case FuncKind::TrigPoly:
                for (const auto& [freq, coeff] : f.trigTerms()) {
                    auto [it, fresh] = trigAcc.emplace(freq, coeff.scaled(q));
                    if (!fresh) it->second = it->second + coeff.scaled(q);
                }
                break;
            case FuncKind::CosetIndicator:
                cosets[{f.lattice(), f.cosetOffset()}] += q;
                break;
            case FuncKind::LatticeFunction: {
                for (auto& [L, rule, off] : rules) {
                    if (L == f.lattice()) {
                        rule.addScaled(f.rule(), q);
                        off += q * f.offLatticeValue();
                        return;
                    }
                }
                LatticeRule r;
                r.addScaled(f.rule(), q);
                rules.emplace_back(f.lattice(), std::move(r), q * f.offLatticeValue());
                break;
            }
            case FuncKind::WindowTable: {
                for (auto& [L, rad, table, off] : tables) {
                    if (L == f.lattice() && rad == f.windowRadius()) {
                        for (const auto& [pt, v] : f.windowValues()) table[pt] += q * v;
                        off += q * f.offLatticeValue();
                        return;
                    }
                }
                std::map<LatticePoint, Rational> t;
                for (const auto& [pt, v] : f.windowValues()) t[pt] = q * v;
                tables.emplace_back(f.lattice(), f.windowRadius(), std::move(t),
                                    q * f.offLatticeValue());
                break;
            }
            case FuncKind::LinComb:
                for (const auto& [qq, sub] : f.parts()) fold(q * qq, sub);
                break;
            }
        };
    for (const auto& [q, f] : parts) fold(q, f);

    std::vector<std::pair<Rational, SymbolicFunction>> out;
    SymbolicFunction scalar = polynomial(ctx, std::move(poly));
    if (!(scalar.kind() == FuncKind::Constant && scalar.constantValue() == 0))
        out.emplace_back(Rational(1), scalar);
    bool trigNonzero = false;
    for (const auto& [freq, coeff] : trigAcc)
        if (!coeff.isZero()) trigNonzero = true;
    if (trigNonzero) out.emplace_back(Rational(1), trig(ctx, trigAcc));
    for (const auto& [key, q] : cosets) {
        if (q == 0) continue;
        out.emplace_back(q, cosetIndicator(key.first, key.second));
    }
    for (auto& [L, rule, off] : rules) {
        if (rule.isZero() && off == 0) continue;
        out.emplace_back(Rational(1), latticeFunction(L, std::move(rule), off));
    }
    for (auto& [L, rad, table, off] : tables)
        out.emplace_back(Rational(1), windowTable(L, rad, std::move(table), off));

    if (out.empty()) return constant(std::move(ctx), Rational(0));
    if (out.size() == 1 && out[0].first == 1) return out[0].second;
    auto d = std::make_shared<Data>();
    d->kind = FuncKind::LinComb;
    d->ctx = std::move(ctx);
    d->parts = std::move(out);
    return SymbolicFunction(std::move(d));
}

SymbolicFunction SymbolicFunction::operator+(const SymbolicFunction& o) const {
    return linComb(d_->ctx, {{Rational(1), *this}, {Rational(1), o}});
}

SymbolicFunction SymbolicFunction::operator-(const SymbolicFunction& o) const {
    return linComb(d_->ctx, {{Rational(1), *this}, {Rational(-1), o}});
}

SymbolicFunction SymbolicFunction::scaled(const Rational& q) const {
    return linComb(d_->ctx, {{q, *this}});
}

bool SymbolicFunction::operator==(const SymbolicFunction& o) const {
    if (d_ == o.d_) return true;
    if (!d_ || !o.d_) return false;
    if (d_->kind != o.d_->kind) return false;
    requireSameContext(d_->ctx, o.d_->ctx);
    switch (d_->kind) {
    case FuncKind::Constant:
        return d_->constant == o.d_->constant;
    case FuncKind::Polynomial:
        return d_->poly == o.d_->poly;
    case FuncKind::TrigPoly: {
        if (d_->trig.size() != o.d_->trig.size()) return false;
        auto it2 = o.d_->trig.begin();
        for (auto it1 = d_->trig.begin(); it1 != d_->trig.end(); ++it1, ++it2) {
            if (it1->first != it2->first) return false;
            if (!(it1->second == it2->second)) return false;
        }
        return true;
    }
    case FuncKind::CosetIndicator:
        return *d_->lattice == *o.d_->lattice && d_->offset == o.d_->offset;
    case FuncKind::LatticeFunction:
        return *d_->lattice == *o.d_->lattice && d_->rule == o.d_->rule &&
               d_->offValue == o.d_->offValue;
    case FuncKind::WindowTable:
        return *d_->lattice == *o.d_->lattice && d_->radius == o.d_->radius &&
               d_->table == o.d_->table && d_->offValue == o.d_->offValue;
    case FuncKind::LinComb: {
        if (d_->parts.size() != o.d_->parts.size()) return false;
        for (size_t i = 0; i < d_->parts.size(); ++i) {
            if (d_->parts[i].first != o.d_->parts[i].first) return false;
            if (!(d_->parts[i].second == o.d_->parts[i].second)) return false;
        }
        return true;
    }
    }
    return false;
}

namespace {

SymbolicFunction translate(const FormalReal& b, const SymbolicFunction& f);

SymbolicFunction translatePolynomial(const FormalReal& b, const SymbolicFunction& f) {
    if (!b.isRational())
        throw RepresentabilityError(
            "shifting a nonconstant polynomial by an irrational amount leaves the class");
    Rational c = b.rationalPart();
    const auto& a = f.polyCoeffs();
    size_t n = a.size();
    // p(x + c) via binomial expansion.
    std::vector<Rational> out(n, Rational(0));
    std::vector<std::vector<Rational>> binom(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        binom[i][0] = 1;
        for (size_t j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : Rational(0));
    }
    for (size_t i = 0; i < n; ++i) {
        Rational cpow(1);
        for (size_t j = 0; j <= i; ++j) { // contribution to x^(i-j)
            out[i - j] += a[i] * binom[i][j] * cpow;
            cpow *= c;
        }
    }
    return SymbolicFunction::polynomial(f.context(), std::move(out));
}

SymbolicFunction translateTrig(const FormalReal& b, const SymbolicFunction& f) {
    if (!b.isRational())
        throw RepresentabilityError("irrational phase product in trigonometric shift");
    Rational c = b.rationalPart();
    std::map<Rational, CyclotomicNumber> out;
    for (const auto& [freq, coeff] : f.trigTerms())
        out[freq] = coeff * CyclotomicNumber::rootOfUnity(PhaseQ(freq * c));
    return SymbolicFunction::trig(f.context(), std::move(out));
}

SymbolicFunction translate(const FormalReal& b, const SymbolicFunction& f) {
    switch (f.kind()) {
    case FuncKind::Constant:
        return f;
    case FuncKind::Polynomial:
        return translatePolynomial(b, f);
    case FuncKind::TrigPoly:
        return translateTrig(b, f);
    case FuncKind::CosetIndicator:
        return SymbolicFunction::cosetIndicator(f.lattice(), f.cosetOffset() - b);
    case FuncKind::LatticeFunction: {
        auto k = f.lattice().coords(b);
        if (!k)
            throw LatticeError("lattice-rule functions only shift inside their lattice");
        return SymbolicFunction::latticeFunction(f.lattice(), f.rule().shifted(*k),
                                                 f.offLatticeValue());
    }
    case FuncKind::WindowTable:
        throw RepresentabilityError("window-restricted values do not shift symbolically");
    case FuncKind::LinComb: {
        std::vector<std::pair<Rational, SymbolicFunction>> parts;
        for (const auto& [q, sub] : f.parts()) parts.emplace_back(q, translate(b, sub));
        return SymbolicFunction::linComb(f.context(), std::move(parts));
    }
    }
    throw Error("unreachable");
}

} // namespace

SymbolicFunction applyOperator(const DifferenceOperator& op, const SymbolicFunction& f) {
    requireSameContext(op.context(), f.context());
    std::vector<std::pair<Rational, SymbolicFunction>> parts;
    for (const auto& [q, b] : op.terms()) parts.emplace_back(q, translate(b, f));
    return SymbolicFunction::linComb(f.context(), std::move(parts));
}

EvalValue evaluate(const SymbolicFunction& f, const FormalReal& x) {
    requireSameContext(f.context(), x.context());
    switch (f.kind()) {
    case FuncKind::Constant:
        return {true, f.constantValue(), 0.0};
    case FuncKind::Polynomial: {
        if (!x.isRational())
            throw EvalError("polynomial evaluation needs a rational point");
        Rational t = x.rationalPart(), v(0);
        const auto& a = f.polyCoeffs();
        for (size_t i = a.size(); i-- > 0;) v = v * t + a[i];
        return {true, v, 0.0};
    }
    case FuncKind::TrigPoly: {
        if (!x.isRational())
            throw EvalError("trigonometric evaluation needs a rational point");
        Rational t = x.rationalPart();
        CyclotomicNumber acc;
        for (const auto& [freq, coeff] : f.trigTerms())
            acc = acc + (coeff * CyclotomicNumber::rootOfUnity(PhaseQ(freq * t))).realPart();
        if (acc.isRational()) return {true, acc.asRational(), 0.0};
        return {false, Rational(0), acc.toComplex().real()};
    }
    case FuncKind::CosetIndicator:
        return {true, Rational(f.lattice().member(x - f.cosetOffset()) ? 1 : 0), 0.0};
    case FuncKind::LatticeFunction: {
        auto k = f.lattice().coords(x);
        if (!k) return {true, f.offLatticeValue(), 0.0};
        return {true, f.rule().evaluate(*k), 0.0};
    }
    case FuncKind::WindowTable: {
        auto k = f.lattice().coords(x);
        if (!k) return {true, f.offLatticeValue(), 0.0};
        auto it = f.windowValues().find(*k);
        if (it == f.windowValues().end())
            throw EvalError("point is outside the verified window");
        return {true, it->second, 0.0};
    }
    case FuncKind::LinComb: {
        Rational exact(0);
        double approx = 0.0;
        bool allExact = true;
        for (const auto& [q, sub] : f.parts()) {
            EvalValue v = evaluate(sub, x);
            if (v.exact) {
                exact += q * v.r;
            } else {
                allExact = false;
                approx += toDouble(q) * v.f;
            }
        }
        if (allExact) return {true, exact, 0.0};
        return {false, Rational(0), toDouble(exact) + approx};
    }
    }
    throw Error("unreachable");
}

double evalNumeric(const SymbolicFunction& f, double x) {
    switch (f.kind()) {
    case FuncKind::Constant:
        return toDouble(f.constantValue());
    case FuncKind::Polynomial: {
        double v = 0.0;
        const auto& a = f.polyCoeffs();
        for (size_t i = a.size(); i-- > 0;) v = v * x + toDouble(a[i]);
        return v;
    }
    case FuncKind::TrigPoly: {
        double v = 0.0;
        for (const auto& [freq, coeff] : f.trigTerms()) {
            double angle = 2.0 * std::numbers::pi * toDouble(freq) * x;
            std::complex<double> c = coeff.toComplex();
            v += c.real() * std::cos(angle) - c.imag() * std::sin(angle);
        }
        return v;
    }
    case FuncKind::LinComb: {
        double v = 0.0;
        for (const auto& [q, sub] : f.parts()) v += toDouble(q) * evalNumeric(sub, x);
        return v;
    }
    default:
        throw EvalError("numeric sampling is defined for scalar classes only");
    }
}

namespace {

std::string renderLatticeGens(const Lattice& L) {
    std::string out = "<";
    for (size_t j = 0; j < L.rank(); ++j) {
        if (j) out += ",";
        out += L.basisVector(j).render();
    }
    return out + ">";
}

std::string renderFreqFactor(const Rational& freq) {
    return freq == 1 ? "x)" : renderRational(freq) + "*x)";
}

std::string renderTrigTerm(const Rational& freq, const CyclotomicNumber& coeff) {
    if (coeff.isRational()) {
        Rational q = coeff.asRational();
        std::string head = q == 1 ? "" : (q == -1 ? "-" : renderRational(q) + "*");
        return head + "cos(2pi*" + renderFreqFactor(freq);
    }
    CyclotomicNumber rotated = coeff * CyclotomicNumber::rootOfUnity(PhaseQ(Rational(1, 4)));
    if (rotated.isRational()) {
        Rational q = rotated.asRational();
        std::string head = q == 1 ? "" : (q == -1 ? "-" : renderRational(q) + "*");
        return head + "sin(2pi*" + renderFreqFactor(freq);
    }
    std::string out = "trig(" + renderRational(freq) + "; " + std::to_string(coeff.order());
    for (const auto& [e, q] : coeff.coeffs())
        out += "; " + std::to_string(e) + ":" + renderRational(q);
    return out + ")";
}

} // namespace

std::string SymbolicFunction::render() const {
    switch (kind()) {
    case FuncKind::Constant:
        return renderRational(d_->constant);
    case FuncKind::Polynomial: {
        std::string out = "poly(";
        for (size_t i = 0; i < d_->poly.size(); ++i) {
            if (i) out += ",";
            out += renderRational(d_->poly[i]);
        }
        return out + ")";
    }
    case FuncKind::TrigPoly: {
        std::string out;
        for (const auto& [freq, coeff] : d_->trig) {
            std::string term = renderTrigTerm(freq, coeff);
            if (out.empty()) {
                out = term;
            } else if (!term.empty() && term[0] == '-') {
                out += " - " + term.substr(1);
            } else {
                out += " + " + term;
            }
        }
        return out;
    }
    case FuncKind::CosetIndicator:
        return "chi(" + renderLatticeGens(*d_->lattice) + " + " + d_->offset.render() + ")";
    case FuncKind::LatticeFunction: {
        std::string out = "latfun(" + renderLatticeGens(*d_->lattice) + "; " + d_->rule.render();
        if (d_->offValue != 0) out += "; off=" + renderRational(d_->offValue);
        return out + ")";
    }
    case FuncKind::WindowTable: {
        std::string out =
            "wintable(" + renderLatticeGens(*d_->lattice) + "; r=" + std::to_string(d_->radius) + "; {";
        bool first = true;
        for (const auto& [pt, v] : d_->table) {
            if (!first) out += ", ";
            first = false;
            out += "(";
            for (size_t i = 0; i < pt.size(); ++i) {
                if (i) out += ",";
                out += pt[i].str();
            }
            out += "):" + renderRational(v);
        }
        out += "}";
        if (d_->offValue != 0) out += "; off=" + renderRational(d_->offValue);
        return out + ")";
    }
    case FuncKind::LinComb: {
        std::string out;
        for (const auto& [q, sub] : d_->parts) {
            bool first = out.empty();
            Rational a = ratAbs(q);
            out += q < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
            if (a != 1) out += renderRational(a) + "*";
            std::string body = sub.render();
            bool atomic = sub.kind() != FuncKind::LinComb &&
                          (sub.kind() != FuncKind::TrigPoly || sub.trigTerms().size() == 1);
            if (a != 1 && !atomic) body = "(" + body + ")";
            out += body;
        }
        return out;
    }
    }
    throw Error("unreachable");
}

EqualResult functionsEqual(const SymbolicFunction& f, const SymbolicFunction& g) {
    SymbolicFunction diff = f - g;
    if (zeroTest(diff)) return {true, std::nullopt};
    return {false, findNonzeroPoint(diff)};
}

} // namespace diffsys
