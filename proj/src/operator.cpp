#include "diffsys/operator.hpp"

#include <algorithm>

namespace diffsys {

void DifferenceOperator::insert(const Rational& q, const FormalReal& b) {
    if (q == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                               [](const auto& term, const FormalReal& key) {
                                   return compare(term.second, key) < 0;
                               });
    if (it != terms_.end() && compare(it->second, b) == 0) {
        it->first += q;
        if (it->first == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {q, b});
    }
}

DifferenceOperator DifferenceOperator::translation(const FormalReal& b) {
    DifferenceOperator d(b.context());
    d.insert(Rational(1), b);
    return d;
}

DifferenceOperator DifferenceOperator::delta(const FormalReal& b) {
    DifferenceOperator d(b.context());
    d.insert(Rational(1), b);
    d.insert(Rational(-1), FormalReal(b.context()));
    return d;
}

DifferenceOperator DifferenceOperator::fromTerms(
    BasisPtr ctx, std::vector<std::pair<Rational, FormalReal>> terms) {
    DifferenceOperator d(std::move(ctx));
    for (auto& [q, b] : terms) {
        requireSameContext(d.ctx_, b.context());
        d.insert(q, b);
    }
    return d;
}

DifferenceOperator DifferenceOperator::operator+(const DifferenceOperator& o) const {
    requireSameContext(ctx_, o.ctx_);
    DifferenceOperator d = *this;
    for (const auto& [q, b] : o.terms_) d.insert(q, b);
    return d;
}

DifferenceOperator DifferenceOperator::operator-() const {
    DifferenceOperator d = *this;
    for (auto& [q, b] : d.terms_) q = -q;
    return d;
}

DifferenceOperator DifferenceOperator::operator-(const DifferenceOperator& o) const {
    return *this + (-o);
}

DifferenceOperator DifferenceOperator::scaled(const Rational& q) const {
    if (q == 0) return DifferenceOperator(ctx_);
    DifferenceOperator d = *this;
    for (auto& [c, b] : d.terms_) c *= q;
    return d;
}

DifferenceOperator DifferenceOperator::compose(const DifferenceOperator& o) const {
    requireSameContext(ctx_, o.ctx_);
    DifferenceOperator d(ctx_ ? ctx_ : o.ctx_);
    for (const auto& [q1, b1] : terms_)
        for (const auto& [q2, b2] : o.terms_) d.insert(q1 * q2, b1 + b2);
    return d;
}

bool DifferenceOperator::operator==(const DifferenceOperator& o) const {
    requireSameContext(ctx_, o.ctx_);
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].first != o.terms_[i].first ||
            compare(terms_[i].second, o.terms_[i].second) != 0)
            return false;
    return true;
}

Rational DifferenceOperator::norm() const {
    Rational n(0);
    for (const auto& [q, b] : terms_) n += ratAbs(q);
    return n;
}

std::vector<FormalReal> DifferenceOperator::shifts() const {
    std::vector<FormalReal> out;
    out.reserve(terms_.size());
    for (const auto& [q, b] : terms_) out.push_back(b);
    return out;
}

bool DifferenceOperator::isDelta(FormalReal* shiftOut) const {
    if (terms_.size() != 2) return false;
    const auto *zeroTerm = &terms_[0], *shiftTerm = &terms_[1];
    if (!zeroTerm->second.isZero()) std::swap(zeroTerm, shiftTerm);
    if (!zeroTerm->second.isZero() || shiftTerm->second.isZero()) return false;
    if (zeroTerm->first != -1 || shiftTerm->first != 1) return false;
    if (shiftOut) *shiftOut = shiftTerm->second;
    return true;
}

std::string DifferenceOperator::render() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [q, b] : terms_) {
        bool first = out.empty();
        Rational a = ratAbs(q);
        out += q < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
        if (a != 1) out += renderRational(a) + "*";
        out += "T[" + b.render() + "]";
    }
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, q] : o.terms) {
        auto [it, fresh] = r.terms.emplace(e, q);
        if (!fresh) {
            it->second += q;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r = LaurentPoly::zero(nvars);
    for (const auto& [e1, q1] : terms)
        for (const auto& [e2, q2] : o.terms) {
            std::vector<Int> e(nvars);
            for (size_t i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
            auto [it, fresh] = r.terms.emplace(std::move(e), q1 * q2);
            if (!fresh) {
                it->second += q1 * q2;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& q) const {
    LaurentPoly r = LaurentPoly::zero(nvars);
    if (q == 0) return r;
    r.terms = terms;
    for (auto& [e, c] : r.terms) c *= q;
    return r;
}

std::string LaurentPoly::render() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [e, q] : terms) {
        bool first = out.empty();
        Rational a = ratAbs(q);
        out += q < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + e[i].str();
        }
        if (mono.empty()) {
            out += renderRational(a);
        } else {
            if (a != 1) out += renderRational(a) + "*";
            out += mono;
        }
    }
    return out;
}

LaurentPoly toLaurent(const DifferenceOperator& op, const Lattice& L) {
    LaurentPoly p = LaurentPoly::zero(L.rank());
    for (const auto& [q, b] : op.terms()) {
        auto c = L.coords(b);
        if (!c) throw LatticeError("operator shift lies outside the lattice");
        p.terms[*c] = q; // shifts are distinct, so exponents are distinct
    }
    return p;
}

DifferenceOperator laurentToOperator(const LaurentPoly& p, const Lattice& L) {
    std::vector<std::pair<Rational, FormalReal>> terms;
    for (const auto& [e, q] : p.terms) terms.emplace_back(q, L.toAmbient(e));
    return DifferenceOperator::fromTerms(L.context(), std::move(terms));
}

} // namespace diffsys
