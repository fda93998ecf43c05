#include "diffsys/basis.hpp"

#include <algorithm>
#include <set>

namespace diffsys {

std::optional<Rational> parseRational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    size_t i = 0;
    bool neg = false;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    auto readDigits = [&](Int& out) -> bool {
        if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i]))) return false;
        Int v = 0;
        while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
            v = v * 10 + (text[i] - '0');
            ++i;
        }
        out = v;
        return true;
    };
    Int p, q(1);
    if (!readDigits(p)) return std::nullopt;
    if (i < text.size() && text[i] == '/') {
        ++i;
        if (!readDigits(q) || q == 0) return std::nullopt;
    }
    if (i != text.size()) return std::nullopt;
    Rational r(p, q);
    return neg ? Rational(-r) : r;
}

BasisContext::BasisContext(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw Error("empty basis symbol name");
        if (!seen.insert(n).second) throw Error("duplicate basis symbol: " + n);
    }
}

int BasisContext::indexOf(const std::string& name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i) + 1;
    return 0;
}

const std::string& BasisContext::name(int index) const {
    return names_.at(static_cast<size_t>(index) - 1);
}

BasisPtr makeBasis(std::vector<std::string> names) {
    return std::make_shared<const BasisContext>(std::move(names));
}

void requireSameContext(const BasisPtr& a, const BasisPtr& b) {
    if (a == b) return;
    if (a && b && *a == *b) return;
    throw ContextError("values belong to different basis contexts");
}

void FormalReal::set(int index, const Rational& q) {
    if (q == 0)
        coords_.erase(index);
    else
        coords_[index] = q;
}

FormalReal FormalReal::rational(BasisPtr ctx, const Rational& q) {
    FormalReal r(std::move(ctx));
    r.set(0, q);
    return r;
}

FormalReal FormalReal::symbol(BasisPtr ctx, int index, const Rational& coeff) {
    if (index < 1 || static_cast<size_t>(index) > ctx->symbolCount())
        throw Error("basis symbol index out of range");
    FormalReal r(std::move(ctx));
    r.set(index, coeff);
    return r;
}

Rational FormalReal::coeff(int index) const {
    auto it = coords_.find(index);
    return it == coords_.end() ? Rational(0) : it->second;
}

bool FormalReal::isRational() const {
    return coords_.empty() || (coords_.size() == 1 && coords_.begin()->first == 0);
}

FormalReal FormalReal::operator+(const FormalReal& o) const {
    requireSameContext(ctx_, o.ctx_);
    FormalReal r(ctx_ ? ctx_ : o.ctx_);
    r.coords_ = coords_;
    for (const auto& [i, q] : o.coords_) r.set(i, r.coeff(i) + q);
    return r;
}

FormalReal FormalReal::operator-(const FormalReal& o) const { return *this + (-o); }

FormalReal FormalReal::operator-() const {
    FormalReal r(ctx_);
    for (const auto& [i, q] : coords_) r.coords_[i] = -q;
    return r;
}

FormalReal FormalReal::scaled(const Rational& q) const {
    FormalReal r(ctx_);
    if (q == 0) return r;
    for (const auto& [i, c] : coords_) r.coords_[i] = c * q;
    return r;
}

bool FormalReal::operator==(const FormalReal& o) const {
    requireSameContext(ctx_, o.ctx_);
    return coords_ == o.coords_;
}

std::vector<Rational> FormalReal::dense() const {
    std::vector<Rational> v(ctx_ ? ctx_->dim() : 1, Rational(0));
    for (const auto& [i, q] : coords_) v.at(static_cast<size_t>(i)) = q;
    return v;
}

FormalReal FormalReal::fromDense(BasisPtr ctx, const std::vector<Rational>& v) {
    FormalReal r(ctx);
    for (size_t i = 0; i < v.size(); ++i) r.set(static_cast<int>(i), v[i]);
    return r;
}

int compare(const FormalReal& a, const FormalReal& b) {
    requireSameContext(a.ctx_, b.ctx_);
    auto ia = a.coords_.begin(), ib = b.coords_.begin();
    while (ia != a.coords_.end() && ib != b.coords_.end()) {
        if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
        ++ia;
        ++ib;
    }
    if (ia != a.coords_.end()) return 1;
    if (ib != b.coords_.end()) return -1;
    return 0;
}

std::string FormalReal::render() const {
    if (coords_.empty()) return "0";
    std::string out;
    auto append = [&](const Rational& q, const std::string& sym) {
        bool first = out.empty();
        Rational a = ratAbs(q);
        std::string sign = q < 0 ? (first ? "-" : " - ") : (first ? "" : " + ");
        out += sign;
        if (sym.empty()) {
            out += renderRational(a);
        } else if (a == 1) {
            out += sym;
        } else {
            out += renderRational(a) + "*" + sym;
        }
    };
    for (const auto& [i, q] : coords_)
        if (i != 0) append(q, ctx_->name(i));
    auto it = coords_.find(0);
    if (it != coords_.end()) append(it->second, "");
    return out;
}

} // namespace diffsys
