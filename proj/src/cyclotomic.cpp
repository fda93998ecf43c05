#include "diffsys/cyclotomic.hpp"

#include <cmath>
#include <mutex>
#include <numbers>
#include <unordered_map>

namespace diffsys {

namespace {

// Exact division of integer polynomials, quotient only; divisor monic.
std::vector<Int> dividePoly(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> rem = a;
    std::vector<Int> quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Int(0));
    while (rem.size() >= b.size()) {
        Int lead = rem.back();
        size_t shift = rem.size() - b.size();
        quo[shift] = lead;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= lead * b[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.empty()) break;
    }
    return quo;
}

std::unordered_map<long, std::vector<Int>> g_phiCache;
std::mutex g_phiMutex;

std::vector<Int> computePhi(long n) {
    // Phi_n = (x^n - 1) / prod of Phi_d over proper divisors d of n.
    std::vector<Int> f(static_cast<size_t>(n) + 1, Int(0));
    f[0] = -1;
    f[static_cast<size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        f = dividePoly(f, cyclotomicPoly(d));
    }
    return f;
}

} // namespace

const std::vector<Int>& cyclotomicPoly(long n) {
    if (n < 1) throw Error("cyclotomic order must be positive");
    if (n > kCyclotomicOrderCap) throw ResourceError("cyclotomic order exceeds cap");
    {
        std::lock_guard<std::mutex> lock(g_phiMutex);
        auto it = g_phiCache.find(n);
        if (it != g_phiCache.end()) return it->second;
    }
    std::vector<Int> phi = computePhi(n);
    std::lock_guard<std::mutex> lock(g_phiMutex);
    return g_phiCache.emplace(n, std::move(phi)).first->second;
}

CyclotomicNumber CyclotomicNumber::make(long order, std::map<long, Rational> raw) {
    CyclotomicNumber z;
    z.order_ = order;
    z.c_ = std::move(raw);
    z.reduce();
    return z;
}

void CyclotomicNumber::reduce() {
    // Exponents mod N first (x^N == 1), then remainder mod Phi_N.
    std::map<long, Rational> folded;
    for (const auto& [e, q] : c_) {
        if (q == 0) continue;
        long r = e % order_;
        if (r < 0) r += order_;
        auto [it, fresh] = folded.emplace(r, q);
        if (!fresh) it->second += q;
    }
    const std::vector<Int>& phi = cyclotomicPoly(order_);
    long deg = static_cast<long>(phi.size()) - 1;
    std::vector<Rational> dense(static_cast<size_t>(order_), Rational(0));
    for (const auto& [e, q] : folded) dense[static_cast<size_t>(e)] = q;
    for (long i = order_ - 1; i >= deg; --i) {
        Rational lead = dense[static_cast<size_t>(i)];
        if (lead == 0) continue;
        for (long j = 0; j <= deg; ++j)
            dense[static_cast<size_t>(i - deg + j)] -= lead * Rational(phi[static_cast<size_t>(j)]);
    }
    c_.clear();
    for (long e = 0; e < deg; ++e)
        if (dense[static_cast<size_t>(e)] != 0) c_[e] = dense[static_cast<size_t>(e)];
    if (c_.empty() || (c_.size() == 1 && c_.begin()->first == 0)) order_ = 1;
}

CyclotomicNumber CyclotomicNumber::fromRational(const Rational& q) {
    CyclotomicNumber z;
    if (q != 0) z.c_[0] = q;
    return z;
}

CyclotomicNumber CyclotomicNumber::rootOfUnity(const PhaseQ& phase) {
    long n = static_cast<long>(den(phase.value()));
    long p = static_cast<long>(num(phase.value()));
    return make(n, {{p, Rational(1)}});
}

CyclotomicNumber CyclotomicNumber::atOrder(long n) const {
    if (n == order_) return *this;
    if (n % order_ != 0) throw Error("target order must be a multiple");
    std::map<long, Rational> raw;
    long f = n / order_;
    for (const auto& [e, q] : c_) raw[e * f] = q;
    return make(n, std::move(raw));
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    long n = static_cast<long>(intLcm(Int(order_), Int(o.order_)).convert_to<long>());
    CyclotomicNumber a = atOrder(n), b = o.atOrder(n);
    for (const auto& [e, q] : b.c_) {
        auto [it, fresh] = a.c_.emplace(e, q);
        if (!fresh) it->second += q;
    }
    return make(n, std::move(a.c_));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber z = *this;
    for (auto& [e, q] : z.c_) q = -q;
    return z;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    return *this + (-o);
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    long n = static_cast<long>(intLcm(Int(order_), Int(o.order_)).convert_to<long>());
    CyclotomicNumber a = atOrder(n), b = o.atOrder(n);
    std::map<long, Rational> raw;
    for (const auto& [e1, q1] : a.c_)
        for (const auto& [e2, q2] : b.c_) {
            auto [it, fresh] = raw.emplace(e1 + e2, q1 * q2);
            if (!fresh) it->second += q1 * q2;
        }
    return make(n, std::move(raw));
}

CyclotomicNumber CyclotomicNumber::scaled(const Rational& q) const {
    if (q == 0) return CyclotomicNumber();
    CyclotomicNumber z = *this;
    for (auto& [e, c] : z.c_) c *= q;
    return z;
}

CyclotomicNumber CyclotomicNumber::conj() const {
    std::map<long, Rational> raw;
    for (const auto& [e, q] : c_) raw[e == 0 ? 0 : order_ - e] = q;
    return make(order_, std::move(raw));
}

bool CyclotomicNumber::isRational() const {
    return c_.empty() || (c_.size() == 1 && c_.begin()->first == 0);
}

Rational CyclotomicNumber::asRational() const {
    if (!isRational()) throw Error("cyclotomic value is not rational");
    return c_.empty() ? Rational(0) : c_.begin()->second;
}

CyclotomicNumber CyclotomicNumber::realPart() const {
    return (*this + conj()).scaled(Rational(1, 2));
}

std::complex<double> CyclotomicNumber::toComplex() const {
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [e, q] : c_) {
        double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(order_);
        acc += toDouble(q) * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

} // namespace diffsys
