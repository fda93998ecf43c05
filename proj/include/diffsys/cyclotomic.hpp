#pragma once

#include <complex>
#include <map>
#include <vector>

#include "diffsys/rational.hpp"

namespace diffsys {

/// Rational phase normalized into [0, 1); models an angle as a fraction of a
/// full turn, so arithmetic is mod 1.
class PhaseQ {
public:
    PhaseQ() = default;
    explicit PhaseQ(const Rational& v) : v_(v - Rational(ratFloor(v))) {}
    const Rational& value() const { return v_; }
    PhaseQ operator+(const PhaseQ& o) const { return PhaseQ(v_ + o.v_); }
    PhaseQ operator-() const { return PhaseQ(-v_); }
    PhaseQ scaled(const Rational& q) const { return PhaseQ(v_ * q); }
    bool operator==(const PhaseQ& o) const { return v_ == o.v_; }

private:
    Rational v_ = 0;
};

/// Coefficients of the n-th cyclotomic polynomial, ascending degree. Cached.
/// Throws ResourceError when n exceeds the order cap.
const std::vector<Int>& cyclotomicPoly(long n);

constexpr long kCyclotomicOrderCap = 1L << 20;

/// Element of the cyclotomic field of a given order N, stored as the canonical
/// remainder modulo the N-th cyclotomic polynomial. Exact field arithmetic;
/// equality and zero tests are decisions, not approximations. Rational values
/// normalize to order 1.
class CyclotomicNumber {
public:
    CyclotomicNumber() = default; // zero, order 1
    static CyclotomicNumber fromRational(const Rational& q);
    /// e^(2*pi*i*phase).
    static CyclotomicNumber rootOfUnity(const PhaseQ& phase);

    long order() const { return order_; }
    const std::map<long, Rational>& coeffs() const { return c_; }

    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-() const;
    CyclotomicNumber scaled(const Rational& q) const;
    CyclotomicNumber conj() const;

    bool isZero() const { return c_.empty(); }
    bool isRational() const;
    Rational asRational() const; // requires isRational()
    bool operator==(const CyclotomicNumber& o) const { return (*this - o).isZero(); }
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }

    /// Real part, (z + conj z)/2, as a cyclotomic number.
    CyclotomicNumber realPart() const;

    std::complex<double> toComplex() const;

    /// Raise to an order that the current one divides.
    CyclotomicNumber atOrder(long n) const;

private:
    long order_ = 1;
    std::map<long, Rational> c_; // exponent -> coefficient, reduced form
    static CyclotomicNumber make(long order, std::map<long, Rational> raw);
    void reduce();
};

} // namespace diffsys
