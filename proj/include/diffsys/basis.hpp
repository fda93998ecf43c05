#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "diffsys/rational.hpp"

namespace diffsys {

/// Ordered list of symbols standing for reals that are rationally independent
/// of each other and of 1. Coordinate 0 is reserved for the rational direction;
/// symbol i (1-based) occupies coordinate i.
class BasisContext {
public:
    explicit BasisContext(std::vector<std::string> names);

    size_t symbolCount() const { return names_.size(); }
    /// Ambient coordinate dimension: rational direction plus one per symbol.
    size_t dim() const { return names_.size() + 1; }

    /// 1-based symbol index, or 0 if the name is unknown.
    int indexOf(const std::string& name) const;
    const std::string& name(int index) const; // index is 1-based

    bool operator==(const BasisContext& o) const { return names_ == o.names_; }
    bool operator!=(const BasisContext& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
};

using BasisPtr = std::shared_ptr<const BasisContext>;

BasisPtr makeBasis(std::vector<std::string> names);

/// Throws ContextError unless both pointers refer to equal contexts.
void requireSameContext(const BasisPtr& a, const BasisPtr& b);

/// Exact element of the rational span of {1, b1, ..., bk}: a rational
/// coordinate vector indexed by the basis context. Value semantics.
class FormalReal {
public:
    FormalReal() = default;
    explicit FormalReal(BasisPtr ctx) : ctx_(std::move(ctx)) {}

    static FormalReal rational(BasisPtr ctx, const Rational& q);
    static FormalReal symbol(BasisPtr ctx, int index, const Rational& coeff = Rational(1));

    const BasisPtr& context() const { return ctx_; }
    /// Sparse coordinates; key 0 is the rational part, keys >= 1 are symbols.
    const std::map<int, Rational>& coords() const { return coords_; }

    Rational coeff(int index) const;
    Rational rationalPart() const { return coeff(0); }
    bool isZero() const { return coords_.empty(); }
    bool isRational() const;

    FormalReal operator+(const FormalReal& o) const;
    FormalReal operator-(const FormalReal& o) const;
    FormalReal operator-() const;
    FormalReal scaled(const Rational& q) const;

    bool operator==(const FormalReal& o) const;
    bool operator!=(const FormalReal& o) const { return !(*this == o); }

    /// Dense coordinate vector of length ctx->dim().
    std::vector<Rational> dense() const;
    static FormalReal fromDense(BasisPtr ctx, const std::vector<Rational>& v);

    /// Canonical text, symbols first in index order, rational part last:
    /// "1/2*b1 - b2 + 3/4". Zero renders as "0".
    std::string render() const;

private:
    BasisPtr ctx_;
    std::map<int, Rational> coords_; // nonzero entries only
    void set(int index, const Rational& q);
    friend int compare(const FormalReal& a, const FormalReal& b);
};

/// Total order used for canonical term ordering: lexicographic over the
/// sparse (index, coefficient) sequence. Returns <0, 0, >0.
int compare(const FormalReal& a, const FormalReal& b);

struct FormalRealLess {
    bool operator()(const FormalReal& a, const FormalReal& b) const {
        return compare(a, b) < 0;
    }
};

} // namespace diffsys
