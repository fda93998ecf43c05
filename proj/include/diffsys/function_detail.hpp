#pragma once

#include <functional>
#include <optional>
#include <tuple>

#include "diffsys/error.hpp"
#include "diffsys/function.hpp"

namespace diffsys {

struct SymbolicFunction::Data {
    FuncKind kind = FuncKind::Constant;
    BasisPtr ctx;
    Rational constant;                          // Constant
    std::vector<Rational> poly;                 // Polynomial, ascending, size >= 2
    std::map<Rational, CyclotomicNumber> trig;  // TrigPoly, positive frequencies
    std::optional<Lattice> lattice;             // coset / lattice / window kinds
    FormalReal offset;                          // CosetIndicator, reduced
    LatticeRule rule;                           // LatticeFunction
    Rational offValue;                          // value off the lattice
    int radius = 0;                             // WindowTable
    std::map<LatticePoint, Rational> table;     // WindowTable
    std::vector<std::pair<Rational, SymbolicFunction>> parts; // LinComb
};

/// Deterministic order on (lattice, reduced offset) pairs, used to keep coset
/// summands of a combination in canonical order.
struct CosetKeyLess {
    bool operator()(const std::pair<Lattice, FormalReal>& a,
                    const std::pair<Lattice, FormalReal>& b) const {
        int c = Lattice::compare(a.first, b.first);
        if (c != 0) return c < 0;
        return compare(a.second, b.second) < 0;
    }
};

} // namespace diffsys
