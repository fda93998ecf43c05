#include "diffsys/lattice.hpp"

#include <algorithm>

namespace diffsys {

namespace {

void colAddMul(IntVec& target, const IntVec& src, const Int& q) {
    for (size_t i = 0; i < target.size(); ++i) target[i] += q * src[i];
}

// Column echelon reduction over the integers with optional transform tracking.
// After the call, cols[0..rank) are the HNF columns and cols[rank..) are zero;
// if U is non-null it receives the same column operations starting from the
// identity, so original * U == cols.
size_t echelonize(IntMat& cols, size_t rows, std::vector<int>& pivotRows, IntMat* U) {
    size_t n = cols.size();
    if (U) {
        U->assign(n, IntVec(n, 0));
        for (size_t j = 0; j < n; ++j) (*U)[j][j] = 1;
    }
    auto swapCols = [&](size_t a, size_t b) {
        if (a == b) return;
        std::swap(cols[a], cols[b]);
        if (U) std::swap((*U)[a], (*U)[b]);
    };
    auto addMul = [&](size_t dst, size_t src, const Int& q) {
        if (q == 0) return;
        colAddMul(cols[dst], cols[src], q);
        if (U) colAddMul((*U)[dst], (*U)[src], q);
    };
    auto negate = [&](size_t j) {
        for (auto& v : cols[j]) v = -v;
        if (U)
            for (auto& v : (*U)[j]) v = -v;
    };

    pivotRows.clear();
    size_t r = 0;
    for (size_t row = 0; row < rows && r < n; ++row) {
        // Gcd-chain the entries of columns r.. at this row into column r.
        while (true) {
            size_t best = n;
            for (size_t j = r; j < n; ++j) {
                if (cols[j][row] == 0) continue;
                if (best == n || intAbs(cols[j][row]) < intAbs(cols[best][row])) best = j;
            }
            if (best == n) break; // row has no pivot among remaining columns
            swapCols(r, best);
            bool clean = true;
            for (size_t j = r + 1; j < n; ++j) {
                if (cols[j][row] == 0) continue;
                Int q = cols[j][row] / cols[r][row]; // truncated; remainder shrinks
                addMul(j, r, -q);
                if (cols[j][row] != 0) clean = false;
            }
            if (clean) break;
        }
        if (cols[r][row] == 0) continue;
        if (cols[r][row] < 0) negate(r);
        for (size_t j = 0; j < r; ++j) {
            Int q = cols[j][row] / cols[r][row];
            if (cols[j][row] < 0 && q * cols[r][row] != cols[j][row]) --q; // floor
            addMul(j, r, -q);
        }
        pivotRows.push_back(static_cast<int>(row));
        ++r;
    }
    return r;
}

} // namespace

HnfResult columnHnf(IntMat cols, size_t rows) {
    HnfResult res;
    size_t r = echelonize(cols, rows, res.pivotRows, nullptr);
    cols.resize(r);
    res.cols = std::move(cols);
    return res;
}

IntMat integerKernel(const IntMat& cols, size_t rows) {
    IntMat work = cols;
    IntMat U;
    std::vector<int> pivots;
    size_t r = echelonize(work, rows, pivots, &U);
    IntMat kernel;
    for (size_t j = r; j < work.size(); ++j) kernel.push_back(U[j]);
    return kernel;
}

Lattice Lattice::trivial(BasisPtr ctx) {
    Lattice L;
    L.ctx_ = std::move(ctx);
    L.m_ = L.ctx_->dim();
    return L;
}

Lattice Lattice::fromGenerators(BasisPtr ctx, const std::vector<FormalReal>& gens) {
    size_t m = ctx->dim();
    Int d(1);
    for (const auto& g : gens) {
        requireSameContext(ctx, g.context());
        for (const auto& [i, q] : g.coords()) d = intLcm(d, den(q));
    }
    IntMat cols;
    for (const auto& g : gens) {
        IntVec col(m, 0);
        for (const auto& [i, q] : g.coords())
            col[static_cast<size_t>(i)] = num(q) * (d / den(q));
        cols.push_back(std::move(col));
    }
    HnfResult h = columnHnf(std::move(cols), m);

    // Minimal scale: divide out any common factor shared by d and every entry.
    Int g = d;
    for (const auto& col : h.cols)
        for (const auto& v : col) g = intGcd(g, v);
    if (g > 1) {
        d /= g;
        for (auto& col : h.cols)
            for (auto& v : col) v /= g;
    }

    Lattice L;
    L.ctx_ = std::move(ctx);
    L.m_ = m;
    L.d_ = d;
    L.basis_ = std::move(h.cols);
    L.pivotRows_ = std::move(h.pivotRows);
    return L;
}

std::optional<LatticePoint> Lattice::coords(const FormalReal& x) const {
    requireSameContext(ctx_, x.context());
    std::vector<Rational> w(m_, Rational(0));
    for (const auto& [i, q] : x.coords()) w[static_cast<size_t>(i)] = q * d_;
    IntVec wi(m_);
    for (size_t i = 0; i < m_; ++i) {
        if (den(w[i]) != 1) return std::nullopt;
        wi[i] = num(w[i]);
    }
    LatticePoint c(basis_.size());
    for (size_t j = 0; j < basis_.size(); ++j) {
        size_t row = static_cast<size_t>(pivotRows_[j]);
        Int p = basis_[j][row];
        if (wi[row] % p != 0) return std::nullopt;
        c[j] = wi[row] / p;
        for (size_t i = 0; i < m_; ++i) wi[i] -= c[j] * basis_[j][i];
    }
    for (const auto& v : wi)
        if (v != 0) return std::nullopt;
    return c;
}

bool Lattice::member(const FormalReal& x) const { return coords(x).has_value(); }

FormalReal Lattice::basisVector(size_t j) const {
    std::vector<Rational> v(m_);
    for (size_t i = 0; i < m_; ++i) v[i] = Rational(basis_.at(j)[i], d_);
    return FormalReal::fromDense(ctx_, v);
}

FormalReal Lattice::toAmbient(const LatticePoint& pt) const {
    if (pt.size() != basis_.size()) throw LatticeError("coordinate length mismatch");
    std::vector<Rational> v(m_, Rational(0));
    for (size_t j = 0; j < basis_.size(); ++j)
        for (size_t i = 0; i < m_; ++i) v[i] += Rational(pt[j] * basis_[j][i], d_);
    return FormalReal::fromDense(ctx_, v);
}

FormalReal Lattice::reduceOffset(const FormalReal& x) const {
    requireSameContext(ctx_, x.context());
    std::vector<Rational> w(m_, Rational(0));
    for (const auto& [i, q] : x.coords()) w[static_cast<size_t>(i)] = q * d_;
    for (size_t j = 0; j < basis_.size(); ++j) {
        size_t row = static_cast<size_t>(pivotRows_[j]);
        Int c = ratFloor(w[row] / Rational(basis_[j][row]));
        if (c == 0) continue;
        for (size_t i = 0; i < m_; ++i) w[i] -= Rational(c * basis_[j][i]);
    }
    for (auto& q : w) q /= d_;
    return FormalReal::fromDense(ctx_, w);
}

bool Lattice::operator==(const Lattice& o) const {
    requireSameContext(ctx_, o.ctx_);
    return d_ == o.d_ && basis_ == o.basis_;
}

int Lattice::compare(const Lattice& a, const Lattice& b) {
    requireSameContext(a.ctx_, b.ctx_);
    if (a.d_ != b.d_) return a.d_ < b.d_ ? -1 : 1;
    if (a.basis_.size() != b.basis_.size()) return a.basis_.size() < b.basis_.size() ? -1 : 1;
    if (a.basis_ != b.basis_) return a.basis_ < b.basis_ ? -1 : 1;
    return 0;
}

bool Lattice::contains(const Lattice& other) const {
    for (size_t j = 0; j < other.rank(); ++j)
        if (!member(other.basisVector(j))) return false;
    return true;
}

Lattice Lattice::sum(const Lattice& a, const Lattice& b) {
    requireSameContext(a.ctx_, b.ctx_);
    std::vector<FormalReal> gens;
    for (size_t j = 0; j < a.rank(); ++j) gens.push_back(a.basisVector(j));
    for (size_t j = 0; j < b.rank(); ++j) gens.push_back(b.basisVector(j));
    return fromGenerators(a.ctx_, gens);
}

Lattice Lattice::intersect(const Lattice& a, const Lattice& b) {
    requireSameContext(a.ctx_, b.ctx_);
    Int D = intLcm(a.d_, b.d_);
    IntMat stacked;
    for (size_t j = 0; j < a.rank(); ++j) {
        IntVec col = a.basis_[j];
        for (auto& v : col) v *= D / a.d_;
        stacked.push_back(std::move(col));
    }
    for (size_t j = 0; j < b.rank(); ++j) {
        IntVec col = b.basis_[j];
        for (auto& v : col) v *= -(D / b.d_);
        stacked.push_back(std::move(col));
    }
    IntMat kernel = integerKernel(stacked, a.m_);
    std::vector<FormalReal> gens;
    for (const auto& k : kernel) {
        LatticePoint pt(k.begin(), k.begin() + static_cast<long>(a.rank()));
        // a-combination scaled back from the common denominator D.
        std::vector<Rational> v(a.m_, Rational(0));
        for (size_t j = 0; j < a.rank(); ++j)
            for (size_t i = 0; i < a.m_; ++i)
                v[i] += Rational(pt[j] * a.basis_[j][i] * (D / a.d_), D);
        gens.push_back(FormalReal::fromDense(a.ctx_, v));
    }
    return fromGenerators(a.ctx_, gens);
}

const std::vector<std::vector<Rational>>& Lattice::spanRref() const {
    if (!spanCache_) {
        std::vector<std::vector<Rational>> rows;
        for (size_t j = 0; j < basis_.size(); ++j) {
            std::vector<Rational> row(m_);
            for (size_t i = 0; i < m_; ++i) row[i] = Rational(basis_[j][i]);
            rows.push_back(std::move(row));
        }
        // Gauss-Jordan to reduced row echelon form.
        size_t r = 0;
        for (size_t col = 0; col < m_ && r < rows.size(); ++col) {
            size_t p = r;
            while (p < rows.size() && rows[p][col] == 0) ++p;
            if (p == rows.size()) continue;
            std::swap(rows[r], rows[p]);
            Rational lead = rows[r][col];
            for (auto& v : rows[r]) v /= lead;
            for (size_t i = 0; i < rows.size(); ++i) {
                if (i == r || rows[i][col] == 0) continue;
                Rational f = rows[i][col];
                for (size_t c = 0; c < m_; ++c) rows[i][c] -= f * rows[r][c];
            }
            ++r;
        }
        rows.resize(r);
        spanCache_ = std::move(rows);
    }
    return *spanCache_;
}

bool Lattice::sameSpan(const Lattice& o) const { return spanRref() == o.spanRref(); }

std::vector<Rational> Lattice::reduceModSpan(const FormalReal& x) const {
    std::vector<Rational> v(m_, Rational(0));
    for (const auto& [i, q] : x.coords()) v[static_cast<size_t>(i)] = q;
    for (const auto& row : spanRref()) {
        size_t col = 0;
        while (col < m_ && row[col] == 0) ++col;
        if (col == m_) continue;
        Rational f = v[col]; // row has a unit pivot at col
        if (f == 0) continue;
        for (size_t c = 0; c < m_; ++c) v[c] -= f * row[c];
    }
    return v;
}

std::vector<FormalReal> Lattice::cosetRepresentatives(const Lattice& sub, size_t cap) const {
    if (rank() != sub.rank()) throw LatticeError("coset enumeration needs equal ranks");
    // Sub's basis in this lattice's coordinates; integral iff sub is contained.
    IntMat H;
    for (size_t j = 0; j < sub.rank(); ++j) {
        auto c = coords(sub.basisVector(j));
        if (!c) throw LatticeError("not a sublattice");
        H.push_back(*c);
    }
    HnfResult h = columnHnf(std::move(H), rank());
    if (h.cols.size() != rank()) throw LatticeError("sublattice has smaller rank");
    Int index(1);
    for (size_t j = 0; j < h.cols.size(); ++j)
        index *= h.cols[j][static_cast<size_t>(h.pivotRows[j])];
    if (index > Int(cap)) throw ResourceError("coset index exceeds enumeration cap");

    // Canonical residues: pivot-row coordinates range over [0, pivot).
    std::vector<FormalReal> reps;
    LatticePoint cur(rank(), Int(0));
    std::vector<Int> limits(rank());
    for (size_t j = 0; j < rank(); ++j)
        limits[static_cast<size_t>(h.pivotRows[j])] = h.cols[j][static_cast<size_t>(h.pivotRows[j])];
    while (true) {
        reps.push_back(toAmbient(cur));
        size_t j = 0;
        for (; j < rank(); ++j) {
            if (++cur[j] < limits[j]) break;
            cur[j] = 0;
        }
        if (j == rank()) break;
    }
    return reps;
}

} // namespace diffsys
