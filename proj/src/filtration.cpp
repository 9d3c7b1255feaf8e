#include "u22/filtration.hpp"

#include <sstream>

namespace u22 {

int floor_div(int a, int b) {
    int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

bool Shape::member(const SqMat& x) const {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (!x.at(i, j).val_at_least(at(i, j))) return false;
    return true;
}

Shape Shape::plus(int c) const {
    Shape s = *this;
    for (auto& v : s.b) v += c;
    return s;
}

Shape Shape::trace_dual() const {
    Shape s;
    s.dim = dim;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) s.at(i, j) = 1 - at(j, i);
    return s;
}

Shape Shape::sigma_image() const {
    if (dim != 4) throw InternalError("sigma_image needs dim 4");
    Shape s;
    s.dim = 4;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) s.at(i, j) = at(3 - j, 3 - i);
    return s;
}

bool Shape::contains(const Shape& other) const {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (at(i, j) > other.at(i, j)) return false;
    return true;
}

std::string Shape::str() const {
    std::ostringstream os;
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) os << (j ? " " : "[") << at(i, j);
        os << "]\n";
    }
    return os.str();
}

int DiagSeq::cf(int t, int i) const {
    int m = t % e;
    if (m < 0) m += e;
    return c[m][i] + (t - m) / e;
}

DiagSeq DiagSeq::of(const LatticeSeq& seq) {
    DiagSeq d;
    d.e = seq.period();
    d.dim = seq.space().dim();
    d.c.resize(d.e);
    for (int t = 0; t < d.e; ++t) {
        if (!seq.at(t).diagonal_exponents(d.c[t]))
            throw DomainError("invalid-input",
                              "filtration shapes require diagonal slice bases");
    }
    return d;
}

Shape filtration_shape(const DiagSeq& d, int k) {
    Shape s;
    s.dim = d.dim;
    for (int i = 0; i < d.dim; ++i)
        for (int j = 0; j < d.dim; ++j) {
            int m = -(1 << 28);
            for (int t = 0; t < d.e; ++t) m = std::max(m, d.cf(t + k, i) - d.cf(t, j));
            s.at(i, j) = m;
        }
    return s;
}

Shape filtration_shape(const LatticeSeq& seq, int k) {
    return filtration_shape(DiagSeq::of(seq), k);
}

int nu(const DiagSeq& d, const SqMat& x) {
    if (x.is_zeroish()) {
        // certify it is really 0 deep enough to call it infinity
        return Qp::INF;
    }
    // largest n with every entry above the bound of a_n; per entry the
    // bound in n is nondecreasing with step pattern of period e
    int best = Qp::INF;
    for (int i = 0; i < d.dim; ++i)
        for (int j = 0; j < d.dim; ++j) {
            const Quad& v = x.at(i, j);
            if (v.is_zeroish()) continue;
            int vv = v.val();
            // find largest n with bound_n(i,j) <= vv: bounds grow by 1 per e
            // steps; scan one period around the right shelf
            int n0 = (vv - d.cf(0, i) + d.cf(0, j)) * d.e;  // coarse start
            int n = n0 + 2 * d.e;
            auto bound = [&](int nn) {
                int m = -(1 << 28);
                for (int t = 0; t < d.e; ++t) m = std::max(m, d.cf(t + nn, i) - d.cf(t, j));
                return m;
            };
            while (bound(n) > vv) --n;
            while (bound(n + 1) <= vv) ++n;
            best = std::min(best, n);
        }
    return best;
}

int nu(const LatticeSeq& seq, const SqMat& x) { return nu(DiagSeq::of(seq), x); }

Qp trace_AF0(const SqMat& x) {
    Quad t = x.trace();
    return t.re + t.re;
}

SqMat cayley(const SqMat& skew) {
    int n = skew.dim();
    Quad half = Quad::from_int(2).inv();
    SqMat h = skew.scaled(half);
    return (SqMat::identity(n) + h) * (SqMat::identity(n) - h).inv();
}

SqMat cayley_inv(const SqMat& u) {
    int n = u.dim();
    SqMat num = (u - SqMat::identity(n)).scaled(Quad::from_int(2));
    return num * (u + SqMat::identity(n)).inv();
}

// ---- skew coordinates -------------------------------------------------

namespace {
// pair representatives (i,j) with partner (3-j, 3-i); antidiagonal slots
constexpr int kPairs[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 1}, {2, 0}};
constexpr int kAnti[4][2] = {{0, 3}, {1, 2}, {2, 1}, {3, 0}};
}  // namespace

Vec SkewCoords::coords(const SqMat& x) {
    Vec v(kDim, Qp::zero());
    for (int t = 0; t < 6; ++t) {
        const Quad& e = x.at(kPairs[t][0], kPairs[t][1]);
        v[2 * t] = e.re;
        v[2 * t + 1] = e.im;
    }
    for (int t = 0; t < 4; ++t) {
        const Quad& e = x.at(kAnti[t][0], kAnti[t][1]);
        v[12 + t] = e.im;  // entry is a*sqrt(eps)
    }
    return v;
}

SqMat SkewCoords::matrix(const Vec& v) {
    SqMat x(4);
    for (int t = 0; t < 6; ++t) {
        int i = kPairs[t][0], j = kPairs[t][1];
        Quad e(v[2 * t], v[2 * t + 1]);
        x.at(i, j) = e;
        x.at(3 - j, 3 - i) = -e.conj();
    }
    for (int t = 0; t < 4; ++t)
        x.at(kAnti[t][0], kAnti[t][1]) = Quad(Qp::zero(), v[12 + t]);
    return x;
}

std::vector<SqMat> SkewCoords::generators(const Shape& s) {
    std::vector<SqMat> g;
    for (int t = 0; t < 6; ++t) {
        int i = kPairs[t][0], j = kPairs[t][1];
        int b = s.at(i, j);
        if (s.at(3 - j, 3 - i) != b)
            throw DomainError("invalid-input", "shape not sigma-stable");
        Vec v(kDim, Qp::zero());
        v[2 * t] = Qp::one().shift(b);
        g.push_back(matrix(v));
        v[2 * t] = Qp::zero();
        v[2 * t + 1] = Qp::one().shift(b);
        g.push_back(matrix(v));
    }
    for (int t = 0; t < 4; ++t) {
        Vec v(kDim, Qp::zero());
        v[12 + t] = Qp::one().shift(s.at(kAnti[t][0], kAnti[t][1]));
        g.push_back(matrix(v));
    }
    return g;
}

OLattice SkewCoords::lattice(const Shape& s) {
    std::vector<Vec> gens;
    for (auto& m : generators(s)) gens.push_back(coords(m));
    return OLattice::span(kDim, gens);
}

Vec FullCoords::coords(const SqMat& x) {
    Vec v(kDim, Qp::zero());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            v[2 * (4 * i + j)] = x.at(i, j).re;
            v[2 * (4 * i + j) + 1] = x.at(i, j).im;
        }
    return v;
}

SqMat FullCoords::matrix(const Vec& v) {
    SqMat x(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            x.at(i, j) = Quad(v[2 * (4 * i + j)], v[2 * (4 * i + j) + 1]);
    return x;
}

OLattice FullCoords::lattice(const Shape& s) {
    std::vector<Vec> gens;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Vec v(kDim, Qp::zero());
            v[2 * (4 * i + j)] = Qp::one().shift(s.at(i, j));
            gens.push_back(v);
            Vec w(kDim, Qp::zero());
            w[2 * (4 * i + j) + 1] = Qp::one().shift(s.at(i, j));
            gens.push_back(w);
        }
    return OLattice::span(kDim, gens);
}

int skew_quotient_exp(const DiagSeq& d, int lo_level, int hi_level) {
    if (hi_level < lo_level) throw DomainError("invalid-input", "bad level window");
    Shape lo = filtration_shape(d, lo_level), hi = filtration_shape(d, hi_level);
    int e = 0;
    for (int t = 0; t < 6; ++t)
        e += 2 * (hi.at(kPairs[t][0], kPairs[t][1]) - lo.at(kPairs[t][0], kPairs[t][1]));
    for (int t = 0; t < 4; ++t)
        e += hi.at(kAnti[t][0], kAnti[t][1]) - lo.at(kAnti[t][0], kAnti[t][1]);
    return e;
}

int full_quotient_exp(const DiagSeq& d, int lo_level, int hi_level) {
    Shape lo = filtration_shape(d, lo_level), hi = filtration_shape(d, hi_level);
    int e = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) e += 2 * (hi.at(i, j) - lo.at(i, j));
    return e;
}

int quotient_count_exp(const LatticeSeq& seq, int r, int n, QuotientPart part) {
    if (r == n) return 0;
    if (!(n > r && r >= floor_div(n, 2) && floor_div(n, 2) >= 0))
        throw DomainError("invalid-input", "need n > r >= [n/2] >= 0");
    DiagSeq d = DiagSeq::of(seq);
    switch (part) {
        case QuotientPart::group:
        case QuotientPart::skew_plus:
            return skew_quotient_exp(d, r + 1, n + 1);
        case QuotientPart::skew_minus:
            return skew_quotient_exp(d, -n, -r);
    }
    return 0;
}

namespace {

// all digit vectors over the active slots of the layer g_k/g_{k+1}
struct LayerSlots {
    std::vector<int> slot;   // coordinate indices with a digit at this level
    std::vector<int> shift;  // p-shift of the slot generator
};

LayerSlots layer_slots(const DiagSeq& d, int k) {
    Shape lo = filtration_shape(d, k), hi = filtration_shape(d, k + 1);
    LayerSlots ls;
    for (int t = 0; t < 6; ++t) {
        int b0 = lo.at(kPairs[t][0], kPairs[t][1]);
        int b1 = hi.at(kPairs[t][0], kPairs[t][1]);
        for (int lv = b0; lv < b1; ++lv) {
            ls.slot.push_back(2 * t);
            ls.shift.push_back(lv);
            ls.slot.push_back(2 * t + 1);
            ls.shift.push_back(lv);
        }
    }
    for (int t = 0; t < 4; ++t) {
        int b0 = lo.at(kAnti[t][0], kAnti[t][1]);
        int b1 = hi.at(kAnti[t][0], kAnti[t][1]);
        for (int lv = b0; lv < b1; ++lv) {
            ls.slot.push_back(12 + t);
            ls.shift.push_back(lv);
        }
    }
    return ls;
}

SqMat skew_from_digits(const LayerSlots& ls, const std::vector<int>& digits) {
    Vec v(SkewCoords::kDim, Qp::zero());
    for (size_t s = 0; s < ls.slot.size(); ++s)
        if (digits[s]) v[ls.slot[s]] += Qp::from_int(digits[s]).shift(ls.shift[s]);
    return SkewCoords::matrix(v);
}

std::vector<int> digits_from_skew(const LayerSlots& ls, const SqMat& x) {
    Vec v = SkewCoords::coords(x);
    std::vector<int> digits(ls.slot.size(), 0);
    long p = ctx().p();
    for (size_t s = 0; s < ls.slot.size(); ++s) {
        const Qp& c = v[ls.slot[s]];
        if (c.is_zeroish()) {
            if (!c.exact_zero() && c.val_lb() <= ls.shift[s])
                throw PrecisionError("digit extraction beyond certified zero");
            continue;
        }
        if (c.val() < ls.shift[s]) throw InternalError("digit extraction below slot level");
        if (c.val() > ls.shift[s]) continue;
        digits[s] = static_cast<int>(c.unit_mod(1) % static_cast<std::uint64_t>(p));
    }
    return digits;
}

bool next_digits(std::vector<int>& digits, long p) {
    for (size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < p) return true;
        digits[i] = 0;
    }
    return false;
}

SqMat skew_symmetrize(const SqMat& x, const HermSpace& sp) {
    Quad half = Quad::from_int(2).inv();
    return (x - sp.sigma(x)).scaled(half);
}

}  // namespace

int enumerate_P_quotient_exp(const LatticeSeq& seq, int r, int n) {
    DiagSeq d = DiagSeq::of(seq);
    const HermSpace& sp = seq.space();
    long p = ctx().p();
    int total = 0;
    for (int k = r + 1; k <= n; ++k) {
        LayerSlots ls = layer_slots(d, k);
        Shape sk = filtration_shape(d, k), sk1 = filtration_shape(d, k + 1);
        std::vector<int> digits(ls.slot.size(), 0);
        long count = 0;
        do {
            SqMat x = skew_from_digits(ls, digits);
            if (!sk.member(x)) throw InternalError("layer element outside a_k");
            SqMat u = cayley(x);
            if (!sp.is_isometry(u)) throw InternalError("cayley lift not unitary");
            SqMat um1 = u - SqMat::identity(4);
            if (!sk.member(um1)) throw InternalError("cayley lift not in P_k");
            // digit round trip through p -> p-1 and skew reduction
            SqMat back = skew_symmetrize(um1, sp);
            // remove the part above the layer
            auto dig = digits_from_skew(ls, back);
            if (dig != digits) throw InternalError("layer digit round trip failed");
            (void)sk1;
            ++count;
        } while (next_digits(digits, p));
        // count == p^slots by construction; accumulate the exponent
        int exp_k = static_cast<int>(ls.slot.size());
        long expect = 1;
        for (int i = 0; i < exp_k; ++i) expect *= p;
        if (count != expect) throw InternalError("layer enumeration count mismatch");
        total += exp_k;
    }
    return total;
}

int enumerate_P_quotient_direct(const LatticeSeq& seq, int r, int n, int max_exp) {
    DiagSeq d = DiagSeq::of(seq);
    const HermSpace& sp = seq.space();
    long p = ctx().p();
    // all slots from level r+1 through n, with full windows per slot
    Shape lo = filtration_shape(d, r + 1), hi = filtration_shape(d, n + 1);
    std::vector<int> slot, shift;
    for (int t = 0; t < 6; ++t) {
        int i = kPairs[t][0], j = kPairs[t][1];
        for (int lv = lo.at(i, j); lv < hi.at(i, j); ++lv) {
            slot.push_back(2 * t); shift.push_back(lv);
            slot.push_back(2 * t + 1); shift.push_back(lv);
        }
    }
    for (int t = 0; t < 4; ++t) {
        int i = kAnti[t][0], j = kAnti[t][1];
        for (int lv = lo.at(i, j); lv < hi.at(i, j); ++lv) {
            slot.push_back(12 + t); shift.push_back(lv);
        }
    }
    int K = static_cast<int>(slot.size());
    if (K > max_exp)
        throw DomainError("invalid-input", "direct enumeration exponent too large");
    std::vector<int> digits(K, 0);
    Shape sr = filtration_shape(d, r + 1);
    Shape sn = filtration_shape(d, n + 1);
    long count = 0;
    do {
        Vec v(SkewCoords::kDim, Qp::zero());
        for (int s = 0; s < K; ++s)
            if (digits[s]) v[slot[s]] += Qp::from_int(digits[s]).shift(shift[s]);
        SqMat x = SkewCoords::matrix(v);
        SqMat u = cayley(x);
        if (!sp.is_isometry(u)) throw InternalError("cayley lift not unitary");
        SqMat um1 = u - SqMat::identity(4);
        if (!sr.member(um1)) throw InternalError("lift not in P_{r+1}");
        // extract all digits back from the skew reduction
        SqMat back = skew_symmetrize(um1, sp);
        Vec w = SkewCoords::coords(back);
        for (int s = 0; s < K; ++s) {
            Qp c = w[slot[s]];
            // digit of c at p-level shift[s]
            Qp rems = c.mod_pk(shift[s]);
            Qp dig = (c - rems).shift(-shift[s]).mod_pk(1);
            long got = dig.is_zeroish() ? 0 : static_cast<long>(dig.unit_mod(1));
            if (got != digits[s]) throw InternalError("direct digit round trip failed");
            // strip this digit so lower slots of the same coordinate stay clean
            w[slot[s]] = c - dig.shift(shift[s]);
        }
        (void)sn;
        ++count;
    } while (next_digits(digits, p));
    long expect = 1;
    for (int i = 0; i < K; ++i) expect *= p;
    if (count != expect) throw InternalError("direct enumeration count mismatch");
    return K;
}

RootArg psi_eval(const LatticeSeq& seq, const SqMat& b, int r, int n, const SqMat& x) {
    DiagSeq d = DiagSeq::of(seq);
    Shape sr = filtration_shape(d, r + 1);
    if (!seq.space().is_isometry(x) || !sr.member(x - SqMat::identity(4)))
        throw DomainError("invalid-input", "psi argument not in P_{r+1}");
    (void)n;
    return omega(trace_AF0(b * (x - SqMat::identity(4))));
}

}  // namespace u22
