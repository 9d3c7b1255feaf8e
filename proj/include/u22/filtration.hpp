#pragma once

// The filtration a_k(Lambda) on A = M_4(F) induced by a lattice sequence,
// realized as entrywise valuation-bound shapes; the valuation nu_Lambda;
// trace duality; skew parts and their o0-coordinates; residue counting and
// the character pairing.

#include <array>
#include <optional>

#include "u22/cyclo.hpp"
#include "u22/latseq.hpp"
#include "u22/olattice.hpp"

namespace u22 {

// entrywise bounds: X in shape iff val(X_ij) >= bounds[i][j]
struct Shape {
    int dim = 0;
    std::array<int, 16> b{};

    int at(int i, int j) const { return b[i * 4 + j]; }
    int& at(int i, int j) { return b[i * 4 + j]; }
    bool member(const SqMat& x) const;
    Shape plus(int c) const;
    // {X : tr(X * this) in p0}: bounds 1 - b[j][i]
    Shape trace_dual() const;
    // image under the involution of the standard form (dim 4)
    Shape sigma_image() const;
    friend bool operator==(const Shape& a, const Shape& b) { return a.dim == b.dim && a.b == b.b; }
    // does this shape contain the other (entrywise weaker bounds)?
    bool contains(const Shape& other) const;
    std::string str() const;
};

// diagonal exponent grid of a sequence whose slices are diagonal lattices
struct DiagSeq {
    int e = 0;
    int dim = 0;
    std::vector<std::vector<int>> c;  // c[t][i], 0 <= t < e
    int cf(int t, int i) const;       // periodic extension
    static DiagSeq of(const LatticeSeq& seq);
};

Shape filtration_shape(const LatticeSeq& seq, int k);
Shape filtration_shape(const DiagSeq& d, int k);

// nu_Lambda(x); Qp::INF for x = 0
int nu(const LatticeSeq& seq, const SqMat& x);
int nu(const DiagSeq& d, const SqMat& x);

// tr_{A/F0} = tr_{F/F0} of the matrix trace
Qp trace_AF0(const SqMat& x);

// Cayley transform of a skew element (p odd): (1 + X/2)(1 - X/2)^{-1} in G
SqMat cayley(const SqMat& skew);
// inverse: 2(u - 1)(u + 1)^{-1}
SqMat cayley_inv(const SqMat& u);

// ---- skew coordinates -------------------------------------------------
// The sixteen o0-coordinates of the skew space g = {X : X + sigma(X) = 0}
// for the standard 4-dim form: six off-pair positions (two coordinates
// each) and four antidiagonal positions (one sqrt(eps)-coordinate each).

struct SkewCoords {
    static constexpr int kDim = 16;
    static Vec coords(const SqMat& x);          // x must be skew
    static SqMat matrix(const Vec& v);
    // diagonal o0-lattice of g ∩ shape (shape must be sigma-stable)
    static OLattice lattice(const Shape& s);
    // o0-generators of g ∩ shape (diagonal, one per coordinate slot)
    static std::vector<SqMat> generators(const Shape& s);
};

// full 32-dimensional coordinates of A (re/im per entry), for the
// non-skew decomposition checks
struct FullCoords {
    static constexpr int kDim = 32;
    static Vec coords(const SqMat& x);
    static SqMat matrix(const Vec& v);
    static OLattice lattice(const Shape& s);
};

// |g_b / g_a| for shapes a ⊆ b given as filtration indices (returns the
// exponent of q); skew counting: off-pair slots give two digits per level,
// antidiagonal slots one
int skew_quotient_exp(const DiagSeq& d, int lo_level, int hi_level);
// |a_b / a_a| in the full algebra (exponent of q; each entry level is q^2)
int full_quotient_exp(const DiagSeq& d, int lo_level, int hi_level);

enum class QuotientPart { group, skew_plus, skew_minus };
// |P_{r+1}/P_{n+1}|, |g_{r+1}/g_{n+1}| or |g_{-n}/g_{-r}| as an exponent
// of q, from shape arithmetic (requires n > r >= [n/2] >= 0)
int quotient_count_exp(const LatticeSeq& seq, int r, int n, QuotientPart part);

// layer-by-layer brute-force enumeration of P_{r+1}/P_{n+1} at small q:
// every layer is fully listed through the Cayley lift and digit round trip.
// Returns the exponent of q; throws InternalError on any mismatch.
int enumerate_P_quotient_exp(const LatticeSeq& seq, int r, int n);
// single-shot enumeration across all levels (use only for small exponents)
int enumerate_P_quotient_direct(const LatticeSeq& seq, int r, int n, int max_exp = 10);

// the character psi_b of P_{r+1}: psi_b(x) = Omega(tr(b(x-1)))
RootArg psi_eval(const LatticeSeq& seq, const SqMat& b, int r, int n, const SqMat& x);

// floor with the "greatest integer <=" convention for negatives
int floor_div(int a, int b);

}  // namespace u22
