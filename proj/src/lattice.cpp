#include "u22/lattice.hpp"

namespace u22 {

HermSpace HermSpace::standard4() {
    SqMat h(4);
    h.at(0, 3) = Quad::one();
    h.at(1, 2) = Quad::one();
    h.at(2, 1) = Quad::one();
    h.at(3, 0) = Quad::one();
    return HermSpace{h};
}

HermSpace HermSpace::f0() {
    SqMat g(2);
    g.at(0, 0) = Quad::one();
    g.at(1, 1) = Quad::one().shift(1);
    return HermSpace{g};
}

HermSpace HermSpace::f1() {
    SqMat g(2);
    g.at(0, 1) = Quad::one();
    g.at(1, 0) = Quad::one();
    return HermSpace{g};
}

HermSpace HermSpace::of(const SqMat& gram) { return HermSpace{gram}; }

Quad HermSpace::eval(const std::vector<Quad>& x, const std::vector<Quad>& y) const {
    int n = dim();
    Quad acc = Quad::zero();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) acc += x[i].conj() * gram.at(i, j) * y[j];
    return acc;
}

SqMat HermSpace::sigma(const SqMat& x) const { return form_involution(gram, x); }

bool HermSpace::is_skew(const SqMat& x) const { return (x + sigma(x)).is_zeroish(); }

bool HermSpace::is_isometry(const SqMat& g) const {
    return (g * sigma(g) - SqMat::identity(dim())).is_zeroish();
}

namespace {

// canonical column HNF over o_F: lower-triangular with p-power diagonal,
// off-diagonal entries reduced modulo the diagonal power of their column
SqMat hnf_columns(SqMat b) {
    int n = b.dim();
    std::vector<int> diag_val(n, 0);
    for (int row = 0; row < n; ++row) {
        int piv = -1, pv = Qp::INF;
        for (int j = row; j < n; ++j) {
            const Quad& x = b.at(row, j);
            if (x.known_nonzero() && x.val() < pv) { pv = x.val(); piv = j; }
        }
        if (piv < 0) throw DomainError("invalid-input", "lattice basis not invertible");
        if (piv != row)
            for (int i = 0; i < n; ++i) std::swap(b.at(i, row), b.at(i, piv));
        // normalize the pivot column so entry (row,row) = p^pv exactly
        Quad unit_inv = b.at(row, row).shift(-pv).inv();
        for (int i = 0; i < n; ++i) b.at(i, row) = b.at(i, row) * unit_inv;
        b.at(row, row) = Quad::one().shift(pv);
        diag_val[row] = pv;
        for (int j = row + 1; j < n; ++j) {
            const Quad& x = b.at(row, j);
            if (x.is_zeroish()) { b.at(row, j) = Quad::zero(); continue; }
            Quad c = x.shift(-pv);  // in o_F since pv is minimal among j >= row
            for (int i = 0; i < n; ++i) b.at(i, j) -= c * b.at(i, row);
            b.at(row, j) = Quad::zero();
        }
    }
    // reduce below-diagonal entries modulo the p-power of their row's
    // column; right to left so every reducing column is already final
    for (int col = n - 1; col >= 0; --col)
        for (int i = col + 1; i < n; ++i) {
            const Quad& x = b.at(i, col);
            if (x.is_zeroish()) { b.at(i, col) = Quad::zero(); continue; }
            Quad rem = x.mod_pk(diag_val[i]);
            Quad c = (x - rem).shift(-diag_val[i]);
            for (int k = 0; k < n; ++k) b.at(k, col) -= c * b.at(k, i);
            b.at(i, col) = rem;
        }
    return b;
}

}  // namespace

Lattice Lattice::from_basis(const SqMat& basis) {
    Lattice l;
    l.b_ = hnf_columns(basis);
    return l;
}

Lattice Lattice::standard(int dim) { return from_basis(SqMat::identity(dim)); }

Lattice Lattice::scaled(int k) const {
    Lattice l;
    l.b_ = b_.shift(k);
    return l;
}

Lattice Lattice::apply(const SqMat& g) const { return from_basis(g * b_); }

bool Lattice::contains(const Lattice& other) const {
    SqMat c = b_.inv() * other.b_;
    return c.val_at_least(0);
}

bool Lattice::contains_vec(const std::vector<Quad>& v) const {
    auto c = b_.inv().apply(v);
    for (auto& x : c)
        if (!x.val_at_least(0)) return false;
    return true;
}

int Lattice::index_exp(const Lattice& sub) const {
    SqMat c = b_.inv() * sub.b_;
    if (!c.val_at_least(0)) throw DomainError("invalid-input", "index of a non-sublattice");
    // [L : sub] = |o_F / det|; each pi-digit of the determinant is q^2
    Quad d = c.det();
    return 2 * d.val();
}

Lattice Lattice::dual(const HermSpace& sp) const {
    // v in L^# iff conj_t(v) * gram * B has integral entries
    SqMat m = (sp.gram * b_).transpose().inv().conj();
    return from_basis(m);
}

bool Lattice::diagonal_exponents(std::vector<int>& exps) const {
    int n = b_.dim();
    exps.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Quad& x = b_.at(i, j);
            if (i == j) {
                if (!x.known_nonzero() || !x.im.is_zeroish()) return false;
                if (x.re.unit() != 1) return false;
                exps[i] = x.val();
            } else if (!x.is_zeroish()) {
                return false;
            }
        }
    return true;
}

bool operator==(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) return false;
    return eq(a.b_, b.b_);
}

}  // namespace u22
