#pragma once

// Hermitian spaces over F and o_F-lattices in them.  A lattice is stored by
// a canonical column-reduced basis (Hermite style over the valuation ring),
// so lattice equality is plain data comparison.

#include "u22/mat.hpp"

namespace u22 {

struct HermSpace {
    SqMat gram;  // hermitian, invertible

    int dim() const { return gram.dim(); }
    // the split 4-dim form H = E14 + E23 + E32 + E41
    static HermSpace standard4();
    // 2-dim forms: f0 anisotropic (diag(1, pi)), f1 split (antidiag(1,1))
    static HermSpace f0();
    static HermSpace f1();
    static HermSpace of(const SqMat& gram);

    // f(x, y) = conj_t(x) * gram * y
    Quad eval(const std::vector<Quad>& x, const std::vector<Quad>& y) const;
    // involution on End(V): X -> gram^-1 conj_t(X) gram
    SqMat sigma(const SqMat& x) const;
    bool is_skew(const SqMat& x) const;
    // g in the unitary group of the form, at working precision
    bool is_isometry(const SqMat& g) const;
};

class Lattice {
public:
    Lattice() = default;
    // canonicalizes the given column-spanning basis
    static Lattice from_basis(const SqMat& basis);
    static Lattice standard(int dim);  // o_F^dim

    const SqMat& basis() const { return b_; }
    int dim() const { return b_.dim(); }

    Lattice scaled(int k) const;  // p^k * L
    Lattice apply(const SqMat& g) const;

    bool contains(const Lattice& other) const;       // L >= other
    bool contains_vec(const std::vector<Quad>& v) const;
    // [L : sub] as an exponent of q (|k_0| = q); requires containment
    int index_exp(const Lattice& sub) const;

    // dual with respect to the hermitian form
    Lattice dual(const HermSpace& sp) const;

    // true when the canonical basis is diagonal with p-power entries;
    // fills the exponents
    bool diagonal_exponents(std::vector<int>& exps) const;

    friend bool operator==(const Lattice& a, const Lattice& b);
    std::string str() const { return b_.str(); }

private:
    SqMat b_;
};

}  // namespace u22
