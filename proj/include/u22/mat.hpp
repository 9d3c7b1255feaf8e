#pragma once

// Small dense matrices over F = F0(sqrt(eps)), dimension 1..4.

#include <array>
#include <vector>

#include "u22/padic.hpp"

namespace u22 {

class SqMat {
public:
    SqMat() : n_(0) {}
    explicit SqMat(int n) : n_(n) { a_.fill(Quad::zero()); }

    static SqMat identity(int n);
    static SqMat unit(int n, int i, int j, const Quad& x);  // x * E_ij
    static SqMat scalar(int n, const Quad& x);

    int dim() const { return n_; }
    Quad& at(int i, int j) { return a_[i * 4 + j]; }
    const Quad& at(int i, int j) const { return a_[i * 4 + j]; }

    SqMat operator+(const SqMat& o) const;
    SqMat operator-(const SqMat& o) const;
    SqMat operator*(const SqMat& o) const;
    SqMat operator-() const;
    SqMat scaled(const Quad& x) const;
    SqMat shift(int k) const;  // multiply by p^k
    SqMat transpose() const;
    SqMat conj() const;       // entrywise Galois conjugation
    SqMat conj_t() const { return conj().transpose(); }
    SqMat inv() const;        // throws PrecisionError if a pivot is indeterminate
    SqMat pow(int k) const;   // k may be negative

    Quad trace() const;
    Quad det() const;
    // characteristic polynomial coefficients c[0..n], c[n] = 1, by principal minors
    std::vector<Quad> charpoly() const;

    bool is_zeroish() const;
    int val_lb() const;   // min entry valuation lower bound
    // exact minimum entry valuation; throws if indeterminate
    int min_val() const;
    bool val_at_least(int b) const;

    friend bool eq(const SqMat& a, const SqMat& b);
    std::string str() const;

    // multiply vector (length n)
    std::vector<Quad> apply(const std::vector<Quad>& v) const;

private:
    int n_;
    std::array<Quad, 16> a_;
};

// involution induced by the hermitian gram matrix g: X -> g^-1 * conj_t(X) * g
SqMat form_involution(const SqMat& gram, const SqMat& x);

// g * x * g^-1
SqMat ad(const SqMat& g, const SqMat& x);
// g*x - x*g
SqMat ad_bracket(const SqMat& g, const SqMat& x);

}  // namespace u22
