#pragma once

// Small polynomials over F (degree <= 4 in practice) and over the residue
// field k_F, plus Hensel lifting of coprime factorizations.

#include <vector>

#include "u22/mat.hpp"
#include "u22/padic.hpp"

namespace u22 {

using Poly = std::vector<Quad>;   // coefficients, ascending degree
using KFPoly = std::vector<KF>;   // same, over k_F

int deg(const Poly& f);
int deg(const KFPoly& f);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
// division by a monic divisor; returns (quotient, remainder)
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& monic);
SqMat poly_eval_mat(const Poly& f, const SqMat& x);
Quad poly_eval(const Poly& f, const Quad& x);

KFPoly kf_mul(const KFPoly& a, const KFPoly& b);
KFPoly kf_sub(const KFPoly& a, const KFPoly& b);
std::pair<KFPoly, KFPoly> kf_divmod(const KFPoly& a, const KFPoly& b);
KFPoly kf_normalize(KFPoly f);
// g = gcd, plus s,t with s*a + t*b = g
KFPoly kf_xgcd(const KFPoly& a, const KFPoly& b, KFPoly& s, KFPoly& t);
bool kf_eq(const KFPoly& a, const KFPoly& b);

// residue of a polynomial with integral coefficients
KFPoly poly_residue(const Poly& f);
Poly poly_lift(const KFPoly& f);

// distinct roots of f in k_F found by exhaustive search, with multiplicities
std::vector<std::pair<KF, int>> kf_roots(const KFPoly& f);

// Hensel: given monic Phi over o_F and monic coprime fbar, gbar over k_F
// with fbar*gbar = Phi mod p_F, lift to monic f, g with f*g = Phi to the
// requested number of digits.
struct HenselPair {
    Poly f, g;
    Poly a, b;  // Bezout: a*f + b*g = 1 at the same precision
};
HenselPair hensel_lift(const Poly& Phi, const KFPoly& fbar, const KFPoly& gbar, int digits);

// Hensel lift of a simple root r of f (f(r)=0, f'(r)!=0 in k_F)
Quad hensel_root(const Poly& f, const KF& r, int digits);

}  // namespace u22
