#pragma once

// o0-lattices in F0^k, given by generator lists.  Echelonized bases via
// column reduction with valuation pivoting; membership, relative index,
// adapted (Smith) bases for quotients, duals and intersections.
// All arithmetic is exact truncated Qp arithmetic.

#include <optional>
#include <vector>

#include "u22/padic.hpp"

namespace u22 {

using Vec = std::vector<Qp>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Qp& c, const Vec& a);
bool vec_zeroish(const Vec& v);

class OLattice {
public:
    OLattice() : dim_(0) {}

    // echelonized lattice spanned by the generators (rank may be < dim)
    static OLattice span(int dim, const std::vector<Vec>& gens);

    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(basis_.size()); }
    const std::vector<Vec>& basis() const { return basis_; }
    const std::vector<int>& pivot_pos() const { return piv_pos_; }
    const std::vector<int>& pivot_val() const { return piv_val_; }

    bool contains(const Vec& v) const;
    // coordinates of v in this basis (in F0); nullopt if v outside the span
    std::optional<Vec> coords(const Vec& v) const;

    // [this : sub] as an exponent of q; requires sub a finite-index
    // sublattice of the same rank (throws otherwise)
    int index_exp(const OLattice& sub) const;

    // adapted basis for the quotient this / (this  ∩ other-with-equal-span):
    // vectors w_t of this and digits d_t >= 0 with
    //   this = ⊕ o0 w_t,   this ∩ other = ⊕ p^{d_t} o0 w_t.
    // Requires span(this) == span(other) over F0.
    struct Adapted {
        std::vector<Vec> w;
        std::vector<int> d;     // nonnegative exponents
        int index_exp = 0;      // sum of d
    };
    Adapted adapted_quotient(const OLattice& other) const;

    // sum and intersection (for equal-span full-rank-in-span lattices)
    static OLattice sum(const OLattice& a, const OLattice& b);
    static OLattice intersect(const OLattice& a, const OLattice& b);

    friend bool lattice_eq(const OLattice& a, const OLattice& b);

private:
    int dim_ = 0;
    std::vector<Vec> basis_;   // echelon: basis_[t] has pivot at piv_pos_[t]
    std::vector<int> piv_pos_;
    std::vector<int> piv_val_;
};

// Smith normal form over o0 of a square full-rank matrix C (rows = coords):
// returns U (unimodular) and diagonal exponents d so that the lattice
// spanned by the rows of C equals { sum_t c_t p^{d_t} row_t(U) : c_t in o0 }.
struct Smith {
    std::vector<Vec> u_rows;
    std::vector<int> d;
};
Smith smith_form(std::vector<Vec> rows);

}  // namespace u22
