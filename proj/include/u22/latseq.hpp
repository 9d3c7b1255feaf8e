#pragma once

// Periodic lattice sequences, self-duality indices, the catalogue of
// standard strict self-dual sequences in dimension 4, and the 2-dimensional
// classification.

#include <optional>
#include <string>
#include <vector>

#include "u22/lattice.hpp"

namespace u22 {

// labels of the standard sequences, plus the two period-8 sequences used by
// the Hecke layer ("L2": e=8,d=2; "L1": e=8,d=3)
enum class SeqLabel { st4, st30, st31, st20, st21, st10, st11, L2, L1 };

std::string seq_label_name(SeqLabel l);
std::optional<SeqLabel> seq_label_parse(const std::string& s);

class LatticeSeq {
public:
    LatticeSeq() = default;
    // slices[i] = Lambda(i) for 0 <= i < e; validated: decreasing, periodic
    static LatticeSeq make(std::vector<Lattice> slices, const HermSpace& sp);

    int period() const { return e_; }
    const HermSpace& space() const { return sp_; }
    Lattice at(int k) const;  // Lambda(k), any k
    bool is_strict() const;

    // d with Lambda(i)^# = Lambda(d - i), if any
    std::optional<int> duality_index() const { return d_; }

    LatticeSeq translated(int k) const;        // (Lambda + k)(i) = Lambda(i + k)
    LatticeSeq transformed(const SqMat& g) const;  // g Lambda, g must be an isometry

    // C(i): Lambda(2i+1) properly contains Lambda(2i+2); C(ii): e even, d odd
    bool is_C_sequence() const;

    friend bool operator==(const LatticeSeq& a, const LatticeSeq& b);

private:
    int e_ = 0;
    std::vector<Lattice> slice_;
    HermSpace sp_;
    std::optional<int> d_;
};

// the standard diagonal lattices N0 >= N1 >= N2 in (F^4, H)
Lattice lattice_N(int which);  // 0, 1, 2
Lattice lattice_N1_dual();     // N1^#

LatticeSeq standard_sequence(SeqLabel l);

struct CatalogueRow {
    SeqLabel label;
    int e;
    int d;
    int gcd_n_e;   // the allowed gcd(n, e) for this row
    int e_over_gcd;
};
// the 8 rows of the standard table (st21 appears with gcd 1 and gcd 2)
std::vector<CatalogueRow> standard_catalogue();

// anisotropic iff d odd, for strict self-dual period-2 sequences in dim 2
enum class TwoDimClass { anisotropic, isotropic };
TwoDimClass classify_2dim(const LatticeSeq& seq);

}  // namespace u22
