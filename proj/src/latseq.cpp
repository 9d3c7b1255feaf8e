#include "u22/latseq.hpp"

namespace u22 {

std::string seq_label_name(SeqLabel l) {
    switch (l) {
        case SeqLabel::st4: return "st4";
        case SeqLabel::st30: return "st30";
        case SeqLabel::st31: return "st31";
        case SeqLabel::st20: return "st20";
        case SeqLabel::st21: return "st21";
        case SeqLabel::st10: return "st10";
        case SeqLabel::st11: return "st11";
        case SeqLabel::L2: return "L2";
        case SeqLabel::L1: return "L1";
    }
    return "?";
}

std::optional<SeqLabel> seq_label_parse(const std::string& s) {
    for (SeqLabel l : {SeqLabel::st4, SeqLabel::st30, SeqLabel::st31, SeqLabel::st20,
                       SeqLabel::st21, SeqLabel::st10, SeqLabel::st11, SeqLabel::L2, SeqLabel::L1})
        if (seq_label_name(l) == s) return l;
    return std::nullopt;
}

LatticeSeq LatticeSeq::make(std::vector<Lattice> slices, const HermSpace& sp) {
    LatticeSeq s;
    s.e_ = static_cast<int>(slices.size());
    s.slice_ = std::move(slices);
    s.sp_ = sp;
    if (s.e_ <= 0) throw DomainError("invalid-input", "empty lattice sequence");
    for (int i = 0; i < s.e_; ++i) {
        const Lattice& a = s.slice_[i];
        const Lattice& b = (i + 1 < s.e_) ? s.slice_[i + 1] : s.slice_[0].scaled(1);
        if (!a.contains(b))
            throw DomainError("invalid-input", "lattice sequence not decreasing");
    }
    // self-duality index, if any: Lambda(0)^# must be some Lambda(d)
    Lattice d0 = s.slice_[0].dual(sp);
    for (int d = -2 * s.e_; d <= 2 * s.e_; ++d) {
        if (!(s.at(d) == d0)) continue;
        bool ok = true;
        for (int i = 0; i < s.e_ && ok; ++i)
            if (!(s.slice_[i].dual(sp) == s.at(d - i))) ok = false;
        if (ok) { s.d_ = d; break; }
    }
    return s;
}

Lattice LatticeSeq::at(int k) const {
    int m = k % e_;
    if (m < 0) m += e_;
    int sc = (k - m) / e_;
    return slice_[m].scaled(sc);
}

bool LatticeSeq::is_strict() const {
    for (int i = 0; i < e_; ++i)
        if (at(i) == at(i + 1)) return false;
    return true;
}

LatticeSeq LatticeSeq::translated(int k) const {
    std::vector<Lattice> sl;
    sl.reserve(e_);
    for (int i = 0; i < e_; ++i) sl.push_back(at(i + k));
    return make(std::move(sl), sp_);
}

LatticeSeq LatticeSeq::transformed(const SqMat& g) const {
    if (!sp_.is_isometry(g))
        throw DomainError("invalid-group-element", "not an isometry at working precision");
    std::vector<Lattice> sl;
    sl.reserve(e_);
    for (int i = 0; i < e_; ++i) sl.push_back(slice_[i].apply(g));
    return make(std::move(sl), sp_);
}

bool LatticeSeq::is_C_sequence() const {
    if (!d_) return false;
    if (e_ % 2 != 0) return false;
    if (((*d_ % 2) + 2) % 2 != 1) return false;
    for (int i = 0; i < e_; ++i) {
        // Lambda(2i+1) properly contains Lambda(2i+2)
        Lattice a = at(2 * i + 1), b = at(2 * i + 2);
        if (!a.contains(b) || a == b) return false;
    }
    return true;
}

bool operator==(const LatticeSeq& a, const LatticeSeq& b) {
    if (a.e_ != b.e_) return false;
    for (int i = 0; i < a.e_; ++i)
        if (!(a.slice_[i] == b.slice_[i])) return false;
    return true;
}

Lattice lattice_N(int which) {
    SqMat b = SqMat::identity(4);
    if (which >= 1) b.at(3, 3) = Quad::one().shift(1);
    if (which >= 2) b.at(2, 2) = Quad::one().shift(1);
    return Lattice::from_basis(b);
}

Lattice lattice_N1_dual() {
    SqMat b = SqMat::identity(4);
    b.at(0, 0) = Quad::one().shift(-1);
    return Lattice::from_basis(b);
}

LatticeSeq standard_sequence(SeqLabel l) {
    HermSpace sp = HermSpace::standard4();
    Lattice N0 = lattice_N(0), N1 = lattice_N(1), N2 = lattice_N(2);
    Lattice wN1d = lattice_N1_dual().scaled(1);
    std::vector<Lattice> sl;
    switch (l) {
        case SeqLabel::st4: sl = {N0, N1, N2, wN1d}; break;
        case SeqLabel::st30: sl = {N0, N1, wN1d}; break;
        case SeqLabel::st31: sl = {N1, N2, wN1d}; break;
        case SeqLabel::st20: sl = {N0, N2}; break;
        case SeqLabel::st21: sl = {N1, wN1d}; break;
        case SeqLabel::st10: sl = {N0}; break;
        case SeqLabel::st11: sl = {N2}; break;
        case SeqLabel::L2: sl = {N0, N0, N0, N1, N2, N2, N2, wN1d}; break;
        case SeqLabel::L1: sl = {N0, N0, N0, N0, N1, N2, N2, wN1d}; break;
    }
    return LatticeSeq::make(std::move(sl), sp);
}

std::vector<CatalogueRow> standard_catalogue() {
    return {
        {SeqLabel::st4, 4, 0, 1, 4},
        {SeqLabel::st30, 3, 0, 1, 3},
        {SeqLabel::st31, 3, -1, 1, 3},
        {SeqLabel::st20, 2, 0, 1, 2},
        {SeqLabel::st21, 2, -1, 1, 2},
        {SeqLabel::st10, 1, 0, 1, 1},
        {SeqLabel::st11, 1, -1, 1, 1},
        {SeqLabel::st21, 2, -1, 2, 1},
    };
}

TwoDimClass classify_2dim(const LatticeSeq& seq) {
    if (seq.space().dim() != 2 || seq.period() != 2 || !seq.is_strict() || !seq.duality_index())
        throw DomainError("invalid-input", "classify_2dim needs a strict self-dual period-2 sequence");
    int d = *seq.duality_index();
    return (((d % 2) + 2) % 2 == 1) ? TwoDimClass::anisotropic : TwoDimClass::isotropic;
}

}  // namespace u22
