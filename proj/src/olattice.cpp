#include "u22/olattice.hpp"

#include <algorithm>

namespace u22 {

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Qp& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool vec_zeroish(const Vec& v) {
    for (auto& x : v)
        if (!x.is_zeroish()) return false;
    return true;
}

OLattice OLattice::span(int dim, const std::vector<Vec>& gens) {
    OLattice L;
    L.dim_ = dim;
    std::vector<Vec> work;
    for (auto& g : gens) {
        if (static_cast<int>(g.size()) != dim) throw InternalError("span: bad vector size");
        if (!vec_zeroish(g)) work.push_back(g);
    }
    for (int pos = 0; pos < dim; ++pos) {
        int piv = -1, pv = Qp::INF;
        for (size_t t = 0; t < work.size(); ++t) {
            const Qp& x = work[t][pos];
            if (x.known_nonzero() && x.val() < pv) { pv = x.val(); piv = static_cast<int>(t); }
        }
        if (piv < 0) {
            for (auto& w : work)
                if (!w[pos].is_zeroish())
                    throw PrecisionError("span: indeterminate pivot entry");
            continue;
        }
        Vec pvec = work[piv];
        work.erase(work.begin() + piv);
        // normalize so the pivot entry is exactly p^pv
        Qp unit_inv = pvec[pos].shift(-pv).inv();
        pvec = vec_scale(unit_inv, pvec);
        pvec[pos] = Qp::one().shift(pv);
        for (auto& w : work) {
            if (w[pos].is_zeroish()) { w[pos] = Qp::zero(); continue; }
            Qp c = w[pos].shift(-pv);
            w = vec_sub(w, vec_scale(c, pvec));
            w[pos] = Qp::zero();  // exact by construction
        }
        L.basis_.push_back(pvec);
        L.piv_pos_.push_back(pos);
        L.piv_val_.push_back(pv);
        // drop exhausted generators
        std::vector<Vec> keep;
        for (auto& w : work)
            if (!vec_zeroish(w)) keep.push_back(std::move(w));
        work = std::move(keep);
        if (work.empty()) break;
    }
    if (!work.empty()) throw PrecisionError("span: generators did not reduce");
    return L;
}

std::optional<Vec> OLattice::coords(const Vec& v) const {
    Vec rem = v;
    Vec cs(basis_.size(), Qp::zero());
    for (size_t t = 0; t < basis_.size(); ++t) {
        const Qp& x = rem[piv_pos_[t]];
        if (x.is_zeroish()) { rem[piv_pos_[t]] = Qp::zero(); continue; }
        Qp c = x.shift(-piv_val_[t]);
        cs[t] = c;
        rem = vec_sub(rem, vec_scale(c, basis_[t]));
        rem[piv_pos_[t]] = Qp::zero();
    }
    if (!vec_zeroish(rem)) return std::nullopt;
    return cs;
}

bool OLattice::contains(const Vec& v) const {
    auto cs = coords(v);
    if (!cs) return false;
    for (auto& c : *cs)
        if (!c.val_at_least(0)) return false;
    return true;
}

namespace {

// valuation of the determinant of a square matrix over F0
int det_val(std::vector<Vec> m) {
    int r = static_cast<int>(m.size());
    int acc = 0;
    for (int col = 0; col < r; ++col) {
        int piv = -1, pv = Qp::INF;
        for (int i = col; i < r; ++i)
            if (m[i][col].known_nonzero() && m[i][col].val() < pv) {
                pv = m[i][col].val();
                piv = i;
            }
        if (piv < 0) throw DomainError("invalid-input", "singular matrix in det_val");
        std::swap(m[col], m[piv]);
        Qp inv = m[col][col].inv();
        acc += pv;
        for (int i = col + 1; i < r; ++i) {
            if (m[i][col].is_zeroish()) continue;
            Qp c = m[i][col] * inv;
            m[i] = vec_sub(m[i], vec_scale(c, m[col]));
            m[i][col] = Qp::zero();
        }
    }
    return acc;
}

std::vector<Vec> qp_mat_inv(const std::vector<Vec>& m) {
    int r = static_cast<int>(m.size());
    std::vector<Vec> a = m, inv(r, Vec(r, Qp::zero()));
    for (int i = 0; i < r; ++i) inv[i][i] = Qp::one();
    for (int col = 0; col < r; ++col) {
        int piv = -1, pv = Qp::INF;
        for (int i = col; i < r; ++i)
            if (a[i][col].known_nonzero() && a[i][col].val() < pv) { pv = a[i][col].val(); piv = i; }
        if (piv < 0) throw DomainError("invalid-input", "singular matrix");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        Qp pi = a[col][col].inv();
        a[col] = vec_scale(pi, a[col]);
        inv[col] = vec_scale(pi, inv[col]);
        for (int i = 0; i < r; ++i) {
            if (i == col || a[i][col].is_zeroish()) continue;
            Qp c = a[i][col];
            a[i] = vec_sub(a[i], vec_scale(c, a[col]));
            inv[i] = vec_sub(inv[i], vec_scale(c, inv[col]));
            a[i][col] = Qp::zero();
        }
    }
    return inv;
}

std::vector<Vec> transpose_rows(const std::vector<Vec>& m) {
    if (m.empty()) return {};
    std::vector<Vec> t(m[0].size(), Vec(m.size(), Qp::zero()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

}  // namespace

int OLattice::index_exp(const OLattice& sub) const {
    if (sub.rank() != rank()) throw DomainError("invalid-input", "index of different-rank lattices");
    std::vector<Vec> C;
    for (auto& b : sub.basis_) {
        auto cs = coords(b);
        if (!cs) throw DomainError("invalid-input", "not a sublattice (outside span)");
        for (auto& c : *cs)
            if (!c.val_at_least(0)) throw DomainError("invalid-input", "not a sublattice");
        C.push_back(*cs);
    }
    return det_val(C);
}

Smith smith_form(std::vector<Vec> rows) {
    int r = static_cast<int>(rows.size());
    Smith s;
    s.u_rows.assign(r, Vec(r, Qp::zero()));
    for (int i = 0; i < r; ++i) s.u_rows[i][i] = Qp::one();
    s.d.assign(r, 0);

    for (int t = 0; t < r; ++t) {
        // locate minimal-valuation entry in the trailing block
        int bi = -1, bj = -1, bv = Qp::INF;
        for (int i = t; i < r; ++i)
            for (int j = t; j < r; ++j) {
                const Qp& x = rows[i][j];
                if (x.known_nonzero() && x.val() < bv) { bv = x.val(); bi = i; bj = j; }
            }
        if (bi < 0) throw DomainError("invalid-input", "smith_form: singular matrix");
        std::swap(rows[t], rows[bi]);
        if (bj != t) {
            for (int i = 0; i < r; ++i) std::swap(rows[i][t], rows[i][bj]);
            std::swap(s.u_rows[t], s.u_rows[bj]);
        }
        // scale the pivot row so the pivot is exactly p^bv (row op, free)
        Qp unit_inv = rows[t][t].shift(-bv).inv();
        rows[t] = vec_scale(unit_inv, rows[t]);
        rows[t][t] = Qp::one().shift(bv);
        // clear the rest of row t by column ops (recorded on u_rows)
        for (int j = t + 1; j < r; ++j) {
            if (rows[t][j].is_zeroish()) { rows[t][j] = Qp::zero(); continue; }
            Qp c = rows[t][j].shift(-bv);
            for (int i = 0; i < r; ++i) rows[i][j] -= c * rows[i][t];
            rows[t][j] = Qp::zero();
            // column op col_j -= c*col_t corresponds to row_t(V) += c*row_j(V)
            s.u_rows[t] = vec_add(s.u_rows[t], vec_scale(c, s.u_rows[j]));
        }
        // clear the rest of column t by row ops (free)
        for (int i = t + 1; i < r; ++i) {
            if (rows[i][t].is_zeroish()) { rows[i][t] = Qp::zero(); continue; }
            Qp c = rows[i][t].shift(-bv);
            rows[i] = vec_sub(rows[i], vec_scale(c, rows[t]));
            rows[i][t] = Qp::zero();
        }
        s.d[t] = bv;
    }
    return s;
}

OLattice::Adapted OLattice::adapted_quotient(const OLattice& other) const {
    if (other.rank() != rank())
        throw DomainError("invalid-input", "adapted_quotient: rank mismatch");
    std::vector<Vec> C;
    for (auto& b : other.basis_) {
        auto cs = coords(b);
        if (!cs) throw DomainError("invalid-input", "adapted_quotient: span mismatch");
        C.push_back(*cs);
    }
    Smith s = smith_form(std::move(C));
    Adapted a;
    int r = rank();
    for (int t = 0; t < r; ++t) {
        Vec w(dim_, Qp::zero());
        for (int j = 0; j < r; ++j)
            if (!s.u_rows[t][j].is_zeroish()) w = vec_add(w, vec_scale(s.u_rows[t][j], basis_[j]));
        a.w.push_back(std::move(w));
        int d = std::max(0, s.d[t]);
        a.d.push_back(d);
        a.index_exp += d;
    }
    return a;
}

OLattice OLattice::sum(const OLattice& a, const OLattice& b) {
    std::vector<Vec> gens = a.basis_;
    gens.insert(gens.end(), b.basis_.begin(), b.basis_.end());
    return span(a.dim_, gens);
}

OLattice OLattice::intersect(const OLattice& a, const OLattice& b) {
    if (a.rank() != b.rank()) throw DomainError("invalid-input", "intersect: rank mismatch");
    OLattice s = sum(a, b);
    if (s.rank() != a.rank()) throw DomainError("invalid-input", "intersect: span mismatch");
    int r = s.rank();
    // work in coordinates of the common span
    auto to_coords = [&](const OLattice& L) {
        std::vector<Vec> rows;
        for (auto& v : L.basis_) {
            auto cs = s.coords(v);
            if (!cs) throw InternalError("intersect: coords failed");
            rows.push_back(*cs);
        }
        return rows;
    };
    // (L1 cap L2)^vee = L1^vee + L2^vee for the standard pairing
    auto dual_rows = [&](const std::vector<Vec>& rows) {
        return transpose_rows(qp_mat_inv(rows));
    };
    std::vector<Vec> d1 = dual_rows(to_coords(a)), d2 = dual_rows(to_coords(b));
    std::vector<Vec> gens = d1;
    gens.insert(gens.end(), d2.begin(), d2.end());
    OLattice dsum = span(r, gens);
    std::vector<Vec> back = dual_rows(dsum.basis());
    // map back to ambient coordinates
    std::vector<Vec> amb;
    for (auto& row : back) {
        Vec v(s.dim_, Qp::zero());
        for (int j = 0; j < r; ++j)
            if (!row[j].is_zeroish()) v = vec_add(v, vec_scale(row[j], s.basis_[j]));
        amb.push_back(std::move(v));
    }
    return span(s.dim_, amb);
}

bool lattice_eq(const OLattice& a, const OLattice& b) {
    if (a.rank() != b.rank()) return false;
    for (auto& v : a.basis_)
        if (!b.contains(v)) return false;
    for (auto& v : b.basis_)
        if (!a.contains(v)) return false;
    return true;
}

}  // namespace u22
