#include "u22/poly.hpp"

namespace u22 {

int deg(const Poly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (!f[i].is_zeroish()) return i;
    return -1;
}

int deg(const KFPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (!f[i].is_zero()) return i;
    return -1;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Quad::zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Quad::zero());
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Quad::zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& monic) {
    int dm = deg(monic);
    if (dm < 0 || !eq(monic[dm], Quad::one()))
        throw InternalError("poly_divmod: divisor must be monic");
    Poly rem = a, quot(std::max<size_t>(1, a.size()), Quad::zero());
    for (int d = deg(rem); d >= dm; d = deg(rem)) {
        Quad c = rem[d];
        quot[d - dm] += c;
        for (int i = 0; i <= dm; ++i) rem[d - dm + i] -= c * monic[i];
        rem[d] = Quad::zero();  // exact kill
    }
    return {quot, rem};
}

SqMat poly_eval_mat(const Poly& f, const SqMat& x) {
    SqMat r(x.dim());
    for (int i = deg(f); i >= 0; --i) {
        r = r * x;
        r = r + SqMat::scalar(x.dim(), f[i]);
    }
    return r;
}

Quad poly_eval(const Poly& f, const Quad& x) {
    Quad r = Quad::zero();
    for (int i = deg(f); i >= 0; --i) r = r * x + f[i];
    return r;
}

KFPoly kf_normalize(KFPoly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

KFPoly kf_mul(const KFPoly& a, const KFPoly& b) {
    if (a.empty() || b.empty()) return {};
    KFPoly r(a.size() + b.size() - 1, KF{});
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return kf_normalize(r);
}

KFPoly kf_sub(const KFPoly& a, const KFPoly& b) {
    KFPoly r(std::max(a.size(), b.size()), KF{});
    for (size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] - b[i];
    return kf_normalize(r);
}

std::pair<KFPoly, KFPoly> kf_divmod(const KFPoly& a, const KFPoly& b) {
    int db = deg(b);
    if (db < 0) throw InternalError("kf_divmod: zero divisor");
    KF lead_inv = b[db].inv();
    KFPoly rem = a, quot(a.size() + 1, KF{});
    for (int d = deg(rem); d >= db; d = deg(rem)) {
        KF c = rem[d] * lead_inv;
        quot[d - db] = quot[d - db] + c;
        for (int i = 0; i <= db; ++i) rem[d - db + i] = rem[d - db + i] - c * b[i];
    }
    return {kf_normalize(quot), kf_normalize(rem)};
}

KFPoly kf_xgcd(const KFPoly& a, const KFPoly& b, KFPoly& s, KFPoly& t) {
    KFPoly r0 = kf_normalize(a), r1 = kf_normalize(b);
    KFPoly s0 = {KF::of(1)}, s1 = {}, t0 = {}, t1 = {KF::of(1)};
    while (deg(r1) >= 0) {
        auto [q, r2] = kf_divmod(r0, r1);
        KFPoly s2 = kf_sub(s0, kf_mul(q, s1));
        KFPoly t2 = kf_sub(t0, kf_mul(q, t1));
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    // normalize gcd to monic
    int d = deg(r0);
    if (d >= 0) {
        KF li = r0[d].inv();
        for (auto& c : r0) c = c * li;
        for (auto& c : s0) c = c * li;
        for (auto& c : t0) c = c * li;
    }
    s = s0;
    t = t0;
    return r0;
}

bool kf_eq(const KFPoly& a, const KFPoly& b) {
    KFPoly x = kf_normalize(a), y = kf_normalize(b);
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
        if (!(x[i] == y[i])) return false;
    return true;
}

KFPoly poly_residue(const Poly& f) {
    KFPoly r;
    r.reserve(f.size());
    for (auto& c : f) r.push_back(residue(c));
    return kf_normalize(r);
}

Poly poly_lift(const KFPoly& f) {
    Poly r;
    r.reserve(f.size());
    for (auto& c : f) r.push_back(lift(c));
    return r;
}

std::vector<std::pair<KF, int>> kf_roots(const KFPoly& f) {
    std::vector<std::pair<KF, int>> roots;
    long p = ctx().p();
    KFPoly g = kf_normalize(f);
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b) {
            KF r = KF::of(a, b);
            // evaluate
            KF acc{};
            for (int i = deg(g); i >= 0; --i) acc = acc * r + g[i];
            if (!acc.is_zero()) continue;
            // multiplicity by repeated division by (X - r)
            int mult = 0;
            KFPoly h = g, lin = {r.neg(), KF::of(1)};
            while (true) {
                auto [q, rem] = kf_divmod(h, lin);
                if (deg(rem) >= 0) break;
                ++mult;
                h = q;
                if (deg(h) < 0) break;
            }
            roots.emplace_back(r, mult);
        }
    return roots;
}

HenselPair hensel_lift(const Poly& Phi, const KFPoly& fbar, const KFPoly& gbar, int digits) {
    // sanity on the residue data
    KFPoly prod = kf_mul(fbar, gbar);
    if (!kf_eq(prod, poly_residue(Phi)))
        throw DomainError("not-splittable", "residue factors do not multiply to the polynomial");
    KFPoly s, t;
    KFPoly g = kf_xgcd(fbar, gbar, s, t);
    if (deg(g) != 0)
        throw DomainError("not-splittable", "residue factors are not coprime");

    Poly f = poly_lift(fbar);
    Poly gg = poly_lift(gbar);
    Poly a = poly_lift(s);
    Poly b = poly_lift(t);
    int df = deg(f), dg = deg(gg);

    // linear lift, one digit per step: with e = Phi - f*g = p^k * eps,
    // correct f += p^k*(b*eps mod f), g += p^k*(a*eps mod g).
    for (int k = 1; k < digits; ++k) {
        Poly e = poly_sub(Phi, poly_mul(f, gg));
        if (deg(e) < 0) break;
        if (!e.empty()) {
            bool all = true;
            for (auto& c : e)
                if (!c.val_at_least(k)) { all = false; break; }
            if (!all) throw InternalError("hensel: error term too large");
        }
        Poly eps(e.size(), Quad::zero());
        for (size_t i = 0; i < e.size(); ++i) eps[i] = e[i].shift(-k).mod_pk(1);
        auto [q1, df_] = poly_divmod(poly_mul(b, eps), f);
        auto [q2, dg_] = poly_divmod(poly_mul(a, eps), gg);
        (void)q1; (void)q2;
        for (int i = 0; i < df; ++i)
            if (i < static_cast<int>(df_.size())) f[i] += df_[i].shift(k);
        for (int i = 0; i < dg; ++i)
            if (i < static_cast<int>(dg_.size())) gg[i] += dg_[i].shift(k);
    }
    // refresh Bezout data to full precision: solve a*f + b*g = 1 by lifting too
    for (int k = 1; k < digits; ++k) {
        Poly e = poly_sub(Poly{Quad::one()}, poly_add(poly_mul(a, f), poly_mul(b, gg)));
        if (deg(e) < 0) break;
        bool all = true;
        for (auto& c : e)
            if (!c.val_at_least(k)) { all = false; break; }
        if (!all) throw InternalError("hensel: bezout error too large");
        Poly eps(e.size(), Quad::zero());
        for (size_t i = 0; i < e.size(); ++i) eps[i] = e[i].shift(-k).mod_pk(1);
        auto [qa, da] = poly_divmod(poly_mul(a, eps), gg);
        Poly db = poly_add(poly_mul(b, eps), poly_mul(qa, f));
        for (size_t i = 0; i < da.size(); ++i) {
            if (a.size() <= i) a.resize(i + 1, Quad::zero());
            a[i] += da[i].shift(k);
        }
        for (size_t i = 0; i < db.size(); ++i) {
            if (b.size() <= i) b.resize(i + 1, Quad::zero());
            b[i] += db[i].shift(k);
        }
    }
    return HenselPair{f, gg, a, b};
}

Quad hensel_root(const Poly& f, const KF& r, int digits) {
    Quad x = lift(r);
    // Newton iteration; the derivative stays a unit because the root is simple
    Poly df(f.size() > 1 ? f.size() - 1 : 1, Quad::zero());
    for (size_t i = 1; i < f.size(); ++i) df[i - 1] = f[i] * Quad::from_int(static_cast<long long>(i));
    for (int it = 0; it < digits + 2; ++it) {
        Quad fx = poly_eval(f, x);
        if (fx.is_zeroish() && fx.val_lb() >= digits) break;
        Quad dfx = poly_eval(df, x);
        x = x - fx * dfx.inv();
    }
    Quad fx = poly_eval(f, x);
    if (!fx.val_at_least(digits)) throw InternalError("hensel_root did not converge");
    return x;
}

}  // namespace u22
