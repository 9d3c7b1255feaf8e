#include "u22/padic.hpp"

#include <atomic>
#include <memory>
#include <mutex>
#include <sstream>

namespace u22 {

const int Qp::INF = 1 << 28;

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

long find_eps(long p) {
    // smallest positive nonsquare unit mod p
    for (long e = 2; e < p; ++e) {
        bool square = false;
        for (long x = 1; x < p && !square; ++x)
            if ((x * x) % p == e) square = true;
        if (!square) return e;
    }
    throw InternalError("no nonsquare unit found");
}

std::shared_ptr<const Zp> g_ctx;
std::mutex g_ctx_mu;

}  // namespace

Zp::Zp(long p, int rel_digits, int char_level)
    : p_(p), nrel_(rel_digits), mchar_(char_level) {
    if (p < 3 || p % 2 == 0) throw DomainError("invalid-input", "p must be an odd prime");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) throw DomainError("invalid-input", "p must be prime");
    if (nrel_ <= 0 || nrel_ > max_digits(p)) throw DomainError("invalid-input", "unsupported precision");
    if (mchar_ < 1 || mchar_ > nrel_) throw DomainError("invalid-input", "bad character level");
    eps_ = find_eps(p);
    pow_[0] = 1;
    for (int i = 1; i <= nrel_; ++i) pow_[i] = pow_[i - 1] * static_cast<std::uint64_t>(p);
    char_mod_ = 1;
    for (int i = 0; i < mchar_; ++i) char_mod_ *= p;
}

std::uint64_t Zp::pk(int k) const {
    if (k < 0 || k > nrel_) throw InternalError("pk out of range");
    return pow_[k];
}

int Zp::max_digits(long p) {
    std::uint64_t lim = (std::uint64_t(1) << 62);
    std::uint64_t v = 1;
    int n = 0;
    while (v <= lim / static_cast<std::uint64_t>(p)) {
        v *= static_cast<std::uint64_t>(p);
        ++n;
    }
    return n;
}

const Zp& ctx() {
    if (!g_ctx) throw InternalError("field context not set");
    return *g_ctx;
}

void set_ctx(long p, int rel_digits, int char_level) {
    if (rel_digits <= 0) rel_digits = Zp::max_digits(p);
    rel_digits = std::min(rel_digits, Zp::max_digits(p));
    if (char_level <= 0) char_level = std::min(8, rel_digits);
    std::lock_guard<std::mutex> lk(g_ctx_mu);
    g_ctx = std::make_shared<const Zp>(p, rel_digits, char_level);
}

// ---------------------------------------------------------------- Qp

Qp Qp::make(int v, int prec, std::uint64_t u) {
    const Zp& c = ctx();
    if (prec <= 0) {
        // no digits survive: approximate zero at absolute level v
        return Qp(v, 0, 0, false);
    }
    if (prec > c.nrel()) prec = c.nrel();
    u %= c.pk(prec);
    if (u == 0) return Qp(v + prec, 0, 0, false);
    // strip p-factors out of the unit
    int t = 0;
    while (u % static_cast<std::uint64_t>(c.p()) == 0) {
        u /= static_cast<std::uint64_t>(c.p());
        ++t;
    }
    return Qp(v + t, prec - t, u, false);
}

Qp Qp::from_int(long long n) {
    const Zp& c = ctx();
    if (n == 0) return zero();
    bool neg = n < 0;
    unsigned long long a = neg ? -static_cast<unsigned long long>(n) : n;
    int v = 0;
    while (a % static_cast<unsigned long long>(c.p()) == 0) {
        a /= static_cast<unsigned long long>(c.p());
        ++v;
    }
    std::uint64_t m = c.pk(c.nrel());
    std::uint64_t u = a % m;
    if (neg) u = m - u;
    return make(v, c.nrel(), u);
}

Qp Qp::with_val(int val, long long unit_int) {
    Qp u = from_int(unit_int);
    if (u.exact_zero()) return zero();
    return u.shift(val);
}

Qp Qp::zero_to(int bound) { return Qp(bound, 0, 0, false); }

int Qp::val() const {
    if (exact_zero_) return INF;
    if (u_ == 0) throw PrecisionError("valuation of a value indistinguishable from 0");
    return v_;
}

int Qp::val_lb() const {
    if (exact_zero_) return INF;
    return v_;  // for fuzzy zero, v_ is the certified bound
}

bool Qp::val_at_least(int b) const {
    if (exact_zero_) return true;
    if (u_ != 0) return v_ >= b;
    if (v_ >= b) return true;  // certified O(p^v_) with v_ >= b
    throw PrecisionError("cannot certify valuation bound at working precision");
}

Qp Qp::operator-() const {
    if (is_zeroish()) return *this;
    const Zp& c = ctx();
    return Qp(v_, prec_, c.pk(prec_) - u_, false);
}

Qp operator+(const Qp& a, const Qp& b) {
    if (a.exact_zero_) return b;
    if (b.exact_zero_) return a;
    const Zp& c = ctx();
    const Qp* x = &a;
    const Qp* y = &b;
    if (x->v_ > y->v_) std::swap(x, y);
    int d = y->v_ - x->v_;
    // absolute knowledge of each term; the sum is known to the min of the two
    long ax = static_cast<long>(x->v_) + (x->u_ ? x->prec_ : 0);
    long ay = static_cast<long>(y->v_) + (y->u_ ? y->prec_ : 0);
    int r = static_cast<int>(std::min(ax, ay) - x->v_);
    if (x->u_ == 0 && y->u_ == 0) return Qp::zero_to(static_cast<int>(std::min(ax, ay)));
    if (r <= 0) return Qp::zero_to(static_cast<int>(std::min(ax, ay)));
    if (r > c.nrel()) r = c.nrel();
    std::uint64_t m = c.pk(r);
    std::uint64_t u = x->u_ % m;
    if (d < r && y->u_ != 0) u = (u + mulmod(y->u_, c.pk(d), m)) % m;
    return Qp::make(x->v_, r, u);
}

Qp operator-(const Qp& a, const Qp& b) { return a + (-b); }

Qp operator*(const Qp& a, const Qp& b) {
    if (a.exact_zero_ || b.exact_zero_) return Qp::zero();
    if (a.u_ == 0 || b.u_ == 0) {
        long bound = static_cast<long>(a.v_) + (a.u_ ? 0 : 0) + b.v_;
        // product of O(p^va) and p^vb*unit (or O(p^vb)) is O(p^(va+vb))
        return Qp::zero_to(static_cast<int>(bound));
    }
    const Zp& c = ctx();
    int r = std::min(a.prec_, b.prec_);
    return Qp::make(a.v_ + b.v_, r, mulmod(a.u_ % c.pk(r), b.u_ % c.pk(r), c.pk(r)));
}

Qp Qp::inv() const {
    if (is_zeroish())
        throw PrecisionError("inversion of a value indistinguishable from 0 at working precision");
    const Zp& c = ctx();
    // Newton iteration for the unit inverse mod p^prec
    std::uint64_t m = c.pk(prec_);
    std::uint64_t x = 1;
    {  // inverse mod p by Fermat
        std::uint64_t up = u_ % static_cast<std::uint64_t>(c.p());
        std::uint64_t e = static_cast<std::uint64_t>(c.p()) - 2, base = up, acc = 1;
        while (e) {
            if (e & 1) acc = (acc * base) % static_cast<std::uint64_t>(c.p());
            base = (base * base) % static_cast<std::uint64_t>(c.p());
            e >>= 1;
        }
        x = acc;
    }
    for (int k = 1; k < prec_; k <<= 1) {
        // x <- x*(2 - u*x) mod p^min(2k, prec)
        std::uint64_t mm = c.pk(std::min(2 * k, prec_));
        std::uint64_t t = mulmod(u_ % mm, x % mm, mm);
        t = (2 % mm + mm - t % mm) % mm;
        x = mulmod(x % mm, t, mm);
    }
    return Qp(-v_, prec_, x % m, false);
}

Qp Qp::shift(int k) const {
    if (exact_zero_) return *this;
    return Qp(v_ + k, prec_, u_, false);
}

Qp Qp::mod_pk(int k) const {
    if (is_zeroish()) {
        if (!exact_zero_ && v_ < k)
            throw PrecisionError("digit truncation below certified precision");
        return Qp::zero();
    }
    if (v_ >= k) return Qp::zero();
    int digits = k - v_;
    if (digits > prec_) throw PrecisionError("digit truncation beyond known digits");
    const Zp& c = ctx();
    std::uint64_t u = u_ % c.pk(digits);
    if (u == 0) return Qp::zero();
    // an exact finite digit string: full working precision
    Qp r = Qp::make(v_, c.nrel(), u);
    return r;
}

std::uint64_t Qp::unit_mod(int k) const {
    const Zp& c = ctx();
    if (is_zeroish()) return 0;
    if (k > prec_) throw PrecisionError("unit digits beyond known precision");
    return u_ % c.pk(k);
}

bool eq(const Qp& a, const Qp& b) {
    Qp d = a - b;
    return d.is_zeroish();
}

std::int64_t Qp::lift_int(int val0, int digits) const {
    const Zp& c = ctx();
    if (is_zeroish()) {
        if (!exact_zero_ && v_ < val0 + digits)
            throw PrecisionError("lift beyond certified zero bound");
        return 0;
    }
    if (v_ < val0) throw DomainError("invalid-input", "lift: valuation below window");
    int sh = v_ - val0;
    if (sh >= digits) return 0;
    if (prec_ + sh < digits) throw PrecisionError("lift: not enough digits");
    std::uint64_t m = c.pk(digits);
    return static_cast<std::int64_t>(mulmod(u_ % m, c.pk(sh), m));
}

std::string Qp::str() const {
    if (exact_zero_) return "0";
    std::ostringstream os;
    if (u_ == 0) {
        os << "O(p^" << v_ << ")";
        return os.str();
    }
    os << u_ << "*p^" << v_;
    return os.str();
}

// ---------------------------------------------------------------- Quad

Quad Quad::make(long long a, long long b, int k) {
    return Quad(Qp::from_int(a).shift(k), Qp::from_int(b).shift(k));
}

int Quad::val() const {
    if (exact_zero()) return Qp::INF;
    // min of component valuations; decidable if the smaller one is known
    int lb_re = re.val_lb(), lb_im = im.val_lb();
    if (re.known_nonzero() && (lb_re <= lb_im || !im.known_nonzero())) {
        if (lb_re <= lb_im) return lb_re;
    }
    if (im.known_nonzero() && lb_im <= lb_re) return lb_im;
    throw PrecisionError("valuation indeterminate at working precision");
}

int Quad::val_lb() const { return std::min(re.val_lb(), im.val_lb()); }

Qp Quad::norm() const { return re * re - Qp::from_int(ctx().eps()) * (im * im); }

Quad operator*(const Quad& a, const Quad& b) {
    Qp eps = Qp::from_int(ctx().eps());
    return Quad(a.re * b.re + eps * (a.im * b.im), a.re * b.im + a.im * b.re);
}

Quad Quad::inv() const {
    Qp n = norm();
    Qp ni = n.inv();
    return Quad(re * ni, -(im * ni));
}

std::string Quad::str() const {
    if (im.is_zeroish()) return re.str();
    return re.str() + " + (" + im.str() + ")*r";
}

// ---------------------------------------------------------------- KF

KF KF::of(long x, long y) {
    long p = ctx().p();
    x %= p; if (x < 0) x += p;
    y %= p; if (y < 0) y += p;
    return KF{x, y};
}

KF KF::conj() const { return of(a, -b); }
KF operator+(KF x, KF y) { return KF::of(x.a + y.a, x.b + y.b); }
KF operator-(KF x, KF y) { return KF::of(x.a - y.a, x.b - y.b); }
KF operator*(KF x, KF y) {
    long p = ctx().p(), e = ctx().eps();
    return KF::of(x.a * y.a % p + e * (x.b * y.b % p) % p, x.a * y.b % p + x.b * y.a % p);
}
KF KF::neg() const { return of(-a, -b); }

KF KF::inv() const {
    if (is_zero()) throw DomainError("invalid-input", "inverse of zero residue");
    long p = ctx().p(), e = ctx().eps();
    long n = ((a * a - e * b * b) % p + p * p) % p;  // norm, nonzero
    long ni = 1;
    for (long x = 1; x < p; ++x)
        if (x * n % p == 1) { ni = x; break; }
    return of(a * ni, -b * ni);
}

std::string KF::str() const {
    std::ostringstream os;
    os << a;
    if (b) os << "+" << b << "r";
    return os.str();
}

KF residue(const Quad& x) {
    if (!x.val_at_least(0)) throw DomainError("invalid-input", "residue of a non-integral value");
    long a = 0, b = 0;
    if (!x.re.is_zeroish() && x.re.val() == 0) a = static_cast<long>(x.re.unit_mod(1));
    else if (x.re.is_zeroish() || x.re.val() >= 1) a = 0;
    if (!x.im.is_zeroish() && x.im.val() == 0) b = static_cast<long>(x.im.unit_mod(1));
    return KF::of(a, b);
}

Quad lift(const KF& x) { return Quad::make(x.a, x.b); }

}  // namespace u22
