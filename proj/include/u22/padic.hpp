#pragma once

// Exact truncated arithmetic in F0 = Q_p and its unramified quadratic
// extension F = F0(sqrt(eps)), for odd p.  Every scalar carries the number
// of relative pi-digits it is known to; any test that cannot be certified
// at the available precision throws PrecisionError instead of guessing.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace u22 {

struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    std::string code;  // machine-readable tag, e.g. "invalid-stratum"
    DomainError(std::string c, const std::string& what)
        : std::runtime_error(c + ": " + what), code(std::move(c)) {}
};

struct InternalError : std::runtime_error {
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

// Working parameters of the base field: the odd prime p, the number of
// relative digits kept on every unit, the exponent level M of the additive
// character (values land in mu_{p^M}), and the nonsquare unit eps.
class Zp {
public:
    Zp(long p, int rel_digits, int char_level);

    long p() const { return p_; }
    int nrel() const { return nrel_; }
    int mchar() const { return mchar_; }
    long eps() const { return eps_; }
    long q() const { return p_; }  // residue field of F0 is F_p

    // p^k for 0 <= k <= nrel
    std::uint64_t pk(int k) const;
    std::int64_t char_mod() const { return char_mod_; }  // p^mchar

    // largest number of digits a 64-bit unit can hold for this p
    static int max_digits(long p);

private:
    long p_;
    int nrel_;
    int mchar_;
    long eps_;
    std::int64_t char_mod_;
    std::uint64_t pow_[64];
};

// Active context.  All values are tied to the context they were created
// under; suites switch it only at their boundaries.
const Zp& ctx();
void set_ctx(long p, int rel_digits = -1, int char_level = -1);

// Scalar in F0 = Q_p: value = p^v * u known modulo p^(v + prec) absolutely,
// with u a unit (or the scalar is an exact/approximate zero).
class Qp {
public:
    // exact zero
    Qp() : v_(0), prec_(0), u_(0), exact_zero_(true) {}

    static Qp zero() { return Qp(); }
    static Qp one() { return from_int(1); }
    static Qp from_int(long long n);
    // p^val * (unit given as an exact integer, reduced mod p^nrel)
    static Qp with_val(int val, long long unit_int);
    // unknown value of valuation >= bound ("O(p^bound)")
    static Qp zero_to(int bound);

    bool exact_zero() const { return exact_zero_; }
    bool known_nonzero() const { return !exact_zero_ && u_ != 0; }
    // approximate zero: agrees with 0 to all available digits
    bool fuzzy_zero() const { return !exact_zero_ && u_ == 0; }
    bool is_zeroish() const { return exact_zero_ || u_ == 0; }

    // exact valuation; throws on an approximate zero
    int val() const;
    // certified lower bound on the valuation (INF for exact zero)
    int val_lb() const;
    int prec() const { return prec_; }
    std::uint64_t unit() const { return u_; }

    // can we certify val >= b / val == b?  throws if not decidable
    bool val_at_least(int b) const;

    Qp operator-() const;
    friend Qp operator+(const Qp& a, const Qp& b);
    friend Qp operator-(const Qp& a, const Qp& b);
    friend Qp operator*(const Qp& a, const Qp& b);
    Qp inv() const;
    Qp& operator+=(const Qp& o) { *this = *this + o; return *this; }
    Qp& operator-=(const Qp& o) { *this = *this - o; return *this; }
    Qp& operator*=(const Qp& o) { *this = *this * o; return *this; }

    // multiply by p^k
    Qp shift(int k) const;
    // exact representative with all digits at positions >= k removed
    Qp mod_pk(int k) const;
    // digits of the unit below relative position k, as an integer
    std::uint64_t unit_mod(int k) const;

    // equal as far as both are known (never throws; all-known-digits test)
    friend bool eq(const Qp& a, const Qp& b);
    // lift to an integer representative of value / p^val0, for values with
    // val >= val0; requires enough digits to cover [val0, val0 + digits)
    std::int64_t lift_int(int val0, int digits) const;

    std::string str() const;

    static const int INF;

private:
    int v_;
    int prec_;         // relative digits known, >= 1 for nonzero
    std::uint64_t u_;  // in [0, p^prec), u % p != 0 unless u == 0
    bool exact_zero_;

    Qp(int v, int prec, std::uint64_t u, bool ez) : v_(v), prec_(prec), u_(u), exact_zero_(ez) {}
    static Qp make(int v, int prec, std::uint64_t u);
};

// Scalar in F = F0(sqrt(eps)): re + im*sqrt(eps).  Since F/F0 is unramified,
// val_F = min(val(re), val(im)) and no cross-component cancellation occurs.
class Quad {
public:
    Qp re, im;

    Quad() = default;
    Quad(Qp r, Qp i) : re(std::move(r)), im(std::move(i)) {}
    explicit Quad(const Qp& r) : re(r), im(Qp::zero()) {}

    static Quad zero() { return Quad(Qp::zero(), Qp::zero()); }
    static Quad one() { return Quad(Qp::one(), Qp::zero()); }
    static Quad from_int(long long n) { return Quad(Qp::from_int(n)); }
    static Quad sqrt_eps() { return Quad(Qp::zero(), Qp::one()); }
    // (a + b sqrt(eps)) * p^k
    static Quad make(long long a, long long b, int k = 0);

    bool exact_zero() const { return re.exact_zero() && im.exact_zero(); }
    bool is_zeroish() const { return re.is_zeroish() && im.is_zeroish(); }
    bool known_nonzero() const { return re.known_nonzero() || im.known_nonzero(); }

    int val() const;     // exact; throws if indeterminate
    int val_lb() const;
    bool val_at_least(int b) const { return re.val_at_least(b) && im.val_at_least(b); }

    Quad conj() const { return Quad(re, -im); }
    Qp trace() const { return re + re; }          // x + conj(x)
    Qp norm() const;                              // x * conj(x), in F0
    bool in_F0() const { return im.is_zeroish(); }

    Quad operator-() const { return Quad(-re, -im); }
    friend Quad operator+(const Quad& a, const Quad& b) { return {a.re + b.re, a.im + b.im}; }
    friend Quad operator-(const Quad& a, const Quad& b) { return {a.re - b.re, a.im - b.im}; }
    friend Quad operator*(const Quad& a, const Quad& b);
    Quad inv() const;
    Quad& operator+=(const Quad& o) { *this = *this + o; return *this; }
    Quad& operator-=(const Quad& o) { *this = *this - o; return *this; }
    Quad& operator*=(const Quad& o) { *this = *this * o; return *this; }

    Quad shift(int k) const { return Quad(re.shift(k), im.shift(k)); }
    Quad mod_pk(int k) const { return Quad(re.mod_pk(k), im.mod_pk(k)); }
    friend bool eq(const Quad& a, const Quad& b) { return eq(a.re, b.re) && eq(a.im, b.im); }

    std::string str() const;
};

// Residue field k_F = F_p(sqrt(eps)), exact arithmetic mod p.
struct KF {
    long a = 0, b = 0;  // a + b sqrt(eps) with 0 <= a, b < p

    static KF of(long x, long y = 0);
    bool is_zero() const { return a == 0 && b == 0; }
    bool in_k0() const { return b == 0; }
    KF conj() const;  // Frobenius a - b sqrt(eps)
    friend KF operator+(KF x, KF y);
    friend KF operator-(KF x, KF y);
    friend KF operator*(KF x, KF y);
    KF neg() const;
    KF inv() const;
    friend bool operator==(const KF& x, const KF& y) { return x.a == y.a && x.b == y.b; }
    std::string str() const;
};

// residue of a Quad with val >= 0 (throws if val < 0 or indeterminate)
KF residue(const Quad& x);
// exact lift of a residue element
Quad lift(const KF& x);

}  // namespace u22
