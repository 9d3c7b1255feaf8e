#pragma once

// Values of the additive character live in mu_{p^M}; sums of them live in
// the cyclotomic integer ring Z[zeta_{p^M}].  Everything is exact: a RootArg
// is an exponent mod p^M, a CycSum is a sparse integer combination reduced
// against the minimal polynomial of zeta_{p^M}.

#include <cstdint>
#include <map>
#include <string>

#include "u22/padic.hpp"

namespace u22 {

// zeta_{p^M}^e
struct RootArg {
    std::int64_t e = 0;  // normalized to [0, p^M)

    static RootArg of(std::int64_t exp);
    RootArg operator+(const RootArg& o) const { return of(e + o.e); }  // product of values
    RootArg operator-() const { return of(-e); }                        // inverse value
    bool trivial() const { return e == 0; }
    friend bool operator==(const RootArg& a, const RootArg& b) { return a.e == b.e; }
};

// additive character of F0 with conductor p0:
// Omega(x) = zeta_{p^M}^(p^(M-1) * x)  for val(x) >= 1 - M
RootArg omega(const Qp& x);
// Omega(tr_{F/F0}(x)) = Omega(2 * re(x))
RootArg omega_trace(const Quad& x);

class CycSum {
public:
    CycSum() = default;
    static CycSum zero() { return CycSum(); }
    static CycSum from_root(const RootArg& r, std::int64_t c = 1);
    static CycSum integer(std::int64_t n);

    bool is_zero() const { return terms_.empty(); }
    void add_root(const RootArg& r, std::int64_t c = 1);

    CycSum operator+(const CycSum& o) const;
    CycSum operator-(const CycSum& o) const;
    CycSum operator*(std::int64_t n) const;
    CycSum operator*(const CycSum& o) const;
    // multiply by zeta^e
    CycSum shifted(const RootArg& r) const;
    // complex conjugation zeta -> zeta^-1
    CycSum conj() const;

    friend bool operator==(const CycSum& a, const CycSum& b);

    // max |coefficient| of the reduced difference with another sum
    std::int64_t max_coeff_diff(const CycSum& o) const;
    std::int64_t max_abs_coeff() const;

    const std::map<std::int64_t, std::int64_t>& terms() const { return terms_; }
    std::string str() const;

private:
    // reduced support: exponents in [0, p^M) whose top base-p digit < p-1
    std::map<std::int64_t, std::int64_t> terms_;
    void reduce_exponent(std::int64_t e, std::int64_t c);
};

}  // namespace u22
