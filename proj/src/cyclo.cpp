#include "u22/cyclo.hpp"

#include <sstream>

namespace u22 {

RootArg RootArg::of(std::int64_t exp) {
    std::int64_t m = ctx().char_mod();
    exp %= m;
    if (exp < 0) exp += m;
    return RootArg{exp};
}

RootArg omega(const Qp& x) {
    const Zp& c = ctx();
    int M = c.mchar();
    if (x.exact_zero()) return RootArg{0};
    if (!x.val_at_least(1 - M))
        throw PrecisionError("omega: argument too singular for the character level");
    // exponent = p^(M-1) * x mod p^M; digits of x in the window [1-M, 1)
    std::int64_t w = x.lift_int(1 - M, M);  // x / p^(1-M) mod p^M
    // exponent = p^(M-1) * x = p^(M-1) * p^(1-M) * w = w
    return RootArg::of(w);
}

RootArg omega_trace(const Quad& x) { return omega(x.re + x.re); }

void CycSum::reduce_exponent(std::int64_t e, std::int64_t c) {
    if (c == 0) return;
    const Zp& cx = ctx();
    std::int64_t m = cx.char_mod();
    std::int64_t P = m / cx.p();  // p^(M-1)
    e %= m;
    if (e < 0) e += m;
    std::int64_t top = e / P;
    if (top == cx.p() - 1) {
        // zeta^(a + (p-1)p^(M-1)) = -sum_{j<p-1} zeta^(a + j p^(M-1))
        std::int64_t a = e % P;
        for (std::int64_t j = 0; j + 1 < cx.p(); ++j) reduce_exponent(a + j * P, -c);
        return;
    }
    auto it = terms_.find(e);
    if (it == terms_.end()) terms_.emplace(e, c);
    else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

CycSum CycSum::from_root(const RootArg& r, std::int64_t c) {
    CycSum s;
    s.reduce_exponent(r.e, c);
    return s;
}

CycSum CycSum::integer(std::int64_t n) {
    CycSum s;
    s.reduce_exponent(0, n);
    return s;
}

void CycSum::add_root(const RootArg& r, std::int64_t c) { reduce_exponent(r.e, c); }

CycSum CycSum::operator+(const CycSum& o) const {
    CycSum s = *this;
    for (auto& [e, c] : o.terms_) s.reduce_exponent(e, c);
    return s;
}

CycSum CycSum::operator-(const CycSum& o) const {
    CycSum s = *this;
    for (auto& [e, c] : o.terms_) s.reduce_exponent(e, -c);
    return s;
}

CycSum CycSum::operator*(std::int64_t n) const {
    CycSum s;
    if (n == 0) return s;
    for (auto& [e, c] : terms_) s.terms_.emplace(e, c * n);
    return s;
}

CycSum CycSum::operator*(const CycSum& o) const {
    CycSum s;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) s.reduce_exponent(e1 + e2, c1 * c2);
    return s;
}

CycSum CycSum::shifted(const RootArg& r) const {
    CycSum s;
    for (auto& [e, c] : terms_) s.reduce_exponent(e + r.e, c);
    return s;
}

CycSum CycSum::conj() const {
    CycSum s;
    for (auto& [e, c] : terms_) s.reduce_exponent(-e, c);
    return s;
}

bool operator==(const CycSum& a, const CycSum& b) { return a.terms_ == b.terms_; }

std::int64_t CycSum::max_coeff_diff(const CycSum& o) const {
    CycSum d = *this - o;
    return d.max_abs_coeff();
}

std::int64_t CycSum::max_abs_coeff() const {
    std::int64_t m = 0;
    for (auto& [e, c] : terms_) m = std::max(m, c < 0 ? -c : c);
    return m;
}

std::string CycSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        std::int64_t a = c < 0 ? -c : c;
        if (a != 1 || e == 0) os << a;
        if (e != 0) {
            if (a != 1) os << "*";
            os << "z^" << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace u22
