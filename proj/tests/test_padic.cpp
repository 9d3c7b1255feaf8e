#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "u22/cyclo.hpp"
#include "u22/padic.hpp"

using namespace u22;

TEST_SUITE_BEGIN("padic");

TEST_CASE("integer embedding and valuation") {
    set_ctx(3, 12, 4);
    CHECK(Qp::from_int(0).exact_zero());
    CHECK(Qp::from_int(9).val() == 2);
    CHECK(Qp::from_int(-9).val() == 2);
    CHECK(Qp::from_int(10).val() == 0);
    // valuation additivity: val(p^2 * u) = 2 for a unit u
    Qp u = Qp::from_int(7);
    CHECK((u.shift(2) * Qp::from_int(5)).val() == 2);
    CHECK(eq(Qp::from_int(6) * Qp::from_int(7), Qp::from_int(42)));
    CHECK(eq(Qp::from_int(5) + Qp::from_int(-5), Qp::zero()));
}

TEST_CASE("inverse of 1+p is the geometric series") {
    set_ctx(3, 6, 2);
    Qp x = Qp::from_int(1 + 3);
    Qp inv = x.inv();
    // independent oracle: 1 - 3 + 9 - 27 + 81 - 243 mod 3^6
    long long series = 0, term = 1;
    for (int i = 0; i < 6; ++i) { series += term; term *= -3; }
    CHECK(eq(inv, Qp::from_int(series)));
    CHECK(eq(inv * x, Qp::one()));
    set_ctx(3, 20, 6);
}

TEST_CASE("ring axioms at precision for random triples") {
    set_ctx(3, 20, 6);
    TestRng rng(42);
    for (int it = 0; it < 200; ++it) {
        Qp a = random_qp(rng, -3, 3), b = random_qp(rng, -3, 3), c = random_qp(rng, -3, 3);
        CHECK(eq((a + b) + c, a + (b + c)));
        CHECK(eq((a * b) * c, a * (b * c)));
        CHECK(eq(a * (b + c), a * b + a * c));
        CHECK(eq(a * a.inv(), Qp::one()));
        CHECK((a * b).val() == a.val() + b.val());
    }
}

TEST_CASE("quadratic extension: defining relation and conjugation") {
    set_ctx(3, 20, 6);
    Quad r = Quad::sqrt_eps();
    Quad r2 = r * r;
    CHECK(r2.in_F0());
    CHECK(eq(r2.re, Qp::from_int(ctx().eps())));
    CHECK(eq(r.conj(), -r));
    Quad a = Quad::from_int(5);
    CHECK(eq(a.conj(), a));

    TestRng rng(7);
    for (int it = 0; it < 100; ++it) {
        Quad x = random_quad(rng, -2, 2), y = random_quad(rng, -2, 2);
        CHECK(eq(x.conj().conj(), x));
        CHECK(eq((x * y).conj(), x.conj() * y.conj()));
        // norm lands in F0
        CHECK((x * x.conj()).in_F0());
        CHECK(eq((x * x.conj()).re, x.norm()));
        // trace and norm against brute-force conj arithmetic
        CHECK(eq(Quad(x.trace()), x + x.conj()));
        CHECK(eq(x * x.inv(), Quad::one()));
    }
}

TEST_CASE("trace and norm specifics") {
    set_ctx(3, 20, 6);
    Quad r = Quad::sqrt_eps();
    CHECK(eq(r.trace(), Qp::zero()));
    CHECK(eq(r.norm(), Qp::from_int(-ctx().eps())));
    CHECK(eq(Quad::one().trace(), Qp::from_int(2)));
    CHECK(eq(Quad::one().norm(), Qp::one()));
}

TEST_CASE("omega: conductor and additivity") {
    set_ctx(3, 20, 2);  // M = 2
    CHECK(omega(Qp::from_int(3)).trivial());         // trivial on p0
    CHECK(omega(Qp::from_int(9)).trivial());
    CHECK(omega(Qp::from_int(1)).e == 3);            // cube root as zeta_9^3
    // additivity: Omega(1)+Omega(1)+Omega(1) = Omega(3) = 0
    RootArg w = omega(Qp::from_int(1));
    CHECK((w + w + w).trivial());
    // conductor is exactly p0: nontrivial on every unit
    for (long u = 1; u < 3; ++u) CHECK(!omega(Qp::from_int(u)).trivial());
    // Omega(1/p) has order p^2
    RootArg d = omega(Qp::from_int(1).shift(-1));
    CHECK(!d.trivial());
    RootArg dp = RootArg::of(d.e * 3);
    CHECK(!dp.trivial());
    CHECK(RootArg::of(d.e * 9).trivial());
    // additive homomorphism on random pairs
    TestRng rng(5);
    for (int it = 0; it < 100; ++it) {
        Qp a = random_qp(rng, -1, 3), b = random_qp(rng, -1, 3);
        CHECK(omega(a + b) == omega(a) + omega(b));
    }
}

TEST_CASE("cyclotomic sums reduce canonically") {
    set_ctx(3, 20, 2);  // Z[zeta_9]
    // zeta^9 = 1
    CHECK(CycSum::from_root(RootArg::of(9)) == CycSum::integer(1));
    // sum of zeta^(j*3) over j < 3 vanishes
    CycSum s;
    for (int j = 0; j < 3; ++j) s.add_root(RootArg::of(3 * j));
    CHECK(s.is_zero());
    // idempotent reduction: reducing a reduced value is the identity
    CycSum t = CycSum::from_root(RootArg::of(7), 5) - CycSum::from_root(RootArg::of(2), 3);
    CycSum t2 = t + CycSum::zero();
    CHECK(t == t2);
    // shifted sums: zeta^8 = -(zeta^2 + zeta^5)
    CycSum u = CycSum::from_root(RootArg::of(8));
    CycSum v = CycSum::zero() - CycSum::from_root(RootArg::of(2)) - CycSum::from_root(RootArg::of(5));
    CHECK(u == v);
    // conjugation is a ring involution
    CycSum a = CycSum::from_root(RootArg::of(4), 2) + CycSum::integer(3);
    CycSum b = CycSum::from_root(RootArg::of(7), -1) + CycSum::from_root(RootArg::of(1), 2);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a.conj().conj() == a);
}

TEST_CASE("precision-exhausted paths are loud") {
    set_ctx(3, 6, 2);
    Qp tiny = Qp::zero_to(4);
    CHECK_THROWS_AS((void)tiny.inv(), PrecisionError);
    CHECK_THROWS_AS((void)tiny.val(), PrecisionError);
    CHECK(tiny.val_at_least(3));
    CHECK_THROWS_AS((void)tiny.val_at_least(5), PrecisionError);
    // omega needs val >= 1 - M
    CHECK_THROWS_AS((void)omega(Qp::from_int(1).shift(-5)), PrecisionError);
    set_ctx(3, 20, 6);
}

TEST_SUITE_END();
