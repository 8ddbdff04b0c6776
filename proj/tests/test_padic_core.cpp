#include "doctest.h"

#include "padicdyn/json_io.hpp"
#include "padicdyn/padic.hpp"
#include "padicdyn/rng.hpp"

#include "oracle_helpers.hpp"

using namespace padicdyn;

TEST_CASE("context validates prime and precision") {
    CHECK_THROWS_AS(PAdicContext(4, 8), domain_error);
    CHECK_THROWS_AS(PAdicContext(1, 8), domain_error);
    CHECK_THROWS_AS(PAdicContext(7, 0), domain_error);
    PAdicContext ctx(7, 4);
    CHECK(ctx.modulus() == 2401);
    CHECK(ctx.unit_group_order() == 343 * 6);
    CHECK(is_prime(mpz_class("1000003")));
    CHECK_FALSE(is_prime(mpz_class("1000001"))); // 101 * 9901
}

TEST_CASE("from_rational canonical representation") {
    PAdicContext c2(2, 8);
    PAdicNumber x = PAdicNumber::from_rational(9, 8, c2);
    CHECK(x.valuation() == -3);
    CHECK(x.norm() == Radius::from_exponent(2, -3)); // norm 8
    CHECK(x.known_digits() == 8);

    PAdicNumber z = PAdicNumber::from_rational(0, 1, c2);
    CHECK(z.is_zero());
    CHECK(z.norm().is_zero());

    PAdicContext c7(7, 4);
    PAdicNumber third = PAdicNumber::from_rational(1, 3, c7);
    CHECK(third.valuation() == 0);
    CHECK((third.unit() * 3) % c7.modulus() == 1);

    CHECK_THROWS_AS(PAdicNumber::from_rational(1, 0, c7), domain_error);
}

TEST_CASE("addition follows the strong triangle inequality") {
    PAdicContext c2(2, 16);
    PAdicNumber one = PAdicNumber::one(c2);
    PAdicNumber two = one + one;
    CHECK(two.valuation() == 1); // |1+1|_2 = 1/2
    CHECK(two.norm() == Radius::from_exponent(2, 1));

    CHECK((one + PAdicNumber::zero(c2)).identical(one));

    PAdicContext c5(5, 16);
    PAdicNumber sum = PAdicNumber::one(c5) + PAdicNumber::from_integer(5, c5);
    CHECK(sum.norm() == Radius::from_exponent(5, 0)); // distinct norms: max wins
    CHECK(sum.unit() == 6);
}

TEST_CASE("total cancellation is flagged, not silently zero") {
    PAdicContext c7(7, 6);
    PAdicNumber x = PAdicNumber::from_rational(12, 5, c7);
    PAdicNumber d = x - x;
    CHECK(d.is_zero_at_precision());
    CHECK_FALSE(d.is_zero());
    CHECK(d.norm_bound_exponent() == 6);
    CHECK(d.norm().upper_bound_only());

    // Partial cancellation: 1 + (p^2 - 1) = p^2.
    PAdicNumber y = PAdicNumber::one(c7) + PAdicNumber::from_integer(48, c7);
    CHECK(y.valuation() == 2);
    CHECK(y.known_digits() == 4); // two digits consumed
}

TEST_CASE("multiplication, inversion, powers") {
    PAdicContext c7(7, 2);
    PAdicNumber p = PAdicNumber::from_integer(7, c7);
    CHECK((p * p).valuation() == 2);

    PAdicNumber three = PAdicNumber::from_integer(3, c7);
    PAdicNumber i3 = inv(three);
    CHECK(i3.unit() == 33); // 3 * 33 = 99 = 2 * 49 + 1
    CHECK((three * i3).identical(PAdicNumber::one(c7)));

    PAdicContext c5(5, 10);
    PAdicNumber x = PAdicNumber::from_rational(12, 7, c5);
    PAdicNumber prod = pow(x, mpz_class(-2)) * pow(x, mpz_class(2));
    CHECK(prod.identical(PAdicNumber::one(c5)));

    CHECK_THROWS_AS(inv(PAdicNumber::zero(c5)), domain_error);
    CHECK_THROWS_AS(pow(PAdicNumber::zero(c5), mpz_class(-1)), domain_error);
    CHECK(pow(PAdicNumber::zero(c5), mpz_class(3)).is_zero());
}

TEST_CASE("pow matches huge exponents through the unit-group reduction") {
    PAdicContext c7(7, 8);
    PAdicNumber x = PAdicNumber::from_integer(3, c7);
    // (-2)^200 has ~60 digits; the valuation side scales exactly, the unit
    // side reduces mod p^(N-1)(p-1).
    mpz_class k;
    mpz_class base = -2;
    mpz_pow_ui(k.get_mpz_t(), base.get_mpz_t(), 200);
    PAdicNumber big = pow(x, k);
    mpz_class kred = k % c7.unit_group_order();
    if (kred < 0) kred += c7.unit_group_order();
    mpz_class expected;
    mpz_powm(expected.get_mpz_t(), mpz_class(3).get_mpz_t(), kred.get_mpz_t(),
             c7.modulus().get_mpz_t());
    CHECK(big.unit() == expected);
    CHECK(big.valuation() == 0);

    PAdicNumber y = PAdicNumber::from_integer(7 * 3, c7);
    CHECK(pow(y, k).valuation() == k);
}

TEST_CASE("norm and distance") {
    PAdicContext c7(7, 8);
    PAdicNumber x = PAdicNumber::from_integer(343 * 5, c7); // p^3 * unit
    CHECK(x.norm() == Radius::from_exponent(7, 3));

    PAdicNumber one = PAdicNumber::one(c7);
    PAdicNumber e18 = PAdicNumber::from_integer(18, c7);
    CHECK(distance(one, e18) == Radius::from_exponent(7, 0)); // 17 coprime to 7

    Radius self = distance(x, x);
    CHECK(self.upper_bound_only()); // indistinguishable from 0, flagged
}

TEST_CASE("ultrametric and multiplicativity over random samples") {
    PAdicContext c13(13, 12);
    SplitMix64 rng(20240809);
    for (int trial = 0; trial < 200; ++trial) {
        long n1 = static_cast<long>(rng.below(2000)) - 1000;
        long n2 = static_cast<long>(rng.below(2000)) - 1000;
        long d1 = 1 + static_cast<long>(rng.below(999));
        long d2 = 1 + static_cast<long>(rng.below(999));
        if (n1 == 0 || n2 == 0) continue;
        PAdicNumber x = PAdicNumber::from_rational(n1, d1, c13);
        PAdicNumber y = PAdicNumber::from_rational(n2, d2, c13);

        PAdicNumber s = x + y;
        if (s.is_nonzero()) {
            CHECK(s.norm() <= std::max(x.norm(), y.norm()));
        }
        if (x.norm() != y.norm()) {
            CHECK(s.norm() == std::max(x.norm(), y.norm()));
        }
        CHECK((x * y).norm() == x.norm() * y.norm());
    }
}

TEST_CASE("from_rational is invariant under common factors") {
    PAdicContext c5(5, 10);
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        long n = static_cast<long>(rng.below(500)) + 1;
        long d = static_cast<long>(rng.below(500)) + 1;
        long k = static_cast<long>(rng.below(90)) + 1;
        PAdicNumber a = PAdicNumber::from_rational(n, d, c5);
        PAdicNumber b = PAdicNumber::from_rational(k * n, k * d, c5);
        CHECK(a.identical(b));
    }
}

TEST_CASE("pow agrees with repeated multiplication") {
    PAdicContext c7(7, 10);
    PAdicNumber x = PAdicNumber::from_rational(10, 3, c7);
    PAdicNumber acc = PAdicNumber::one(c7);
    for (long k = 1; k <= 12; ++k) {
        acc = acc * x;
        CHECK(pow(x, mpz_class(k)).identical(acc));
    }
}

TEST_CASE("precision honesty: recompute at N+8 and truncate") {
    const mpz_class p = 7;
    PAdicContext lo(p, 12), hi(p, 20);
    SplitMix64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        long n1 = static_cast<long>(rng.below(4000)) - 2000;
        long n2 = static_cast<long>(rng.below(4000)) - 2000;
        long d1 = 1 + static_cast<long>(rng.below(500));
        long d2 = 1 + static_cast<long>(rng.below(500));
        if (n1 == 0 || n2 == 0) continue;

        auto expr = [&](const PAdicContext& ctx) {
            PAdicNumber x = PAdicNumber::from_rational(n1, d1, ctx);
            PAdicNumber y = PAdicNumber::from_rational(n2, d2, ctx);
            return (x - y) * x + inv(y);
        };
        PAdicNumber rlo = expr(lo), rhi = expr(hi);
        if (rlo.is_nonzero()) {
            REQUIRE(rhi.is_nonzero());
            CHECK(rlo.valuation() == rhi.valuation());
            mpz_class mod = lo.prime_power(rlo.known_digits());
            CHECK(rlo.unit() == rhi.unit() % mod);
        } else if (rlo.is_zero_at_precision()) {
            // The refined value must respect the coarse bound.
            if (rhi.is_nonzero()) {
                CHECK(rhi.valuation() >= rlo.norm_bound_exponent());
            }
        }
    }
}

TEST_CASE("json serialization is exact and deterministic") {
    PAdicContext c2(2, 8);
    PAdicNumber x = PAdicNumber::from_rational(9, 8, c2);
    json j = to_json(x);
    CHECK(j["p"] == 2);
    CHECK(j["v"] == -3);
    CHECK(j["unit"] == "9");
    CHECK(j["digits"] == 8);
    CHECK(to_json(x).dump() == j.dump());

    json jz = to_json(PAdicNumber::zero(c2));
    CHECK(jz["zero"] == true);

    json jr = to_json(Radius::from_exponent(7, 1, 3));
    CHECK(jr["p"] == 7);
    CHECK(jr["num"] == 1);
    CHECK(jr["den"] == 3);
}

TEST_CASE("operations reject mixed contexts") {
    PAdicContext c5(5, 8), c7(7, 8);
    PAdicNumber a = PAdicNumber::one(c5), b = PAdicNumber::one(c7);
    CHECK_THROWS_AS(a + b, domain_error);
    CHECK_THROWS_AS(a * b, domain_error);
    CHECK_THROWS_AS(distance(a, b), domain_error);
}
