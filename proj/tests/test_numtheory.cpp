#include <catch2/catch_amalgamated.hpp>

#include "gk/numtheory.hpp"

using namespace gk;

namespace {

// Independent sieve-based factorization for small inputs.
Factorization sieve_factorize(u64 n) {
    Factorization f;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.factors.push_back({p, e});
        }
    }
    if (n > 1) f.factors.push_back({n, 1});
    return f;
}

} // namespace

TEST_CASE("factorize small values") {
    auto f = factorize(60);
    REQUIRE(f.factors == std::vector<PrimePower>{{2, 2}, {3, 1}, {5, 1}});
    REQUIRE(f.value() == 60);
    REQUIRE(factorize(1).factors.empty());
}

TEST_CASE("factorize catalog-sized values") {
    // q - sqrt(2q) + 1 for q = 2^19; its prime set is the clique {5,229,457}.
    auto f = factorize(523265);
    REQUIRE(f.prime_set() == std::set<u128>{5, 229, 457});
    // q + sqrt(2q) + 1 for q = 2^7.
    REQUIRE(factorize(145).prime_set() == std::set<u128>{5, 29});
}

TEST_CASE("factorize matches sieve oracle on a dense small range") {
    for (u64 n = 1; n <= 20000; ++n) {
        auto f = factorize(n);
        REQUIRE(f.value() == n);
        REQUIRE(f == sieve_factorize(n));
    }
}

TEST_CASE("factorize matches sieve oracle on sampled larger values") {
    for (u64 n : {999983ULL, 1000003ULL, 87178291199ULL, 614889782588491410ULL,
                  2305843009213693951ULL}) {
        auto f = factorize(n);
        REQUIRE(f.value() == n);
        for (const auto& pp : f.factors) REQUIRE(is_prime(pp.prime));
    }
}

TEST_CASE("factorize splits 128-bit semiprimes with deterministic rho") {
    u128 a = 2305843009213693951ULL; // 2^61 - 1, prime
    u128 b = 2147483647ULL;          // 2^31 - 1, prime
    auto f = factorize(a * b);
    REQUIRE(f.factors.size() == 2);
    REQUIRE(f.factors[0].prime == b);
    REQUIRE(f.factors[1].prime == a);
}

TEST_CASE("factorize rejects out-of-range input") {
    REQUIRE_THROWS_AS(factorize(u128(1) << 96), Overflow);
    REQUIRE_THROWS_AS(factorize(0), DomainError);
}

TEST_CASE("is_prime_power") {
    REQUIRE(is_prime_power(9) == PrimePowerWitness{3, 2});
    REQUIRE(is_prime_power(113) == PrimePowerWitness{113, 1});
    REQUIRE_FALSE(is_prime_power(145).has_value());
    REQUIRE(is_prime_power(25) == PrimePowerWitness{5, 2});
}

TEST_CASE("e_order convention and small cases") {
    REQUIRE(e_order(2, 3) == 2);  // 3 = -1 (mod 4)
    REQUIRE(e_order(2, 5) == 1);  // 5 = +1 (mod 4)
    REQUIRE(e_order(5, 2) == 4);
    REQUIRE(e_order(7, 2) == 3);
    REQUIRE_THROWS_AS(e_order(3, 9), NotCoprime);
}

TEST_CASE("primitive prime divisors: exceptions and witnesses") {
    REQUIRE(primitive_prime_divisors(2, 6).empty());
    REQUIRE(primitive_prime_divisors(2, 1).empty());
    REQUIRE(primitive_prime_divisors(3, 1).empty());
    REQUIRE(primitive_prime_divisors(3, 2) == std::set<u128>{2});
    REQUIRE(primitive_prime_divisors(2, 4) == std::set<u128>{5});
}

TEST_CASE("primitive prime divisors: existence and order property, q,n <= 20") {
    for (u128 q = 2; q <= 20; ++q) {
        for (unsigned n = 1; n <= 20; ++n) {
            auto ppd = primitive_prime_divisors(q, n);
            bool exceptional =
                (q == 2 && n == 6) || (q == 2 && n == 1) || (q == 3 && n == 1);
            if (!exceptional) REQUIRE_FALSE(ppd.empty());
            for (u128 r : ppd) {
                // r | q^n - 1 and r does not divide q^m - 1 for m < n (odd r;
                // the r=2 entry uses the convention, checked via e_order).
                REQUIRE(e_order(r, q) == n);
                if (r != 2) {
                    u128 v = 1;
                    for (unsigned m = 1; m < n; ++m) {
                        v = v * q;
                        REQUIRE((v - 1) % r != 0);
                    }
                    REQUIRE(detail::powmod(q % r, n, r) == 1);
                }
            }
        }
    }
}

TEST_CASE("p-adic valuation") {
    REQUIRE(p_adic_valuation(2, 24) == 3);
    REQUIRE(p_adic_valuation(3, 24) == 1);
    REQUIRE(p_adic_valuation(5, 7) == 0);
}

TEST_CASE("two-adic valuation of 5^l - 1") {
    REQUIRE(lte_two_adic_five(1) == 2);
    REQUIRE(lte_two_adic_five(2) == 3);
    REQUIRE(lte_two_adic_five(4) == 4);
    for (unsigned l = 1; l <= 30; ++l)
        REQUIRE(lte_two_adic_five(l) == 2 + p_adic_valuation(2, l));
}

TEST_CASE("Suzuki prime-power pattern holds exactly for m in {1,2}") {
    for (unsigned m = 1; m <= 12; ++m)
        REQUIRE(suzuki_both_prime_powers(m) == (m == 1 || m == 2));
}

TEST_CASE("Ree prime-power values are prime and obey the congruence") {
    auto r1 = ree_prime_power_check(1); // Q- = 19, Q+ = 37
    REQUIRE(r1.minus_is_prime_power);
    REQUIRE(r1.plus_is_prime_power);
    REQUIRE(r1.both_prime);
    REQUIRE(r1.congruence_ok);

    auto r2 = ree_prime_power_check(2); // Q+Q- divisible by 7, not both prime
    REQUIRE_FALSE(r2.both_prime);

    for (unsigned m = 1; m <= 8; ++m) {
        // Prime-power values must have exponent 1; the check throws otherwise.
        REQUIRE_NOTHROW(ree_prime_power_check(m));
    }
}

TEST_CASE("2^(2m+1) + 1 = 3^k has the single solution (1,2)") {
    using Sol = std::set<std::pair<unsigned, unsigned>>;
    REQUIRE(gerono_solutions(1) == Sol{{1, 2}});
    REQUIRE(gerono_solutions(30) == Sol{{1, 2}});
    REQUIRE_THROWS_AS(gerono_solutions(0), DomainError);
}

TEST_CASE("factored decimal rendering") {
    Factorization f{{{2, 4}, {3, 2}, {5, 1}, {11, 1}}};
    REQUIRE(factored_decimal(f) == "7920");
    Factorization big{{{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3},
                       {17, 1}, {19, 1}, {23, 1}, {29, 1}, {31, 1}, {41, 1},
                       {47, 1}, {59, 1}, {71, 1}}};
    REQUIRE(factored_decimal(big) ==
            "808017424794512875886459904961710757005754368000000000");
}

TEST_CASE("factorization algebra helpers") {
    auto a = factorize(12), b = factorize(18);
    REQUIRE(multiply(a, b).value() == 216);
    REQUIRE(divide_exact(factorize(216), b).value() == 12);
    REQUIRE_THROWS_AS(divide_exact(a, factorize(5)), DomainError);
}
