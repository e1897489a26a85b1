#include <doctest.h>

#include "cycinv/modarith.hpp"

using namespace cycinv;

TEST_SUITE("modarith") {

TEST_CASE("residue maps into [0,p)") {
    CHECK(residue(-3, 11) == 8);
    CHECK(residue(-11, 11) == 0);
    CHECK(residue(22, 11) == 0);
    CHECK(residue(5, 7) == 5);
    CHECK(residue(-1, 2) == 1);
    CHECK_THROWS_AS(residue(3, 0), std::invalid_argument);
}

TEST_CASE("is_prime on small and structured inputs") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK(is_prime(7919));
    CHECK(is_prime(1000000007));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(-7));
    CHECK_FALSE(is_prime(91));      // 7 * 13
    CHECK_FALSE(is_prime(561));     // Carmichael
    CHECK_FALSE(is_prime(1024));
    CHECK_FALSE(is_prime(3215031751LL)); // strong pseudoprime to bases 2,3,5,7
}

TEST_CASE("is_prime agrees with trial division up to 2000") {
    auto trial = [](long long n) {
        if (n < 2) return false;
        for (long long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    };
    for (long long n = 0; n <= 2000; ++n) CHECK(is_prime(n) == trial(n));
}

TEST_CASE("mod_inverse is a two-sided inverse") {
    for (long long p : {2LL, 3LL, 5LL, 7LL, 97LL}) {
        for (long long c = 1; c < p; ++c) {
            long long inv = mod_inverse(c, p);
            CHECK(inv >= 1);
            CHECK(inv < p);
            CHECK(residue(c * inv, p) == 1);
        }
    }
    CHECK(mod_inverse(1, 13) == 1);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK(mod_inverse(-3, 7) == mod_inverse(4, 7));
}

TEST_CASE("mod_inverse rejects bad input") {
    CHECK_THROWS_AS(mod_inverse(0, 7), std::invalid_argument);
    CHECK_THROWS_AS(mod_inverse(14, 7), std::invalid_argument);
    CHECK_THROWS_AS(mod_inverse(3, 10), std::invalid_argument);
}

TEST_CASE("Action validates and reduces its weights") {
    Action act(7, 15, -4);
    CHECK(act.a == 1); // 15 mod 7
    CHECK(act.b == 3); // -4 mod 7
    CHECK_THROWS_AS(Action(4, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(Action(7, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(Action(7, 14, 3), std::invalid_argument);
    CHECK_THROWS_AS(Action(7, 2, 7), std::invalid_argument);
}

TEST_CASE("TheoremViolation is a logic error") {
    CHECK_THROWS_AS(throw TheoremViolation("x"), std::logic_error);
}

}
