#include <doctest.h>

#include "kleincert/parity.hpp"

using namespace kleincert;

TEST_SUITE("parity") {
    TEST_CASE("bit arithmetic is xor and and") {
        CHECK(Bit(0) + Bit(0) == Bit(0));
        CHECK(Bit(0) + Bit(1) == Bit(1));
        CHECK(Bit(1) + Bit(0) == Bit(1));
        CHECK(Bit(1) + Bit(1) == Bit(0));
        CHECK(Bit(0) * Bit(0) == Bit(0));
        CHECK(Bit(0) * Bit(1) == Bit(0));
        CHECK(Bit(1) * Bit(0) == Bit(0));
        CHECK(Bit(1) * Bit(1) == Bit(1));

        Bit acc;
        acc += Bit(1);
        CHECK(acc == Bit(1));
        acc += Bit(1);
        CHECK(acc == Bit(0));
    }

    TEST_CASE("bit reduces any integer mod 2") {
        CHECK(Bit(-3) == Bit(1));
        CHECK(Bit(-4) == Bit(0));
        CHECK(Bit(7) == Bit(1));
        CHECK(Bit(0).value() == 0);
        CHECK(Bit(5).value() == 1);
    }

    TEST_CASE("epsilon is the parity of the exponent") {
        CHECK(epsilon(0) == Bit(0));
        CHECK(epsilon(1) == Bit(1));
        CHECK(epsilon(-1) == Bit(1));
        CHECK(epsilon(-2) == Bit(0));
        CHECK(epsilon(1000001) == Bit(1));
    }

    TEST_CASE("t rounds toward minus infinity") {
        CHECK(t_floor(0) == 0);
        CHECK(t_floor(1) == 0);
        CHECK(t_floor(2) == 1);
        CHECK(t_floor(5) == 2);
        CHECK(t_floor(-1) == -1);
        CHECK(t_floor(-2) == -1);
        CHECK(t_floor(-4) == -2);
        CHECK(t_floor(-5) == -3);
    }

    TEST_CASE("t mod 2 follows the period-four pattern 0,0,1,1") {
        CHECK(t_mod2(0) == Bit(0));
        CHECK(t_mod2(1) == Bit(0));
        CHECK(t_mod2(2) == Bit(1));
        CHECK(t_mod2(3) == Bit(1));
        CHECK(t_mod2(-1) == Bit(1));
        CHECK(t_mod2(-2) == Bit(1));
        CHECK(t_mod2(-3) == Bit(0));
        CHECK(t_mod2(-4) == Bit(0));
        for (std::int64_t m = -50; m <= 50; ++m) {
            CHECK(t_mod2(m) == t_mod2(m + 4));
            CHECK(t_mod2(m).value() == ((m % 4 + 4) % 4) / 2);
        }
    }
}
