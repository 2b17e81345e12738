/**
 * @file test_scalars.cpp
 * @brief Unit tests for exact rational and cyclotomic arithmetic.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "scalars.hpp"

using namespace twochar;

TEST_CASE("rational string round trip") {
    CHECK(rational_to_string(Rational(3, 2)) == "3/2");
    CHECK(rational_to_string(Rational(-4, 2)) == "-2");
    CHECK(rational_from_string("3/2") == Rational(3, 2));
    CHECK(rational_from_string("-7") == Rational(-7));
    CHECK(rational_from_string(" 10/-5 ") == Rational(-2));
    CHECK_THROWS_AS(rational_from_string("1/0"), parse_error);
    CHECK_THROWS_AS(rational_from_string("a"), parse_error);
    CHECK_THROWS_AS(rational_from_string(""), parse_error);
}

TEST_CASE("euler phi and cyclotomic polynomials") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    // Phi_12 = x^4 - x^2 + 1
    const auto& p12 = Cyclotomic::cyclotomic_polynomial(12);
    CHECK(p12 == std::vector<Integer>{1, 0, -1, 0, 1});
    // Phi_6 = x^2 - x + 1
    const auto& p6 = Cyclotomic::cyclotomic_polynomial(6);
    CHECK(p6 == std::vector<Integer>{1, -1, 1});
    // Phi_5 = 1 + x + x^2 + x^3 + x^4
    const auto& p5 = Cyclotomic::cyclotomic_polynomial(5);
    CHECK(p5 == std::vector<Integer>{1, 1, 1, 1, 1});
}

TEST_CASE("primitive cube root relation: 1 + z3 + z3^2 = 0") {
    const Cyclotomic z3 = root_of_unity(3, 1);
    CHECK((Cyclotomic::one() + z3 + z3 * z3).is_zero());
}

TEST_CASE("inverse of zeta_6 is zeta_6^5") {
    const Cyclotomic z6 = root_of_unity(6, 1);
    CHECK(z6.inverse() == root_of_unity(6, 5));
    CHECK((z6 * z6.inverse()).is_one());
}

TEST_CASE("approximate_complex matches reference values") {
    const auto i4 = approximate_complex(root_of_unity(4, 1));
    CHECK(i4.first == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(i4.second == doctest::Approx(1.0).epsilon(1e-9));
    const auto w = approximate_complex(root_of_unity(3, 1));
    CHECK(w.first == doctest::Approx(-0.5).epsilon(1e-9));
    CHECK(w.second == doctest::Approx(0.8660254037844386).epsilon(1e-9));
}

TEST_CASE("roots of unity normalize their order") {
    CHECK(root_of_unity(6, 2).order() == 3);  // zeta_6^2 = zeta_3
    CHECK(root_of_unity(6, 3).order() == 2);  // = -1
    CHECK(root_of_unity(6, 3) == Cyclotomic(Rational(-1)));
    CHECK(root_of_unity(8, 0).is_one());
    CHECK(root_of_unity(1, 0).is_one());
}

TEST_CASE("mixed-order arithmetic embeds into the lcm field") {
    const Cyclotomic z3 = root_of_unity(3, 1);
    const Cyclotomic z4 = root_of_unity(4, 1);
    const Cyclotomic prod = z3 * z4;
    CHECK(prod == root_of_unity(12, 7)); // 1/3 + 1/4 = 7/12
    CHECK((z3 + z4).order() == 12);
    CHECK((prod * prod.inverse()).is_one());
}

TEST_CASE("reduced_order finds the minimal subfield") {
    const Cyclotomic z6sq = root_of_unity(6, 1) * root_of_unity(6, 1);
    CHECK(z6sq == root_of_unity(3, 1));
    CHECK(z6sq.reduced_order().order() == 3);
    const Cyclotomic one = root_of_unity(5, 1) * root_of_unity(5, 4);
    CHECK(one.is_rational());
    CHECK(one.reduced_order().order() == 1);
    CHECK(one.rational_value() == 1);
}

TEST_CASE("to_string is deterministic and minimal") {
    CHECK(Cyclotomic::zero().to_string() == "0");
    CHECK(Cyclotomic::one().to_string() == "1");
    CHECK(root_of_unity(3, 1).to_string() == "z3");
    // zeta_3^2 = -1 - zeta_3 in the power basis {1, z3} of Q(zeta_3).
    CHECK(root_of_unity(3, 2).to_string() == "-1 - z3");
    CHECK((Cyclotomic(Rational(1, 2)) - root_of_unity(4, 1)).to_string() == "1/2 - z4");
    CHECK(root_of_unity(6, 3).to_string() == "-1");
}

TEST_CASE("field axioms on random elements of Q(zeta_12)") {
    std::mt19937 rng(20240817u);
    std::uniform_int_distribution<int> coeff(-4, 4);
    auto random_elt = [&]() {
        std::vector<Rational> c(4);
        for (auto& v : c) v = Rational(coeff(rng));
        return Cyclotomic(12, c);
    };
    for (int trial = 0; trial < 40; ++trial) {
        const Cyclotomic a = random_elt(), b = random_elt(), c = random_elt();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        if (!a.is_zero()) {
            CHECK((a * a.inverse()).is_one());
            CHECK(a.inverse().inverse() == a);
        }
    }
}

TEST_CASE("embedding round trips through reduced_order") {
    const Cyclotomic x = root_of_unity(4, 1) + Cyclotomic(Rational(2));
    const Cyclotomic y = x.embedded(12);
    CHECK(y == x);
    CHECK(y.reduced_order().order() == 4);
    CHECK(y.reduced_order() == x);
}

TEST_CASE("invalid construction is rejected") {
    CHECK_THROWS_AS(Cyclotomic(0, {}), validation_error);
    CHECK_THROWS_AS(Cyclotomic(3, {Rational(1)}), validation_error); // needs phi(3)=2 coeffs
    CHECK_THROWS_AS(Cyclotomic::zero().inverse(), validation_error);
    CHECK_THROWS_AS(root_of_unity(3, 1).rational_value(), validation_error);
    CHECK_THROWS_AS(root_of_unity(4, 1).embedded(6), validation_error);
}
