#include <catch2/catch_amalgamated.hpp>

#include "kashina/json_io.hpp"
#include "kashina/scalar.hpp"

using kashina::Scalar;

TEST_CASE("xi is a primitive 4th root of unity", "[scalar]") {
    Scalar xi = Scalar::xi();
    CHECK(xi * xi == Scalar(-1));
    CHECK(xi.pow(2) == Scalar(-1));
    CHECK(xi.pow(3) == -xi);
    CHECK(xi.pow(4) == Scalar(1));
    CHECK(xi.pow(1) != Scalar(1));
    CHECK(xi.pow(2) != Scalar(1));
    CHECK(xi.pow(3) != Scalar(1));
}

TEST_CASE("rationals stay in lowest terms with positive denominator", "[scalar]") {
    Scalar a = Scalar::rational(2, 4);
    CHECK(a == Scalar::rational(1, 2));
    CHECK(a.re().get_den() == 2);
    Scalar b = Scalar::rational(1, -2);
    CHECK(b.re().get_den() == 2);
    CHECK(b.re().get_num() == -1);
    CHECK_THROWS_AS(Scalar::rational(1, 0), std::invalid_argument);
}

TEST_CASE("field arithmetic", "[scalar]") {
    Scalar xi = Scalar::xi();
    Scalar a = Scalar(1) + xi;
    Scalar b = Scalar(1) - xi;
    CHECK(a * b == Scalar(2));
    CHECK(a - a == Scalar(0));
    CHECK((a / b) * b == a);

    Scalar c = Scalar::rational(3, 7) + Scalar::rational(-2, 5) * xi;
    CHECK(c * c.inverse() == Scalar(1));
    CHECK(c.pow(-2) == (c * c).inverse());
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);
}

TEST_CASE("string and JSON forms are canonical", "[scalar]") {
    Scalar xi = Scalar::xi();
    CHECK(Scalar(0).str() == "0");
    CHECK(Scalar(-1).str() == "-1");
    CHECK(xi.str() == "xi");
    CHECK((-xi).str() == "-xi");
    CHECK((Scalar::rational(1, 2) - Scalar(3) * xi).str() == "1/2-3*xi");

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    for (int k = 0; k < 50; ++k) {
        Scalar s = Scalar::rational(num(rng), den(rng)) +
                   Scalar::rational(num(rng), den(rng)) * xi;
        CHECK(kashina::scalar_from_json(kashina::scalar_to_json(s)) == s);
    }
}
