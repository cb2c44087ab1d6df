#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kashina/matrix.hpp"

using namespace kashina;

namespace {

Matrix from_rows(std::size_t r, std::size_t c, std::initializer_list<Scalar> vals) {
    Matrix m(r, c);
    auto it = vals.begin();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = *it++;
    return m;
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    static const Scalar pool[] = {Scalar(0),  Scalar(1),           Scalar(-1),
                                  Scalar::xi(), -Scalar::xi(),     Scalar(2),
                                  Scalar::rational(1, 2),          Scalar::rational(-1, 3)};
    std::uniform_int_distribution<std::size_t> pick(0, 7);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = pool[pick(rng)];
    return m;
}

} // namespace

TEST_CASE("product basics", "[matrix]") {
    std::mt19937 rng(11);
    Matrix m = random_matrix(rng, 2, 3);
    CHECK(Matrix::identity(2) * m == m);

    Matrix swap = from_rows(2, 2, {0, 1, 1, 0});
    CHECK(swap * swap == Matrix::identity(2));

    Scalar xi = Scalar::xi();
    Matrix t = from_rows(2, 2, {Scalar(0), xi, -xi, Scalar(0)});
    CHECK(t * t == Matrix::identity(2));

    CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), ShapeError);
}

TEST_CASE("kronecker product", "[matrix]") {
    CHECK(kron(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(4));

    Matrix swap = from_rows(2, 2, {0, 1, 1, 0});
    CHECK(kron(swap, Matrix::identity(1)) == swap);

    Matrix d = from_rows(2, 2, {Scalar(1), Scalar(0), Scalar(0), Scalar(-1)});
    Matrix dd = kron(d, d);
    Matrix want = Matrix::zeros(4, 4);
    want(0, 0) = Scalar(1);
    want(1, 1) = Scalar(-1);
    want(2, 2) = Scalar(-1);
    want(3, 3) = Scalar(1);
    CHECK(dd == want);
}

TEST_CASE("rank", "[matrix]") {
    CHECK(Matrix::zeros(4, 4).rank() == 0);
    CHECK(Matrix::identity(2).rank() == 2);

    Scalar xi = Scalar::xi();
    // second row is xi times the first
    Matrix m = from_rows(2, 2, {Scalar(1), xi, xi, Scalar(-1)});
    CHECK(m.rank() == 1);
}

TEST_CASE("kernel basis", "[matrix]") {
    CHECK(Matrix::identity(2).kernel_basis().empty());
    CHECK(Matrix::zeros(1, 2).kernel_basis().size() == 2);
    CHECK(Matrix::zeros(1, 1).kernel_basis().size() == 1);

    std::mt19937 rng(13);
    for (int it = 0; it < 30; ++it) {
        Matrix m = random_matrix(rng, 3, 5);
        auto basis = m.kernel_basis();
        CHECK(m.cols() == m.rank() + basis.size());
        for (const auto& v : basis) {
            auto img = m.apply(v);
            for (const auto& s : img) CHECK(s.is_zero());
        }
    }
}

TEST_CASE("algebraic properties on random matrices", "[matrix]") {
    std::mt19937 rng(17);
    for (int it = 0; it < 25; ++it) {
        Matrix a = random_matrix(rng, 2, 3), b = random_matrix(rng, 3, 4),
               c = random_matrix(rng, 4, 2);
        CHECK((a * b) * c == a * (b * c));

        Matrix m = random_matrix(rng, 3, 4);
        CHECK(m.rank() == m.transpose().rank());

        Matrix p = random_matrix(rng, 2, 2), q = random_matrix(rng, 3, 3);
        CHECK(kron(a, q) * kron(b, q) == kron(a * b, q * q));
        CHECK(kron(p, b) * kron(p, c.transpose().transpose()) ==
              kron(p * p, b * c.transpose().transpose()));
    }
}

TEST_CASE("kronecker mixed product", "[matrix]") {
    std::mt19937 rng(19);
    for (int it = 0; it < 20; ++it) {
        Matrix a = random_matrix(rng, 2, 3), c = random_matrix(rng, 3, 2);
        Matrix b = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 3);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
}

TEST_CASE("inverse", "[matrix]") {
    std::mt19937 rng(23);
    int found = 0;
    while (found < 10) {
        Matrix m = random_matrix(rng, 3, 3);
        auto inv = m.inverse();
        if (!inv) continue;
        ++found;
        CHECK(*inv * m == Matrix::identity(3));
        CHECK(m * *inv == Matrix::identity(3));
    }
    CHECK(!Matrix::zeros(2, 2).inverse());
}
