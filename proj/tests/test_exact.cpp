#include <doctest.h>

#include <random>

#include "waring/linalg.hpp"

using namespace waring::exact;

namespace {

Matrix from(std::vector<Vec> rows) { return Matrix::from_rows(rows); }

Matrix random_matrix(std::mt19937_64& gen, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> dist(-9, 9);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(dist(gen));
    return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(rat(3, 6)) == "1/2");
    CHECK(to_string(rat(-4, 2)) == "-2");
    CHECK(parse_rational("7/21") == rat(1, 3));
    CHECK(parse_rational("-5") == rat(-5));
    CHECK_THROWS_AS(rat(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("row reduction of a rank-one matrix") {
    auto [red, piv] = rref(from({{rat(1), rat(2)}, {rat(2), rat(4)}}));
    CHECK(piv == std::vector<std::size_t>{0});
    CHECK(red.at(0, 0) == 1);
    CHECK(red.at(0, 1) == 2);
    CHECK(red.at(1, 0) == 0);
    CHECK(red.at(1, 1) == 0);
    CHECK(rank(from({{rat(1), rat(2)}, {rat(2), rat(4)}, {rat(3), rat(6)}})) == 1);
}

TEST_CASE("kernel of a single equation") {
    SubspaceBasis k = kernel(from({{rat(1), rat(1), rat(0)}}));
    CHECK(k.dim() == 2);
    CHECK(in_span({rat(1), rat(-1), rat(0)}, k));
    CHECK(in_span({rat(0), rat(0), rat(1)}, k));
    CHECK_FALSE(in_span({rat(1), rat(1), rat(0)}, k));
}

TEST_CASE("membership reads off coefficients") {
    SubspaceBasis s = span_of({{rat(1), rat(0), rat(2)}, {rat(0), rat(1), rat(3)}}, 3);
    auto c = member({rat(2), rat(5), rat(19)}, s);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 2);
    CHECK((*c)[1] == 5);
    CHECK_FALSE(member({rat(1), rat(0), rat(0)}, s).has_value());
    CHECK_THROWS_AS(member({rat(1), rat(0)}, s), std::invalid_argument);
}

TEST_CASE("solving against the original generators") {
    std::vector<Vec> rows{{rat(1), rat(1)}, {rat(1), rat(-1)}};
    auto c = solve_in_span(rows, {rat(5), rat(1)});
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 3);
    CHECK((*c)[1] == 2);
    CHECK_FALSE(solve_in_span({{rat(1), rat(0)}}, {rat(0), rat(1)}).has_value());
}

TEST_CASE("intersection and join of coordinate planes") {
    SubspaceBasis xy = span_of({{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}}, 3);
    SubspaceBasis yz = span_of({{rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}}, 3);
    SubspaceBasis meet = intersect(xy, yz);
    CHECK(meet.dim() == 1);
    CHECK(in_span({rat(0), rat(1), rat(0)}, meet));
    CHECK(join(xy, yz).dim() == 3);
}

TEST_CASE("rank-nullity and Grassmann identity on random matrices") {
    std::mt19937_64 gen(42);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t rows = 1 + gen() % 6, cols = 1 + gen() % 6;
        Matrix m = random_matrix(gen, rows, cols);
        CHECK(rank(m) + kernel(m).dim() == cols);

        auto [red, piv] = rref(m);
        auto [red2, piv2] = rref(red);
        CHECK(red.entries == red2.entries);  // idempotent
        CHECK(piv == piv2);

        SubspaceBasis s1 = row_space(random_matrix(gen, 1 + gen() % 4, 5));
        SubspaceBasis s2 = row_space(random_matrix(gen, 1 + gen() % 4, 5));
        CHECK(s1.dim() + s2.dim() == join(s1, s2).dim() + intersect(s1, s2).dim());
    }
}

TEST_CASE("members reconstruct from coefficients") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 25; ++trial) {
        Matrix m = random_matrix(gen, 3, 6);
        SubspaceBasis s = row_space(m);
        Vec v(6, Rational(0));
        std::uniform_int_distribution<long> dist(-5, 5);
        for (std::size_t i = 0; i < 3; ++i) {
            Rational c(dist(gen));
            for (std::size_t j = 0; j < 6; ++j) v[j] += c * m.at(i, j);
        }
        auto coeffs = member(v, s);
        REQUIRE(coeffs.has_value());
        Vec back(6, Rational(0));
        for (std::size_t i = 0; i < s.dim(); ++i)
            for (std::size_t j = 0; j < 6; ++j) back[j] += (*coeffs)[i] * s.vectors[i][j];
        CHECK(back == v);
    }
}
