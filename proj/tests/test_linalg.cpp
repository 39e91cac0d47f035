#include "gqp/linalg.hpp"

#include <doctest.h>

using namespace gqp;

TEST_CASE("parse and print rationals")
{
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("\xE2\x88\x92" "3/2") == Rational(-3, 2));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("kernel and solve")
{
    // x + y + z = 0, y - z = 0
    std::vector<SparseVec> rows = {{{0, 1}, {1, 1}, {2, 1}}, {{1, 1}, {2, -1}}};
    auto ker = kernel_basis(rows, 3);
    REQUIRE(ker.size() == 1);
    for (const auto& r : rows) {
        Rational s = 0;
        for (auto& [i, v] : r)
            s += v * coeff(ker[0], i);
        CHECK(s == 0);
    }
    auto x = solve(rows, 3, {Rational(3), Rational(1)});
    REQUIRE(x);
    CHECK(coeff(*x, 0) + coeff(*x, 1) + coeff(*x, 2) == 3);
    CHECK(!solve({{{0, 1}}, {{0, 2}}}, 1, {Rational(1), Rational(1)}));
}

TEST_CASE("left inverse and express")
{
    Matrix m(3, 2);
    m(0, 0) = 1;
    m(1, 0) = 2;
    m(1, 1) = 1;
    m(2, 1) = 5;
    Matrix l = left_inverse(m);
    CHECK(l * m == Matrix::identity(2));
    Echelon e;
    e.insert({{0, 1}, {1, 1}}, unit_vec(0));
    e.insert({{1, 1}}, unit_vec(1));
    auto c = e.express({{0, 2}, {1, 5}});
    REQUIRE(c);
    CHECK(coeff(*c, 0) == 2);
    CHECK(coeff(*c, 1) == 3);
    CHECK(rank(m) == 2);
}
