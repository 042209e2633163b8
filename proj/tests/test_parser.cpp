#include "support.hpp"

#include <doctest.h>

using namespace sgd;
using namespace sgd::test;

namespace {

// Line and column of the ParseError thrown by `fn`.
template <class Fn>
std::pair<std::size_t, std::size_t> error_at(Fn&& fn) {
    try {
        fn();
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    FAIL("no ParseError");
    return {0, 0};
}

} // namespace

TEST_CASE("parseSystem: basic inputs") {
    auto s = parse_system("ring: x, y\npolys:\nx^2 + y^2 - 1\n2*x*y - 1\n");
    CHECK(s.file.variables == std::vector<std::string>{"x", "y"});
    REQUIRE(s.polys.size() == 2);
    CHECK(s.polys[0] == P(s.ring, "x^2 + y^2 - 1"));
    CHECK(s.polys[1].coefficient({1, 1}) == 2);
    CHECK(s.polys[1].coefficient({0, 0}) == -1);
    CHECK(s.file.polynomials == std::vector<std::string>{"x^2 + y^2 - 1", "2*x*y - 1"});

    auto t = parse_system("ring: x\npolys:\nx\n");
    REQUIRE(t.polys.size() == 1);
    CHECK(t.polys[0] == Polynomial::variable(t.ring, 0));

    auto u = parse_system("ring: x, y\npolys:\nx*y - y^2\n");
    CHECK(support(u.polys[0]) == std::set<ExponentVector>{{1, 1}, {0, 2}});
}

TEST_CASE("parseSystem: comments, blank lines, options, no trailing newline") {
    auto s = parse_system("# a comment\n\nring: a_1, b2   # trailing comment\nmethod: hilbert\n"
                          "homogenize-t: true\npolys:\n\n  a_1*b2 # the product\n\nb2^2");
    CHECK(s.file.variables == std::vector<std::string>{"a_1", "b2"});
    CHECK(s.file.options.at("method") == "hilbert");
    CHECK(s.file.options.at("homogenize-t") == "true");
    REQUIRE(s.polys.size() == 2);
    CHECK(s.polys[0] == P(s.ring, "a_1*b2"));
    CHECK(s.polys[1] == P(s.ring, "b2^2"));
}

TEST_CASE("expression grammar") {
    auto R = make_ring({"x", "y"});
    CHECK(P(R, "3/6*x") == Polynomial::variable(R, 0) * Rational(1, 2));
    CHECK(P(R, "-(x - y)^2") == P(R, "-x^2 + 2*x*y - y^2"));
    CHECK(P(R, "--x") == P(R, "x"));
    CHECK(P(R, "+x") == P(R, "x"));
    CHECK(P(R, "(x + 1)*(x - 1)") == P(R, "x^2 - 1"));
    CHECK(P(R, "x^0") == Polynomial::constant(R, 1));
    CHECK(P(R, "2*3*x") == P(R, "6*x"));
    CHECK(P(R, "x - x").is_zero());
    CHECK(P(R, "-x^2") == -P(R, "x^2")); // unary minus binds looser than ^
    CHECK(P(R, "(x^2)^3") == P(R, "x^6"));
    CHECK(P(R, "12345678901234567890*x").coefficient({1, 0}) == Integer("12345678901234567890"));
}

TEST_CASE("expression errors") {
    auto R = make_ring({"x", "y"});
    CHECK(error_at([&] { P(R, "2x"); }) == std::pair<std::size_t, std::size_t>{1, 2});
    CHECK(error_at([&] { P(R, "x y"); }) == std::pair<std::size_t, std::size_t>{1, 3});
    CHECK(error_at([&] { P(R, "x^-1"); }) == std::pair<std::size_t, std::size_t>{1, 3});
    CHECK(error_at([&] { P(R, "z + 1"); }) == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(error_at([&] { P(R, "x^2^3"); }) == std::pair<std::size_t, std::size_t>{1, 4});
    CHECK(error_at([&] { P(R, "x / 2"); }).second == 3);
    CHECK(error_at([&] { P(R, "1/0"); }).second == 3);
    CHECK(error_at([&] { P(R, "(x + y"); }).second == 7);
    CHECK(error_at([&] { P(R, "x $ y"); }).second == 3);
    CHECK(error_at([&] { P(R, "x +"); }).second == 4);
    CHECK(error_at([&] { P(R, ""); }).second == 1);
    CHECK(error_at([&] { P(R, "x^y"); }).second == 3);
    CHECK_THROWS_WITH_AS(P(R, "z"), doctest::Contains("undeclared variable 'z'"), ParseError);
    CHECK_THROWS_WITH_AS(P(R, "2x"), doctest::Contains("implicit multiplication"), ParseError);
}

TEST_CASE("file errors carry line numbers") {
    CHECK(error_at([] { parse_system("polys:\nx\n"); }).first == 1);
    CHECK(error_at([] { parse_system("ring: x\n"); }).first == 1);
    CHECK(error_at([] { parse_system("ring: x\npolys:\n"); }).first == 2);
    CHECK(error_at([] { parse_system("ring: x\nring: y\npolys:\nx\n"); }).first == 2);
    CHECK(error_at([] { parse_system("ring: x, x\npolys:\nx\n"); }).first == 1);
    CHECK(error_at([] { parse_system("ring: 1x\npolys:\nx\n"); }).first == 1);
    CHECK(error_at([] { parse_system("ring:\npolys:\nx\n"); }).first == 1);
    CHECK(error_at([] { parse_system("ring: x\nx + 1\npolys:\nx\n"); }).first == 2);
    CHECK(error_at([] { parse_system("ring: x\npolys: x\n"); }).first == 2);
    CHECK(error_at([] { parse_system("ring: x\n: 3\npolys:\nx\n"); }).first == 2);
    auto at = error_at([] { parse_system("ring: x, y\npolys:\nx\n\n  x*y + 2y\n"); });
    CHECK(at == std::pair<std::size_t, std::size_t>{5, 10});
}
