#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/corpus.hpp"
#include "skein/tail.hpp"
#include "skein/theta.hpp"

using namespace skein;

namespace {

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.push_back(Rational(x));
    return out;
}

}  // namespace

TEST_CASE("normalized_q_coeffs enforces the q lattice") {
    std::map<int, Rational> good{{-4, Rational(2)}, {0, Rational(-1)}, {8, Rational(1)}};
    CHECK(normalized_q_coeffs(good) == ints({2, -1, 0, 1}));
    // Leading negative coefficient flips the global sign.
    std::map<int, Rational> neg{{0, Rational(-1)}, {4, Rational(3)}};
    CHECK(normalized_q_coeffs(neg) == ints({1, -3}));
    std::map<int, Rational> off{{0, Rational(1)}, {2, Rational(1)}};
    CHECK_THROWS_AS(normalized_q_coeffs(off), PreconditionError);
    CHECK(normalized_q_coeffs({}).empty());
}

TEST_CASE("positive braid closures have trivial tails") {
    auto t = tail(corpus().at("rtrefoil"), 4);
    CHECK(t.coeffs == ints({1, 0, 0, 0}));
    CHECK(t.str() == "1 + 0q + 0q^2 + 0q^3");
}

TEST_CASE("left trefoil tail shows the pentagonal pattern") {
    auto t = tail(corpus().at("ltrefoil"), 3);
    CHECK(t.coeffs == ints({1, -1, -1}));
}

TEST_CASE("head is the tail of the mirror") {
    CHECK(head(corpus().at("ltrefoil"), 3) == tail(corpus().at("rtrefoil"), 3));
    // The figure-eight knot is amphichiral.
    CHECK(head(corpus().at("figure8"), 3) == tail(corpus().at("figure8"), 3));
}

TEST_CASE("tail requires A-adequacy") {
    CHECK_THROWS_AS(tail(corpus().at("kinked_unknot"), 2), PreconditionError);
}

TEST_CASE("unknot tail is 1") {
    auto t = tail(corpus().at("unknot"), 4);
    CHECK(t.coeffs == ints({1, 0, 0, 0}));
}

TEST_CASE("tails_equal distinguishes the trefoils") {
    CHECK_FALSE(tails_equal(corpus().at("ltrefoil"), corpus().at("rtrefoil"), 2));
    CHECK(tails_equal(corpus().at("rtrefoil"), corpus().at("5_1"), 3));
}

TEST_CASE("stabilization report for 10_154m") {
    auto rows = stabilization_report(corpus().at("10_154m"), 4);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].N == 2);
    CHECK(rows[0].agrees);
    CHECK(rows[0].prefix == ints({1, -2}));
    CHECK(rows[0].unreduced_window_agrees);
    CHECK(rows[1].N == 3);
    CHECK(rows[1].agrees);
    CHECK(rows[1].prefix == ints({1, -2, -1}));
    CHECK(rows[1].unreduced_window_agrees);
}

TEST_CASE("theta monomial specs validate their inputs") {
    CHECK_THROWS_AS(MonomialSpec(2, 1), PreconditionError);
    CHECK_THROWS_AS(MonomialSpec(1, 1, 3), PreconditionError);
    CHECK_THROWS_AS(MonomialSpec(1, -1), PreconditionError);
    CHECK(MonomialSpec(-1, 3, 2).str() == "-q^(3/2)");
    CHECK(MonomialSpec(1, 2).str() == "q^2");
}

TEST_CASE("pentagonal number theta series") {
    auto t = theta(MonomialSpec(-1, 2), MonomialSpec(-1, 1), 8);
    CHECK(t.coeffs == std::vector<long long>{1, -1, -1, 0, 0, 1, 0, 1});
    CHECK(t.str() == "1 - q - q^2 + q^5 + q^7");
    CHECK(theta(MonomialSpec(-1, 2), MonomialSpec(-1, 1), 1).coeffs ==
          std::vector<long long>{1});
}

TEST_CASE("classical Jacobi square: f(-q,-q) gives alternating square exponents") {
    auto t = theta(MonomialSpec(-1, 1), MonomialSpec(-1, 1), 10);
    CHECK(t.coeffs == std::vector<long long>{1, -2, 0, 0, 2, 0, 0, 0, 0, -2});
}

TEST_CASE("half-integer specs that stay integral") {
    // f(q^{1/2}, q^{1/2}): exponent n^2/2 + ... stays integral only for some n;
    // the constructor accepts the monomials, expansion rejects fractional exponents.
    CHECK_THROWS_AS(theta(MonomialSpec(1, 1, 2), MonomialSpec(1, 3, 2), 6),
                    PreconditionError);
}

TEST_CASE("theta truncation requires growth") {
    CHECK_THROWS_AS(theta(MonomialSpec(1, 0), MonomialSpec(1, 0), 4), PreconditionError);
    CHECK_THROWS_AS(theta(MonomialSpec(1, 1), MonomialSpec(1, 1), 0), PreconditionError);
}

TEST_CASE("series product matches the published order-8 square") {
    auto pent = theta(MonomialSpec(-1, 2), MonomialSpec(-1, 1), 8);
    auto sq = series_product(pent, pent, 8);
    CHECK(sq.coeffs == std::vector<long long>{1, -2, -1, 2, 1, 2, -2, 0});
    CHECK(sq.str() == "1 - 2q - q^2 + 2q^3 + q^4 + 2q^5 - 2q^6");
    CHECK_THROWS_AS(series_product(pent, pent, 9), PreconditionError);
}
