#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/cjp.hpp"
#include "skein/corpus.hpp"
#include "skein/tail.hpp"

using namespace skein;

namespace {

std::vector<Rational> j_coeffs(const std::string& name, int N) {
    return normalized_q_coeffs(reduced_cjp(corpus().at(name), N).reduced_qq);
}

std::vector<Rational> ints(std::initializer_list<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.push_back(Rational(x));
    return out;
}

}  // namespace

TEST_CASE("N = 2 golden values across the corpus") {
    CHECK(j_coeffs("rtrefoil", 2) == ints({1, 0, 1, -1}));
    // Mirror: exponents negate, so the ascending-q word reverses (up to the
    // global sign fixed by normalization).
    CHECK(j_coeffs("ltrefoil", 2) == ints({1, -1, 0, -1}));
    CHECK(j_coeffs("figure8", 2) == ints({1, -1, 1, -1, 1}));
    CHECK(j_coeffs("5_1", 2) == ints({1, 0, 1, -1, 1, -1}));
    CHECK(j_coeffs("6_2", 2) == ints({1, -2, 2, -2, 2, -1, 1}));
    CHECK(j_coeffs("10_154m", 2) == ints({1, -2, 2, -3, 2, -2, 2, 0, 0, 1}));
    CHECK(j_coeffs("moved_10_154m", 2) == ints({1, -2, 3, -6, 7, -8, 8, -6, 5, -2, 1}));
}

TEST_CASE("unknot and trivial colors") {
    for (int N = 1; N <= 7; ++N) {
        auto r = reduced_cjp(corpus().at("unknot"), N);
        CHECK(r.reduced_qq == std::map<int, Rational>{{0, Rational(1)}});
    }
    auto r1 = reduced_cjp(corpus().at("10_154m"), 1);
    CHECK(r1.reduced_qq == std::map<int, Rational>{{0, Rational(1)}});
    CHECK_THROWS_AS(reduced_cjp(corpus().at("unknot"), 0), PreconditionError);
}

TEST_CASE("framing correction: the kinked unknot is trivial after normalization") {
    for (int N = 2; N <= 4; ++N) {
        auto r = reduced_cjp(corpus().at("kinked_unknot"), N);
        CHECK(r.reduced_qq == std::map<int, Rational>{{0, Rational(1)}});
    }
}

TEST_CASE("N = 2 agrees with the brute-force bracket oracle") {
    for (const char* name : {"rtrefoil", "figure8", "6_2", "10_154m"}) {
        auto d = corpus().at(name);
        CHECK(unreduced_cjp(d, 1) == bracket_brute(d));
    }
    auto g12 = corpus().at("granny").connected_sum(corpus().at("granny"), 1, 1);
    auto g24 = g12.connected_sum(g12, 1, 1);
    CHECK_THROWS_AS(bracket_brute(g24), ResourceError);  // 24 crossings exceed the limit
}

TEST_CASE("mirror symmetry J_mirror(q) = J(1/q) at N = 2, 3") {
    for (const char* name : {"rtrefoil", "figure8", "6_2"}) {
        auto d = corpus().at(name);
        for (int N = 2; N <= 3; ++N) {
            auto r = reduced_cjp(d, N).reduced_qq;
            auto m = reduced_cjp(d.mirror(), N).reduced_qq;
            std::map<int, Rational> flipped;
            for (const auto& [e, c] : r) flipped[-e] = c;
            CHECK(m == flipped);
        }
    }
}

TEST_CASE("connected-sum multiplicativity at N = 2, 3") {
    auto t = corpus().at("ltrefoil");
    auto g = corpus().at("granny");
    for (int N = 2; N <= 3; ++N) {
        auto jt = reduced_cjp(t, N).reduced_qq;
        auto jg = reduced_cjp(g, N).reduced_qq;
        std::map<int, Rational> prod;
        for (const auto& [e1, c1] : jt)
            for (const auto& [e2, c2] : jt) {
                prod[e1 + e2] += c1 * c2;
            }
        for (auto it = prod.begin(); it != prod.end();)
            it = it->second == 0 ? prod.erase(it) : std::next(it);
        CHECK(jg == prod);
    }
}

TEST_CASE("budget rejection for wide cables") {
    CHECK_THROWS_AS(reduced_cjp(corpus().at("10_154m"), 6), ResourceError);
}

TEST_CASE("all-B skein diagram requires B-adequacy") {
    // The positive kink X[1,1,2,2] is B-adequate (only its A side degenerates);
    // its mirror has the loop on the B side.
    CHECK_THROWS_AS(s_b_diagram(corpus().at("kinked_unknot").mirror(), 1),
                    PreconditionError);
    CHECK(bar_diagram(s_b_diagram(corpus().at("kinked_unknot"), 1)) == 2);
}

TEST_CASE("all-B skein diagram at n = 1 recovers the B-state circle count") {
    auto d = corpus().at("rtrefoil");
    auto s = s_b_diagram(d, 1);
    CHECK(bar_diagram(s) == all_state(d, Smoothing::B).num_circles());
    CHECK(is_adequate_skein(s));
}

TEST_CASE("degree-window agreement between cable and all-B box diagram") {
    CHECK(verify_mainlemma(corpus().at("rtrefoil"), 1));
    CHECK(verify_mainlemma(corpus().at("6_2"), 1));
}
