#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skein/tl.hpp"

using namespace skein;

namespace {
const RationalFn kLoop{delta(1)};
RationalFn rf(const LaurentPoly& p) { return RationalFn(p); }
}  // namespace

TEST_CASE("matching primitives") {
    auto id3 = tl_identity_matching(3);
    CHECK(id3[0] == 3);
    CHECK(is_noncrossing(id3));
    auto e0 = tl_e_matching(3, 0);
    CHECK(e0[0] == 1);
    CHECK(e0[3] == 4);
    CHECK(is_noncrossing(e0));
    CHECK(matching_parens(id3).size() == 6);
    // Bottom-left to top-right and bottom-right to top-left cross.
    Matching cross{3, 2, 1, 0};
    CHECK_FALSE(is_noncrossing(cross));
    // Bottom i to top n + i is the identity: planar.
    CHECK(is_noncrossing(Matching{2, 3, 0, 1}));
}

TEST_CASE("Temperley-Lieb relations") {
    const int n = 4;
    for (int i = 0; i <= n - 2; ++i) {
        auto ei = TLElement::hook(n, i);
        // e_i e_i = delta e_i
        CHECK(tl_multiply(ei, ei) == ei.scaled(kLoop));
        if (i + 1 <= n - 2) {
            auto ej = TLElement::hook(n, i + 1);
            // e_i e_{i+1} e_i = e_i
            CHECK(tl_multiply(tl_multiply(ei, ej), ei) == ei);
            CHECK(tl_multiply(tl_multiply(ej, ei), ej) == ej);
        }
        if (i + 2 <= n - 2) {
            auto ek = TLElement::hook(n, i + 2);  // distant hooks commute
            CHECK(tl_multiply(ei, ek) == tl_multiply(ek, ei));
        }
    }
}

TEST_CASE("trace of identity is a power of the loop value") {
    for (int n = 1; n <= 4; ++n) {
        RationalFn expect(LaurentPoly(Rational(1)));
        for (int k = 0; k < n; ++k) expect *= kLoop;
        CHECK(tl_trace(TLElement::identity(n)) == expect);
    }
}

TEST_CASE("tensor respects strand counts") {
    auto x = tl_tensor(TLElement::hook(2, 0), TLElement::identity(1));
    CHECK(x.n == 3);
    CHECK(x.combo.count(tl_e_matching(3, 0)) == 1);
}

TEST_CASE("catalan numbers") {
    CHECK(catalan(0) == 1);
    CHECK(catalan(3) == 5);
    CHECK(catalan(9) == 4862);
    CHECK(catalan(12) == 208012);
    CHECK(catalan(15) == 9694845);
}

TEST_CASE("Jones-Wenzl idempotency and hook annihilation up to n = 6") {
    for (int n = 2; n <= 6; ++n) {
        const auto& f = jones_wenzl(n);
        CHECK(tl_multiply(f, f) == f);
        for (int i = 0; i <= n - 2; ++i) {
            CHECK(tl_multiply(f, TLElement::hook(n, i)).is_zero());
            CHECK(tl_multiply(TLElement::hook(n, i), f).is_zero());
        }
        // Identity coefficient is 1.
        REQUIRE(f.combo.count(tl_identity_matching(n)) == 1);
        CHECK(f.combo.at(tl_identity_matching(n)) == rf(LaurentPoly(Rational(1))));
    }
}

TEST_CASE("partial trace ratio: closing a strand of f(n) gives (D_n/D_{n-1}) f(n-1)") {
    for (int n = 2; n <= 6; ++n) {
        auto closed = tl_trace_right(jones_wenzl(n));
        auto expect = jones_wenzl(n - 1).scaled(RationalFn(delta(n), delta(n - 1)));
        CHECK(closed == expect);
    }
}

TEST_CASE("full trace of f(n) is Delta_n") {
    for (int n = 1; n <= 5; ++n) CHECK(tl_trace(jones_wenzl(n)) == rf(delta(n)));
}

TEST_CASE("strand cap is enforced") {
    CHECK_THROWS_AS(jones_wenzl(9), ResourceError);
    CHECK_THROWS_AS(jones_wenzl(0), PreconditionError);
    CHECK_THROWS_AS(verify_junkterms(5, 4), ResourceError);
}

TEST_CASE("hook cascade identity for a + b <= 6") {
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; a + b <= 6; ++b) {
            CAPTURE(a);
            CAPTURE(b);
            CHECK(verify_junkterms(a, b));
        }
}
