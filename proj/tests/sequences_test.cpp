#include "pellfrieze/sequences.hpp"

#include "pellfrieze/analysis.hpp"
#include "pellfrieze/frieze.hpp"

#include <doctest.h>

using namespace pellfrieze;
namespace seq = pellfrieze::sequences;

TEST_CASE("stack weight values") {
    CHECK(seq::s(0) == QuadInt(0));
    CHECK(seq::s(1) == QuadInt(1));
    CHECK(seq::s(2) == QuadInt(0, 2));
    CHECK(seq::s(3) == QuadInt(7));
    CHECK(seq::s(4) == QuadInt(0, 12));
    CHECK(seq::d(0) == QuadInt(1));
    CHECK(seq::d(1) == QuadInt::sqrt2());
    CHECK(seq::d(2) == QuadInt(3));
    CHECK(seq::d(3) == QuadInt(0, 5));
}

TEST_CASE("ell delegates to unit powers") {
    CHECK(seq::ell(0) == QuadInt(1));
    CHECK(seq::ell(1) == QuadInt(1, 1));
    CHECK(seq::ell(3) == QuadInt(7, 5));
    CHECK(seq::ell(-2) == unit_power(-2));
}

TEST_CASE("convergents") {
    CHECK(seq::convergent(0).a == 1);
    CHECK(seq::convergent(0).b == 0);
    CHECK(seq::convergent(1).a == 1);
    CHECK(seq::convergent(1).b == 1);
    CHECK(seq::convergent(2).a == 3);
    CHECK(seq::convergent(2).b == 2);
    CHECK(seq::convergent(5).a == 41);
    CHECK(seq::convergent(5).b == 29);
    for (int n = 1; n <= 30; ++n) {
        CHECK(boost::multiprecision::gcd(seq::convergent(n).a, seq::convergent(n).b) == 1);
    }
}

TEST_CASE("pell numbers") {
    CHECK(seq::pell(0) == 0);
    CHECK(seq::pell(1) == 1);
    CHECK(seq::pell(2) == 2);
    CHECK(seq::pell(3) == 5);
    CHECK(seq::pell(5) == 29);
}

TEST_CASE("s + d = ell") {
    for (int n = 0; n <= 30; ++n) {
        CHECK(seq::s(n) + seq::d(n) == seq::ell(n));
    }
}

TEST_CASE("parity identity with convergents") {
    for (int n = 0; n <= 30; ++n) {
        const auto c = seq::convergent(n);
        if (n % 2 == 0) {
            CHECK(seq::s(n) == QuadInt(0, c.b));
            CHECK(seq::d(n) == QuadInt(c.a));
        } else {
            CHECK(seq::s(n) == QuadInt(c.a));
            CHECK(seq::d(n) == QuadInt(0, c.b));
        }
    }
}

TEST_CASE("convergent cross-identities") {
    for (int n = 1; n <= 30; ++n) {
        CHECK(seq::convergent(n).a == seq::convergent(n).b + seq::convergent(n - 1).b);
    }
    for (int k = 0; k <= 30; ++k) {
        CHECK(seq::pell(k) == seq::convergent(k).b);
    }
}

TEST_CASE("stack weights match frieze weights through an explicit stack") {
    for (int n = 0; n <= 8; ++n) {
        const int m = n + 2;
        const Dissection stack = analysis::make_stack(m);
        const FriezeTable t = frieze_from_dissection(stack);
        // sigma_n = (0, n) runs along one side, delta_n = (0, 2m+1-n) across.
        CHECK(t.at(0, n) == seq::s(n));
        if (n >= 1) CHECK(t.at(0, 2 * m + 1 - n) == seq::d(n));
    }
}
