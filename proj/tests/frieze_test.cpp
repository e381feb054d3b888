#include "pellfrieze/frieze.hpp"

#include "pellfrieze/geometry.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

using namespace pellfrieze;

namespace {

const QuadInt kRoot2 = QuadInt::sqrt2();
const QuadInt kOnePlus = QuadInt(1, 1);

// The octagon fixture with no interior entry 1: rows alternate
// sqrt(2) / 1+sqrt(2) at distance 2 and 2 / 2+sqrt(2) at distance 4.
FriezeTable octagon_fixture() {
    FriezeTable t(8);
    for (int i = 0; i < 8; ++i) {
        t.set(i, (i + 2) % 8, i % 2 == 0 ? kRoot2 : kOnePlus);
        t.set(i, (i + 3) % 8, kOnePlus);
    }
    for (int i = 0; i < 4; ++i) {
        t.set(i, i + 4, i % 2 == 0 ? QuadInt(2) : QuadInt(2, 1));
    }
    return t;
}

// The hexagon fixture containing -3+3*sqrt(2): >= 1 everywhere but not
// coefficient-nonnegative.
FriezeTable hexagon_fixture() {
    const QuadInt r2[3] = {kOnePlus, kRoot2, QuadInt(3, -1)};
    const QuadInt r3[3] = {kOnePlus, QuadInt(-3, 3), QuadInt(0, 2)};
    FriezeTable t(6);
    for (int i = 0; i < 6; ++i) t.set(i, (i + 2) % 6, r2[i % 3]);
    for (int i = 0; i < 3; ++i) t.set(i, i + 3, r3[i]);
    return t;
}

Dissection random_tri_quad(int n, std::mt19937& rng) {
    // Random triangulation by random apex choices, then random merges of
    // triangle pairs into quadrilaterals.
    std::vector<Arc> arcs;
    auto rec = [&](auto&& self, int lo, int hi) -> void {
        if (hi - lo < 2) return;
        std::uniform_int_distribution<int> pick(lo + 1, hi - 1);
        const int k = pick(rng);
        if (k - lo > 1) arcs.emplace_back(lo, k);
        if (hi - k > 1) arcs.emplace_back(k, hi);
        self(self, lo, k);
        self(self, k, hi);
    };
    rec(rec, 0, n - 1);

    std::shuffle(arcs.begin(), arcs.end(), rng);
    std::vector<Arc> kept = arcs;
    for (const Arc& candidate : arcs) {
        std::vector<Arc> without;
        for (const Arc& a : kept) {
            if (a != candidate) without.push_back(a);
        }
        const Dissection trial(n, without);
        if (is_tri_quad(trial) && std::bernoulli_distribution(0.5)(rng)) {
            kept = without;
        }
    }
    return Dissection(n, kept);
}

}  // namespace

TEST_CASE("euclidean friezes") {
    const FriezeTable t3 = euclidean_frieze(3);
    for (int i = 0; i < 3; ++i) CHECK(t3.at(i, (i + 1) % 3) == QuadInt(1));

    const FriezeTable t4 = euclidean_frieze(4);
    CHECK(t4.at(0, 2) == kRoot2);
    CHECK(t4.at(1, 3) == kRoot2);
    CHECK(t4.at(0, 2) * t4.at(1, 3) == QuadInt(2));
    CHECK_FALSE(verify_frieze(t4).has_value());

    CHECK_THROWS_AS(euclidean_frieze(5), UnsupportedP);
}

TEST_CASE("pentagon with one arc") {
    const FriezeTable t = frieze_from_dissection(Dissection(5, {Arc(0, 3)}));
    CHECK(t.at(0, 2) == kRoot2);
    CHECK(t.at(1, 3) == kRoot2);
    CHECK(t.at(0, 3) == QuadInt(1));
    CHECK(t.at(2, 4) == kOnePlus);
    CHECK(t.at(1, 4) == kOnePlus);
    CHECK_FALSE(verify_frieze(t).has_value());
    const auto classes = classify(t);
    CHECK(classes.ge1);
    CHECK(classes.nonneg_coeffs);
}

TEST_CASE("triangulated pentagon") {
    const FriezeTable t = frieze_from_dissection(Dissection(5, {Arc(0, 2), Arc(0, 3)}));
    CHECK(t.at(0, 2) == QuadInt(1));
    CHECK(t.at(0, 3) == QuadInt(1));
    CHECK(t.at(1, 3) == QuadInt(2));
    CHECK(t.at(2, 4) == QuadInt(2));
    CHECK(t.at(1, 4) == QuadInt(3));
    CHECK_FALSE(verify_frieze(t).has_value());
}

TEST_CASE("10-gon example weight") {
    const FriezeTable t =
        frieze_from_dissection(Dissection(10, {Arc(1, 9), Arc(2, 8), Arc(4, 8), Arc(5, 7)}));
    CHECK(t.at(2, 4) == kRoot2);
    CHECK_FALSE(verify_frieze(t).has_value());
}

TEST_CASE("frieze from a non-tri-quad dissection is rejected") {
    CHECK_THROWS_AS(frieze_from_dissection(Dissection(6, {})), NotTriQuad);
}

TEST_CASE("printed quadrilateral pair fails the Ptolemy relation") {
    FriezeTable t(4);
    t.set(0, 2, QuadInt(-1, 1));
    t.set(1, 3, QuadInt(2, 1));
    const auto violation = verify_frieze(t);
    REQUIRE(violation.has_value());
    CHECK(violation->kind == FriezeViolation::Kind::Ptolemy);
    CHECK(violation->i == 0);
    CHECK(violation->j == 2);
    CHECK(violation->k == 1);
    CHECK(violation->l == 3);
}

TEST_CASE("corrected quadrilateral is a frieze but not ge1") {
    FriezeTable t(4);
    t.set(0, 2, QuadInt(-1, 1));
    t.set(1, 3, QuadInt(2, 2));
    CHECK_FALSE(verify_frieze(t).has_value());
    const auto classes = classify(t);
    CHECK_FALSE(classes.ge1);
    CHECK_FALSE(classes.nonneg_coeffs);
}

TEST_CASE("octagon fixture") {
    const FriezeTable t = octagon_fixture();
    CHECK_FALSE(verify_frieze(t).has_value());
    for (int i = 0; i < 8; ++i) {
        for (int j = i + 2; j < 8; ++j) {
            if (is_boundary(Arc(i, j), 8)) continue;
            CHECK(t.at(i, j) != QuadInt(1));  // no interior entry 1
        }
    }
    const auto classes = classify(t);
    CHECK(classes.ge1);
    CHECK(classes.nonneg_coeffs);
}

TEST_CASE("hexagon fixture") {
    const FriezeTable t = hexagon_fixture();
    CHECK_FALSE(verify_frieze(t).has_value());
    CHECK(t.at(1, 4) == QuadInt(-3, 3));
    const auto classes = classify(t);
    CHECK(classes.ge1);
    CHECK_FALSE(classes.nonneg_coeffs);
}

TEST_CASE("frieze pattern round-trips") {
    for (const FriezeTable& t :
         {octagon_fixture(), hexagon_fixture(),
          frieze_from_dissection(Dissection(5, {Arc(0, 3)})), euclidean_frieze(4)}) {
        const auto rows = to_frieze_pattern(t);
        REQUIRE(static_cast<int>(rows.size()) == t.n() + 1);
        const FriezeTable back = from_frieze_pattern(rows);
        for (int i = 0; i < t.n(); ++i) {
            for (int j = 0; j < t.n(); ++j) CHECK(back.at(i, j) == t.at(i, j));
        }
    }
}

TEST_CASE("pattern of the triangulated pentagon") {
    const FriezeTable t = frieze_from_dissection(Dissection(5, {Arc(0, 2), Arc(0, 3)}));
    const auto rows = to_frieze_pattern(t);
    std::multiset<std::string> row2;
    for (const QuadInt& v : rows[2]) row2.insert(v.str());
    CHECK(row2 == std::multiset<std::string>{"1", "1", "2", "2", "3"});
    CHECK(rows[1] == std::vector<QuadInt>(5, QuadInt(1)));
    CHECK(rows[0] == std::vector<QuadInt>(5, QuadInt(0)));
}

TEST_CASE("trivial triangle pattern") {
    const auto rows = to_frieze_pattern(frieze_from_dissection(Dissection(3, {})));
    REQUIRE(rows.size() == 4);
    const FriezeTable back = from_frieze_pattern(rows);
    CHECK(back.at(0, 1) == QuadInt(1));
}

TEST_CASE("diamond violations are located") {
    auto rows = to_frieze_pattern(hexagon_fixture());
    rows[3][1] = QuadInt(5);
    CHECK_THROWS_AS(from_frieze_pattern(rows), DiamondViolation);
    try {
        from_frieze_pattern(rows);
    } catch (const DiamondViolation& e) {
        CHECK(e.row >= 2);
    }

    auto bad_boundary = to_frieze_pattern(euclidean_frieze(4));
    bad_boundary[1][0] = QuadInt(2);
    CHECK_THROWS_AS(from_frieze_pattern(bad_boundary), DiamondViolation);
}

TEST_CASE("ptolemy closure and face restriction, exhaustively") {
    for (int n = 3; n <= 8; ++n) {
        enumerate_dissections(n, {3, 4}, [&](const Dissection& d) {
            const FriezeTable t = frieze_from_dissection(d);
            CHECK_FALSE(verify_frieze(t).has_value());

            // Restricted to a face, the frieze is the Euclidean frieze of
            // that face size.
            for (const Face& f : d.faces()) {
                const FriezeTable euc = euclidean_frieze(static_cast<int>(f.size()));
                for (size_t x = 0; x < f.size(); ++x) {
                    for (size_t y = x + 1; y < f.size(); ++y) {
                        CHECK(t.at(f[x], f[y]) ==
                              euc.at(static_cast<int>(x), static_cast<int>(y)));
                    }
                }
            }

            // Weight 1 appears exactly on dissection arcs and boundary arcs.
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    const bool weight_one = t.at(i, j) == QuadInt(1);
                    const bool trivial = is_boundary(Arc(i, j), n) || d.has_arc(Arc(i, j));
                    CHECK(weight_one == trivial);
                }
            }

            CHECK(classify(t).nonneg_coeffs);
            return true;
        });
    }
}

TEST_CASE("weight one marks exactly the dissection and boundary arcs, n <= 10") {
    for (int n = 9; n <= 10; ++n) {
        enumerate_dissections(n, {3, 4}, [&](const Dissection& d) {
            const FriezeTable t = frieze_from_dissection(d);
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    const bool trivial = is_boundary(Arc(i, j), n) || d.has_arc(Arc(i, j));
                    CHECK((t.at(i, j) == QuadInt(1)) == trivial);
                }
            }
            return true;
        });
    }
}

TEST_CASE("ptolemy closure on sampled 14-gon dissections") {
    std::mt19937 rng(1414);
    for (int trial = 0; trial < 60; ++trial) {
        const Dissection d = random_tri_quad(14, rng);
        REQUIRE(is_tri_quad(d));
        CHECK_FALSE(verify_frieze(frieze_from_dissection(d)).has_value());
    }
}
