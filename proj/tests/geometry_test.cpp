#include "pellfrieze/geometry.hpp"

#include "pellfrieze/json_io.hpp"

#include <doctest.h>

#include <set>

using namespace pellfrieze;

namespace {

// Independent Catalan oracle: C_0 = 1, C_k = sum C_i C_{k-1-i}.
long catalan(int k) {
    std::vector<long> c{1};
    for (int m = 1; m <= k; ++m) {
        long v = 0;
        for (int i = 0; i < m; ++i) v += c[i] * c[m - 1 - i];
        c.push_back(v);
    }
    return c[k];
}

}  // namespace

TEST_CASE("crossing predicate") {
    CHECK(crosses(Arc(0, 2), Arc(1, 4), 5));
    CHECK_FALSE(crosses(Arc(0, 2), Arc(2, 4), 5));
    for (int i = 0; i < 5; ++i) {
        for (int j = i + 1; j < 5; ++j) {
            CHECK_FALSE(crosses(Arc(0, 1), Arc(i, j), 5));  // boundary arcs never cross
        }
    }
}

TEST_CASE("crossing is symmetric") {
    const int n = 9;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (int c = 0; c < n; ++c) {
                for (int d = c + 1; d < n; ++d) {
                    if (Arc(a, b) == Arc(c, d)) continue;
                    CHECK(crosses(Arc(a, b), Arc(c, d), n) == crosses(Arc(c, d), Arc(a, b), n));
                }
            }
        }
    }
}

TEST_CASE("faces of a dissected pentagon") {
    const Dissection d(5, {Arc(0, 3)});
    REQUIRE(d.faces().size() == 2);
    CHECK(d.faces()[0] == Face{0, 1, 2, 3});
    CHECK(d.faces()[1] == Face{0, 3, 4});
}

TEST_CASE("faces of the empty pentagon") {
    const Dissection d(5, {});
    REQUIRE(d.faces().size() == 1);
    CHECK(d.faces()[0] == Face{0, 1, 2, 3, 4});
}

TEST_CASE("faces of the glued-towers 10-gon") {
    const Dissection d(10, {Arc(1, 9), Arc(2, 8), Arc(4, 8), Arc(5, 7)});
    REQUIRE(d.faces().size() == 5);
    CHECK(d.faces()[0] == Face{0, 1, 9});
    CHECK(d.faces()[1] == Face{1, 2, 8, 9});
    CHECK(d.faces()[2] == Face{2, 3, 4, 8});
    CHECK(d.faces()[3] == Face{4, 5, 7, 8});
    CHECK(d.faces()[4] == Face{5, 6, 7});
}

TEST_CASE("dissection validation") {
    CHECK_THROWS_AS(Dissection(5, {Arc(0, 2), Arc(1, 3)}), InvalidDissection);
    CHECK_THROWS_AS(Dissection(5, {Arc(0, 2), Arc(0, 2)}), InvalidDissection);
    CHECK_THROWS_AS(Dissection(5, {Arc(0, 1)}), InvalidDissection);
    CHECK_THROWS_AS(Dissection(5, {Arc(0, 4)}), InvalidDissection);  // boundary wrap
    CHECK_THROWS_AS(Dissection(5, {Arc(0, 7)}), InvalidDissection);
    CHECK_THROWS_AS(Dissection(2, {}), InvalidDissection);
}

TEST_CASE("dissection enumeration counts") {
    CHECK(all_dissections(3).size() == 1);
    CHECK(all_dissections(4).size() == 3);
    CHECK(all_dissections(5).size() == 10);
}

TEST_CASE("triangulation enumeration counts") {
    CHECK(all_triangulations(3).size() == 1);
    CHECK(all_triangulations(4).size() == 2);
    CHECK(all_triangulations(5).size() == 5);
    CHECK(all_triangulations(8).size() == static_cast<size_t>(catalan(6)));
    CHECK(all_triangulations(8).size() == 132);
}

TEST_CASE("triangulation stream agrees with filtered dissection stream") {
    for (int n = 3; n <= 10; ++n) {
        std::set<std::vector<Arc>> via_dissections;
        enumerate_dissections(n, {3}, [&](const Dissection& d) {
            via_dissections.insert(d.arcs());
            return true;
        });
        std::set<std::vector<Arc>> via_triangulations;
        enumerate_triangulations(n, [&](const Triangulation& t) {
            CHECK(is_triangulation(t));
            via_triangulations.insert(t.arcs());
            return true;
        });
        CHECK(via_dissections == via_triangulations);
        CHECK(via_triangulations.size() == static_cast<size_t>(catalan(n - 2)));
    }
}

TEST_CASE("enumeration emits valid dissections in lexicographic order") {
    std::vector<std::vector<Arc>> order;
    enumerate_dissections(7, {3, 4}, [&](const Dissection& d) {
        int slack = 0;
        for (const Face& f : d.faces()) slack += static_cast<int>(f.size()) - 2;
        CHECK(slack == d.n() - 2);
        CHECK(d.arcs().size() == d.faces().size() - 1);
        order.push_back(d.arcs());
        return true;
    });
    CHECK(std::is_sorted(order.begin(), order.end()));
    CHECK(std::set(order.begin(), order.end()).size() == order.size());
}

TEST_CASE("every triangulation has at least two ears") {
    for (int n = 4; n <= 9; ++n) {
        enumerate_triangulations(n, [&](const Triangulation& t) {
            int ears = 0;
            for (const Face& f : t.faces()) {
                int boundary_sides = 0;
                for (size_t i = 0; i < f.size(); ++i) {
                    if (is_boundary(Arc(f[i], f[(i + 1) % f.size()]), n)) ++boundary_sides;
                }
                if (boundary_sides == 2) ++ears;
            }
            CHECK(ears >= 2);
            return true;
        });
    }
}

TEST_CASE("vertex face degrees and type") {
    const Dissection pent(5, {Arc(0, 3)});
    CHECK(vertex_face_degree(pent) == std::vector<int>{2, 1, 1, 2, 1});
    CHECK(type_of(pent) == 2);

    const Dissection empty(6, {});
    CHECK(vertex_face_degree(empty) == std::vector<int>(6, 1));
    CHECK(type_of(empty) == 1);

    const Dissection ten(10, {Arc(1, 9), Arc(2, 8), Arc(4, 8), Arc(5, 7)});
    CHECK(vertex_face_degree(ten)[8] == 3);
    CHECK(type_of(ten) == 3);
}

TEST_CASE("separatedness") {
    CHECK(is_separated(Dissection(5, {Arc(0, 3)})));
    CHECK_FALSE(is_separated(Dissection(5, {Arc(0, 2), Arc(0, 3)})));  // pure triangulation
    CHECK_FALSE(is_separated(Dissection(6, {Arc(1, 4)})));             // pure 4-angulation

    // Triangulated block {0,1,2,3} joined by (0,3) to a 4-angulated block;
    // the bridging quad's sides next to (0,3) are boundary edges.
    const Dissection separated(12, {Arc(0, 2), Arc(0, 3), Arc(4, 11), Arc(4, 7), Arc(4, 9)});
    CHECK(is_separated(separated));

    // Two arcs border both a triangle and a quadrilateral.
    const Dissection two_bridges(
        12, {Arc(0, 2), Arc(0, 3), Arc(3, 5), Arc(5, 11), Arc(5, 7), Arc(5, 8), Arc(8, 11)});
    CHECK_FALSE(is_separated(two_bridges));

    CHECK_THROWS_AS(is_separated(Dissection(6, {})), NotTriQuad);
}

TEST_CASE("dissection json round-trip") {
    const Dissection d(10, {Arc(1, 9), Arc(2, 8), Arc(4, 8), Arc(5, 7)});
    const auto j = dissection_to_json(d);
    CHECK(j["n"] == 10);
    CHECK(dissection_from_json(j) == d);

    CHECK_THROWS_AS(dissection_from_json(nlohmann::json{{"n", 5}}), ParseError);
    CHECK_THROWS_AS(dissection_from_json(nlohmann::json::parse(R"({"n":5,"arcs":[[0,0]]})")),
                    InvalidDissection);
    CHECK_THROWS_AS(dissection_from_json(nlohmann::json::parse(R"({"n":"5","arcs":[]})")),
                    ParseError);
}
