#pragma once

#include "pellfrieze/frieze.hpp"
#include "pellfrieze/geometry.hpp"
#include "pellfrieze/quadint.hpp"

#include <optional>
#include <set>
#include <vector>

namespace pellfrieze::analysis {

/// All non-boundary arcs whose weight is a positive unit.
std::set<Arc> unit_arcs(const FriezeTable& t);

/// Interval DP over cyclic vertex ranges, using only unit or boundary
/// chords; O(n^3). Returns a witness triangulation if one exists.
std::optional<Triangulation> find_unitary_triangulation(const FriezeTable& t);

/// All triangulations contained in unit_arcs(t), in deterministic order.
std::vector<Triangulation> enumerate_unitary_triangulations(const FriezeTable& t);

/// Ear candidates of a sub-polygon (cyclic vertex list): apex vertex, the
/// chord closing it, and whether that chord has unit weight. Empty for a
/// triangle (terminal case).
struct EarCandidate {
    int apex;
    Arc chord;
    bool unit;
};
std::vector<EarCandidate> basic_triangles(const std::vector<int>& polygon, const FriezeTable& t);

/// Ear-peeling search: repeatedly cut off a basic triangle whose chord has
/// unit weight, backtracking over every ear choice (with memoized failure
/// states). Succeeds iff some ear order yields a unitary triangulation.
std::optional<Triangulation> triangulation_algorithm(const Dissection& d, const FriezeTable& t);

/// One triangle capping a straight stack of quadrilaterals.
struct Tower {
    int roof;                      // vertex on the triangle only (any vertex for a 0-tower)
    std::vector<int> face_indices; // indices into Dissection::faces(): [triangle, quad_1, ...]
    std::vector<int> vertices;     // vertex cycle of the spanned (2k+3)-gon, ascending

    friend bool operator==(const Tower&, const Tower&) = default;
};

struct TowerDecomposition {
    std::vector<Tower> towers;   // sorted by face_indices
    std::vector<Arc> glue_arcs;  // dissection arcs joining distinct towers

    friend bool operator==(const TowerDecomposition&, const TowerDecomposition&) = default;
};

/// All partitions of the faces into towers, deduplicated and sorted; two
/// decompositions are the same iff they partition the faces the same way.
std::vector<TowerDecomposition> enumerate_tower_decompositions(const Dissection& d);

/// The lexicographically least decomposition, if any. Throws NotTriQuad.
std::optional<TowerDecomposition> tower_decomposition(const Dissection& d);

/// Fan every tower from its roof and add the glue arcs; under the frieze of
/// the dissection every arc of the result is a unit.
Triangulation unitary_from_towers(const Dissection& d, const TowerDecomposition& dec);

/// Weight ell_k of a tower arc through k quadrilaterals.
QuadInt tower_arc_weight(int k);

/// Weight ell_{i+j+1} of the Pell arc between an i-tower and a j-tower.
QuadInt pell_arc_weight(int i, int j);

// Constructed figure dissections (canonical labelings).
Dissection make_stack(int m);                // 4-angulated strip of m quads, (2m+2)-gon
Dissection make_tower(int k);                // k-tower on a (2k+3)-gon, roof 0
Dissection make_zigzag(int m);               // zig-zag triangulated 2m-gon
/// i-tower, middle triangle and j-tower arranged so that (0, i+j+3) is the
/// Pell arc between the two roofs.
Dissection make_pell_figure(int i, int j);
/// i-quad stack glued onto the zig-zag triangulated 2m-gon; the returned arc
/// runs from the roof to the 2m-gon's vertex m and has weight ell_{i+m-1}.
std::pair<Dissection, Arc> build_pell_witness(int i, int m);

/// Structural tower arcs: (roof, w) for every roof of a triangle face and
/// every vertex w of the straight quad chain growing away from that roof.
std::set<Arc> tower_arcs(const Dissection& d);

/// Structural Pell arcs: roof-to-roof arcs across a middle triangle whose
/// two dissection-arc sides carry an i-tower (i >= 1) and a j-tower (j >= 0).
std::set<Arc> pell_arcs(const Dissection& d);

struct Lemma56Violation {
    int x, y, z;  // basic triangle with apex y; (x,z) is the offending chord

    friend auto operator<=>(const Lemma56Violation&, const Lemma56Violation&) = default;
};

/// Walks every ear-peeling state reachable through dissection and tower
/// arcs alone; the sides of each basic triangle met this way are boundary,
/// dissection or tower arcs, and its chord must be in the dissection, a
/// tower arc, of non-unit weight, or a Pell arc. Pell arcs are dead ends,
/// so the last case is verified behaviorally: a violation is a reachable
/// unit chord outside the dissection/tower families through which an
/// all-unit ear peeling still completes. Expected empty.
std::vector<Lemma56Violation> lemma56_check(const Dissection& d, const FriezeTable& t);

struct ScanFilters {
    std::optional<int> type_max;
    bool separated_only = false;
    bool four_angulations_only = false;
};

struct ScanReport {
    int n = 0;
    ScanFilters filters;
    long from_index = 0;
    long family_total = 0;  // tri/quad dissections of the n-gon
    long examined = 0;      // those matching the filters and index range
    long unitary = 0;
    long tower_decomposable = 0;
    long both = 0;
    long neither = 0;
    std::vector<Dissection> counterexamples;   // unitary but not tower-decomposable
    std::vector<Dissection> hard_violations;   // tower-decomposable but fan not unitary
};

/// Exhaustive conjecture scan over the tri/quad dissections of the n-gon.
/// Deterministic for any worker count; at most 100 counterexamples kept.
ScanReport conjecture_scan(int n, const ScanFilters& filters = {}, int workers = 1,
                           long from_index = 0);

struct Lemma56Report {
    int n = 0;
    long dissections = 0;  // type <= 3 tri/quad dissections examined
    long checked = 0;      // (triple, side) instances whose hypothesis held
    std::vector<std::pair<Dissection, Lemma56Violation>> violations;
};

Lemma56Report lemma56_scan(int n, int workers = 1);

}  // namespace pellfrieze::analysis
