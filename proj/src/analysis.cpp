#include "pellfrieze/analysis.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <thread>
#include <unordered_set>

namespace pellfrieze::analysis {

namespace {

bool positive_unit(const QuadInt& w) { return is_unit(w) && w.sign() > 0; }

std::vector<Arc> face_edges(const Face& f) {
    std::vector<Arc> edges;
    const size_t p = f.size();
    edges.reserve(p);
    for (size_t i = 0; i < p; ++i) edges.emplace_back(f[i], f[(i + 1) % p]);
    return edges;
}

// Map from edge to the (one or two) faces carrying it.
std::map<Arc, std::vector<int>> edge_face_map(const Dissection& d) {
    std::map<Arc, std::vector<int>> m;
    for (size_t fi = 0; fi < d.faces().size(); ++fi) {
        for (const Arc& e : face_edges(d.faces()[fi])) m[e].push_back(static_cast<int>(fi));
    }
    return m;
}

std::optional<int> face_across(const std::map<Arc, std::vector<int>>& edges, Arc e, int from) {
    const auto it = edges.find(e);
    if (it == edges.end()) return std::nullopt;
    for (int fi : it->second) {
        if (fi != from) return fi;
    }
    return std::nullopt;
}

// The edge of a quadrilateral vertex-disjoint from e.
Arc opposite_edge(const Face& quad, Arc e) {
    for (const Arc& cand : face_edges(quad)) {
        if (cand.u != e.u && cand.u != e.v && cand.v != e.u && cand.v != e.v) return cand;
    }
    throw std::logic_error("quadrilateral has no edge opposite to a non-edge");
}

int off_vertex(const Face& tri, Arc e) {
    for (int v : tri) {
        if (v != e.u && v != e.v) return v;
    }
    throw std::logic_error("edge is not an edge of the triangle");
}

}  // namespace

std::set<Arc> unit_arcs(const FriezeTable& t) {
    std::set<Arc> out;
    const int n = t.n();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            const Arc a(i, j);
            if (is_boundary(a, n)) continue;
            if (positive_unit(t.at(i, j))) out.insert(a);
        }
    }
    return out;
}

namespace {

// Interval DP shared by the unitary-triangulation search and enumeration.
struct UnitChords {
    int n;
    std::set<Arc> units;

    explicit UnitChords(const FriezeTable& t) : n(t.n()), units(unit_arcs(t)) {}

    bool usable(int a, int b) const {
        const Arc arc(a % n, b % n);
        return is_boundary(arc, n) || units.count(arc) > 0;
    }
};

}  // namespace

std::optional<Triangulation> find_unitary_triangulation(const FriezeTable& t) {
    const UnitChords uc(t);
    const int n = uc.n;
    // solved[i][len]: the polygon i, i+1, ..., i+len (mod n) can be
    // triangulated with unit/boundary chords, the closing chord excluded.
    std::vector<std::vector<int>> solved(n, std::vector<int>(n, -1));
    std::vector<std::vector<int>> choice(n, std::vector<int>(n, 0));

    auto solve = [&](auto&& self, int i, int len) -> bool {
        if (len <= 1) return true;
        int& memo = solved[i][len];
        if (memo >= 0) return memo != 0;
        memo = 0;
        for (int m = 1; m < len; ++m) {
            if (uc.usable(i, (i + m) % n) && uc.usable((i + m) % n, (i + len) % n) &&
                self(self, i, m) && self(self, (i + m) % n, len - m)) {
                memo = 1;
                choice[i][len] = m;
                break;
            }
        }
        return memo != 0;
    };

    if (!solve(solve, 0, n - 1)) return std::nullopt;

    std::vector<Arc> arcs;
    auto collect = [&](auto&& self, int i, int len) -> void {
        if (len <= 1) return;
        const int m = choice[i][len];
        const Arc left(i, (i + m) % n);
        const Arc right((i + m) % n, (i + len) % n);
        if (!is_boundary(left, n)) arcs.push_back(left);
        if (!is_boundary(right, n)) arcs.push_back(right);
        self(self, i, m);
        self(self, (i + m) % n, len - m);
    };
    collect(collect, 0, n - 1);
    return Triangulation(n, arcs);
}

std::vector<Triangulation> enumerate_unitary_triangulations(const FriezeTable& t) {
    const UnitChords uc(t);
    const int n = uc.n;
    std::map<std::pair<int, int>, std::vector<std::vector<Arc>>> memo;

    // All unit/boundary triangulations of the polygon i..i+len, keyed by the
    // apex of the triangle on the closing chord; each appears exactly once.
    auto lists = [&](auto&& self, int i, int len) -> const std::vector<std::vector<Arc>>& {
        const auto key = std::make_pair(i, len);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::vector<std::vector<Arc>> out;
        if (len <= 1) {
            out.push_back({});
        } else {
            for (int m = 1; m < len; ++m) {
                if (!uc.usable(i, (i + m) % n) || !uc.usable((i + m) % n, (i + len) % n)) {
                    continue;
                }
                const auto& left = self(self, i, m);
                const auto& right = self(self, (i + m) % n, len - m);
                for (const auto& la : left) {
                    for (const auto& ra : right) {
                        std::vector<Arc> arcs;
                        const Arc lc(i, (i + m) % n);
                        const Arc rc((i + m) % n, (i + len) % n);
                        if (!is_boundary(lc, n)) arcs.push_back(lc);
                        if (!is_boundary(rc, n)) arcs.push_back(rc);
                        arcs.insert(arcs.end(), la.begin(), la.end());
                        arcs.insert(arcs.end(), ra.begin(), ra.end());
                        out.push_back(std::move(arcs));
                    }
                }
            }
        }
        return memo.emplace(key, std::move(out)).first->second;
    };

    std::vector<Triangulation> result;
    for (const auto& arcs : lists(lists, 0, n - 1)) {
        result.emplace_back(n, arcs);
    }
    std::sort(result.begin(), result.end(),
              [](const Triangulation& a, const Triangulation& b) { return a.arcs() < b.arcs(); });
    return result;
}

std::vector<EarCandidate> basic_triangles(const std::vector<int>& polygon, const FriezeTable& t) {
    std::vector<EarCandidate> out;
    const int sz = static_cast<int>(polygon.size());
    if (sz < 4) return out;
    for (int idx = 0; idx < sz; ++idx) {
        const int prev = polygon[(idx + sz - 1) % sz];
        const int next = polygon[(idx + 1) % sz];
        const Arc chord(prev, next);
        out.push_back({polygon[idx], chord, positive_unit(t.at(chord.u, chord.v))});
    }
    return out;
}

std::optional<Triangulation> triangulation_algorithm(const Dissection& d, const FriezeTable& t) {
    const int n = d.n();
    if (n == 3) return Triangulation(3, {});
    const bool memo_usable = n <= 63;

    std::unordered_set<std::uint64_t> dead;
    std::vector<Arc> chosen;

    auto mask_of = [](const std::vector<int>& poly) {
        std::uint64_t m = 0;
        for (int v : poly) m |= std::uint64_t(1) << v;
        return m;
    };

    auto dfs = [&](auto&& self, const std::vector<int>& poly) -> bool {
        if (poly.size() == 3) return true;
        const std::uint64_t mask = memo_usable ? mask_of(poly) : 0;
        if (memo_usable && dead.count(mask)) return false;
        for (const EarCandidate& ear : basic_triangles(poly, t)) {
            if (!ear.unit) continue;
            std::vector<int> next;
            next.reserve(poly.size() - 1);
            for (int v : poly) {
                if (v != ear.apex) next.push_back(v);
            }
            chosen.push_back(ear.chord);
            if (self(self, next)) return true;
            chosen.pop_back();
        }
        if (memo_usable) dead.insert(mask);
        return false;
    };

    std::vector<int> poly(n);
    for (int v = 0; v < n; ++v) poly[v] = v;
    if (!dfs(dfs, poly)) return std::nullopt;
    return Triangulation(n, chosen);
}

// --- towers ------------------------------------------------------------

namespace {

struct TowerSearch {
    const Dissection& d;
    const std::vector<Face>& faces;
    std::map<Arc, std::vector<int>> edges;
    std::vector<int> triangles;
    std::vector<int> assigned;  // face index -> tower id, or -1

    struct Block {
        std::vector<int> face_indices;  // [triangle, quad_1, ...]
        Arc growth_edge{0, 2};          // triangle edge the stack grows through
        bool grown = false;
    };
    std::vector<Block> blocks;
    std::vector<TowerDecomposition> found;
    std::unordered_set<std::uint64_t> dead;  // (triangle position, face mask) with no solutions

    explicit TowerSearch(const Dissection& dd)
        : d(dd), faces(dd.faces()), edges(edge_face_map(dd)), assigned(faces.size(), -1) {
        for (size_t fi = 0; fi < faces.size(); ++fi) {
            if (faces[fi].size() == 3) triangles.push_back(static_cast<int>(fi));
        }
    }

    bool memo_usable() const { return assigned.size() <= 56; }

    std::uint64_t state_key(size_t ti) const {
        std::uint64_t mask = 0;
        for (size_t fi = 0; fi < assigned.size(); ++fi) {
            if (assigned[fi] >= 0) mask |= std::uint64_t(1) << fi;
        }
        return (mask << 6) | ti;
    }

    void record() {
        TowerDecomposition dec;
        for (const Block& b : blocks) {
            Tower tower;
            tower.face_indices = b.face_indices;
            std::set<int> vs;
            for (int fi : b.face_indices) vs.insert(faces[fi].begin(), faces[fi].end());
            tower.vertices.assign(vs.begin(), vs.end());
            tower.roof = b.grown ? off_vertex(faces[b.face_indices[0]], b.growth_edge)
                                 : faces[b.face_indices[0]][0];
            dec.towers.push_back(std::move(tower));
        }
        std::sort(dec.towers.begin(), dec.towers.end(),
                  [](const Tower& a, const Tower& b) { return a.face_indices < b.face_indices; });
        for (const Arc& a : d.arcs()) {
            const auto& shared = edges.at(a);
            if (assigned[shared[0]] != assigned[shared[1]]) dec.glue_arcs.push_back(a);
        }
        found.push_back(std::move(dec));
    }

    // Assign a tower to each triangle in order; every quad must be absorbed
    // by exactly one stack.
    void grow(size_t ti) {
        if (ti == triangles.size()) {
            if (std::all_of(assigned.begin(), assigned.end(), [](int a) { return a >= 0; })) {
                record();
            }
            return;
        }
        const std::uint64_t key = memo_usable() ? state_key(ti) : 0;
        if (memo_usable() && dead.count(key)) return;
        const size_t found_before = found.size();
        const int tri = triangles[ti];
        const int id = static_cast<int>(ti);

        assigned[tri] = id;
        blocks.push_back({{tri}, Arc(0, 2), false});

        grow(ti + 1);  // 0-tower

        for (const Arc& e : face_edges(faces[tri])) {
            auto q = face_across(edges, e, tri);
            Arc in_edge = e;
            std::vector<int> stacked;
            while (q && faces[*q].size() == 4 && assigned[*q] < 0) {
                assigned[*q] = id;
                stacked.push_back(*q);
                blocks.back().face_indices.push_back(*q);
                blocks.back().growth_edge = e;
                blocks.back().grown = true;
                grow(ti + 1);
                const Arc out_edge = opposite_edge(faces[*q], in_edge);
                const auto next = face_across(edges, out_edge, *q);
                in_edge = out_edge;
                q = next;
            }
            for (int fi : stacked) assigned[fi] = -1;
            blocks.back().face_indices.resize(1);
            blocks.back().grown = false;
        }

        blocks.pop_back();
        assigned[tri] = -1;
        if (memo_usable() && found.size() == found_before) dead.insert(key);
    }
};

}  // namespace

std::vector<TowerDecomposition> enumerate_tower_decompositions(const Dissection& d) {
    if (!is_tri_quad(d)) throw NotTriQuad("tower decomposition: face sizes must be 3 or 4");
    TowerSearch search(d);
    if (search.triangles.empty()) return {};
    search.grow(0);
    std::vector<TowerDecomposition> out = std::move(search.found);
    std::sort(out.begin(), out.end(), [](const TowerDecomposition& a, const TowerDecomposition& b) {
        std::vector<std::vector<int>> ka, kb;
        for (const Tower& t : a.towers) ka.push_back(t.face_indices);
        for (const Tower& t : b.towers) kb.push_back(t.face_indices);
        return ka < kb;
    });
    return out;
}

std::optional<TowerDecomposition> tower_decomposition(const Dissection& d) {
    auto all = enumerate_tower_decompositions(d);
    if (all.empty()) return std::nullopt;
    return std::move(all.front());
}

Triangulation unitary_from_towers(const Dissection& d, const TowerDecomposition& dec) {
    std::set<Arc> arcs(dec.glue_arcs.begin(), dec.glue_arcs.end());
    for (const Tower& tower : dec.towers) {
        const auto& vs = tower.vertices;
        const int sz = static_cast<int>(vs.size());
        const int r = static_cast<int>(std::find(vs.begin(), vs.end(), tower.roof) - vs.begin());
        const int pred = vs[(r + sz - 1) % sz];
        const int succ = vs[(r + 1) % sz];
        for (int w : vs) {
            if (w == tower.roof || w == pred || w == succ) continue;
            arcs.insert(Arc(tower.roof, w));
        }
    }
    return Triangulation(d.n(), std::vector<Arc>(arcs.begin(), arcs.end()));
}

QuadInt tower_arc_weight(int k) {
    if (k < 0) throw std::invalid_argument("tower_arc_weight: k must be >= 0");
    return unit_power(k);
}

QuadInt pell_arc_weight(int i, int j) {
    if (i < 1 || j < 0) throw std::invalid_argument("pell_arc_weight: need i >= 1, j >= 0");
    return unit_power(i + j + 1);
}

// --- constructed figures ------------------------------------------------

Dissection make_stack(int m) {
    if (m < 1) throw std::invalid_argument("make_stack: need m >= 1");
    std::vector<Arc> arcs;
    for (int i = 1; i < m; ++i) arcs.emplace_back(i, 2 * m + 1 - i);
    return Dissection(2 * m + 2, arcs);
}

Dissection make_tower(int k) {
    if (k < 0) throw std::invalid_argument("make_tower: need k >= 0");
    std::vector<Arc> arcs;
    for (int i = 1; i <= k; ++i) arcs.emplace_back(i, 2 * k + 3 - i);
    return Dissection(2 * k + 3, arcs);
}

Dissection make_zigzag(int m) {
    if (m < 2) throw std::invalid_argument("make_zigzag: need m >= 2");
    // Snake of arcs pivoting in runs of two (after an initial single pivot),
    // so the arc (0, m) meets fans of two triangles and its weight ratio
    // against (2m-1, m) is the all-twos continued fraction.
    std::vector<Arc> arcs;
    int lo = 1;
    int hi = 2 * m - 1;
    arcs.emplace_back(lo, hi);
    for (int step = 0; step < 2 * m - 4; ++step) {
        const bool advance_lo = step == 0 || ((step - 1) / 2) % 2 == 1;
        if (advance_lo) {
            ++lo;
        } else {
            --hi;
        }
        arcs.emplace_back(lo, hi);
    }
    return Dissection(2 * m, arcs);
}

Dissection make_pell_figure(int i, int j) {
    if (i < 1 || j < 0) throw std::invalid_argument("make_pell_figure: need i >= 1, j >= 0");
    const int n = 2 * i + 2 * j + 5;
    std::vector<Arc> arcs;
    for (int r = 1; r <= i; ++r) arcs.emplace_back(r, 2 * i + 2 * j + 5 - r);  // i-tower rungs
    arcs.emplace_back(i + 2 * j + 5, i + 2);                                   // triangle-to-stack glue
    arcs.emplace_back(i + 2, i + 2 * j + 4);                                   // triangle-to-j-tower glue
    for (int s = 1; s <= j; ++s) arcs.emplace_back(i + 2 + s, i + 2 * j + 4 - s);
    return Dissection(n, arcs);
}

std::pair<Dissection, Arc> build_pell_witness(int i, int m) {
    if (i < 1 || m < 2) throw std::invalid_argument("build_pell_witness: need i >= 1, m >= 2");
    const int n = 2 * i + 2 * m + 1;
    std::vector<Arc> arcs;
    for (int r = 1; r <= i; ++r) arcs.emplace_back(r, 2 * i + 2 * m + 1 - r);  // stack rungs
    // The zig-zag polygon's edge (0, 2m-1) is glued onto the stack's last
    // quadrilateral; its vertex h sits at polygon index idx(h).
    auto idx = [&](int h) { return h == 0 ? i + 2 * m + 1 : i + 2 + (2 * m - 1 - h); };
    arcs.emplace_back(idx(0), idx(2 * m - 1));
    const Dissection zigzag = make_zigzag(m);
    for (const Arc& a : zigzag.arcs()) arcs.emplace_back(idx(a.u), idx(a.v));
    return {Dissection(n, arcs), Arc(0, idx(m))};
}

// --- structural arc families --------------------------------------------

std::set<Arc> tower_arcs(const Dissection& d) {
    if (!is_tri_quad(d)) throw NotTriQuad("tower_arcs: face sizes must be 3 or 4");
    const auto& faces = d.faces();
    const auto edges = edge_face_map(d);
    std::set<Arc> out;
    for (size_t fi = 0; fi < faces.size(); ++fi) {
        if (faces[fi].size() != 3) continue;
        for (int roof : faces[fi]) {
            std::set<int> span(faces[fi].begin(), faces[fi].end());
            Arc in_edge(faces[fi][0] == roof ? faces[fi][1] : faces[fi][0],
                        faces[fi][2] == roof ? faces[fi][1] : faces[fi][2]);
            auto cur = face_across(edges, in_edge, static_cast<int>(fi));
            while (cur && faces[*cur].size() == 4) {
                span.insert(faces[*cur].begin(), faces[*cur].end());
                const Arc out_edge = opposite_edge(faces[*cur], in_edge);
                const auto next = face_across(edges, out_edge, *cur);
                in_edge = out_edge;
                cur = next;
            }
            for (int w : span) {
                if (w != roof) out.insert(Arc(roof, w));
            }
        }
    }
    return out;
}

namespace {

// Walk a straight quad chain entered through `entry`; when it terminates in
// a triangle, report that cap's off-vertex and the quad count.
std::optional<std::pair<int, int>> straight_chain_cap(const std::vector<Face>& faces,
                                                      const std::map<Arc, std::vector<int>>& edges,
                                                      int start, Arc entry) {
    int quads = 0;
    int cur = start;
    Arc e = entry;
    for (;;) {
        const Face& f = faces[cur];
        if (f.size() == 3) return std::make_pair(off_vertex(f, e), quads);
        ++quads;
        const Arc out = opposite_edge(f, e);
        const auto next = face_across(edges, out, cur);
        if (!next) return std::nullopt;
        e = out;
        cur = *next;
    }
}

}  // namespace

std::set<Arc> pell_arcs(const Dissection& d) {
    if (!is_tri_quad(d)) throw NotTriQuad("pell_arcs: face sizes must be 3 or 4");
    const auto& faces = d.faces();
    const auto edges = edge_face_map(d);
    std::set<Arc> out;
    for (size_t fi = 0; fi < faces.size(); ++fi) {
        const Face& tri = faces[fi];
        if (tri.size() != 3) continue;
        for (int shared : tri) {
            int others[2];
            int oi = 0;
            for (int v : tri) {
                if (v != shared) others[oi++] = v;
            }
            if (!d.has_arc(Arc(others[0], shared)) || !d.has_arc(Arc(others[1], shared))) continue;
            for (int o = 0; o < 2; ++o) {
                const int c = others[o];
                const int e = others[1 - o];
                // i-side: the stack's last quadrilateral lies across (c, shared)
                // and its side edge at c is the rung into the rest of the tower.
                const auto quad = face_across(edges, Arc(c, shared), static_cast<int>(fi));
                if (!quad || faces[*quad].size() != 4) continue;
                Arc rung(0, 2);
                bool have_rung = false;
                for (const Arc& cand : face_edges(faces[*quad])) {
                    if ((cand.u == c || cand.v == c) && cand != Arc(c, shared)) {
                        rung = cand;
                        have_rung = true;
                        break;
                    }
                }
                if (!have_rung) continue;
                const auto beyond = face_across(edges, rung, *quad);
                if (!beyond) continue;
                const auto i_side = straight_chain_cap(faces, edges, *beyond, rung);
                if (!i_side) continue;
                // j-side: a straight chain (possibly just a triangle) across
                // (shared, e).
                const auto jf = face_across(edges, Arc(shared, e), static_cast<int>(fi));
                if (!jf) continue;
                const auto j_side = straight_chain_cap(faces, edges, *jf, Arc(shared, e));
                if (!j_side) continue;
                out.insert(Arc(i_side->first, j_side->first));
            }
        }
    }
    return out;
}

namespace {

std::uint64_t poly_mask(const std::vector<int>& poly) {
    std::uint64_t m = 0;
    for (int v : poly) m |= std::uint64_t(1) << v;
    return m;
}

std::vector<int> without_vertex(const std::vector<int>& poly, int apex) {
    std::vector<int> out;
    out.reserve(poly.size() - 1);
    for (int v : poly) {
        if (v != apex) out.push_back(v);
    }
    return out;
}

// Ear peeling with arbitrary unit chords, memoized over vertex subsets.
struct UnitEarSearch {
    const std::set<Arc>& units;
    std::map<std::uint64_t, bool> memo;

    bool completable(const std::vector<int>& poly) {
        if (poly.size() <= 3) return true;
        const std::uint64_t key = poly_mask(poly);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool ok = false;
        const int sz = static_cast<int>(poly.size());
        for (int idx = 0; idx < sz && !ok; ++idx) {
            const Arc chord(poly[(idx + sz - 1) % sz], poly[(idx + 1) % sz]);
            if (units.count(chord) == 0) continue;
            ok = completable(without_vertex(poly, poly[idx]));
        }
        memo.emplace(key, ok);
        return ok;
    }
};

// Empirical form of the basic-triangle and Pell-failure lemmas: walk every
// ear-peeling state reachable through dissection arcs and tower arcs alone
// (the algorithm's premise; the sides of every basic triangle met this way
// are boundary, dissection or tower arcs). Each basic triangle's chord must
// then be in the dissection, a tower arc, of non-unit weight, or a Pell arc
// -- and choosing a Pell arc never completes a unitary triangulation, so the
// last case is verified behaviorally. A violation is a reachable unit chord
// outside the dissection and tower families through which an all-unit ear
// peeling still finishes.
std::vector<Lemma56Violation> lemma56_check_counted(const Dissection& d, const FriezeTable& t,
                                                    long& checked) {
    const int n = d.n();
    if (n > 63) throw std::invalid_argument("lemma56_check: polygon too large");
    const std::set<Arc> towers = tower_arcs(d);
    const std::set<Arc> units = unit_arcs(t);

    UnitEarSearch search{units, {}};
    std::set<Lemma56Violation> seen;
    std::vector<Lemma56Violation> violations;
    std::unordered_set<std::uint64_t> visited;

    auto dfs = [&](auto&& self, const std::vector<int>& poly) -> void {
        if (poly.size() < 4) return;
        if (!visited.insert(poly_mask(poly)).second) return;
        const int sz = static_cast<int>(poly.size());
        for (int idx = 0; idx < sz; ++idx) {
            const int apex = poly[idx];
            const Arc chord(poly[(idx + sz - 1) % sz], poly[(idx + 1) % sz]);
            ++checked;
            const bool premise = d.has_arc(chord) || towers.count(chord) > 0;
            if (!premise && units.count(chord) > 0 &&
                search.completable(without_vertex(poly, apex))) {
                const Lemma56Violation v{chord.u, apex, chord.v};
                if (seen.insert(v).second) violations.push_back(v);
            }
            if (premise) self(self, without_vertex(poly, apex));
        }
    };

    std::vector<int> poly(n);
    for (int v = 0; v < n; ++v) poly[v] = v;
    dfs(dfs, poly);
    return violations;
}

}  // namespace

std::vector<Lemma56Violation> lemma56_check(const Dissection& d, const FriezeTable& t) {
    long checked = 0;
    return lemma56_check_counted(d, t, checked);
}

// --- scans ---------------------------------------------------------------

namespace {

constexpr size_t kMaxStored = 100;

struct BlockResult {
    long examined = 0;
    long unitary = 0;
    long tower = 0;
    long both = 0;
    long neither = 0;
    std::vector<Dissection> counterexamples;
    std::vector<Dissection> hard_violations;
};

bool passes_filters(const Dissection& d, const ScanFilters& f) {
    if (f.four_angulations_only) {
        for (const Face& face : d.faces()) {
            if (face.size() != 4) return false;
        }
    }
    if (f.type_max && type_of(d) > *f.type_max) return false;
    if (f.separated_only && !is_separated(d)) return false;
    return true;
}

void scan_block(int n, const std::vector<std::vector<Arc>>& work, size_t lo, size_t hi,
                const ScanFilters& filters, BlockResult& out) {
    for (size_t idx = lo; idx < hi; ++idx) {
        const Dissection d(n, work[idx]);
        if (!passes_filters(d, filters)) continue;
        ++out.examined;
        const FriezeTable t = frieze_from_dissection(d);
        const bool u = find_unitary_triangulation(t).has_value();
        const auto dec = tower_decomposition(d);
        const bool tw = dec.has_value();
        if (tw) {
            // Hard invariant: a decomposition's fan triangulation is unitary.
            bool fan_ok = false;
            try {
                const Triangulation fan = unitary_from_towers(d, *dec);
                const std::set<Arc> units = unit_arcs(t);
                fan_ok = is_triangulation(fan) &&
                         std::all_of(fan.arcs().begin(), fan.arcs().end(),
                                     [&](Arc a) { return units.count(a) > 0; });
            } catch (const InvalidDissection&) {
                fan_ok = false;
            }
            if (!fan_ok && out.hard_violations.size() < kMaxStored) {
                out.hard_violations.push_back(d);
            }
        }
        out.unitary += u;
        out.tower += tw;
        out.both += u && tw;
        out.neither += !u && !tw;
        if (u && !tw && out.counterexamples.size() < kMaxStored) {
            out.counterexamples.push_back(d);
        }
    }
}

std::vector<std::vector<Arc>> tri_quad_family(int n) {
    std::vector<std::vector<Arc>> work;
    enumerate_dissections(n, {3, 4}, [&](const Dissection& d) {
        work.push_back(d.arcs());
        return true;
    });
    return work;
}

// Contiguous index blocks, one per worker; block boundaries depend only on
// the range and the block count, so merged results are deterministic.
template <typename Fn>
void run_blocks(size_t begin, size_t end, size_t nblocks, Fn&& body) {
    const size_t span = end > begin ? end - begin : 0;
    if (nblocks == 1) {
        body(0, begin, begin + span);
        return;
    }
    std::vector<std::thread> pool;
    for (size_t b = 0; b < nblocks; ++b) {
        const size_t lo = begin + span * b / nblocks;
        const size_t hi = begin + span * (b + 1) / nblocks;
        pool.emplace_back([&body, b, lo, hi] { body(b, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

size_t block_count(int workers) { return workers < 1 ? 1 : static_cast<size_t>(workers); }

}  // namespace

ScanReport conjecture_scan(int n, const ScanFilters& filters, int workers, long from_index) {
    const std::vector<std::vector<Arc>> work = tri_quad_family(n);

    ScanReport report;
    report.n = n;
    report.filters = filters;
    report.family_total = static_cast<long>(work.size());
    report.from_index = std::clamp<long>(from_index, 0, report.family_total);

    const size_t begin = static_cast<size_t>(report.from_index);
    const size_t nblocks = block_count(workers);
    std::vector<BlockResult> results(nblocks);
    run_blocks(begin, work.size(), nblocks,
               [&](size_t b, size_t lo, size_t hi) { scan_block(n, work, lo, hi, filters, results[b]); });

    for (const BlockResult& r : results) {
        report.examined += r.examined;
        report.unitary += r.unitary;
        report.tower_decomposable += r.tower;
        report.both += r.both;
        report.neither += r.neither;
        for (const Dissection& d : r.counterexamples) {
            if (report.counterexamples.size() < kMaxStored) report.counterexamples.push_back(d);
        }
        for (const Dissection& d : r.hard_violations) {
            if (report.hard_violations.size() < kMaxStored) report.hard_violations.push_back(d);
        }
    }
    return report;
}

Lemma56Report lemma56_scan(int n, int workers) {
    const std::vector<std::vector<Arc>> work = tri_quad_family(n);

    struct Block {
        long dissections = 0;
        long checked = 0;
        std::vector<std::pair<Dissection, Lemma56Violation>> violations;
    };
    const size_t nblocks = block_count(workers);
    std::vector<Block> results(nblocks);
    run_blocks(0, work.size(), nblocks, [&](size_t b, size_t lo, size_t hi) {
        for (size_t idx = lo; idx < hi; ++idx) {
            const Dissection d(n, work[idx]);
            if (type_of(d) > 3) continue;
            ++results[b].dissections;
            const FriezeTable t = frieze_from_dissection(d);
            for (const Lemma56Violation& v :
                 lemma56_check_counted(d, t, results[b].checked)) {
                if (results[b].violations.size() < kMaxStored) {
                    results[b].violations.emplace_back(d, v);
                }
            }
        }
    });

    Lemma56Report report;
    report.n = n;
    for (const Block& r : results) {
        report.dissections += r.dissections;
        report.checked += r.checked;
        for (const auto& v : r.violations) {
            if (report.violations.size() < kMaxStored) report.violations.push_back(v);
        }
    }
    return report;
}

}  // namespace pellfrieze::analysis
