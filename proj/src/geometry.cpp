#include "pellfrieze/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace pellfrieze {

bool is_boundary(Arc a, int n) { return a.v - a.u == 1 || a.v - a.u == n - 1; }

bool crosses(Arc x, Arc y, int n) {
    (void)n;  // endpoints are already reduced mod n
    // With both pairs sorted, chords interleave iff u1 < u2 < v1 < v2 or
    // u2 < u1 < v2 < v1.
    return (x.u < y.u && y.u < x.v && x.v < y.v) || (y.u < x.u && x.u < y.v && y.v < x.v);
}

namespace {

void validate_arcs(int n, const std::vector<Arc>& arcs) {
    if (n < 3) throw InvalidDissection("polygon size must be >= 3");
    for (const Arc& a : arcs) {
        if (a.u < 0 || a.v >= n) {
            throw InvalidDissection("arc (" + std::to_string(a.u) + "," + std::to_string(a.v) +
                                    ") out of range for n=" + std::to_string(n));
        }
        if (is_boundary(a, n)) {
            throw InvalidDissection("boundary arc (" + std::to_string(a.u) + "," +
                                    std::to_string(a.v) + ") may not be stored");
        }
    }
    for (size_t i = 0; i < arcs.size(); ++i) {
        for (size_t j = i + 1; j < arcs.size(); ++j) {
            if (arcs[i] == arcs[j]) throw InvalidDissection("duplicate arc");
            if (crosses(arcs[i], arcs[j], n)) {
                throw InvalidDissection("arcs (" + std::to_string(arcs[i].u) + "," +
                                        std::to_string(arcs[i].v) + ") and (" +
                                        std::to_string(arcs[j].u) + "," +
                                        std::to_string(arcs[j].v) + ") cross");
            }
        }
    }
}

}  // namespace

std::vector<Face> walk_faces(int n, const std::vector<Arc>& arcs) {
    validate_arcs(n, arcs);

    // Rotation system: neighbors of v sorted by (w - v) mod n, which is the
    // angular order around a vertex on the circle.
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        adj[v].push_back((v + 1) % n);
        adj[v].push_back((v + n - 1) % n);
    }
    for (const Arc& a : arcs) {
        adj[a.u].push_back(a.v);
        adj[a.v].push_back(a.u);
    }
    for (int v = 0; v < n; ++v) {
        std::sort(adj[v].begin(), adj[v].end(),
                  [&](int x, int y) { return (x - v + n) % n < (y - v + n) % n; });
    }

    auto neighbor_index = [&](int v, int w) {
        return static_cast<int>(std::find(adj[v].begin(), adj[v].end(), w) - adj[v].begin());
    };

    std::vector<std::vector<char>> visited(n);
    for (int v = 0; v < n; ++v) visited[v].assign(adj[v].size(), 0);

    // Walks the face on the left of (u -> v): at v, continue along the
    // predecessor of u in v's rotation.
    auto walk = [&](int u, int v) {
        Face cycle;
        int cu = u;
        int cv = v;
        do {
            visited[cu][neighbor_index(cu, cv)] = 1;
            cycle.push_back(cv);
            const int deg = static_cast<int>(adj[cv].size());
            const int i = neighbor_index(cv, cu);
            const int w = adj[cv][(i - 1 + deg) % deg];
            cu = cv;
            cv = w;
        } while (cu != u || cv != v);
        return cycle;
    };

    walk(1 % n, 0);  // the outer face contains the descending boundary edge (1 -> 0)

    std::vector<Face> faces;
    for (int v = 0; v < n; ++v) {
        for (size_t i = 0; i < adj[v].size(); ++i) {
            if (visited[v][i]) continue;
            Face cycle = walk(v, adj[v][i]);
            std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()),
                        cycle.end());
            faces.push_back(std::move(cycle));
        }
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

Dissection::Dissection(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    std::sort(arcs_.begin(), arcs_.end());
    faces_ = walk_faces(n_, arcs_);
}

bool Dissection::has_arc(Arc a) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), a);
}

bool is_tri_quad(const Dissection& d) {
    return std::all_of(d.faces().begin(), d.faces().end(),
                       [](const Face& f) { return f.size() == 3 || f.size() == 4; });
}

bool is_triangulation(const Dissection& d) {
    return std::all_of(d.faces().begin(), d.faces().end(),
                       [](const Face& f) { return f.size() == 3; });
}

std::vector<int> vertex_face_degree(const Dissection& d) {
    std::vector<int> degree(d.n(), 0);
    for (const Face& f : d.faces()) {
        for (int v : f) ++degree[v];
    }
    return degree;
}

int type_of(const Dissection& d) {
    const std::vector<int> degree = vertex_face_degree(d);
    return *std::max_element(degree.begin(), degree.end());
}

namespace {

bool face_has_edge(const Face& f, Arc e) {
    const size_t p = f.size();
    for (size_t i = 0; i < p; ++i) {
        if (Arc(f[i], f[(i + 1) % p]) == e) return true;
    }
    return false;
}

}  // namespace

bool is_separated(const Dissection& d) {
    if (!is_tri_quad(d)) throw NotTriQuad("is_separated: face sizes must be 3 or 4");

    Arc bridge(0, 2);
    const Face* quad = nullptr;
    int bridges = 0;
    for (const Arc& a : d.arcs()) {
        const Face* tri_side = nullptr;
        const Face* quad_side = nullptr;
        for (const Face& f : d.faces()) {
            if (!face_has_edge(f, a)) continue;
            (f.size() == 3 ? tri_side : quad_side) = &f;
        }
        if (tri_side && quad_side) {
            ++bridges;
            bridge = a;
            quad = quad_side;
        }
    }
    if (bridges != 1) return false;

    // Both quad sides adjacent to the bridge must be boundary edges.
    const size_t p = quad->size();
    for (size_t i = 0; i < p; ++i) {
        if (Arc((*quad)[i], (*quad)[(i + 1) % p]) != bridge) continue;
        const Arc before((*quad)[(i + p - 1) % p], (*quad)[i]);
        const Arc after((*quad)[(i + 1) % p], (*quad)[(i + 2) % p]);
        return is_boundary(before, d.n()) && is_boundary(after, d.n());
    }
    return false;
}

namespace {

struct DissectionEnumerator {
    int n;
    const std::vector<int>& allowed;
    const std::function<bool(const Dissection&)>& visit;
    std::vector<Arc> diagonals;
    std::vector<Arc> current;
    bool stopped = false;

    bool sizes_ok(const Dissection& d) const {
        for (const Face& f : d.faces()) {
            if (std::find(allowed.begin(), allowed.end(), static_cast<int>(f.size())) ==
                allowed.end()) {
                return false;
            }
        }
        return true;
    }

    void emit() {
        Dissection d(n, current);
        if (sizes_ok(d) && !visit(d)) stopped = true;
    }

    void extend(size_t start) {
        if (stopped) return;
        emit();
        for (size_t i = start; i < diagonals.size() && !stopped; ++i) {
            const Arc cand = diagonals[i];
            const bool ok = std::none_of(current.begin(), current.end(),
                                         [&](Arc a) { return crosses(a, cand, n); });
            if (!ok) continue;
            current.push_back(cand);
            extend(i + 1);
            current.pop_back();
        }
    }
};

}  // namespace

void enumerate_dissections(int n, const std::vector<int>& allowed_face_sizes,
                           const std::function<bool(const Dissection&)>& visit) {
    if (n < 3) throw InvalidDissection("polygon size must be >= 3");
    DissectionEnumerator e{n, allowed_face_sizes, visit, {}, {}};
    for (int u = 0; u < n; ++u) {
        for (int v = u + 2; v < n; ++v) {
            if (!is_boundary(Arc(u, v), n)) e.diagonals.emplace_back(u, v);
        }
    }
    e.extend(0);
}

std::vector<Dissection> all_dissections(int n, const std::vector<int>& allowed_face_sizes) {
    std::vector<Dissection> out;
    enumerate_dissections(n, allowed_face_sizes, [&](const Dissection& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

namespace {

// Each triangulation is reached exactly once: every pending vertex range is
// resolved by the apex of the triangle on its closing edge, and ranges are
// processed in a fixed (LIFO) order.
struct TriangulationEnumerator {
    int n;
    const std::function<bool(const Triangulation&)>& visit;
    std::vector<std::pair<int, int>> pending;
    std::vector<Arc> acc;

    void push_range(int lo, int hi) {
        if (hi - lo >= 2) pending.emplace_back(lo, hi);
    }

    // Leaves `pending` and `acc` exactly as found.
    bool run() {
        if (pending.empty()) return visit(Triangulation(n, acc));
        const auto [lo, hi] = pending.back();
        pending.pop_back();
        bool go = true;
        for (int k = lo + 1; k < hi && go; ++k) {
            const size_t arc_mark = acc.size();
            const size_t range_mark = pending.size();
            if (k - lo > 1) acc.emplace_back(lo, k);
            if (hi - k > 1) acc.emplace_back(k, hi);
            push_range(lo, k);
            push_range(k, hi);
            go = run();
            pending.resize(range_mark);
            acc.resize(arc_mark);
        }
        pending.emplace_back(lo, hi);
        return go;
    }
};

}  // namespace

void enumerate_triangulations(int n, const std::function<bool(const Triangulation&)>& visit) {
    if (n < 3) throw InvalidDissection("polygon size must be >= 3");
    TriangulationEnumerator e{n, visit, {}, {}};
    e.push_range(0, n - 1);
    e.run();
}

std::vector<Triangulation> all_triangulations(int n) {
    std::vector<Triangulation> out;
    enumerate_triangulations(n, [&](const Triangulation& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

}  // namespace pellfrieze
