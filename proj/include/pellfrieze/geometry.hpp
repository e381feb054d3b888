#pragma once

#include <compare>
#include <functional>
#include <stdexcept>
#include <vector>

namespace pellfrieze {

struct InvalidDissection : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotTriQuad : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unordered vertex pair, stored with u < v.
struct Arc {
    int u = 0;
    int v = 0;

    Arc() = default;
    Arc(int x, int y) : u(x < y ? x : y), v(x < y ? y : x) {
        if (x == y) throw InvalidDissection("arc endpoints must differ");
    }

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

bool is_boundary(Arc a, int n);

/// Whether two chords of the n-gon cross in the interior. Arcs sharing an
/// endpoint never cross; boundary arcs never cross anything.
bool crosses(Arc x, Arc y, int n);

/// Face of a dissection: its vertex cycle. Faces of a convex polygon inherit
/// the circle order, so the cycle is stored ascending.
using Face = std::vector<int>;

/// Corner-walking face extraction: incident edges are sorted angularly at
/// each vertex and corners are walked; the outer face is dropped. Faces are
/// returned sorted. Throws InvalidDissection on crossing/duplicate/boundary
/// arcs or out-of-range endpoints.
std::vector<Face> walk_faces(int n, const std::vector<Arc>& arcs);

/// A validated set of pairwise non-crossing diagonals with derived faces.
/// Boundary arcs are never stored; their weight is implicit.
class Dissection {
public:
    Dissection(int n, std::vector<Arc> arcs);

    int n() const { return n_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<Face>& faces() const { return faces_; }
    bool has_arc(Arc a) const;

    friend bool operator==(const Dissection& x, const Dissection& y) {
        return x.n_ == y.n_ && x.arcs_ == y.arcs_;
    }

private:
    int n_;
    std::vector<Arc> arcs_;
    std::vector<Face> faces_;
};

/// A Dissection whose faces are all triangles (n-3 arcs).
using Triangulation = Dissection;

bool is_tri_quad(const Dissection& d);
bool is_triangulation(const Dissection& d);

/// Number of faces incident to each vertex.
std::vector<int> vertex_face_degree(const Dissection& d);

/// Max face count over vertices ("type" of the dissection).
int type_of(const Dissection& d);

/// Exactly one arc separates a triangle from a quadrilateral, and that
/// quadrilateral's two sides adjacent to it lie on the polygon boundary.
/// Dissections with no such arc (pure triangulations or 4-angulations)
/// are not separated. Throws NotTriQuad.
bool is_separated(const Dissection& d);

/// Visit every dissection of the n-gon whose faces all have a size in
/// `allowed_face_sizes`, exactly once, in lexicographic order of the sorted
/// arc list. The visitor returns false to stop early.
void enumerate_dissections(int n, const std::vector<int>& allowed_face_sizes,
                           const std::function<bool(const Dissection&)>& visit);

std::vector<Dissection> all_dissections(int n, const std::vector<int>& allowed_face_sizes = {3, 4});

/// Visit all Catalan(n-2) triangulations, each exactly once, by recursive
/// choice of the triangle on the edge (0, n-1).
void enumerate_triangulations(int n, const std::function<bool(const Triangulation&)>& visit);

std::vector<Triangulation> all_triangulations(int n);

}  // namespace pellfrieze
