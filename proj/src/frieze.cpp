#include "pellfrieze/frieze.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace pellfrieze {

FriezeTable::FriezeTable(int n) : n_(n), w_(static_cast<size_t>(n) * n) {
    if (n < 3) throw std::invalid_argument("frieze table needs n >= 3");
    for (int i = 0; i < n; ++i) {
        set(i, (i + 1) % n, QuadInt(1));
    }
}

size_t FriezeTable::index(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) {
        throw std::out_of_range("frieze table index out of range");
    }
    return static_cast<size_t>(i) * n_ + j;
}

void FriezeTable::set(int i, int j, QuadInt v) {
    w_[index(j, i)] = v;
    w_[index(i, j)] = std::move(v);
}

namespace {

QuadInt lambda_for(int p) {
    if (p == 3) return QuadInt(1);
    if (p == 4) return QuadInt::sqrt2();
    throw UnsupportedP("lambda_" + std::to_string(p) + " is not in Z[sqrt(2)]");
}

}  // namespace

FriezeTable euclidean_frieze(int p) {
    const QuadInt lambda = lambda_for(p);
    for (int k = 1; k < p; ++k) {
        // Both directions around the face must agree.
        assert(chebyshev_u(k - 1, lambda) == chebyshev_u(p - k - 1, lambda));
    }
    FriezeTable t(p);
    for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) {
            t.set(i, j, chebyshev_u(j - i - 1, lambda));
        }
    }
    return t;
}

namespace {

struct FriezeBuilder {
    const Dissection& d;
    int n;
    std::vector<std::optional<QuadInt>> memo;

    explicit FriezeBuilder(const Dissection& dd)
        : d(dd), n(dd.n()), memo(static_cast<size_t>(n) * n) {}

    std::optional<QuadInt>& slot(int i, int j) { return memo[static_cast<size_t>(i) * n + j]; }

    // Weight by face membership: U_{k-1}(lambda_p) at face distance k.
    std::optional<QuadInt> common_face_weight(int i, int j) const {
        for (const Face& f : d.faces()) {
            const auto pi = std::find(f.begin(), f.end(), i);
            const auto pj = std::find(f.begin(), f.end(), j);
            if (pi == f.end() || pj == f.end()) continue;
            const int p = static_cast<int>(f.size());
            int k = static_cast<int>(std::abs(pi - pj));
            k = std::min(k, p - k);
            return chebyshev_u(k - 1, lambda_for(p));
        }
        return std::nullopt;
    }

    // The crossed dissection arc whose crossing point lies nearest to i on
    // the segment from i to j; ties cannot occur among non-crossing arcs.
    Arc nearest_crossing(int i, int j) const {
        const Arc target(i, j);
        bool found = false;
        Arc best(0, 2);
        long best_key1 = 0, best_key2 = 0;
        for (const Arc& a : d.arcs()) {
            if (!crosses(a, target, n)) continue;
            int alpha = a.u, beta = a.v;
            // alpha is the endpoint on the ccw side i -> j.
            if ((alpha - i + n) % n > (j - i + n) % n) std::swap(alpha, beta);
            const long key1 = (alpha - i + n) % n;
            const long key2 = (i - beta + n) % n;
            if (!found || key1 < best_key1 || (key1 == best_key1 && key2 < best_key2)) {
                found = true;
                best = a;
                best_key1 = key1;
                best_key2 = key2;
            }
        }
        assert(found);
        return best;
    }

    QuadInt weight(int i, int j) {
        if (i == j) return QuadInt(0);
        if (auto& m = slot(i, j)) return *m;
        QuadInt w;
        if (is_boundary(Arc(i, j), n) || d.has_arc(Arc(i, j))) {
            w = QuadInt(1);
        } else if (auto face_w = common_face_weight(i, j)) {
            w = std::move(*face_w);
        } else {
            // Resolve through a crossing arc of weight 1; each sub-arc
            // crosses strictly fewer dissection arcs.
            const Arc c = nearest_crossing(i, j);
            w = weight(i, c.u) * weight(j, c.v) + weight(i, c.v) * weight(j, c.u);
        }
        slot(i, j) = w;
        slot(j, i) = w;
        return w;
    }
};

}  // namespace

FriezeTable frieze_from_dissection(const Dissection& d) {
    if (!is_tri_quad(d)) throw NotTriQuad("frieze_from_dissection: face sizes must be 3 or 4");
    FriezeBuilder builder(d);
    FriezeTable t(d.n());
    for (int i = 0; i < d.n(); ++i) {
        for (int j = i + 1; j < d.n(); ++j) {
            t.set(i, j, builder.weight(i, j));
        }
    }
    return t;
}

std::optional<FriezeViolation> verify_frieze(const FriezeTable& t) {
    const int n = t.n();
    using Kind = FriezeViolation::Kind;
    for (int i = 0; i < n; ++i) {
        if (!t.at(i, i).is_zero()) return FriezeViolation{Kind::Diagonal, i, i, 0, 0};
        if (t.at(i, (i + 1) % n) != QuadInt(1)) {
            return FriezeViolation{Kind::Boundary, i, (i + 1) % n, 0, 0};
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (t.at(i, j).is_zero()) return FriezeViolation{Kind::Zero, i, j, 0, 0};
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            const Arc x(i, j);
            if (is_boundary(x, n)) continue;
            for (int k = i; k < n; ++k) {
                for (int l = k + 2; l < n; ++l) {
                    const Arc y(k, l);
                    if (is_boundary(y, n) || !(x < y) || !crosses(x, y, n)) continue;
                    const QuadInt lhs = t.at(i, j) * t.at(k, l);
                    const QuadInt rhs = t.at(i, l) * t.at(j, k) + t.at(i, k) * t.at(j, l);
                    if (lhs != rhs) return FriezeViolation{Kind::Ptolemy, i, j, k, l};
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<std::vector<QuadInt>> to_frieze_pattern(const FriezeTable& t) {
    const int n = t.n();
    std::vector<std::vector<QuadInt>> rows(n + 1);
    for (int r = 0; r <= n; ++r) {
        rows[r].reserve(n);
        for (int i = 0; i < n; ++i) {
            rows[r].push_back(t.at(i, (i + r) % n));
        }
    }
    return rows;
}

FriezeTable from_frieze_pattern(const std::vector<std::vector<QuadInt>>& rows) {
    const int n = static_cast<int>(rows.size()) - 1;
    if (n < 3) throw std::invalid_argument("pattern needs at least 4 rows");
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n) {
            throw std::invalid_argument("every pattern row must hold one period of n entries");
        }
    }

    auto entry = [&](int r, long i) -> const QuadInt& { return rows[r][((i % n) + n) % n]; };

    for (int i = 0; i < n; ++i) {
        if (!entry(0, i).is_zero()) throw DiamondViolation("row 0 must be zero", 0, i);
        if (!entry(n, i).is_zero()) throw DiamondViolation("row n must be zero", n, i);
        if (entry(1, i) != QuadInt(1)) throw DiamondViolation("row 1 must be one", 1, i);
        if (entry(n - 1, i) != QuadInt(1)) throw DiamondViolation("row n-1 must be one", n - 1, i);
    }
    for (int r = 0; r <= n; ++r) {
        for (int i = 0; i < n; ++i) {
            if (entry(r, i) != entry(n - r, i + r)) {
                throw DiamondViolation("glide symmetry violated", r, i);
            }
        }
    }
    // Diamond around top entry m_{i,i+r}: left m_{i-1,i+r}, right m_{i,i+r+1},
    // bottom m_{i-1,i+r+1}; left*right - top*bottom = 1.
    for (int r = 0; r + 2 <= n; ++r) {
        for (int i = 0; i < n; ++i) {
            const QuadInt lhs = entry(r + 1, i - 1) * entry(r + 1, i) -
                                entry(r, i) * entry(r + 2, i - 1);
            if (lhs != QuadInt(1)) throw DiamondViolation("diamond condition violated", r, i);
        }
    }

    FriezeTable t(n);
    for (int r = 1; r < n; ++r) {
        for (int i = 0; i < n; ++i) {
            t.set(i, (i + r) % n, rows[r][i]);
        }
    }
    return t;
}

FriezeClasses classify(const FriezeTable& t) {
    const QuadInt one(1);
    FriezeClasses c{true, true};
    for (int i = 0; i < t.n(); ++i) {
        for (int j = i + 1; j < t.n(); ++j) {
            const QuadInt& w = t.at(i, j);
            if (w.compare(one) < 0) c.ge1 = false;
            if (w.a().sign() < 0 || w.b().sign() < 0) c.nonneg_coeffs = false;
        }
    }
    return c;
}

}  // namespace pellfrieze
