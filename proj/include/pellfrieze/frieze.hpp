#pragma once

#include "pellfrieze/geometry.hpp"
#include "pellfrieze/quadint.hpp"

#include <optional>
#include <vector>

namespace pellfrieze {

struct UnsupportedP : std::domain_error {
    using std::domain_error::domain_error;
};

struct DiamondViolation : std::runtime_error {
    DiamondViolation(std::string what, int row, int col)
        : std::runtime_error(std::move(what)), row(row), col(col) {}
    int row;
    int col;
};

/// Symmetric weight map over vertex pairs of an n-gon: w(i,i) = 0, boundary
/// pairs weigh 1. Immutable in normal use once filled.
class FriezeTable {
public:
    explicit FriezeTable(int n);

    int n() const { return n_; }
    const QuadInt& at(int i, int j) const { return w_[index(i, j)]; }
    void set(int i, int j, QuadInt v);

private:
    size_t index(int i, int j) const;
    int n_;
    std::vector<QuadInt> w_;
};

/// The Euclidean frieze L_p(i,j) = U_{|j-i|-1}(lambda_p); only p = 3 and
/// p = 4 keep values inside Z[sqrt(2)].
FriezeTable euclidean_frieze(int p);

/// Frieze of a triangle/quadrilateral dissection. Pairs on a common face get
/// Chebyshev weights; every other pair is resolved through a crossing
/// dissection arc by the Ptolemy relation (the arc has weight 1). The result
/// is independent of the resolution choice; the implementation always picks
/// the crossed arc nearest to the first endpoint.
FriezeTable frieze_from_dissection(const Dissection& d);

struct FriezeViolation {
    enum class Kind { Diagonal, Boundary, Zero, Ptolemy };
    Kind kind;
    int i, j, k, l;
};

/// Checks frieze conditions 1-4 exactly, including the Ptolemy relation on
/// every crossing pair of diagonals. Returns the first violation, if any.
std::optional<FriezeViolation> verify_frieze(const FriezeTable& t);

/// Frieze pattern of width n+1: row r holds one period of m_{i,i+r} for
/// i = 0..n-1, r = 0..n.
std::vector<std::vector<QuadInt>> to_frieze_pattern(const FriezeTable& t);

/// Inverse of to_frieze_pattern. Validates the boundary rows, the glide
/// consistency m_{i,j} = m_{j,i+n} and every diamond; throws
/// DiamondViolation (with row/column) on the first failure.
FriezeTable from_frieze_pattern(const std::vector<std::vector<QuadInt>>& rows);

struct FriezeClasses {
    bool ge1;            // every entry with i < j is >= 1 in the real order
    bool nonneg_coeffs;  // every entry has a >= 0 and b >= 0
};

FriezeClasses classify(const FriezeTable& t);

}  // namespace pellfrieze
