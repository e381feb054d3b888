#pragma once

#include "pellfrieze/quadint.hpp"

namespace pellfrieze::sequences {

/// Same-side stack weight s_n: s_0 = 0, s_1 = 1, s_n = sqrt(2) s_{n-1} + d_{n-1}.
QuadInt s(int n);

/// Cross-side stack weight d_n: d_0 = 1, d_1 = sqrt(2), d_n = sqrt(2) d_{n-1} + s_{n-1}.
QuadInt d(int n);

/// ell_n = (1 + sqrt(2))^n.
QuadInt ell(int n);

/// Convergent a_n/b_n of sqrt(2) = [1,2,2,...] with n-1 entries 2.
/// a_0/b_0 = 1/0 (the standard (-1)-th convergent), a_1 = b_1 = 1, then
/// a_n = a_{n-1} + 2 b_{n-1}, b_n = a_{n-1} + b_{n-1}.
struct ConvergentPair {
    BigInt a;
    BigInt b;
};
ConvergentPair convergent(int n);

/// Pell numbers: Q_0 = 0, Q_1 = 1, Q_k = 2 Q_{k-1} + Q_{k-2}.
BigInt pell(int k);

}  // namespace pellfrieze::sequences
