#pragma once

#include <string>
#include <vector>

#include "homacm/root_system.hpp"

namespace homacm {

/// mu = min_i a_{d_i} + 1; nu = max over minimizing i of (d_{i+1} - d_{i-1}) - 1,
/// with d_0 = 0 and d_{s+1} = n.
struct MuNu {
  int mu = 0;
  int nu = 0;

  bool operator==(const MuNu&) const = default;
};

MuNu mu_nu(LieType type, const std::vector<int>& I, const WeightVector& lambda);

/// Numerical sufficient condition for B, C, D with the weight concentrated on I
/// plus the block (d_{m-1}, d_m], 1 <= m <= s + 1. Throws InvalidInput when the
/// weight or the space does not have that shape.
bool sufficient_acm(LieType type, const std::vector<int>& I, int m, const WeightVector& lambda);

/// Printed iff criterion for the line bundle a1 L_{d1} + a2 L_{d2} on G/P_{d1,d2}.
/// For family A, n is the ambient dimension of F(d1, d2, n), i.e. rank + 1.
bool line_bundle_acm_closed(Family family, int n, int d1, int d2, long a1, long a2);

/// LieType carrying the two-step space of line_bundle_acm_closed.
LieType line_bundle_space(Family family, int n);

struct UniversalWeight {
  std::string name;
  WeightVector weight;
};

/// Highest weights of the graded pieces H_{d_i}/H_{d_{i-1}}, their duals and
/// H^perp_{d_s}/H_{d_s} (omitted for C with d_s = n). Convention lambda_0 = 0.
std::vector<UniversalWeight> universal_weights(LieType type, const std::vector<int>& I);

}  // namespace homacm
