#pragma once

#include <span>
#include <vector>

namespace vmg {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes from Newton iteration on the three-term Legendre recurrence.
/// n >= 1. Nodes are returned in increasing order.
GaussLegendreRule gauss_legendre(int n);

/// Pairwise (cascade) summation; the result depends only on the order of
/// `terms`, not on how callers split the work.
double pairwise_sum(std::span<const double> terms) noexcept;

}  // namespace vmg
