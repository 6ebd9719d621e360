#pragma once

#include <span>
#include <vector>

namespace subspace_sets {

/// 1-based ranks; tied values share the mean of the positions they occupy.
std::vector<double> average_ranks(std::span<const double> values);

/// Pearson correlation. Throws InvalidInput on length mismatch or fewer than
/// two values, DegenerateInput when either side is constant.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Spearman's rho: Pearson correlation of average ranks.
double spearman(std::span<const double> xs, std::span<const double> ys);

}  // namespace subspace_sets
