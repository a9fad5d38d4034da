#include "seqsel/tensor.hpp"

#include <cmath>
#include <string>

namespace seqsel {

void LexicalProbMap::validate() const {
  if (values.frames() == 0 || values.regions() == 0 || values.channels() == 0) {
    fail(ErrorCode::shape_mismatch, "probability map must have T >= 1, G >= 1, V >= 1");
  }
  if (grid.count() != values.regions()) {
    fail(ErrorCode::shape_mismatch,
         "grid " + std::to_string(grid.rows) + "x" + std::to_string(grid.cols) +
             " does not cover " + std::to_string(values.regions()) + " regions per frame");
  }
  const auto flat = values.flat();
  for (std::size_t i = 0; i < flat.size(); ++i) {
    const double v = flat[i];
    if (!(v >= 0.0 && v <= 1.0)) {
      fail(ErrorCode::range, "probability value " + std::to_string(v) +
                                 " out of [0,1] at flat offset " + std::to_string(i));
    }
  }
}

void RegionFeatureMap::normalize(double tol) {
  for (std::size_t f = 0; f < values.frames(); ++f) {
    for (std::size_t g = 0; g < values.regions(); ++g) {
      auto r = values.row(f, g);
      double sq = 0.0;
      for (double v : r) sq += v * v;
      const double norm = std::sqrt(sq);
      if (!std::isfinite(norm) || norm < 1e-8) {
        fail(ErrorCode::normalization,
             "feature vector at frame " + std::to_string(f) + " region " +
                 std::to_string(g) + " has norm " + std::to_string(norm) +
                 " and cannot be normalized");
      }
      if (std::abs(norm - 1.0) > tol) {
        for (double& v : r) v /= norm;
      }
    }
  }
}

void RegionFeatureMap::validate() const {
  if (values.frames() == 0 || values.regions() == 0 || values.channels() == 0) {
    fail(ErrorCode::shape_mismatch, "feature map must have T >= 1, G >= 1, d >= 1");
  }
  if (grid.count() != values.regions()) {
    fail(ErrorCode::shape_mismatch, "feature map grid does not cover its region axis");
  }
  const auto flat = values.flat();
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (!std::isfinite(flat[i])) {
      fail(ErrorCode::range, "non-finite feature value at flat offset " + std::to_string(i));
    }
  }
}

bool in_neighborhood(const GridShape& grid, std::size_t previous, std::size_t region) {
  const auto r0 = static_cast<long long>(grid.row_of(previous));
  const auto c0 = static_cast<long long>(grid.col_of(previous));
  const auto r1 = static_cast<long long>(grid.row_of(region));
  const auto c1 = static_cast<long long>(grid.col_of(region));
  return std::llabs(r1 - r0) <= 1 && std::llabs(c1 - c0) <= 1;
}

void RegionSequence::validate(const GridShape& grid) const {
  const std::size_t g = grid.count();
  for (std::size_t t = 0; t < regions.size(); ++t) {
    if (regions[t] >= g) {
      fail(ErrorCode::bounds, "region index " + std::to_string(regions[t]) +
                                  " out of grid at frame " + std::to_string(t));
    }
    if (t > 0 && !in_neighborhood(grid, regions[t - 1], regions[t])) {
      fail(ErrorCode::sequencing,
           "regions at frames " + std::to_string(t - 1) + " and " + std::to_string(t) +
               " are not grid neighbors");
    }
  }
}

}  // namespace seqsel
