#ifndef SEQSEL_TENSOR_HPP
#define SEQSEL_TENSOR_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "seqsel/common.hpp"

namespace seqsel {

// Row-major frames x regions x channels tensor of doubles. Channels are
// vocabulary words for probability maps and feature components for region
// feature maps.
class Tensor3 {
 public:
  Tensor3() = default;
  Tensor3(std::size_t frames, std::size_t regions, std::size_t channels, double fill = 0.0)
      : frames_(frames),
        regions_(regions),
        channels_(channels),
        data_(frames * regions * channels, fill) {}

  std::size_t frames() const { return frames_; }
  std::size_t regions() const { return regions_; }
  std::size_t channels() const { return channels_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double at(std::size_t f, std::size_t g, std::size_t c) const {
    return data_[(f * regions_ + g) * channels_ + c];
  }
  double& at(std::size_t f, std::size_t g, std::size_t c) {
    return data_[(f * regions_ + g) * channels_ + c];
  }

  // Contiguous channel vector of one region.
  std::span<const double> row(std::size_t f, std::size_t g) const {
    return {data_.data() + (f * regions_ + g) * channels_, channels_};
  }
  std::span<double> row(std::size_t f, std::size_t g) {
    return {data_.data() + (f * regions_ + g) * channels_, channels_};
  }

  std::span<const double> flat() const { return data_; }
  std::span<double> flat() { return data_; }

  friend bool operator==(const Tensor3& a, const Tensor3& b) {
    return a.frames_ == b.frames_ && a.regions_ == b.regions_ &&
           a.channels_ == b.channels_ && a.data_ == b.data_;
  }

 private:
  std::size_t frames_ = 0;
  std::size_t regions_ = 0;
  std::size_t channels_ = 0;
  std::vector<double> data_;
};

struct GridShape {
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t count() const { return rows * cols; }
  std::size_t row_of(std::size_t region) const { return region / cols; }
  std::size_t col_of(std::size_t region) const { return region % cols; }
  std::size_t region_at(std::size_t r, std::size_t c) const { return r * cols + c; }

  friend bool operator==(const GridShape&, const GridShape&) = default;
};

// Per-frame, per-region word probabilities p[f][g][w] in [0,1].
struct LexicalProbMap {
  GridShape grid;
  Tensor3 values;  // frames x grid.count() x vocab_size

  std::size_t frames() const { return values.frames(); }
  std::size_t regions_per_frame() const { return values.regions(); }
  std::size_t vocab_size() const { return values.channels(); }

  // Enforces the type invariants: nonempty dims, grid consistent with the
  // region axis, all values finite and inside [0,1].
  void validate() const;
};

// Per-frame, per-region feature vectors, unit Euclidean norm.
struct RegionFeatureMap {
  GridShape grid;
  Tensor3 values;  // frames x grid.count() x dim

  std::size_t frames() const { return values.frames(); }
  std::size_t regions_per_frame() const { return values.regions(); }
  std::size_t dim() const { return values.channels(); }

  // Checks shape/finiteness and renormalizes any region vector whose norm
  // strays from 1 by more than `tol`. Vectors already within `tol` keep
  // their exact bits so that a save/load cycle stays byte-identical.
  // A vector with norm below 1e-8 cannot be normalized and is an error.
  void normalize(double tol = 1e-4);
  void validate() const;
};

// One region per frame, frames implicitly 0..size-1. Consecutive regions
// must lie within the 3x3 grid neighborhood of each other.
struct RegionSequence {
  std::vector<std::uint32_t> regions;

  std::size_t size() const { return regions.size(); }
  bool empty() const { return regions.empty(); }

  void validate(const GridShape& grid) const;

  friend bool operator==(const RegionSequence&, const RegionSequence&) = default;
};

// True when `region` lies in the 3x3 neighborhood of `previous` (grid
// coordinates differ by at most 1 in each axis).
bool in_neighborhood(const GridShape& grid, std::size_t previous, std::size_t region);

}  // namespace seqsel

#endif  // SEQSEL_TENSOR_HPP
