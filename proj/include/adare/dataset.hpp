#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace adare {

using Vec = std::vector<double>;

struct Sample {
  Vec features;  // each component in [0, 1]
  int label = 0;
};

struct Dataset {
  std::vector<Sample> samples;
  int num_classes = 0;
  int feature_dim = 0;
  std::string provenance;  // "idx" or "synthetic"

  size_t size() const { return samples.size(); }
  bool empty() const { return samples.empty(); }
};

// Throws std::invalid_argument on dimension mismatch, out-of-range labels or
// features outside [0, 1].
void validate_dataset(const Dataset& data);

// Clamped isotropic-normal class blobs; the desk-scale stand-in for image data.
struct SyntheticSpec {
  int num_classes = 0;
  int feature_dim = 0;
  std::vector<Vec> class_means;      // one vector in [0,1]^d per class
  std::vector<double> class_spread;  // one positive spread per class
  int samples_per_class = 0;
  uint64_t seed = 0;
};

Dataset gen_synthetic(const SyntheticSpec& spec);

// IDX image/label pair (big-endian, magic 0x00000803 / 0x00000801).
// Pixel bytes are scaled to [0,1] by /255.
Dataset load_idx(const std::string& images_path, const std::string& labels_path);

struct SplitFractions {
  double train = 0.0;
  double heldout = 0.0;
  double test = 0.0;
};

struct Splits {
  Dataset train;
  Dataset heldout;
  Dataset test;
};

// Stratified per class with a seeded shuffle; the three parts are disjoint and
// cover the input, with per-class proportions within one sample of the
// requested fractions.
Splits stratified_split(const Dataset& data, const SplitFractions& fractions,
                        uint64_t seed);

}  // namespace adare
