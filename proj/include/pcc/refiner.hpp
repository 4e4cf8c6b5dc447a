/*
Copyright 2026 The pcc Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS-IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef PCC_REFINER_HPP_
#define PCC_REFINER_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pcc/geometry.hpp"
#include "pcc/metrics.hpp"
#include "pcc/nn.hpp"
#include "pcc/partfilter.hpp"
#include "pcc/pointnet.hpp"

namespace pcc {

inline constexpr std::size_t kPointHidden1 = 256;
inline constexpr std::size_t kPointHidden2 = 128;  // f_point width
inline constexpr std::size_t kMixHidden = 64;
inline constexpr std::size_t kDefaultFusionDim = 293;  // 3+128+128+32+2
inline constexpr std::size_t kDefaultTiles = 2;        // upsampling rate R

// Per-point concatenation [xyz | f_partial | f_recon | f_pixel | f_grid],
// stored as a dense row-major count x width matrix. Global features repeat
// on every row; per-point features index by row.
struct FusionFeature {
  std::size_t count = 0;
  std::size_t width = 0;
  std::vector<double> rows;

  const double* row(std::size_t i) const { return &rows[i * width]; }
  double* row(std::size_t i) { return &rows[i * width]; }
};

FusionFeature assemble_fusion(
    const PointCloud& coarse, const std::vector<double>& f_partial,
    const std::vector<double>& f_recon,
    const std::vector<std::vector<double>>& f_pixel,
    const std::vector<std::array<double, 2>>& f_grid);

// R x n x 3 displacement field, tile-major.
struct OffsetField {
  std::size_t tiles = 0;
  std::size_t count = 0;
  std::vector<Point3> offsets;

  OffsetField() = default;
  OffsetField(std::size_t t, std::size_t n)
      : tiles(t), count(n), offsets(t * n) {}

  const Point3& at(std::size_t tile, std::size_t i) const {
    return offsets[tile * count + i];
  }
  Point3& at(std::size_t tile, std::size_t i) {
    return offsets[tile * count + i];
  }
};

// Offset predictor: a shared per-point stack produces f_point, each point is
// tiled R times with a learned per-tile code (tiling alone would leave the
// copies identical), a per-tile mixing layer sees all R tiles of a point
// jointly (kernel width R across the tile axis), and a shared linear head
// emits 3 values per (tile, point).
struct PredictorParams {
  std::size_t fusion_dim = kDefaultFusionDim;
  std::size_t tiles = kDefaultTiles;
  Linear point1{kDefaultFusionDim, kPointHidden1};
  Linear point2{kPointHidden1, kPointHidden2};
  std::vector<std::vector<double>> tile_codes;  // tiles x kPointHidden2
  std::vector<Linear> mix;  // tiles entries, each (tiles*kPointHidden2) -> 64
  Linear head{kMixHidden, 3};

  static PredictorParams seeded(std::uint64_t seed,
                                std::size_t fusion_dim = kDefaultFusionDim,
                                std::size_t tiles = kDefaultTiles);
  static PredictorParams zeros_like(const PredictorParams& other);

  std::size_t param_count() const;
  // Flat parameter indexing across all tensors, used by the finite
  // difference probes and the SGD update.
  double& flat(std::size_t index);
  double flat(std::size_t index) const;
};

// Intermediate activations of one forward pass, kept for backprop.
struct PredictorTrace {
  std::vector<double> pre1, act1, pre2, fpoint;
  std::vector<double> z;             // n x (tiles * kPointHidden2)
  std::vector<double> premix, amix;  // n x tiles x kMixHidden
};

OffsetField predict_offsets(const PredictorParams& params,
                            const FusionFeature& fusion, std::size_t tiles,
                            PredictorTrace* trace = nullptr);

// Scales the offsets of fine-part points by eps_mask on every tile; coarse
// part offsets pass through unchanged.
OffsetField apply_protective_mask(const OffsetField& offsets,
                                  const Partition& partition, double eps_mask);

// Concatenation over tiles of (coarse + offsets[tile]); |out| = R * n.
PointCloud refine(const PointCloud& coarse, const OffsetField& offsets);

struct TrainConfig {
  double learning_rate = 1e-3;  // desk-scale default; 1e-6 for full runs
  std::size_t batch_size = 1;
  std::size_t epochs = 200;
  LossWeights weights{1.0, 1e-4};
  double eps_mask = 0.01;
  std::size_t tiles = kDefaultTiles;
  double eps_target = 0.05;  // auction tolerance inside the loss
  std::uint64_t rng_seed = 0;

  void validate() const;
};

// Everything train_step needs for one record: fixed fusion inputs, the
// partition controlling the mask, and the target cloud of size R * n.
struct TrainSample {
  PointCloud coarse;
  FusionFeature fusion;
  Partition partition;
  PointCloud gt;
};

// One SGD step: forward (predict -> mask -> refine), combined loss, reverse
// pass through head/mixing/stack with the nearest-neighbor matchings and the
// assignment held fixed, then a gradient descent update. Returns the loss at
// the pre-update parameters.
double train_step(PredictorParams& params, const TrainSample& sample,
                  const TrainConfig& cfg);

// Central finite differences of the masked, matching-frozen loss on
// `probes` randomly chosen parameters; returns the max relative error
// against the analytic gradient.
double gradient_check(const PredictorParams& params, const TrainSample& sample,
                      const TrainConfig& cfg, double h,
                      std::size_t probes = 64, std::uint64_t probe_seed = 1);

// Full model bundle: the two fixed cloud encoders plus the trainable
// predictor; this is what checkpoints persist.
struct ModelParams {
  PointNetParams enc_partial;
  PointNetParams enc_recon;
  PredictorParams predictor;

  static ModelParams seeded(std::uint64_t seed,
                            std::size_t fusion_dim = kDefaultFusionDim,
                            std::size_t tiles = kDefaultTiles);
};

// Versioned binary checkpoint: magic, named shape table, little-endian
// float64 payload.
void save_checkpoint(const std::string& path, const ModelParams& model);
ModelParams load_checkpoint(const std::string& path);

}  // namespace pcc

#endif  // PCC_REFINER_HPP_
