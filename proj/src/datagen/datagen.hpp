#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "common/rng.hpp"
#include "core/image.hpp"

namespace airi {

/// Mixture weights for the procedural ground-truth generator: smooth
/// anisotropic blobs, compact point sources, and faint curved filaments.
struct GeneratorParams {
  int blobs_min = 2;
  int blobs_max = 6;
  int points_min = 1;
  int points_max = 3;
  int filaments_min = 0;
  int filaments_max = 2;
  double blob_sigma_frac_min = 0.05;  // blob half-width as a fraction of the image side
  double blob_sigma_frac_max = 0.16;
  double blob_amp_min = 0.02;
  double blob_amp_max = 0.6;
  double point_amp_min = 0.3;
  double point_amp_max = 1.0;
  double filament_amp = 0.05;
};

struct DatasetSpec {
  int n_images = 20;
  int width = 64;
  int height = 64;
  GeneratorParams gen;
  std::uint64_t seed = 0;
  double tau = 0.01;  // background soft-threshold level, relative to peak

  void validate() const;
};

/// Deterministic under (seed, image index): parallel and serial generation
/// produce identical datasets. Outputs are soft-thresholded at tau and
/// peak-normalized to 1.
std::vector<Image> synth_groundtruth(const DatasetSpec& spec);

/// Faintest-feature level: the 1st percentile (nearest rank) of the pooled
/// nonzero pixel intensities of the dataset.
double sigma0_of(const std::vector<Image>& dataset);

struct ExponentiatedDataset {
  std::vector<Image> images;
  double a = 0.0;  // exponentiation factor solved from (sigma, sigma0)
};

/// Maps every image through rexp_a with a chosen so the faintest dataset
/// feature lands at the training noise level sigma.
ExponentiatedDataset exponentiate_dataset(const std::vector<Image>& dataset, double sigma);

/// Uniform image index, uniform valid crop origin, optional 8-fold dihedral
/// augmentation.
Image sample_patch(const std::vector<Image>& dataset, int patch_side, Rng& rng,
                   bool augment = true);

// Dataset directories: one AIRIIMG1 file per image plus manifest.txt with
// "filename crc32" lines. Loading verifies checksums when the manifest exists.
void save_dataset_dir(const std::vector<Image>& images, const std::string& dir);
std::vector<Image> load_dataset_dir(const std::string& dir);

}  // namespace airi
