#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "core/image.hpp"

namespace airi {

/// Denoiser contract: deterministic, dimension-preserving, nonnegative output.
/// Differentiable denoisers expose exact jvp/vjp; the rest fall back to
/// finite differences, with vjp assuming a symmetric Jacobian (valid for the
/// proximity-operator denoisers this fallback serves).
class Denoiser {
public:
  virtual ~Denoiser() = default;

  virtual Image apply(const Image& x) const = 0;

  /// Training noise level for peak-1 images; 0 when not applicable.
  virtual double sigma_train() const { return 0.0; }

  /// Training seed, recorded for ensemble provenance; 0 when not applicable.
  virtual std::uint64_t seed() const { return 0; }

  virtual bool differentiable() const { return false; }

  virtual Image jvp(const Image& x, const Image& tangent) const;
  virtual Image vjp(const Image& x, const Image& cotangent) const;
};

/// Eq.-style rescaling wrapper: apply(x) = beta * base(x / beta). Brings the
/// solver iterate into the peak-1 regime the base denoiser was trained for.
class ScaledDenoiser {
public:
  ScaledDenoiser(std::shared_ptr<const Denoiser> base, double beta);

  Image apply(const Image& x) const;
  double beta() const { return beta_; }
  const Denoiser& base() const { return *base_; }

private:
  std::shared_ptr<const Denoiser> base_;
  double beta_;
};

/// Ordered (sigma_train, denoiser) pairs, sigma strictly increasing.
class DenoiserShelf {
public:
  struct Entry {
    double sigma;
    std::shared_ptr<const Denoiser> denoiser;
  };

  DenoiserShelf() = default;
  explicit DenoiserShelf(std::vector<Entry> entries);

  void add(double sigma, std::shared_ptr<const Denoiser> d);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Entry& entry(std::size_t i) const { return entries_[i]; }
  const std::vector<Entry>& entries() const { return entries_; }

private:
  void check_sorted() const;
  std::vector<Entry> entries_;
};

/// The 8 training noise levels of the default shelf (consecutive ratio 2).
std::vector<double> default_shelf_sigmas();

/// sigma_heu = eta / (alpha * sqrt(2 * ||H||^2)), the inverse target dynamic
/// range of the measurements.
double heuristic_sigma(double eta, double norm_sq, double alpha);

struct ShelfSelection {
  std::size_t index = 0;
  double sigma = 0.0;
  double beta = 0.0;          // alpha_tilde * sigma_heu / sigma
  bool clamped_low = false;   // sigma_heu below the smallest entry
  bool ratio_above_two = false;
};

/// Picks the entry with the largest sigma <= sigma_heu (clamping to the
/// smallest entry below the shelf, flagged) and the matching rescaling beta.
ShelfSelection select_denoiser(const DenoiserShelf& shelf, double sigma_heu, double alpha_tilde);

/// prox of lambda*||.||_1 restricted to nonnegative images: max(x - lambda, 0).
/// Exact diagonal Jacobian; used as a convergence oracle in solver tests.
class SoftThresholdProx final : public Denoiser {
public:
  explicit SoftThresholdProx(double lambda);
  Image apply(const Image& x) const override;
  bool differentiable() const override { return true; }
  Image jvp(const Image& x, const Image& tangent) const override;
  Image vjp(const Image& x, const Image& cotangent) const override;
  double lambda() const { return lambda_; }

private:
  double lambda_;
};

/// Projection onto the box [0, hi] (hi < 0 disables the upper bound).
class BoxProjection final : public Denoiser {
public:
  explicit BoxProjection(double hi = -1.0);
  Image apply(const Image& x) const override;
  bool differentiable() const override { return true; }
  Image jvp(const Image& x, const Image& tangent) const override;
  Image vjp(const Image& x, const Image& cotangent) const override;

private:
  double hi_;
};

}  // namespace airi
