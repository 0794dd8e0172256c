#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "core/image.hpp"
#include "rimodel/uvcoverage.hpp"

namespace airi {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

/// Interpolation kernel used to evaluate off-grid Fourier samples from the
/// oversampled FFT grid. "nearest" (J=1, no de-apodization) reduces the
/// operator to sampling FFT coefficients and is exact for on-grid uv points.
struct KernelSpec {
  enum class Type { nearest, kaiser_bessel };

  Type type = Type::kaiser_bessel;
  int support = 7;     // J, odd
  double beta = 0.0;   // Kaiser-Bessel shape; 0 selects the padding-based default

  static KernelSpec nearest() { return {Type::nearest, 1, 0.0}; }
  static KernelSpec kaiser(int support = 7) { return {Type::kaiser_bessel, support, 0.0}; }

  void validate() const;
};

/// Real-linear measurement operator mapping a real image to complex Fourier
/// samples. The adjoint is taken in the real sense: adjoint(v) returns
/// Re(A^H v), which realizes the conjugate symmetry of real-valued skies.
class LinearOperator {
public:
  virtual ~LinearOperator() = default;

  virtual int width() const = 0;
  virtual int height() const = 0;
  virtual std::size_t sample_count() const = 0;

  virtual cvec forward(const Image& x) const = 0;
  virtual Image adjoint(const cvec& v) const = 0;

  bool has_norm_sq() const { return norm_sq_.has_value(); }
  void set_norm_sq(double n) { norm_sq_ = n; }
  double norm_sq() const {
    if (!norm_sq_) throw Error(ErrorCode::config, "operator norm not estimated yet");
    return *norm_sq_;
  }

private:
  std::optional<double> norm_sq_;
};

/// Gridded non-uniform Fourier transform: de-apodize, zero-pad into an
/// oversampled grid (image centered, ifftshift layout), unitary 2-D FFT, then
/// per-sample separable kernel interpolation. Pixel (r, c) sits at image
/// coordinate (r - height/2, c - width/2), so a uv sample (u, v) measures
///   (1/sqrt(Np)) * sum x[r,c] * exp(-i*(u*(c - W/2) + v*(r - H/2))).
class RIOperator final : public LinearOperator {
public:
  RIOperator(UVCoverage uv, int width, int height, double padding_factor, KernelSpec kernel);
  ~RIOperator() override;

  RIOperator(const RIOperator&) = delete;
  RIOperator& operator=(const RIOperator&) = delete;

  int width() const override { return w_; }
  int height() const override { return h_; }
  std::size_t sample_count() const override { return uv_.count(); }

  cvec forward(const Image& x) const override;
  Image adjoint(const cvec& v) const override;

  struct AdjointDiagnostic {
    Image image;
    double imag_residual_norm = 0.0;
  };
  AdjointDiagnostic adjoint_with_diagnostic(const cvec& v) const;

  const UVCoverage& uv() const { return uv_; }
  const KernelSpec& kernel() const { return kernel_; }
  double padding_factor() const { return padding_; }
  int padded_width() const { return wp_; }
  int padded_height() const { return hp_; }

  /// Materialized interpolation row of one sample: J*J (grid index, coefficient)
  /// pairs into the padded grid, row-major index iv*padded_width + iu.
  std::vector<std::pair<std::size_t, double>> interp_row(std::size_t sample) const;

private:
  struct Plans;

  void spread_pixel_indices(int r, int c, std::size_t& padded_index) const;

  UVCoverage uv_;
  KernelSpec kernel_;
  int w_ = 0, h_ = 0;
  int wp_ = 0, hp_ = 0;
  double padding_ = 2.0;
  std::vector<double> corr_;      // de-apodization image, w_*h_
  std::vector<int> tap_iu_;       // per sample: J wrapped column indices
  std::vector<int> tap_iv_;       // per sample: J wrapped row indices
  std::vector<double> tap_wu_;    // per sample: J column weights
  std::vector<double> tap_wv_;    // per sample: J row weights
  std::unique_ptr<Plans> plans_;
};

RIOperator build_operator(const UVCoverage& uv, int width, int height,
                          double padding_factor = 2.0,
                          KernelSpec kernel = KernelSpec::kaiser());

/// Power iteration on H*H from a seeded random start; returns ||H||^2 and
/// caches it in the operator. Throws ConvergenceError (carrying the best
/// estimate) if the relative eigenvalue change fails to reach tol.
double operator_norm(LinearOperator& op, double tol = 1e-7, int max_iter = 2000);

/// Kaiser-Bessel window value and its continuous Fourier transform; exposed
/// for verification against quadrature.
double kaiser_window(double t, int support, double beta);
double kaiser_window_ft(double nu, int support, double beta);
double default_kaiser_beta(int support, double padding_factor);

}  // namespace airi
