#include "rimodel/operator.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>

#include "common/rng.hpp"

namespace airi {

namespace {

std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}

double bessel_i0(double x) {
  // power series; converges quickly for the shape parameters in use
  const double x2 = x * x / 4.0;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 64; ++k) {
    term *= x2 / (static_cast<double>(k) * k);
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return sum;
}

inline int wrap_index(long k, int n) {
  long m = k % n;
  if (m < 0) m += n;
  return static_cast<int>(m);
}

}  // namespace

void KernelSpec::validate() const {
  if (support < 1 || support > 15 || support % 2 == 0)
    throw_invalid("kernel support must be odd and within [1, 15]");
  if (type == Type::nearest && support != 1)
    throw_invalid("nearest kernel requires support 1");
}

double default_kaiser_beta(int support, double padding_factor) {
  return M_PI * support * (padding_factor - 0.5) / padding_factor;
}

double kaiser_window(double t, int support, double beta) {
  const double s = 2.0 * t / support;
  const double arg = 1.0 - s * s;
  if (arg < 0.0) return 0.0;
  return bessel_i0(beta * std::sqrt(arg)) / bessel_i0(beta);
}

double kaiser_window_ft(double nu, int support, double beta) {
  // closed form of the transform of the window above; sinh branch inside the
  // main lobe, sinc branch outside
  const double p = M_PI * support * nu;
  const double d = beta * beta - p * p;
  double shape;
  if (d > 1e-12) {
    const double g = std::sqrt(d);
    shape = std::sinh(g) / g;
  } else if (d < -1e-12) {
    const double g = std::sqrt(-d);
    shape = std::sin(g) / g;
  } else {
    shape = 1.0;
  }
  return support * shape / bessel_i0(beta);
}

struct RIOperator::Plans {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;

  Plans(int hp, int wp) {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    std::vector<cplx> dummy(static_cast<std::size_t>(hp) * wp);
    auto* p = reinterpret_cast<fftw_complex*>(dummy.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fwd = fftw_plan_dft_2d(hp, wp, p, p, FFTW_FORWARD, flags);
    bwd = fftw_plan_dft_2d(hp, wp, p, p, FFTW_BACKWARD, flags);
  }

  ~Plans() {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    if (fwd) fftw_destroy_plan(fwd);
    if (bwd) fftw_destroy_plan(bwd);
  }
};

RIOperator::RIOperator(UVCoverage uv, int width, int height, double padding_factor,
                       KernelSpec kernel)
    : uv_(std::move(uv)), kernel_(kernel), w_(width), h_(height), padding_(padding_factor) {
  uv_.validate();
  kernel_.validate();
  if (w_ < 1 || h_ < 1) throw_invalid("operator image dimensions must be positive");
  if (!(padding_ >= 1.0)) throw_invalid("padding factor must be at least 1");
  wp_ = std::max(w_, static_cast<int>(std::lround(w_ * padding_)));
  hp_ = std::max(h_, static_cast<int>(std::lround(h_ * padding_)));
  const int j = kernel_.support;
  if (j > wp_ || j > hp_) throw_invalid("kernel support exceeds padded grid");
  if (kernel_.type == KernelSpec::Type::kaiser_bessel && kernel_.beta <= 0.0)
    kernel_.beta = default_kaiser_beta(j, padding_);

  // de-apodization correction; identity for the nearest kernel so that
  // on-grid sampling reduces to plain FFT coefficients
  corr_.assign(static_cast<std::size_t>(w_) * h_, 1.0);
  if (kernel_.type == KernelSpec::Type::kaiser_bessel) {
    std::vector<double> cu(static_cast<std::size_t>(w_)), cv(static_cast<std::size_t>(h_));
    for (int c = 0; c < w_; ++c)
      cu[static_cast<std::size_t>(c)] =
          1.0 / kaiser_window_ft(static_cast<double>(c - w_ / 2) / wp_, j, kernel_.beta);
    for (int r = 0; r < h_; ++r)
      cv[static_cast<std::size_t>(r)] =
          1.0 / kaiser_window_ft(static_cast<double>(r - h_ / 2) / hp_, j, kernel_.beta);
    for (int r = 0; r < h_; ++r)
      for (int c = 0; c < w_; ++c)
        corr_[static_cast<std::size_t>(r) * w_ + c] =
            cv[static_cast<std::size_t>(r)] * cu[static_cast<std::size_t>(c)];
  }

  // precompute separable interpolation taps per sample
  const std::size_t m = uv_.count();
  tap_iu_.resize(m * j);
  tap_iv_.resize(m * j);
  tap_wu_.resize(m * j);
  tap_wv_.resize(m * j);
  for (std::size_t s = 0; s < m; ++s) {
    const double fu = uv_.samples[s].u * wp_ / (2.0 * M_PI);
    const double fv = uv_.samples[s].v * hp_ / (2.0 * M_PI);
    const long su = static_cast<long>(std::ceil(fu - 0.5 * j));
    const long sv = static_cast<long>(std::ceil(fv - 0.5 * j));
    for (int t = 0; t < j; ++t) {
      const double tu = fu - static_cast<double>(su + t);
      const double tv = fv - static_cast<double>(sv + t);
      double wu, wv;
      if (kernel_.type == KernelSpec::Type::nearest) {
        wu = 1.0;
        wv = 1.0;
      } else {
        wu = kaiser_window(tu, j, kernel_.beta);
        wv = kaiser_window(tv, j, kernel_.beta);
      }
      if (!std::isfinite(wu) || !std::isfinite(wv))
        throw_invalid("non-finite interpolation coefficient");
      tap_iu_[s * j + t] = wrap_index(su + t, wp_);
      tap_iv_[s * j + t] = wrap_index(sv + t, hp_);
      tap_wu_[s * j + t] = wu;
      tap_wv_[s * j + t] = wv;
    }
  }

  plans_ = std::make_unique<Plans>(hp_, wp_);
}

RIOperator::~RIOperator() = default;

cvec RIOperator::forward(const Image& x) const {
  if (x.width() != w_ || x.height() != h_) throw_invalid("forward: image dimension mismatch");
  const std::size_t np = static_cast<std::size_t>(wp_) * hp_;
  std::vector<cplx> grid(np, cplx(0.0, 0.0));
  for (int r = 0; r < h_; ++r) {
    const int pr = wrap_index(r - h_ / 2, hp_);
    for (int c = 0; c < w_; ++c) {
      const int pc = wrap_index(c - w_ / 2, wp_);
      grid[static_cast<std::size_t>(pr) * wp_ + pc] =
          x(r, c) * corr_[static_cast<std::size_t>(r) * w_ + c];
    }
  }
  auto* buf = reinterpret_cast<fftw_complex*>(grid.data());
  fftw_execute_dft(plans_->fwd, buf, buf);
  const double scale = 1.0 / std::sqrt(static_cast<double>(np));

  const int j = kernel_.support;
  const std::size_t m = uv_.count();
  cvec out(m);
  for (std::size_t s = 0; s < m; ++s) {
    cplx acc(0.0, 0.0);
    for (int tv = 0; tv < j; ++tv) {
      const std::size_t row = static_cast<std::size_t>(tap_iv_[s * j + tv]) * wp_;
      cplx rowacc(0.0, 0.0);
      for (int tu = 0; tu < j; ++tu)
        rowacc += tap_wu_[s * j + tu] * grid[row + static_cast<std::size_t>(tap_iu_[s * j + tu])];
      acc += tap_wv_[s * j + tv] * rowacc;
    }
    out[s] = acc * scale;
  }
  return out;
}

RIOperator::AdjointDiagnostic RIOperator::adjoint_with_diagnostic(const cvec& v) const {
  if (v.size() != uv_.count()) throw_invalid("adjoint: visibility count mismatch");
  const std::size_t np = static_cast<std::size_t>(wp_) * hp_;
  std::vector<cplx> grid(np, cplx(0.0, 0.0));
  const int j = kernel_.support;
  for (std::size_t s = 0; s < v.size(); ++s) {
    for (int tv = 0; tv < j; ++tv) {
      const std::size_t row = static_cast<std::size_t>(tap_iv_[s * j + tv]) * wp_;
      const cplx rv = tap_wv_[s * j + tv] * v[s];
      for (int tu = 0; tu < j; ++tu)
        grid[row + static_cast<std::size_t>(tap_iu_[s * j + tu])] += tap_wu_[s * j + tu] * rv;
    }
  }
  auto* buf = reinterpret_cast<fftw_complex*>(grid.data());
  fftw_execute_dft(plans_->bwd, buf, buf);
  const double scale = 1.0 / std::sqrt(static_cast<double>(np));

  AdjointDiagnostic out{Image(w_, h_), 0.0};
  double imag_sq = 0.0;
  for (int r = 0; r < h_; ++r) {
    const int pr = wrap_index(r - h_ / 2, hp_);
    for (int c = 0; c < w_; ++c) {
      const int pc = wrap_index(c - w_ / 2, wp_);
      const cplx val = grid[static_cast<std::size_t>(pr) * wp_ + pc] * scale *
                       corr_[static_cast<std::size_t>(r) * w_ + c];
      out.image(r, c) = val.real();
      imag_sq += val.imag() * val.imag();
    }
  }
  out.imag_residual_norm = std::sqrt(imag_sq);
  return out;
}

Image RIOperator::adjoint(const cvec& v) const { return adjoint_with_diagnostic(v).image; }

std::vector<std::pair<std::size_t, double>> RIOperator::interp_row(std::size_t sample) const {
  if (sample >= uv_.count()) throw_invalid("interp_row: sample index out of range");
  const int j = kernel_.support;
  std::vector<std::pair<std::size_t, double>> row;
  row.reserve(static_cast<std::size_t>(j) * j);
  for (int tv = 0; tv < j; ++tv)
    for (int tu = 0; tu < j; ++tu)
      row.emplace_back(
          static_cast<std::size_t>(tap_iv_[sample * j + tv]) * wp_ +
              static_cast<std::size_t>(tap_iu_[sample * j + tu]),
          tap_wv_[sample * j + tv] * tap_wu_[sample * j + tu]);
  return row;
}

RIOperator build_operator(const UVCoverage& uv, int width, int height, double padding_factor,
                          KernelSpec kernel) {
  return RIOperator(uv, width, height, padding_factor, kernel);
}

double operator_norm(LinearOperator& op, double tol, int max_iter) {
  if (!(tol > 0.0)) throw_invalid("operator_norm: tolerance must be positive");
  Rng rng(0x9d2c5680ull);
  Image x(op.width(), op.height());
  for (double& p : x.pixels()) p = rng.normal();
  double nx = l2_norm(x);
  if (nx == 0.0) nx = 1.0;
  for (double& p : x.pixels()) p /= nx;

  double lambda = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    Image y = op.adjoint(op.forward(x));
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) rayleigh += x.pixels()[i] * y.pixels()[i];
    const double ny = l2_norm(y);
    if (ny == 0.0) {
      op.set_norm_sq(0.0);
      return 0.0;
    }
    for (double& p : y.pixels()) p /= ny;
    x = std::move(y);
    if (it > 0 && std::abs(rayleigh - lambda) <= tol * std::abs(rayleigh)) {
      op.set_norm_sq(rayleigh);
      return rayleigh;
    }
    lambda = rayleigh;
  }
  throw ConvergenceError("operator_norm: power iteration did not converge", lambda);
}

}  // namespace airi
