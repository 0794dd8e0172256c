#include "denoise/denoiser.hpp"

#include <algorithm>
#include <cmath>

namespace airi {

Image Denoiser::jvp(const Image& x, const Image& tangent) const {
  if (!x.same_dims(tangent)) throw_invalid("jvp: tangent dimension mismatch");
  const double h = 1e-6 * (1.0 + linf_norm(x));
  Image xp = x, xm = x;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xp.pixels()[i] += h * tangent.pixels()[i];
    xm.pixels()[i] -= h * tangent.pixels()[i];
  }
  Image out = apply(xp) - apply(xm);
  for (double& v : out.pixels()) v /= 2.0 * h;
  return out;
}

Image Denoiser::vjp(const Image& x, const Image& cotangent) const {
  // symmetric-Jacobian fallback; exact for proximity operators of convex
  // functionals, which are gradients of their Moreau envelopes
  return jvp(x, cotangent);
}

ScaledDenoiser::ScaledDenoiser(std::shared_ptr<const Denoiser> base, double beta)
    : base_(std::move(base)), beta_(beta) {
  if (!base_) throw_invalid("scaled denoiser: null base");
  if (!(beta_ > 0.0)) throw_invalid("scaled denoiser: beta must be positive");
}

Image ScaledDenoiser::apply(const Image& x) const {
  Image scaled = (1.0 / beta_) * x;
  Image out = base_->apply(scaled);
  for (double& v : out.pixels()) v *= beta_;
  return out;
}

DenoiserShelf::DenoiserShelf(std::vector<Entry> entries) : entries_(std::move(entries)) {
  check_sorted();
}

void DenoiserShelf::add(double sigma, std::shared_ptr<const Denoiser> d) {
  entries_.push_back({sigma, std::move(d)});
  std::sort(entries_.begin(), entries_.end(),
            [](const Entry& a, const Entry& b) { return a.sigma < b.sigma; });
  check_sorted();
}

void DenoiserShelf::check_sorted() const {
  if (entries_.empty()) return;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!(entries_[i].sigma > 0.0) || !entries_[i].denoiser)
      throw_invalid("shelf entry needs sigma > 0 and a denoiser");
    if (i > 0 && !(entries_[i].sigma > entries_[i - 1].sigma))
      throw_invalid("shelf sigma values must be strictly increasing");
  }
}

std::vector<double> default_shelf_sigmas() {
  std::vector<double> sigmas(8);
  for (int k = 0; k < 8; ++k) sigmas[static_cast<std::size_t>(k)] = 2.5e-6 * std::exp2(k);
  return sigmas;
}

double heuristic_sigma(double eta, double norm_sq, double alpha) {
  if (!(eta > 0.0) || !(norm_sq > 0.0) || !(alpha > 0.0))
    throw_invalid("heuristic_sigma: eta, ||H||^2 and alpha must be positive");
  return eta / (alpha * std::sqrt(2.0 * norm_sq));
}

ShelfSelection select_denoiser(const DenoiserShelf& shelf, double sigma_heu, double alpha_tilde) {
  if (shelf.empty()) throw_invalid("select_denoiser: empty shelf");
  if (!(sigma_heu > 0.0)) throw_invalid("select_denoiser: sigma_heu must be positive");

  ShelfSelection sel;
  sel.index = 0;
  for (std::size_t i = 0; i < shelf.size(); ++i) {
    if (shelf.entry(i).sigma <= sigma_heu) sel.index = i;
  }
  if (shelf.entry(0).sigma > sigma_heu) {
    sel.index = 0;
    sel.clamped_low = true;
  }
  sel.sigma = shelf.entry(sel.index).sigma;
  sel.beta = alpha_tilde * sigma_heu / sel.sigma;
  sel.ratio_above_two = sigma_heu / sel.sigma > 2.0;
  return sel;
}

SoftThresholdProx::SoftThresholdProx(double lambda) : lambda_(lambda) {
  if (!(lambda >= 0.0)) throw_invalid("soft-threshold prox: lambda must be >= 0");
}

Image SoftThresholdProx::apply(const Image& x) const {
  Image out = x;
  for (double& v : out.pixels()) v = std::max(v - lambda_, 0.0);
  return out;
}

Image SoftThresholdProx::jvp(const Image& x, const Image& tangent) const {
  if (!x.same_dims(tangent)) throw_invalid("jvp: tangent dimension mismatch");
  Image out = tangent;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x.pixels()[i] > lambda_)) out.pixels()[i] = 0.0;
  return out;
}

Image SoftThresholdProx::vjp(const Image& x, const Image& cotangent) const {
  return jvp(x, cotangent);  // diagonal Jacobian
}

BoxProjection::BoxProjection(double hi) : hi_(hi) {}

Image BoxProjection::apply(const Image& x) const {
  Image out = x;
  for (double& v : out.pixels()) {
    v = std::max(v, 0.0);
    if (hi_ >= 0.0) v = std::min(v, hi_);
  }
  return out;
}

Image BoxProjection::jvp(const Image& x, const Image& tangent) const {
  if (!x.same_dims(tangent)) throw_invalid("jvp: tangent dimension mismatch");
  Image out = tangent;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double v = x.pixels()[i];
    const bool inside = v > 0.0 && (hi_ < 0.0 || v < hi_);
    if (!inside) out.pixels()[i] = 0.0;
  }
  return out;
}

Image BoxProjection::vjp(const Image& x, const Image& cotangent) const {
  return jvp(x, cotangent);
}

}  // namespace airi
