#include "rimodel/measure.hpp"

#include <cmath>
#include <fstream>

#include "common/binio.hpp"
#include "common/rng.hpp"

namespace airi {

namespace {
constexpr char kMagic[9] = "AIRIVIS1";
}

void VisibilitySet::validate() const {
  uv.validate();
  if (data.size() != uv.count()) throw_invalid("visibility data length does not match coverage");
  if (!(eta >= 0.0) || !std::isfinite(eta)) throw_invalid("noise level eta must be finite and >= 0");
  for (const cplx& z : data)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw_invalid("non-finite visibility value");
}

VisibilitySet simulate_measurements(const RIOperator& op, const Image& truth, double eta,
                                    std::uint64_t seed) {
  if (!(eta >= 0.0)) throw_invalid("simulate_measurements: eta must be >= 0");
  VisibilitySet vis;
  vis.uv = op.uv();
  vis.eta = eta;
  vis.data = op.forward(truth);
  if (eta > 0.0) {
    Rng rng(derive_seed(seed, 0x7151b));
    const double comp_std = eta / std::sqrt(2.0);
    for (cplx& z : vis.data) {
      const double re = rng.normal();
      const double im = rng.normal();
      z += cplx(comp_std * re, comp_std * im);
    }
  }
  return vis;
}

Image back_project(const LinearOperator& op, const VisibilitySet& vis) {
  if (vis.data.size() != op.sample_count())
    throw_invalid("back_project: visibility count does not match operator");
  return op.adjoint(vis.data);
}

double epsilon_bound(double eta, std::size_t m) {
  if (!(eta > 0.0)) throw_invalid("epsilon_bound: eta must be positive");
  if (m < 1) throw_invalid("epsilon_bound: need at least one measurement");
  const double md = static_cast<double>(m);
  return eta * std::sqrt(md + 2.0 * std::sqrt(md));
}

void save_visibilities(const VisibilitySet& vis, const std::string& path) {
  vis.validate();
  std::ofstream os(path, std::ios::binary);
  if (!os) throw_io("cannot open for writing: " + path);
  write_magic(os, kMagic);
  write_u64le(os, vis.uv.count());
  write_f64le(os, vis.eta);
  for (std::size_t i = 0; i < vis.uv.count(); ++i) {
    write_f64le(os, vis.uv.samples[i].u);
    write_f64le(os, vis.uv.samples[i].v);
    write_f64le(os, vis.data[i].real());
    write_f64le(os, vis.data[i].imag());
    write_f64le(os, vis.uv.weights[i]);
  }
  if (!os) throw_io("write failed: " + path);
}

VisibilitySet load_visibilities(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw_io("cannot open: " + path);
  expect_magic(is, kMagic, "visibility");
  const std::uint64_t m = read_u64le(is);
  if (m == 0 || m > (1ull << 40)) throw_format("visibility header has implausible count");
  VisibilitySet vis;
  vis.eta = read_f64le(is);
  vis.uv.samples.resize(m);
  vis.uv.weights.resize(m);
  vis.data.resize(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    vis.uv.samples[i].u = read_f64le(is);
    vis.uv.samples[i].v = read_f64le(is);
    const double re = read_f64le(is);
    const double im = read_f64le(is);
    vis.data[i] = cplx(re, im);
    vis.uv.weights[i] = read_f64le(is);
  }
  vis.validate();
  return vis;
}

}  // namespace airi
