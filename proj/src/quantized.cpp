#include "osborne/quantized.hpp"

#include <cmath>
#include <stdexcept>

namespace osborne {

QuantConfig default_quant(int n, double eps) {
  if (n < 1) throw std::invalid_argument("default_quant requires n >= 1");
  if (!(eps > 0.0) || eps > 2.0) throw std::invalid_argument("eps must be in (0, 2]");
  QuantConfig q;
  q.gamma = eps / (12.0 * n);
  q.tau = eps * eps / (64.0 * n);
  return q;
}

void validate(const QuantConfig& q) {
  if (!(q.gamma > 0.0) || !(q.gamma < 1.0 / 3.0)) {
    throw std::invalid_argument("quantization gamma must lie in (0, 1/3)");
  }
  if (!(q.tau > 0.0)) throw std::invalid_argument("quantization tau must be > 0");
}

double round_to_grid(double v, double step) {
  const double q = v / step;
  // Beyond 2^53 the grid is finer than double spacing; rounding is a no-op.
  if (std::abs(q) >= 9007199254740992.0) return v;
  return std::nearbyint(q) * step;
}

LogSparseMatrix quantize_logs(const LogSparseMatrix& m, QuantConfig q) {
  validate(q);
  LogSparseMatrix out = m;
  for (double& v : out.log_values_) v = round_to_grid(v, q.gamma);
  return out;
}

std::vector<double> truncate_iterate(const std::vector<double>& x, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = round_to_grid(x[i], tau);
  return out;
}

double logsumexp_lowbit(std::span<const double> zs, double tau) {
  if (zs.empty()) throw std::invalid_argument("logsumexp_lowbit of empty range");
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be > 0");
  double mx = zs[0];
  for (double z : zs) {
    if (!std::isfinite(z)) throw std::invalid_argument("logsumexp_lowbit requires finite inputs");
    mx = std::max(mx, z);
  }
  const double drop = -std::log(4.0 * static_cast<double>(zs.size()) / tau);
  const double grid = tau / 4.0;
  double s = 0.0;
  for (double z : zs) {
    const double shifted = z - mx;
    if (shifted < drop) continue;
    s += std::exp(round_to_grid(shifted, grid));
  }
  return mx + std::log(s);
}

}  // namespace osborne
