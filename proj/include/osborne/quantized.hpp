#pragma once

#include <span>
#include <vector>

#include "osborne/logmat.hpp"

namespace osborne {

// Truncation steps for low-bit execution: input log-entries are rounded to
// the gamma grid, iterates and update arithmetic to the tau grid.
struct QuantConfig {
  double gamma = 0.0;
  double tau = 0.0;
};

// gamma = eps/(12n) so 6*n*gamma = eps/2, tau = eps^2/(64n).
QuantConfig default_quant(int n, double eps);

void validate(const QuantConfig& q);

// Rounds v to the nearest multiple of step. step > 0.
double round_to_grid(double v, double step);

// Rounds every log-entry to the nearest multiple of gamma; support unchanged.
LogSparseMatrix quantize_logs(const LogSparseMatrix& m, QuantConfig q);

// Rounds every coordinate to the nearest multiple of tau.
std::vector<double> truncate_iterate(const std::vector<double>& x, double tau);

// log(sum(exp(z))) to within +/- tau: shift by the max, drop terms below
// -log(4n/tau), and round survivors to the tau/4 grid.
double logsumexp_lowbit(std::span<const double> zs, double tau);

}  // namespace osborne
