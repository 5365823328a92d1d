#include "osborne/logmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace osborne {

namespace {

void check_indices(int n, int row, int col) {
  if (row < 0 || row >= n || col < 0 || col >= n) {
    throw std::invalid_argument("entry index (" + std::to_string(row) + "," +
                                std::to_string(col) + ") out of range for n=" +
                                std::to_string(n));
  }
}

}  // namespace

LogSparseMatrix LogSparseMatrix::from_triplets(int n, const std::vector<Triplet>& triplets) {
  std::vector<LogTriplet> logs;
  logs.reserve(triplets.size());
  for (const Triplet& t : triplets) {
    if (!(t.value > 0.0) || !std::isfinite(t.value)) {
      throw std::invalid_argument("entry (" + std::to_string(t.row) + "," +
                                  std::to_string(t.col) + ") has nonpositive value " +
                                  std::to_string(t.value));
    }
    logs.push_back({t.row, t.col, std::log(t.value)});
  }
  return from_log_triplets(n, logs);
}

LogSparseMatrix LogSparseMatrix::from_log_triplets(int n, const std::vector<LogTriplet>& triplets) {
  if (n < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  std::vector<LogTriplet> sorted = triplets;
  for (const LogTriplet& t : sorted) {
    check_indices(n, t.row, t.col);
    if (!std::isfinite(t.log_value)) {
      throw std::invalid_argument("entry (" + std::to_string(t.row) + "," +
                                  std::to_string(t.col) + ") has non-finite log-value");
    }
  }
  std::sort(sorted.begin(), sorted.end(), [](const LogTriplet& a, const LogTriplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t e = 1; e < sorted.size(); ++e) {
    if (sorted[e].row == sorted[e - 1].row && sorted[e].col == sorted[e - 1].col) {
      throw std::invalid_argument("duplicate entry (" + std::to_string(sorted[e].row) + "," +
                                  std::to_string(sorted[e].col) + ")");
    }
  }

  LogSparseMatrix m;
  m.n_ = n;
  m.rows_.reserve(sorted.size());
  m.cols_.reserve(sorted.size());
  m.log_values_.reserve(sorted.size());
  for (const LogTriplet& t : sorted) {
    m.rows_.push_back(t.row);
    m.cols_.push_back(t.col);
    m.log_values_.push_back(t.log_value);
  }
  m.build_adjacency();
  return m;
}

void LogSparseMatrix::build_adjacency() {
  const int m = nnz();
  row_ptr_.assign(n_ + 1, 0);
  for (int e = 0; e < m; ++e) row_ptr_[rows_[e] + 1]++;
  std::partial_sum(row_ptr_.begin(), row_ptr_.end(), row_ptr_.begin());

  col_ptr_.assign(n_ + 1, 0);
  for (int e = 0; e < m; ++e) col_ptr_[cols_[e] + 1]++;
  std::partial_sum(col_ptr_.begin(), col_ptr_.end(), col_ptr_.begin());
  col_idx_.resize(m);
  std::vector<int> next(col_ptr_.begin(), col_ptr_.end() - 1);
  for (int e = 0; e < m; ++e) col_idx_[next[cols_[e]]++] = e;
}

std::vector<LogTriplet> LogSparseMatrix::to_log_triplets() const {
  std::vector<LogTriplet> out;
  out.reserve(log_values_.size());
  for (int e = 0; e < nnz(); ++e) out.push_back({rows_[e], cols_[e], log_values_[e]});
  return out;
}

double log_sum_exp(std::span<const double> zs) {
  if (zs.empty()) throw std::invalid_argument("log_sum_exp of empty range");
  double mx = zs[0];
  for (double z : zs) mx = std::max(mx, z);
  double s = 0.0;
  for (double z : zs) s += std::exp(z - mx);
  return mx + std::log(s);
}

MatrixStats stats(const LogSparseMatrix& m) {
  if (m.nnz() == 0) {
    throw std::invalid_argument("stats undefined for a matrix with no entries");
  }
  MatrixStats s;
  s.m = m.nnz();
  double lo = m.entry_log(0), hi = m.entry_log(0);
  std::vector<double> logs;
  logs.reserve(m.nnz());
  for (int e = 0; e < m.nnz(); ++e) {
    const double v = m.entry_log(e);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    logs.push_back(v);
  }
  s.log_sum = log_sum_exp(logs);
  s.log_kmin = lo;
  s.log_kmax = hi;
  s.log_kappa = s.log_sum - s.log_kmin;
  return s;
}

LogSparseMatrix lp_preprocess(const LogSparseMatrix& m, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("lp_preprocess requires finite p >= 1");
  }
  LogSparseMatrix out = m;
  for (double& v : out.log_values_) v *= p;
  return out;
}

}  // namespace osborne
