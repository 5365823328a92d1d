#pragma once

#include <span>
#include <vector>

namespace osborne {

struct Triplet {
  int row = 0;
  int col = 0;
  double value = 0.0;  // linear domain, must be > 0
};

struct LogTriplet {
  int row = 0;
  int col = 0;
  double log_value = 0.0;
};

// Sparse nonnegative square matrix stored through the logarithms of its
// nonzero entries. Zero entries are structurally absent, so every stored
// log-value is finite. Entries are kept in row-major order; the column
// adjacency indexes the same entry set.
class LogSparseMatrix {
 public:
  static LogSparseMatrix from_triplets(int n, const std::vector<Triplet>& triplets);
  static LogSparseMatrix from_log_triplets(int n, const std::vector<LogTriplet>& triplets);

  int dim() const { return n_; }
  int nnz() const { return static_cast<int>(log_values_.size()); }

  int entry_row(int e) const { return rows_[e]; }
  int entry_col(int e) const { return cols_[e]; }
  double entry_log(int e) const { return log_values_[e]; }

  // Entry ids in row i. Entries are row-major, so this is a contiguous range.
  std::pair<int, int> row_range(int i) const { return {row_ptr_[i], row_ptr_[i + 1]}; }
  // Entry ids in column j.
  std::span<const int> col_entries(int j) const {
    return {col_idx_.data() + col_ptr_[j], col_idx_.data() + col_ptr_[j + 1]};
  }

  std::vector<LogTriplet> to_log_triplets() const;

  friend LogSparseMatrix lp_preprocess(const LogSparseMatrix& m, double p);
  friend LogSparseMatrix quantize_logs(const LogSparseMatrix& m, struct QuantConfig q);

 private:
  LogSparseMatrix() = default;
  void build_adjacency();

  int n_ = 0;
  std::vector<int> rows_, cols_;
  std::vector<double> log_values_;
  std::vector<int> row_ptr_;            // n+1 offsets into the entry array
  std::vector<int> col_ptr_, col_idx_;  // CSC view over entry ids
};

struct MatrixStats {
  long long m = 0;
  double log_sum = 0.0;    // log sum_ij K_ij
  double log_kmin = 0.0;   // log of the smallest nonzero entry
  double log_kmax = 0.0;
  double log_kappa = 0.0;  // log_sum - log_kmin
};

MatrixStats stats(const LogSparseMatrix& m);

// Raises every entry to the power p (>= 1), i.e. multiplies log-entries by p.
LogSparseMatrix lp_preprocess(const LogSparseMatrix& m, double p);

// Numerically stable log(sum(exp(z))) over a nonempty range.
double log_sum_exp(std::span<const double> zs);

}  // namespace osborne
