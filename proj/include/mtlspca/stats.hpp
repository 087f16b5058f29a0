#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "mtlspca/layout.hpp"

namespace mtlspca {

/// Sufficient statistics of one class of one task.
///
/// The sample matrix is reduced to two half means plus counts. Everything
/// downstream (full mean, Gram estimate, projection, threshold) is a
/// function of these fields only, which is what makes the statistics
/// transmissible in place of the raw data.
struct ClassStats {
  long n_a = 0;  // ceil(n / 2) samples in half a
  long n_b = 0;  // remaining samples in half b
  Eigen::VectorXd half_a;
  Eigen::VectorXd half_b;
  Eigen::VectorXd mean;  // (n_a * half_a + n_b * half_b) / n

  long count() const { return n_a + n_b; }
};

/// Builds ClassStats from counts and half means. The full mean is always
/// derived from the halves through this one expression so that local and
/// reconstructed-from-wire statistics agree bit for bit.
ClassStats make_class_stats(long n_a, long n_b, Eigen::VectorXd half_a,
                            Eigen::VectorXd half_b);

/// Reduces a p x n sample matrix (samples as columns) to ClassStats.
///
/// The split is deterministic: the first ceil(n/2) columns form half a.
/// Pass a seed to shuffle columns first when the on-disk ordering is not
/// exchangeable.
ClassStats class_stats(const Eigen::MatrixXd& data,
                       std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Statistics of both classes of one task.
struct TaskStats {
  std::uint32_t task_id = 0;
  std::array<ClassStats, 2> cls;

  int dim() const { return static_cast<int>(cls[0].half_a.size()); }
};

ProblemLayout layout_of(const std::vector<TaskStats>& stats);

/// Estimated Gram matrix of the true class means, 2k x 2k and exactly
/// symmetric. Diagonal entries use the cross-half product half_a . half_b,
/// whose expectation is |mu_q|^2 with no additive dimension bias; the
/// plain product mean . mean would be biased upward by p / n_q.
/// Off-diagonal entries are the plain products mean_q . mean_q'.
/// Diagonal entries can still come out negative at small n; the similarity
/// construction repairs that.
struct GramEstimate {
  Eigen::MatrixXd g;
};

/// `stats` must be ordered the way the layout was built (ascending task id
/// by convention).
GramEstimate gram_estimate(const std::vector<TaskStats>& stats,
                           const ProblemLayout& layout);

}  // namespace mtlspca
