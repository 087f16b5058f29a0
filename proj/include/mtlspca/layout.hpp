#pragma once

#include <array>
#include <vector>

#include "mtlspca/errors.hpp"

namespace mtlspca {

/// Sample-count bookkeeping for a k-task, 2-class problem.
///
/// Tasks are numbered 1..k and classes 1..2 in the public interface.
/// Internally every (task, class) pair maps to the flat position
/// q = 2*(task-1) + (cls-1), so vectors over classes have length 2k and
/// walk task 1 class 1, task 1 class 2, task 2 class 1, ...
class ProblemLayout {
 public:
  /// `counts[t-1] = {n_t1, n_t2}`. Every count must be at least 2 so the
  /// half-split Gram estimator has two non-empty halves.
  ProblemLayout(int dim, std::vector<std::array<long, 2>> counts);

  int num_tasks() const { return static_cast<int>(counts_.size()); }
  int num_positions() const { return 2 * num_tasks(); }
  int dim() const { return dim_; }
  long total_samples() const { return total_; }

  /// c0 = p / n.
  double dim_ratio() const { return static_cast<double>(dim_) / total_; }

  long count(int task, int cls) const { return count_at(flat_index(task, cls)); }
  long count_at(int q) const;

  /// c_q = n_q / n.
  double ratio_at(int q) const {
    return static_cast<double>(count_at(q)) / total_;
  }

  /// Flat 0-based position of (task, cls), both 1-based.
  int flat_index(int task, int cls) const;

  bool operator==(const ProblemLayout&) const = default;

 private:
  int dim_ = 0;
  long total_ = 0;
  std::vector<std::array<long, 2>> counts_;
};

}  // namespace mtlspca
