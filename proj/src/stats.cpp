#include "mtlspca/stats.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace mtlspca {

ClassStats make_class_stats(long n_a, long n_b, Eigen::VectorXd half_a,
                            Eigen::VectorXd half_b) {
  if (n_a < 1 || n_b < 1) {
    throw InsufficientDataError("each half needs at least one sample, got " +
                                std::to_string(n_a) + " and " +
                                std::to_string(n_b));
  }
  if (half_a.size() != half_b.size()) {
    throw StructuralError("half means disagree in dimension: " +
                          std::to_string(half_a.size()) + " vs " +
                          std::to_string(half_b.size()));
  }
  if (!half_a.allFinite() || !half_b.allFinite()) {
    throw DataError("non-finite entries in half means");
  }
  ClassStats s;
  s.n_a = n_a;
  s.n_b = n_b;
  s.half_a = std::move(half_a);
  s.half_b = std::move(half_b);
  s.mean = (static_cast<double>(n_a) * s.half_a +
            static_cast<double>(n_b) * s.half_b) /
           static_cast<double>(n_a + n_b);
  return s;
}

ClassStats class_stats(const Eigen::MatrixXd& data,
                       std::optional<std::uint64_t> shuffle_seed) {
  const long n = data.cols();
  if (n < 2) {
    throw InsufficientDataError("class has " + std::to_string(n) +
                                " samples; at least 2 are required");
  }
  if (!data.allFinite()) {
    throw DataError("non-finite entries in sample matrix");
  }
  const long n_a = (n + 1) / 2;
  const long n_b = n - n_a;

  Eigen::VectorXd half_a;
  Eigen::VectorXd half_b;
  if (shuffle_seed) {
    std::vector<long> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0L);
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
    half_a = Eigen::VectorXd::Zero(data.rows());
    half_b = Eigen::VectorXd::Zero(data.rows());
    for (long i = 0; i < n_a; ++i) half_a += data.col(order[i]);
    for (long i = n_a; i < n; ++i) half_b += data.col(order[i]);
    half_a /= static_cast<double>(n_a);
    half_b /= static_cast<double>(n_b);
  } else {
    half_a = data.leftCols(n_a).rowwise().mean();
    half_b = data.rightCols(n_b).rowwise().mean();
  }
  return make_class_stats(n_a, n_b, std::move(half_a), std::move(half_b));
}

ProblemLayout layout_of(const std::vector<TaskStats>& stats) {
  if (stats.empty()) {
    throw StructuralError("no task statistics supplied");
  }
  const int p = stats.front().dim();
  std::vector<std::array<long, 2>> counts;
  counts.reserve(stats.size());
  for (const TaskStats& t : stats) {
    if (t.dim() != p) {
      throw StructuralError("task " + std::to_string(t.task_id) +
                            " has dimension " + std::to_string(t.dim()) +
                            ", expected " + std::to_string(p));
    }
    counts.push_back({t.cls[0].count(), t.cls[1].count()});
  }
  return ProblemLayout(p, std::move(counts));
}

GramEstimate gram_estimate(const std::vector<TaskStats>& stats,
                           const ProblemLayout& layout) {
  const int m = layout.num_positions();
  if (static_cast<int>(stats.size()) != layout.num_tasks()) {
    throw StructuralError("expected statistics for " +
                          std::to_string(layout.num_tasks()) + " tasks, got " +
                          std::to_string(stats.size()));
  }
  auto at = [&](int q) -> const ClassStats& {
    return stats[static_cast<std::size_t>(q / 2)].cls[q % 2];
  };
  for (int q = 0; q < m; ++q) {
    if (at(q).count() != layout.count_at(q)) {
      throw StructuralError("statistics and layout disagree on the sample "
                            "count at position " +
                            std::to_string(q));
    }
    if (static_cast<int>(at(q).mean.size()) != layout.dim()) {
      throw StructuralError("statistics dimension mismatch at position " +
                            std::to_string(q));
    }
  }

  Eigen::MatrixXd g(m, m);
  for (int q = 0; q < m; ++q) {
    g(q, q) = at(q).half_a.dot(at(q).half_b);
    for (int r = q + 1; r < m; ++r) {
      const double v = at(q).mean.dot(at(r).mean);
      g(q, r) = v;
      g(r, q) = v;
    }
  }
  return GramEstimate{std::move(g)};
}

}  // namespace mtlspca
