#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <vector>

#include "mtlspca/errors.hpp"

namespace mtlspca {

/// Parameters of the Gaussian mixture benchmark generators. `beta` is the
/// cosine between task mean directions: 1 makes all tasks identical, 0
/// makes them orthogonal.
struct SyntheticSpec {
  int p = 100;
  double beta = 1.0;
  std::vector<std::array<long, 2>> counts;  // per task {n_t1, n_t2}
  long test_samples = 10000;
  std::uint64_t seed = 0;
};

struct TaskData {
  std::uint32_t task_id = 0;
  std::array<Eigen::MatrixXd, 2> cls;  // p x n_tj, samples as columns
};

struct Dataset {
  std::vector<TaskData> tasks;
  Eigen::MatrixXd test;          // p x n_test, drawn from the target task
  std::vector<int> test_labels;  // ground truth, 1 or 2
  std::uint32_t target_task = 0;
};

/// Generated dataset plus the true task mean directions (class j of task t
/// has mean (-1)^j * task_means[t-1]), needed by the theory predictor.
struct SyntheticDataset {
  Dataset data;
  std::vector<Eigen::VectorXd> task_means;
};

/// Two-task transfer scenario: mu_1 = e1, mu_2 = beta mu_1 +
/// sqrt(1 - beta^2) e2, test data from task 2. `spec.counts` must
/// describe exactly two tasks.
SyntheticDataset gen_transfer(const SyntheticSpec& spec);

/// k-task scenario: every mu_t = beta e1 + sqrt(1 - beta^2) w_t with w_t
/// uniform on the unit sphere of the hyperplane orthogonal to e1. The
/// target is task 2 (task 1 when k == 1). `spec.counts` may be empty, in
/// which case sources get 50/50 samples and the target 20/20.
SyntheticDataset gen_added_tasks(const SyntheticSpec& spec, int k);

}  // namespace mtlspca
