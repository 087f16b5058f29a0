#include "mtlspca/synthetic.hpp"

#include <cmath>
#include <random>
#include <string>

namespace mtlspca {

namespace {

void check_spec(const SyntheticSpec& spec, std::size_t expected_tasks) {
  if (spec.beta < 0.0 || spec.beta > 1.0) {
    throw StructuralError("task relatedness must lie in [0, 1], got " +
                          std::to_string(spec.beta));
  }
  if (spec.p < 2 && spec.beta < 1.0) {
    throw StructuralError(
        "p >= 2 is required to place an orthogonal mean direction");
  }
  if (spec.p < 1) {
    throw StructuralError("feature dimension must be positive");
  }
  if (spec.counts.size() != expected_tasks) {
    throw StructuralError("expected counts for " +
                          std::to_string(expected_tasks) + " tasks, got " +
                          std::to_string(spec.counts.size()));
  }
  for (const auto& c : spec.counts) {
    if (c[0] < 2 || c[1] < 2) {
      throw StructuralError("every class needs at least 2 training samples");
    }
  }
  if (spec.test_samples < 1) {
    throw StructuralError("test set must not be empty");
  }
}

/// Draws train matrices for every task, then the test split for
/// `target_task`. One generator drives everything, so a (spec, seed) pair
/// pins the dataset exactly.
SyntheticDataset assemble(const SyntheticSpec& spec,
                          std::vector<Eigen::VectorXd> means,
                          std::uint32_t target_task, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  SyntheticDataset out;
  out.task_means = std::move(means);
  out.data.target_task = target_task;

  const int p = spec.p;
  for (std::size_t t = 0; t < spec.counts.size(); ++t) {
    TaskData task;
    task.task_id = static_cast<std::uint32_t>(t + 1);
    for (int j = 0; j < 2; ++j) {
      const double sign = (j == 0) ? -1.0 : 1.0;  // class j+1 mean (-1)^(j+1) mu
      const long n = spec.counts[t][j];
      Eigen::MatrixXd x(p, n);
      for (long col = 0; col < n; ++col) {
        for (int row = 0; row < p; ++row) {
          x(row, col) = sign * out.task_means[t][row] + gauss(rng);
        }
      }
      task.cls[j] = std::move(x);
    }
    out.data.tasks.push_back(std::move(task));
  }

  const Eigen::VectorXd& mu = out.task_means[target_task - 1];
  out.data.test.resize(p, spec.test_samples);
  out.data.test_labels.resize(spec.test_samples);
  std::uniform_int_distribution<int> coin(1, 2);
  for (long i = 0; i < spec.test_samples; ++i) {
    const int cls = coin(rng);
    out.data.test_labels[static_cast<std::size_t>(i)] = cls;
    const double sign = (cls == 1) ? -1.0 : 1.0;
    for (int row = 0; row < p; ++row) {
      out.data.test(row, i) = sign * mu[row] + gauss(rng);
    }
  }
  return out;
}

}  // namespace

SyntheticDataset gen_transfer(const SyntheticSpec& spec) {
  check_spec(spec, 2);
  std::mt19937_64 rng(spec.seed);

  Eigen::VectorXd mu1 = Eigen::VectorXd::Zero(spec.p);
  mu1[0] = 1.0;
  Eigen::VectorXd mu2 = Eigen::VectorXd::Zero(spec.p);
  mu2[0] = spec.beta;
  if (spec.p > 1) {
    mu2[1] = std::sqrt(std::max(0.0, 1.0 - spec.beta * spec.beta));
  }
  return assemble(spec, {std::move(mu1), std::move(mu2)}, 2, rng);
}

SyntheticDataset gen_added_tasks(const SyntheticSpec& spec, int k) {
  if (k < 1) {
    throw StructuralError("need at least one task");
  }
  SyntheticSpec full = spec;
  const std::uint32_t target = (k == 1) ? 1u : 2u;
  if (full.counts.empty()) {
    full.counts.assign(static_cast<std::size_t>(k), {50, 50});
    full.counts[target - 1] = {20, 20};
  }
  check_spec(full, static_cast<std::size_t>(k));

  std::mt19937_64 rng(full.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double ortho = std::sqrt(std::max(0.0, 1.0 - full.beta * full.beta));

  std::vector<Eigen::VectorXd> means;
  means.reserve(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) {
    Eigen::VectorXd mu = Eigen::VectorXd::Zero(full.p);
    mu[0] = full.beta;
    if (ortho > 0.0) {
      Eigen::VectorXd w = Eigen::VectorXd::Zero(full.p);
      double norm = 0.0;
      do {
        for (int row = 1; row < full.p; ++row) w[row] = gauss(rng);
        norm = w.norm();
      } while (norm == 0.0);
      mu += ortho * (w / norm);
    }
    means.push_back(std::move(mu));
  }
  return assemble(full, std::move(means), target, rng);
}

}  // namespace mtlspca
