#include "mtlspca/theory.hpp"

#include <cmath>
#include <string>

namespace mtlspca {

double gaussian_tail(double x) {
  return 0.5 * std::erfc(x / std::sqrt(2.0));
}

std::pair<double, double> score_means(const Eigen::MatrixXd& gram,
                                      const LabelVector& labels,
                                      const ProblemLayout& layout, int target) {
  const int m = layout.num_positions();
  if (gram.rows() != m || gram.cols() != m) {
    throw StructuralError("Gram matrix size disagrees with layout");
  }
  if (labels.y.size() != m) {
    throw StructuralError("label vector size disagrees with layout");
  }
  const int q1 = layout.flat_index(target, 1);
  const int q2 = layout.flat_index(target, 2);

  Eigen::VectorXd yn(m);
  double noise = 0.0;
  for (int q = 0; q < m; ++q) {
    const double nq = static_cast<double>(layout.count_at(q));
    yn[q] = labels.y[q] * nq;
    noise += labels.y[q] * labels.y[q] * nq;
  }
  const double den2 = yn.dot(gram * yn) + layout.dim() * noise;
  if (!(den2 > 0.0)) {
    throw DegenerateModelError("degenerate score denominator " +
                               std::to_string(den2));
  }
  const double den = std::sqrt(den2);
  return {yn.dot(gram.col(q1)) / den, yn.dot(gram.col(q2)) / den};
}

double predicted_error(const Eigen::MatrixXd& gram, const ProblemLayout& layout,
                       int target, const LabelVector& labels) {
  auto [m1, m2] = score_means(gram, labels, layout, target);
  return gaussian_tail(0.5 * (m1 - m2));
}

TheoryModel theory_model(const Eigen::MatrixXd& gram,
                         const ProblemLayout& layout, int target,
                         const LabelVector& labels) {
  TheoryModel t{gram, layout, labels};
  std::tie(t.m1, t.m2) = score_means(gram, labels, layout, target);
  t.err = gaussian_tail(0.5 * (t.m1 - t.m2));
  return t;
}

Eigen::MatrixXd true_gram(const std::vector<Eigen::VectorXd>& task_means) {
  const int k = static_cast<int>(task_means.size());
  if (k == 0) {
    throw StructuralError("no task means supplied");
  }
  Eigen::MatrixXd g(2 * k, 2 * k);
  for (int q = 0; q < 2 * k; ++q) {
    // class 1 carries sign -1, class 2 sign +1
    const double sq = (q % 2 == 0) ? -1.0 : 1.0;
    for (int r = q; r < 2 * k; ++r) {
      const double sr = (r % 2 == 0) ? -1.0 : 1.0;
      const double v = sq * sr * task_means[q / 2].dot(task_means[r / 2]);
      g(q, r) = v;
      g(r, q) = v;
    }
  }
  return g;
}

}  // namespace mtlspca
