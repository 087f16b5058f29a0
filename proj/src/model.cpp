#include "mtlspca/model.hpp"

#include <cmath>
#include <string>

namespace mtlspca {

namespace {

Eigen::VectorXd sqrt_ratios(const ProblemLayout& layout) {
  Eigen::VectorXd d(layout.num_positions());
  for (int q = 0; q < layout.num_positions(); ++q) {
    d[q] = std::sqrt(layout.ratio_at(q));
  }
  return d;
}

}  // namespace

SimilarityMatrix build_similarity(const GramEstimate& gram,
                                  const ProblemLayout& layout) {
  const int m = layout.num_positions();
  if (gram.g.rows() != m || gram.g.cols() != m) {
    throw StructuralError("Gram estimate is " + std::to_string(gram.g.rows()) +
                          "x" + std::to_string(gram.g.cols()) + ", expected " +
                          std::to_string(m) + "x" + std::to_string(m));
  }
  if (!gram.g.allFinite()) {
    throw DataError("non-finite entries in Gram estimate");
  }

  const Eigen::VectorXd d = sqrt_ratios(layout);
  Eigen::MatrixXd s =
      (d.asDiagonal() * gram.g * d.asDiagonal()) / layout.dim_ratio();
  s = ((s + s.transpose()) / 2.0).eval();

  // Clip negative eigenvalues. The eigensolver sees an exactly symmetric
  // matrix, so the reconstruction stays symmetric up to roundoff; one more
  // symmetrization removes that.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s);
  Eigen::VectorXd evals = eig.eigenvalues().cwiseMax(0.0);
  s = eig.eigenvectors() * evals.asDiagonal() * eig.eigenvectors().transpose();
  s = ((s + s.transpose()) / 2.0).eval();
  return SimilarityMatrix{std::move(s)};
}

LabelVector optimal_labels(const SimilarityMatrix& sim,
                           const ProblemLayout& layout, int target) {
  const int m = layout.num_positions();
  if (sim.m.rows() != m || sim.m.cols() != m) {
    throw StructuralError("similarity matrix size mismatch");
  }
  const int q1 = layout.flat_index(target, 1);
  const int q2 = layout.flat_index(target, 2);

  Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
  b[q1] = 1.0 / std::sqrt(layout.ratio_at(q1));
  b[q2] = -1.0 / std::sqrt(layout.ratio_at(q2));

  Eigen::MatrixXd lhs = sim.m;
  lhs.diagonal().array() += 1.0;
  Eigen::VectorXd z = lhs.llt().solve(sim.m * b);

  LabelVector out;
  out.target = target;
  out.y = Eigen::VectorXd(m);
  for (int q = 0; q < m; ++q) {
    out.y[q] = z[q] / std::sqrt(layout.ratio_at(q));
  }
  return out;
}

LabelVector naive_labels(const ProblemLayout& layout) {
  LabelVector out;
  out.target = 0;
  out.y = Eigen::VectorXd(layout.num_positions());
  for (int q = 0; q < layout.num_positions(); ++q) {
    out.y[q] = (q % 2 == 0) ? 1.0 : -1.0;
  }
  return out;
}

ProjectionResult projection(const std::vector<TaskStats>& stats,
                            const LabelVector& labels,
                            const ProblemLayout& layout) {
  const int m = layout.num_positions();
  if (labels.y.size() != m) {
    throw StructuralError("label vector has " + std::to_string(labels.y.size()) +
                          " entries, expected " + std::to_string(m));
  }
  if (static_cast<int>(stats.size()) != layout.num_tasks()) {
    throw StructuralError("statistics for " + std::to_string(stats.size()) +
                          " tasks, layout has " +
                          std::to_string(layout.num_tasks()));
  }

  Eigen::VectorXd w = Eigen::VectorXd::Zero(layout.dim());
  for (int q = 0; q < m; ++q) {
    const ClassStats& cs = stats[static_cast<std::size_t>(q / 2)].cls[q % 2];
    if (static_cast<int>(cs.mean.size()) != layout.dim()) {
      throw StructuralError("mean dimension mismatch at position " +
                            std::to_string(q));
    }
    w += labels.y[q] * static_cast<double>(layout.count_at(q)) * cs.mean;
  }
  const double norm = w.norm();
  if (norm == 0.0) {
    throw DegenerateModelError(
        "projection vector is zero; the labels carry no signal");
  }
  ProjectionResult r;
  r.v = w / norm;
  r.w = std::move(w);
  r.w_norm = norm;
  return r;
}

std::pair<double, double> estimated_score_means(const GramEstimate& gram,
                                                const LabelVector& labels,
                                                const ProblemLayout& layout,
                                                double w_norm) {
  const int m = layout.num_positions();
  if (gram.g.rows() != m || gram.g.cols() != m || labels.y.size() != m) {
    throw StructuralError("Gram / label dimensions disagree with layout");
  }
  if (!(w_norm > 0.0)) {
    throw DegenerateModelError("projection norm must be positive, got " +
                               std::to_string(w_norm));
  }
  const int q1 = layout.flat_index(labels.target, 1);
  const int q2 = layout.flat_index(labels.target, 2);
  double num1 = 0.0;
  double num2 = 0.0;
  for (int q = 0; q < m; ++q) {
    const double yn = labels.y[q] * static_cast<double>(layout.count_at(q));
    num1 += yn * gram.g(q, q1);
    num2 += yn * gram.g(q, q2);
  }
  return {num1 / w_norm, num2 / w_norm};
}

double threshold(const GramEstimate& gram, const LabelVector& labels,
                 const ProblemLayout& layout, double w_norm) {
  auto [m1, m2] = estimated_score_means(gram, labels, layout, w_norm);
  return 0.5 * (m1 + m2);
}

double score(const ClassifierBundle& bundle, const Eigen::VectorXd& x) {
  if (x.size() != bundle.v.size()) {
    throw StructuralError("sample has dimension " + std::to_string(x.size()) +
                          ", classifier expects " +
                          std::to_string(bundle.v.size()));
  }
  return bundle.v.dot(x) - bundle.zeta;
}

int classify(double g) {
  if (!std::isfinite(g)) {
    throw DataError("non-finite score");
  }
  return g >= 0.0 ? 1 : 2;
}

}  // namespace mtlspca
