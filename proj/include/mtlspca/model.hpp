#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "mtlspca/layout.hpp"
#include "mtlspca/stats.hpp"

namespace mtlspca {

/// Size-ratio-weighted Gram of the class means,
///   S = (1/c0) * Dc^{1/2} G Dc^{1/2},
/// symmetrized and projected onto the PSD cone. The true matrix is PSD by
/// construction; clipping the estimate's negative eigenvalues keeps the
/// (S + I) solve well posed at small sample sizes.
struct SimilarityMatrix {
  Eigen::MatrixXd m;
};

/// Per-class label weights for one target task. `y` has one entry per flat
/// position q; `target` is the 1-based task the labels were optimized for.
struct LabelVector {
  Eigen::VectorXd y;
  int target = 0;
};

/// What the central side ships to a target client: a unit projection axis
/// and a scalar decision threshold.
struct ClassifierBundle {
  Eigen::VectorXd v;
  double zeta = 0.0;
  int target = 0;
};

SimilarityMatrix build_similarity(const GramEstimate& gram,
                                  const ProblemLayout& layout);

/// Error-minimizing label vector for `target`:
///   y = Dc^{-1/2} (S + I)^{-1} S Dc^{-1/2} (e_{t,1} - e_{t,2}).
/// S PSD makes (S + I) symmetric positive definite.
LabelVector optimal_labels(const SimilarityMatrix& sim,
                           const ProblemLayout& layout, int target);

/// Classical +1 / -1 labels (class 1 positive), no target dependence.
LabelVector naive_labels(const ProblemLayout& layout);

struct ProjectionResult {
  Eigen::VectorXd w;  // sum_q y_q n_q mean_q
  Eigen::VectorXd v;  // w / |w|
  double w_norm = 0.0;
};

/// Accumulates tasks in the order given, which callers fix to ascending
/// task id so that replays sum in the same order.
ProjectionResult projection(const std::vector<TaskStats>& stats,
                            const LabelVector& labels,
                            const ProblemLayout& layout);

/// Estimated score means (m_t1, m_t2) of the target classes,
///   m_tj = (sum_q y_q n_q G_{q, q(t,j)}) / |w|.
std::pair<double, double> estimated_score_means(const GramEstimate& gram,
                                                const LabelVector& labels,
                                                const ProblemLayout& layout,
                                                double w_norm);

/// Decision threshold zeta = (m_t1 + m_t2) / 2.
double threshold(const GramEstimate& gram, const LabelVector& labels,
                 const ProblemLayout& layout, double w_norm);

/// g = v . x - zeta.
double score(const ClassifierBundle& bundle, const Eigen::VectorXd& x);

/// Class 1 when g > 0, class 2 when g < 0. A tie g == 0 deterministically
/// maps to class 1.
int classify(double g);

}  // namespace mtlspca
