#pragma once

#include <Eigen/Dense>

#include "mtlspca/layout.hpp"
#include "mtlspca/model.hpp"

namespace mtlspca {

/// Deterministic-equivalent prediction of the classifier's behaviour on a
/// target task, computed from a Gram matrix of class means (exact or
/// estimated), the layout and a label vector.
///
/// The projection axis is a normalized weighted sum of empirical means, so
/// the score of a fresh sample is Gaussian with unit variance and mean
/// m_tj = (w . mu_tj) / |w|. Replacing numerator and norm by their
/// concentration limits gives, with yn_q = y_q n_q,
///   num_j = sum_q yn_q G_{q, q(t,j)}
///   den^2 = sum_{q,q'} yn_q yn_q' G_{qq'} + p sum_q y_q^2 n_q
/// where the p-term is the expected squared norm of the mean-estimation
/// noise folded into w. The predicted error is then Q((m_1 - m_2) / 2).
struct TheoryModel {
  Eigen::MatrixXd gram;
  ProblemLayout layout;
  LabelVector labels;
  double m1 = 0.0;
  double m2 = 0.0;
  double err = 0.5;
};

/// Standard Gaussian upper tail Q(x) = 1 - Phi(x).
double gaussian_tail(double x);

/// Deterministic score means (m_t1, m_t2) for the two target classes.
/// Throws DegenerateModelError when den^2 is not positive.
std::pair<double, double> score_means(const Eigen::MatrixXd& gram,
                                      const LabelVector& labels,
                                      const ProblemLayout& layout, int target);

/// Predicted error rate of the thresholded projection classifier,
///   err = Q(m_1 - z*)/2 + Q(z* - m_2)/2 with z* = (m_1 + m_2)/2,
/// which collapses to Q((m_1 - m_2)/2).
double predicted_error(const Eigen::MatrixXd& gram, const ProblemLayout& layout,
                       int target, const LabelVector& labels);

TheoryModel theory_model(const Eigen::MatrixXd& gram,
                         const ProblemLayout& layout, int target,
                         const LabelVector& labels);

/// Gram matrix of the true class means under the convention that class j
/// of task t has mean (-1)^j mu_t. `task_means` holds mu_1 .. mu_k.
Eigen::MatrixXd true_gram(const std::vector<Eigen::VectorXd>& task_means);

}  // namespace mtlspca
