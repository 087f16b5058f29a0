#include "mtlspca/fit.hpp"

#include <algorithm>
#include <string>

namespace mtlspca {

FitResult fit_target(std::vector<TaskStats> stats, std::uint32_t target_id,
                     LabelScheme scheme) {
  if (stats.empty()) {
    throw StructuralError("no task statistics to fit");
  }
  std::sort(stats.begin(), stats.end(),
            [](const TaskStats& a, const TaskStats& b) {
              return a.task_id < b.task_id;
            });
  for (std::size_t i = 1; i < stats.size(); ++i) {
    if (stats[i].task_id == stats[i - 1].task_id) {
      throw StructuralError("duplicate task id " +
                            std::to_string(stats[i].task_id));
    }
  }
  int target_pos = 0;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    if (stats[i].task_id == target_id) {
      target_pos = static_cast<int>(i) + 1;
      break;
    }
  }
  if (target_pos == 0) {
    throw StructuralError("target task " + std::to_string(target_id) +
                          " is not among the supplied tasks");
  }

  ProblemLayout layout = layout_of(stats);
  GramEstimate gram = gram_estimate(stats, layout);
  LabelVector labels;
  if (scheme == LabelScheme::kOptimal) {
    SimilarityMatrix sim = build_similarity(gram, layout);
    labels = optimal_labels(sim, layout, target_pos);
  } else {
    labels = naive_labels(layout);
    labels.target = target_pos;
  }
  ProjectionResult proj = projection(stats, labels, layout);
  const double zeta = threshold(gram, labels, layout, proj.w_norm);

  FitResult r{ClassifierBundle{std::move(proj.v), zeta, target_pos},
              std::move(labels), std::move(layout)};
  return r;
}

}  // namespace mtlspca
