#pragma once

#include <cstdint>
#include <vector>

#include "mtlspca/model.hpp"
#include "mtlspca/stats.hpp"

namespace mtlspca {

enum class LabelScheme {
  kOptimal,  // target-dependent error-minimizing labels
  kNaive,    // fixed +1 / -1 labels
};

struct FitResult {
  ClassifierBundle bundle;
  LabelVector labels;
  ProblemLayout layout;
};

/// Runs the central computation on a set of task statistics:
/// Gram estimate -> similarity -> labels -> projection -> threshold.
///
/// Tasks are processed in ascending task id so that any two replays of the
/// same statistics (local or through the wire) produce identical floating
/// point results. `target_id` names the task whose decision rule is wanted.
FitResult fit_target(std::vector<TaskStats> stats, std::uint32_t target_id,
                     LabelScheme scheme = LabelScheme::kOptimal);

}  // namespace mtlspca
