#include "mtlspca/layout.hpp"

#include <string>

namespace mtlspca {

ProblemLayout::ProblemLayout(int dim, std::vector<std::array<long, 2>> counts)
    : dim_(dim), counts_(std::move(counts)) {
  if (dim_ <= 0) {
    throw StructuralError("feature dimension must be positive, got " +
                          std::to_string(dim_));
  }
  if (counts_.empty()) {
    throw StructuralError("layout needs at least one task");
  }
  for (std::size_t t = 0; t < counts_.size(); ++t) {
    for (int j = 0; j < 2; ++j) {
      if (counts_[t][j] < 2) {
        throw InsufficientDataError(
            "task " + std::to_string(t + 1) + " class " + std::to_string(j + 1) +
            " has " + std::to_string(counts_[t][j]) +
            " samples; at least 2 are required for the half-split estimator");
      }
      total_ += counts_[t][j];
    }
  }
}

long ProblemLayout::count_at(int q) const {
  if (q < 0 || q >= num_positions()) {
    throw StructuralError("flat position " + std::to_string(q) +
                          " out of range for " + std::to_string(num_tasks()) +
                          " tasks");
  }
  return counts_[static_cast<std::size_t>(q / 2)][q % 2];
}

int ProblemLayout::flat_index(int task, int cls) const {
  if (task < 1 || task > num_tasks()) {
    throw StructuralError("task index " + std::to_string(task) +
                          " out of range 1.." + std::to_string(num_tasks()));
  }
  if (cls < 1 || cls > 2) {
    throw StructuralError("class index must be 1 or 2, got " +
                          std::to_string(cls));
  }
  return 2 * (task - 1) + (cls - 1);
}

}  // namespace mtlspca
