#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <vector>

#include "mtlspca/synthetic.hpp"

namespace mtlspca {

/// One `task,class,path,count` record. The task field may also be the
/// literal word `test`, marking held-out data of the target task; such
/// records set `is_test` and leave `task` at 0.
struct ManifestEntry {
  std::uint32_t task = 0;
  int cls = 0;
  std::filesystem::path path;  // resolved against the manifest directory
  long count = 0;
  bool is_test = false;
};

struct Manifest {
  std::vector<ManifestEntry> entries;
  std::filesystem::path base_dir;
};

Manifest load_manifest(const std::filesystem::path& path);

/// Reads a headerless numeric CSV with one sample per row and returns the
/// p x n matrix with samples as columns. Ragged rows and non-numeric cells
/// raise ParseError with file and line diagnostics.
Eigen::MatrixXd load_csv_matrix(const std::filesystem::path& path);

/// Loads a full dataset from a manifest: train matrices per (task, class),
/// plus the test split when `test` records are present. Counts and
/// dimensions are validated against the manifest.
Dataset load_csv(const std::filesystem::path& manifest_path);

/// Writes samples (columns of `data`) as CSV rows. Values are printed in
/// shortest round-trip form, so reading the file back reproduces every
/// double bit for bit.
void write_csv_matrix(const std::filesystem::path& path,
                      const Eigen::MatrixXd& data);

/// Writes every train matrix, the test split and a manifest under `dir`.
/// Returns the manifest path.
std::filesystem::path write_dataset_csv(const Dataset& dataset,
                                        const std::filesystem::path& dir);

}  // namespace mtlspca
