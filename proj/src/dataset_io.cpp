#include "mtlspca/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

namespace mtlspca {

namespace {

std::string trimmed(std::string s) {
  const auto notspace = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
  s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
  return s;
}

double parse_cell(const std::string& cell, const std::filesystem::path& file,
                  long line) {
  const std::string t = trimmed(cell);
  double value = 0.0;
  const char* begin = t.data();
  const char* end = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || t.empty()) {
    throw ParseError(file.string(), line, "non-numeric cell '" + cell + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(file.string(), line, "non-finite value '" + cell + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

void append_double(std::string& out, double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  out.append(buf, ptr);
}

}  // namespace

Eigen::MatrixXd load_csv_matrix(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path.string(), 0, "cannot open file");
  }
  std::vector<std::vector<double>> rows;
  std::string line;
  long lineno = 0;
  long width = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trimmed(line).empty()) continue;
    std::vector<std::string> cells = split(line, ',');
    if (width < 0) {
      width = static_cast<long>(cells.size());
    } else if (static_cast<long>(cells.size()) != width) {
      throw ParseError(path.string(), lineno,
                       "ragged row: expected " + std::to_string(width) +
                           " columns, found " + std::to_string(cells.size()));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const std::string& c : cells) row.push_back(parse_cell(c, path, lineno));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError(path.string(), 0, "file holds no samples");
  }
  Eigen::MatrixXd m(width, static_cast<long>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (long d = 0; d < width; ++d) {
      m(d, static_cast<long>(i)) = rows[i][static_cast<std::size_t>(d)];
    }
  }
  return m;
}

Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(path.string(), 0, "cannot open manifest");
  }
  Manifest man;
  man.base_dir = path.has_parent_path() ? path.parent_path()
                                        : std::filesystem::path(".");
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string t = trimmed(line);
    if (t.empty() || t.front() == '#') continue;
    std::vector<std::string> f = split(t, ',');
    if (f.size() != 4) {
      throw ParseError(path.string(), lineno,
                       "expected task,class,path,count");
    }
    ManifestEntry e;
    const std::string task_field = trimmed(f[0]);
    if (task_field == "test") {
      e.is_test = true;
    } else {
      const char* b = task_field.data();
      auto [ptr, ec] = std::from_chars(b, b + task_field.size(), e.task);
      if (ec != std::errc() || ptr != b + task_field.size() || e.task == 0) {
        throw ParseError(path.string(), lineno,
                         "bad task id '" + task_field + "'");
      }
    }
    const std::string cls_field = trimmed(f[1]);
    if (cls_field == "1") {
      e.cls = 1;
    } else if (cls_field == "2") {
      e.cls = 2;
    } else {
      throw ParseError(path.string(), lineno,
                       "class must be 1 or 2, got '" + cls_field + "'");
    }
    e.path = man.base_dir / trimmed(f[2]);
    const std::string cnt = trimmed(f[3]);
    const char* cb = cnt.data();
    auto [cp, cec] = std::from_chars(cb, cb + cnt.size(), e.count);
    if (cec != std::errc() || cp != cb + cnt.size() || e.count < 1) {
      throw ParseError(path.string(), lineno, "bad count '" + cnt + "'");
    }
    man.entries.push_back(std::move(e));
  }
  if (man.entries.empty()) {
    throw StructuralError("manifest " + path.string() + " lists no records");
  }
  return man;
}

Dataset load_csv(const std::filesystem::path& manifest_path) {
  const Manifest man = load_manifest(manifest_path);

  std::map<std::uint32_t, std::array<const ManifestEntry*, 2>> train;
  std::array<const ManifestEntry*, 2> test{nullptr, nullptr};
  for (const ManifestEntry& e : man.entries) {
    auto& slot = e.is_test ? test[e.cls - 1] : train[e.task][e.cls - 1];
    if (slot != nullptr) {
      throw StructuralError("duplicate manifest record for " +
                            (e.is_test ? std::string("test")
                                       : "task " + std::to_string(e.task)) +
                            " class " + std::to_string(e.cls));
    }
    slot = &e;
  }
  if (train.empty()) {
    throw StructuralError("manifest lists no training tasks");
  }

  Dataset ds;
  long p = -1;
  auto load_entry = [&](const ManifestEntry& e) {
    Eigen::MatrixXd m = load_csv_matrix(e.path);
    if (m.cols() != e.count) {
      throw StructuralError(e.path.string() + " holds " +
                            std::to_string(m.cols()) +
                            " samples, manifest declares " +
                            std::to_string(e.count));
    }
    if (p < 0) {
      p = m.rows();
    } else if (m.rows() != p) {
      throw StructuralError(e.path.string() + " has dimension " +
                            std::to_string(m.rows()) + ", expected " +
                            std::to_string(p));
    }
    return m;
  };

  for (const auto& [task_id, classes] : train) {
    TaskData td;
    td.task_id = task_id;
    for (int j = 0; j < 2; ++j) {
      if (classes[j] == nullptr) {
        throw StructuralError("task " + std::to_string(task_id) +
                              " is missing class " + std::to_string(j + 1));
      }
      td.cls[j] = load_entry(*classes[j]);
    }
    ds.tasks.push_back(std::move(td));
  }

  if (test[0] != nullptr || test[1] != nullptr) {
    std::vector<Eigen::MatrixXd> blocks;
    std::vector<int> labels;
    for (int j = 0; j < 2; ++j) {
      if (test[j] == nullptr) continue;
      Eigen::MatrixXd m = load_entry(*test[j]);
      labels.insert(labels.end(), static_cast<std::size_t>(m.cols()), j + 1);
      blocks.push_back(std::move(m));
    }
    long total = 0;
    for (const auto& b : blocks) total += b.cols();
    ds.test.resize(p, total);
    long at = 0;
    for (const auto& b : blocks) {
      ds.test.middleCols(at, b.cols()) = b;
      at += b.cols();
    }
    ds.test_labels = std::move(labels);
  }
  return ds;
}

void write_csv_matrix(const std::filesystem::path& path,
                      const Eigen::MatrixXd& data) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) {
    throw Error("cannot write " + path.string());
  }
  std::string line;
  for (long col = 0; col < data.cols(); ++col) {
    line.clear();
    for (long row = 0; row < data.rows(); ++row) {
      if (row > 0) line.push_back(',');
      append_double(line, data(row, col));
    }
    line.push_back('\n');
    out << line;
  }
  if (!out) {
    throw Error("failed while writing " + path.string());
  }
}

std::filesystem::path write_dataset_csv(const Dataset& dataset,
                                        const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::ofstream man(dir / "manifest.txt", std::ios::trunc);
  if (!man) {
    throw Error("cannot write manifest under " + dir.string());
  }
  for (const TaskData& t : dataset.tasks) {
    for (int j = 0; j < 2; ++j) {
      const std::string name = "task" + std::to_string(t.task_id) + "_class" +
                               std::to_string(j + 1) + ".csv";
      write_csv_matrix(dir / name, t.cls[j]);
      man << t.task_id << ',' << (j + 1) << ',' << name << ','
          << t.cls[j].cols() << '\n';
    }
  }
  if (dataset.test.cols() > 0) {
    for (int j = 0; j < 2; ++j) {
      std::vector<long> idx;
      for (std::size_t i = 0; i < dataset.test_labels.size(); ++i) {
        if (dataset.test_labels[i] == j + 1) idx.push_back(static_cast<long>(i));
      }
      if (idx.empty()) continue;
      Eigen::MatrixXd block(dataset.test.rows(),
                            static_cast<long>(idx.size()));
      for (std::size_t i = 0; i < idx.size(); ++i) {
        block.col(static_cast<long>(i)) = dataset.test.col(idx[i]);
      }
      const std::string name = "test_class" + std::to_string(j + 1) + ".csv";
      write_csv_matrix(dir / name, block);
      man << "test," << (j + 1) << ',' << name << ',' << idx.size() << '\n';
    }
  }
  return dir / "manifest.txt";
}

}  // namespace mtlspca
