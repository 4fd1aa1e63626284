#include "hyperprop/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace hyperprop {

namespace {

std::string format_full(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& line, char delim) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, delim)) cells.push_back(cell);
  if (!line.empty() && line.back() == delim) cells.push_back("");
  return cells;
}

struct Table {
  std::vector<std::string> column_ids;
  std::vector<std::string> row_ids;
  Matrix values;
};

[[noreturn]] void fail(const std::filesystem::path& path, int line_no, const std::string& what) {
  throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) + ": " + what);
}

double parse_cell(const std::filesystem::path& path, int line_no, const std::string& raw) {
  const std::string text = trim(raw);
  if (text.empty()) {
    fail(path, line_no, "missing cell");
  }
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (end != text.c_str() + text.size()) {
    fail(path, line_no, "non-numeric cell '" + text + "'");
  }
  return value;
}

Table load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path.string());
  }
  std::string header;
  if (!std::getline(in, header)) {
    throw std::invalid_argument(path.string() + ": empty file");
  }
  char delim;
  if (header.find('\t') != std::string::npos) {
    delim = '\t';
  } else if (header.find(',') != std::string::npos) {
    delim = ',';
  } else {
    fail(path, 1, "cannot detect delimiter (no tab or comma in header)");
  }

  std::vector<std::string> header_cells = split(header, delim);
  Table table;
  for (std::size_t i = 1; i < header_cells.size(); ++i) {
    const std::string id = trim(header_cells[i]);
    if (id.empty()) fail(path, 1, "empty column name");
    table.column_ids.push_back(id);
  }
  if (table.column_ids.empty()) {
    fail(path, 1, "header names no data columns");
  }

  std::vector<std::vector<double>> rows;
  std::unordered_map<std::string, int> seen;
  std::string line;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const std::vector<std::string> cells = split(line, delim);
    if (cells.size() != table.column_ids.size() + 1) {
      fail(path, line_no,
           "expected " + std::to_string(table.column_ids.size() + 1) + " cells, got " +
               std::to_string(cells.size()));
    }
    const std::string row_id = trim(cells[0]);
    if (row_id.empty()) fail(path, line_no, "empty row identifier");
    const auto [it, inserted] = seen.emplace(row_id, line_no);
    if (!inserted) {
      fail(path, line_no,
           "duplicate identifier '" + row_id + "' (first seen on line " +
               std::to_string(it->second) + ")");
    }
    table.row_ids.push_back(row_id);
    std::vector<double> row;
    row.reserve(table.column_ids.size());
    for (std::size_t i = 1; i < cells.size(); ++i) {
      row.push_back(parse_cell(path, line_no, cells[i]));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw std::invalid_argument(path.string() + ": no data rows");
  }

  table.values.resize(static_cast<Index>(rows.size()), static_cast<Index>(table.column_ids.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      table.values(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
    }
  }
  return table;
}

void write_or_throw(const std::string& content, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot open for writing: " + path.string());
  }
  out << content;
  if (!out) {
    throw std::runtime_error("write failed: " + path.string());
  }
}

}  // namespace

ExpressionMatrix load_expression(const std::filesystem::path& path) {
  Table table = load_table(path);
  ExpressionMatrix x{std::move(table.values), std::move(table.row_ids)};
  validate(x);
  return x;
}

AnnotationMatrix load_annotations(const std::filesystem::path& path,
                                  const ExpressionMatrix& reference) {
  Table table = load_table(path);
  for (Index i = 0; i < table.values.rows(); ++i) {
    for (Index j = 0; j < table.values.cols(); ++j) {
      const double v = table.values(i, j);
      if (v != 0.0 && v != 1.0) {
        throw std::invalid_argument(path.string() + ": annotation for gene '" +
                                    table.row_ids[static_cast<std::size_t>(i)] + "', class '" +
                                    table.column_ids[static_cast<std::size_t>(j)] +
                                    "' is not 0 or 1");
      }
    }
  }

  std::unordered_map<std::string, Index> row_of;
  for (std::size_t i = 0; i < table.row_ids.size(); ++i) {
    row_of.emplace(table.row_ids[i], static_cast<Index>(i));
  }
  const std::unordered_set<std::string> known(reference.gene_ids.begin(),
                                              reference.gene_ids.end());
  for (const std::string& gene : table.row_ids) {
    if (!known.contains(gene)) {
      throw std::invalid_argument(path.string() + ": gene '" + gene +
                                  "' is not in the expression matrix");
    }
  }

  AnnotationMatrix ann;
  ann.class_ids = table.column_ids;
  ann.gene_ids = reference.gene_ids;
  ann.values.resize(reference.n_genes(), static_cast<Index>(table.column_ids.size()));
  for (Index i = 0; i < reference.n_genes(); ++i) {
    const auto it = row_of.find(reference.gene_ids[static_cast<std::size_t>(i)]);
    if (it == row_of.end()) {
      throw std::invalid_argument(path.string() + ": gene '" +
                                  reference.gene_ids[static_cast<std::size_t>(i)] +
                                  "' has no annotation row");
    }
    ann.values.row(i) = table.values.row(it->second);
  }
  validate(ann);
  return ann;
}

void write_expression_tsv(const ExpressionMatrix& x, const std::filesystem::path& path) {
  std::ostringstream out;
  out << "gene_id";
  for (Index t = 0; t < x.n_experiments(); ++t) out << "\texp" << t;
  out << '\n';
  for (Index i = 0; i < x.n_genes(); ++i) {
    out << x.gene_ids[static_cast<std::size_t>(i)];
    for (Index t = 0; t < x.n_experiments(); ++t) {
      out << '\t' << format_full(x.values(i, t));
    }
    out << '\n';
  }
  write_or_throw(out.str(), path);
}

void write_annotations_tsv(const AnnotationMatrix& ann, const std::filesystem::path& path) {
  std::ostringstream out;
  out << "gene_id";
  for (const std::string& id : ann.class_ids) out << '\t' << id;
  out << '\n';
  for (Index i = 0; i < ann.n_genes(); ++i) {
    out << ann.gene_ids[static_cast<std::size_t>(i)];
    for (Index j = 0; j < ann.n_classes(); ++j) {
      out << '\t' << static_cast<int>(ann.values(i, j));
    }
    out << '\n';
  }
  write_or_throw(out.str(), path);
}

void write_assignments_tsv(const std::vector<std::string>& gene_ids,
                           const ClusterAssignment& assignment,
                           const std::filesystem::path& path) {
  if (gene_ids.size() != assignment.labels.size()) {
    throw std::invalid_argument("write_assignments_tsv: id count does not match labels");
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < gene_ids.size(); ++i) {
    out << gene_ids[i] << '\t' << assignment.labels[i] << '\n';
  }
  write_or_throw(out.str(), path);
}

void write_adjacency_tsv(const std::vector<std::string>& gene_ids, const AdjacencyMatrix& a,
                         const std::filesystem::path& path) {
  if (static_cast<Index>(gene_ids.size()) != a.size()) {
    throw std::invalid_argument("write_adjacency_tsv: id count does not match adjacency");
  }
  std::ostringstream out;
  for (Index i = 0; i < a.size(); ++i) {
    for (Index j = i + 1; j < a.size(); ++j) {
      if (a.values(i, j) == 1.0) {
        out << gene_ids[static_cast<std::size_t>(i)] << '\t'
            << gene_ids[static_cast<std::size_t>(j)] << '\n';
      }
    }
  }
  write_or_throw(out.str(), path);
}

nlohmann::ordered_json report_to_json(const ExperimentReport& report) {
  nlohmann::ordered_json j;
  j["schema_version"] = report.schema_version;
  j["dataset"] = {{"n_genes", report.n_genes},
                  {"n_experiments", report.n_experiments},
                  {"n_classes", report.n_classes}};
  j["parameters"] = {{"alpha", report.params.alpha},
                     {"gamma", report.params.gamma},
                     {"tolerance", report.params.tolerance},
                     {"max_iterations", report.params.max_iterations},
                     {"threshold", report.threshold},
                     {"k_folds", report.k_folds}};
  j["seeds"] = {{"cluster", report.cluster_seed}, {"fold", report.fold_seed}};
  j["hypergraph"] = {{"n_hyperedges", report.n_hyperedges},
                     {"singleton_repairs", report.singleton_repairs}};

  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (Index c = 0; c < report.n_classes; ++c) {
    classes.push_back({{"id", report.class_ids[static_cast<std::size_t>(c)]},
                       {"evaluable", static_cast<bool>(
                                         report.class_evaluable[static_cast<std::size_t>(c)])}});
  }
  j["classes"] = std::move(classes);

  nlohmann::ordered_json methods = nlohmann::ordered_json::array();
  for (const MethodResult& result : report.results) {
    nlohmann::ordered_json m;
    m["name"] = to_string(result.method);
    m["average_q"] = result.average_q;
    m["fold_converged"] = result.fold_converged;
    nlohmann::ordered_json per_class = nlohmann::ordered_json::array();
    for (Index c = 0; c < report.n_classes; ++c) {
      nlohmann::ordered_json entry;
      entry["id"] = report.class_ids[static_cast<std::size_t>(c)];
      if (!report.class_evaluable[static_cast<std::size_t>(c)]) {
        entry["excluded"] = true;
      } else {
        const auto& mean = result.class_mean[static_cast<std::size_t>(c)];
        if (mean.has_value()) {
          entry["mean_q"] = *mean;
        } else {
          entry["mean_q"] = nullptr;
        }
        entry["fold_q"] = result.q[static_cast<std::size_t>(c)];
      }
      per_class.push_back(std::move(entry));
    }
    m["per_class"] = std::move(per_class);
    methods.push_back(std::move(m));
  }
  j["methods"] = std::move(methods);

  nlohmann::ordered_json agreements = nlohmann::ordered_json::array();
  for (const PairwiseAgreement& agreement : report.agreements) {
    agreements.push_back({{"methods", {to_string(agreement.first), to_string(agreement.second)}},
                          {"rate", agreement.rate}});
  }
  j["prediction_agreement"] = std::move(agreements);
  return j;
}

std::string report_to_csv(const ExperimentReport& report) {
  std::ostringstream out;
  out << "classes";
  for (const MethodResult& result : report.results) {
    out << ',' << to_string(result.method);
  }
  out << '\n';
  out << "average_accuracy";
  char buffer[32];
  for (const MethodResult& result : report.results) {
    std::snprintf(buffer, sizeof(buffer), "%.6f", result.average_q);
    out << ',' << buffer;
  }
  out << '\n';
  return out.str();
}

void write_report_json(const ExperimentReport& report, const std::filesystem::path& path) {
  write_or_throw(report_to_json(report).dump(2) + "\n", path);
}

void write_report_csv(const ExperimentReport& report, const std::filesystem::path& path) {
  write_or_throw(report_to_csv(report), path);
}

}  // namespace hyperprop
