#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperprop/builder.hpp"
#include "hyperprop/coexpression.hpp"
#include "hyperprop/data.hpp"
#include "hyperprop/evaluation.hpp"

namespace hyperprop {

/// Delimited numeric table with one header row (experiment names) and the
/// gene identifier in the first column. Tab or comma delimited, detected
/// from the header. Every parse failure names the file and line.
ExpressionMatrix load_expression(const std::filesystem::path& path);

/// Same table layout with class identifiers in the header and binary
/// cells. Rows are aligned to the reference expression matrix; any gene
/// present on one side only is rejected by name.
AnnotationMatrix load_annotations(const std::filesystem::path& path,
                                  const ExpressionMatrix& reference);

void write_expression_tsv(const ExpressionMatrix& x, const std::filesystem::path& path);
void write_annotations_tsv(const AnnotationMatrix& ann, const std::filesystem::path& path);

/// gene_id<TAB>cluster_index, one row per gene.
void write_assignments_tsv(const std::vector<std::string>& gene_ids,
                           const ClusterAssignment& assignment,
                           const std::filesystem::path& path);

/// gene_id_i<TAB>gene_id_j, one row per undirected edge (i < j).
void write_adjacency_tsv(const std::vector<std::string>& gene_ids, const AdjacencyMatrix& a,
                         const std::filesystem::path& path);

nlohmann::ordered_json report_to_json(const ExperimentReport& report);

/// Flat table: method columns, one average-accuracy row.
std::string report_to_csv(const ExperimentReport& report);

void write_report_json(const ExperimentReport& report, const std::filesystem::path& path);
void write_report_csv(const ExperimentReport& report, const std::filesystem::path& path);

}  // namespace hyperprop
