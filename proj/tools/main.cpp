#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperprop/builder.hpp"
#include "hyperprop/coexpression.hpp"
#include "hyperprop/evaluation.hpp"
#include "hyperprop/io.hpp"
#include "hyperprop/operators.hpp"
#include "hyperprop/synthetic.hpp"

namespace fs = std::filesystem;
using namespace hyperprop;

namespace {

constexpr std::uint64_t kDefaultClusterSeed = 13;
constexpr std::uint64_t kDefaultFoldSeed = 17;
constexpr std::uint64_t kDefaultSyntheticSeed = 42;

std::vector<Method> parse_method_list(const std::string& list) {
  if (list == "all") return all_methods();
  std::vector<Method> methods;
  std::stringstream stream(list);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (!token.empty()) methods.push_back(parse_method(token));
  }
  if (methods.empty()) {
    throw std::invalid_argument("--methods named no methods");
  }
  return methods;
}

void print_degree_summary(const std::string& label, const Vector& degrees) {
  std::cout << "  " << label << ": min " << degrees.minCoeff() << ", max "
            << degrees.maxCoeff() << ", mean " << degrees.mean() << "\n";
}

int run_generate(const SyntheticSpec& spec, const fs::path& out_dir) {
  auto [expression, annotations] = generate_synthetic(spec);
  fs::create_directories(out_dir);
  write_expression_tsv(expression, out_dir / "expression.tsv");
  write_annotations_tsv(annotations, out_dir / "annotations.tsv");
  std::cout << "wrote " << (out_dir / "expression.tsv").string() << " ("
            << expression.n_genes() << " genes x " << expression.n_experiments()
            << " experiments)\n";
  std::cout << "wrote " << (out_dir / "annotations.tsv").string() << " ("
            << annotations.n_classes() << " classes)\n";
  return 0;
}

int run_build(const fs::path& expression_path, double threshold, std::uint64_t cluster_seed,
              const fs::path& out_dir) {
  const ExpressionMatrix x = load_expression(expression_path);
  const ExpressionMatrix z = zscore_rows(x);
  fs::create_directories(out_dir);

  const int k = cluster_count(z.n_genes());
  const ClusterAssignment assignment = kmeans(z, k, cluster_seed);
  const Hypergraph hg = incidence_from_clusters(assignment);
  write_assignments_tsv(x.gene_ids, assignment, out_dir / "assignments.tsv");
  {
    std::ofstream out(out_dir / "incidence.tsv", std::ios::binary);
    write_coordinate_list(hg, out);
    if (!out) {
      throw std::runtime_error("write failed: " + (out_dir / "incidence.tsv").string());
    }
  }

  const SimilarityMatrix similarity = coexpression_similarity(z);
  const AdjacencyMatrix adjacency = threshold_adjacency(similarity, threshold);
  write_adjacency_tsv(x.gene_ids, adjacency, out_dir / "adjacency.tsv");

  std::cout << "hypergraph: " << hg.n_edges() << " hyperedges over " << hg.n_vertices()
            << " genes (" << assignment.singleton_repairs << " singleton repairs)\n";
  std::cout << "graph: " << static_cast<long long>(adjacency.values.sum() / 2.0)
            << " edges at threshold " << threshold << "\n";
  std::cout << "wrote assignments.tsv, incidence.tsv, adjacency.tsv under "
            << out_dir.string() << "\n";
  return 0;
}

int run_experiment_command(const fs::path& expression_path, const fs::path& annotations_path,
                           const std::string& methods_list, const PropagationConfig& params,
                           double threshold, int k_folds, std::uint64_t cluster_seed,
                           std::uint64_t fold_seed, const fs::path& out_dir) {
  validate(params);
  if (!(threshold >= 0.0 && threshold < 1.0)) {
    throw std::invalid_argument("--threshold must lie in [0,1)");
  }
  const std::vector<Method> methods = parse_method_list(methods_list);
  const ExpressionMatrix x = load_expression(expression_path);
  const AnnotationMatrix ann = load_annotations(annotations_path, x);
  const FoldPlan folds = kfold_split(x.n_genes(), k_folds, fold_seed);

  const ExperimentReport report =
      run_experiment(x, ann, methods, params, folds, {threshold, cluster_seed});

  // The experiment is fully solved before anything touches the output
  // directory, so a failure never leaves a partial report behind.
  const std::string csv_text = report_to_csv(report);

  const bool wants_hypergraph = std::any_of(methods.begin(), methods.end(), [](Method m) {
    return m != Method::graph_unnormalized;
  });
  const bool wants_graph = std::any_of(methods.begin(), methods.end(), [](Method m) {
    return m == Method::graph_unnormalized;
  });

  fs::create_directories(out_dir);
  write_report_json(report, out_dir / "report.json");
  write_report_csv(report, out_dir / "report.csv");
  const ExpressionMatrix z = zscore_rows(x);
  if (wants_hypergraph) {
    const ClusterAssignment assignment = kmeans(z, cluster_count(z.n_genes()), cluster_seed);
    write_assignments_tsv(x.gene_ids, assignment, out_dir / "assignments.tsv");
  }
  if (wants_graph) {
    const AdjacencyMatrix adjacency =
        threshold_adjacency(coexpression_similarity(z), threshold);
    write_adjacency_tsv(x.gene_ids, adjacency, out_dir / "adjacency.tsv");
  }

  std::cout << csv_text;
  for (const MethodResult& result : report.results) {
    std::cout << to_string(result.method) << ": average Q = " << result.average_q << "\n";
  }
  std::cout << "report written to " << (out_dir / "report.json").string() << "\n";
  return 0;
}

int run_inspect(const fs::path& expression_path, double threshold, std::uint64_t cluster_seed,
                Index spectrum_cap) {
  const ExpressionMatrix x = load_expression(expression_path);
  const ExpressionMatrix z = zscore_rows(x);
  std::cout << "expression: " << x.n_genes() << " genes x " << x.n_experiments()
            << " experiments\n";

  const int k = cluster_count(z.n_genes());
  const ClusterAssignment assignment = kmeans(z, k, cluster_seed);
  const Hypergraph hg = incidence_from_clusters(assignment);
  const DegreeVectors d = compute_degrees(hg);
  std::cout << "hypergraph: " << hg.n_edges() << " hyperedges"
            << " (requested " << k << ", singleton repairs " << assignment.singleton_repairs
            << ")\n";
  print_degree_summary("vertex degrees", d.vertex);
  print_degree_summary("edge degrees", d.edge);

  const SimilarityMatrix similarity = coexpression_similarity(z);
  const AdjacencyMatrix adjacency = threshold_adjacency(similarity, threshold);
  const Vector graph_degrees = adjacency.values.rowwise().sum();
  const Index isolated = (graph_degrees.array() == 0.0).count();
  std::cout << "graph: " << static_cast<long long>(adjacency.values.sum() / 2.0)
            << " edges at threshold " << threshold << ", " << isolated
            << " isolated genes\n";
  print_degree_summary("graph degrees", graph_degrees);

  if (x.n_genes() <= spectrum_cap) {
    const auto report_spectrum = [](const std::string& name, const OperatorMatrix& op) {
      const auto [lo, hi] = spectrum_extremes(op);
      std::cout << "  spectrum " << name << ": [" << lo << ", " << hi << "]\n";
    };
    report_spectrum("L(hypergraph)", unnormalized_laplacian(hg, d));
    report_spectrum("L_sym", symmetric_laplacian(hg, d));
    report_spectrum("L_rw", random_walk_laplacian(hg, d));
    report_spectrum("S_rw", propagation_matrix(hg, d, PropagationKind::random_walk));
    report_spectrum("L(graph)", graph_laplacian(adjacency));
  } else {
    std::cout << "  (spectrum skipped: " << x.n_genes() << " genes exceeds cap "
              << spectrum_cap << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hypergraph Laplacian label propagation for gene function prediction"};
  app.require_subcommand(1);

  // generate
  SyntheticSpec spec;
  spec.seed = kDefaultSyntheticSeed;
  std::string generate_out = "data";
  CLI::App* generate = app.add_subcommand("generate", "Write a synthetic planted-module dataset");
  generate->add_option("--genes", spec.n_genes, "Number of genes")->check(CLI::PositiveNumber);
  generate->add_option("--experiments", spec.n_experiments, "Number of experiments")
      ->check(CLI::PositiveNumber);
  generate->add_option("--modules", spec.n_modules, "Number of planted modules")
      ->check(CLI::PositiveNumber);
  generate->add_option("--classes", spec.n_classes, "Number of functional classes")
      ->check(CLI::PositiveNumber);
  generate->add_option("--noise", spec.noise, "Within-module noise level")
      ->check(CLI::NonNegativeNumber);
  generate->add_option("--seed", spec.seed, "Generator seed");
  generate->add_option("--out", generate_out, "Output directory");

  // build
  std::string build_expression;
  double build_threshold = 0.5;
  std::uint64_t build_cluster_seed = kDefaultClusterSeed;
  std::string build_out = "artifacts";
  CLI::App* build = app.add_subcommand("build", "Build hypergraph and graph artifacts");
  build->add_option("--expression", build_expression, "Expression matrix file")->required();
  build->add_option("--threshold", build_threshold, "Co-expression adjacency threshold");
  build->add_option("--cluster-seed", build_cluster_seed, "k-means seed");
  build->add_option("--out", build_out, "Output directory");

  // run
  std::string run_expression, run_annotations;
  std::string run_methods = "all";
  PropagationConfig params;
  double run_threshold = 0.5;
  int run_folds = 3;
  std::uint64_t run_cluster_seed = kDefaultClusterSeed;
  std::uint64_t run_fold_seed = kDefaultFoldSeed;
  std::string run_out = "results";
  CLI::App* run = app.add_subcommand("run", "Run the cross-validated experiment");
  run->add_option("--expression", run_expression, "Expression matrix file")->required();
  run->add_option("--annotations", run_annotations, "Annotation matrix file")->required();
  run->add_option("--methods", run_methods,
                  "Comma-separated methods (graph-unnormalized, hypergraph-unnormalized, "
                  "hypergraph-random-walk, hypergraph-symmetric) or 'all'");
  run->add_option("--alpha", params.alpha, "Propagation mixing weight, in (0,1)");
  run->add_option("--gamma", params.gamma, "Regularization fidelity weight, > 0");
  run->add_option("--threshold", run_threshold, "Co-expression adjacency threshold");
  run->add_option("--folds", run_folds, "Cross-validation folds")->check(CLI::Range(2, 1000));
  run->add_option("--cluster-seed", run_cluster_seed, "k-means seed");
  run->add_option("--fold-seed", run_fold_seed, "Fold assignment seed");
  run->add_option("--out", run_out, "Output directory");

  // inspect
  std::string inspect_expression;
  double inspect_threshold = 0.5;
  std::uint64_t inspect_cluster_seed = kDefaultClusterSeed;
  Index inspect_cap = 200;
  CLI::App* inspect = app.add_subcommand("inspect", "Print operator statistics");
  inspect->add_option("--expression", inspect_expression, "Expression matrix file")->required();
  inspect->add_option("--threshold", inspect_threshold, "Co-expression adjacency threshold");
  inspect->add_option("--cluster-seed", inspect_cluster_seed, "k-means seed");
  inspect->add_option("--spectrum-cap", inspect_cap,
                      "Largest gene count for which spectra are computed");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      return run_generate(spec, generate_out);
    }
    if (build->parsed()) {
      return run_build(build_expression, build_threshold, build_cluster_seed, build_out);
    }
    if (run->parsed()) {
      return run_experiment_command(run_expression, run_annotations, run_methods, params,
                                    run_threshold, run_folds, run_cluster_seed, run_fold_seed,
                                    run_out);
    }
    if (inspect->parsed()) {
      return run_inspect(inspect_expression, inspect_threshold, inspect_cluster_seed,
                         inspect_cap);
    }
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
