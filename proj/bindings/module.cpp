#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperprop/builder.hpp"
#include "hyperprop/coexpression.hpp"
#include "hyperprop/evaluation.hpp"
#include "hyperprop/io.hpp"
#include "hyperprop/labels.hpp"
#include "hyperprop/operators.hpp"
#include "hyperprop/synthetic.hpp"

namespace py = pybind11;
using namespace hyperprop;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
  return py::module_::import("json").attr("loads")(py::str(j.dump()));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hypergraph Laplacian label propagation for gene function prediction";

  py::class_<Hypergraph>(m, "Hypergraph")
      .def(py::init<Matrix, Vector>(), py::arg("incidence"), py::arg("edge_weights"))
      .def_property_readonly("n_vertices", &Hypergraph::n_vertices)
      .def_property_readonly("n_edges", &Hypergraph::n_edges)
      .def_property_readonly("incidence", &Hypergraph::incidence)
      .def_property_readonly("edge_weights", &Hypergraph::edge_weights);

  py::class_<DegreeVectors>(m, "DegreeVectors")
      .def_readonly("vertex", &DegreeVectors::vertex)
      .def_readonly("edge", &DegreeVectors::edge);

  py::enum_<OperatorKind>(m, "OperatorKind")
      .value("unnormalized_laplacian", OperatorKind::unnormalized_laplacian)
      .value("symmetric_laplacian", OperatorKind::symmetric_laplacian)
      .value("random_walk_laplacian", OperatorKind::random_walk_laplacian)
      .value("random_walk_propagation", OperatorKind::random_walk_propagation)
      .value("symmetric_propagation", OperatorKind::symmetric_propagation);

  py::enum_<PropagationKind>(m, "PropagationKind")
      .value("random_walk", PropagationKind::random_walk)
      .value("symmetric", PropagationKind::symmetric);

  py::class_<OperatorMatrix>(m, "OperatorMatrix")
      .def_readonly("kind", &OperatorMatrix::kind)
      .def_readonly("values", &OperatorMatrix::values)
      .def_readonly("vertex_degrees", &OperatorMatrix::vertex_degrees);

  m.def("compute_degrees", &compute_degrees, py::arg("hypergraph"));
  m.def("unnormalized_laplacian", &unnormalized_laplacian, py::arg("hypergraph"),
        py::arg("degrees"));
  m.def("symmetric_laplacian", &symmetric_laplacian, py::arg("hypergraph"), py::arg("degrees"));
  m.def("random_walk_laplacian", &random_walk_laplacian, py::arg("hypergraph"),
        py::arg("degrees"));
  m.def("propagation_matrix", &propagation_matrix, py::arg("hypergraph"), py::arg("degrees"),
        py::arg("kind"));
  m.def("quadratic_form", &quadratic_form, py::arg("hypergraph"), py::arg("degrees"),
        py::arg("f"));
  m.def("spectrum_extremes", &spectrum_extremes, py::arg("operator"));

  py::enum_<LabelRole>(m, "LabelRole")
      .value("initial", LabelRole::initial)
      .value("estimate", LabelRole::estimate);

  py::class_<LabelMatrix>(m, "LabelMatrix")
      .def(py::init([](Matrix values, LabelRole role) {
             return LabelMatrix{std::move(values), role};
           }),
           py::arg("values"), py::arg("role") = LabelRole::initial)
      .def_readonly("values", &LabelMatrix::values)
      .def_readonly("role", &LabelMatrix::role);

  py::class_<PropagationConfig>(m, "PropagationConfig")
      .def(py::init([](double alpha, double gamma, double tolerance, int max_iterations) {
             return PropagationConfig{alpha, gamma, tolerance, max_iterations};
           }),
           py::arg("alpha") = 0.85, py::arg("gamma") = 1.0, py::arg("tolerance") = 1e-6,
           py::arg("max_iterations") = 1000)
      .def_readwrite("alpha", &PropagationConfig::alpha)
      .def_readwrite("gamma", &PropagationConfig::gamma)
      .def_readwrite("tolerance", &PropagationConfig::tolerance)
      .def_readwrite("max_iterations", &PropagationConfig::max_iterations);

  py::class_<PropagationResult>(m, "PropagationResult")
      .def_readonly("labels", &PropagationResult::labels)
      .def_readonly("iterations", &PropagationResult::iterations)
      .def_readonly("converged", &PropagationResult::converged);

  py::class_<ExpressionMatrix>(m, "ExpressionMatrix")
      .def(py::init([](Matrix values, std::vector<std::string> gene_ids) {
             ExpressionMatrix x{std::move(values), std::move(gene_ids)};
             validate(x);
             return x;
           }),
           py::arg("values"), py::arg("gene_ids"))
      .def_readonly("values", &ExpressionMatrix::values)
      .def_readonly("gene_ids", &ExpressionMatrix::gene_ids)
      .def_property_readonly("n_genes", &ExpressionMatrix::n_genes)
      .def_property_readonly("n_experiments", &ExpressionMatrix::n_experiments);

  py::class_<AnnotationMatrix>(m, "AnnotationMatrix")
      .def(py::init([](Matrix values, std::vector<std::string> gene_ids,
                       std::vector<std::string> class_ids) {
             AnnotationMatrix ann{std::move(values), std::move(gene_ids), std::move(class_ids)};
             validate(ann);
             return ann;
           }),
           py::arg("values"), py::arg("gene_ids"), py::arg("class_ids"))
      .def_readonly("values", &AnnotationMatrix::values)
      .def_readonly("gene_ids", &AnnotationMatrix::gene_ids)
      .def_readonly("class_ids", &AnnotationMatrix::class_ids);

  m.def("evaluable_classes", &evaluable_classes, py::arg("annotations"));
  m.def("build_initial_labels", &build_initial_labels, py::arg("annotations"),
        py::arg("train_mask"));
  m.def("propagate_iterative", &propagate_iterative, py::arg("s"), py::arg("y"),
        py::arg("config"));
  m.def("propagate_closed_form", &propagate_closed_form, py::arg("s"), py::arg("y"),
        py::arg("alpha"));
  m.def("solve_unnormalized", &solve_unnormalized, py::arg("laplacian"), py::arg("y"),
        py::arg("gamma"));
  m.def("solve_sym_regularized", &solve_sym_regularized, py::arg("laplacian"), py::arg("y"),
        py::arg("gamma"));
  m.def("predict", &predict, py::arg("f"));

  py::class_<ClusterAssignment>(m, "ClusterAssignment")
      .def_readonly("labels", &ClusterAssignment::labels)
      .def_readonly("k", &ClusterAssignment::k)
      .def_readonly("seed", &ClusterAssignment::seed)
      .def_readonly("singleton_repairs", &ClusterAssignment::singleton_repairs);

  m.def("zscore_rows", &zscore_rows, py::arg("expression"));
  m.def("cluster_count", &cluster_count, py::arg("n_points"));
  m.def("kmeans", &kmeans, py::arg("expression"), py::arg("k"), py::arg("seed"));
  m.def("incidence_from_clusters", &incidence_from_clusters, py::arg("assignment"));

  py::class_<SimilarityMatrix>(m, "SimilarityMatrix")
      .def_readonly("values", &SimilarityMatrix::values);
  py::class_<AdjacencyMatrix>(m, "AdjacencyMatrix")
      .def_readonly("values", &AdjacencyMatrix::values)
      .def_readonly("threshold", &AdjacencyMatrix::threshold);

  m.def("coexpression_similarity", &coexpression_similarity, py::arg("expression"));
  m.def("threshold_adjacency", &threshold_adjacency, py::arg("similarity"),
        py::arg("threshold") = 0.5);
  m.def("graph_laplacian", &graph_laplacian, py::arg("adjacency"));

  py::class_<FoldPlan>(m, "FoldPlan")
      .def_readonly("k_folds", &FoldPlan::k_folds)
      .def_readonly("assignments", &FoldPlan::assignments)
      .def_readonly("seed", &FoldPlan::seed);

  m.def("kfold_split", &kfold_split, py::arg("n"), py::arg("k"), py::arg("seed"));
  m.def("accuracy", &accuracy, py::arg("predicted"), py::arg("truth"));

  m.def(
      "generate_synthetic",
      [](Index genes, Index experiments, Index modules, Index classes, double noise,
         std::uint64_t seed) {
        SyntheticSpec spec{genes, experiments, modules, classes, noise, seed};
        return generate_synthetic(spec);
      },
      py::arg("genes") = 300, py::arg("experiments") = 20, py::arg("modules") = 12,
      py::arg("classes") = 6, py::arg("noise") = 0.3, py::arg("seed") = 42);

  m.def(
      "run_experiment",
      [](const ExpressionMatrix& x, const AnnotationMatrix& ann,
         const std::vector<std::string>& methods, double alpha, double gamma, double threshold,
         int folds, std::uint64_t cluster_seed, std::uint64_t fold_seed) {
        std::vector<Method> parsed;
        if (methods.size() == 1 && methods[0] == "all") {
          parsed = all_methods();
        } else {
          for (const std::string& name : methods) parsed.push_back(parse_method(name));
        }
        PropagationConfig params;
        params.alpha = alpha;
        params.gamma = gamma;
        const FoldPlan plan = kfold_split(x.n_genes(), folds, fold_seed);
        const ExperimentReport report =
            run_experiment(x, ann, parsed, params, plan, {threshold, cluster_seed});
        return json_to_py(report_to_json(report));
      },
      py::arg("expression"), py::arg("annotations"),
      py::arg("methods") = std::vector<std::string>{"all"}, py::arg("alpha") = 0.85,
      py::arg("gamma") = 1.0, py::arg("threshold") = 0.5, py::arg("folds") = 3,
      py::arg("cluster_seed") = 13, py::arg("fold_seed") = 17,
      "Run the cross-validated experiment and return the report as a dict.");

#ifdef HYPERPROP_VERSION
  m.attr("__version__") = HYPERPROP_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
