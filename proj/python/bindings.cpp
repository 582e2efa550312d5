#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "repdet/closed_form.hpp"
#include "repdet/graph.hpp"
#include "repdet/io.hpp"
#include "repdet/model.hpp"
#include "repdet/oracle.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

py::array_t<double> dense_to_numpy(const repdet::DenseSymMatrix& m) {
    const auto dim = static_cast<py::ssize_t>(m.dim());
    py::array_t<double> out({dim, dim});
    auto view = out.mutable_unchecked<2>();
    for (py::ssize_t i = 0; i < dim; ++i)
        for (py::ssize_t j = 0; j < dim; ++j) view(i, j) = m.at(i, j);
    return out;
}

}  // namespace

PYBIND11_MODULE(_repdet, m) {
    m.doc() = "Exact log-determinants of sparse Gaussian models whose interaction graph is a "
              "replacement product of complete graphs";

    py::register_exception<repdet::NotPositiveDefinite>(m, "NotPositiveDefiniteError");
    py::register_exception<repdet::OracleCapExceeded>(m, "OracleCapExceededError");

    py::class_<repdet::ModelSpec>(m, "ModelSpec")
        .def(py::init([](int n, double rho, double sigma_sq, const std::vector<double>& s_sq) {
                 repdet::ModelSpec spec{n, rho, sigma_sq, s_sq};
                 spec.validate();
                 return spec;
             }),
             "n"_a, "rho"_a, "sigma_sq"_a, "s_sq"_a)
        .def(py::init([](int n, double rho, double sigma_sq, double s_sq) {
                 auto spec = repdet::ModelSpec::homogeneous(n, rho, sigma_sq, s_sq);
                 spec.validate();
                 return spec;
             }),
             "n"_a, "rho"_a, "sigma_sq"_a, "s_sq"_a = 1.0)
        .def_readonly("n", &repdet::ModelSpec::n)
        .def_readonly("rho", &repdet::ModelSpec::rho)
        .def_readonly("sigma_sq", &repdet::ModelSpec::sigma_sq)
        .def_readonly("s_sq", &repdet::ModelSpec::s_sq)
        .def("is_homogeneous", &repdet::ModelSpec::is_homogeneous)
        .def_property_readonly("variable_count", &repdet::ModelSpec::variable_count)
        .def_property_readonly("pair_count", &repdet::ModelSpec::pair_count)
        .def("__repr__", [](const repdet::ModelSpec& spec) {
            std::ostringstream out;
            out << "ModelSpec(n=" << spec.n << ", rho=" << spec.rho
                << ", sigma_sq=" << spec.sigma_sq << ", s_sq=[" << spec.s_sq.size() << " values])";
            return out.str();
        });

    py::class_<repdet::Graph>(m, "Graph")
        .def_readonly("vertex_count", &repdet::Graph::vertex_count)
        .def_readonly("edges", &repdet::Graph::edges)
        .def_readonly("labels", &repdet::Graph::labels)
        .def("has_edge", &repdet::Graph::has_edge, "u"_a, "v"_a)
        .def("degrees", &repdet::Graph::degrees)
        .def("regular_degree", &repdet::Graph::regular_degree);

    py::class_<repdet::Rotation>(m, "Rotation")
        .def_readonly("cloud_count", &repdet::Rotation::cloud_count)
        .def_readonly("ports_per_cloud", &repdet::Rotation::ports_per_cloud)
        .def("at",
             [](const repdet::Rotation& rot, std::int64_t cloud, std::int64_t port) {
                 auto t = rot.at(cloud, port);
                 return std::make_pair(t.cloud, t.port);
             },
             "cloud"_a, "port"_a)
        .def("is_involution", &repdet::Rotation::is_involution);

    m.def("complete_graph", &repdet::complete_graph, "n"_a);
    m.def("canonical_rotation_complete", &repdet::canonical_rotation_complete, "n"_a);
    m.def("replacement_product", &repdet::replacement_product, "outer"_a, "cloud"_a, "rot"_a);
    m.def("covariance_selection_graph", &repdet::covariance_selection_graph, "n"_a);

    py::class_<repdet::VariableIndex>(m, "VariableIndex")
        .def_readonly("cloud", &repdet::VariableIndex::cloud)
        .def_readonly("port", &repdet::VariableIndex::port)
        .def_readonly("flat", &repdet::VariableIndex::flat);
    m.def("variable_index", &repdet::variable_index, "spec"_a, "i"_a, "j"_a);

    py::class_<repdet::SparseSymMatrix>(m, "SparseSymMatrix")
        .def_static("from_triplets",
                    [](std::int64_t dim,
                       const std::vector<std::tuple<std::int64_t, std::int64_t, double>>& triplets) {
                        std::vector<repdet::Entry> entries;
                        entries.reserve(triplets.size());
                        for (const auto& [r, c, v] : triplets) entries.push_back({r, c, v});
                        return repdet::SparseSymMatrix::from_triplets(dim, std::move(entries));
                    },
                    "dim"_a, "triplets"_a)
        .def_property_readonly("dim", &repdet::SparseSymMatrix::dim)
        .def("at", &repdet::SparseSymMatrix::at, "row"_a, "col"_a)
        .def("entries",
             [](const repdet::SparseSymMatrix& mat) {
                 std::vector<std::tuple<std::int64_t, std::int64_t, double>> out;
                 out.reserve(mat.entries().size());
                 for (const auto& e : mat.entries()) out.emplace_back(e.row, e.col, e.value);
                 return out;
             })
        .def("stored_nnz", &repdet::SparseSymMatrix::stored_nnz)
        .def("logical_nnz", &repdet::SparseSymMatrix::logical_nnz)
        .def("to_numpy",
             [](const repdet::SparseSymMatrix& mat, std::int64_t cap) {
                 return dense_to_numpy(repdet::sparse_to_dense(mat, cap));
             },
             "cap"_a = repdet::kDefaultOracleCap);

    py::class_<repdet::DenseSymMatrix>(m, "DenseSymMatrix")
        .def_property_readonly("dim", &repdet::DenseSymMatrix::dim)
        .def("at", &repdet::DenseSymMatrix::at, "row"_a, "col"_a)
        .def("to_numpy", &dense_to_numpy);

    py::class_<repdet::Permutation>(m, "Permutation")
        .def(py::init<std::vector<std::int64_t>>(), "image"_a)
        .def_static("identity", &repdet::Permutation::identity, "dim"_a)
        .def_static("random", &repdet::Permutation::random, "dim"_a, "seed"_a)
        .def_property_readonly("dim", &repdet::Permutation::dim)
        .def("image", &repdet::Permutation::image)
        .def("inverse", &repdet::Permutation::inverse)
        .def("compose", &repdet::Permutation::compose, "other"_a)
        .def("__call__", &repdet::Permutation::operator(), "i"_a);

    m.def("local_pairwise_precision", &repdet::local_pairwise_precision, "rho"_a, "sigma_sq"_a);
    m.def("local_pairwise_covariance", &repdet::local_pairwise_covariance, "rho"_a, "sigma_sq"_a);
    m.def("build_information_matrix", &repdet::build_information_matrix, "spec"_a);
    m.def("build_dual_information_matrix", &repdet::build_dual_information_matrix, "spec"_a);
    m.def("build_dual_diagonal", &repdet::build_dual_diagonal, "spec"_a);
    m.def("apply_permutation", &repdet::apply_permutation, "matrix"_a, "permutation"_a);
    m.def("dense_to_sparse", &repdet::dense_to_sparse, "matrix"_a);

    m.def("pairwise_covariance_logdet", &repdet::pairwise_covariance_logdet, "rho"_a, "sigma_sq"_a);
    m.def("closed_form_logdet", &repdet::closed_form_logdet, "spec"_a);
    m.def("homogeneous_logdet", &repdet::homogeneous_logdet, "n"_a, "rho"_a, "sigma_sq"_a, "s_sq"_a);
    m.def("asymptotic_logdet_per_variable", &repdet::asymptotic_logdet_per_variable, "rho"_a,
          "sigma_sq"_a);
    m.def("dual_logdet", &repdet::dual_logdet, "spec"_a);
    m.def("duality_residual", &repdet::duality_residual, "spec"_a);
    m.def("differential_entropy", &repdet::differential_entropy, "spec"_a);

    py::class_<repdet::LogDetReport>(m, "LogDetReport")
        .def_readonly("n", &repdet::LogDetReport::n)
        .def_readonly("N", &repdet::LogDetReport::N)
        .def_readonly("log_det_primal", &repdet::LogDetReport::log_det_primal)
        .def_readonly("log_det_dual", &repdet::LogDetReport::log_det_dual)
        .def_readonly("log_det_K", &repdet::LogDetReport::log_det_K)
        .def_readonly("duality_residual", &repdet::LogDetReport::duality_residual)
        .def_property_readonly("method",
                               [](const repdet::LogDetReport& r) { return repdet::method_name(r.method); })
        .def("__repr__", [](const repdet::LogDetReport& r) {
            std::ostringstream out;
            out << "LogDetReport(n=" << r.n << ", N=" << r.N
                << ", log_det_primal=" << r.log_det_primal << ", method=" << repdet::method_name(r.method)
                << ")";
            return out.str();
        });
    m.def("make_report",
          [](const repdet::ModelSpec& spec, const std::string& method) {
              return repdet::make_report(spec, repdet::method_from_name(method));
          },
          "spec"_a, "method"_a = "closed_form");

    py::class_<repdet::CholeskyFactor>(m, "CholeskyFactor")
        .def_property_readonly("dim", &repdet::CholeskyFactor::dim)
        .def("at", &repdet::CholeskyFactor::at, "row"_a, "col"_a)
        .def("log_det", &repdet::CholeskyFactor::log_det);
    m.def("cholesky", &repdet::cholesky, "matrix"_a);
    m.def("oracle_logdet", &repdet::oracle_logdet, "matrix"_a);
    m.def("sparse_to_dense", &repdet::sparse_to_dense, "matrix"_a,
          "cap"_a = repdet::kDefaultOracleCap);

    m.def("export_matrix_market",
          [](const repdet::SparseSymMatrix& mat, const std::string& path) {
              repdet::export_matrix_market(mat, std::filesystem::path(path));
          },
          "matrix"_a, "path"_a);
    m.def("import_matrix_market",
          [](const std::string& path) {
              return repdet::import_matrix_market(std::filesystem::path(path));
          },
          "path"_a);
    m.def("write_report_json",
          [](const repdet::LogDetReport& report, const std::string& path) {
              repdet::write_report_json(report, std::filesystem::path(path));
          },
          "report"_a, "path"_a);
    m.def("write_edge_list",
          [](const repdet::Graph& g, const std::string& path) {
              repdet::write_edge_list(g, std::filesystem::path(path));
          },
          "graph"_a, "path"_a);

#ifdef REPDET_VERSION
    m.attr("__version__") = REPDET_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
