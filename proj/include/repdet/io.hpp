#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "repdet/closed_form.hpp"
#include "repdet/graph.hpp"
#include "repdet/model.hpp"

namespace repdet {

/// Matrix Market export, `matrix coordinate real symmetric` banner, 1-based
/// lower-triangle records sorted by (column, row), values printed with 17
/// significant digits so re-import is exact. Output is byte-stable.
void export_matrix_market(const SparseSymMatrix& m, std::ostream& out);
void export_matrix_market(const SparseSymMatrix& m, const std::filesystem::path& path);

/// Strict reverse of export_matrix_market: the banner must match exactly
/// (pattern/complex/array files are rejected) and symmetric entries must be
/// stored in the lower triangle.
SparseSymMatrix import_matrix_market(std::istream& in);
SparseSymMatrix import_matrix_market(const std::filesystem::path& path);

/// Single JSON object with keys exactly
/// {n, N, log_det_primal, log_det_dual, log_det_K, duality_residual, method};
/// numbers are decimal literals at full precision.
void write_report_json(const LogDetReport& report, std::ostream& out);
void write_report_json(const LogDetReport& report, const std::filesystem::path& path);
LogDetReport read_report_json(std::istream& in);
LogDetReport read_report_json(const std::filesystem::path& path);

/// Edge list, one `u v` pair per line, 1-based ids, lexicographically sorted.
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list(const Graph& g, const std::filesystem::path& path);

struct BenchRecord {
    int n = 0;
    std::int64_t N = 0;
    std::int64_t closed_form_ns = 0;
    std::optional<std::int64_t> oracle_ns;  // empty when the oracle was skipped
    double log_det_primal = 0.0;
    std::optional<double> oracle_log_det;
    std::optional<double> abs_diff;
};

/// CSV with header `n,N,closed_form_ns,oracle_ns,log_det_primal,oracle_log_det,abs_diff`;
/// oracle fields are left empty when skipped.
void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out);

}  // namespace repdet
