#include "repdet/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace repdet {

namespace {

constexpr const char* kBanner = "%%MatrixMarket matrix coordinate real symmetric";

// 17 significant digits round-trip any double exactly.
std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    return out;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
    return in;
}

void check_stream(const std::ostream& out, const char* what) {
    if (!out) throw std::runtime_error(std::string("write failed while exporting ") + what);
}

std::string rstrip(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.pop_back();
    return line;
}

}  // namespace

void export_matrix_market(const SparseSymMatrix& m, std::ostream& out) {
    out << kBanner << '\n';
    out << m.dim() << ' ' << m.dim() << ' ' << m.stored_nnz() << '\n';
    // Stored order is (row, col) over the upper triangle; emitting the mirrored
    // (col+1, row+1) pairs yields lower-triangle records sorted by (column, row).
    for (const auto& e : m.entries())
        out << e.col + 1 << ' ' << e.row + 1 << ' ' << format_value(e.value) << '\n';
    check_stream(out, "matrix market file");
}

void export_matrix_market(const SparseSymMatrix& m, const std::filesystem::path& path) {
    auto out = open_output(path);
    export_matrix_market(m, out);
}

SparseSymMatrix import_matrix_market(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("matrix market: empty input");
    if (rstrip(line) != kBanner)
        throw std::runtime_error("matrix market: unsupported banner '" + rstrip(line) +
                                 "' (expected '" + kBanner + "')");
    while (std::getline(in, line)) {
        line = rstrip(line);
        if (!line.empty() && line.front() != '%') break;
    }
    std::int64_t rows = 0, cols = 0, nnz = 0;
    {
        std::istringstream header(line);
        if (!(header >> rows >> cols >> nnz) || rows < 0 || nnz < 0)
            throw std::runtime_error("matrix market: malformed size line '" + line + "'");
        if (rows != cols)
            throw std::runtime_error("matrix market: symmetric matrix must be square, got " +
                                     std::to_string(rows) + "x" + std::to_string(cols));
    }
    std::vector<Entry> triplets;
    triplets.reserve(static_cast<std::size_t>(nnz));
    for (std::int64_t k = 0; k < nnz; ++k) {
        std::int64_t r = 0, c = 0;
        double v = 0.0;
        if (!(in >> r >> c >> v))
            throw std::runtime_error("matrix market: expected " + std::to_string(nnz) +
                                     " records, failed at record " + std::to_string(k + 1));
        if (r < 1 || r > rows || c < 1 || c > cols)
            throw std::runtime_error("matrix market: record " + std::to_string(k + 1) +
                                     " index out of range");
        if (r < c)
            throw std::runtime_error("matrix market: record " + std::to_string(k + 1) +
                                     " lies in the upper triangle; symmetric entries must be "
                                     "stored in the lower triangle");
        triplets.push_back({c - 1, r - 1, v});
    }
    return SparseSymMatrix::from_triplets(rows, std::move(triplets));
}

SparseSymMatrix import_matrix_market(const std::filesystem::path& path) {
    auto in = open_input(path);
    return import_matrix_market(in);
}

void write_report_json(const LogDetReport& report, std::ostream& out) {
    nlohmann::ordered_json j;
    j["n"] = report.n;
    j["N"] = report.N;
    j["log_det_primal"] = report.log_det_primal;
    j["log_det_dual"] = report.log_det_dual;
    j["log_det_K"] = report.log_det_K;
    j["duality_residual"] = report.duality_residual;
    j["method"] = method_name(report.method);
    out << j.dump(2) << '\n';
    check_stream(out, "report");
}

void write_report_json(const LogDetReport& report, const std::filesystem::path& path) {
    auto out = open_output(path);
    write_report_json(report, out);
}

LogDetReport read_report_json(std::istream& in) {
    nlohmann::json j;
    try {
        in >> j;
        LogDetReport report;
        report.n = j.at("n").get<int>();
        report.N = j.at("N").get<std::int64_t>();
        report.log_det_primal = j.at("log_det_primal").get<double>();
        report.log_det_dual = j.at("log_det_dual").get<double>();
        report.log_det_K = j.at("log_det_K").get<double>();
        report.duality_residual = j.at("duality_residual").get<double>();
        report.method = method_from_name(j.at("method").get<std::string>());
        return report;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("malformed report json: ") + e.what());
    }
}

LogDetReport read_report_json(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_report_json(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    for (const auto& [u, v] : g.edges) out << u + 1 << ' ' << v + 1 << '\n';
    check_stream(out, "edge list");
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
    auto out = open_output(path);
    write_edge_list(g, out);
}

void write_bench_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << "n,N,closed_form_ns,oracle_ns,log_det_primal,oracle_log_det,abs_diff\n";
    for (const auto& r : records) {
        out << r.n << ',' << r.N << ',' << r.closed_form_ns << ',';
        if (r.oracle_ns) out << *r.oracle_ns;
        out << ',' << format_value(r.log_det_primal) << ',';
        if (r.oracle_log_det) out << format_value(*r.oracle_log_det);
        out << ',';
        if (r.abs_diff) out << format_value(*r.abs_diff);
        out << '\n';
    }
    check_stream(out, "bench csv");
}

}  // namespace repdet
