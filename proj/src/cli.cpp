#include "repdet/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "repdet/closed_form.hpp"
#include "repdet/graph.hpp"
#include "repdet/io.hpp"
#include "repdet/model.hpp"
#include "repdet/oracle.hpp"

namespace repdet {

namespace {

// Bounds pinned by the model identities, independent of the user tolerance:
// the duality relation and permutation congruence are exact in real
// arithmetic, so only rounding error may show up.
constexpr double kDualityResidualBound = 1e-10;
constexpr double kPermutationBound = 1e-10;
constexpr int kBenchTrials = 5;

struct Options {
    int n = 0;
    double rho = 0.0;
    double sigma2 = 0.0;
    std::string s2 = "1";
    std::uint64_t seed = 42;
    double tol = 1e-8;
    std::int64_t oracle_cap = kDefaultOracleCap;
    std::string out_path;
    std::string edges_path;
    std::string format = "text";
    bool check_oracle = false;
    int perms = 5;
    std::string sizes;
    std::string trace;
    double corrupt = 0.0;
};

std::string fmt6(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        tokens.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return tokens;
}

std::vector<double> parse_double_list(const std::string& text, const char* flag) {
    std::vector<double> values;
    for (const auto& token : split_csv(text)) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || token.empty())
            throw std::invalid_argument(std::string(flag) + ": cannot parse '" + token + "' as a real");
        values.push_back(v);
    }
    return values;
}

std::vector<int> parse_int_list(const std::string& text, const char* flag) {
    std::vector<int> values;
    for (const auto& token : split_csv(text)) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size() || token.empty())
            throw std::invalid_argument(std::string(flag) + ": cannot parse '" + token + "' as an integer");
        values.push_back(v);
    }
    return values;
}

// Scalar --s2 broadcasts to every cloud; a comma list sets them individually.
ModelSpec to_spec(const Options& o) {
    std::vector<double> s2 = parse_double_list(o.s2, "--s2");
    ModelSpec spec;
    spec.n = o.n;
    spec.rho = o.rho;
    spec.sigma_sq = o.sigma2;
    if (s2.size() == 1)
        spec.s_sq.assign(static_cast<std::size_t>(std::max(o.n, 0)), s2.front());
    else
        spec.s_sq = std::move(s2);
    spec.validate();
    return spec;
}

template <typename F>
std::int64_t time_ns(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
}

std::int64_t median(std::vector<std::int64_t> samples) {
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

void emit_report_text(const LogDetReport& report, std::ostream& out) {
    out << "n                  " << report.n << '\n';
    out << "N                  " << report.N << '\n';
    out << "log_det_primal     " << fmt6(report.log_det_primal)
        << "  (ln det of the covariance matrix)\n";
    out << "log_det_precision  " << fmt6(-report.log_det_primal)
        << "  (ln det of the information matrix, = -log_det_primal)\n";
    out << "log_det_dual       " << fmt6(report.log_det_dual) << '\n';
    out << "log_det_K          " << fmt6(report.log_det_K) << '\n';
    out << "duality_residual   " << fmt6(report.duality_residual) << '\n';
    out << "method             " << method_name(report.method) << '\n';
}

int cmd_build(const Options& o, std::ostream& out) {
    ModelSpec spec = to_spec(o);
    SparseSymMatrix m = build_information_matrix(spec);
    export_matrix_market(m, std::filesystem::path(o.out_path));
    out << "N=" << m.dim() << " nnz=" << m.logical_nnz() << " stored=" << m.stored_nnz() << '\n';
    out << "wrote " << o.out_path << '\n';
    if (!o.edges_path.empty()) {
        write_edge_list(covariance_selection_graph(spec.n), std::filesystem::path(o.edges_path));
        out << "wrote " << o.edges_path << '\n';
    }
    return 0;
}

int cmd_dual(const Options& o, std::ostream& out) {
    ModelSpec spec = to_spec(o);
    SparseSymMatrix m = dense_to_sparse(build_dual_information_matrix(spec));
    export_matrix_market(m, std::filesystem::path(o.out_path));
    out << "n=" << m.dim() << " nnz=" << m.logical_nnz() << " stored=" << m.stored_nnz() << '\n';
    out << "wrote " << o.out_path << '\n';
    return 0;
}

int cmd_det(const Options& o, std::ostream& out, std::ostream& err) {
    ModelSpec spec = to_spec(o);
    LogDetReport report = make_report(spec, Method::closed_form);

    bool check_failed = false;
    std::string check_line;
    if (o.check_oracle) {
        if (spec.variable_count() <= o.oracle_cap) {
            double oracle_primal =
                -oracle_logdet(sparse_to_dense(build_information_matrix(spec), o.oracle_cap));
            double abs_diff = std::abs(report.log_det_primal - oracle_primal);
            check_failed = !(abs_diff <= o.tol);
            check_line = std::string(check_failed ? "FAIL" : "PASS") +
                         " oracle check: |closed_form - oracle| = " + fmt6(abs_diff) +
                         " (tol " + fmt6(o.tol) + ", oracle ln det = " + fmt6(oracle_primal) + ")";
        } else {
            check_line = "oracle skipped: N = " + std::to_string(spec.variable_count()) +
                         " exceeds oracle cap " + std::to_string(o.oracle_cap);
        }
    }

    if (!o.out_path.empty()) write_report_json(report, std::filesystem::path(o.out_path));
    if (o.format == "json") {
        write_report_json(report, out);
        if (!check_line.empty()) err << check_line << '\n';
    } else {
        emit_report_text(report, out);
        if (!check_line.empty()) out << check_line << '\n';
    }
    return check_failed ? 1 : 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    ModelSpec spec = to_spec(o);
    if (spec.variable_count() > o.oracle_cap) {
        err << "error: verify requires N = " << spec.variable_count()
            << " within the oracle cap " << o.oracle_cap << '\n';
        return 2;
    }
    SparseSymMatrix matrix = build_information_matrix(spec);
    if (o.corrupt != 0.0) {
        // Negative-control hook: perturb one stored entry before the checks.
        std::vector<Entry> entries = matrix.entries();
        entries.front().value += o.corrupt;
        matrix = SparseSymMatrix::from_triplets(matrix.dim(), std::move(entries));
    }

    bool all_pass = true;
    auto line = [&](bool pass, const std::string& text) {
        all_pass = all_pass && pass;
        out << (pass ? "PASS " : "FAIL ") << text << '\n';
    };

    double oracle_primal = -oracle_logdet(sparse_to_dense(matrix, o.oracle_cap));
    double closed = closed_form_logdet(spec);
    double rel = std::abs(closed - oracle_primal) / std::max(1.0, std::abs(oracle_primal));
    line(rel <= o.tol, "oracle-vs-closed-form: relative difference " + fmt6(rel) + " (tol " +
                           fmt6(o.tol) + ")");

    double residual = duality_residual(spec);
    line(residual <= kDualityResidualBound,
         "duality-residual: " + fmt6(residual) + " (bound " + fmt6(kDualityResidualBound) + ")");

    double base = oracle_logdet(sparse_to_dense(matrix, o.oracle_cap));
    double worst = 0.0;
    for (int k = 0; k < o.perms; ++k) {
        Permutation p = Permutation::random(matrix.dim(), o.seed + static_cast<std::uint64_t>(k));
        double permuted = oracle_logdet(sparse_to_dense(apply_permutation(matrix, p), o.oracle_cap));
        worst = std::max(worst, std::abs(permuted - base));
    }
    line(worst <= kPermutationBound,
         "permutation-invariance: max difference " + fmt6(worst) + " over " +
             std::to_string(o.perms) + " permutations (bound " + fmt6(kPermutationBound) + ")");

    return all_pass ? 0 : 1;
}

int cmd_limit(const Options& o, std::ostream& out) {
    std::vector<double> s2_values = parse_double_list(o.s2, "--s2");
    if (s2_values.size() != 1)
        throw std::invalid_argument("limit: --s2 must be a scalar (the trace models are homogeneous)");
    double s2 = s2_values.front();
    double limit = asymptotic_logdet_per_variable(o.rho, o.sigma2);
    out << "limit_per_variable " << fmt6(limit) << '\n';
    if (!o.trace.empty()) {
        for (int n : parse_int_list(o.trace, "--trace")) {
            double per_variable = homogeneous_logdet(n, o.rho, o.sigma2, s2) /
                                  static_cast<double>(static_cast<std::int64_t>(n) * (n - 1));
            out << "n=" << n << " per_variable " << fmt6(per_variable) << " gap "
                << fmt6(std::abs(per_variable - limit)) << '\n';
        }
    }
    return 0;
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<int> sizes = parse_int_list(o.sizes, "--sizes");
    std::vector<double> s2 = parse_double_list(o.s2, "--s2");
    if (s2.size() != 1)
        throw std::invalid_argument("bench: --s2 must be a scalar (sizes vary, lists cannot)");

    std::vector<BenchRecord> records;
    bool all_ok = true;
    for (int n : sizes) {
        ModelSpec spec = ModelSpec::homogeneous(n, o.rho, o.sigma2, s2.front());
        spec.validate();
        BenchRecord record;
        record.n = n;
        record.N = spec.variable_count();

        volatile double sink = 0.0;
        sink = sink + closed_form_logdet(spec);  // warm-up, excluded
        std::vector<std::int64_t> trials;
        for (int t = 0; t < kBenchTrials; ++t)
            trials.push_back(time_ns([&] { sink = sink + closed_form_logdet(spec); }));
        record.closed_form_ns = median(trials);
        record.log_det_primal = closed_form_logdet(spec);

        if (record.N <= o.oracle_cap) {
            DenseSymMatrix dense = sparse_to_dense(build_information_matrix(spec), o.oracle_cap);
            sink = sink + oracle_logdet(dense);  // warm-up, excluded
            std::vector<std::int64_t> oracle_trials;
            for (int t = 0; t < kBenchTrials; ++t)
                oracle_trials.push_back(time_ns([&] { sink = sink + oracle_logdet(dense); }));
            record.oracle_ns = median(oracle_trials);
            record.oracle_log_det = -oracle_logdet(dense);
            record.abs_diff = std::abs(record.log_det_primal - *record.oracle_log_det);
            if (!(*record.abs_diff <= o.tol)) {
                all_ok = false;
                err << "FAIL bench: abs_diff " << fmt6(*record.abs_diff) << " at n=" << n
                    << " exceeds tol " << fmt6(o.tol) << '\n';
            }
        }
        records.push_back(record);
    }

    if (!o.out_path.empty()) {
        std::ofstream file(o.out_path);
        if (!file) throw std::runtime_error("cannot open '" + o.out_path + "' for writing");
        write_bench_csv(records, file);
        out << "wrote " << o.out_path << " (" << records.size() << " records)\n";
    } else {
        write_bench_csv(records, out);
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sparse Gaussian models on replacement-product graphs: exact log-determinants "
                 "in closed form, with a dense Cholesky oracle for verification"};
    app.name("repdet");
    app.require_subcommand(1);

    Options o;
    int rc = 0;

    auto add_model_opts = [&](CLI::App* cmd) {
        cmd->add_option("--n", o.n, "number of clouds (vertices of the complete base graph)")
            ->required();
        cmd->add_option("--rho", o.rho, "pairwise correlation coefficient, in (-1,1)")->required();
        cmd->add_option("--sigma2", o.sigma2, "pairwise variance sigma^2 > 0")->required();
        cmd->add_option("--s2", o.s2,
                        "unary variances: scalar (broadcast to all clouds) or comma list of length n")
            ->capture_default_str();
    };
    auto add_cap_opt = [&](CLI::App* cmd) {
        cmd->add_option("--oracle-cap", o.oracle_cap,
                        "largest matrix dimension the dense oracle will factorize")
            ->envname("REPDET_ORACLE_CAP")
            ->capture_default_str();
    };

    CLI::App* build = app.add_subcommand("build", "assemble the N x N information matrix and "
                                                  "export it as Matrix Market");
    add_model_opts(build);
    build->add_option("--out", o.out_path, "output Matrix Market path")->required();
    build->add_option("--edges", o.edges_path, "also export the interaction graph as an edge list");
    build->callback([&] { rc = cmd_build(o, out); });

    CLI::App* dual = app.add_subcommand("dual", "assemble the n x n dual information matrix and "
                                                "export it as Matrix Market");
    add_model_opts(dual);
    dual->add_option("--out", o.out_path, "output Matrix Market path")->required();
    dual->callback([&] { rc = cmd_dual(o, out); });

    CLI::App* det = app.add_subcommand("det", "closed-form log-determinant report");
    add_model_opts(det);
    det->add_flag("--check-oracle", o.check_oracle,
                  "also run the dense Cholesky oracle when N is within the cap");
    det->add_option("--tol", o.tol, "largest |closed_form - oracle| accepted")->capture_default_str();
    add_cap_opt(det);
    det->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    det->add_option("--out", o.out_path, "also write the JSON report to this path");
    det->callback([&] { rc = cmd_det(o, out, err); });

    CLI::App* verify = app.add_subcommand(
        "verify", "run oracle, duality and permutation-invariance checks (requires N within the cap)");
    add_model_opts(verify);
    verify->add_option("--perms", o.perms, "number of seeded random permutations to check")
        ->capture_default_str();
    verify->add_option("--seed", o.seed, "seed for the permutation draws")->capture_default_str();
    verify->add_option("--tol", o.tol, "relative tolerance for the oracle check")->capture_default_str();
    add_cap_opt(verify);
    verify->add_option("--corrupt", o.corrupt, "perturb one matrix entry before the checks")
        ->group("");  // test hook, hidden from help
    verify->callback([&] { rc = cmd_verify(o, out, err); });

    CLI::App* limit = app.add_subcommand("limit", "asymptotic per-variable log-determinant");
    limit->add_option("--rho", o.rho, "pairwise correlation coefficient, in (-1,1)")->required();
    limit->add_option("--sigma2", o.sigma2, "pairwise variance sigma^2 > 0")->required();
    limit->add_option("--s2", o.s2, "unary variance of the homogeneous trace models")
        ->capture_default_str();
    limit->add_option("--trace", o.trace,
                      "comma list of sizes; prints the homogeneous per-variable value at each");
    limit->callback([&] { rc = cmd_limit(o, out); });

    CLI::App* bench = app.add_subcommand(
        "bench", "closed form vs dense Cholesky timings over a list of sizes, as CSV");
    bench->add_option("--sizes", o.sizes, "comma list of model sizes n")->required();
    bench->add_option("--rho", o.rho, "pairwise correlation coefficient, in (-1,1)")->required();
    bench->add_option("--sigma2", o.sigma2, "pairwise variance sigma^2 > 0")->required();
    bench->add_option("--s2", o.s2, "unary variance (scalar)")->capture_default_str();
    bench->add_option("--tol", o.tol, "largest |closed_form - oracle| accepted")->capture_default_str();
    add_cap_opt(bench);
    bench->add_option("--out", o.out_path, "CSV output path (stdout when omitted)");
    bench->callback([&] { rc = cmd_bench(o, out, err); });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return rc;
}

}  // namespace repdet
