#include "repdet/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "repdet/oracle.hpp"

namespace repdet {

namespace {

// Neumaier-compensated accumulator; keeps the trace and log sums accurate
// enough to hold the 1e-10 duality-residual bound at large n.
class CompensatedSum {
public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct DualTerms {
    double log_one_plus = 0.0;  // ln(1 + rho sigma^2 tr(D^-1))
    double sum_log_d = 0.0;     // sum_i ln d_i
};

// Shared arithmetic path for the dual-side factors of the closed form.
DualTerms dual_terms(const ModelSpec& spec) {
    const std::vector<double> d = build_dual_diagonal(spec);
    CompensatedSum trace_inv;
    CompensatedSum sum_log;
    for (double di : d) {
        trace_inv.add(1.0 / di);
        sum_log.add(std::log(di));
    }
    const double x = spec.rho * spec.sigma_sq * trace_inv.value();
    // Positive definiteness of the dual matrix guarantees 1 + x > 0 for every
    // valid spec; a violation means the implementation is inconsistent.
    if (!(x > -1.0))
        throw std::logic_error("closed_form: internal consistency failure, "
                               "1 + rho*sigma^2*tr(D^-1) = " + std::to_string(1.0 + x) +
                               " is not positive");
    return DualTerms{std::log1p(x), sum_log.value()};
}

double sum_log_s(const ModelSpec& spec) {
    CompensatedSum acc;
    for (double s : spec.s_sq) acc.add(std::log(s));
    return acc.value();
}

}  // namespace

const char* method_name(Method method) {
    switch (method) {
        case Method::closed_form: return "closed_form";
        case Method::homogeneous: return "homogeneous";
        case Method::oracle: return "oracle";
    }
    throw std::invalid_argument("method_name: unknown method");
}

Method method_from_name(std::string_view name) {
    if (name == "closed_form") return Method::closed_form;
    if (name == "homogeneous") return Method::homogeneous;
    if (name == "oracle") return Method::oracle;
    throw std::invalid_argument("method_from_name: unknown method '" + std::string(name) + "'");
}

double pairwise_covariance_logdet(double rho, double sigma_sq) {
    // Domain checks ride on the 2x2 builder.
    (void)local_pairwise_covariance(rho, sigma_sq);
    return std::log(sigma_sq * sigma_sq * (1.0 - rho * rho));
}

double closed_form_logdet(const ModelSpec& spec) {
    spec.validate();
    const double pairs = static_cast<double>(spec.pair_count());
    const DualTerms t = dual_terms(spec);
    return pairs * pairwise_covariance_logdet(spec.rho, spec.sigma_sq) + sum_log_s(spec) -
           t.log_one_plus - t.sum_log_d;
}

double homogeneous_logdet(int n, double rho, double sigma_sq, double s_sq) {
    if (n < 2) throw std::invalid_argument("homogeneous_logdet: n must be >= 2, got " + std::to_string(n));
    if (!(s_sq > 0.0) || !std::isfinite(s_sq))
        throw std::invalid_argument("homogeneous_logdet: s_sq must be a positive real");
    const double pair_term = pairwise_covariance_logdet(rho, sigma_sq);  // validates rho, sigma_sq
    const double pairs = static_cast<double>(static_cast<std::int64_t>(n) * (n - 1) / 2);
    const double d = s_sq + (static_cast<double>(n - 1) - rho) * sigma_sq;
    const double x = static_cast<double>(n) * rho * sigma_sq / d;
    if (!(x > -1.0))
        throw std::logic_error("homogeneous_logdet: internal consistency failure, 1 + n*rho*sigma^2/d "
                               "is not positive");
    return pairs * pair_term + static_cast<double>(n) * std::log(s_sq) - std::log1p(x) -
           static_cast<double>(n) * std::log(d);
}

double asymptotic_logdet_per_variable(double rho, double sigma_sq) {
    (void)local_pairwise_covariance(rho, sigma_sq);
    return std::log(sigma_sq) + 0.5 * std::log1p(-rho * rho);
}

double dual_logdet(const ModelSpec& spec) {
    spec.validate();
    const DualTerms t = dual_terms(spec);
    return -t.log_one_plus - t.sum_log_d;
}

double duality_residual(const ModelSpec& spec) {
    spec.validate();
    const double scale = static_cast<double>(spec.pair_count()) *
                             pairwise_covariance_logdet(spec.rho, spec.sigma_sq) +
                         sum_log_s(spec);
    return std::abs(closed_form_logdet(spec) - dual_logdet(spec) - scale);
}

double differential_entropy(const ModelSpec& spec) {
    spec.validate();
    const double log_two_pi_e = std::log(2.0 * std::numbers::pi) + 1.0;
    return 0.5 * static_cast<double>(spec.variable_count()) * log_two_pi_e +
           0.5 * closed_form_logdet(spec);
}

LogDetReport make_report(const ModelSpec& spec, Method method) {
    spec.validate();
    LogDetReport report;
    report.n = spec.n;
    report.N = spec.variable_count();
    report.log_det_K = pairwise_covariance_logdet(spec.rho, spec.sigma_sq);
    report.method = method;
    switch (method) {
        case Method::closed_form:
            report.log_det_primal = closed_form_logdet(spec);
            report.log_det_dual = dual_logdet(spec);
            break;
        case Method::homogeneous:
            if (!spec.is_homogeneous())
                throw std::invalid_argument("make_report: homogeneous method requires constant s_sq");
            report.log_det_primal = homogeneous_logdet(spec.n, spec.rho, spec.sigma_sq, spec.s_sq.front());
            report.log_det_dual = dual_logdet(spec);
            break;
        case Method::oracle:
            report.log_det_primal = -oracle_logdet(sparse_to_dense(build_information_matrix(spec)));
            report.log_det_dual = -oracle_logdet(build_dual_information_matrix(spec));
            break;
    }
    report.duality_residual =
        std::abs(report.log_det_primal -
                 (report.log_det_dual +
                  static_cast<double>(spec.pair_count()) * report.log_det_K + sum_log_s(spec)));
    return report;
}

}  // namespace repdet
