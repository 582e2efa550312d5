#pragma once

#include <string_view>

#include "repdet/model.hpp"

namespace repdet {

enum class Method { closed_form, homogeneous, oracle };

const char* method_name(Method method);
Method method_from_name(std::string_view name);

/// Log-determinant summary of one model instance. log_det_primal is
/// ln det(Sigma_x) (covariance, not precision); log_det_dual is
/// ln det(Sigma_omega); log_det_K is the log-determinant of the 2x2 pair
/// covariance. duality_residual is
/// |log_det_primal - (log_det_dual + |E| log_det_K + sum_i ln s_i^2)|,
/// an algebraic identity, so it measures floating-point error only.
struct LogDetReport {
    int n = 0;
    std::int64_t N = 0;
    double log_det_primal = 0.0;
    double log_det_dual = 0.0;
    double log_det_K = 0.0;
    double duality_residual = 0.0;
    Method method = Method::closed_form;
};

/// ln det of the 2x2 pair covariance: ln(sigma^4 (1 - rho^2)).
double pairwise_covariance_logdet(double rho, double sigma_sq);

/// Closed-form ln det(Sigma_x), evaluated in O(n):
/// |E| ln det(K) + sum_i ln s_i^2 - ln(1 + rho sigma^2 tr(D^-1)) - sum_i ln d_i.
double closed_form_logdet(const ModelSpec& spec);

/// Constant-s specialization, evaluated in O(1):
/// |E| ln det(K) + n ln s^2 - ln(1 + n rho sigma^2 / d) - n ln d
/// with d = s^2 + (n - rho - 1) sigma^2. Agrees with closed_form_logdet of the
/// constant-s spec to within 1e-12 absolute.
double homogeneous_logdet(int n, double rho, double sigma_sq, double s_sq);

/// Limit of ln det(Sigma_x) / N as the model grows:
/// 2 ln sigma + (1/2) ln(1 - rho^2). Independent of s.
double asymptotic_logdet_per_variable(double rho, double sigma_sq);

/// ln det(Sigma_omega) = -ln(1 + rho sigma^2 tr(D^-1)) - sum_i ln d_i.
double dual_logdet(const ModelSpec& spec);

/// |closed_form_logdet - dual_logdet - |E| log_det_K - sum_i ln s_i^2|.
double duality_residual(const ModelSpec& spec);

/// Differential entropy of the model: (N/2) ln(2 pi e) + (1/2) ln det(Sigma_x).
double differential_entropy(const ModelSpec& spec);

/// Full report. Method oracle assembles the matrices and runs the dense
/// Cholesky ground truth, so it is limited to desk-scale N.
LogDetReport make_report(const ModelSpec& spec, Method method = Method::closed_form);

}  // namespace repdet
