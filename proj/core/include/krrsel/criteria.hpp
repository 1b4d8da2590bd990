#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "krrsel/ridge.hpp"

namespace krrsel {

enum class Criterion { Kic, Kic1, Kic2, Icomp, GprLml, Loocv };

const char* to_string(Criterion c);
std::optional<Criterion> criterion_from_string(std::string_view name);
const std::vector<Criterion>& all_criteria();

/// One criterion evaluation at one (alpha, kernel) point. Lower is better for
/// every criterion: GPR stores the negated log marginal likelihood so that a
/// single minimizing comparator serves all of them.
///
/// score = gof_term + complexity_term always; for the likelihood-based
/// criteria gof_term = -2 * penalized log-likelihood, for GPR the data-fit
/// plus normalization terms, and for LOOCV complexity_term = 0.
struct CriterionReport {
    Criterion criterion = Criterion::Kic;
    double score = 0.0;
    double gof_term = 0.0;
    double complexity_term = 0.0;
    double sigma2_used = 0.0;
    double alpha = 0.0;
    KernelSpec kernel;
};

/// Per-variable conditional variances under an additive kernel:
/// V_j = sigma^2 tr[K_j (K + alpha I)^{-2}], total = sigma^2 tr[K (K+alpha I)^{-2}].
struct VariableVariances {
    Vector per_variable;
    double total = 0.0;
};

/// Shared per-(gram, alpha) scoring state: the Cholesky factor plus lazily
/// cached inverse powers and fitted coefficients. Criteria evaluated at the
/// same grid point reuse one context; the standalone score functions build a
/// fresh one, so both paths run the identical arithmetic.
///
/// Not thread-safe: share across criteria within a thread, not across threads.
class ScoreContext {
public:
    ScoreContext(const GramMatrix& K, double alpha);
    ScoreContext(const GramMatrix& K, const Vector& Y, double alpha);

    const GramMatrix& gram() const { return K_; }
    double alpha() const { return factor_.alpha(); }
    Eigen::Index n() const { return K_.size(); }
    const RidgeFactor& factor() const { return factor_; }

    const Vector& response() const;
    const Vector& theta();
    const FitDiagnostics& diagnostics();

    /// (K + (alpha + jitter) I)^{-1}, symmetrized.
    const Matrix& inverse();
    /// Its square.
    const Matrix& inverse_sq();

    /// tr[K (K + alpha I)^{-2}] = sum_i lambda_i / (lambda_i + alpha)^2.
    double complexity_trace();
    /// tr[K (K+aI)^{-2} K (K+aI)^{-2}] = sum_i lambda_i^2 / (lambda_i + alpha)^4.
    double complexity_hs();

private:
    const GramMatrix& K_;
    const Vector* Y_ = nullptr;
    RidgeFactor factor_;
    std::optional<Vector> theta_;
    std::optional<FitDiagnostics> diag_;
    std::optional<Matrix> inv_;
    std::optional<Matrix> inv_sq_;
};

/// PLL(theta, sigma2) = -n/2 log(2 pi) - n/2 log sigma2
///                      - (Y - K theta)^T (Y - K theta) / (2 sigma2)
///                      - alpha (theta^T K theta / (2 sigma2)).
double penalized_log_likelihood(const GramMatrix& K, const Vector& Y, const Vector& theta,
                                double alpha, double sigma2);

double complexity_hs(const GramMatrix& K, double alpha);
double complexity_trace(const GramMatrix& K, double alpha);

VariableVariances variable_variances(const std::vector<GramMatrix>& components,
                                     const GramMatrix& K, double alpha, double sigma2);

CriterionReport kic_score(const GramMatrix& K, const Vector& Y, double alpha);
CriterionReport kic1_score(const GramMatrix& K, const Vector& Y, double alpha);
CriterionReport kic2_score(const GramMatrix& K, const Vector& Y, double alpha);
CriterionReport icomp_score(const GramMatrix& K, const Vector& Y, double alpha);
/// Marginal likelihood of Y under N(0, K + noise2 I), negated.
CriterionReport gpr_lml_score(const GramMatrix& K, const Vector& Y, double alpha, double noise2);
CriterionReport loocv_score(const GramMatrix& K, const Vector& Y, double alpha);

/// Context-reusing entry point for grid sweeps. `gpr_noise` overrides the
/// default GPR noise term noise2 = alpha.
CriterionReport score_criterion(ScoreContext& ctx, Criterion criterion,
                                std::optional<double> gpr_noise = std::nullopt);

/// Reference oracle for loocv_score: refit on each n-1 subset and average the
/// squared held-out errors. O(n) factorizations; intended for modest n.
double loocv_brute_force(const Matrix& X, const Vector& Y, const KernelSpec& spec, double alpha);

}  // namespace krrsel
