#pragma once

#include <optional>

#include "krrsel/kernel.hpp"

namespace krrsel {

/// Penalized objective decomposition at the fitted coefficients:
/// rss = ||Y - K theta||^2, penalty = alpha * theta^T K theta,
/// objective = rss + penalty (summed exactly in that order).
struct FitDiagnostics {
    double rss = 0.0;
    double penalty = 0.0;
    double objective = 0.0;
};

/// Fitted kernel ridge regression model. `sigma2` stays unset after fit();
/// criterion-specific estimators fill it. `train_X` may be empty when the
/// model was fitted from a bare gram; predict() then refuses to run.
struct RidgeModel {
    double alpha = 0.0;
    Vector theta;
    std::optional<double> sigma2;
    Matrix train_X;
    KernelSpec spec;
    FitDiagnostics diagnostics;
    double jitter_applied = 0.0;
};

/// Cholesky factorization of K + alpha I with bounded diagonal repair.
///
/// On factorization failure, jitter 1e-10 * tr(K)/n is added and escalated
/// tenfold up to 1e-6 * tr(K)/n; past that a NumericalError carrying a
/// condition report is thrown.
class RidgeFactor {
public:
    RidgeFactor(const GramMatrix& K, double alpha);

    Matrix solve(const Matrix& rhs) const;
    Vector solve(const Vector& rhs) const;

    double alpha() const { return alpha_; }
    double jitter() const { return jitter_; }
    /// Effective diagonal shift alpha + jitter actually factorized.
    double shift() const { return alpha_ + jitter_; }
    /// log|K + (alpha + jitter) I| from the triangular factor, log domain.
    double log_det() const;
    Eigen::Index size() const { return llt_.matrixLLT().rows(); }

private:
    Eigen::LLT<Matrix> llt_;
    double alpha_ = 0.0;
    double jitter_ = 0.0;
};

RidgeModel fit(const GramMatrix& K, const Vector& Y, double alpha);
RidgeModel fit(const GramMatrix& K, Matrix train_X, const Vector& Y, double alpha);

Vector predict(const RidgeModel& model, const Matrix& X_new);

/// H = (K + alpha I)^{-1} K, symmetrized. Eigenvalues lie in [0,1) for PSD K.
Matrix hat_matrix(const GramMatrix& K, double alpha);

/// objective / n.
double sigma2_closed_form(const FitDiagnostics& diag, Eigen::Index n);

/// Unique positive root of c z^2 + n z - d = 0 (c > 0, d > 0).
double sigma2_quadratic_root(double c, Eigen::Index n, double d);

/// Unique real root of 2 c z^3 + n z - d = 0 (c > 0, d > 0); the polynomial is
/// strictly increasing with g(0) = -d, so the root is positive. Safeguarded
/// Newton from z0 = d/n with a bisection fallback on the bracket [0, d/n].
double sigma2_cubic_root(double c, Eigen::Index n, double d);

/// Floor substituted for degenerate sigma^2 estimates before any log().
inline constexpr double kSigma2Floor = 1e-12;

namespace detail {
/// Shared solve path for fit() and ScoreContext: one refinement step keeps the
/// relative residual of (K + shift I) theta = Y at solver precision.
Vector solve_coefficients(const RidgeFactor& factor, const GramMatrix& K, const Vector& Y);
FitDiagnostics compute_diagnostics(const GramMatrix& K, const Vector& Y, const Vector& theta,
                                   double alpha);
}  // namespace detail

}  // namespace krrsel
