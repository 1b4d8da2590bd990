#include "krrsel/ridge.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <sstream>

namespace krrsel {

namespace {

void validate_alpha(double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        std::ostringstream msg;
        msg << "ridge parameter alpha must be positive and finite, got " << alpha;
        throw std::invalid_argument(msg.str());
    }
}

[[noreturn]] void throw_condition_report(const GramMatrix& K, double alpha, double max_jitter) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(K.values, Eigen::EigenvaluesOnly);
    std::ostringstream msg;
    msg << "Cholesky of K + alpha I failed after jitter escalation (n=" << K.size()
        << ", alpha=" << alpha << ", max jitter tried=" << max_jitter
        << "); gram eigenvalue range [" << es.eigenvalues().minCoeff() << ", "
        << es.eigenvalues().maxCoeff() << "]";
    throw NumericalError(msg.str());
}

}  // namespace

RidgeFactor::RidgeFactor(const GramMatrix& K, double alpha) : alpha_(alpha) {
    validate_alpha(alpha);
    if (K.size() < 1) throw std::invalid_argument("RidgeFactor: empty gram matrix");
    const Eigen::Index n = K.size();
    Matrix shifted = K.values;
    shifted.diagonal().array() += alpha + K.jitter_applied;
    llt_.compute(shifted);
    jitter_ = K.jitter_applied;
    if (llt_.info() == Eigen::Success) return;

    const double base = K.values.trace() / static_cast<double>(n);
    if (!(base > 0.0)) throw_condition_report(K, alpha, 0.0);
    double jitter = 1e-10 * base;
    const double max_jitter = 1e-6 * base;
    while (jitter <= max_jitter * (1.0 + 1e-15)) {
        shifted = K.values;
        shifted.diagonal().array() += alpha + K.jitter_applied + jitter;
        llt_.compute(shifted);
        if (llt_.info() == Eigen::Success) {
            jitter_ = K.jitter_applied + jitter;
            return;
        }
        jitter *= 10.0;
    }
    throw_condition_report(K, alpha, max_jitter);
}

Matrix RidgeFactor::solve(const Matrix& rhs) const { return llt_.solve(rhs); }

Vector RidgeFactor::solve(const Vector& rhs) const { return llt_.solve(rhs); }

double RidgeFactor::log_det() const {
    return 2.0 * llt_.matrixLLT().diagonal().array().log().sum();
}

namespace detail {

Vector solve_coefficients(const RidgeFactor& factor, const GramMatrix& K, const Vector& Y) {
    Vector theta = factor.solve(Y);
    // One refinement step against the factorized (shifted) system.
    Vector residual = Y - K.values * theta - factor.shift() * theta;
    const double rnorm = residual.norm();
    if (rnorm > 1e-12 * Y.norm() && std::isfinite(rnorm)) {
        theta += factor.solve(residual);
    }
    return theta;
}

FitDiagnostics compute_diagnostics(const GramMatrix& K, const Vector& Y, const Vector& theta,
                                   double alpha) {
    FitDiagnostics diag;
    const Vector k_theta = K.values * theta;
    diag.rss = (Y - k_theta).squaredNorm();
    diag.penalty = alpha * theta.dot(k_theta);
    diag.objective = diag.rss + diag.penalty;
    return diag;
}

}  // namespace detail

RidgeModel fit(const GramMatrix& K, const Vector& Y, double alpha) {
    validate_alpha(alpha);
    if (Y.size() != K.size())
        throw std::invalid_argument("fit: response length does not match gram size");
    if (!Y.allFinite()) throw std::invalid_argument("fit: non-finite response");

    RidgeFactor factor(K, alpha);
    RidgeModel model;
    model.alpha = alpha;
    model.spec = K.spec;
    model.jitter_applied = factor.jitter();
    model.theta = detail::solve_coefficients(factor, K, Y);
    model.diagnostics = detail::compute_diagnostics(K, Y, model.theta, alpha);
    return model;
}

RidgeModel fit(const GramMatrix& K, Matrix train_X, const Vector& Y, double alpha) {
    validate_data_matrix(train_X);
    if (train_X.rows() != K.size())
        throw std::invalid_argument("fit: training inputs do not match gram size");
    RidgeModel model = fit(K, Y, alpha);
    model.train_X = std::move(train_X);
    return model;
}

Vector predict(const RidgeModel& model, const Matrix& X_new) {
    if (model.train_X.size() == 0)
        throw std::logic_error("predict: model was fitted without training inputs");
    validate_data_matrix(X_new);
    if (X_new.cols() != model.train_X.cols()) {
        std::ostringstream msg;
        msg << "predict: dimension mismatch (" << X_new.cols() << " vs "
            << model.train_X.cols() << ")";
        throw std::invalid_argument(msg.str());
    }
    return cross_kernel(model.spec, X_new, model.train_X) * model.theta;
}

Matrix hat_matrix(const GramMatrix& K, double alpha) {
    RidgeFactor factor(K, alpha);
    Matrix H = factor.solve(K.values);
    return 0.5 * (H + H.transpose()).eval();
}

double sigma2_closed_form(const FitDiagnostics& diag, Eigen::Index n) {
    if (n < 1) throw std::invalid_argument("sigma2_closed_form: n must be >= 1");
    return diag.objective / static_cast<double>(n);
}

double sigma2_quadratic_root(double c, Eigen::Index n, double d) {
    if (!(c > 0.0) || !(d > 0.0)) {
        std::ostringstream msg;
        msg << "sigma2_quadratic_root: degenerate instance (c=" << c << ", d=" << d << ")";
        throw NumericalError(msg.str());
    }
    const double nn = static_cast<double>(n);
    // z = (-n + sqrt(n^2 + 4cd)) / (2c), in the cancellation-free form.
    const double disc = std::sqrt(nn * nn + 4.0 * c * d);
    const double z = 2.0 * d / (nn + disc);
    const double residual = std::abs(c * z * z + nn * z - d);
    if (!(residual <= 1e-8 * std::max(1.0, d))) {
        std::ostringstream msg;
        msg << "sigma2_quadratic_root: residual " << residual << " out of tolerance";
        throw NumericalError(msg.str());
    }
    return z;
}

double sigma2_cubic_root(double c, Eigen::Index n, double d) {
    if (!(c > 0.0) || !(d > 0.0)) {
        std::ostringstream msg;
        msg << "sigma2_cubic_root: degenerate instance (c=" << c << ", d=" << d << ")";
        throw NumericalError(msg.str());
    }
    const double nn = static_cast<double>(n);
    const auto g = [&](double z) { return 2.0 * c * z * z * z + nn * z - d; };
    const auto dg = [&](double z) { return 6.0 * c * z * z + nn; };

    // g is strictly increasing, g(0) = -d < 0 and g(d/n) = 2c(d/n)^3 >= 0.
    double lo = 0.0;
    double hi = d / nn;
    double z = hi;
    const double tol = 1e-14 * std::max(1.0, d);
    for (int iter = 0; iter < 200; ++iter) {
        const double gz = g(z);
        if (std::abs(gz) <= tol) return z;
        if (gz > 0.0) {
            hi = z;
        } else {
            lo = z;
        }
        double next = z - gz / dg(z);
        if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
        if (next == z) break;
        z = next;
    }
    if (std::abs(g(z)) <= 1e-8 * std::max(1.0, d)) return z;
    std::ostringstream msg;
    msg << "sigma2_cubic_root: no convergence in 200 iterations (c=" << c << ", n=" << n
        << ", d=" << d << ", residual=" << std::abs(g(z)) << ")";
    throw NumericalError(msg.str());
}

}  // namespace krrsel
