#include "krrsel/kernel.hpp"

#include <cmath>
#include <sstream>

namespace krrsel {

const char* to_string(KernelFamily family) {
    switch (family) {
        case KernelFamily::Gaussian: return "gaussian";
        case KernelFamily::Cauchy: return "cauchy";
    }
    return "?";
}

void KernelSpec::validate() const {
    if (!(param > 0.0) || !std::isfinite(param)) {
        std::ostringstream msg;
        msg << "kernel parameter must be positive and finite, got " << param;
        throw std::invalid_argument(msg.str());
    }
}

GramMatrix::GramMatrix(Matrix v, KernelSpec s, double jitter)
    : values(std::move(v)), spec(s), jitter_applied(jitter) {
    if (values.rows() != values.cols())
        throw std::invalid_argument("GramMatrix: values must be square");
    values = 0.5 * (values + values.transpose()).eval();
}

void validate_data_matrix(const Matrix& X) {
    if (X.rows() < 1 || X.cols() < 1)
        throw std::invalid_argument("data matrix must have at least one row and one column");
    if (!X.allFinite())
        throw std::invalid_argument("data matrix contains non-finite entries");
}

namespace {

// eta must be integral for the element-wise power to stay real on negatives.
void check_cauchy_domain(double value, double eta) {
    if (value < 0.0 && eta != std::floor(eta)) {
        std::ostringstream msg;
        msg << "Cauchy kernel with non-integer eta=" << eta
            << " is undefined for negative input " << value;
        throw std::invalid_argument(msg.str());
    }
}

double gaussian_scalar(double a, double b, double sigma) {
    const double d = a - b;
    return std::exp(-(d * d) / (sigma * sigma));
}

double cauchy_scalar(double a, double b, double eta) {
    check_cauchy_domain(a, eta);
    check_cauchy_domain(b, eta);
    const double d = std::pow(a, eta) - std::pow(b, eta);
    return 1.0 / (1.0 + (d * d) / eta);
}

double scalar_kernel(const KernelSpec& spec, double a, double b) {
    return spec.family == KernelFamily::Gaussian ? gaussian_scalar(a, b, spec.param)
                                                 : cauchy_scalar(a, b, spec.param);
}

double vector_kernel(const KernelSpec& spec, const Eigen::Ref<const Vector>& x,
                     const Eigen::Ref<const Vector>& y) {
    if (spec.additive) {
        // Accumulated in index order so that component grams sum back
        // elementwise-exactly (see component_grams).
        double acc = 0.0;
        for (Eigen::Index j = 0; j < x.size(); ++j) acc += scalar_kernel(spec, x[j], y[j]);
        return acc;
    }
    if (spec.family == KernelFamily::Gaussian) {
        return std::exp(-(x - y).squaredNorm() / (spec.param * spec.param));
    }
    const double eta = spec.param;
    double s = 0.0;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
        check_cauchy_domain(x[j], eta);
        check_cauchy_domain(y[j], eta);
        const double d = std::pow(x[j], eta) - std::pow(y[j], eta);
        s += d * d;
    }
    return 1.0 / (1.0 + s / eta);
}

}  // namespace

double eval_kernel(const KernelSpec& spec, const Eigen::Ref<const Vector>& x,
                   const Eigen::Ref<const Vector>& y) {
    spec.validate();
    if (x.size() != y.size()) {
        std::ostringstream msg;
        msg << "eval_kernel: dimension mismatch (" << x.size() << " vs " << y.size() << ")";
        throw std::invalid_argument(msg.str());
    }
    if (x.size() == 0) throw std::invalid_argument("eval_kernel: empty input");
    if (!x.allFinite() || !y.allFinite())
        throw std::invalid_argument("eval_kernel: non-finite input");
    return vector_kernel(spec, x, y);
}

GramMatrix gram_matrix(const KernelSpec& spec, const Matrix& X) {
    spec.validate();
    validate_data_matrix(X);
    const Eigen::Index n = X.rows();
    Matrix K(n, n);
    // Each entry is computed once for i <= j and mirrored; the kernel formulas
    // are exactly symmetric in their arguments, so this equals (K + K^T)/2.
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double v = vector_kernel(spec, X.row(i).transpose(), X.row(j).transpose());
            K(i, j) = v;
            K(j, i) = v;
        }
    }
    GramMatrix out;
    out.values = std::move(K);
    out.spec = spec;
    out.jitter_applied = 0.0;
    return out;
}

std::vector<GramMatrix> component_grams(const KernelSpec& spec, const Matrix& X) {
    spec.validate();
    validate_data_matrix(X);
    if (!spec.additive)
        throw std::invalid_argument("component_grams requires an additive kernel spec");
    const Eigen::Index n = X.rows();
    const Eigen::Index p = X.cols();
    std::vector<GramMatrix> comps;
    comps.reserve(static_cast<std::size_t>(p));
    for (Eigen::Index c = 0; c < p; ++c) {
        Matrix K(n, n);
        for (Eigen::Index i = 0; i < n; ++i) {
            for (Eigen::Index j = i; j < n; ++j) {
                const double v = scalar_kernel(spec, X(i, c), X(j, c));
                K(i, j) = v;
                K(j, i) = v;
            }
        }
        GramMatrix g;
        g.values = std::move(K);
        g.spec = spec;
        comps.push_back(std::move(g));
    }
    return comps;
}

Matrix cross_kernel(const KernelSpec& spec, const Matrix& A, const Matrix& B) {
    spec.validate();
    validate_data_matrix(A);
    validate_data_matrix(B);
    if (A.cols() != B.cols()) {
        std::ostringstream msg;
        msg << "cross_kernel: dimension mismatch (" << A.cols() << " vs " << B.cols() << ")";
        throw std::invalid_argument(msg.str());
    }
    Matrix K(A.rows(), B.rows());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < B.rows(); ++j)
            K(i, j) = vector_kernel(spec, A.row(i).transpose(), B.row(j).transpose());
    return K;
}

}  // namespace krrsel
