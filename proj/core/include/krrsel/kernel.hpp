#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "krrsel/errors.hpp"

namespace krrsel {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class KernelFamily { Gaussian, Cauchy };

const char* to_string(KernelFamily family);

/// Declarative kernel description.
///
/// `param` is the Gaussian bandwidth sigma (input units) or the Cauchy
/// exponent eta (dimensionless):
///   Gaussian  k(x,y) = exp(-||x - y||^2 / sigma^2)
///   Cauchy    k(x,y) = 1 / (1 + ||x^eta - y^eta||^2 / eta)   (element-wise power)
///
/// An additive spec over p dimensions evaluates as the sum of one
/// single-variable kernel of the same family per input dimension.
struct KernelSpec {
    KernelFamily family = KernelFamily::Gaussian;
    double param = 1.0;
    bool additive = false;

    static KernelSpec gaussian(double sigma, bool additive = false) {
        return {KernelFamily::Gaussian, sigma, additive};
    }
    static KernelSpec cauchy(double eta, bool additive = false) {
        return {KernelFamily::Cauchy, eta, additive};
    }

    void validate() const;  // throws std::invalid_argument

    bool operator==(const KernelSpec&) const = default;
};

/// Symmetric kernel evaluation over a sample set.
///
/// `jitter_applied` records any diagonal repair a downstream factorization
/// added; a freshly built gram carries zero.
struct GramMatrix {
    Matrix values;
    KernelSpec spec;
    double jitter_applied = 0.0;

    GramMatrix() = default;
    /// Symmetrizes `values` as (V + V^T)/2.
    explicit GramMatrix(Matrix values, KernelSpec spec = {}, double jitter = 0.0);

    Eigen::Index size() const { return values.rows(); }
};

/// n >= 1, p >= 1, all entries finite; throws std::invalid_argument.
void validate_data_matrix(const Matrix& X);

double eval_kernel(const KernelSpec& spec, const Eigen::Ref<const Vector>& x,
                   const Eigen::Ref<const Vector>& y);

GramMatrix gram_matrix(const KernelSpec& spec, const Matrix& X);

/// Per-dimension grams of an additive kernel. Summed in index order they
/// reproduce gram_matrix(spec, X) elementwise.
std::vector<GramMatrix> component_grams(const KernelSpec& spec, const Matrix& X);

/// Rectangular evaluation k(A_i, B_j); used for out-of-sample prediction.
Matrix cross_kernel(const KernelSpec& spec, const Matrix& A, const Matrix& B);

}  // namespace krrsel
