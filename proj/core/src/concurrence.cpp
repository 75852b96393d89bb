#include "entdyn/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "entdyn/error.hpp"

namespace entdyn::concurrence {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kNegativeEigTol = 1e-10;

// The lambdas involve square roots of eigenvalues of rho, which turns an
// absolute eigenvalue error e into roughly sqrt(e). Extended precision keeps
// that below 1e-10 even when populations drop to ~1e-14.
using Real = long double;
using Complex = std::complex<Real>;
using Mat4 = Eigen::Matrix<Complex, 4, 4>;
using MatX = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic>;

// Eigenvalues at or below this are exact zeros up to round-off.
constexpr Real kRankTol = 64 * std::numeric_limits<Real>::epsilon();

Mat4 to_eigen(const GeneralDensityMatrix& m) {
    Mat4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = Complex(m(r, c).real(), m(r, c).imag());
    return out;
}

// sigma_y x sigma_y in the |11>,|10>,|01>,|00> basis.
Mat4 spin_flip() {
    Mat4 y = Mat4::Zero();
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    return y;
}

} // namespace

GeneralDensityMatrix embed(const XMatrix& m) noexcept {
    GeneralDensityMatrix g;
    g(0, 0) = m.a;
    g(1, 1) = m.b;
    g(2, 2) = m.c;
    g(3, 3) = m.d;
    g(1, 2) = m.z;
    g(2, 1) = std::conj(m.z);
    g(0, 3) = m.w;
    g(3, 0) = std::conj(m.w);
    return g;
}

double concurrence_x(const XMatrix& m) {
    const auto report = states::validate_density_matrix(m);
    if (!report.valid()) throw ValidationError("concurrence_x: invalid density matrix: " + report.describe());
    const double ad = std::sqrt(std::max(0.0, m.a) * std::max(0.0, m.d));
    const double bc = std::sqrt(std::max(0.0, m.b) * std::max(0.0, m.c));
    return 2.0 * std::max({0.0, std::abs(m.z) - ad, std::abs(m.w) - bc});
}

double concurrence_wootters(const GeneralDensityMatrix& m) {
    const Mat4 rho = to_eigen(m);

    const auto herm_err = static_cast<double>((rho - rho.adjoint()).cwiseAbs().maxCoeff());
    if (!(herm_err <= kHermitianTol))
        throw ValidationError("concurrence_wootters: matrix not Hermitian (max deviation " +
                              std::to_string(herm_err) + ")");
    const auto trace_err = static_cast<double>(std::abs(rho.trace() - Real(1)));
    if (!(trace_err <= kTraceTol))
        throw ValidationError("concurrence_wootters: trace differs from 1 by " + std::to_string(trace_err));

    const Mat4 hermitian = Real(0.5) * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat4> eig(hermitian);
    if (eig.info() != Eigen::Success) throw NumericalError("concurrence_wootters: eigen-solve did not converge");

    const Eigen::Matrix<Real, 4, 1> p = eig.eigenvalues();
    if (p.minCoeff() < -kNegativeEigTol)
        throw ValidationError("concurrence_wootters: negative eigenvalue " +
                              std::to_string(static_cast<double>(p.minCoeff())));

    // rho = A A^dagger with A's columns the sub-normalized eigenvectors; the
    // lambdas are the singular values of the symmetric matrix A^T Y A.
    std::vector<int> kept;
    for (int i = 0; i < 4; ++i)
        if (p(i) > kRankTol) kept.push_back(i);
    if (kept.empty()) throw ValidationError("concurrence_wootters: zero matrix");

    const auto rank = static_cast<Eigen::Index>(kept.size());
    MatX a(4, rank);
    for (Eigen::Index j = 0; j < rank; ++j) a.col(j) = eig.eigenvectors().col(kept[j]) * std::sqrt(p(kept[j]));

    const MatX tau = a.transpose() * spin_flip() * a;
    Eigen::JacobiSVD<MatX> svd(tau);
    std::array<Real, 4> lambda{0, 0, 0, 0};
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) lambda[i] = svd.singularValues()(i);
    std::sort(lambda.begin(), lambda.end(), std::greater<>());

    return static_cast<double>(std::max(Real(0), lambda[0] - lambda[1] - lambda[2] - lambda[3]));
}

} // namespace entdyn::concurrence
