// concurrence.hpp: Two-qubit concurrence: X-state closed form and Wootters' general construction

#pragma once

#include <array>
#include <complex>

#include "entdyn/states.hpp"

namespace entdyn::concurrence {

using states::XMatrix;

// Dense 4x4 density matrix, row-major, same basis order as XMatrix.
class GeneralDensityMatrix {
public:
    using value_type = std::complex<double>;

    GeneralDensityMatrix() = default;
    explicit GeneralDensityMatrix(const std::array<value_type, 16>& entries) : m_(entries) {}

    value_type& operator()(int row, int col) noexcept { return m_[static_cast<std::size_t>(4 * row + col)]; }
    const value_type& operator()(int row, int col) const noexcept {
        return m_[static_cast<std::size_t>(4 * row + col)];
    }
    const std::array<value_type, 16>& entries() const noexcept { return m_; }

private:
    std::array<value_type, 16> m_{};
};

GeneralDensityMatrix embed(const XMatrix& m) noexcept;

// 2 max{0, |z| - sqrt(ad), |w| - sqrt(bc)}. Throws ValidationError for
// matrices rejected by validate_density_matrix.
double concurrence_x(const XMatrix& m);

// Wootters: max{0, l1 - l2 - l3 - l4} with l_i the square roots of the
// eigenvalues of rho (sy x sy) rho* (sy x sy), in decreasing order.
// Throws ValidationError for non-Hermitian, non-unit-trace or indefinite
// input (eigenvalues below -1e-10) and NumericalError if the eigen-solve fails.
double concurrence_wootters(const GeneralDensityMatrix& m);

} // namespace entdyn::concurrence
