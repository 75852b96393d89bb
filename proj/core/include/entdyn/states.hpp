// states.hpp: X-shaped reduced density matrices of the four tracked bipartitions
//
// Basis order throughout: |11>, |10>, |01>, |00>.
//
//     | a  0  0  w |
//     | 0  b  z  0 |
//     | 0  z* c  0 |
//     | w* 0  0  d |

#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "entdyn/amplitude.hpp"

namespace entdyn::states {

using amplitude::AmplitudePair;

struct XMatrix {
    double a{0.0}, b{0.0}, c{0.0}, d{0.0};
    std::complex<double> z{0.0, 0.0}; // |10><01|
    std::complex<double> w{0.0, 0.0}; // |11><00|

    double trace() const noexcept { return a + b + c + d; }
    bool operator==(const XMatrix&) const = default;
};

// Weight alpha of the |11> component in the initial two-qubit state.
class InitialStateParam {
public:
    explicit InitialStateParam(double alpha);
    double value() const noexcept { return alpha_; }

private:
    double alpha_;
};

enum class Partition { Q1Q2, R1R2, Q1R1, Q1R2 };

inline constexpr std::array<Partition, 4> kAllPartitions{Partition::Q1Q2, Partition::R1R2, Partition::Q1R1,
                                                          Partition::Q1R2};

// "q1q2", "r1r2", "q1r1", "q1r2"
std::string_view to_string(Partition p) noexcept;
// Accepts the lowercase labels above; throws InvalidArgument otherwise.
Partition partition_from_string(std::string_view label);

XMatrix rho_q1q2(InitialStateParam alpha, const AmplitudePair& amp) noexcept;
XMatrix rho_r1r2(InitialStateParam alpha, const AmplitudePair& amp) noexcept;
XMatrix rho_q1r1(InitialStateParam alpha, const AmplitudePair& amp) noexcept;
XMatrix rho_q1r2(InitialStateParam alpha, const AmplitudePair& amp) noexcept;

XMatrix reduced_state(Partition p, InitialStateParam alpha, const AmplitudePair& amp) noexcept;

struct Violation {
    std::string condition;
    double magnitude{0.0}; // how far past the tolerance the entry sits
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const noexcept { return violations.empty(); }
    std::string describe() const;
};

// Unit trace (1e-10), non-negative populations (-1e-12), and the X-state
// positivity conditions |z| <= sqrt(bc), |w| <= sqrt(ad) (slack 1e-10).
ValidationReport validate_density_matrix(const XMatrix& m);

} // namespace entdyn::states
