#include "entdyn/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "entdyn/error.hpp"

namespace entdyn::states {

namespace {

constexpr double kTraceTol = 1e-10;
constexpr double kPopulationTol = 1e-12;
constexpr double kCoherenceTol = 1e-10;

// Shared shape of the q1q2 and r1r2 blocks; r1r2 is q1q2 with the roles of
// the two amplitudes exchanged.
XMatrix pair_block(double alpha, double x, double y) noexcept {
    const double x2 = x * x, y2 = y * y;
    XMatrix m;
    m.a = alpha * x2 * x2 / 3.0;
    m.b = (alpha * x2 * y2 + x2) / 3.0;
    m.c = m.b;
    m.z = x2 / 3.0;
    m.d = (alpha * y2 * y2 + 2.0 * y2 + 1.0 - alpha) / 3.0;
    return m;
}

} // namespace

InitialStateParam::InitialStateParam(double alpha) : alpha_(alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw InvalidArgument("alpha must lie in [0, 1], got " + std::to_string(alpha));
}

std::string_view to_string(Partition p) noexcept {
    switch (p) {
    case Partition::Q1Q2: return "q1q2";
    case Partition::R1R2: return "r1r2";
    case Partition::Q1R1: return "q1r1";
    case Partition::Q1R2: return "q1r2";
    }
    return "?";
}

Partition partition_from_string(std::string_view label) {
    for (Partition p : kAllPartitions)
        if (to_string(p) == label) return p;
    throw InvalidArgument("unknown partition '" + std::string(label) + "'");
}

XMatrix rho_q1q2(InitialStateParam alpha, const AmplitudePair& amp) noexcept {
    return pair_block(alpha.value(), amp.c0, amp.c_tilde);
}

XMatrix rho_r1r2(InitialStateParam alpha, const AmplitudePair& amp) noexcept {
    return pair_block(alpha.value(), amp.c_tilde, amp.c0);
}

XMatrix rho_q1r1(InitialStateParam alpha, const AmplitudePair& amp) noexcept {
    const double k = (1.0 + alpha.value()) / 3.0;
    XMatrix m;
    m.b = k * amp.c0 * amp.c0;
    m.c = k * amp.c_tilde * amp.c_tilde;
    m.z = k * amp.c0 * amp.c_tilde;
    m.d = (2.0 - alpha.value()) / 3.0;
    return m;
}

XMatrix rho_q1r2(InitialStateParam alpha, const AmplitudePair& amp) noexcept {
    const double al = alpha.value();
    const double x2 = amp.c0 * amp.c0, y2 = amp.c_tilde * amp.c_tilde;
    XMatrix m;
    m.a = al * x2 * y2 / 3.0;
    m.b = (x2 + al * x2 * x2) / 3.0;
    m.c = (y2 + al * y2 * y2) / 3.0;
    m.z = amp.c0 * amp.c_tilde / 3.0;
    m.d = (2.0 - al + al * x2 * y2) / 3.0;
    return m;
}

XMatrix reduced_state(Partition p, InitialStateParam alpha, const AmplitudePair& amp) noexcept {
    switch (p) {
    case Partition::Q1Q2: return rho_q1q2(alpha, amp);
    case Partition::R1R2: return rho_r1r2(alpha, amp);
    case Partition::Q1R1: return rho_q1r1(alpha, amp);
    case Partition::Q1R2: return rho_q1r2(alpha, amp);
    }
    return {};
}

std::string ValidationReport::describe() const {
    if (violations.empty()) return "valid";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i].condition << " (by " << violations[i].magnitude << ")";
    }
    return os.str();
}

ValidationReport validate_density_matrix(const XMatrix& m) {
    ValidationReport r;
    auto flag = [&r](std::string what, double excess) { r.violations.push_back({std::move(what), excess}); };

    for (const auto& [name, v] : {std::pair{"a", m.a}, {"b", m.b}, {"c", m.c}, {"d", m.d}}) {
        if (!std::isfinite(v)) flag(std::string(name) + " is not finite", 0.0);
        else if (v < -kPopulationTol) flag(std::string(name) + " < 0", -v);
    }
    const double trace_err = std::abs(m.trace() - 1.0);
    if (!(trace_err <= kTraceTol)) flag("trace != 1", trace_err);

    const double bc = std::sqrt(std::max(0.0, m.b) * std::max(0.0, m.c));
    const double ad = std::sqrt(std::max(0.0, m.a) * std::max(0.0, m.d));
    if (!(std::abs(m.z) <= bc + kCoherenceTol)) flag("|z| > sqrt(bc)", std::abs(m.z) - bc);
    if (!(std::abs(m.w) <= ad + kCoherenceTol)) flag("|w| > sqrt(ad)", std::abs(m.w) - ad);
    return r;
}

} // namespace entdyn::states
