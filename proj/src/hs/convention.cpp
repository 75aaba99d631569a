#include "hyperhs/hs/convention.hpp"

#include "hyperhs/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hyperhs::hs {

std::string to_string(Convention c) { return c == Convention::THM ? "thm" : "half"; }

Convention convention_from_string(const std::string& name) {
    if (name == "thm" || name == "THM") return Convention::THM;
    if (name == "half" || name == "HALF") return Convention::HALF;
    throw InvalidArgument("unknown convention '" + name + "'");
}

std::complex<double> c11() {
    return {0.0, std::sqrt(2.0) * std::pow(std::numbers::pi, -1.5)};
}

double convention_target(Convention c, double trace_a_sq) {
    return c == Convention::THM ? std::exp(-trace_a_sq) : std::pow(2.0, 1.5) * std::exp(-0.5 * trace_a_sq);
}

std::complex<double> half_from_thm(std::complex<double> thm_value, int n) {
    const double dim = 0.5 * n * (n + 1);
    return std::pow(2.0, 0.5 * dim) * thm_value;
}

std::complex<double> thm_from_half(std::complex<double> half_value, int n) {
    const double dim = 0.5 * n * (n + 1);
    return std::pow(2.0, -0.5 * dim) * half_value;
}

std::complex<double> normalize_thm_11(std::complex<double> thm_value) {
    // C11 * I_HALF(sqrt2 A) / 2^{3/2} = C11 * I_THM(A)
    return c11() * thm_value;
}

EpsilonSchedule::EpsilonSchedule(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw InvalidArgument("epsilon schedule is empty");
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!(values_[k] > 0.0) || !std::isfinite(values_[k]))
            throw InvalidArgument("epsilon schedule entries must be positive and finite");
        if (k > 0 && !(values_[k] < values_[k - 1]))
            throw InvalidArgument("epsilon schedule must be strictly decreasing");
    }
}

EpsilonSchedule EpsilonSchedule::geometric(double start, double ratio, std::size_t count) {
    if (!(ratio > 1.0)) throw InvalidArgument("geometric schedule ratio must exceed 1");
    std::vector<double> v;
    double e = start;
    for (std::size_t k = 0; k < count; ++k, e /= ratio) v.push_back(e);
    return EpsilonSchedule(std::move(v));
}

double EpsilonSchedule::min_ratio() const {
    double r = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k + 1 < values_.size(); ++k) r = std::min(r, values_[k] / values_[k + 1]);
    return r;
}

std::complex<double> richardson(double eps1, std::complex<double> v1, double eps2, std::complex<double> v2) {
    if (eps1 == eps2) throw InvalidArgument("richardson: epsilons must differ");
    return (eps1 * v2 - eps2 * v1) / (eps1 - eps2);
}

}  // namespace hyperhs::hs
