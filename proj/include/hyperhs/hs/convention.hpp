#pragma once

#include <complex>
#include <string>
#include <vector>

namespace hyperhs::hs {

// THM:  integrand exp(-Tr R^2 - 2i Tr AR),      target exp(-Tr A^2)
// HALF: integrand exp(-1/2 Tr R^2 - i Tr AR),   target 2^{3/2} exp(-1/2 Tr A^2)
// The two are related by A -> sqrt(2) A, R -> sqrt(2) R.
enum class Convention { THM, HALF };

std::string to_string(Convention c);
Convention convention_from_string(const std::string& name);

// C_{1,1} = i sqrt(2) pi^{-3/2}
std::complex<double> c11();

double convention_target(Convention c, double trace_a_sq);

// With R' = sqrt(2) R on a space of B-symmetric matrices of real dimension
// d = n(n+1)/2:  I_HALF(sqrt(2) A) = 2^{d/2} I_THM(A).
std::complex<double> half_from_thm(std::complex<double> thm_value, int n);
std::complex<double> thm_from_half(std::complex<double> half_value, int n);

// C_{1,1} times the THM-convention integral, which tends to exp(-Tr A^2).
std::complex<double> normalize_thm_11(std::complex<double> thm_value);

// Strictly decreasing list of positive regularisation parameters.
class EpsilonSchedule {
public:
    explicit EpsilonSchedule(std::vector<double> values);

    // start, start/ratio, ... (count entries)
    static EpsilonSchedule geometric(double start, double ratio, std::size_t count);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t k) const { return values_[k]; }
    double smallest() const { return values_.back(); }

    // Smallest ratio eps_k / eps_{k+1}; infinity for fewer than two entries.
    double min_ratio() const;

private:
    std::vector<double> values_;
};

// Linear-in-eps extrapolation of two estimates to eps = 0.
std::complex<double> richardson(double eps1, std::complex<double> v1, double eps2, std::complex<double> v2);

}  // namespace hyperhs::hs
