#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace popa {

// Bad user-supplied configuration or argument values. CLI exit code 2.
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Runtime numerical failures. CLI exit code 3.
class numerical_error : public std::runtime_error {
  public:
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

class no_mode_error : public numerical_error {
  public:
    explicit no_mode_error(const std::string& msg) : numerical_error(msg) {}
};

class landau_damped_error : public numerical_error {
  public:
    explicit landau_damped_error(const std::string& msg) : numerical_error(msg) {}
};

class singular_input_error : public numerical_error {
  public:
    explicit singular_input_error(const std::string& msg) : numerical_error(msg) {}
};

class anomalous_dispersion_error : public numerical_error {
  public:
    explicit anomalous_dispersion_error(const std::string& msg) : numerical_error(msg) {}
};

class no_phase_match_error : public numerical_error {
  public:
    explicit no_phase_match_error(const std::string& msg) : numerical_error(msg) {}
};

class no_threshold_error : public numerical_error {
  public:
    explicit no_threshold_error(const std::string& msg) : numerical_error(msg) {}
};

class total_reflection_error : public numerical_error {
  public:
    explicit total_reflection_error(const std::string& msg) : numerical_error(msg) {}
};

// Grid-doubling self-check failed; carries both estimates for diagnostics.
class convergence_failure : public numerical_error {
  public:
    convergence_failure(const std::string& msg, std::complex<double> coarse,
                        std::complex<double> fine)
        : numerical_error(msg), coarse_value(coarse), fine_value(fine) {}
    std::complex<double> coarse_value;
    std::complex<double> fine_value;
};

} // namespace popa
