#pragma once

#include <complex>

#include "popa/material.hpp"

namespace popa {

// per-leg dissipation rates entering as omega1 -> omega1 + i gamma1 etc.
struct Broadening {
    double gamma1 = 0.0;
    double gamma2 = 0.0;
    double gamma3 = 0.0;
    static Broadening uniform(double g) { return {g, g, g}; }
};

enum class TensorIndex { x, y };

// one tensor component with its frequency and wave-number arguments; the
// first index belongs to the output (mixing-frequency) leg
struct Chi2Component {
    TensorIndex idx_out = TensorIndex::x;
    TensorIndex idx_in1 = TensorIndex::y;
    TensorIndex idx_in2 = TensorIndex::y;
    double omega1 = 0.0;
    double omega2 = 0.0;
    double q1 = 0.0;
    double q2 = 0.0;
    Broadening broadening;
};

enum class Permutation { identity, output_with_first, output_with_second, swap_inputs };

// closed-form sheet conductivity sigma^(2)_xyy(omega1+omega2; omega1, omega2)
// for in-plane wave numbers along x
std::complex<double> sigma2_xyy(double omega1, double omega2, double q1, double q2,
                                const MaterialParams& mat, const Broadening& br = {});

// chi = i sigma / (omega1 + omega2)
std::complex<double> chi2_from_sigma2(std::complex<double> sigma, double omega_sum);

// resonant limit at omega_p near 2 v_F k_F: chi^(s)_xyy = conj(chi^(i)_yyx)
std::complex<double> chi2_resonant(double omega_p, double omega_i, double omega_s, double q_p,
                                   const MaterialParams& mat,
                                   bool* off_resonance_warning = nullptr);

// index/argument relabeling that must leave the lossless susceptibility
// unchanged; wave numbers ride along with their frequencies
Chi2Component permutation_partner(const Chi2Component& in,
                                  Permutation kind = Permutation::output_with_first);

} // namespace popa
