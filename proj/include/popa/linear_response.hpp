#pragma once

#include <array>
#include <complex>

#include "popa/material.hpp"

namespace popa {

// One solved TM surface-plasmon mode.
struct PlasmonMode {
    double omega_s = 0.0;          // rad/s, real part of the mode frequency
    double q_s = 0.0;              // 1/cm
    double v_s = 0.0;              // group velocity d omega/d q, cm/s
    double gamma_s = 0.0;          // amplitude decay rate, 1/s
    double E_s0_sq = 0.0;          // |E_s0|^2 normalization
    std::complex<double> p1{0, 0}; // transverse decay constant, z > 0 side
    std::complex<double> p2{0, 0}; // transverse decay constant, z < 0 side
};

struct ModeOptions {
    double collision_gamma = 0.0; // broadening used for Im chi_s -> gamma_s
    int scan_points = 200;        // bracketing scan resolution
};

// Nonlocal intraband 2D susceptibility (per layer value times n_layers).
// gamma is added to omega where the formula carries a broadened frequency;
// the leading 1/omega factor stays unbroadened. Throws singular_input_error
// within 1e-12 of the v_F q branch point.
std::complex<double> chi_s(const MaterialParams& mat, std::complex<double> omega,
                           double q, double gamma);

// Left-hand side of the TM mode condition: 4 pi chi_s + eps1/p1 + eps2/p2,
// with p_j = sqrt(q^2 - eps_j omega^2/c^2), principal branch, Re p >= 0.
std::complex<double> dispersion_residual(std::complex<double> omega, double q,
                                         const Geometry& geom, const MaterialParams& mat,
                                         double gamma = 0.0);

// Real root of the mode condition at fixed q (gamma = 0), plus group velocity,
// damping at opts.collision_gamma, and quantization normalization.
// multiplicity_warning (optional) is set when more than one bracketed root shows
// up in the scan; the lowest root is returned.
PlasmonMode solve_mode(double q, const Geometry& geom, const MaterialParams& mat,
                       const ModeOptions& opts = {}, bool* multiplicity_warning = nullptr);

// Inverse solve: find q such that the mode frequency equals omega.
PlasmonMode solve_mode_at_omega(double omega, const Geometry& geom,
                                const MaterialParams& mat, const ModeOptions& opts = {});

// Re d(chi_s)/d(omega) at gamma = 0 by centered difference, relative step
// rel_step in omega.
double dchi_domega(const MaterialParams& mat, double omega, double q,
                   double rel_step = 1e-6);

// |E_s0|^2 = hbar / Re(d chi_s/d omega). Throws anomalous_dispersion_error on a
// non-positive derivative.
double normalization_E_s0_sq(const PlasmonMode& mode, const MaterialParams& mat);

// gamma_s = Im[chi_s(omega_s, q_s; collision_gamma)] |E_s0|^2 / hbar.
double damping_gamma_s(const PlasmonMode& mode, const MaterialParams& mat,
                       double collision_gamma);

// E(z) = (x +- z i q/p) E_s0 e^{-+ p z}; components (E_x, E_y, E_z), E_y = 0.
std::array<std::complex<double>, 3> field_profile(double z, const PlasmonMode& mode);

} // namespace popa
