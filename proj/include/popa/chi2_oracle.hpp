#pragma once

#include <array>
#include <complex>
#include <vector>

#include "popa/material.hpp"

namespace popa {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Polarization {
    std::complex<double> ex{0.0, 0.0};
    std::complex<double> ey{0.0, 0.0};
    void validate() const; // unit norm
    static Polarization along_x() { return {{1.0, 0.0}, {0.0, 0.0}}; }
    static Polarization along_y() { return {{0.0, 0.0}, {1.0, 0.0}}; }
};

struct KGridSpec {
    int n_radial = 64;          // radial panel budget per angle
    int n_angular = 256;        // midpoint angular nodes
    double k_max = 4.0;         // radial cutoff in units of k_F
    double refine_width = 0.05; // relative half-width of refinement bands
    double eta = 0.0;           // numerical broadening of all denominators, 1/s
    void validate() const;
};

// brute-force k-space integral of the second-order current for arbitrary
// polarizations and in-plane wave vectors; returns (sigma_x, sigma_y), the
// current components per unit product of field amplitudes.
// check_tolerance > 0 re-evaluates on a doubled grid and fails loudly when
// the two estimates disagree beyond the tolerance.
std::array<std::complex<double>, 2>
sigma2_numeric(const Polarization& eta1, const Polarization& eta2, double omega1,
               double omega2, Vec2 q1, Vec2 q2, const MaterialParams& mat,
               const KGridSpec& grid, double check_tolerance = 0.0);

struct ConvergenceRow {
    KGridSpec grid;
    std::complex<double> value; // x component
    double delta;               // |value - previous| / |value|, 0 for the first row
};

std::vector<ConvergenceRow>
convergence_study(const Polarization& eta1, const Polarization& eta2, double omega1,
                  double omega2, Vec2 q1, Vec2 q2, const MaterialParams& mat,
                  const std::vector<KGridSpec>& grids);

} // namespace popa
