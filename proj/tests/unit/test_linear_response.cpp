#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "popa/constants.hpp"
#include "popa/errors.hpp"
#include "popa/linear_response.hpp"
#include "popa/material.hpp"

using namespace popa;
using cd = std::complex<double>;
using std::numbers::pi;

namespace {

Geometry vacuum_geometry() {
    Geometry g;
    g.n1 = 1.0;
    g.n2 = 1.0;
    return g;
}

// coefficient of the long-wavelength law omega^2 = A2 * q for eps = 1
double qs_coefficient(const MaterialParams& m) {
    return 2.0 * cgs::e_charge * cgs::e_charge * m.fermi_energy / (cgs::hbar * cgs::hbar);
}

} // namespace

TEST_CASE("sheet susceptibility matches its long wavelength limit") {
    const MaterialParams m = graphene_preset();
    const double w = 1e14;
    const double q = 1e-4 * w / m.fermi_velocity;
    const cd chi = chi_s(m, cd(w, 0.0), q, 0.0);
    const double expect = -cgs::e_charge * cgs::e_charge * m.fermi_energy /
                          (pi * cgs::hbar * cgs::hbar * w * w);
    CHECK(chi.real() == doctest::Approx(expect).epsilon(1e-6));
    CHECK(std::abs(chi.imag()) < 1e-12 * std::abs(chi.real()));
}

TEST_CASE("sheet susceptibility scales with layer count only") {
    MaterialParams m = graphene_preset();
    const double w = 1e14, q = 100.0;
    const cd one = chi_s(m, cd(w, 0.0), q, 0.0);
    m.n_layers = 2;
    CHECK(chi_s(m, cd(w, 0.0), q, 0.0).real() == doctest::Approx(2.0 * one.real()));
    m.n_layers = 1;
    m.degeneracy = 2;
    CHECK(chi_s(m, cd(w, 0.0), q, 0.0).real() == doctest::Approx(one.real()));
}

TEST_CASE("sheet susceptibility damping in the long wavelength limit") {
    const MaterialParams m = graphene_preset();
    const double w = 1e14, gamma = 1e10;
    const double q = 1e-4 * w / m.fermi_velocity;
    const cd chi = chi_s(m, cd(w, 0.0), q, gamma);
    const double expect = cgs::e_charge * cgs::e_charge * m.fermi_energy * gamma /
                          (pi * cgs::hbar * cgs::hbar * w * (w * w + gamma * gamma));
    CHECK(chi.imag() == doctest::Approx(expect).epsilon(1e-6));
    CHECK(chi.imag() > 0.0);
}

TEST_CASE("sheet susceptibility branch point rejected") {
    const MaterialParams m = graphene_preset();
    const double q = 1000.0;
    CHECK_THROWS_AS(chi_s(m, cd(m.fermi_velocity * q, 0.0), q, 0.0), singular_input_error);
}

TEST_CASE("frequency derivative of the susceptibility") {
    const MaterialParams m = graphene_preset();
    const double w = 1e14;
    const double q = 1e-4 * w / m.fermi_velocity;
    const double expect =
        2.0 * cgs::e_charge * cgs::e_charge * m.fermi_energy / (pi * cgs::hbar * cgs::hbar * w * w * w);
    CHECK(dchi_domega(m, w, q) == doctest::Approx(expect).epsilon(1e-5));
}

TEST_CASE("mode follows the square root law away from the light line") {
    const MaterialParams m = graphene_preset();
    const Geometry g = vacuum_geometry();
    const double A2 = qs_coefficient(m);
    for (double frac : {3e-3, 6e-3, 1e-2}) {
        const double q = frac * m.k_fermi();
        const PlasmonMode mode = solve_mode(q, g, m);
        CHECK(mode.omega_s == doctest::Approx(std::sqrt(A2 * q)).epsilon(1e-2));
    }
}

TEST_CASE("light line pulls the mode below the square root law") {
    // deviation from the unretarded law should follow -A2/(4 c^2 q)
    const MaterialParams m = graphene_preset();
    const Geometry g = vacuum_geometry();
    const double A2 = qs_coefficient(m);
    for (double frac : {3e-4, 1e-3}) {
        const double q = frac * m.k_fermi();
        const PlasmonMode mode = solve_mode(q, g, m);
        const double delta = mode.omega_s / std::sqrt(A2 * q) - 1.0;
        const double predicted = -A2 / (4.0 * cgs::c_light * cgs::c_light * q);
        CHECK(delta < 0.0);
        CHECK(delta == doctest::Approx(predicted).epsilon(0.10));
    }
}

TEST_CASE("no bound mode when the trial window closes on the light line") {
    const MaterialParams m = graphene_preset();
    const Geometry g = vacuum_geometry();
    CHECK_THROWS_AS(solve_mode(1.0, g, m), no_mode_error);
}

TEST_CASE("group velocity matches the square root law") {
    const MaterialParams m = graphene_preset();
    const Geometry g = vacuum_geometry();
    const double q = 6e-3 * m.k_fermi();
    const PlasmonMode mode = solve_mode(q, g, m);
    CHECK(mode.v_s == doctest::Approx(mode.omega_s / (2.0 * q)).epsilon(0.02));
    CHECK(mode.v_s > 0.0);
    CHECK(mode.v_s < cgs::c_light);
}

TEST_CASE("normalization is stable under step halving") {
    const MaterialParams m = graphene_preset();
    const Geometry g = vacuum_geometry();
    const double q = 6e-3 * m.k_fermi();
    const PlasmonMode mode = solve_mode(q, g, m);
    const double ref = cgs::hbar * pi * cgs::hbar * cgs::hbar *
                       std::pow(mode.omega_s, 3) /
                       (2.0 * cgs::e_charge * cgs::e_charge * m.fermi_energy);
    CHECK(mode.E_s0_sq > 0.0);
    CHECK(mode.E_s0_sq == doctest::Approx(ref).epsilon(0.05));
    const double d1 = dchi_domega(m, mode.omega_s, q, 1e-6);
    const double d2 = dchi_domega(m, mode.omega_s, q, 5e-7);
    CHECK(std::abs(d1 - d2) < 1e-6 * std::abs(d1));
}

TEST_CASE("mode damping is linear in the collision rate and half its size") {
    const MaterialParams m = graphene_preset();
    const Geometry g = vacuum_geometry();
    const double q = 6e-3 * m.k_fermi();
    ModeOptions o1;
    o1.collision_gamma = 1e10;
    ModeOptions o2;
    o2.collision_gamma = 2e10;
    const PlasmonMode m1 = solve_mode(q, g, m, o1);
    const PlasmonMode m2 = solve_mode(q, g, m, o2);
    CHECK(m2.gamma_s / m1.gamma_s == doctest::Approx(2.0).epsilon(0.01));
    CHECK(m1.gamma_s == doctest::Approx(0.5e10).epsilon(0.02));
}

TEST_CASE("dispersion residual vanishes at the mode") {
    const MaterialParams m = graphene_preset();
    Geometry g = vacuum_geometry();
    g.n2 = 2.0;
    const double q = 4e-3 * m.k_fermi();
    const PlasmonMode mode = solve_mode(q, g, m);
    const cd res = dispersion_residual(cd(mode.omega_s, 0.0), q, g, m);
    const cd term = g.eps1() / mode.p1;
    CHECK(std::abs(res) < 1e-9 * std::abs(term));
    CHECK(mode.p1.real() > 0.0);
    CHECK(mode.p2.real() > 0.0);
}

TEST_CASE("substrate screening lowers the mode frequency") {
    const MaterialParams m = graphene_preset();
    const Geometry vac = vacuum_geometry();
    Geometry sub = vacuum_geometry();
    sub.n2 = 2.0;
    const double q = 4e-3 * m.k_fermi();
    CHECK(solve_mode(q, sub, m).omega_s < solve_mode(q, vac, m).omega_s);
}

TEST_CASE("frequency solve inverts the wave number solve") {
    const MaterialParams m = graphene_preset();
    Geometry g = vacuum_geometry();
    g.n2 = 2.0;
    const double q = 4e-3 * m.k_fermi();
    const PlasmonMode fwd = solve_mode(q, g, m);
    const PlasmonMode inv = solve_mode_at_omega(fwd.omega_s, g, m);
    CHECK(inv.q_s == doctest::Approx(q).epsilon(1e-9));
}

TEST_CASE("field profile decays away from the sheet") {
    const MaterialParams m = graphene_preset();
    Geometry g = vacuum_geometry();
    g.n2 = 2.0;
    const double q = 4e-3 * m.k_fermi();
    const PlasmonMode mode = solve_mode(q, g, m);
    const auto at0 = field_profile(0.0, mode);
    CHECK(std::abs(at0[0]) == doctest::Approx(std::sqrt(mode.E_s0_sq)));
    CHECK(std::abs(at0[1]) == 0.0);

    const double z1 = 1.0 / mode.p1.real();
    const auto up = field_profile(z1, mode);
    CHECK(std::abs(up[0]) == doctest::Approx(std::exp(-1.0) * std::sqrt(mode.E_s0_sq)));
    // transverse component ratio i q / p on the upper side
    const cd ratio = up[2] / up[0];
    CHECK(ratio.real() == doctest::Approx((cd(0.0, 1.0) * (q / mode.p1)).real()));
    CHECK(ratio.imag() == doctest::Approx((cd(0.0, 1.0) * (q / mode.p1)).imag()));

    const double z2 = -1.0 / mode.p2.real();
    const auto dn = field_profile(z2, mode);
    CHECK(std::abs(dn[0]) == doctest::Approx(std::exp(-1.0) * std::sqrt(mode.E_s0_sq)));
}

TEST_CASE("no multiplicity warning at a regular point") {
    const MaterialParams m = graphene_preset();
    const Geometry g = vacuum_geometry();
    bool warn = true;
    solve_mode(4e-3 * m.k_fermi(), g, m, {}, &warn);
    CHECK_FALSE(warn);
}
