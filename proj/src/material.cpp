#include "popa/material.hpp"

#include <cmath>
#include <numbers>

#include "popa/constants.hpp"
#include "popa/errors.hpp"
#include "popa/units.hpp"

namespace popa {

double MaterialParams::k_fermi() const {
    return fermi_energy / (cgs::hbar * fermi_velocity);
}

void MaterialParams::validate() const {
    if (!(fermi_energy > 0.0))
        throw config_error("fermi_energy must be positive (band side goes in band_sign)");
    if (!(fermi_velocity > 0.0))
        throw config_error("fermi_velocity must be positive");
    if (degeneracy != 2 && degeneracy != 4)
        throw config_error("degeneracy must be 2 or 4");
    if (!(gamma_pol >= 0.0))
        throw config_error("gamma_pol must be non-negative");
    if (band_sign != 1 && band_sign != -1)
        throw config_error("band_sign must be +1 or -1");
    if (n_layers < 1)
        throw config_error("n_layers must be >= 1");
}

void Geometry::validate() const {
    if (!(n1 >= 1.0) || !(n2 >= 1.0))
        throw config_error("refractive indices must be >= 1");
    if (!(std::abs(theta_1p) < std::numbers::pi / 2))
        throw config_error("theta_1p must satisfy |theta| < pi/2");
    if (!(std::abs(theta_1i) < std::numbers::pi / 2))
        throw config_error("theta_1i must satisfy |theta| < pi/2");
    if (!(omega_p > 0.0))
        throw config_error("omega_p must be positive");
    if (!(I_p >= 0.0))
        throw config_error("I_p must be non-negative");
}

void DetectionGeometry::validate() const {
    if (!(L_x > 0.0) || !(L_y > 0.0) || !(delta_omega > 0.0) || !(A_D > 0.0) ||
        !(temperature > 0.0))
        throw config_error("detection geometry fields must all be positive");
}

double resonant_fermi_energy(double omega_p) {
    return 0.5 * cgs::hbar * omega_p;
}

MaterialParams graphene_preset() {
    MaterialParams m;
    m.fermi_energy = resonant_fermi_energy(to_internal(10.0, Unit::wavelength_um));
    m.fermi_velocity = 1.0e8;
    m.degeneracy = 4;
    m.gamma_pol = 1e12;
    m.band_sign = +1;
    m.n_layers = 1;
    return m;
}

MaterialParams ti_preset() {
    MaterialParams m = graphene_preset();
    m.fermi_velocity = 0.5e8;
    m.degeneracy = 2;
    m.n_layers = 2; // thin film, two surfaces
    return m;
}

} // namespace popa
