#pragma once

namespace popa {

// A 2D Dirac material (graphene sheet or TI surface). Immutable value type.
struct MaterialParams {
    double fermi_energy = 0.0;    // erg, > 0 (band side carried by band_sign)
    double fermi_velocity = 0.0;  // cm/s
    int degeneracy = 4;           // spin x valley, 2 or 4
    double gamma_pol = 0.0;       // interband polarization decay rate, 1/s
    int band_sign = +1;           // +1 Fermi level in conduction band, -1 valence
    int n_layers = 1;             // stacked non-interacting layers

    double k_fermi() const; // fermi_energy / (hbar * fermi_velocity), 1/cm
    void validate() const;  // throws config_error on a bad field
};

// Two half-spaces around the 2D layer plus the pump beam. theta_1i is signed.
struct Geometry {
    double n1 = 1.0;        // refractive index, z > 0 side (incidence side)
    double n2 = 1.0;        // refractive index, z < 0 side
    double theta_1p = 0.0;  // pump incidence angle in medium 1, rad
    double theta_1i = 0.0;  // idler angle in medium 1, rad, signed
    double omega_p = 0.0;   // pump angular frequency, rad/s
    double I_p = 0.0;       // pump intensity, erg s^-1 cm^-2

    double eps1() const { return n1 * n1; }
    double eps2() const { return n2 * n2; }
    void validate() const;
};

// Detector/collection parameters.
struct DetectionGeometry {
    double L_x = 0.0;         // collection length along propagation, cm
    double L_y = 0.0;         // aperture width, cm
    double delta_omega = 0.0; // spectral interval, rad/s
    double A_D = 0.0;         // detector area, cm^2
    double temperature = 0.0; // reservoir temperature, K

    void validate() const;
};

// E_F defaults to the pump-resonance value for a 10 um pump (hbar*omega_p/2).
double resonant_fermi_energy(double omega_p);

MaterialParams graphene_preset();
MaterialParams ti_preset(); // Bi2Se3 surfaces: half v_F, half degeneracy, 2 layers

} // namespace popa
