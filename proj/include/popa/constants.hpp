#pragma once

// Physical constants in Gaussian CGS units (CODATA 2018 exact values where defined).

namespace popa {
namespace cgs {

inline constexpr double c_light = 2.99792458e10;           // cm/s
inline constexpr double e_charge = 4.80320471257e-10;      // statC (1.602176634e-19 C * c/10)
inline constexpr double hbar = 1.054571817e-27;            // erg s
inline constexpr double k_boltzmann = 1.380649e-16;        // erg/K

inline constexpr double erg_per_ev = 1.602176634e-12;
inline constexpr double erg_per_mev = 1.602176634e-15;

inline constexpr double fine_structure() {
    return e_charge * e_charge / (hbar * c_light);
}

} // namespace cgs
} // namespace popa
