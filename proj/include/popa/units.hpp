#pragma once

#include <string_view>

namespace popa {

// Boundary unit conversions. Internal units are Gaussian CGS:
// angular frequency rad/s, energy erg, intensity erg s^-1 cm^-2, angle rad,
// length cm, temperature K, rate 1/s.
enum class Unit {
    wavelength_um,   // "um": vacuum wavelength -> angular frequency
    thz,             // "THz": nu -> omega = 2 pi 1e12 nu
    mev,             // "meV" -> erg
    ev,              // "eV" -> erg
    gw_per_cm2,      // "GW/cm2" -> erg s^-1 cm^-2
    degree,          // "deg" -> rad
    kelvin,          // "K"
    centimeter,      // "cm"
    per_second,      // "1/s"
};

// Throws config_error on an unknown tag.
Unit parse_unit(std::string_view tag);

// Convert a user-facing value to internal CGS. Throws config_error on a
// non-positive wavelength.
double to_internal(double value, Unit unit);

// Inverse of to_internal; round-trips to 1e-12 relative.
double from_internal(double value, Unit unit);

} // namespace popa
