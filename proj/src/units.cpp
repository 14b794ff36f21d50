#include "popa/units.hpp"

#include <numbers>
#include <string>

#include "popa/constants.hpp"
#include "popa/errors.hpp"

namespace popa {

Unit parse_unit(std::string_view tag) {
    if (tag == "um") return Unit::wavelength_um;
    if (tag == "THz") return Unit::thz;
    if (tag == "meV") return Unit::mev;
    if (tag == "eV") return Unit::ev;
    if (tag == "GW/cm2") return Unit::gw_per_cm2;
    if (tag == "deg") return Unit::degree;
    if (tag == "K") return Unit::kelvin;
    if (tag == "cm") return Unit::centimeter;
    if (tag == "1/s") return Unit::per_second;
    throw config_error("unknown unit tag: " + std::string(tag));
}

double to_internal(double value, Unit unit) {
    using std::numbers::pi;
    switch (unit) {
    case Unit::wavelength_um:
        if (value <= 0.0)
            throw config_error("wavelength must be positive");
        return 2.0 * pi * cgs::c_light / (value * 1e-4);
    case Unit::thz:
        return 2.0 * pi * 1e12 * value;
    case Unit::mev:
        return value * cgs::erg_per_mev;
    case Unit::ev:
        return value * cgs::erg_per_ev;
    case Unit::gw_per_cm2:
        return value * 1e16; // 1 GW = 1e16 erg/s
    case Unit::degree:
        return value * pi / 180.0;
    case Unit::kelvin:
    case Unit::centimeter:
    case Unit::per_second:
        return value;
    }
    throw config_error("unhandled unit tag");
}

double from_internal(double value, Unit unit) {
    using std::numbers::pi;
    switch (unit) {
    case Unit::wavelength_um:
        if (value <= 0.0)
            throw config_error("angular frequency must be positive");
        return 2.0 * pi * cgs::c_light / value * 1e4;
    case Unit::thz:
        return value / (2.0 * pi * 1e12);
    case Unit::mev:
        return value / cgs::erg_per_mev;
    case Unit::ev:
        return value / cgs::erg_per_ev;
    case Unit::gw_per_cm2:
        return value / 1e16;
    case Unit::degree:
        return value * 180.0 / pi;
    case Unit::kelvin:
    case Unit::centimeter:
    case Unit::per_second:
        return value;
    }
    throw config_error("unhandled unit tag");
}

} // namespace popa
