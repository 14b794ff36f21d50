#include "popa/chi2_closed.hpp"

#include <cmath>
#include <numbers>

#include "popa/constants.hpp"
#include "popa/errors.hpp"

namespace popa {

namespace {

using cd = std::complex<double>;
using std::numbers::pi;

cd sq(cd z) { return z * z; }

} // namespace

std::complex<double> sigma2_xyy(double omega1, double omega2, double q1, double q2,
                                const MaterialParams& mat, const Broadening& br) {
    mat.validate();
    const double vk = mat.fermi_velocity * mat.k_fermi();
    const double vk2 = vk * vk;
    const cd w1(omega1, br.gamma1);
    const cd w2(omega2, br.gamma2);
    const cd w3(omega1 + omega2, br.gamma3);

    const cd r1 = sq(w1) - 4.0 * vk2;
    const cd r2 = sq(w2) - 4.0 * vk2;
    const cd r3 = sq(w3) - 4.0 * vk2;

    const double wscale = std::max({std::abs(w1), std::abs(w2), std::abs(w3), vk});
    if (std::abs(w1) < 1e-12 * wscale || std::abs(w2) < 1e-12 * wscale ||
        std::abs(w3) < 1e-12 * wscale)
        throw singular_input_error("frequency argument at a zero-frequency pole");
    const double rscale = wscale * wscale + 4.0 * vk2;
    if (std::abs(r1) < 1e-12 * rscale || std::abs(r2) < 1e-12 * rscale ||
        std::abs(r3) < 1e-12 * rscale)
        throw singular_input_error("frequency argument on an interband resonance pole");

    const cd bracket =
        4.0 * vk2 * w1 * w2 * sq(w3) * (q1 * sq(w2) + q2 * sq(w1)) +
        4.0 * vk2 * vk2 *
            (q1 * sq(sq(w2)) - (6.0 * q1 + 4.0 * q2) * w1 * w2 * sq(w2) -
             8.0 * (q1 + q2) * sq(w1) * sq(w2) - (4.0 * q1 + 6.0 * q2) * w1 * sq(w1) * w2 +
             q2 * sq(sq(w1))) -
        16.0 * vk2 * vk2 * vk2 *
            (q1 * w2 * (w2 - 2.0 * w1) + q2 * w1 * (w1 - 2.0 * w2));

    const double pref = double(mat.band_sign) * (double(mat.degeneracy) / 4.0) *
                        double(mat.n_layers) * std::pow(cgs::e_charge, 3) *
                        mat.fermi_velocity * mat.fermi_velocity /
                        (2.0 * pi * cgs::hbar * cgs::hbar);
    return -pref * bracket / (sq(w1) * sq(w2) * w3 * r1 * r2 * r3);
}

std::complex<double> chi2_from_sigma2(std::complex<double> sigma, double omega_sum) {
    if (omega_sum == 0.0)
        throw config_error("chi2_from_sigma2 requires a nonzero mixing frequency");
    return cd(0.0, 1.0) * sigma / omega_sum;
}

std::complex<double> chi2_resonant(double omega_p, double omega_i, double omega_s, double q_p,
                                   const MaterialParams& mat, bool* off_resonance_warning) {
    mat.validate();
    if (!(mat.gamma_pol > 0.0))
        throw config_error("chi2_resonant requires a positive polarization decay rate");
    const double vk = mat.fermi_velocity * mat.k_fermi();
    if (off_resonance_warning)
        *off_resonance_warning = std::abs(omega_p - 2.0 * vk) >= mat.gamma_pol;
    const double pref = (double(mat.degeneracy) / 4.0) * double(mat.n_layers);
    const double value = pref * 3.0 * std::pow(cgs::e_charge, 3) * mat.fermi_velocity *
                         mat.fermi_velocity * q_p /
                         (16.0 * pi * cgs::hbar * cgs::hbar * omega_i * omega_s * omega_s *
                          mat.gamma_pol);
    return cd(value, 0.0);
}

Chi2Component permutation_partner(const Chi2Component& in, Permutation kind) {
    if (kind != Permutation::identity &&
        (in.broadening.gamma1 != 0.0 || in.broadening.gamma2 != 0.0 ||
         in.broadening.gamma3 != 0.0))
        throw config_error("permutation relations hold only without dissipation");

    Chi2Component out = in;
    const double w3 = in.omega1 + in.omega2;
    const double q3 = in.q1 + in.q2;
    switch (kind) {
    case Permutation::identity:
        break;
    case Permutation::output_with_first:
        out.idx_out = in.idx_in1;
        out.idx_in1 = in.idx_out;
        out.omega1 = -w3;
        out.q1 = -q3;
        break;
    case Permutation::output_with_second:
        out.idx_out = in.idx_in2;
        out.idx_in2 = in.idx_out;
        out.omega2 = -w3;
        out.q2 = -q3;
        break;
    case Permutation::swap_inputs:
        out.idx_in1 = in.idx_in2;
        out.idx_in2 = in.idx_in1;
        out.omega1 = in.omega2;
        out.omega2 = in.omega1;
        out.q1 = in.q2;
        out.q2 = in.q1;
        break;
    }
    return out;
}

} // namespace popa
