#include "popa/linear_response.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "popa/constants.hpp"
#include "popa/errors.hpp"

namespace popa {

namespace {

using cd = std::complex<double>;
using std::numbers::pi;

// Transverse decay constant, principal branch with Re p >= 0.
cd p_decay(cd omega, double q, double eps) {
    cd p = std::sqrt(cd(q * q, 0.0) - eps * omega * omega / (cgs::c_light * cgs::c_light));
    if (p.real() < 0.0)
        p = -p;
    return p;
}

// Upper bound of the trial window: stay below both light lines.
double bracket_top(double q, const Geometry& geom) {
    const double eps_max = std::max(geom.eps1(), geom.eps2());
    return 0.99 * cgs::c_light * q / std::sqrt(eps_max);
}

double residual_real(double omega, double q, const Geometry& geom, const MaterialParams& mat) {
    return dispersion_residual(cd(omega, 0.0), q, geom, mat, 0.0).real();
}

// Root of the real dispersion relation at fixed q. Monotone in omega on the
// bracket, so the first scan sign change contains the only root.
double solve_root(double q, const Geometry& geom, const MaterialParams& mat,
                  int scan_points, bool* multiplicity_warning) {
    const double lo = mat.fermi_velocity * q * (1.0 + 1e-6);
    const double hi = bracket_top(q, geom);
    if (!(lo < hi))
        throw no_mode_error("trial window empty at q = " + std::to_string(q));

    const int n = std::max(scan_points, 8);
    double a = 0.0, b = 0.0;
    int sign_changes = 0;
    double w_prev = lo;
    double f_prev = residual_real(lo, q, geom, mat);
    const double ratio = std::pow(hi / lo, 1.0 / n);
    for (int i = 1; i <= n; ++i) {
        const double w = (i == n) ? hi : lo * std::pow(ratio, i);
        const double f = residual_real(w, q, geom, mat);
        if (f_prev <= 0.0 && f > 0.0) {
            if (sign_changes == 0) {
                a = w_prev;
                b = w;
            }
            ++sign_changes;
        }
        w_prev = w;
        f_prev = f;
    }
    if (sign_changes == 0)
        throw no_mode_error("no bound mode bracketed at q = " + std::to_string(q));
    if (multiplicity_warning)
        *multiplicity_warning = sign_changes > 1;

    double fa = residual_real(a, q, geom, mat);
    for (int it = 0; it < 200 && (b - a) > 4.0 * 1e-16 * b; ++it) {
        const double m = 0.5 * (a + b);
        const double fm = residual_real(m, q, geom, mat);
        if ((fa <= 0.0) == (fm <= 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    const double root = 0.5 * (a + b);
    if (root <= mat.fermi_velocity * q * (1.0 + 2e-6))
        throw landau_damped_error("mode frequency at the intraband absorption edge, q = " +
                                  std::to_string(q));
    return root;
}

} // namespace

std::complex<double> chi_s(const MaterialParams& mat, cd omega, double q, double gamma) {
    mat.validate();
    if (!(q > 0.0))
        throw config_error("chi_s requires q > 0");
    if (!(std::abs(omega) > 0.0))
        throw config_error("chi_s requires |omega| > 0");
    const cd wt = omega + cd(0.0, gamma);
    const double b = mat.fermi_velocity * q;
    if (std::abs(wt - b) < 1e-12 * std::max(std::abs(wt), b))
        throw singular_input_error("chi_s evaluated at the v_F q branch point");

    const double pref = 2.0 * cgs::e_charge * cgs::e_charge * mat.fermi_energy /
                        (pi * cgs::hbar * cgs::hbar);
    const cd bracket = 1.0 - wt / (wt + b) * std::sqrt((wt + b) / (wt - b));
    return double(mat.n_layers) * pref / omega * wt / (b * b) * bracket;
}

std::complex<double> dispersion_residual(cd omega, double q, const Geometry& geom,
                                         const MaterialParams& mat, double gamma) {
    if (!(q > 0.0))
        throw config_error("dispersion_residual requires q > 0");
    const cd p1 = p_decay(omega, q, geom.eps1());
    const cd p2 = p_decay(omega, q, geom.eps2());
    return 4.0 * pi * chi_s(mat, omega, q, gamma) + geom.eps1() / p1 + geom.eps2() / p2;
}

double dchi_domega(const MaterialParams& mat, double omega, double q, double rel_step) {
    const double h = rel_step * omega;
    const cd hi = chi_s(mat, cd(omega + h, 0.0), q, 0.0);
    const cd lo = chi_s(mat, cd(omega - h, 0.0), q, 0.0);
    return (hi.real() - lo.real()) / (2.0 * h);
}

double normalization_E_s0_sq(const PlasmonMode& mode, const MaterialParams& mat) {
    const double d = dchi_domega(mat, mode.omega_s, mode.q_s);
    if (!(d > 0.0))
        throw anomalous_dispersion_error("Re d(chi_s)/d(omega) not positive at the mode");
    return cgs::hbar / d;
}

double damping_gamma_s(const PlasmonMode& mode, const MaterialParams& mat,
                       double collision_gamma) {
    const cd chi = chi_s(mat, cd(mode.omega_s, 0.0), mode.q_s, collision_gamma);
    return chi.imag() * mode.E_s0_sq / cgs::hbar;
}

PlasmonMode solve_mode(double q, const Geometry& geom, const MaterialParams& mat,
                       const ModeOptions& opts, bool* multiplicity_warning) {
    mat.validate();
    if (!(q > 0.0))
        throw config_error("solve_mode requires q > 0");

    PlasmonMode mode;
    mode.q_s = q;
    mode.omega_s = solve_root(q, geom, mat, opts.scan_points, multiplicity_warning);

    // residual sanity at the root
    {
        const cd p1 = p_decay(cd(mode.omega_s, 0.0), q, geom.eps1());
        const cd p2 = p_decay(cd(mode.omega_s, 0.0), q, geom.eps2());
        const cd chi = chi_s(mat, cd(mode.omega_s, 0.0), q, 0.0);
        const cd res = 4.0 * pi * chi + geom.eps1() / p1 + geom.eps2() / p2;
        const double scale = std::max({std::abs(4.0 * pi * chi), std::abs(geom.eps1() / p1),
                                       std::abs(geom.eps2() / p2)});
        if (!(std::abs(res) < 1e-9 * scale))
            throw numerical_error("dispersion root residual above tolerance");
        mode.p1 = p1;
        mode.p2 = p2;
        if (!(mode.p1.real() > 0.0) || !(mode.p2.real() > 0.0))
            throw no_mode_error("mode not evanescent on both sides");
    }

    const double hq = 1e-5 * q;
    const double w_plus = solve_root(q + hq, geom, mat, opts.scan_points, nullptr);
    const double w_minus = solve_root(q - hq, geom, mat, opts.scan_points, nullptr);
    mode.v_s = (w_plus - w_minus) / (2.0 * hq);
    if (!(mode.v_s > 0.0) || !(mode.v_s < cgs::c_light))
        throw numerical_error("group velocity outside (0, c)");

    mode.E_s0_sq = normalization_E_s0_sq(mode, mat);
    mode.gamma_s = (opts.collision_gamma > 0.0)
                       ? damping_gamma_s(mode, mat, opts.collision_gamma)
                       : 0.0;
    return mode;
}

PlasmonMode solve_mode_at_omega(double omega, const Geometry& geom, const MaterialParams& mat,
                                const ModeOptions& opts) {
    mat.validate();
    if (!(omega > 0.0))
        throw config_error("solve_mode_at_omega requires omega > 0");

    const double eps_max = std::max(geom.eps1(), geom.eps2());
    const double q_lo = omega * std::sqrt(eps_max) / (0.99 * cgs::c_light) * (1.0 + 1e-9);
    const double q_hi = omega / (mat.fermi_velocity * (1.0 + 1e-5));
    if (!(q_lo < q_hi))
        throw no_mode_error("no admissible wave-number window at this frequency");

    // mode frequency is monotone increasing in q: scan for the sign change of
    // omega_root(q) - omega, then bisect
    const int n = 200;
    const double ratio = std::pow(q_hi / q_lo, 1.0 / n);
    double qa = 0.0, qb = 0.0;
    bool have_prev = false;
    double q_prev = 0.0, f_prev = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double q = (i == n) ? q_hi : q_lo * std::pow(ratio, i);
        double f = 0.0;
        try {
            f = solve_root(q, geom, mat, opts.scan_points, nullptr) - omega;
        } catch (const numerical_error&) {
            have_prev = false;
            continue;
        }
        if (have_prev && f_prev <= 0.0 && f > 0.0) {
            qa = q_prev;
            qb = q;
            break;
        }
        have_prev = true;
        q_prev = q;
        f_prev = f;
    }
    if (qa == 0.0)
        throw no_mode_error("no wave number matches the requested frequency");

    double fa = solve_root(qa, geom, mat, opts.scan_points, nullptr) - omega;
    for (int it = 0; it < 200 && (qb - qa) > 4.0 * 1e-16 * qb; ++it) {
        const double m = 0.5 * (qa + qb);
        const double fm = solve_root(m, geom, mat, opts.scan_points, nullptr) - omega;
        if ((fa <= 0.0) == (fm <= 0.0)) {
            qa = m;
            fa = fm;
        } else {
            qb = m;
        }
    }
    return solve_mode(0.5 * (qa + qb), geom, mat, opts, nullptr);
}

std::array<std::complex<double>, 3> field_profile(double z, const PlasmonMode& mode) {
    const double E0 = std::sqrt(mode.E_s0_sq);
    if (z > 0.0) {
        const cd decay = std::exp(-mode.p1 * z);
        return {E0 * decay, cd(0.0, 0.0), cd(0.0, 1.0) * (mode.q_s / mode.p1) * E0 * decay};
    }
    const cd decay = std::exp(mode.p2 * z);
    return {E0 * decay, cd(0.0, 0.0), -cd(0.0, 1.0) * (mode.q_s / mode.p2) * E0 * decay};
}

} // namespace popa
