#include "popa/chi2_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <gsl/gsl_integration.h>

#include "popa/constants.hpp"
#include "popa/errors.hpp"

namespace popa {

namespace {

using cd = std::complex<double>;
using std::numbers::pi;

struct KahanC {
    cd sum{0.0, 0.0};
    cd carry{0.0, 0.0};
    void add(cd v) {
        const cd y = v - carry;
        const cd t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

// zero-temperature occupation of band s at radius k
inline double occ(int s, double k, double kF, int band_sign) {
    if (band_sign > 0)
        return s > 0 ? (k < kF ? 1.0 : 0.0) : 1.0;
    return s > 0 ? 0.0 : (k > kF ? 1.0 : 0.0);
}

inline cd phase_of(double x, double y) {
    const double n = std::hypot(x, y);
    if (n < 1e-300)
        return cd(1.0, 0.0);
    return cd(x / n, y / n);
}

// radius along direction u where |r u + s| = kF
void fermi_radii(double ux, double uy, double sx, double sy, double kF,
                 std::vector<double>& out) {
    const double us = ux * sx + uy * sy;
    const double disc = us * us + kF * kF - (sx * sx + sy * sy);
    if (disc < 0.0)
        return;
    const double root = std::sqrt(disc);
    if (-us + root > 0.0)
        out.push_back(-us + root);
    if (-us - root > 0.0)
        out.push_back(-us - root);
}

// sign-change scan plus bisection for resonance rings
template <class F>
void find_rings(F&& h, double r_hi, std::vector<double>& out) {
    const int n = 48;
    double r_prev = 0.0;
    double h_prev = h(0.0);
    for (int i = 1; i <= n; ++i) {
        const double r = r_hi * double(i) / n;
        const double hv = h(r);
        if ((h_prev < 0.0) != (hv < 0.0)) {
            double a = r_prev, b = r, fa = h_prev;
            for (int it = 0; it < 100 && (b - a) > 1e-13 * r_hi; ++it) {
                const double m = 0.5 * (a + b);
                const double fm = h(m);
                if ((fa < 0.0) == (fm < 0.0)) {
                    a = m;
                    fa = fm;
                } else {
                    b = m;
                }
            }
            out.push_back(0.5 * (a + b));
        }
        r_prev = r;
        h_prev = hv;
    }
}

// radial panel edges for one angular direction
void build_edges(double ux, double uy, Vec2 q1, Vec2 q2, double w1v, double w2v,
                 double w3v, const MaterialParams& mat, const KGridSpec& grid,
                 std::vector<double>& edges) {
    const double kF = mat.k_fermi();
    const double v = mat.fermi_velocity;
    const double r_hi = grid.k_max * kF;

    edges.clear();
    edges.push_back(0.0);
    edges.push_back(r_hi);

    // occupation steps: |k| = kF, |k + q1| = kF, |k - q2| = kF
    std::vector<double> steps;
    steps.push_back(kF);
    fermi_radii(ux, uy, q1.x, q1.y, kF, steps);
    fermi_radii(ux, uy, -q2.x, -q2.y, kF, steps);
    for (double s : steps)
        if (s > 0.0 && s < r_hi)
            edges.push_back(s);

    auto K1 = [&](double r) { return std::hypot(r * ux + q1.x, r * uy + q1.y); };
    auto K2 = [&](double r) { return std::hypot(r * ux - q2.x, r * uy - q2.y); };

    std::vector<double> rings;
    const double aw1 = std::abs(w1v), aw2 = std::abs(w2v), aw3 = std::abs(w3v);
    // interband rings of the three denominators
    find_rings([&](double r) { return v * (K1(r) + r) - aw1; }, r_hi, rings);
    find_rings([&](double r) { return v * (r + K2(r)) - aw2; }, r_hi, rings);
    find_rings([&](double r) { return v * (K1(r) + K2(r)) - aw3; }, r_hi, rings);
    // intraband rings exist only when the frequency is below the wave-number scale
    const double qscale = v * (std::hypot(q1.x, q1.y) + std::hypot(q2.x, q2.y));
    if (aw1 <= 1.5 * qscale) {
        find_rings([&](double r) { return v * (K1(r) - r) - aw1; }, r_hi, rings);
        find_rings([&](double r) { return v * (K1(r) - r) + aw1; }, r_hi, rings);
    }
    if (aw2 <= 1.5 * qscale) {
        find_rings([&](double r) { return v * (r - K2(r)) - aw2; }, r_hi, rings);
        find_rings([&](double r) { return v * (r - K2(r)) + aw2; }, r_hi, rings);
    }
    if (aw3 <= 1.5 * qscale) {
        find_rings([&](double r) { return v * (K1(r) - K2(r)) - aw3; }, r_hi, rings);
        find_rings([&](double r) { return v * (K1(r) - K2(r)) + aw3; }, r_hi, rings);
    }

    // geometric grading into each ring with the innermost panel edge on it
    const double d0 = 0.5 * grid.eta / v;
    for (double r : rings) {
        if (r <= 0.0 || r >= r_hi)
            continue;
        edges.push_back(r);
        const double band = grid.refine_width * std::max(r, kF);
        for (double d = d0; d < band; d *= 3.0) {
            if (r + d < r_hi)
                edges.push_back(r + d);
            if (r - d > 0.0)
                edges.push_back(r - d);
        }
        if (r + band < r_hi)
            edges.push_back(r + band);
        if (r - band > 0.0)
            edges.push_back(r - band);
    }

    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [&](double a, double b) { return b - a < 1e-14 * kF; }),
                edges.end());

    // fill wide gaps so smooth regions are still resolved
    const double scale = 64.0 / double(grid.n_radial);
    std::vector<double> filled;
    filled.reserve(edges.size() * 2);
    filled.push_back(edges.front());
    for (size_t i = 1; i < edges.size(); ++i) {
        const double a = edges[i - 1], b = edges[i];
        const double mid = 0.5 * (a + b);
        const double max_w = (mid < 2.0 * kF ? 0.10 * kF : 0.25 * mid) * scale;
        const int parts = std::max(1, int(std::ceil((b - a) / max_w)));
        for (int p = 1; p < parts; ++p)
            filled.push_back(a + (b - a) * double(p) / parts);
        filled.push_back(b);
    }
    edges.swap(filled);
}

// one half of the symmetrized current integral, slots in printed order
std::array<cd, 2> half_integral(const Polarization& e1, const Polarization& e2,
                                double w1v, double w2v, Vec2 q1, Vec2 q2,
                                const MaterialParams& mat, const KGridSpec& grid,
                                gsl_integration_glfixed_table* tbl) {
    const double kF = mat.k_fermi();
    const double v = mat.fermi_velocity;
    const double eta = grid.eta;
    const double w3v = w1v + w2v;
    const int nphi = grid.n_angular;
    const size_t ngl = tbl->n;

    const cd e1m = e1.ex - cd(0.0, 1.0) * e1.ey;
    const cd e1p = e1.ex + cd(0.0, 1.0) * e1.ey;
    const cd e2m = e2.ex - cd(0.0, 1.0) * e2.ey;
    const cd e2p = e2.ex + cd(0.0, 1.0) * e2.ey;

    KahanC acc_x, acc_y;
    std::vector<double> edges;
    edges.reserve(512);

    for (int j = 0; j < nphi; ++j) {
        const double phi = 2.0 * pi * (double(j) + 0.5) / nphi;
        const double ux = std::cos(phi), uy = std::sin(phi);
        build_edges(ux, uy, q1, q2, w1v, w2v, w3v, mat, grid, edges);

        cd ang_x(0.0, 0.0), ang_y(0.0, 0.0);
        for (size_t p = 1; p < edges.size(); ++p) {
            for (size_t i = 0; i < ngl; ++i) {
                double r = 0.0, wr = 0.0;
                gsl_integration_glfixed_point(edges[p - 1], edges[p], i, &r, &wr, tbl);

                const double kx = r * ux, ky = r * uy;
                const double K1x = kx + q1.x, K1y = ky + q1.y;
                const double K2x = kx - q2.x, K2y = ky - q2.y;
                const double K1 = std::hypot(K1x, K1y);
                const double K2 = std::hypot(K2x, K2y);

                const cd ph_k(ux, uy);
                const cd ph_1 = phase_of(K1x, K1y);
                const cd ph_2 = phase_of(K2x, K2y);

                const double f_k[2] = {occ(-1, r, kF, mat.band_sign),
                                       occ(+1, r, kF, mat.band_sign)};
                const double f_1[2] = {occ(-1, K1, kF, mat.band_sign),
                                       occ(+1, K1, kF, mat.band_sign)};
                const double f_2[2] = {occ(-1, K2, kF, mat.band_sign),
                                       occ(+1, K2, kF, mat.band_sign)};

                for (int sm = -1; sm <= 1; sm += 2)
                    for (int sn = -1; sn <= 1; sn += 2)
                        for (int sl = -1; sl <= 1; sl += 2) {
                            const double df2 = f_2[(sn + 1) / 2] - f_k[(sl + 1) / 2];
                            const double df1 = f_k[(sl + 1) / 2] - f_1[(sm + 1) / 2];
                            if (df2 == 0.0 && df1 == 0.0)
                                continue;
                            cd bracket(0.0, 0.0);
                            if (df2 != 0.0)
                                bracket += df2 / cd(w2v - v * (sl * r - sn * K2), eta);
                            if (df1 != 0.0)
                                bracket -= df1 / cd(w1v - v * (sm * K1 - sl * r), eta);
                            const cd D0(w3v - v * (sm * K1 - sn * K2), eta);

                            const cd B1 = e1m * double(sm) * ph_k +
                                          e1p * double(sl) * std::conj(ph_1);
                            const cd B2 = e2m * double(sl) * ph_2 +
                                          e2p * double(sn) * std::conj(ph_k);
                            const cd Vx = double(sm) * std::conj(ph_2) + double(sn) * ph_1;
                            const cd Vy =
                                cd(0.0, 1.0) *
                                (double(sm) * std::conj(ph_2) - double(sn) * ph_1);

                            const cd common = (wr * r) * bracket / D0 * B1 * B2;
                            ang_x += common * Vx;
                            ang_y += common * Vy;
                        }
            }
        }
        const double wphi = 2.0 * pi / nphi;
        acc_x.add(wphi * ang_x);
        acc_y.add(wphi * ang_y);
    }
    return {acc_x.sum, acc_y.sum};
}

std::array<cd, 2> evaluate(const Polarization& eta1, const Polarization& eta2,
                           double omega1, double omega2, Vec2 q1, Vec2 q2,
                           const MaterialParams& mat, const KGridSpec& grid) {
    gsl_integration_glfixed_table* tbl = gsl_integration_glfixed_table_alloc(8);
    const auto a = half_integral(eta1, eta2, omega1, omega2, q1, q2, mat, grid, tbl);
    const auto b = half_integral(eta2, eta1, omega2, omega1, q2, q1, mat, grid, tbl);
    gsl_integration_glfixed_table_free(tbl);

    const double pref = std::pow(cgs::e_charge, 3) * std::pow(mat.fermi_velocity, 3) /
                        (16.0 * pi * pi * cgs::hbar * cgs::hbar * omega1 * omega2) *
                        (double(mat.degeneracy) / 4.0) * double(mat.n_layers);
    return {pref * (a[0] + b[0]), pref * (a[1] + b[1])};
}

} // namespace

void Polarization::validate() const {
    const double n2 = std::norm(ex) + std::norm(ey);
    if (std::abs(n2 - 1.0) > 1e-9)
        throw config_error("polarization vector must have unit norm");
}

void KGridSpec::validate() const {
    if (n_radial < 64 || n_angular < 64)
        throw config_error("grid sizes must be at least 64");
    if (!(k_max > 1.0))
        throw config_error("radial cutoff must exceed k_F");
    if (!(eta > 0.0))
        throw config_error("numerical broadening must be positive");
    if (!(refine_width > 0.0) || !(refine_width < 1.0))
        throw config_error("refinement width must lie in (0, 1)");
}

std::array<std::complex<double>, 2>
sigma2_numeric(const Polarization& eta1, const Polarization& eta2, double omega1,
               double omega2, Vec2 q1, Vec2 q2, const MaterialParams& mat,
               const KGridSpec& grid, double check_tolerance) {
    mat.validate();
    grid.validate();
    eta1.validate();
    eta2.validate();
    if (omega1 == 0.0 || omega2 == 0.0 || omega1 + omega2 == 0.0)
        throw singular_input_error("zero frequency argument in sigma2_numeric");

    const auto coarse = evaluate(eta1, eta2, omega1, omega2, q1, q2, mat, grid);
    if (!(check_tolerance > 0.0))
        return coarse;

    KGridSpec fine = grid;
    fine.n_radial *= 2;
    fine.n_angular *= 2;
    const auto refined = evaluate(eta1, eta2, omega1, omega2, q1, q2, mat, fine);
    const double scale = std::max(std::abs(refined[0]), std::abs(refined[1]));
    const double delta =
        std::max(std::abs(refined[0] - coarse[0]), std::abs(refined[1] - coarse[1]));
    if (delta > check_tolerance * scale) {
        const bool use_x = std::abs(refined[0]) >= std::abs(refined[1]);
        throw convergence_failure("grid doubling moved the result by " +
                                      std::to_string(delta / scale),
                                  use_x ? coarse[0] : coarse[1],
                                  use_x ? refined[0] : refined[1]);
    }
    return refined;
}

std::vector<ConvergenceRow>
convergence_study(const Polarization& eta1, const Polarization& eta2, double omega1,
                  double omega2, Vec2 q1, Vec2 q2, const MaterialParams& mat,
                  const std::vector<KGridSpec>& grids) {
    if (grids.size() < 2)
        throw config_error("convergence_study needs at least two grids");
    std::vector<ConvergenceRow> rows;
    rows.reserve(grids.size());
    for (const KGridSpec& g : grids) {
        const auto val = sigma2_numeric(eta1, eta2, omega1, omega2, q1, q2, mat, g);
        ConvergenceRow row{g, val[0], 0.0};
        if (!rows.empty())
            row.delta = std::abs(row.value - rows.back().value) / std::abs(row.value);
        rows.push_back(row);
    }
    return rows;
}

} // namespace popa
