// Eigenmode solving: exact transcendental pairs, localized references,
// quadratic approximations, avoided-crossing parameter extraction (closed
// form and least squares), optimal displacement, slab and waveguide
// variants, and displacement sweeps with continuation.
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "cavitylz/constants.hpp"
#include "cavitylz/errors.hpp"
#include "cavitylz/mode_solver.hpp"
#include "cavitylz/model.hpp"

using namespace cavitylz::mode_solver;
using cavitylz::DomainError;
using cavitylz::FitError;
using cavitylz::hbar;
using cavitylz::model::CavityGeometry;
using cavitylz::model::DeltaMirror;
using cavitylz::model::SlabMirror;
using cavitylz::speed_of_light;

namespace {

constexpr double pi = std::numbers::pi_v<double>;

// reference crossing: unit-length cavity, alpha/L = 0.01, n = 128
constexpr int ref_n = 128;
constexpr double ref_alpha = 0.01;
const CavityGeometry ref_geom{1.0, 0.0};

}  // namespace

TEST_SUITE("mode_solver") {

// ──────────────────────────────────────────────────────────────────────────
// residuals
// ──────────────────────────────────────────────────────────────────────────

TEST_CASE("residual derivative matches a central finite difference") {
  const double k = 804.5;
  const double h = 1e-6;
  const double fd = (delta_mirror_residual(k + h, 1.0, 2e-4, 0.01) -
                     delta_mirror_residual(k - h, 1.0, 2e-4, 0.01)) /
                    (2.0 * h);
  const double an = delta_mirror_residual_derivative(k, 1.0, 2e-4, 0.01);
  CHECK(an == doctest::Approx(fd).epsilon(1e-7));
}

TEST_CASE("branch names") {
  CHECK(std::string(branch_name(Branch::even)) == "even");
  CHECK(std::string(branch_name(Branch::odd)) == "odd");
  CHECK(std::string(branch_name(Branch::localized_left)) ==
        "localized-left");
  CHECK(std::string(branch_name(Branch::localized_right)) ==
        "localized-right");
}

// ──────────────────────────────────────────────────────────────────────────
// symmetric cavity: exact pair and closed-form crossing parameters
//
// At delta_L = 0 the odd mode has a node on the mirror, so k_odd = 2 pi n/L
// exactly; the even mode is pushed up by the mirror.  The closed-form half
// gap is Delta = (hbar c / L) n pi / (1 + n^2 pi^2 alpha / L), about 2%
// above the transcendental splitting at alpha/L = 0.01, n = 128.
// ──────────────────────────────────────────────────────────────────────────

TEST_CASE("symmetric pair: odd root exact, even root and gap frozen") {
  const auto pair = solve_global_pair(ref_geom, DeltaMirror{ref_alpha}, ref_n);
  CHECK(pair.index == ref_n);
  CHECK(pair.k_odd == doctest::Approx(2.0 * pi * ref_n).epsilon(1e-13));
  CHECK(pair.k_even == doctest::Approx(804.734906836864).epsilon(1e-11));
  CHECK(pair.k_even - pair.k_odd ==
        doctest::Approx(4.871875178770e-01).epsilon(1e-7));
  CHECK(std::abs(pair.residual_even) <= 1e-12);
  CHECK(std::abs(pair.residual_odd) <= 1e-12);
  // even-branch identity: gap * L = 2 atan(2 / (alpha k_even))
  CHECK(pair.k_even - pair.k_odd ==
        doctest::Approx(2.0 * std::atan(2.0 / (ref_alpha * pair.k_even)))
            .epsilon(1e-6));
}

TEST_CASE("closed-form crossing parameters of the reference crossing") {
  const auto p = lz_fit_parameters(ref_n, 1.0, ref_alpha);
  const double hc = hbar * speed_of_light;
  // full analytic splitting 2 Delta in wavenumber units
  CHECK(2.0 * p.gap / hc == doctest::Approx(0.4970518126530).epsilon(1e-10));
  CHECK(p.curvature / (hc * hc) ==
        doctest::Approx(6.464146412431e5).epsilon(1e-10));
  CHECK(p.omega_av ==
        doctest::Approx(2.0 * pi * ref_n * speed_of_light + p.gap / hbar)
            .epsilon(1e-13));
  CHECK(std::isnan(p.sweep_rate));  // no sweep defined yet

  // the analytic splitting overshoots the transcendental one by ~1.985%
  const auto pair = solve_global_pair(ref_geom, DeltaMirror{ref_alpha}, ref_n);
  const double analytic = 2.0 * p.gap / hc;
  const double rel = (analytic - (pair.k_even - pair.k_odd)) / analytic;
  CHECK(rel == doctest::Approx(1.985e-2).epsilon(5e-3));
  CHECK(std::abs(rel) < 0.02);
}

TEST_CASE("SI scaling: 100 um cavity gap near 7.45e11 rad/s") {
  const auto p = lz_fit_parameters(ref_n, 100e-6, 1e-6);
  CHECK(p.gap / hbar == doctest::Approx(7.450619e11).epsilon(1e-6));
}

TEST_CASE("sweep rates: exact identity and large-n shortcut") {
  const auto p = lz_fit_parameters(ref_n, 1e-4, 1e-6);
  const double v = 1.6;
  // theta = d(2E)/dt = 4 sqrt(gamma) v for delta_L = 2 v t
  CHECK(sweep_rate_from_speed(p.curvature, v) ==
        doctest::Approx(4.0 * std::sqrt(p.curvature) * v).epsilon(1e-14));
  const double approx = approx_sweep_rate(ref_n, 1e-4, v);
  CHECK(approx == doctest::Approx(8.0 * pi * hbar * speed_of_light * ref_n *
                                  v / 1e-8)
                      .epsilon(1e-13));
  // shortcut agrees with the exact rate to sqrt(gamma~)/(2 pi n) ~ 3e-4
  const double exact = sweep_rate_from_speed(p.curvature, v);
  CHECK(std::abs(approx - exact) / exact < 1e-3);
  CHECK_THROWS_AS((void)sweep_rate_from_speed(0.0, 1.0), DomainError);
}

// ──────────────────────────────────────────────────────────────────────────
// least-squares extraction from sampled spectra
//
// Sampling the exact pair on +-2 w (w = Delta / sqrt(gamma), the
// displacement half-width of the avoided crossing) and fitting
// s^2 = (Delta/hbar c)^2 + gamma/(hbar c)^2 delta_L^2 with
// s = (k_even - k_odd)/2 recovers the gap to within 2% of the closed form.
// ──────────────────────────────────────────────────────────────────────────

TEST_CASE("fit on the +-2w window recovers the crossing parameters") {
  const auto analytic = lz_fit_parameters(ref_n, 1.0, ref_alpha);
  const double hc = hbar * speed_of_light;
  const double w = analytic.gap / std::sqrt(analytic.curvature);
  CHECK(w == doctest::Approx(3.091121e-4).epsilon(1e-6));

  std::vector<SpectrumSample> samples;
  for (int i = 0; i <= 10; ++i) {
    const double dl = -2.0 * w + 4.0 * w * i / 10.0;
    const auto pair =
        solve_global_pair(CavityGeometry{1.0, dl}, DeltaMirror{ref_alpha},
                          ref_n);
    samples.push_back({dl, pair.k_even, pair.k_odd});
  }
  const auto fit = fit_lz_from_spectrum(samples);
  CHECK(fit.gap / hc == doctest::Approx(2.436131391894e-1).epsilon(1e-9));
  CHECK(fit.curvature / (hc * hc) ==
        doctest::Approx(6.337647607963e5).epsilon(1e-9));
  const double rel = std::abs(fit.gap - analytic.gap) / analytic.gap;
  CHECK(rel == doctest::Approx(1.977e-2).epsilon(5e-3));
  CHECK(rel < 0.02);
  // omega_av is the mean crossing frequency of the samples
  CHECK(fit.omega_av ==
        doctest::Approx(speed_of_light * 804.49).epsilon(1e-4));
}

TEST_CASE("degenerate sample sets are rejected") {
  const auto pair = solve_global_pair(ref_geom, DeltaMirror{ref_alpha}, ref_n);
  std::vector<SpectrumSample> few = {{0.0, pair.k_even, pair.k_odd}};
  CHECK_THROWS_AS((void)fit_lz_from_spectrum(few), FitError);

  std::vector<SpectrumSample> flat(5, SpectrumSample{0.0, pair.k_even,
                                                     pair.k_odd});
  CHECK_THROWS_AS((void)fit_lz_from_spectrum(flat), FitError);

  std::vector<SpectrumSample> same(5, SpectrumSample{1e-4, 804.3, 804.2});
  CHECK_THROWS_AS((void)fit_lz_from_spectrum(same), FitError);
}

// ──────────────────────────────────────────────────────────────────────────
// displaced cavities
// ──────────────────────────────────────────────────────────────────────────

TEST_CASE("displaced pair at delta_L = 2e-4 L") {
  const auto pair = solve_global_pair(CavityGeometry{1.0, 2e-4},
                                      DeltaMirror{ref_alpha}, ref_n);
  CHECK(pair.k_odd == doctest::Approx(804.200319188215).epsilon(1e-11));
  CHECK(pair.k_even == doctest::Approx(804.782371259393).epsilon(1e-11));
  CHECK(std::abs(pair.residual_even) <= 1e-12);
  CHECK(std::abs(pair.residual_odd) <= 1e-12);
}

TEST_CASE("strong mirrors pin the branches onto the localized references") {
  const CavityGeometry geom{1.0, 3e-4};
  const auto [k_left, k_right] = localized_wavenumbers(geom, ref_n);
  CHECK(k_left == doctest::Approx(2.0 * pi * ref_n / (1.0 + 3e-4))
                      .epsilon(1e-14));
  CHECK(k_right == doctest::Approx(2.0 * pi * ref_n / (1.0 - 3e-4))
                       .epsilon(1e-14));
  CHECK(k_left < k_right);  // longer left half, lower wavenumber

  // deviations from the decoupled references fall like 1/alpha
  const double expected_odd[] = {2.474e-3, 2.486e-4, 2.487e-6};
  const double expected_even[] = {2.499e-3, 2.488e-4, 2.487e-6};
  const double alphas[] = {1.0, 10.0, 1000.0};
  double prev_odd = 1e300;
  double prev_even = 1e300;
  for (int i = 0; i < 3; ++i) {
    CAPTURE(alphas[i]);
    const auto pair = solve_global_pair(geom, DeltaMirror{alphas[i]}, ref_n);
    const double dev_odd = std::abs(pair.k_odd - k_left);
    const double dev_even = std::abs(pair.k_even - k_right);
    CHECK(dev_odd == doctest::Approx(expected_odd[i]).epsilon(2e-3));
    CHECK(dev_even == doctest::Approx(expected_even[i]).epsilon(2e-3));
    CHECK(dev_odd < prev_odd);
    CHECK(dev_even < prev_even);
    prev_odd = dev_odd;
    prev_even = dev_even;
  }
}

TEST_CASE("alpha/L = 0.3 pairs across the crossing region") {
  const double alpha = 0.3;
  const double dls[] = {0.0, 0.6e-4, 1e-4, 4e-4, 1.95084e-3};
  const double expected_odd[] = {804.247719318987, 804.207050114045,
                                 804.175166443031, 803.934334757118,
                                 802.690104401902};
  const double expected_even[] = {804.264297237482, 804.304972233008,
                                  804.336866198393, 804.577939158621,
                                  805.828033712640};
  for (int i = 0; i < 5; ++i) {
    CAPTURE(dls[i]);
    const auto pair = solve_global_pair(CavityGeometry{1.0, dls[i]},
                                        DeltaMirror{alpha}, ref_n);
    CHECK(pair.k_odd == doctest::Approx(expected_odd[i]).epsilon(1e-11));
    CHECK(pair.k_even == doctest::Approx(expected_even[i]).epsilon(1e-11));
  }

  const auto p = lz_fit_parameters(ref_n, 1.0, alpha);
  CHECK(p.gap / (hbar * speed_of_light) ==
        doctest::Approx(8.2891490814e-3).epsilon(1e-9));
  const auto p_si = lz_fit_parameters(ref_n, 1e-4, 0.3e-4);
  CHECK(p_si.gap / hbar == doctest::Approx(2.485024e10).epsilon(1e-6));
}

TEST_CASE("near-degenerate fallback for an essentially opaque mirror") {
  const auto pair = solve_global_pair(ref_geom, DeltaMirror{1e6}, ref_n);
  CHECK(pair.k_even - pair.k_odd == doctest::Approx(4.974e-9).epsilon(1e-3));
  CHECK(pair.k_even > pair.k_odd);
}

TEST_CASE("quadratic approximation tracks the exact pair") {
  // at delta_L = 0 the approximate odd root is exact
  const auto [ke0, ko0] =
      approx_wavenumbers_quadratic(ref_n, 1.0, ref_alpha, 0.0);
  CHECK(ko0 == doctest::Approx(2.0 * pi * ref_n).epsilon(1e-15));
  const auto exact0 = solve_global_pair(ref_geom, DeltaMirror{ref_alpha},
                                        ref_n);
  CHECK(std::abs(ke0 - exact0.k_even) / exact0.k_even < 1e-4);

  const auto [ke, ko] =
      approx_wavenumbers_quadratic(ref_n, 1.0, ref_alpha, 2e-4);
  const auto exact = solve_global_pair(CavityGeometry{1.0, 2e-4},
                                       DeltaMirror{ref_alpha}, ref_n);
  CHECK(std::abs(ke - exact.k_even) / exact.k_even < 1e-4);
  CHECK(std::abs(ko - exact.k_odd) / exact.k_odd < 1e-4);
}

// ──────────────────────────────────────────────────────────────────────────
// optimal displacement
// ──────────────────────────────────────────────────────────────────────────

TEST_CASE("optimal displacement of the alpha/L = 0.3 crossing") {
  const auto opt = optimal_displacement(ref_n, 1.0, 0.3, Parity::even);
  CHECK(opt.k_star == doctest::Approx(805.8280293821).epsilon(1e-10));
  CHECK(std::abs(opt.k_star - 805.85) < 0.1);
  CHECK(opt.delta_L_star == doctest::Approx(1.95083463e-3).epsilon(1e-7));
  CHECK(std::abs(opt.delta_L_star_expanded - opt.delta_L_star) /
            opt.delta_L_star <
        1e-6);
  // (k*, delta_L*) satisfies the mode condition
  CHECK(std::abs(delta_mirror_residual(opt.k_star, 1.0, opt.delta_L_star,
                                       0.3)) < 1e-9);

  const auto odd = optimal_displacement(ref_n, 1.0, 0.3, Parity::odd);
  CHECK(odd.k_star == doctest::Approx(802.6864739611).epsilon(1e-10));
  CHECK(odd.k_star < opt.k_star);
}

TEST_CASE("optimal displacement guards its arguments") {
  CHECK_THROWS_AS((void)optimal_displacement(0, 1.0, 0.3), DomainError);
  CHECK_THROWS_AS((void)optimal_displacement(ref_n, -1.0, 0.3), DomainError);
  CHECK_THROWS_AS((void)optimal_displacement(ref_n, 1.0, 0.0), DomainError);
  // a weak mirror is not a violation: the displacement just shrinks with it
  const auto weak = optimal_displacement(1, 1.0, 1e-6);
  CHECK(weak.delta_L_star > 0.0);
  CHECK(weak.delta_L_star < 1e-5);
}

// ──────────────────────────────────────────────────────────────────────────
// finite slab mirror
//
// A slab of half width M and index n_r acts between its internal resonances
// like a delta mirror of k-dependent strength proportional to
// sin(2 M k n_r); a negative sine flips the sign of the strength and with
// it the parity ordering of the pair.
// ──────────────────────────────────────────────────────────────────────────

TEST_CASE("slab pair with inverted parity ordering") {
  const CavityGeometry geom{1.002668, 0.0};
  const SlabMirror slab{0.001334, 7.9987817663};
  const auto res = solve_finite_mirror_pair(geom, slab, ref_n);
  CHECK_FALSE(res.near_resonance);
  CHECK(res.window_roots.size() == 2);
  CHECK(res.pair.k_even == doctest::Approx(804.0269697525).epsilon(1e-9));
  CHECK(res.pair.k_odd == doctest::Approx(804.5249890949).epsilon(1e-9));
  CHECK(res.pair.k_even < res.pair.k_odd);  // inverted ordering
  CHECK(std::abs(res.pair.k_odd - res.pair.k_even) ==
        doctest::Approx(4.98019342e-01).epsilon(1e-7));

  // the vanishing parity factor names each root
  CHECK(std::abs(slab_parity_factor_even(res.pair.k_even, geom, slab)) <
        1e-9);
  CHECK(std::abs(slab_parity_factor_odd(res.pair.k_odd, geom, slab)) < 1e-9);

  const double splits[] = {5.90152042e-01, 9.35148080e-01};
  const double dls[] = {2e-4, 5e-4};
  for (int i = 0; i < 2; ++i) {
    const auto shifted = solve_finite_mirror_pair(
        CavityGeometry{1.002668, dls[i]}, slab, ref_n);
    CHECK_FALSE(shifted.near_resonance);
    CHECK(std::abs(shifted.pair.k_odd - shifted.pair.k_even) ==
          doctest::Approx(splits[i]).epsilon(1e-7));
  }
}

TEST_CASE("near a slab resonance the window holds a pi-spaced ladder") {
  const CavityGeometry geom{1.001001, 0.0};
  const SlabMirror slab{0.0005005, std::sqrt(10.0)};

  const auto res = solve_finite_mirror_pair(geom, slab, 158);
  CHECK(res.near_resonance);
  // the transparent mirror restores the full-length cavity, so the crossing
  // window holds three roots spaced by ~pi/L instead of an isolated pair
  const double ladder[] = {989.630075, 992.743002, 995.850994};
  REQUIRE(res.window_roots.size() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(res.window_roots[i] == doctest::Approx(ladder[i]).epsilon(1e-8));
  }
  for (int i = 1; i < 3; ++i) {
    CHECK(res.window_roots[i] - res.window_roots[i - 1] ==
          doctest::Approx(pi / 1.001001).epsilon(2e-2));
  }
  CHECK(res.pair.k_even == doctest::Approx(992.7430016163).epsilon(1e-11));
  CHECK(res.pair.k_odd == doctest::Approx(995.8509939209).epsilon(1e-11));

  // away from the resonance the isolated pair comes back
  const auto low = solve_finite_mirror_pair(geom, slab, 25);
  CHECK_FALSE(low.near_resonance);
  const double lo = std::min(low.pair.k_even, low.pair.k_odd);
  const double hi = std::max(low.pair.k_even, low.pair.k_odd);
  CHECK(lo == doctest::Approx(156.919587).epsilon(1e-8));
  CHECK(hi == doctest::Approx(158.856873).epsilon(1e-8));
}

TEST_CASE("slab solver rejects invalid mirrors") {
  const CavityGeometry geom{1.0, 0.0};
  CHECK_THROWS_AS(
      (void)solve_finite_mirror_pair(geom, SlabMirror{0.0, 2.0}, 10),
      DomainError);
  CHECK_THROWS_AS(
      (void)solve_finite_mirror_pair(geom, SlabMirror{1e-3, 0.5}, 10),
      DomainError);
}

// ──────────────────────────────────────────────────────────────────────────
// waveguide mapping
// ──────────────────────────────────────────────────────────────────────────

TEST_CASE("asymmetric waveguide maps onto the delta-mirror cavity") {
  const double n0 = 1.5, eta = 0.001, alpha = 0.01;
  const auto pair = solve_waveguide_pair(1.0, n0, eta, alpha, ref_n);
  CHECK(pair.k_even == doctest::Approx(536.986491562069).epsilon(1e-11));
  CHECK(pair.k_odd == doctest::Approx(536.023723902678).epsilon(1e-11));

  // same transcendental problem after L -> n0 L, delta_L -> eta L,
  // alpha -> alpha / n0
  const auto direct = solve_global_pair(CavityGeometry{n0, eta},
                                        DeltaMirror{alpha / n0}, ref_n);
  CHECK(pair.k_even == doctest::Approx(direct.k_even).epsilon(1e-13));
  CHECK(pair.k_odd == doctest::Approx(direct.k_odd).epsilon(1e-13));

  CHECK(std::abs(waveguide_residual(pair.k_even, 1.0, n0, eta, alpha)) <
        1e-10);
  CHECK(std::abs(waveguide_residual(pair.k_odd, 1.0, n0, eta, alpha)) <
        1e-10);
}

TEST_CASE("index offset for a complete transfer span") {
  // eta = lambda / (2 L): the asymmetry sweeps across both transfer extrema
  const double eta = complete_transfer_index_offset(780e-9, 100e-6);
  CHECK(eta == doctest::Approx(3.9e-3).epsilon(1e-12));
  CHECK(std::abs(eta - 0.004) / 0.004 < 0.05);
  CHECK_THROWS_AS((void)complete_transfer_index_offset(0.0, 1.0),
                  DomainError);
}

// ──────────────────────────────────────────────────────────────────────────
// displacement sweeps
// ──────────────────────────────────────────────────────────────────────────

TEST_CASE("sweep emits sorted rows with localized references") {
  SweepRequest req;
  req.total_length = 1.0;
  req.mirror = DeltaMirror{ref_alpha};
  req.delta_L_min = 0.0;
  req.delta_L_max = 1e-3;
  req.steps = 5;
  req.n_min = 127;
  req.n_max = 129;
  req.include_localized = true;

  const auto table = sweep_spectrum(req);
  CHECK(table.rows.size() == 5u * 3u * 4u);

  for (std::size_t i = 1; i < table.rows.size(); ++i) {
    const auto& a = table.rows[i - 1];
    const auto& b = table.rows[i];
    const bool sorted =
        a.delta_L < b.delta_L ||
        (a.delta_L == b.delta_L &&
         (a.n < b.n || (a.n == b.n && static_cast<int>(a.branch) <
                                          static_cast<int>(b.branch))));
    CHECK(sorted);
  }

  for (const auto& row : table.rows) {
    if (row.branch == Branch::localized_left) {
      CHECK(row.k == doctest::Approx(2.0 * pi * row.n / (1.0 + row.delta_L))
                         .epsilon(1e-14));
    } else if (row.branch == Branch::localized_right) {
      CHECK(row.k == doctest::Approx(2.0 * pi * row.n / (1.0 - row.delta_L))
                         .epsilon(1e-14));
    }
  }

  // delta-mirror pairs never invert
  for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
    const auto& e = table.rows[i];
    const auto& o = table.rows[i + 1];
    if (e.branch == Branch::even && o.branch == Branch::odd && e.n == o.n &&
        e.delta_L == o.delta_L) {
      CHECK(e.k >= o.k);
    }
  }

  // worker count must not change a single bit of the output
  SweepRequest parallel = req;
  parallel.jobs = 3;
  const auto table3 = sweep_spectrum(parallel);
  REQUIRE(table3.rows.size() == table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    CHECK(table3.rows[i].k == table.rows[i].k);
    CHECK(table3.rows[i].delta_L == table.rows[i].delta_L);
    CHECK(table3.rows[i].n == table.rows[i].n);
    CHECK(table3.rows[i].branch == table.rows[i].branch);
  }
}

TEST_CASE("continuation follows both branches away from the crossing") {
  // Stay below k delta_L = pi: past that point the branches run into the
  // next node of the crossing net and turn back toward each other.
  SweepRequest req;
  req.total_length = 1.0;
  req.mirror = DeltaMirror{ref_alpha};
  req.delta_L_min = 0.0;
  req.delta_L_max = 0.0036;
  req.steps = 7;
  req.n_min = ref_n;
  req.n_max = ref_n;
  req.include_localized = false;

  const auto table = sweep_spectrum(req);
  CHECK(table.rows.size() == 14);
  std::vector<double> even_k, odd_k;
  for (const auto& row : table.rows) {
    if (row.branch == Branch::even) even_k.push_back(row.k);
    if (row.branch == Branch::odd) odd_k.push_back(row.k);
  }
  REQUIRE(even_k.size() == 7);
  REQUIRE(odd_k.size() == 7);
  // the odd branch descends onto the left-localized line, the even branch
  // climbs onto the right-localized line
  for (std::size_t i = 1; i < 7; ++i) {
    CHECK(odd_k[i] < odd_k[i - 1]);
    CHECK(even_k[i] > even_k[i - 1]);
  }
  // by the window edge each branch sits close to its localized line
  const double k_left = 2.0 * pi * ref_n / (1.0 + 0.0036);
  const double k_right = 2.0 * pi * ref_n / (1.0 - 0.0036);
  CHECK(std::abs(odd_k.back() - k_left) < 0.6);
  CHECK(std::abs(even_k.back() - k_right) < 0.6);
}

TEST_CASE("solver guards") {
  CHECK_THROWS_AS(
      (void)solve_global_pair(ref_geom, DeltaMirror{0.0}, ref_n),
      DomainError);
  CHECK_THROWS_AS(
      (void)solve_global_pair(CavityGeometry{1.0, 2.0}, DeltaMirror{0.01},
                              ref_n),
      DomainError);
  CHECK_THROWS_AS(
      (void)solve_global_pair(ref_geom, DeltaMirror{0.01}, 0), DomainError);
  CHECK_THROWS_AS(
      (void)solve_global_pair(ref_geom, DeltaMirror{0.01}, ref_n, 0.0),
      DomainError);
  CHECK_THROWS_AS((void)localized_wavenumbers(CavityGeometry{0.0, 0.0}, 1),
                  DomainError);
}

}  // TEST_SUITE
