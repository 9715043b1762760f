// Mirror transmission models: delta mirror, finite dielectric slab (with
// its thin-slab delta equivalent and internal resonances) and the
// interdielectric delta step, each checked against an independent
// wave-matching computation done inline.
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "cavitylz/errors.hpp"
#include "cavitylz/mirrors.hpp"
#include "cavitylz/model.hpp"

using namespace cavitylz::mirrors;
using cavitylz::DomainError;
using cavitylz::model::DeltaMirror;
using cavitylz::model::InterDielectricDelta;
using cavitylz::model::MirrorModel;
using cavitylz::model::SlabMirror;
using Complex = std::complex<double>;

namespace {
constexpr double pi = std::numbers::pi_v<double>;
constexpr Complex ci{0.0, 1.0};
}  // namespace

TEST_SUITE("mirrors") {

// ──────────────────────────────────────────────────────────────────────────
// delta mirror
// ──────────────────────────────────────────────────────────────────────────

TEST_CASE("delta mirror reflectivity at 780 nm with alpha = 1 um") {
  const double k = 2.0 * pi / 780e-9;
  const auto res = delta_transmission(k, DeltaMirror{1e-6});
  CHECK(res.R == doctest::Approx(0.941936).epsilon(1e-6));
  CHECK(res.T + res.R == 1.0);
  CHECK(std::norm(res.t) == doctest::Approx(res.T).epsilon(1e-14));
  CHECK(std::arg(res.t) == doctest::Approx(std::atan(0.5 * k * 1e-6))
                               .epsilon(1e-12));
  CHECK(res.phase == doctest::Approx(std::atan(0.5 * k * 1e-6))
                         .epsilon(1e-14));
}

TEST_CASE("delta mirror transmissions of the reference crossings") {
  const double k = 2.0 * pi * 128.0 / 1e-4;  // n = 128, L = 100 um
  CHECK(delta_transmission(k, DeltaMirror{0.3e-4}).T ==
        doctest::Approx(6.848843e-05).epsilon(1e-6));
  CHECK(delta_transmission(k, DeltaMirror{1e-6}).T ==
        doctest::Approx(5.823990e-02).epsilon(1e-6));
  CHECK_THROWS_AS((void)delta_transmission(k, DeltaMirror{0.0}), DomainError);
}

// ──────────────────────────────────────────────────────────────────────────
// dielectric slab
//
// Independent check: matching plane waves across the two interfaces gives
// the amplitude transmission t = e^{-2 i M k} / (cos theta - i C sin theta)
// with theta = 2 M k n_r and C = (n_r^2 + 1)/(2 n_r).
// ──────────────────────────────────────────────────────────────────────────

TEST_CASE("slab transmission equals the two-interface wave matching") {
  std::mt19937 rng(128);
  std::uniform_real_distribution<double> half_width(1e-4, 2e-3);
  std::uniform_real_distribution<double> index(1.2, 9.0);
  std::uniform_real_distribution<double> wavenumber(1e2, 1e4);
  double max_dev = 0.0;
  for (int i = 0; i < 200; ++i) {
    const SlabMirror slab{half_width(rng), index(rng)};
    const double k = wavenumber(rng);
    const double theta = 2.0 * slab.half_width * k * slab.refractive_index;
    const double big_c = (slab.refractive_index * slab.refractive_index +
                          1.0) /
                         (2.0 * slab.refractive_index);
    const Complex t_ref =
        std::exp(-2.0 * ci * slab.half_width * k) /
        (std::cos(theta) - ci * big_c * std::sin(theta));

    const auto res = slab_transmission(k, slab);
    max_dev = std::max(max_dev, std::abs(res.t - t_ref));
    CHECK(res.T == doctest::Approx(std::norm(t_ref)).epsilon(1e-12));
    CHECK(res.T + res.R == 1.0);
  }
  CHECK(max_dev < 1e-10);
}

TEST_CASE("transmission fringe minimum of an n_r = 2 slab is 16/25") {
  // quarter-wave condition theta = pi/2 minimizes T at 1/(1 + q^2),
  // q = (n_r^2 - 1)/(2 n_r) = 3/4
  const SlabMirror slab{0.001, 2.0};
  const double k = pi / (4.0 * slab.half_width * slab.refractive_index);
  const auto res = slab_transmission(k, slab);
  CHECK(res.T == doctest::Approx(16.0 / 25.0).epsilon(1e-12));
  CHECK(res.T == doctest::Approx(0.64).epsilon(1e-12));
}

TEST_CASE("internal resonances restore full transmission") {
  const SlabMirror slab{0.0005005, std::sqrt(10.0)};
  const auto res = resonance_wavenumbers(slab, 5000.0);
  REQUIRE(res.size() == 5);
  CHECK(res[0] == doctest::Approx(992.466360).epsilon(1e-8));
  for (std::size_t l = 0; l < res.size(); ++l) {
    CHECK(res[l] == doctest::Approx((l + 1) * res[0]).epsilon(1e-12));
    CHECK(slab_transmission(res[l], slab).T ==
          doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK_THROWS_AS((void)resonance_wavenumbers(slab, 0.0), DomainError);
}

TEST_CASE("slab phase is continuous across internal resonances") {
  const SlabMirror slab{0.001334, 7.9987817663};
  double prev = slab_transmission(100.0, slab).phase;
  for (int i = 1; i <= 10000; ++i) {
    const double k = 100.0 + 900.0 * i / 10000.0;
    const double phase = slab_transmission(k, slab).phase;
    CHECK(std::abs(phase - prev) < 0.05);  // no pi-sized branch jumps
    prev = phase;
  }
}

TEST_CASE("thin-slab delta equivalent and the match residual") {
  const SlabMirror slab{1e-5, 3.0};
  CHECK(thin_slab_equivalent_alpha(slab) ==
        doctest::Approx(2.0 * 1e-5 * 9.0).epsilon(1e-15));

  // in the thin limit the optimal-alpha residual reduces to
  // (2 n_r^2 - 1)/n_r^4 per unit k^2 alpha^2, falling with index contrast
  const double alpha = thin_slab_equivalent_alpha(slab);
  const double k = 10.0;
  const double rel3 = delta_slab_match_residual(k, alpha, slab) /
                      (k * k * alpha * alpha);
  CHECK(rel3 == doctest::Approx(17.0 / 81.0).epsilon(1e-3));

  const SlabMirror dense{1e-5, 8.0};
  const double alpha8 = thin_slab_equivalent_alpha(dense);
  const double rel8 = delta_slab_match_residual(k, alpha8, dense) /
                      (k * k * alpha8 * alpha8);
  CHECK(rel8 == doctest::Approx(127.0 / 4096.0).epsilon(1e-3));
  CHECK(rel8 < rel3);

  CHECK_THROWS_AS((void)slab_transmission(1.0, SlabMirror{0.0, 2.0}),
                  DomainError);
  CHECK_THROWS_AS((void)slab_transmission(1.0, SlabMirror{1e-3, 0.9}),
                  DomainError);
}

// ──────────────────────────────────────────────────────────────────────────
// interdielectric delta step
//
// Independent check: with U = e^{i k n1 x} + r e^{-i k n1 x} on the left
// and U = t e^{i k n2 x} on the right, continuity and the delta-induced
// derivative jump U'(0+) - U'(0-) = -k^2 alpha U(0) give a 2x2 linear
// system for (r, t); energy flux fixes T = (n2/n1) |t|^2.
// ──────────────────────────────────────────────────────────────────────────

TEST_CASE("interdielectric transmission matches the interface matching") {
  std::mt19937 rng(781);
  std::uniform_real_distribution<double> index(1.0, 3.0);
  std::uniform_real_distribution<double> alpha(0.0, 1e-5);
  std::uniform_real_distribution<double> wavenumber(1e5, 1e7);
  double max_t_dev = 0.0;
  double max_flux_dev = 0.0;
  for (int i = 0; i < 200; ++i) {
    const InterDielectricDelta mirror{alpha(rng), index(rng), index(rng)};
    const double k = wavenumber(rng);

    // solve  t - r = 1;  i k n2 t + i k n1 r + k^2 alpha t = i k n1
    const Complex a11 = ci * k * mirror.n2 + k * k * mirror.alpha;
    const Complex a12 = ci * k * mirror.n1;
    const Complex rhs = ci * k * mirror.n1;
    // substitute r = t - 1
    const Complex t_ref = (rhs + a12) / (a11 + a12);
    const Complex r_ref = t_ref - 1.0;

    const auto res = interdielectric_transmission(k, mirror);
    max_t_dev = std::max(max_t_dev, std::abs(res.exact.t - t_ref));
    CHECK(res.exact.R == doctest::Approx(std::norm(r_ref)).epsilon(1e-10));
    max_flux_dev = std::max(
        max_flux_dev, std::abs(res.exact.T + res.exact.R - 1.0));
  }
  CHECK(max_t_dev < 1e-12);
  CHECK(max_flux_dev < 1e-12);
}

TEST_CASE("plain index step reduces to the Fresnel coefficients") {
  const InterDielectricDelta mirror{0.0, 1.5, 1.0};
  const auto res = interdielectric_transmission(1e6, mirror);
  const double n1 = 1.5, n2 = 1.0;
  CHECK(res.exact.T == doctest::Approx(4.0 * n1 * n2 / ((n1 + n2) * (n1 + n2)))
                           .epsilon(1e-14));
  CHECK(res.exact.R ==
        doctest::Approx((n1 - n2) * (n1 - n2) / ((n1 + n2) * (n1 + n2)))
            .epsilon(1e-12));
  CHECK(res.exact.phase == 0.0);
}

TEST_CASE("equal media reduce the step to the plain delta mirror") {
  const double k = 2.0 * pi / 780e-9;
  const InterDielectricDelta step{1e-6, 1.0, 1.0};
  const auto res = interdielectric_transmission(k, step);
  const auto plain = delta_transmission(k, DeltaMirror{1e-6});
  CHECK(res.exact.T == doctest::Approx(plain.T).epsilon(1e-14));
  CHECK(res.T_approx == doctest::Approx(res.exact.T).epsilon(1e-14));
  CHECK(res.exact.phase == doctest::Approx(plain.phase).epsilon(1e-14));
}

TEST_CASE("interdielectric guards") {
  CHECK_THROWS_AS(
      (void)interdielectric_transmission(1.0, InterDielectricDelta{0.0, 0.5,
                                                                   1.0}),
      DomainError);
  CHECK_THROWS_AS(
      (void)interdielectric_transmission(1.0, InterDielectricDelta{-1.0, 1.0,
                                                                    1.0}),
      DomainError);
}

// ──────────────────────────────────────────────────────────────────────────
// variant dispatch
// ──────────────────────────────────────────────────────────────────────────

TEST_CASE("transmission dispatches on the mirror model") {
  const double k = 1e4;
  CHECK(transmission(k, MirrorModel{DeltaMirror{1e-5}}).T ==
        delta_transmission(k, DeltaMirror{1e-5}).T);
  const SlabMirror slab{1e-3, 2.5};
  CHECK(transmission(k, MirrorModel{slab}).T == slab_transmission(k, slab).T);
  const InterDielectricDelta step{1e-5, 1.2, 1.7};
  CHECK(transmission(k, MirrorModel{step}).T ==
        interdielectric_transmission(k, step).exact.T);
}

}  // TEST_SUITE
