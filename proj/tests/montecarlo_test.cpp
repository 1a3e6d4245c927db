// Copyright 2026 The ffwiener Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ffw/montecarlo.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ffw/errors.hpp"
#include "ffw/philox.hpp"
#include "ffw/transform.hpp"

namespace ffw {
namespace {

WienerMCConfig direct(std::uint64_t samples, std::uint64_t seed) {
  WienerMCConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

WienerMCConfig path(std::uint64_t samples, std::uint32_t grid, std::uint64_t seed) {
  WienerMCConfig cfg;
  cfg.samples = samples;
  cfg.grid = grid;
  cfg.seed = seed;
  cfg.mode = SamplingMode::kPathPwz;
  return cfg;
}

bool within(const MCEstimate& est, double target, double sigmas = 3.0) {
  return std::abs(est.mean.real() - target) <= sigmas * est.std_error;
}

// Reference vectors published with the Random123 library.
TEST(Philox, KnownAnswers) {
  using C = Philox4x32::Counter;
  EXPECT_EQ(Philox4x32::apply({0, 0, 0, 0}, {0, 0}), (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(Philox4x32::apply({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
            (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(Philox4x32::apply({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
  static_assert(Philox4x32::apply({0, 0, 0, 0}, {0, 0})[0] == 0x6627e8d5);
}

TEST(NormalStreamTest, DistinctStreamsDiffer) {
  NormalStream a(7, 0, 0), b(7, 0, 1), c(7, 1, 0), d(8, 0, 0);
  const double x = a.next();
  EXPECT_NE(x, b.next());
  EXPECT_NE(x, c.next());
  EXPECT_NE(x, d.next());
  NormalStream again(7, 0, 0);
  EXPECT_EQ(x, again.next());
}

TEST(Config, Validation) {
  WienerMCConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.samples = 99;
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg = path(100, 1, 0);
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg = direct(100, 0);
  cfg.workers = 0;
  EXPECT_THROW(cfg.validate(), DomainError);
  EXPECT_THROW(parse_sampling_mode("sobol"), DomainError);
  EXPECT_EQ(parse_sampling_mode("path-pwz"), SamplingMode::kPathPwz);
}

TEST(Config, JsonRoundTrip) {
  auto cfg = path(5000, 64, 42);
  cfg.workers = 3;
  const auto j = to_json(cfg);
  EXPECT_EQ(j.at("mode"), "path-pwz");
  const auto back = mc_config_from_json(j);
  EXPECT_EQ(back.samples, 5000u);
  EXPECT_EQ(back.grid, 64u);
  EXPECT_EQ(back.seed, 42u);
  EXPECT_EQ(back.workers, 3u);
  EXPECT_EQ(back.mode, SamplingMode::kPathPwz);
  const auto partial = mc_config_from_json(nlohmann::json::parse(R"({"seed":9})"));
  EXPECT_EQ(partial.seed, 9u);
  EXPECT_EQ(partial.samples, WienerMCConfig{}.samples);
  EXPECT_THROW(mc_config_from_json(nlohmann::json::parse(R"({"samples":-3})")), DomainError);
  EXPECT_THROW(mc_config_from_json(nlohmann::json::parse(R"({"mode":"x"})")), DomainError);
  EXPECT_EQ(mc_config_from_json(nlohmann::json::parse(R"({"seed":18446744073709551615})")).seed,
            18446744073709551615ull);
}

TEST(SamplePath, SingleIncrementAndDeterminism) {
  const auto cfg = path(100, 1, 3);
  const auto p = sample_path(cfg, 0);
  ASSERT_EQ(p.values.size(), 2u);
  EXPECT_EQ(p.values[0], 0.0);
  EXPECT_EQ(p.times.back(), 1.0);
  EXPECT_TRUE(std::isfinite(p.values[1]));

  const auto cfg2 = path(100, 256, 11);
  EXPECT_EQ(sample_path(cfg2, 17).values, sample_path(cfg2, 17).values);
  EXPECT_NE(sample_path(cfg2, 17).values, sample_path(cfg2, 18).values);
  EXPECT_THROW(sample_path(direct(100, 0), 0), DomainError);
}

TEST(SamplePath, EndpointVariance) {
  for (double horizon : {1.0, 2.5}) {
    auto cfg = path(100000, 1024, 21);
    cfg.horizon = horizon;
    double sum = 0, sum_sq = 0;
    for (std::uint64_t i = 0; i < cfg.samples; ++i) {
      const double x = sample_path(cfg, i).values.back();
      sum += x;
      sum_sq += x * x;
    }
    const double n = static_cast<double>(cfg.samples);
    const double var = (sum_sq - sum * sum / n) / (n - 1);
    EXPECT_NEAR(var / horizon, 1.0, 0.02) << horizon;
  }
}

TEST(PwzIntegral, Examples) {
  auto cfg = path(100, 64, 5);
  cfg.horizon = 2.0;
  const auto p = sample_path(cfg, 1);
  const double constant = pwz_integral([](double) { return 1.0 / std::sqrt(2.0); }, p);
  EXPECT_NEAR(constant, p.values.back() / std::sqrt(2.0), 1e-12);

  BrownianPath zero{p.times, std::vector<double>(p.values.size(), 0.0)};
  const OrthonormalSystem system(2.0, 3);
  for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(pwz_integral(system, j, zero), 0.0);
}

TEST(PwzIntegral, UnitVariance) {
  const auto cfg = path(100000, 4096, 8);
  const OrthonormalSystem system(1.0, 1);
  double sum = 0, sum_sq = 0;
  for (std::uint64_t i = 0; i < cfg.samples; ++i) {
    const double x = pwz_integral(system, 0, sample_path(cfg, i));
    sum += x;
    sum_sq += x * x;
  }
  const double n = static_cast<double>(cfg.samples);
  EXPECT_NEAR((sum_sq - sum * sum / n) / (n - 1), 1.0, 0.02);
}

TEST(OrthonormalSystemTest, Definition) {
  const OrthonormalSystem s(2.0, 4);
  EXPECT_DOUBLE_EQ(s.alpha(0, 0.0), 1.0);
  EXPECT_NEAR(s.alpha(1, 0.5), std::cos(1.5 * std::numbers::pi * 0.25), 1e-15);
  EXPECT_THROW(OrthonormalSystem(0.0, 1), DomainError);
  EXPECT_THROW(OrthonormalSystem(1.0, 0), DomainError);
}

TEST(DirectGaussian, MeanAndCorrelation) {
  const auto cfg = direct(100, 77);
  double sum = 0;
  const std::uint64_t draws = 1000000;
  for (std::uint64_t i = 0; i < draws; ++i) sum += direct_gaussian_sample(1, cfg, i)[0];
  EXPECT_LE(std::abs(sum / draws), 3.0 / std::sqrt(static_cast<double>(draws)));

  const std::uint64_t pairs = 200000;
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::uint64_t i = 0; i < pairs; ++i) {
    const auto z = direct_gaussian_sample(2, cfg, i);
    sx += z[0];
    sy += z[1];
    sxx += z[0] * z[0];
    syy += z[1] * z[1];
    sxy += z[0] * z[1];
  }
  const double n = static_cast<double>(pairs);
  const double cov = sxy / n - sx * sy / (n * n);
  const double corr = cov / std::sqrt((sxx / n - sx * sx / (n * n)) * (syy / n - sy * sy / (n * n)));
  EXPECT_LE(std::abs(corr), 3.0 / std::sqrt(n));

  EXPECT_EQ(direct_gaussian_sample(5, cfg, 12), direct_gaussian_sample(5, cfg, 12));
  EXPECT_THROW(direct_gaussian_sample(1, path(100, 4, 0), 0), DomainError);
}

TEST(EstimateWienerIntegral, Examples) {
  const auto big = direct(1000000, 1);
  const auto z1sq_z2q = estimate_wiener_integral(
      [](std::span<const double> z) { return z[0] * z[0] * std::pow(z[1], 4); }, 2, big);
  EXPECT_TRUE(within(z1sq_z2q, 3.0)) << z1sq_z2q.mean << " +- " << z1sq_z2q.std_error;
  const auto z6 = estimate_wiener_integral([](std::span<const double> z) { return std::pow(z[0], 6); }, 1, big);
  EXPECT_TRUE(within(z6, 15.0)) << z6.mean << " +- " << z6.std_error;

  const auto c = estimate_wiener_integral([](std::span<const double>) { return 2.5; }, 3, direct(1000, 2));
  EXPECT_EQ(c.mean.real(), 2.5);
  EXPECT_EQ(c.std_error, 0.0);
  EXPECT_EQ(c.samples, 1000u);
  EXPECT_EQ(c.seed, 2u);
}

TEST(EstimateWienerIntegral, NonFiniteIsSamplingError) {
  try {
    estimate_wiener_integral([](std::span<const double> z) { return z[0] > 2.0 ? INFINITY : 0.0; }, 1,
                             direct(10000, 3));
    FAIL() << "expected SamplingError";
  } catch (const SamplingError& e) {
    ASSERT_EQ(e.coordinates().size(), 1u);
    EXPECT_GT(e.coordinates()[0], 2.0);
    EXPECT_LT(e.sample_index(), 10000u);
  }
}

TEST(EstimateTLambda, Examples) {
  const MonomialFunctional f1(MultiIndex{2});
  const MonomialFunctional f5(MultiIndex{2, 4});
  const auto cfg = direct(400000, 4);
  EXPECT_TRUE(within(estimate_t_lambda(f1, 1.0, std::vector<double>{0.0}, cfg), 1.0));
  EXPECT_TRUE(within(estimate_t_lambda(f5, 1.0, std::vector<double>{0.0, 0.0}, cfg), 3.0));

  const std::vector<double> y{1.0, 1.0};
  const auto symbolic = poly_eval(t_lambda_poly(f5), y, 0.5).real();
  const auto est = estimate_t_lambda(f5, 2.0, y, cfg);
  EXPECT_TRUE(within(est, symbolic)) << est.mean << " vs " << symbolic;
  EXPECT_THROW(estimate_t_lambda(f1, 0.0, std::vector<double>{0.0}, cfg), DomainError);
  EXPECT_THROW(estimate_t_lambda(f1, -1.0, std::vector<double>{0.0}, cfg), DomainError);
}

TEST(EstimateTLambda, ScalingLaw) {
  const auto cfg = direct(200000, 9);
  for (std::uint32_t p = 1; p <= 3; ++p) {
    const MonomialFunctional f(MultiIndex{2 * p});
    double dfact = 1;
    for (std::uint32_t s = 1; s <= p; ++s) dfact *= 2 * s - 1;
    for (double lambda : {0.5, 1.0, 2.0}) {
      const auto est = estimate_t_lambda(f, lambda, std::vector<double>{0.0}, cfg);
      EXPECT_TRUE(within(est, std::pow(lambda, -static_cast<double>(p)) * dfact))
          << "p=" << p << " lambda=" << lambda << " got " << est.mean;
    }
  }
}

TEST(ModeEquivalence, EvenMonomials) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint32_t> half(0, 3);
  for (int trial = 0; trial < 4; ++trial) {
    const std::size_t n = 1 + trial % 3;
    std::vector<std::uint32_t> k(n);
    for (auto& e : k) e = 2 * half(rng);
    const MonomialFunctional f{MultiIndex(k)};
    const auto fn = [&](std::span<const double> z) { return f.evaluate(z); };
    const auto d = estimate_wiener_integral(fn, n, direct(20000, 40 + trial));
    const auto p = estimate_wiener_integral(fn, n, path(20000, 4096, 40 + trial));
    const double combined = std::hypot(d.std_error, p.std_error);
    EXPECT_LE(std::abs(d.mean.real() - p.mean.real()), 3.0 * combined + 1e-12)
        << "trial " << trial << ": " << d.mean << " vs " << p.mean;
  }
}

TEST(Parallelism, DeterministicPerWorkerCount) {
  const auto fn = [](std::span<const double> z) { return std::pow(z[0], 4) + z[1]; };
  for (std::uint32_t workers : {1u, 2u, 3u, 8u}) {
    auto cfg = direct(30001, 12);
    cfg.workers = workers;
    const auto a = estimate_wiener_integral(fn, 2, cfg);
    const auto b = estimate_wiener_integral(fn, 2, cfg);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.std_error, b.std_error);
    auto single = cfg;
    single.workers = 1;
    const auto s = estimate_wiener_integral(fn, 2, single);
    // Same draws, only the summation order differs.
    EXPECT_NEAR(a.mean.real(), s.mean.real(), 1e-12 * (1 + std::abs(s.mean.real())));
    EXPECT_NEAR(a.std_error, s.std_error, 1e-12);
  }
}

TEST(GramCheck, Examples) {
  EXPECT_LE(gram_check(OrthonormalSystem(1.0, 1), 4096), 1e-6);
  EXPECT_LE(gram_check(OrthonormalSystem(1.0, 8), 4096), 1e-5);
  EXPECT_LE(gram_check(OrthonormalSystem(3.0, 8), 4096), 1e-5);
  EXPECT_TRUE(std::isfinite(gram_check(OrthonormalSystem(1.0, 1), 2)));
  EXPECT_GT(gram_check(OrthonormalSystem(1.0, 8), 4), 1e-3);
  EXPECT_THROW(gram_check(OrthonormalSystem(1.0, 1), 1), DomainError);
}

TEST(MCEstimateJson, Fields) {
  const auto j = to_json(MCEstimate{ComplexValue(1.5, 0.0), 0.25, 100, 7});
  EXPECT_DOUBLE_EQ(j.at("mean_re").get<double>(), 1.5);
  EXPECT_DOUBLE_EQ(j.at("mean_im").get<double>(), 0.0);
  EXPECT_DOUBLE_EQ(j.at("std_error").get<double>(), 0.25);
  EXPECT_EQ(j.at("samples").get<std::uint64_t>(), 100u);
  EXPECT_EQ(j.at("seed").get<std::uint64_t>(), 7u);
}

}  // namespace
}  // namespace ffw
