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

#include "ffw/series.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "ffw/combinatorics.hpp"
#include "ffw/errors.hpp"
#include "support/oracles.hpp"

namespace ffw {
namespace {

using P = ScaledCylinderPolynomial;

P term(std::vector<std::uint32_t> v, std::uint32_t tau, GaussianRational c) {
  return P::monomial(MultiIndex(std::move(v)), tau, std::move(c));
}

GaussianRational half(int num = 1, int den = 2) { return GaussianRational(ExactRational(num, den)); }

// sum_{l=0}^{L} 1 / (2^l l!), built by repeated division only.
ExactRational exp_half_partial_sum(std::uint32_t terms) {
  ExactRational sum = 0, t = 1;
  for (std::uint32_t l = 0; l <= terms; ++l) {
    sum += t;
    t /= ExactRational(2 * (l + 1));
  }
  return sum;
}

TEST(Spec, Validation) {
  EXPECT_THROW(SmoothFunctionalSpec(0, 1, 1), DomainError);
  EXPECT_THROW(TruncationOrder(0), DomainError);
  const SmoothFunctionalSpec spec(2, 3, 2);
  const std::vector<double> u{0.1, 0.2};
  EXPECT_NEAR(spec.evaluate(u), 3.0 + 2.0 * (std::exp(0.3) - 1.0), 1e-15);
}

TEST(TruncatedMaclaurin, Examples) {
  EXPECT_EQ(truncated_maclaurin({1, 1, 1}, TruncationOrder(2)),
            term({0}, 0, 1) + term({1}, 0, 1) + term({2}, 0, half()));
  EXPECT_EQ(truncated_maclaurin({2, 0, 1}, TruncationOrder(1)), term({1, 0}, 0, 1) + term({0, 1}, 0, 1));
  EXPECT_EQ(truncated_maclaurin({2, 1, 1}, TruncationOrder(2)),
            term({0, 0}, 0, 1) + term({1, 0}, 0, 1) + term({0, 1}, 0, 1) + term({2, 0}, 0, half()) +
                term({1, 1}, 0, 1) + term({0, 2}, 0, half()));
  EXPECT_EQ(pretty_print(truncated_maclaurin({1, 1, 1}, TruncationOrder(2)), TauStyle::kTau, "u"),
            "1/2*u1^2 + u1 + 1");
}

TEST(TruncatedMaclaurin, TermCount) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t r = 1; r <= 6; ++r) {
      const auto h = truncated_maclaurin({n, 1, 1}, TruncationOrder(r));
      std::size_t expected = 1;
      for (std::uint32_t k = 1; k <= r; ++k) {
        expected += combinatorics::binomial(static_cast<std::uint32_t>(n) + k - 1, k).convert_to<std::size_t>();
      }
      EXPECT_EQ(h.size(), expected) << "n=" << n << " r=" << r;
    }
  }
}

TEST(WienerIntegralTruncation, Examples) {
  EXPECT_EQ(wiener_integral_truncation({1, 1, 1}, TruncationOrder(2)), ExactRational(3, 2));
  EXPECT_EQ(wiener_integral_truncation({3, 7, 5}, TruncationOrder(1)), ExactRational(7));
  EXPECT_EQ(wiener_integral_truncation({2, 1, 1}, TruncationOrder(2)), ExactRational(2));
  const auto r12 = wiener_integral_truncation({1, 1, 1}, TruncationOrder(12));
  EXPECT_EQ(r12, exp_half_partial_sum(6));
  EXPECT_EQ(r12, ExactRational(75973, 46080));
}

TEST(WienerIntegralTruncation, MonotoneInOrder) {
  ExactRational previous = 0;
  for (std::uint32_t r = 1; r <= 20; ++r) {
    const auto value = wiener_integral_truncation({1, 1, 1}, TruncationOrder(r));
    EXPECT_GE(value, previous) << r;
    EXPECT_EQ(value, exp_half_partial_sum(r / 2));
    previous = value;
  }
  EXPECT_LT(std::abs(to_double(previous) - std::exp(0.5)), 1e-10);
}

TEST(WienerIntegralTruncation, MatchesBruteForceExpectation) {
  // E[h_r(Z)] through the brute-force Gaussian average of every monomial.
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t r = 1; r <= 6; ++r) {
      const SmoothFunctionalSpec spec(n, ExactRational(2, 3), ExactRational(-5, 4));
      GaussianRational expected;
      const auto h = truncated_maclaurin(spec, TruncationOrder(r));
      for (const auto& [key, c] : h.terms()) {
        const std::vector<std::uint32_t> k(key.v.begin(), key.v.end());
        const auto avg = testing::brute_force_shift_average(k);
        expected += c * substitute_tau(avg, 1).coefficient({MultiIndex::zeros(n), 0});
      }
      EXPECT_EQ(GaussianRational(wiener_integral_truncation(spec, TruncationOrder(r))), expected);
    }
  }
}

TEST(SeriesFftLiteral, Examples) {
  const auto i = GaussianRational::i();
  const auto r1 = series_fft_literal({2, 7, 1}, TruncationOrder(1), 3);
  EXPECT_EQ(*r1.substituted, P::constant(2, 7));
  const auto r2 = series_fft_literal({1, 1, 1}, TruncationOrder(2), 1);
  EXPECT_EQ(*r2.substituted, term({0}, 0, 1) + term({2}, 0, half()) + term({0}, 0, i * half()));
  for (std::uint32_t r : {1u, 2u, 5u}) {
    EXPECT_TRUE(series_fft_literal({1, 0, 0}, TruncationOrder(r), 2).substituted->is_zero());
  }
  EXPECT_THROW(series_fft_literal({1, 1, 1}, TruncationOrder(2), 0), DomainError);
}

TEST(SeriesFftLiteral, OddOrderAddsNothing) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t r = 3; r <= 9; r += 2) {
      const SmoothFunctionalSpec spec(n, 1, 1);
      EXPECT_EQ(series_fft_literal(spec, TruncationOrder(r), 1).poly,
                series_fft_literal(spec, TruncationOrder(r - 1), 1).poly);
    }
  }
}

TEST(SeriesFftFull, Examples) {
  const auto i = GaussianRational::i();
  EXPECT_EQ(*series_fft_full({1, 1, 1}, TruncationOrder(1), 4).substituted,
            term({0}, 0, 1) + term({1}, 0, 1));
  EXPECT_EQ(*series_fft_full({1, 1, 1}, TruncationOrder(2), 1).substituted,
            term({0}, 0, 1) + term({1}, 0, 1) + term({2}, 0, half()) + term({0}, 0, i * half()));
  EXPECT_EQ(*series_fft_full({3, 5, 0}, TruncationOrder(4), 2).substituted, P::constant(3, 5));
  EXPECT_THROW(series_fft_full({1, 1, 1}, TruncationOrder(2), 0), DomainError);
}

TEST(SeriesFft, ConstantTermAtLambdaOneIsWienerIntegral) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t r = 1; r <= 8; ++r) {
      const SmoothFunctionalSpec spec(n, ExactRational(1, 3), ExactRational(3, 2));
      const auto full = series_fft_full(spec, TruncationOrder(r), 1);
      const auto at_lambda_one = substitute_tau(full.poly, 1);
      EXPECT_EQ(at_lambda_one.coefficient({MultiIndex::zeros(n), 0}),
                GaussianRational(wiener_integral_truncation(spec, TruncationOrder(r))));
    }
  }
}

TEST(SeriesFft, LiteralAndFullAgreeOnAllEvenMonomials) {
  auto all_even = [](const TermKey& key) { return key.v.all_even(); };
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t r = 1; r <= 8; ++r) {
      const SmoothFunctionalSpec spec(n, ExactRational(-2), ExactRational(5, 7));
      const auto literal = series_fft_literal(spec, TruncationOrder(r), ExactRational(3, 2));
      const auto full = series_fft_full(spec, TruncationOrder(r), ExactRational(3, 2));
      EXPECT_EQ(literal.poly, literal.poly.filter(all_even));
      EXPECT_EQ(full.poly.filter(all_even), literal.poly) << "n=" << n << " r=" << r;
      EXPECT_EQ(full.substituted->filter(all_even), *literal.substituted);
    }
  }
}

TEST(SeriesFft, OneDimensionalEvenDegreeAgreement) {
  auto even_degree = [](const TermKey& key) { return key.v.total_degree() % 2 == 0; };
  for (std::uint32_t r = 1; r <= 8; ++r) {
    const auto literal = series_fft_literal({1, 1, 1}, TruncationOrder(r), 1);
    const auto full = series_fft_full({1, 1, 1}, TruncationOrder(r), 1);
    EXPECT_EQ(full.substituted->filter(even_degree), *literal.substituted);
  }
}

TEST(LrDiagnostic, ZeroWhenHIsTheTruncation) {
  const SmoothFunctionalSpec spec(2, 1, 1);
  const TruncationOrder order(4);
  WienerMCConfig cfg;
  cfg.samples = 1000;
  const auto est = l_r_diagnostic(
      spec, [&](std::span<const double> u) { return evaluate_truncation(spec, order, u); }, order,
      1.5, cfg);
  EXPECT_EQ(est.mean.real(), 0.0);
  EXPECT_EQ(est.std_error, 0.0);
}

TEST(LrDiagnostic, ExponentialTailBound) {
  const SmoothFunctionalSpec spec(1, 1, 1);
  WienerMCConfig cfg;
  cfg.samples = 100000;
  cfg.seed = 5;
  const auto h = [&](std::span<const double> u) { return spec.evaluate(u); };
  const auto est = l_r_diagnostic(spec, h, TruncationOrder(12), 1.0, cfg);
  EXPECT_LE(est.mean.real(), 1e-3);
  // sum_{k>12} E|Z|^k / k! ~ 8.0e-6
  EXPECT_LE(est.mean.real(), 8.0e-6 + 3 * est.std_error);
}

TEST(LrDiagnostic, DecreasesWithOrder) {
  const SmoothFunctionalSpec spec(1, 1, 1);
  WienerMCConfig cfg;
  cfg.samples = 100000;
  cfg.seed = 6;
  const auto h = [&](std::span<const double> u) { return spec.evaluate(u); };
  const auto r2 = l_r_diagnostic(spec, h, TruncationOrder(2), 1.0, cfg);
  const auto r6 = l_r_diagnostic(spec, h, TruncationOrder(6), 1.0, cfg);
  const double separation = std::hypot(r2.std_error, r6.std_error);
  EXPECT_GT(r2.mean.real() - r6.mean.real(), 3.0 * separation);
}

TEST(LrDiagnostic, NonFiniteEvaluatorIsSamplingError) {
  const SmoothFunctionalSpec spec(1, 1, 1);
  WienerMCConfig cfg;
  cfg.samples = 200;
  try {
    l_r_diagnostic(
        spec, [](std::span<const double> u) { return u[0] > 1.0 ? std::nan("") : 0.0; },
        TruncationOrder(2), 1.0, cfg);
    FAIL() << "expected SamplingError";
  } catch (const SamplingError& e) {
    ASSERT_EQ(e.coordinates().size(), 1u);
    EXPECT_GT(e.coordinates()[0], 1.0);
  }
  EXPECT_THROW(l_r_diagnostic(spec, [](std::span<const double>) { return 0.0; }, TruncationOrder(2),
                              0.0, cfg),
               DomainError);
}

}  // namespace
}  // namespace ffw
