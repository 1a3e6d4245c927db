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

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ffw/polynomial.hpp"

namespace ffw {

enum class SamplingMode {
  kDirectGaussian,  ///< draw (<alpha_1,x>, ..., <alpha_n,x>) as i.i.d. N(0,1)
  kPathPwz,         ///< simulate a Brownian path and form Riemann-Stieltjes sums
};

std::string to_string(SamplingMode mode);
/// "direct-gaussian" or "path-pwz". Throws DomainError otherwise.
SamplingMode parse_sampling_mode(std::string_view text);

struct WienerMCConfig {
  std::uint64_t samples = 100000;
  std::uint32_t grid = 1024;
  std::uint64_t seed = 0;
  std::uint32_t workers = 1;
  SamplingMode mode = SamplingMode::kDirectGaussian;
  double horizon = 1.0;

  /// samples >= 100, workers >= 1, horizon > 0, grid >= 2 in path mode.
  void validate() const;
};

/// {"samples":int,"grid":int,"seed":int,"workers":int,"mode":"direct-gaussian"|"path-pwz"}
/// plus an optional "horizon" (T, default 1).
nlohmann::json to_json(const WienerMCConfig& cfg);
/// Missing keys keep their defaults. Throws DomainError on bad values.
WienerMCConfig mc_config_from_json(const nlohmann::json& j, WienerMCConfig defaults = {});

struct MCEstimate {
  ComplexValue mean;
  double std_error = 0.0;  ///< sample standard deviation / sqrt(samples)
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

nlohmann::json to_json(const MCEstimate& estimate);

/// alpha_j(t) = sqrt(2/T) cos((j - 1/2) pi t / T), j = 1..count; orthonormal
/// in L2[0,T] and of bounded variation.
class OrthonormalSystem {
 public:
  /// Throws DomainError for horizon <= 0 or count == 0.
  OrthonormalSystem(double horizon, std::size_t count);

  double horizon() const noexcept { return horizon_; }
  std::size_t count() const noexcept { return count_; }
  /// 0-based j.
  double alpha(std::size_t j, double t) const;

 private:
  double horizon_;
  std::size_t count_;
};

/// Path sampled at t_i = i T / M, i = 0..M, with values[0] = 0.
struct BrownianPath {
  std::vector<double> times;
  std::vector<double> values;
};

/// Independent N(0, T/M) increments, fully determined by (cfg.seed,
/// stream_index). Requires mode == kPathPwz and grid >= 1.
BrownianPath sample_path(const WienerMCConfig& cfg, std::uint64_t stream_index);

/// Left-endpoint Riemann-Stieltjes sum sum_i alpha(t_i) (x(t_{i+1}) - x(t_i)).
double pwz_integral(const std::function<double(double)>& alpha, const BrownianPath& path);
double pwz_integral(const OrthonormalSystem& system, std::size_t j, const BrownianPath& path);

/// n i.i.d. standard normals determined by (cfg.seed, stream_index).
/// Requires mode == kDirectGaussian.
std::vector<double> direct_gaussian_sample(std::size_t n, const WienerMCConfig& cfg,
                                           std::uint64_t stream_index);

using CylinderIntegrand = std::function<double(std::span<const double>)>;

/// Mean of f(<alpha_1,x>, ..., <alpha_n,x>) over cfg.samples Wiener draws.
/// Sample i always uses stream i; workers take contiguous index blocks and
/// their partial sums are merged in worker order. Throws SamplingError on a
/// non-finite value.
MCEstimate estimate_wiener_integral(const CylinderIntegrand& f, std::size_t n,
                                    const WienerMCConfig& cfg);

/// Mean of F(lambda^{-1/2} x + y) for real lambda > 0, where v holds
/// (<alpha_1,y>, ..., <alpha_n,y>). Throws DomainError for lambda <= 0.
MCEstimate estimate_t_lambda(const MonomialFunctional& f, double lambda, std::span<const double> v,
                             const WienerMCConfig& cfg);

/// max_{j,k} |<alpha_j, alpha_k>_M - delta_jk| with trapezoidal sums on the
/// uniform M-interval grid. Throws DomainError for grid < 2.
double gram_check(const OrthonormalSystem& system, std::uint32_t grid);

}  // namespace ffw
