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

#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "ffw/errors.hpp"
#include "ffw/philox.hpp"

namespace ffw {

namespace {

// Counter domains keep the direct and path streams of one seed disjoint.
constexpr std::uint32_t kDirectDomain = 0;
constexpr std::uint32_t kPathDomain = 1;

double to_open_unit(std::uint32_t hi, std::uint32_t lo) noexcept {
  const std::uint64_t bits = ((static_cast<std::uint64_t>(hi) << 32) | lo) >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

}  // namespace

double NormalStream::next() noexcept {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  const auto r = Philox4x32::apply({block_++, domain_, stream_lo_, stream_hi_}, key_);
  const double u1 = to_open_unit(r[0], r[1]);
  const double u2 = to_open_unit(r[2], r[3]);
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  cached_ = radius * std::sin(angle);
  has_cached_ = true;
  return radius * std::cos(angle);
}

std::string to_string(SamplingMode mode) {
  return mode == SamplingMode::kDirectGaussian ? "direct-gaussian" : "path-pwz";
}

SamplingMode parse_sampling_mode(std::string_view text) {
  if (text == "direct-gaussian") return SamplingMode::kDirectGaussian;
  if (text == "path-pwz") return SamplingMode::kPathPwz;
  throw DomainError("unknown sampling mode '" + std::string(text) +
                    "' (expected direct-gaussian or path-pwz)");
}

void WienerMCConfig::validate() const {
  if (samples < 100) throw DomainError("Monte Carlo needs at least 100 samples");
  if (workers < 1) throw DomainError("workers must be >= 1");
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw DomainError("horizon must be positive");
  if (mode == SamplingMode::kPathPwz && grid < 2) {
    throw DomainError("path-pwz mode needs a grid of at least 2 intervals");
  }
}

nlohmann::json to_json(const WienerMCConfig& cfg) {
  return {{"samples", cfg.samples}, {"grid", cfg.grid},         {"seed", cfg.seed},
          {"workers", cfg.workers}, {"mode", to_string(cfg.mode)}, {"horizon", cfg.horizon}};
}

WienerMCConfig mc_config_from_json(const nlohmann::json& j, WienerMCConfig cfg) {
  try {
    if (!j.is_object()) throw DomainError("Monte Carlo config must be a JSON object");
    auto read_unsigned = [&](const char* name, auto& field) {
      if (!j.contains(name)) return;
      const auto& value = j.at(name);
      if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
        throw DomainError(std::string("Monte Carlo config: '") + name +
                          "' must be a nonnegative integer");
      }
      field = value.get<std::remove_reference_t<decltype(field)>>();
    };
    read_unsigned("samples", cfg.samples);
    read_unsigned("grid", cfg.grid);
    read_unsigned("seed", cfg.seed);
    read_unsigned("workers", cfg.workers);
    if (j.contains("mode")) cfg.mode = parse_sampling_mode(j.at("mode").get<std::string>());
    if (j.contains("horizon")) cfg.horizon = j.at("horizon").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("Monte Carlo config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

nlohmann::json to_json(const MCEstimate& e) {
  return {{"mean_re", e.mean.real()},
          {"mean_im", e.mean.imag()},
          {"std_error", e.std_error},
          {"samples", e.samples},
          {"seed", e.seed}};
}

OrthonormalSystem::OrthonormalSystem(double horizon, std::size_t count)
    : horizon_(horizon), count_(count) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw DomainError("horizon must be positive");
  if (count == 0) throw DomainError("orthonormal system needs at least one function");
}

double OrthonormalSystem::alpha(std::size_t j, double t) const {
  if (j >= count_) throw DomainError("basis index out of range");
  const double frequency = (static_cast<double>(j) + 0.5) * std::numbers::pi / horizon_;
  return std::sqrt(2.0 / horizon_) * std::cos(frequency * t);
}

BrownianPath sample_path(const WienerMCConfig& cfg, std::uint64_t stream_index) {
  if (cfg.mode != SamplingMode::kPathPwz) throw DomainError("sample_path requires path-pwz mode");
  if (cfg.grid < 1) throw DomainError("grid must have at least one interval");
  const std::uint32_t m = cfg.grid;
  const double dt = cfg.horizon / m;
  const double scale = std::sqrt(dt);
  NormalStream normals(cfg.seed, kPathDomain, stream_index);
  BrownianPath path;
  path.times.resize(m + 1);
  path.values.resize(m + 1);
  path.values[0] = 0.0;
  for (std::uint32_t i = 0; i <= m; ++i) path.times[i] = cfg.horizon * i / m;
  for (std::uint32_t i = 0; i < m; ++i) path.values[i + 1] = path.values[i] + scale * normals.next();
  return path;
}

double pwz_integral(const std::function<double(double)>& alpha, const BrownianPath& path) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < path.values.size(); ++i) {
    sum += alpha(path.times[i]) * (path.values[i + 1] - path.values[i]);
  }
  return sum;
}

double pwz_integral(const OrthonormalSystem& system, std::size_t j, const BrownianPath& path) {
  return pwz_integral([&](double t) { return system.alpha(j, t); }, path);
}

std::vector<double> direct_gaussian_sample(std::size_t n, const WienerMCConfig& cfg,
                                           std::uint64_t stream_index) {
  if (cfg.mode != SamplingMode::kDirectGaussian) {
    throw DomainError("direct_gaussian_sample requires direct-gaussian mode");
  }
  NormalStream normals(cfg.seed, kDirectDomain, stream_index);
  std::vector<double> out(n);
  for (auto& z : out) z = normals.next();
  return out;
}

namespace {

// Welford accumulator; partials are merged with Chan's update.
struct Moments {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void push(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(count + o.count);
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.count) / total;
    m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) / total;
    count += o.count;
  }
};

// Fills coords with the cylinder coordinates of sample `index`.
class CoordinateSampler {
 public:
  CoordinateSampler(std::size_t n, const WienerMCConfig& cfg) : n_(n), cfg_(cfg) {
    if (cfg.mode == SamplingMode::kPathPwz) {
      const OrthonormalSystem system(cfg.horizon, n);
      alpha_table_.resize(n * cfg.grid);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::uint32_t i = 0; i < cfg.grid; ++i) {
          alpha_table_[j * cfg.grid + i] = system.alpha(j, cfg.horizon * i / cfg.grid);
        }
      }
    }
  }

  void sample(std::uint64_t index, std::span<double> coords) const {
    if (cfg_.mode == SamplingMode::kDirectGaussian) {
      NormalStream normals(cfg_.seed, kDirectDomain, index);
      for (auto& z : coords) z = normals.next();
      return;
    }
    NormalStream normals(cfg_.seed, kPathDomain, index);
    const double scale = std::sqrt(cfg_.horizon / cfg_.grid);
    std::fill(coords.begin(), coords.end(), 0.0);
    for (std::uint32_t i = 0; i < cfg_.grid; ++i) {
      const double dx = scale * normals.next();
      for (std::size_t j = 0; j < n_; ++j) coords[j] += alpha_table_[j * cfg_.grid + i] * dx;
    }
  }

 private:
  std::size_t n_;
  WienerMCConfig cfg_;
  std::vector<double> alpha_table_;
};

}  // namespace

MCEstimate estimate_wiener_integral(const CylinderIntegrand& f, std::size_t n,
                                    const WienerMCConfig& cfg) {
  cfg.validate();
  if (n == 0) throw DomainError("cylinder dimension must be >= 1");
  const CoordinateSampler sampler(n, cfg);
  const std::uint32_t workers =
      static_cast<std::uint32_t>(std::min<std::uint64_t>(cfg.workers, cfg.samples));
  std::vector<Moments> partial(workers);
  std::vector<std::exception_ptr> errors(workers);

  auto run = [&](std::uint32_t w) {
    try {
      const std::uint64_t begin = cfg.samples * w / workers;
      const std::uint64_t end = cfg.samples * (w + 1) / workers;
      std::vector<double> coords(n);
      for (std::uint64_t index = begin; index < end; ++index) {
        sampler.sample(index, coords);
        const double value = f(coords);
        if (!std::isfinite(value)) {
          throw SamplingError("non-finite integrand value at sample " + std::to_string(index) +
                                  " (seed " + std::to_string(cfg.seed) + ")",
                              index, coords);
        }
        partial[w].push(value);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Moments total;
  for (const auto& p : partial) total.merge(p);
  const double variance = total.count > 1 ? total.m2 / static_cast<double>(total.count - 1) : 0.0;
  return MCEstimate{{total.mean, 0.0},
                    std::sqrt(variance / static_cast<double>(total.count)),
                    total.count,
                    cfg.seed};
}

MCEstimate estimate_t_lambda(const MonomialFunctional& f, double lambda, std::span<const double> v,
                             const WienerMCConfig& cfg) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("lambda must be a positive real number");
  }
  if (v.size() != f.dimension()) throw DomainError("coordinate count mismatch");
  const double scale = 1.0 / std::sqrt(lambda);
  const std::vector<double> shift(v.begin(), v.end());
  return estimate_wiener_integral(
      [&f, scale, &shift](std::span<const double> z) {
        double value = to_double(f.coefficient);
        for (std::size_t j = 0; j < z.size(); ++j) {
          const double u = scale * z[j] + shift[j];
          for (std::uint32_t k = 0; k < f.exponents[j]; ++k) value *= u;
        }
        return value;
      },
      f.dimension(), cfg);
}

double gram_check(const OrthonormalSystem& system, std::uint32_t grid) {
  if (grid < 2) throw DomainError("gram_check needs a grid of at least 2 intervals");
  const double h = system.horizon() / grid;
  const std::size_t n = system.count();
  std::vector<double> values(n * (grid + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::uint32_t i = 0; i <= grid; ++i) {
      values[j * (grid + 1) + i] = system.alpha(j, system.horizon() * i / grid);
    }
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j; k < n; ++k) {
      double sum = 0.0;
      for (std::uint32_t i = 0; i <= grid; ++i) {
        const double w = (i == 0 || i == grid) ? 0.5 : 1.0;
        sum += w * values[j * (grid + 1) + i] * values[k * (grid + 1) + i];
      }
      worst = std::max(worst, std::abs(h * sum - (j == k ? 1.0 : 0.0)));
    }
  }
  return worst;
}

}  // namespace ffw
