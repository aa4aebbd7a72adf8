//
// Copyright 2026 The lipfilter Authors.
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
//

#include "lipfilter/privacy.hpp"

#include <cmath>
#include <string>

#include "lipfilter/errors.hpp"
#include "lipfilter/filter_l0.hpp"

namespace lipfilter {
namespace {

void CheckEps(double eps) {
  if (!(eps > 0) || !std::isfinite(eps)) {
    throw Error(ErrorCode::kInvalidParam, "eps must be positive");
  }
}

}  // namespace

double LaplaceNoise::Uniform() {
  const std::uint64_t bits = rng_() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1p-53;
}

double LaplaceNoise::Sample(double scale) {
  const double u = Uniform() - 0.5;
  const double sign = u < 0 ? -1.0 : 1.0;
  return -scale * sign * std::log1p(-2.0 * std::fabs(u));
}

double LaplaceCdf(double x, double scale) {
  return x < 0 ? 0.5 * std::exp(x / scale) : 1.0 - 0.5 * std::exp(-x / scale);
}

double LaplaceMechanism(const FunctionOracle& f, Vertex x, double eps,
                        double c, LaplaceNoise& noise) {
  CheckEps(eps);
  if (!(c > 0)) throw Error(ErrorCode::kInvalidParam, "c must be positive");
  const Value v = f.Lookup(x);
  if (!v) {
    throw Error(ErrorCode::kPartialFunction, "value at query point is ?");
  }
  return v->ToDouble() + noise.Sample(c / eps);
}

MechanismResult FilterMechanism(const OraclePtr& f, Vertex x,
                                const Rational& r, double eps, double delta,
                                const Seed& filter_seed,
                                LaplaceNoise& noise,
                                const MechanismOptions& options) {
  CheckEps(eps);
  if (!(delta > 0 && delta < 1)) {
    throw Error(ErrorCode::kInvalidParam, "delta must be in (0, 1)");
  }
  if (r.sign() <= 0) {
    throw Error(ErrorCode::kInvalidParam, "range must be positive");
  }
  const std::uint64_t before = f->lookups();
  OraclePtr clipped = Clip(f, Rational(0), r);
  MechanismResult out;
  if (clipped->range_diameter().sign() == 0) {
    const Value v = clipped->Lookup(x);
    out.filtered = v ? *v : clipped->range_lo();
  } else {
    LocalFilterL1 filter(clipped, Rational(1), filter_seed, options.filter);
    out.filtered = filter.Query(x);
  }
  out.iterations = 1;
  out.value = out.filtered.ToDouble() +
              (options.add_noise ? noise.Sample(2.0 / eps) : 0.0);
  out.lookups = f->lookups() - before;
  return out;
}

BinarySearchParams MakeBinarySearchParams(const Graph& g,
                                          const std::optional<Rational>& r_opt,
                                          double eps, double delta) {
  CheckEps(eps);
  if (!(delta > 0 && delta < 1.0 / 200)) {
    throw Error(ErrorCode::kInvalidParam, "delta must be in (0, 1/200)");
  }
  if (g.diameter() == kInfiniteDistance) {
    throw Error(ErrorCode::kInvalidParam, "domain must be connected");
  }
  Rational r(g.diameter());
  if (r_opt) {
    if (r_opt->sign() <= 0) {
      throw Error(ErrorCode::kInvalidParam, "range must be positive");
    }
    r = Min(r, *r_opt);
  }
  if (r <= Rational(2)) {
    throw Error(ErrorCode::kInvalidParam,
                "clamped range " + r.ToString() + " must exceed 2");
  }
  BinarySearchParams p;
  p.r = r;
  p.max_iteration = 0;
  for (Rational power(1); power < r; power *= Rational(2)) ++p.max_iteration;
  const double log_r = std::log(r.ToDouble()) / std::log(kMechanismLogBase);
  p.kappa = log_r;
  p.alpha = (1.0 / eps) * log_r *
            (std::log(200.0 * log_r) / std::log(kMechanismLogBase));
  p.noise_scale = log_r / eps;
  return p;
}

MechanismResult BinarySearchMechanism(const OraclePtr& f, Vertex x,
                                      const std::optional<Rational>& r_opt,
                                      double eps, double delta,
                                      const Seed& filter_seed,
                                      LaplaceNoise& noise,
                                      const MechanismOptions& options) {
  const BinarySearchParams p =
      MakeBinarySearchParams(f->graph(), r_opt, eps, delta);
  const std::uint64_t before = f->lookups();
  const OraclePtr base = Clip(f, Rational(0), p.r);
  const Rational alpha = Rational::FromDouble(p.alpha);
  Rational t = p.r / Rational(2);
  MechanismResult out;
  double h = 0;
  for (int i = 2; i <= p.max_iteration; ++i) {
    const OraclePtr window =
        Clip(base, t - Rational(2) * alpha, t + Rational(2) * alpha);
    LocalFilterL0 filter(window, filter_seed.Derive("binary-search", i),
                         options.filter);
    const Value v = filter.Query(x);
    out.filtered = *v;  // clipped functions are total
    h = out.filtered.ToDouble() +
        (options.add_noise ? noise.Sample(p.noise_scale) : 0.0);
    out.iterations = i - 1;
    const double gap = h - t.ToDouble();
    if (std::fabs(gap) <= p.alpha) break;
    // |gap| > alpha > 0 here, so the sign is never 0.
    const Rational step = (p.r / Pow(Rational(2), i)).Ceil();
    t += gap > 0 ? step : -step;
  }
  out.value = h;
  out.lookups = f->lookups() - before;
  return out;
}

}  // namespace lipfilter
