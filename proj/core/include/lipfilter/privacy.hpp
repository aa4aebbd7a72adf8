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

#ifndef LIPFILTER_PRIVACY_HPP_
#define LIPFILTER_PRIVACY_HPP_

#include <cstdint>
#include <optional>
#include <random>

#include "lipfilter/filter_l1.hpp"
#include "lipfilter/function.hpp"
#include "lipfilter/rational.hpp"
#include "lipfilter/seed.hpp"

namespace lipfilter {

// Seeded Laplace stream, sampled by inverse CDF:
//   X = -scale * sign(U - 1/2) * ln(1 - 2|U - 1/2|),  U uniform in (0, 1).
class LaplaceNoise {
 public:
  explicit LaplaceNoise(std::uint64_t seed) : rng_(seed) {}

  double Sample(double scale);
  // Uniform in the open interval (0, 1), 53 bits.
  double Uniform();

 private:
  std::mt19937_64 rng_;
};

double LaplaceCdf(double x, double scale);

// Log base of the binary-search mechanism and of kappa.
inline constexpr double kMechanismLogBase = 2.0;

// f(x) + Laplace(c / eps). f(x) must be defined.
double LaplaceMechanism(const FunctionOracle& f, Vertex x, double eps,
                        double c, LaplaceNoise& noise);

struct MechanismResult {
  double value = 0;
  // The filtered value the noise was added to (last iteration).
  Rational filtered;
  int iterations = 0;
  std::uint64_t lookups = 0;
};

struct MechanismOptions {
  // Test mode: no noise, so the mechanism logic is exactly checkable.
  bool add_noise = true;
  FilterOptions filter;
};

// The l1 filter with slack 1 (2-Lipschitz output) at x plus Laplace(2/eps).
// f is clipped to [0, r] first.
MechanismResult FilterMechanism(const OraclePtr& f, Vertex x,
                                const Rational& r, double eps, double delta,
                                const Seed& filter_seed,
                                LaplaceNoise& noise,
                                const MechanismOptions& options = {});

struct BinarySearchParams {
  Rational r;          // after the clamp
  int max_iteration;   // ceil(log2 r); iterations run i = 2..max_iteration
  double alpha;        // (1/eps) log2(r) log2(200 log2 r)
  double noise_scale;  // log2(r) / eps
  double kappa;        // log2(r)
};

// Clamps r to min(r_opt, graph diameter). Throws kInvalidParam unless eps > 0,
// delta in (0, 1/200) and the clamped r exceeds 2 (so at least one
// iteration runs).
BinarySearchParams MakeBinarySearchParams(const Graph& g,
                                          const std::optional<Rational>& r_opt,
                                          double eps, double delta);

// Noisy binary search over clipped windows [t - 2 alpha, t + 2 alpha], each
// answered by the l0 filter plus Laplace(log2 r / eps).
MechanismResult BinarySearchMechanism(const OraclePtr& f, Vertex x,
                                      const std::optional<Rational>& r_opt,
                                      double eps, double delta,
                                      const Seed& filter_seed,
                                      LaplaceNoise& noise,
                                      const MechanismOptions& options = {});

}  // namespace lipfilter

#endif  // LIPFILTER_PRIVACY_HPP_
