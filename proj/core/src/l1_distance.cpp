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

#include <stdexcept>
#include <string>
#include <vector>

#include "lipfilter/errors.hpp"
#include "lipfilter/oracles.hpp"

namespace lipfilter {
namespace {

// Dense tableau simplex for  max b.y  s.t.  M y <= c, y >= 0  with c >= 0,
// started from the slack basis and pivoted with Bland's rule. Returns the
// optimum and the objective-row entries of the slack columns, which are an
// optimal solution of the dual problem  min c.z  s.t.  M^T z >= b, z >= 0.
struct SimplexResult {
  Rational optimum;
  std::vector<Rational> dual;
};

SimplexResult MaximizeFromOrigin(const std::vector<std::vector<Rational>>& m,
                                 const std::vector<Rational>& b,
                                 const std::vector<Rational>& c) {
  const std::size_t rows = m.size();
  const std::size_t vars = b.size();
  const std::size_t cols = vars + rows;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < vars; ++j) t[i][j] = m[i][j];
    t[i][vars + i] = Rational(1);
    t[i][cols] = c[i];
    basis[i] = vars + i;
  }
  std::vector<Rational> obj(cols + 1);
  for (std::size_t j = 0; j < vars; ++j) obj[j] = -b[j];

  std::vector<std::size_t> nonzero;
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (obj[j].sign() < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter].sign() <= 0) continue;
      const Rational ratio = t[i][cols] / t[i][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows) {
      throw std::logic_error("l1 program is unbounded");
    }
    std::vector<Rational>& pivot_row = t[leave];
    const Rational pivot = pivot_row[enter];
    nonzero.clear();
    for (std::size_t j = 0; j <= cols; ++j) {
      if (pivot_row[j].sign() != 0) {
        pivot_row[j] /= pivot;
        nonzero.push_back(j);
      }
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      const Rational factor = row[enter];
      if (factor.sign() == 0) return;
      for (std::size_t j : nonzero) row[j] -= factor * pivot_row[j];
    };
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != leave) eliminate(t[i]);
    }
    eliminate(obj);
    basis[leave] = enter;
  }
  SimplexResult out;
  out.optimum = obj[cols];
  out.dual.assign(obj.begin() + static_cast<std::ptrdiff_t>(vars),
                  obj.begin() + static_cast<std::ptrdiff_t>(cols));
  return out;
}

}  // namespace

// Primal program over z = (h, e) >= 0, after shifting f so its minimum is 0:
//   min sum e  s.t.  e_x - h_x >= -f_x,  e_x + h_x >= f_x,
//                    h_v - h_u >= -1 and h_u - h_v >= -1 on every edge.
// It is solved through its dual, whose origin is feasible.
L1Distance ExactL1Distance(const Graph& g, const ValueTable& f) {
  if (!g.vertex_count_fits() || g.vertex_count() > kMaxL1OracleVertices) {
    throw Error(ErrorCode::kSizeExceeded,
                "exact l1 oracle supports at most 64 vertices");
  }
  const std::size_t n = g.vertex_count();
  if (f.size() != n) {
    throw Error(ErrorCode::kInvalidParam, "table size does not match domain");
  }
  Rational lo;
  for (std::size_t x = 0; x < n; ++x) {
    if (!f[x]) {
      throw Error(ErrorCode::kPartialFunction, "l1 oracle needs a total table");
    }
    if (x == 0 || *f[x] < lo) lo = *f[x];
  }
  std::vector<Rational> shifted(n);
  for (std::size_t x = 0; x < n; ++x) shifted[x] = *f[x] - lo;

  // Primal constraint rows a_i . z >= b_i, stored column-wise as the rows of
  // the dual matrix (one per primal variable).
  const std::size_t primal_vars = 2 * n;
  std::vector<std::vector<Rational>> dual_rows(primal_vars);
  std::vector<Rational> b;
  auto add_row = [&](const std::vector<std::pair<std::size_t, int>>& terms,
                     const Rational& rhs) {
    for (auto& row : dual_rows) row.emplace_back();
    for (const auto& [var, coef] : terms) {
      dual_rows[var].back() = Rational(coef);
    }
    b.push_back(rhs);
  };
  for (std::size_t x = 0; x < n; ++x) {
    add_row({{n + x, 1}, {x, -1}}, -shifted[x]);
    add_row({{n + x, 1}, {x, 1}}, shifted[x]);
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (Vertex v : g.Neighbors(Vertex{u})) {
      if (v.id <= u) continue;
      add_row({{v.id, 1}, {u, -1}}, Rational(-1));
      add_row({{u, 1}, {v.id, -1}}, Rational(-1));
    }
  }
  std::vector<Rational> c(primal_vars);
  for (std::size_t x = 0; x < n; ++x) c[n + x] = Rational(1);

  const SimplexResult result = MaximizeFromOrigin(dual_rows, b, c);

  L1Distance out;
  out.witness.resize(n);
  Rational total;
  for (std::size_t x = 0; x < n; ++x) {
    out.witness[x] = result.dual[x] + lo;
    total += (*out.witness[x] - *f[x]).Abs();
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (Vertex v : g.Neighbors(Vertex{u})) {
      if ((*out.witness[u] - *out.witness[v.id]).Abs() > Rational(1)) {
        throw std::logic_error("l1 witness is not Lipschitz");
      }
    }
  }
  if (total != result.optimum) {
    throw std::logic_error("l1 witness does not attain the optimum");
  }
  out.distance = total / Rational(static_cast<std::int64_t>(n));
  return out;
}

}  // namespace lipfilter
