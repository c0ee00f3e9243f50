// Copyright 2026 The levelshape Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "levelshape/grid.hpp"

namespace levelshape {

ScalarField laplacian(const ScalarField& u) {
  const Grid2D& g = u.grid;
  ScalarField out(g);
  const double ihx2 = 1.0 / (g.hx * g.hx);
  const double ihy2 = 1.0 / (g.hy * g.hy);
  for (int i = 1; i < g.ny - 1; ++i) {
    for (int j = 1; j < g.nx - 1; ++j) {
      const int k = g.index(i, j);
      out.values[k] = (u.values[k - 1] + u.values[k + 1]) * ihx2 +
                      (u.values[k - g.nx] + u.values[k + g.nx]) * ihy2 -
                      2.0 * u.values[k] * (ihx2 + ihy2);
    }
  }
  return out;
}

std::vector<double> quadrature_weights(const Grid2D& g) {
  std::vector<double> w(static_cast<size_t>(g.size()));
  const double cell = g.hx * g.hy;
  for (int i = 0; i < g.ny; ++i) {
    const double wi = (i == 0 || i == g.ny - 1) ? 0.5 : 1.0;
    for (int j = 0; j < g.nx; ++j) {
      const double wj = (j == 0 || j == g.nx - 1) ? 0.5 : 1.0;
      w[g.index(i, j)] = cell * wi * wj;
    }
  }
  return w;
}

double integrate(const ScalarField& u, Region region,
                 const ObservationSet* obs) {
  const Grid2D& g = u.grid;
  if (region != Region::D && obs == nullptr)
    throw ConfigError("integrate: region E or D\\E requires an ObservationSet");
  const std::vector<double> w = quadrature_weights(g);
  double sum = 0.0;
  for (int i = 0; i < g.ny; ++i) {
    for (int j = 0; j < g.nx; ++j) {
      const int k = g.index(i, j);
      bool in = true;
      if (region == Region::E) in = obs->contains(g.x(j), g.y(i));
      if (region == Region::D_minus_E) in = !obs->contains(g.x(j), g.y(i));
      if (in) sum += w[k] * u.values[k];
    }
  }
  return sum;
}

}  // namespace levelshape
