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

#ifndef LEVELSHAPE_GRID_HPP
#define LEVELSHAPE_GRID_HPP

#include <cmath>
#include <functional>
#include <vector>

#include "levelshape/errors.hpp"

namespace levelshape {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  double norm() const { return std::hypot(x, y); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

using Point = Vec2;

/// Uniform rectangular node grid over the holdall domain D.
/// node(i,j) = (x0 + j*hx, y0 + i*hy) with 0 <= j < nx, 0 <= i < ny;
/// i indexes rows (y direction), j indexes columns (x direction).
struct Grid2D {
  int nx = 0;
  int ny = 0;
  double x0 = 0.0;
  double y0 = 0.0;
  double hx = 0.0;
  double hy = 0.0;

  Grid2D() = default;
  Grid2D(int nx_, int ny_, double x0_, double y0_, double hx_, double hy_)
      : nx(nx_), ny(ny_), x0(x0_), y0(y0_), hx(hx_), hy(hy_) {
    if (nx < 3 || ny < 3) throw ConfigError("Grid2D: nx, ny must be >= 3");
    if (!(hx > 0.0) || !(hy > 0.0))
      throw ConfigError("Grid2D: hx, hy must be positive");
  }

  /// Grid spanning [x0, x0+width] x [y0, y0+height] with nx x ny nodes.
  static Grid2D from_extent(double x0, double y0, double width, double height,
                            int nx, int ny) {
    if (nx < 3 || ny < 3) throw ConfigError("Grid2D: nx, ny must be >= 3");
    if (!(width > 0.0) || !(height > 0.0))
      throw ConfigError("Grid2D: width, height must be positive");
    return Grid2D(nx, ny, x0, y0, width / (nx - 1), height / (ny - 1));
  }

  int size() const { return nx * ny; }
  int index(int i, int j) const { return i * nx + j; }
  double x(int j) const { return x0 + j * hx; }
  double y(int i) const { return y0 + i * hy; }
  Point node(int i, int j) const { return {x(j), y(i)}; }

  double xmax() const { return x0 + (nx - 1) * hx; }
  double ymax() const { return y0 + (ny - 1) * hy; }
  double width() const { return (nx - 1) * hx; }
  double height() const { return (ny - 1) * hy; }
  double area() const { return width() * height(); }
  double min_spacing() const { return std::min(hx, hy); }

  bool boundary(int i, int j) const {
    return i == 0 || j == 0 || i == ny - 1 || j == nx - 1;
  }
  bool contains(const Point& p) const {
    return p.x >= x0 && p.x <= xmax() && p.y >= y0 && p.y <= ymax();
  }
  /// Distance from p to the boundary of the grid rectangle (>=0 inside).
  double distance_to_boundary(const Point& p) const {
    double dx = std::min(p.x - x0, xmax() - p.x);
    double dy = std::min(p.y - y0, ymax() - p.y);
    return std::min(dx, dy);
  }

  bool operator==(const Grid2D& o) const {
    return nx == o.nx && ny == o.ny && x0 == o.x0 && y0 == o.y0 &&
           hx == o.hx && hy == o.hy;
  }
  bool operator!=(const Grid2D& o) const { return !(*this == o); }
};

/// Nodal scalar field on a Grid2D, values row-major by i then j.
struct ScalarField {
  Grid2D grid;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const Grid2D& g, double fill = 0.0)
      : grid(g), values(static_cast<size_t>(g.size()), fill) {}

  static ScalarField sample(const Grid2D& g,
                            const std::function<double(double, double)>& f) {
    ScalarField out(g);
    for (int i = 0; i < g.ny; ++i)
      for (int j = 0; j < g.nx; ++j)
        out.values[g.index(i, j)] = f(g.x(j), g.y(i));
    return out;
  }

  double& at(int i, int j) { return values[grid.index(i, j)]; }
  double at(int i, int j) const { return values[grid.index(i, j)]; }

  double max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  bool all_finite() const {
    for (double v : values)
      if (!std::isfinite(v)) return false;
    return true;
  }
};

/// Observation set E: a rectangle or a disk strictly inside D.
/// contains() tests membership in the closure of E.
struct ObservationSet {
  enum class Kind { rectangle, disk };

  Kind kind = Kind::disk;
  double cx = 0.0;
  double cy = 0.0;
  double r = 0.0;   // disk radius
  double hw = 0.0;  // rectangle half-width
  double hh = 0.0;  // rectangle half-height

  static ObservationSet make_disk(double cx, double cy, double r) {
    if (!(r > 0.0)) throw ConfigError("ObservationSet: disk radius must be > 0");
    ObservationSet e;
    e.kind = Kind::disk;
    e.cx = cx;
    e.cy = cy;
    e.r = r;
    return e;
  }
  static ObservationSet make_rectangle(double cx, double cy, double hw,
                                       double hh) {
    if (!(hw > 0.0) || !(hh > 0.0))
      throw ConfigError("ObservationSet: rectangle half-extents must be > 0");
    ObservationSet e;
    e.kind = Kind::rectangle;
    e.cx = cx;
    e.cy = cy;
    e.hw = hw;
    e.hh = hh;
    return e;
  }

  bool contains(double x, double y) const {
    if (kind == Kind::disk) {
      double dx = x - cx, dy = y - cy;
      return dx * dx + dy * dy <= r * r;
    }
    return std::abs(x - cx) <= hw && std::abs(y - cy) <= hh;
  }
  bool contains(const Point& p) const { return contains(p.x, p.y); }

  /// Signed distance to the boundary of E (positive outside).
  double distance_to_boundary(const Point& p) const {
    if (kind == Kind::disk) {
      double d = std::hypot(p.x - cx, p.y - cy);
      return std::abs(d - r);
    }
    double ax = std::abs(p.x - cx) - hw;
    double ay = std::abs(p.y - cy) - hh;
    if (ax <= 0.0 && ay <= 0.0) return std::min(-ax, -ay);
    double px = std::max(ax, 0.0), py = std::max(ay, 0.0);
    return std::hypot(px, py);
  }

  /// dist(closure(E), boundary of D); must be > 0 for an admissible setup.
  double margin_to(const Grid2D& g) const {
    double ex0, ex1, ey0, ey1;
    if (kind == Kind::disk) {
      ex0 = cx - r;
      ex1 = cx + r;
      ey0 = cy - r;
      ey1 = cy + r;
    } else {
      ex0 = cx - hw;
      ex1 = cx + hw;
      ey0 = cy - hh;
      ey1 = cy + hh;
    }
    double m = ex0 - g.x0;
    m = std::min(m, g.xmax() - ex1);
    m = std::min(m, ey0 - g.y0);
    m = std::min(m, g.ymax() - ey1);
    return m;
  }

  void validate_inside(const Grid2D& g) const {
    if (!(margin_to(g) > 0.0))
      throw ConfigError(
          "ObservationSet: closure(E) must lie strictly inside D");
  }

  /// Nodal indicator of closure(E).
  std::vector<char> node_mask(const Grid2D& g) const {
    std::vector<char> m(static_cast<size_t>(g.size()), 0);
    for (int i = 0; i < g.ny; ++i)
      for (int j = 0; j < g.nx; ++j)
        m[g.index(i, j)] = contains(g.x(j), g.y(i)) ? 1 : 0;
    return m;
  }
};

enum class Region { D, E, D_minus_E };

/// Discrete 5-point Laplacian of u. Interior nodes carry the standard
/// second-order stencil; boundary rows are set to 0 (Dirichlet rows are
/// handled in the linear-system assembly, not here).
ScalarField laplacian(const ScalarField& u);

/// Composite trapezoid quadrature of u over a region, with the region
/// indicator sampled at nodes. Region::E and Region::D_minus_E require obs.
double integrate(const ScalarField& u, Region region,
                 const ObservationSet* obs = nullptr);

/// Trapezoid quadrature weights per node (hx*hy, halved on edges,
/// quartered at corners).
std::vector<double> quadrature_weights(const Grid2D& g);

}  // namespace levelshape

#endif  // LEVELSHAPE_GRID_HPP
