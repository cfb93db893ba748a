#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace torusrips {

using Vertex = std::uint32_t;

struct CyclePoint {
  int index = 0;
  auto operator<=>(const CyclePoint&) const = default;
};

/// A vertex of T_{n,n}; both coordinates live in [0, n).
struct TorusPoint {
  int row = 0;
  int col = 0;
  auto operator<=>(const TorusPoint&) const = default;
};

struct LatticePoint {
  long x = 0;
  long y = 0;
  auto operator<=>(const LatticePoint&) const = default;
};

/// A point of (Z/2)^2 stored with doubled coordinates: (x2/2, y2/2).
struct HalfIntegerPoint {
  long x2 = 0;
  long y2 = 0;
  auto operator<=>(const HalfIntegerPoint&) const = default;
};

/// Inclusive axis-aligned window [x_min, x_max] x [y_min, y_max] of Z^2.
struct Window {
  long x_min = 0;
  long x_max = 0;
  long y_min = 0;
  long y_max = 0;

  long width() const { return x_max - x_min + 1; }
  long height() const { return y_max - y_min + 1; }
  bool contains(LatticePoint p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
  // Every coordinate at least `margin` steps away from the boundary lines.
  bool contains_with_margin(LatticePoint p, long margin) const {
    return p.x >= x_min + margin && p.x <= x_max - margin &&
           p.y >= y_min + margin && p.y <= y_max - margin;
  }
  auto operator<=>(const Window&) const = default;
};

int cycle_distance(int n, int i, int j);
int torus_distance(int n, TorusPoint p, TorusPoint q);
int torus_diameter(int n);
long l1_distance(LatticePoint p, LatticePoint q);
TorusPoint reduce_mod(int n, LatticePoint p);

enum class SpaceKind { cycle, torus, window };

const char* to_string(SpaceKind kind);

/// Uniform finite view over C_n, T_{n,n} and windows of Z^2.
///
/// Vertices are indexed 0..size()-1. Torus vertex (row, col) has index
/// row*n + col; window point (x, y) has index (x - x_min)*height + (y - y_min).
class FiniteMetricSpace {
 public:
  static FiniteMetricSpace cycle(int n);
  static FiniteMetricSpace torus(int n);
  static FiniteMetricSpace window(Window w);

  SpaceKind kind() const { return kind_; }
  // Cycle/torus size; 0 for windows.
  int n() const { return n_; }
  const Window& window_bounds() const { return window_; }
  std::size_t size() const { return size_; }
  std::string label() const;

  int distance(Vertex u, Vertex v) const;
  int diameter() const;

  TorusPoint torus_point(Vertex v) const;
  Vertex torus_index(TorusPoint p) const;
  LatticePoint lattice_point(Vertex v) const;
  Vertex lattice_index(LatticePoint p) const;

 private:
  FiniteMetricSpace(SpaceKind kind, int n, Window w, std::size_t size)
      : kind_(kind), n_(n), window_(w), size_(size) {}

  void check_vertex(Vertex v) const;

  SpaceKind kind_;
  int n_;
  Window window_;
  std::size_t size_;
};

/// All y with distance(center, y) <= r, ascending.
std::vector<Vertex> closed_ball(const FiniteMetricSpace& space, Vertex center,
                                int r);

}  // namespace torusrips
