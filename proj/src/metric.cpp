#include "torusrips/metric.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "torusrips/error.hpp"

namespace torusrips {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::validation: return "validation";
    case ErrorKind::budget: return "budget";
    case ErrorKind::unsupported_regime: return "unsupported_regime";
    case ErrorKind::mismatch: return "mismatch";
    case ErrorKind::io: return "io";
    case ErrorKind::internal: return "internal";
  }
  return "internal";
}

void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

const char* to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::cycle: return "cycle";
    case SpaceKind::torus: return "torus";
    case SpaceKind::window: return "window";
  }
  return "unknown";
}

namespace {

void check_size(int n) {
  require(n >= 3, "size n must be at least 3, got " + std::to_string(n));
}

int axis_distance(int n, int a, int b) {
  const int d = std::abs(a - b);
  return std::min(d, n - d);
}

long floor_mod(long a, long n) {
  const long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

int cycle_distance(int n, int i, int j) {
  check_size(n);
  require(i >= 0 && i < n && j >= 0 && j < n,
          "cycle index out of range for n=" + std::to_string(n));
  return axis_distance(n, i, j);
}

int torus_distance(int n, TorusPoint p, TorusPoint q) {
  check_size(n);
  require(p.row >= 0 && p.row < n && p.col >= 0 && p.col < n && q.row >= 0 &&
              q.row < n && q.col >= 0 && q.col < n,
          "torus coordinate out of range for n=" + std::to_string(n));
  return axis_distance(n, p.row, q.row) + axis_distance(n, p.col, q.col);
}

int torus_diameter(int n) {
  check_size(n);
  return n % 2 == 0 ? n : n - 1;
}

long l1_distance(LatticePoint p, LatticePoint q) {
  return std::labs(p.x - q.x) + std::labs(p.y - q.y);
}

TorusPoint reduce_mod(int n, LatticePoint p) {
  check_size(n);
  return {static_cast<int>(floor_mod(p.x, n)),
          static_cast<int>(floor_mod(p.y, n))};
}

FiniteMetricSpace FiniteMetricSpace::cycle(int n) {
  check_size(n);
  return {SpaceKind::cycle, n, Window{}, static_cast<std::size_t>(n)};
}

FiniteMetricSpace FiniteMetricSpace::torus(int n) {
  check_size(n);
  require(n <= 4096, "torus size too large");
  return {SpaceKind::torus, n, Window{},
          static_cast<std::size_t>(n) * static_cast<std::size_t>(n)};
}

FiniteMetricSpace FiniteMetricSpace::window(Window w) {
  require(w.x_max >= w.x_min && w.y_max >= w.y_min, "empty window");
  const long points = w.width() * w.height();
  require(points <= (1L << 24), "window too large");
  return {SpaceKind::window, 0, w, static_cast<std::size_t>(points)};
}

std::string FiniteMetricSpace::label() const {
  std::ostringstream out;
  switch (kind_) {
    case SpaceKind::cycle: out << "cycle " << n_; break;
    case SpaceKind::torus: out << "torus " << n_; break;
    case SpaceKind::window:
      out << "window [" << window_.x_min << "," << window_.x_max << "]x["
          << window_.y_min << "," << window_.y_max << "]";
      break;
  }
  return out.str();
}

void FiniteMetricSpace::check_vertex(Vertex v) const {
  require(v < size_, "vertex index " + std::to_string(v) + " out of range");
}

int FiniteMetricSpace::distance(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  switch (kind_) {
    case SpaceKind::cycle:
      return axis_distance(n_, static_cast<int>(u), static_cast<int>(v));
    case SpaceKind::torus:
      return axis_distance(n_, static_cast<int>(u) / n_,
                           static_cast<int>(v) / n_) +
             axis_distance(n_, static_cast<int>(u) % n_,
                           static_cast<int>(v) % n_);
    case SpaceKind::window:
      return static_cast<int>(l1_distance(lattice_point(u), lattice_point(v)));
  }
  return 0;
}

int FiniteMetricSpace::diameter() const {
  switch (kind_) {
    case SpaceKind::cycle: return n_ / 2;
    case SpaceKind::torus: return torus_diameter(n_);
    case SpaceKind::window:
      return static_cast<int>(window_.width() - 1 + window_.height() - 1);
  }
  return 0;
}

TorusPoint FiniteMetricSpace::torus_point(Vertex v) const {
  require(kind_ == SpaceKind::torus, "not a torus space");
  check_vertex(v);
  return {static_cast<int>(v) / n_, static_cast<int>(v) % n_};
}

Vertex FiniteMetricSpace::torus_index(TorusPoint p) const {
  require(kind_ == SpaceKind::torus, "not a torus space");
  require(p.row >= 0 && p.row < n_ && p.col >= 0 && p.col < n_,
          "torus coordinate out of range");
  return static_cast<Vertex>(p.row * n_ + p.col);
}

LatticePoint FiniteMetricSpace::lattice_point(Vertex v) const {
  require(kind_ == SpaceKind::window, "not a window space");
  const long h = window_.height();
  return {window_.x_min + static_cast<long>(v) / h,
          window_.y_min + static_cast<long>(v) % h};
}

Vertex FiniteMetricSpace::lattice_index(LatticePoint p) const {
  require(kind_ == SpaceKind::window, "not a window space");
  require(window_.contains(p), "lattice point outside window");
  return static_cast<Vertex>((p.x - window_.x_min) * window_.height() +
                             (p.y - window_.y_min));
}

std::vector<Vertex> closed_ball(const FiniteMetricSpace& space, Vertex center,
                                int r) {
  require(center < space.size(), "ball center out of range");
  require(r >= 0, "ball radius must be nonnegative");
  std::vector<Vertex> ball;
  for (Vertex y = 0; y < space.size(); ++y)
    if (space.distance(center, y) <= r) ball.push_back(y);
  return ball;
}

}  // namespace torusrips
