#pragma once

#include <cstddef>
#include <vector>

namespace casimir::detail {

/// Nodes and weights of a one-dimensional rule; weights include any
/// Jacobian of the variable map.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
  void append(const QuadratureRule& other);

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
    return s;
  }
};

inline constexpr int kPanelOrder = 8;

/// `panels` equal Gauss-Legendre panels on [a, b].
QuadratureRule composite_linear(double a, double b, int panels);

/// Panels equal in ln(x) on [a, b], a > 0.
QuadratureRule composite_log(double a, double b, int panels);

/// Log-graded rule on [0, b]: one linear panel on [0, edges.front()], then
/// log panels between consecutive edges (edges ascending, all < b), with
/// about `nodes` nodes in total split by log-width. Every interval gets at
/// least one panel.
QuadratureRule graded_rule(const std::vector<double>& edges, double b, int nodes);

}  // namespace casimir::detail
