#include "casimir/detail/gauss_rule.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

namespace casimir::detail {

namespace {

// Full symmetric 8-point Gauss-Legendre rule on [-1, 1].
struct Reference {
  std::vector<double> x;
  std::vector<double> w;
};

const Reference& reference_rule() {
  static const Reference ref = [] {
    using G = boost::math::quadrature::gauss<double, kPanelOrder>;
    Reference r;
    const auto& a = G::abscissa();
    const auto& w = G::weights();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0.0) {
        r.x.push_back(0.0);
        r.w.push_back(w[i]);
      } else {
        r.x.push_back(-a[i]);
        r.w.push_back(w[i]);
        r.x.push_back(a[i]);
        r.w.push_back(w[i]);
      }
    }
    std::vector<std::size_t> idx(r.x.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](auto p, auto q) { return r.x[p] < r.x[q]; });
    Reference sorted;
    for (auto i : idx) {
      sorted.x.push_back(r.x[i]);
      sorted.w.push_back(r.w[i]);
    }
    return sorted;
  }();
  return ref;
}

}  // namespace

void QuadratureRule::append(const QuadratureRule& other) {
  nodes.insert(nodes.end(), other.nodes.begin(), other.nodes.end());
  weights.insert(weights.end(), other.weights.begin(), other.weights.end());
}

QuadratureRule composite_linear(double a, double b, int panels) {
  const auto& ref = reference_rule();
  QuadratureRule rule;
  panels = std::max(panels, 1);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (std::size_t i = 0; i < ref.x.size(); ++i) {
      rule.nodes.push_back(mid + 0.5 * h * ref.x[i]);
      rule.weights.push_back(0.5 * h * ref.w[i]);
    }
  }
  return rule;
}

QuadratureRule composite_log(double a, double b, int panels) {
  QuadratureRule u = composite_linear(std::log(a), std::log(b), panels);
  for (std::size_t i = 0; i < u.size(); ++i) {
    u.nodes[i] = std::exp(u.nodes[i]);
    u.weights[i] *= u.nodes[i];
  }
  return u;
}

QuadratureRule graded_rule(const std::vector<double>& edges, double b, int nodes) {
  std::vector<double> pts;
  for (double e : edges)
    if (e > 0.0 && e < b) pts.push_back(e);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty()) pts.push_back(b * 1e-8);
  pts.push_back(b);

  double total_width = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    total_width += std::log(pts[i + 1] / pts[i]);
  const int total_panels = std::max(1, nodes / kPanelOrder);

  QuadratureRule rule = composite_linear(0.0, pts.front(), 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double width = std::log(pts[i + 1] / pts[i]);
    const int panels = std::max(
        1, static_cast<int>(std::lround(total_panels * width / total_width)));
    rule.append(composite_log(pts[i], pts[i + 1], panels));
  }
  return rule;
}

}  // namespace casimir::detail
