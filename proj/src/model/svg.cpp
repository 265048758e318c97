#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "udk/model.h"

namespace udk {

namespace {

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Drawing& d, double scale) {
  if (!(scale > 0)) throw PreconditionError("render_svg: scale must be positive");
  std::vector<double> xs, ys;
  for (const auto& p : d.vertices) {
    xs.push_back(p.x.to_double());
    ys.push_back(p.y.to_double());
  }
  double x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  if (!xs.empty()) {
    auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
    auto [ymin, ymax] = std::minmax_element(ys.begin(), ys.end());
    x0 = *xmin, x1 = *xmax, y0 = *ymin, y1 = *ymax;
  }
  const double margin = 0.25 * scale;
  const double width = (x1 - x0) * scale + 2 * margin;
  const double height = (y1 - y0) * scale + 2 * margin;
  auto px = [&](double x) { return fixed((x - x0) * scale + margin); };
  auto py = [&](double y) { return fixed((y1 - y) * scale + margin); };

  std::vector<int> dashed_list = dashed_edges(d);
  std::set<int> dashed(dashed_list.begin(), dashed_list.end());
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(width) << "\" height=\""
     << fixed(height) << "\" viewBox=\"0 0 " << fixed(width) << ' ' << fixed(height) << "\">\n";
  os << "<g stroke=\"black\" stroke-width=\"" << fixed(std::max(0.5, scale / 40)) << "\">\n";
  for (int i = 0; i < d.e(); ++i) {
    const Edge& e = d.edges[i];
    os << "<line x1=\"" << px(xs[e.u]) << "\" y1=\"" << py(ys[e.u]) << "\" x2=\"" << px(xs[e.v])
       << "\" y2=\"" << py(ys[e.v]) << '"';
    if (dashed.count(i)) os << " stroke=\"gray\" stroke-dasharray=\"4 3\"";
    os << "/>\n";
  }
  os << "</g>\n<g fill=\"black\">\n";
  const std::string r = fixed(std::max(1.0, scale / 20));
  for (int i = 0; i < d.n(); ++i) {
    os << "<circle cx=\"" << px(xs[i]) << "\" cy=\"" << py(ys[i]) << "\" r=\"" << r << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace udk
