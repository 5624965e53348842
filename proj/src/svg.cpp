#include "subrosa/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace subrosa {

namespace {

const std::vector<std::string>& palette(const std::string& name) {
  static const std::vector<std::string> classic = {"#e6194b", "#f4d35e", "#5fad56", "#4d9de0", "#f78c6b",
                                                   "#9b5de5", "#00bbf9", "#fee440", "#ee6c4d", "#3d5a80",
                                                   "#98c1d9", "#e0fbfc", "#293241"};
  static const std::vector<std::string> gray = {"#f2f2f2", "#d9d9d9", "#bfbfbf", "#a6a6a6", "#8c8c8c",
                                                "#737373", "#595959"};
  if (name == "classic") return classic;
  if (name == "gray") return gray;
  throw std::invalid_argument("unknown palette '" + name + "'");
}

std::string num(double v) {
  if (std::fabs(v) < 5e-7) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Patch& patch, const SvgOptions& options) {
  const auto& colours = palette(options.palette);
  struct Poly {
    int k;
    std::vector<std::pair<double, double>> pts;
  };
  std::vector<Poly> polys;
  double minx = 0.0, miny = 0.0, maxx = 1.0, maxy = 1.0;
  bool first = true;
  for (const auto& t : patch.tiles()) {
    Poly p{t.k, {}};
    for (const auto& v : t.vertices()) {
      auto [x, y] = v.embed();
      y = -y;  // SVG y axis points down
      if (first) {
        minx = maxx = x;
        miny = maxy = y;
        first = false;
      }
      minx = std::min(minx, x);
      maxx = std::max(maxx, x);
      miny = std::min(miny, y);
      maxy = std::max(maxy, y);
      p.pts.emplace_back(x, y);
    }
    polys.push_back(std::move(p));
  }
  const double margin = 0.05 * std::max(maxx - minx, maxy - miny);
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + num(minx - margin) + " " +
         num(miny - margin) + " " + num(maxx - minx + 2 * margin) + " " + num(maxy - miny + 2 * margin) + "\">\n";
  out += "<g stroke=\"#000000\" stroke-width=\"" + num(options.stroke_width) + "\" stroke-linejoin=\"round\">\n";
  for (const auto& p : polys) {
    out += "<polygon fill=\"" + colours[static_cast<std::size_t>(p.k - 1) % colours.size()] + "\" points=\"";
    for (std::size_t i = 0; i < p.pts.size(); ++i) {
      if (i) out += ' ';
      out += num(p.pts[i].first) + "," + num(p.pts[i].second);
    }
    out += "\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace subrosa
