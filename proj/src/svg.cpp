#include "peelkit/svg.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <map>
#include <sstream>

#include "peelkit/errors.hpp"

namespace peelkit {

namespace {

constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                                   "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};

}  // namespace

std::string render_svg(const PointSet& p, const PlotOptions& options) {
  const int d = p.dim;
  if (d == 1) {
    if (options.axis_x != 0) throw InputError("1-dimensional sets only have axis 0");
  } else if (options.axis_x < 0 || options.axis_y < 0 || options.axis_x >= d || options.axis_y >= d ||
             options.axis_x == options.axis_y) {
    throw InputError("projection axes must be two distinct coordinates in [0, " + std::to_string(d) + ")");
  }

  struct Xy {
    double x, y;
  };
  auto project = [&](const Point& q) {
    return Xy{q[static_cast<std::size_t>(options.axis_x)].get_d(),
              d == 1 ? 0.0 : q[static_cast<std::size_t>(options.axis_y)].get_d()};
  };
  std::vector<Xy> xy;
  for (const auto& q : p.points) xy.push_back(project(q));
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  for (const auto& v : xy) {
    minx = std::min(minx, v.x);
    maxx = std::max(maxx, v.x);
    miny = std::min(miny, v.y);
    maxy = std::max(maxy, v.y);
  }
  const double span = std::max({maxx - minx, maxy - miny, 1e-12});
  const double margin = 24;
  const double scale = (options.size - 2 * margin) / span;
  auto sx = [&](double x) { return margin + (x - minx) * scale; };
  auto sy = [&](double y) { return options.size - margin - (y - miny) * scale; };

  std::ostringstream out;
  out << std::setprecision(6) << std::fixed;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << options.size << "\" height=\"" << options.size
      << "\" viewBox=\"0 0 " << options.size << ' ' << options.size << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < p.size(); ++i) groups[p.blocks ? (*p.blocks)[i] : 0].push_back(i);
  std::size_t color = 0;
  for (auto& [id, idx] : groups) {
    const char* stroke = kPalette[color++ % kPalette.size()];
    out << "<g class=\"block\" data-block=\"" << id << "\" fill=\"" << stroke << "\" stroke=\"" << stroke << "\">\n";
    if (p.blocks && idx.size() > 1) {
      std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return squared_norm(p[a]) < squared_norm(p[b]); });
      out << "  <polyline fill=\"none\" stroke-width=\"1\" points=\"";
      for (auto i : idx) out << sx(xy[i].x) << ',' << sy(xy[i].y) << ' ';
      out << "\"/>\n";
    }
    for (auto i : idx) out << "  <circle cx=\"" << sx(xy[i].x) << "\" cy=\"" << sy(xy[i].y) << "\" r=\"3\"/>\n";
    out << "</g>\n";
  }
  if (options.mark_origin) {
    const double ox = sx(0), oy = sy(0);
    out << "<g class=\"origin\" stroke=\"black\" stroke-width=\"1.5\">\n"
        << "  <line x1=\"" << ox - 6 << "\" y1=\"" << oy << "\" x2=\"" << ox + 6 << "\" y2=\"" << oy << "\"/>\n"
        << "  <line x1=\"" << ox << "\" y1=\"" << oy - 6 << "\" x2=\"" << ox << "\" y2=\"" << oy + 6 << "\"/>\n"
        << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace peelkit
