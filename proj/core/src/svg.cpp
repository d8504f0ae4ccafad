#include "ptc/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "ptc/errors.hpp"

namespace ptc {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string label(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4g", v);
  return buf;
}

}  // namespace

std::string render_polyline_svg(const CatenaryFit& fit, const SvgOptions& options) {
  if (options.width < 100 || options.height < 100)
    throw DomainError("render_polyline_svg: viewport too small");
  if (options.catenary_samples < 2)
    throw DomainError("render_polyline_svg: need at least two catenary samples");

  const double w = options.width;
  const double h = options.height;
  const double margin_x = 0.05 * w;
  const double margin_y = 0.05 * h;

  double r_max = fit.a;
  for (const auto& v : fit.vertices) r_max = std::max(r_max, v.r);
  r_max *= 1.05;

  // t in [-1, 1] horizontal, radius vertical with the baseline r = 0 at the
  // bottom edge of the plot box.
  const auto map_x = [&](double t) {
    return margin_x + (t + 1.0) / 2.0 * (w - 2.0 * margin_x);
  };
  const auto map_y = [&](double r) {
    return h - margin_y - r / r_max * (h - 2.0 * margin_y);
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(options.width) + "\" height=\"" +
         std::to_string(options.height) + "\" viewBox=\"0 0 " +
         std::to_string(options.width) + " " + std::to_string(options.height) +
         "\">\n";
  svg += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Plot box and ticks.
  svg += "  <rect x=\"" + num(margin_x) + "\" y=\"" + num(margin_y) +
         "\" width=\"" + num(w - 2.0 * margin_x) + "\" height=\"" +
         num(h - 2.0 * margin_y) +
         "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  svg += "  <g font-family=\"sans-serif\" font-size=\"12\" fill=\"#444\">\n";
  for (const double t : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    const double x = map_x(t);
    svg += "    <line x1=\"" + num(x) + "\" y1=\"" + num(h - margin_y) +
           "\" x2=\"" + num(x) + "\" y2=\"" + num(h - margin_y + 5.0) +
           "\" stroke=\"#444\"/>\n";
    svg += "    <text x=\"" + num(x) + "\" y=\"" + num(h - margin_y + 18.0) +
           "\" text-anchor=\"middle\">" + label(t) + "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double r = r_max * i / 4.0;
    const double y = map_y(r);
    svg += "    <line x1=\"" + num(margin_x - 5.0) + "\" y1=\"" + num(y) +
           "\" x2=\"" + num(margin_x) + "\" y2=\"" + num(y) +
           "\" stroke=\"#444\"/>\n";
    svg += "    <text x=\"" + num(margin_x - 8.0) + "\" y=\"" + num(y + 4.0) +
           "\" text-anchor=\"end\">" + label(r) + "</text>\n";
  }
  svg += "  </g>\n";

  if (options.overlay_catenary) {
    svg += "  <polyline fill=\"none\" stroke=\"#cc2222\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"6,4\" points=\"";
    for (int i = 0; i < options.catenary_samples; ++i) {
      const double t =
          -1.0 + 2.0 * i / static_cast<double>(options.catenary_samples - 1);
      if (i > 0) svg += ' ';
      svg += num(map_x(t)) + "," + num(map_y(catenary_eval(fit.reference, t)));
    }
    svg += "\"/>\n";
  }

  svg += "  <polyline fill=\"none\" stroke=\"#000\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < fit.vertices.size(); ++i) {
    if (i > 0) svg += ' ';
    svg += num(map_x(fit.vertices[i].t)) + "," + num(map_y(fit.vertices[i].r));
  }
  svg += "\"/>\n";

  svg += "  <g fill=\"#000\">\n";
  for (const auto& v : fit.vertices) {
    svg += "    <circle cx=\"" + num(map_x(v.t)) + "\" cy=\"" + num(map_y(v.r)) +
           "\" r=\"3\"/>\n";
  }
  svg += "  </g>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace ptc
