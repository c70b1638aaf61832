#include "pierce/svg.hpp"

#include <cmath>
#include <cstdio>

namespace pierce {

namespace {

constexpr double kSize = 520.0;
constexpr double kScale = 240.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

double px(Point p) { return kSize / 2 + kScale * p.x; }
double py(Point p) { return kSize / 2 - kScale * p.y; }

std::string coord(Point p) { return num(px(p)) + "," + num(py(p)); }

void segment(std::string& out, Point a, Point b, const char* stroke, const char* width, const char* extra = "") {
  out += "  <line x1=\"" + num(px(a)) + "\" y1=\"" + num(py(a)) + "\" x2=\"" + num(px(b)) + "\" y2=\"" + num(py(b)) +
         "\" stroke=\"" + stroke + "\" stroke-width=\"" + width + "\"" + extra + "/>\n";
}

}  // namespace

std::string render_svg(const Families& families, const SvgOverlay& overlay) {
  const NormalizedFamilies norm = normalize_to_disk(families);
  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kSize) + "\" height=\"" + num(kSize) +
         "\" viewBox=\"0 0 " + num(kSize) + " " + num(kSize) + "\">\n";
  out += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += "  <circle cx=\"" + num(kSize / 2) + "\" cy=\"" + num(kSize / 2) + "\" r=\"" + num(kScale) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  for (std::size_t f = 0; f < norm.families.size(); ++f) {
    const char* color = kPalette[f % 6];
    out += "  <g id=\"F" + std::to_string(f + 1) + "\" fill=\"" + color + "\" fill-opacity=\"0.45\" stroke=\"" + color +
           "\" stroke-width=\"1\">\n";
    for (const ConvexBody& b : norm.families[f]) {
      if (b.is_point()) {
        out += "  <circle cx=\"" + num(px(b[0])) + "\" cy=\"" + num(py(b[0])) + "\" r=\"2.5\"/>\n";
      } else if (b.is_segment()) {
        segment(out, b[0], b[1], color, "2");
      } else {
        out += "  <polygon points=\"";
        for (std::size_t i = 0; i < b.size(); ++i) out += (i ? " " : "") + coord(b[i]);
        out += "\"/>\n";
      }
    }
    out += "  </g>\n";
  }

  if (overlay.chords) {
    const ChordConfig& cfg = *overlay.chords;
    for (const Chord& c : cfg.chords) segment(out, c.p, c.q, "#555555", "1", " stroke-dasharray=\"6,4\"");
    for (int i = 1; i <= cfg.n; ++i) {
      const auto poly = region_polygon(cfg, i);
      if (poly.size() < 3 || std::abs(polygon_area(poly)) < 1e-9) continue;
      const Point c = polygon_centroid(poly);
      out += "  <text x=\"" + num(px(c)) + "\" y=\"" + num(py(c)) +
             "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">R" +
             std::to_string(i) + "</text>\n";
    }
  }

  for (const LineEq& l : overlay.lines) {
    // Clip to the unit circle; lines missing it are not drawn.
    const double h = 1.0 - l.c * l.c;
    if (h < 0.0) continue;
    const Point base = l.c * l.normal();
    const Point dir = std::sqrt(h) * perp(l.normal());
    segment(out, base - dir, base + dir, "black", "2");
  }
  out += "</svg>\n";
  return out;
}

SvgOverlay overlay_of(const PiercingCertificate& certificate) {
  SvgOverlay o;
  if (certificate.witness.n() == 4 || certificate.witness.n() == 6) o.chords = chords_from_simplex(certificate.witness);
  o.lines = certificate.lines;
  return o;
}

}  // namespace pierce
