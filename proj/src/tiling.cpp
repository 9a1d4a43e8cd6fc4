#include "modcurve/tiling.hpp"

#include <array>
#include <cmath>
#include <set>
#include <sstream>

namespace modcurve::tiling {

namespace {

using sl2z::UnimodularMatrix;

UnimodularMatrix sign_normalized(const UnimodularMatrix& g) {
  const bool flip = (g.c != 0) ? (g.c < 0) : (g.d < 0);
  return flip ? g.negated() : g;
}

struct Key {
  std::array<Integer, 4> e;
  bool operator<(const Key& o) const { return e < o.e; }
};

Key key_of(const UnimodularMatrix& g) { return Key{{g.a, g.b, g.c, g.d}}; }

} // namespace

std::vector<UnimodularMatrix> coset_representatives(int depth) {
  if (depth < 0) throw std::invalid_argument("coset_representatives: depth must be >= 0");
  std::set<Key> seen;
  std::vector<UnimodularMatrix> out;
  std::vector<UnimodularMatrix> frontier;

  auto admit = [&](const UnimodularMatrix& g) -> bool {
    const UnimodularMatrix n = sign_normalized(g);
    if (!seen.insert(key_of(n)).second) return false;
    out.push_back(n);
    return true;
  };

  admit(sl2z::identity());
  frontier.push_back(sl2z::identity());

  const UnimodularMatrix t_inv = sl2z::gen_T().inverse();
  for (int level = 0; level < depth; ++level) {
    std::vector<UnimodularMatrix> next;
    for (const auto& g : frontier)
      for (const UnimodularMatrix* gen : {&sl2z::gen_S(), &sl2z::gen_T(), &t_inv}) {
        UnimodularMatrix h = sl2z::compose(g, *gen);
        if (admit(h)) next.push_back(std::move(h));
      }
    frontier = std::move(next);
  }
  return out;
}

namespace {

Complex moebius(const UnimodularMatrix& g, Complex t) {
  return (g.a.get_d() * t + g.b.get_d()) / (g.c.get_d() * t + g.d.get_d());
}

} // namespace

std::string svg_domain(int depth, int width, int height) {
  const std::vector<UnimodularMatrix> cosets = coset_representatives(depth);

  // Viewport of the half plane that comfortably contains the tiles.
  const double x_min = -1.6, x_max = 1.6;
  const double y_max_view = 2.4;
  const double sx = width / (x_max - x_min);
  const double sy = height / y_max_view;

  auto to_px = [&](Complex z) {
    const double px = (z.real() - x_min) * sx;
    const double py = height - std::min(z.imag(), y_max_view) * sy;
    return std::pair<double, double>(px, py);
  };

  // The base tile F has corners rho, rho + 1 and the cusp at infinity; its
  // vertical edges are capped at a finite height before mapping.
  const Complex rho(-0.5, std::sqrt(3.0) / 2.0);
  const Complex rho1(0.5, std::sqrt(3.0) / 2.0);
  const double cap = 60.0;
  const int samples = 28;

  std::vector<Complex> base;
  // left edge: rho + i t up to the cap
  for (int k = 0; k <= samples; ++k) {
    const double t = (double)k / samples;
    base.push_back(Complex(-0.5, rho.imag() + (cap - rho.imag()) * t * t * t));
  }
  // across the top
  for (int k = 1; k <= samples; ++k)
    base.push_back(Complex(-0.5 + (double)k / samples, cap));
  // right edge: down from the cap to rho + 1
  for (int k = 1; k <= samples; ++k) {
    const double t = 1.0 - (double)k / samples;
    base.push_back(Complex(0.5, rho1.imag() + (cap - rho1.imag()) * t * t * t));
  }
  // bottom arc from rho + 1 back to rho along |tau| = 1
  for (int k = 1; k <= samples; ++k) {
    const double a = M_PI / 3.0 + (M_PI / 3.0) * ((double)k / samples);
    base.push_back(std::polar(1.0, a));
  }

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";

  svg.setf(std::ios::fixed);
  svg.precision(2);
  for (const auto& g : cosets) {
    svg << "  <path class=\"tile\" d=\"";
    bool first = true;
    for (const Complex& b : base) {
      const auto [px, py] = to_px(moebius(g, b));
      svg << (first ? "M" : " L") << px << " " << py;
      first = false;
    }
    svg << " Z\" fill=\"#dbe9f6\" fill-opacity=\"0.55\" stroke=\"#27527d\" stroke-width=\"0.7\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

} // namespace modcurve::tiling
