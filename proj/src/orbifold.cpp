#include "modcurve/orbifold.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace modcurve::orbifold {

Rational stratified_euler(const std::vector<Stratum>& strata) {
  if (strata.empty()) throw std::invalid_argument("stratified_euler: empty stratification");
  Rational chi(0);
  for (const Stratum& s : strata) {
    if (s.aut_order < 1) throw std::invalid_argument("stratified_euler: aut_order must be >= 1");
    chi += Rational(s.euler) / Rational(s.aut_order);
  }
  return chi;
}

namespace {

using Simplex = std::vector<int>;

Simplex apply_perm(const std::vector<int>& perm, const Simplex& s) {
  Simplex out;
  out.reserve(s.size());
  for (int v : s) out.push_back(perm[(size_t)v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> compose_perm(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = f[(size_t)g[i]];
  return out;
}

} // namespace

Rational simplicial_euler(const EquivariantComplex& K) {
  const int nv = K.num_vertices;
  for (const auto& perm : K.generators) {
    if ((int)perm.size() != nv)
      throw std::invalid_argument("simplicial_euler: generator has wrong length");
    std::vector<bool> seen((size_t)nv, false);
    for (int v : perm) {
      if (v < 0 || v >= nv || seen[(size_t)v])
        throw std::invalid_argument("simplicial_euler: generator is not a permutation");
      seen[(size_t)v] = true;
    }
  }

  // Close the generators into the full (finite) group.
  std::vector<int> id((size_t)nv);
  for (int i = 0; i < nv; ++i) id[(size_t)i] = i;
  std::set<std::vector<int>> group{id};
  std::vector<std::vector<int>> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& g : frontier)
      for (const auto& gen : K.generators) {
        auto h = compose_perm(gen, g);
        if (group.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
    if (group.size() > 100000)
      throw std::invalid_argument("simplicial_euler: generated group is unreasonably large");
  }
  const long order = (long)group.size();

  Rational chi(0);
  int sign = 1;
  for (size_t dim = 0; dim < K.simplices.size(); ++dim, sign = -sign) {
    std::set<Simplex> present;
    for (const auto& s : K.simplices[dim]) {
      Simplex t = s;
      std::sort(t.begin(), t.end());
      if ((int)t.size() != (int)dim + 1)
        throw std::invalid_argument("simplicial_euler: simplex has wrong dimension");
      for (int v : t)
        if (v < 0 || v >= nv) throw std::invalid_argument("simplicial_euler: vertex out of range");
      present.insert(std::move(t));
    }
    // The action must send simplices to simplices.
    for (const auto& g : group)
      for (const auto& s : present)
        if (!present.count(apply_perm(g, s)))
          throw std::invalid_argument("simplicial_euler: the action does not preserve the complex");

    std::set<Simplex> visited;
    for (const auto& s : present) {
      if (visited.count(s)) continue;
      std::set<Simplex> orbit;
      for (const auto& g : group) orbit.insert(apply_perm(g, s));
      for (const auto& t : orbit) visited.insert(t);
      const long stab = order / (long)orbit.size();
      chi += Rational(sign) / Rational(stab);
    }
  }
  return chi;
}

EquivariantComplex complex_from_json(const std::string& text) {
  const nlohmann::json in = nlohmann::json::parse(text);
  EquivariantComplex K;
  K.num_vertices = in.at("vertices").get<int>();
  for (const auto& level : in.at("simplices")) {
    std::vector<Simplex> simplices;
    for (const auto& s : level) simplices.push_back(s.get<Simplex>());
    K.simplices.push_back(std::move(simplices));
  }
  if (in.contains("generators"))
    for (const auto& g : in.at("generators")) K.generators.push_back(g.get<std::vector<int>>());
  return K;
}

std::vector<Stratum> strata_from_json(const std::string& text) {
  const nlohmann::json in = nlohmann::json::parse(text);
  std::vector<Stratum> out;
  for (const auto& s : in) {
    Stratum st;
    st.euler = s.at("euler").get<long>();
    st.aut_order = s.at("aut").get<long>();
    out.push_back(st);
  }
  return out;
}

long ambient_aut_order(Ambient amb, const std::string& point) {
  const bool reduced = amb == Ambient::OpenReduced || amb == Ambient::CompactifiedReduced;
  const bool compact = amb == Ambient::Compactified || amb == Ambient::CompactifiedReduced;
  if (point == "infinity" && !compact)
    throw std::invalid_argument("divisor: 'infinity' lives only on the compactified curve");
  if (point == "i") return reduced ? 2 : 4;
  if (point == "rho") return reduced ? 3 : 6;
  return reduced ? 1 : 2;
}

OrbifoldDivisor::OrbifoldDivisor(Ambient amb, std::vector<DivisorEntry> es)
    : ambient(amb), entries(std::move(es)) {
  for (const auto& e : entries) {
    const long expected = ambient_aut_order(amb, e.point);
    if (e.aut_order != expected)
      throw std::invalid_argument("divisor: point '" + e.point + "' must carry aut order " +
                                  std::to_string(expected) + " on this curve");
  }
}

Rational divisor_degree(const OrbifoldDivisor& D) {
  Rational deg(0);
  for (const auto& e : D.entries) deg += Rational(e.numerator) / Rational(e.aut_order);
  return deg;
}

int class_in_Cl_red(const OrbifoldDivisor& D) {
  if (D.ambient != Ambient::OpenReduced)
    throw std::invalid_argument("class_in_Cl_red: divisor must live on the open reduced curve");
  Integer cls = 0;
  for (const auto& e : D.entries) {
    if (e.point == "i")
      cls += 3 * e.numerator;
    else if (e.point == "rho")
      cls += 2 * e.numerator;
    // generic points are principal on the open curve
  }
  Integer r = cls % 6;
  if (r < 0) r += 6;
  return (int)r.get_si();
}

Integer class_in_Cl_mbar_red(const OrbifoldDivisor& D) {
  if (D.ambient != Ambient::CompactifiedReduced)
    throw std::invalid_argument(
        "class_in_Cl_mbar_red: divisor must live on the compactified reduced curve");
  Integer cls = 0;
  for (const auto& e : D.entries) {
    if (e.point == "i")
      cls += 3 * e.numerator;
    else if (e.point == "rho")
      cls += 2 * e.numerator;
    else
      cls += 6 * e.numerator;
  }
  return cls;
}

PicardClass picard_class_mbar(long weight, long twist) {
  PicardClass out;
  out.mbar_class = Integer(weight) + 12 * Integer(twist);
  long r = weight % 12;
  if (r < 0) r += 12;
  out.m11_class_mod12 = r;
  return out;
}

} // namespace modcurve::orbifold
