// Command-line surface of the library: exact q-expansions, SL2(Z) reduction
// and words, analytic evaluation, curve arithmetic, level data, orbifold
// Euler characteristics, Picard classes, and an SVG tiling of the
// fundamental domain.

#include "modcurve/analytic.hpp"
#include "modcurve/cubic.hpp"
#include "modcurve/lattice.hpp"
#include "modcurve/levels.hpp"
#include "modcurve/modforms.hpp"
#include "modcurve/numeric.hpp"
#include "modcurve/orbifold.hpp"
#include "modcurve/qseries.hpp"
#include "modcurve/sl2z.hpp"
#include "modcurve/tiling.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace modcurve;
using nlohmann::json;

std::string g_format = "text";

bool json_mode() { return g_format == "json"; }

long default_terms() {
  if (const char* env = std::getenv("MODCURVE_TERMS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return v;
    } catch (...) {
    }
    throw std::invalid_argument("MODCURVE_TERMS must be a positive integer");
  }
  return 64;
}

json complex_json(const Complex& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json matrix_json(const sl2z::UnimodularMatrix& g) {
  return json{{"a", g.a.get_str()}, {"b", g.b.get_str()}, {"c", g.c.get_str()}, {"d", g.d.get_str()}};
}

// Integers that fit a JSON number stay numeric; larger ones degrade to strings.
json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return json(n.get_si());
  return json(n.get_str());
}

void emit(const json& payload, const std::string& text) {
  if (json_mode())
    std::cout << payload.dump() << "\n";
  else
    std::cout << text << "\n";
}

Integer parse_integer(const std::string& s) {
  try {
    return Integer(s);
  } catch (...) {
    throw CLI::ValidationError("expected an integer, got '" + s + "'");
  }
}

std::vector<Integer> parse_integer_list(const std::string& s) {
  std::vector<Integer> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_integer(item));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string rational_text(const Rational& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : rational_to_string(r);
}

void cmd_reduce(const std::string& tau_text) {
  const sl2z::TauPoint tau{complex_from_string(tau_text)};
  const auto red = sl2z::reduce_to_fundamental_domain(tau);
  emit(json{{"tau", complex_json(red.tau.value)}, {"gamma", matrix_json(red.gamma)}},
       "tau* = " + complex_to_string(red.tau.value) + "\ngamma = " + red.gamma.to_string());
}

void cmd_word(const std::string& matrix_text) {
  const auto entries = parse_integer_list(matrix_text);
  if (entries.size() != 4)
    throw CLI::ValidationError("--matrix expects four comma-separated integers a,b,c,d");
  sl2z::UnimodularMatrix g;
  try {
    g = sl2z::UnimodularMatrix(entries[0], entries[1], entries[2], entries[3]);
  } catch (const std::invalid_argument& e) {
    throw std::domain_error(e.what());
  }
  const auto word = sl2z::word_decompose(g);
  json tokens = json::array();
  std::string text;
  for (auto tok : word.tokens) {
    tokens.push_back(sl2z::generator_name(tok));
    if (!text.empty()) text += " ";
    text += sl2z::generator_name(tok);
  }
  if (text.empty()) text = "I";
  emit(json{{"tokens", tokens}, {"sign", word.sign}, {"length", word.tokens.size()}},
       "sign = " + std::string(word.sign > 0 ? "+1" : "-1") + "\nword = " + text);
}

void cmd_qexp(const std::string& which, long terms) {
  qseries::LaurentSeriesQ s = [&] {
    if (which == "e4") return qseries::eisenstein_normalized(4, terms);
    if (which == "e6") return qseries::eisenstein_normalized(6, terms);
    if (which == "delta") return qseries::delta_normalized(terms);
    if (which == "j") return qseries::j_series(terms);
    throw CLI::ValidationError("series must be one of e4, e6, delta, j");
  }();
  if (json_mode())
    std::cout << qseries::series_to_json(s) << "\n";
  else
    std::cout << s.to_string() << "\n";
}

void cmd_eval(const std::string& tau_text) {
  const sl2z::TauPoint tau{complex_from_string(tau_text)};
  const auto mv = analytic::eval_modular(tau);
  std::ostringstream text;
  text << "E4    = " << complex_to_string(mv.E4) << "\n"
       << "E6    = " << complex_to_string(mv.E6) << "\n"
       << "g2    = " << complex_to_string(mv.g2) << "\n"
       << "g3    = " << complex_to_string(mv.g3) << "\n"
       << "delta = " << complex_to_string(mv.delta) << "\n"
       << "j     = " << complex_to_string(mv.j);
  emit(json{{"E4", complex_json(mv.E4)},
            {"E6", complex_json(mv.E6)},
            {"g2", complex_json(mv.g2)},
            {"g3", complex_json(mv.g3)},
            {"delta", complex_json(mv.delta)},
            {"j", complex_json(mv.j)}},
       text.str());
}

void cmd_jinv(const std::string& value_text) {
  const auto tau = analytic::invert_j(complex_from_string(value_text));
  emit(json{{"tau", complex_json(tau.value)}}, "tau = " + complex_to_string(tau.value));
}

void cmd_curve_j(const std::string& a, const std::string& b) {
  const cubic::WeierstrassCurve C{complex_from_string(a), complex_from_string(b)};
  const Complex j = cubic::j_invariant(C);
  const Complex D = cubic::discriminant(C);
  const int aut = cubic::automorphism_order(C);
  emit(json{{"j", complex_json(j)}, {"discriminant", complex_json(D)}, {"automorphisms", aut}},
       "j = " + complex_to_string(j) + "\ndiscriminant = " + complex_to_string(D) +
           "\nautomorphisms = " + std::to_string(aut));
}

void cmd_curve_iso(const std::string& a1, const std::string& b1, const std::string& a2,
                   const std::string& b2) {
  const cubic::WeierstrassCurve C1{complex_from_string(a1), complex_from_string(b1)};
  const cubic::WeierstrassCurve C2{complex_from_string(a2), complex_from_string(b2)};
  const auto u = cubic::isomorphic(C1, C2);
  if (u)
    emit(json{{"isomorphic", true}, {"u", complex_json(*u)}},
         "isomorphic: yes\nu = " + complex_to_string(*u));
  else
    emit(json{{"isomorphic", false}}, "isomorphic: no");
}

void cmd_curve_tau(const std::string& a, const std::string& b) {
  const cubic::WeierstrassCurve C{complex_from_string(a), complex_from_string(b)};
  const auto ts = cubic::tau_from_curve(C);
  emit(json{{"tau", complex_json(ts.tau.value)}, {"lambda", complex_json(ts.lambda)}},
       "tau = " + complex_to_string(ts.tau.value) + "\nlambda = " + complex_to_string(ts.lambda));
}

void cmd_level(long m) {
  const auto s = levels::level_summary(m);
  emit(json{{"m", s.m},
            {"d", integer_json(s.d)},
            {"cusps", integer_json(s.cusps)},
            {"chi_open", rational_to_string(s.chi_open)},
            {"chi_compact", rational_to_string(s.chi_compact)},
            {"genus", integer_json(s.genus)}},
       "m = " + std::to_string(s.m) + "\n|SL2(Z/m)| = " + s.d.get_str() +
           "\ncusps = " + s.cusps.get_str() + "\nchi_open = " + rational_text(s.chi_open) +
           "\nchi_compact = " + rational_text(s.chi_compact) + "\ngenus = " + s.genus.get_str());
}

void cmd_cusps(long m) {
  const long n = levels::enumerate_cusps(m);
  emit(json{{"m", m}, {"cusps", n}}, "m = " + std::to_string(m) + "\ncusps = " + std::to_string(n));
}

void cmd_euler_strata(const std::string& path) {
  const auto strata = orbifold::strata_from_json(read_file(path));
  const Rational chi = orbifold::stratified_euler(strata);
  emit(json{{"chi", rational_to_string(chi)}}, "chi = " + rational_text(chi));
}

void cmd_euler_simplicial(const std::string& path) {
  const auto K = orbifold::complex_from_json(read_file(path));
  const Rational chi = orbifold::simplicial_euler(K);
  emit(json{{"chi", rational_to_string(chi)}}, "chi = " + rational_text(chi));
}

void cmd_picard(long weight, long twist) {
  const auto cls = orbifold::picard_class_mbar(weight, twist);
  emit(json{{"mbar_class", integer_json(cls.mbar_class)},
            {"m11_class_mod12", cls.m11_class_mod12}},
       "class in Pic(Mbar) = " + cls.mbar_class.get_str() +
           " (in units of the Hodge class)\nrestriction to Pic(M) = " +
           std::to_string(cls.m11_class_mod12) + " mod 12");
}

void cmd_valence(long weight, const std::string& orders_text) {
  const auto values = parse_integer_list(orders_text);
  if (values.size() < 3)
    throw CLI::ValidationError("--orders expects at least nu_i,nu_rho,nu_infty");
  modforms::OrderVector orders;
  orders.nu_i = values[0];
  orders.nu_rho = values[1];
  orders.nu_infty = values[2];
  for (size_t i = 3; i < values.size(); ++i)
    orders.nu_other.emplace_back("P" + std::to_string(i - 2), values[i]);
  const bool ok = modforms::valence_check(weight, orders);
  emit(json{{"weight", weight}, {"valid", ok}},
       std::string("valence formula ") + (ok ? "holds" : "fails"));
}

void cmd_svg_domain(int depth) { std::cout << tiling::svg_domain(depth); }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"modcurve: arithmetic of the moduli of elliptic curves"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", g_format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json", "svg"}))
      ->capture_default_str();

  std::string tau_text, value_text, matrix_text, which_series, a1, b1, a2, b2, input_path,
      orders_text;
  long m = 0, terms = 0, weight = 0, twist = 0;
  int depth = 3;

  auto* reduce = app.add_subcommand("reduce", "reduce tau into the fundamental domain");
  reduce->add_option("--tau", tau_text, "point of the upper half plane, a+bi")->required();
  reduce->callback([&] { cmd_reduce(tau_text); });

  auto* word = app.add_subcommand("word", "decompose a matrix into S, T generators");
  word->add_option("--matrix", matrix_text, "entries a,b,c,d")->required();
  word->callback([&] { cmd_word(matrix_text); });

  auto* qexp = app.add_subcommand("qexp", "exact q-expansions: e4, e6, delta, j");
  qexp->add_option("series", which_series, "one of e4, e6, delta, j")->required();
  qexp->add_option("--terms", terms, "truncation order (default 64 or MODCURVE_TERMS)");
  qexp->callback([&] { cmd_qexp(which_series, qexp->count("--terms") ? terms : default_terms()); });

  auto* eval = app.add_subcommand("eval", "evaluate E4, E6, g2, g3, delta, j at tau");
  eval->add_option("--tau", tau_text)->required();
  eval->callback([&] { cmd_eval(tau_text); });

  auto* jinv = app.add_subcommand("jinv", "invert the j function");
  jinv->add_option("--value", value_text, "target j value, a+bi")->required();
  jinv->callback([&] { cmd_jinv(value_text); });

  auto* curve = app.add_subcommand("curve", "Weierstrass cubic utilities");
  curve->require_subcommand(1);
  auto* curve_j = curve->add_subcommand("j", "j-invariant, discriminant, automorphisms");
  curve_j->add_option("--a", a1)->required();
  curve_j->add_option("--b", b1)->required();
  curve_j->callback([&] { cmd_curve_j(a1, b1); });
  auto* curve_iso = curve->add_subcommand("iso", "isomorphism test under the scaling action");
  curve_iso->add_option("--a1", a1)->required();
  curve_iso->add_option("--b1", b1)->required();
  curve_iso->add_option("--a2", a2)->required();
  curve_iso->add_option("--b2", b2)->required();
  curve_iso->callback([&] { cmd_curve_iso(a1, b1, a2, b2); });
  auto* curve_tau = curve->add_subcommand("tau", "recover tau and the scale from (a, b)");
  curve_tau->add_option("--a", a1)->required();
  curve_tau->add_option("--b", b1)->required();
  curve_tau->callback([&] { cmd_curve_tau(a1, b1); });

  auto* level = app.add_subcommand("level", "level-m curve data");
  level->add_option("--m", m)->required();
  level->callback([&] { cmd_level(m); });

  auto* cusps = app.add_subcommand("cusps", "brute-force cusp count (3 <= m <= 12)");
  cusps->add_option("--m", m)->required();
  cusps->callback([&] { cmd_cusps(m); });

  auto* euler = app.add_subcommand("euler", "orbifold Euler characteristics");
  euler->require_subcommand(1);
  auto* euler_strata = euler->add_subcommand("strata", "weighted sum over strata");
  euler_strata->add_option("--input", input_path, "JSON: [{\"euler\": -1, \"aut\": 2}, ...]")
      ->required();
  euler_strata->callback([&] { cmd_euler_strata(input_path); });
  auto* euler_simp = euler->add_subcommand("simplicial", "equivariant simplicial complex");
  euler_simp
      ->add_option("--input", input_path,
                   "JSON: {\"vertices\": n, \"simplices\": [[...], ...], \"generators\": [...]}")
      ->required();
  euler_simp->callback([&] { cmd_euler_simplicial(input_path); });

  auto* picard = app.add_subcommand("picard", "class of L_k(d*infinity) in the Picard groups");
  picard->add_option("--weight", weight)->required();
  picard->add_option("--twist", twist)->capture_default_str();
  picard->callback([&] { cmd_picard(weight, twist); });

  auto* valence = app.add_subcommand("valence", "check the order-sum (valence) formula");
  valence->add_option("--weight", weight)->required();
  valence->add_option("--orders", orders_text, "nu_i,nu_rho,nu_infty[,further points]")->required();
  valence->callback([&] { cmd_valence(weight, orders_text); });

  auto* svg = app.add_subcommand("svg-domain", "SVG tiling of the fundamental domain");
  svg->add_option("--depth", depth, "maximum word length in S, T")->capture_default_str();
  svg->callback([&] { cmd_svg_domain(depth); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    // Domain errors: singular curves, out-of-range levels, divergence guards.
    if (json_mode())
      std::cout << json{{"error", e.what()}}.dump() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
