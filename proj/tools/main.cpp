// hpolytool: exact combinatorial invariants of Weyl groups and their group
// embeddings -- length polynomials, descent systems, smoothness checks,
// H-polynomials and a finite-field orbit census of the matrix monoid.
//
// Exit codes: 0 success, 1 internal failure, 2 invalid input, 3 not
// combinatorially smooth, 4 enumeration cap exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "hpoly/descent.hpp"
#include "hpoly/errors.hpp"
#include "hpoly/hpolynomial.hpp"
#include "hpoly/intpoly.hpp"
#include "hpoly/json_io.hpp"
#include "hpoly/oracle.hpp"
#include "hpoly/root_system.hpp"
#include "hpoly/smooth.hpp"
#include "hpoly/weyl.hpp"

namespace {

using hpoly::json;

struct Ctx {
  std::string format = "plain";
  bool poincare = false;
  std::string out_path;
  std::string config_path;

  std::string output;
  int exit_code = 0;

  bool latex() const { return format == "latex"; }
  bool is_json() const { return format == "json"; }
  std::string poly(const hpoly::IntPoly& p) const { return p.str(latex()); }
  std::string poly2(const hpoly::IntPoly2& p) const { return p.str(latex()); }
  void emit(json j) { output = j.dump(2) + "\n"; }
};

std::uint64_t parse_positive_u64(const std::string& text, const char* what) {
  if (text.empty())
    throw hpoly::invalid_input_error(std::string(what) +
                                     " must be a positive integer");
  for (char c : text)
    if (c < '0' || c > '9')
      throw hpoly::invalid_input_error(std::string(what) +
                                       " must be a positive integer, got '" +
                                       text + "'");
  try {
    const std::uint64_t v = std::stoull(text);
    if (v == 0)
      throw hpoly::invalid_input_error(std::string(what) + " must be >= 1");
    return v;
  } catch (const std::out_of_range&) {
    throw hpoly::invalid_input_error(std::string(what) + " value '" + text +
                                     "' is out of range");
  }
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Config files are key=value lines; '#' starts a comment. Recognized keys:
//   max_elements=N   raise/lower the enumeration cap
hpoly::EnumLimits resolve_limits(const std::string& config_path) {
  hpoly::EnumLimits limits;
  if (const char* env = std::getenv("HPOLY_MAX_ELEMENTS"))
    limits.max_elements = parse_positive_u64(env, "HPOLY_MAX_ELEMENTS");
  if (!config_path.empty()) {
    std::ifstream in(config_path);
    if (!in)
      throw hpoly::invalid_input_error("cannot read config file '" +
                                       config_path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (std::size_t hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw hpoly::invalid_input_error(
            "config file '" + config_path + "' line " +
            std::to_string(lineno) + ": expected key=value");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key == "max_elements") {
        limits.max_elements = parse_positive_u64(value, "max_elements");
      } else {
        throw hpoly::invalid_input_error("config file '" + config_path +
                                         "' line " + std::to_string(lineno) +
                                         ": unknown key '" + key + "'");
      }
    }
  }
  return limits;
}

hpoly::RootSystem system_for(const std::string& type_str) {
  return hpoly::build_root_system(hpoly::CartanType::parse(type_str));
}

std::string join_words(const std::vector<hpoly::WeylElt>& elts) {
  std::string out;
  for (std::size_t i = 0; i < elts.size(); ++i) {
    if (i) out += ", ";
    out += elts[i].word_str();
  }
  return out;
}

// ----------------------------------------------------------- subcommand runs

void run_length_poly(Ctx& ctx, const std::string& type_str,
                     const std::string& j_str) {
  hpoly::RootSystem rs = system_for(type_str);
  hpoly::NodeSet J = hpoly::parse_node_set(j_str, rs.rank());
  hpoly::IntPoly p =
      hpoly::length_poly(rs, J, resolve_limits(ctx.config_path));
  if (ctx.is_json()) {
    ctx.emit(json{{"type", rs.type().str()},
                  {"J", hpoly::node_set_to_json(J)},
                  {"poly", hpoly::poly_to_json(p)}});
    return;
  }
  ctx.output = "type: " + rs.type().str() + "\nJ: " + hpoly::node_set_str(J) +
               "\nsize: " + p.eval(1).str() + "\nP(t) = " + ctx.poly(p) + "\n";
}

void run_eulerian(Ctx& ctx, int n) {
  hpoly::IntPoly p = hpoly::eulerian(n);
  if (ctx.is_json()) {
    ctx.emit(json{{"n", n}, {"poly", hpoly::poly_to_json(p)}});
    return;
  }
  ctx.output =
      "E_" + std::to_string(n) + "(t) = " + ctx.poly(p) + "\n";
}

void run_permutahedron(Ctx& ctx, int n) {
  hpoly::IntPoly p = hpoly::permutahedron_h(n);
  if (ctx.is_json()) {
    ctx.emit(json{{"n", n}, {"poly", hpoly::poly_to_json(p)}});
    return;
  }
  ctx.output = "n: " + std::to_string(n) + "\nh(t) = " + ctx.poly(p) + "\n";
}

void run_wj(Ctx& ctx, const std::string& type_str, const std::string& j_str) {
  hpoly::RootSystem rs = system_for(type_str);
  hpoly::NodeSet J = hpoly::parse_node_set(j_str, rs.rank());
  hpoly::ParabolicQuotient q =
      hpoly::enumerate_quotient(rs, J, resolve_limits(ctx.config_path));
  if (ctx.is_json()) {
    ctx.emit(hpoly::quotient_to_json(q));
    return;
  }
  std::string out = "type: " + rs.type().str() +
                    "\nJ: " + hpoly::node_set_str(J) +
                    "\nsize: " + std::to_string(q.size()) + "\n";
  for (const hpoly::WeylElt& w : q.elements)
    out += "l=" + std::to_string(w.length()) + ": " + w.word_str() + "\n";
  ctx.output = std::move(out);
}

void run_descent(Ctx& ctx, const std::string& type_str,
                 const std::string& j_str) {
  hpoly::RootSystem rs = system_for(type_str);
  hpoly::NodeSet J = hpoly::parse_node_set(j_str, rs.rank());
  hpoly::DescentSystem ds =
      hpoly::build_descent_system(rs, J, resolve_limits(ctx.config_path));
  hpoly::AugmentedPoset poset = hpoly::nu_stats(ds);
  if (ctx.is_json()) {
    ctx.emit(hpoly::descent_to_json(ds, poset));
    return;
  }
  std::string out = "type: " + rs.type().str() +
                    "\nJ: " + hpoly::node_set_str(J) + "\nreflections: " +
                    std::to_string(ds.reflection_count()) + "\n";
  for (const auto& [s, cls] : ds.classes)
    out += "class s" + std::to_string(s) +
           " (delta=" + std::to_string(ds.delta.at(s)) +
           "): " + join_words(cls) + "\n";
  for (std::size_t i = 0; i < ds.quotient.elements.size(); ++i) {
    const hpoly::WeylElt& w = ds.quotient.elements[i];
    std::string ascents;
    for (const auto& [s, idx] : poset.ascents[i]) {
      if (!ascents.empty()) ascents += ", ";
      ascents += ds.classes.at(s)[static_cast<std::size_t>(idx)].word_str();
    }
    out += "w=" + w.word_str() + ": l=" + std::to_string(w.length()) +
           " nu_plain=" + std::to_string(poset.nu_plain[i]) +
           " nu_weighted=" + std::to_string(poset.nu_weighted[i]) +
           " ascents: " + (ascents.empty() ? "-" : ascents) + "\n";
  }
  if (ds.classes.size() == 2)
    out += "H(t1,t2) = " + ctx.poly2(hpoly::two_variable_euler(ds)) + "\n";
  ctx.output = std::move(out);
}

void run_smooth_check(Ctx& ctx, const std::string& type_str,
                      const std::string& j_str) {
  hpoly::RootSystem rs = system_for(type_str);
  hpoly::NodeSet J = hpoly::parse_node_set(j_str, rs.rank());
  hpoly::SmoothnessVerdict verdict = hpoly::is_combinatorially_smooth(rs, J);
  if (ctx.is_json()) {
    json j{{"type", rs.type().str()}, {"J", hpoly::node_set_to_json(J)}};
    json v = hpoly::verdict_to_json(verdict);
    for (auto& [key, value] : v.items()) j[key] = std::move(value);
    ctx.emit(std::move(j));
  } else {
    ctx.output = "type: " + rs.type().str() +
                 "\nJ: " + hpoly::node_set_str(J) + "\n" + verdict.summary() +
                 "\n";
  }
  ctx.exit_code = verdict.smooth ? 0 : 3;
}

void run_smooth_list(Ctx& ctx, const std::string& type_str) {
  hpoly::RootSystem rs = system_for(type_str);
  std::vector<hpoly::NodeSet> subsets = hpoly::enumerate_smooth_subsets(rs);
  if (ctx.is_json()) {
    json arr = json::array();
    for (const hpoly::NodeSet& J : subsets)
      arr.push_back(hpoly::node_set_to_json(J));
    ctx.emit(json{{"type", rs.type().str()},
                  {"count", static_cast<std::uint64_t>(subsets.size())},
                  {"subsets", std::move(arr)}});
    return;
  }
  std::string out = "type: " + rs.type().str() +
                    "\ncount: " + std::to_string(subsets.size()) + "\n";
  for (const hpoly::NodeSet& J : subsets) out += hpoly::node_set_str(J) + "\n";
  ctx.output = std::move(out);
}

void run_toric(Ctx& ctx, const std::string& type_str,
               const std::string& j_str) {
  hpoly::RootSystem rs = system_for(type_str);
  hpoly::NodeSet J = hpoly::parse_node_set(j_str, rs.rank());
  hpoly::IntPoly p =
      hpoly::toric_poincare(rs, J, resolve_limits(ctx.config_path));
  if (ctx.is_json()) {
    ctx.emit(json{{"type", rs.type().str()},
                  {"J", hpoly::node_set_to_json(J)},
                  {"poly", hpoly::poly_to_json(p)}});
    return;
  }
  ctx.output = "type: " + rs.type().str() + "\nJ: " + hpoly::node_set_str(J) +
               "\nP(t) = " + ctx.poly(p) + "\n";
}

void render_report(Ctx& ctx, json meta,
                   const std::vector<std::pair<std::string, std::string>>&
                       plain_meta,
                   const hpoly::HPolyReport& rep) {
  if (ctx.is_json()) {
    json body = hpoly::report_to_json(rep);
    for (auto& [key, value] : body.items()) meta[key] = std::move(value);
    ctx.emit(std::move(meta));
    return;
  }
  std::string out;
  for (const auto& [key, value] : plain_meta) out += key + ": " + value + "\n";
  out += "H(t) = " + ctx.poly(rep.h) + "\n";
  if (ctx.poincare) out += "poincare(t) = " + ctx.poly(rep.poincare) + "\n";
  out += "factor_cells(t) = " + ctx.poly(rep.factor_cells) + "\n";
  out += "factor_base(t) = " + ctx.poly(rep.factor_base) + "\n";
  out += "euler_characteristic: " + rep.euler_characteristic.str() + "\n";
  out += "dimension: " + std::to_string(rep.dimension) + "\n";
  ctx.output = std::move(out);
}

void run_hpoly_simple(Ctx& ctx, const std::string& type_str,
                      const std::string& j_str) {
  hpoly::RootSystem rs = system_for(type_str);
  hpoly::NodeSet J = hpoly::parse_node_set(j_str, rs.rank());
  hpoly::HPolyReport rep =
      hpoly::simple_embedding_h(rs, J, resolve_limits(ctx.config_path));
  render_report(ctx,
                json{{"formula", "simple"},
                     {"type", rs.type().str()},
                     {"J", hpoly::node_set_to_json(J)}},
                {{"formula", "simple"},
                 {"type", rs.type().str()},
                 {"J", hpoly::node_set_str(J)}},
                rep);
}

void run_hpoly_wonderful(Ctx& ctx, const std::string& type_str) {
  hpoly::RootSystem rs = system_for(type_str);
  hpoly::HPolyReport rep =
      hpoly::wonderful_h(rs, resolve_limits(ctx.config_path));
  render_report(ctx, json{{"formula", "wonderful"}, {"type", rs.type().str()}},
                {{"formula", "wonderful"}, {"type", rs.type().str()}}, rep);
}

void run_hpoly_rank2(Ctx& ctx, const std::string& case_str, int n_long,
                     int k) {
  hpoly::RankTwoCase c = case_str == "I"    ? hpoly::RankTwoCase::I
                         : case_str == "II" ? hpoly::RankTwoCase::II
                                            : hpoly::RankTwoCase::III;
  hpoly::HPolyReport rep = hpoly::rank2_h(c, n_long, k);
  const std::string type = hpoly::rank_two_type(n_long).str();
  render_report(ctx,
                json{{"formula", "rank-two"},
                     {"case", case_str},
                     {"longest_length", n_long},
                     {"closed_orbits", k},
                     {"type", type}},
                {{"formula", "rank-two"},
                 {"case", case_str},
                 {"longest_length", std::to_string(n_long)},
                 {"closed_orbits", std::to_string(k)},
                 {"type", type}},
                rep);
}

void run_oracle_mn(Ctx& ctx, int n, std::vector<int> qs) {
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  const bool full = qs == std::vector<int>{2, 3};
  if (full) {
    hpoly::MonoidOrbitReport report = hpoly::monoid_orbits(n);
    if (ctx.is_json()) {
      ctx.emit(hpoly::orbit_report_to_json(report));
      return;
    }
    std::string out = "n: " + std::to_string(n) + "\nrepresentatives: " +
                      std::to_string(report.profiles.size()) + "\n";
    for (const hpoly::OrbitProfile& p : report.profiles) {
      out += p.rep.str() + " rank=" + std::to_string(p.rank);
      for (const auto& [q, size] : p.orbit_size)
        out += " size(q=" + std::to_string(q) +
               ")=" + std::to_string(size);
      out += " (a,b)=(" + std::to_string(p.a) + "," + std::to_string(p.b) +
             ")\n";
    }
    out += "H(t) = " + ctx.poly(report.h) + "\n";
    ctx.output = std::move(out);
    return;
  }
  std::vector<hpoly::OrbitProfile> profiles = hpoly::orbit_profiles(n, qs);
  if (ctx.is_json()) {
    ctx.emit(hpoly::orbit_profiles_to_json(n, profiles));
    return;
  }
  std::string out = "n: " + std::to_string(n) + "\nrepresentatives: " +
                    std::to_string(profiles.size()) + "\n";
  for (const hpoly::OrbitProfile& p : profiles) {
    out += p.rep.str() + " rank=" + std::to_string(p.rank);
    for (const auto& [q, size] : p.orbit_size)
      out += " size(q=" + std::to_string(q) + ")=" + std::to_string(size);
    out += "\n";
  }
  ctx.output = std::move(out);
}

void write_output(const Ctx& ctx) {
  if (ctx.out_path.empty()) {
    std::cout << ctx.output;
    return;
  }
  std::ofstream f(ctx.out_path, std::ios::binary);
  if (!f)
    throw hpoly::invalid_input_error("cannot open output file '" +
                                     ctx.out_path + "'");
  f << ctx.output;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact combinatorics of Weyl groups and their group embeddings:\n"
      "length polynomials, descent systems, smoothness classification,\n"
      "H-polynomials and a finite-field orbit census of the matrix monoid."};
  app.name("hpolytool");
  app.require_subcommand(1);

  Ctx ctx;
  app.add_option("--format", ctx.format, "Output format")
      ->check(CLI::IsMember({"plain", "latex", "json"}))
      ->capture_default_str();
  app.add_flag("--poincare", ctx.poincare,
               "Also print the Poincare polynomial H(t^2)");
  app.add_option("--out", ctx.out_path, "Write output to a file");
  app.add_option("--config", ctx.config_path,
                 "key=value config file (max_elements=N)");

  std::string lp_type, lp_j;
  CLI::App* lp = app.add_subcommand(
      "length-poly", "Length generating polynomial of W or W^J");
  lp->fallthrough();
  lp->add_option("--type", lp_type, "Cartan type, e.g. A3")->required();
  lp->add_option("--j", lp_j, "Subset J, e.g. s1,s3");
  lp->callback([&] { run_length_poly(ctx, lp_type, lp_j); });

  int eu_n = 0;
  CLI::App* eu = app.add_subcommand(
      "eulerian", "Ascent generating polynomial of the permutations of 1..n");
  eu->fallthrough();
  eu->add_option("--n", eu_n, "Number of letters")->required();
  eu->callback([&] { run_eulerian(ctx, eu_n); });

  int ph_n = 0;
  CLI::App* ph = app.add_subcommand("permutahedron-h",
                                    "h-polynomial of the (n-1)-permutahedron");
  ph->fallthrough();
  ph->add_option("--n", ph_n, "Number of letters")->required();
  ph->callback([&] { run_permutahedron(ctx, ph_n); });

  std::string wj_type, wj_j;
  CLI::App* wj = app.add_subcommand(
      "wj", "Minimal coset representatives W^J with lengths");
  wj->fallthrough();
  wj->add_option("--type", wj_type, "Cartan type, e.g. A3")->required();
  wj->add_option("--j", wj_j, "Subset J, e.g. s1,s3");
  wj->callback([&] { run_wj(ctx, wj_type, wj_j); });

  std::string de_type, de_j;
  CLI::App* de = app.add_subcommand(
      "descent", "Descent system of (W, S) relative to J");
  de->fallthrough();
  de->add_option("--type", de_type, "Cartan type, e.g. A3")->required();
  de->add_option("--j", de_j, "Subset J, e.g. s2,s3");
  de->callback([&] { run_descent(ctx, de_type, de_j); });

  std::string sc_type, sc_j;
  CLI::App* sc = app.add_subcommand(
      "smooth-check", "Check whether J is combinatorially smooth (exit 3 "
                      "when it is not)");
  sc->fallthrough();
  sc->add_option("--type", sc_type, "Cartan type, e.g. E8")->required();
  sc->add_option("--j", sc_j, "Subset J, e.g. s1,s2");
  sc->callback([&] { run_smooth_check(ctx, sc_type, sc_j); });

  std::string sl_type;
  CLI::App* sl = app.add_subcommand(
      "smooth-list", "All combinatorially smooth subsets of the diagram");
  sl->fallthrough();
  sl->add_option("--type", sl_type, "Cartan type, e.g. E7")->required();
  sl->callback([&] { run_smooth_list(ctx, sl_type); });

  std::string tp_type, tp_j;
  CLI::App* tp = app.add_subcommand(
      "toric-poincare",
      "Poincare polynomial of the torus orbit closure attached to J");
  tp->fallthrough();
  tp->add_option("--type", tp_type, "Cartan type, e.g. A3")->required();
  tp->add_option("--j", tp_j, "Subset J, e.g. s3")->capture_default_str();
  tp->callback([&] { run_toric(ctx, tp_type, tp_j); });

  CLI::App* hp = app.add_subcommand("hpoly", "H-polynomial of an embedding");
  hp->fallthrough();
  hp->require_subcommand(1);

  std::string hs_type, hs_j;
  CLI::App* hs = hp->add_subcommand("simple", "Simple group embedding");
  hs->fallthrough();
  hs->add_option("--type", hs_type, "Cartan type, e.g. A2")->required();
  hs->add_option("--j", hs_j, "Combinatorially smooth subset J");
  hs->callback([&] { run_hpoly_simple(ctx, hs_type, hs_j); });

  std::string hw_type;
  CLI::App* hw = hp->add_subcommand("wonderful", "Wonderful compactification");
  hw->fallthrough();
  hw->add_option("--type", hw_type, "Cartan type, e.g. A2")->required();
  hw->callback([&] { run_hpoly_wonderful(ctx, hw_type); });

  std::string r2_case;
  int r2_n = 0, r2_k = 0;
  CLI::App* r2 = hp->add_subcommand(
      "rank2", "Closed forms for embeddings of a rank-two group");
  r2->fallthrough();
  r2->add_option("--case", r2_case, "Fan shape: I, II or III")
      ->check(CLI::IsMember({"I", "II", "III"}))
      ->required();
  r2->add_option("--n-long", r2_n, "Longest length: 3, 4 or 6")->required();
  r2->add_option("--k", r2_k, "Number of closed orbits")->required();
  r2->callback([&] { run_hpoly_rank2(ctx, r2_case, r2_n, r2_k); });

  CLI::App* oc = app.add_subcommand(
      "oracle", "Finite-field brute-force cross-checks");
  oc->fallthrough();
  oc->require_subcommand(1);

  int mn_n = 0;
  std::vector<int> mn_q{2, 3};
  CLI::App* mn = oc->add_subcommand(
      "mn", "Two-sided triangular-group orbit census of the n x n matrices");
  mn->fallthrough();
  mn->add_option("--n", mn_n, "Matrix size")->required();
  mn->add_option("--q", mn_q, "Field sizes (2 and/or 3)")
      ->delimiter(',')
      ->capture_default_str();
  mn->callback([&] { run_oracle_mn(ctx, mn_n, mn_q); });

  try {
    app.parse(argc, argv);
    write_output(ctx);
    return ctx.exit_code;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const hpoly::invalid_input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const hpoly::not_smooth_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hpoly::delta_undefined_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hpoly::cap_exceeded_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const hpoly::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
