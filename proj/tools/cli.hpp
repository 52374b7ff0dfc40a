#pragma once

// Command-line front end. `run` is the whole program; main() only forwards
// argv so the acceptance suite can drive commands in-process.

#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "symplie/symplie.hpp"

namespace symplie::cli {

enum ExitCode : int { kOk = 0, kValidationFailure = 1, kUsage = 2 };

/// Deterministic command report. nlohmann objects keep keys sorted.
struct Report {
  std::vector<std::string> command;
  std::string input_digest;
  json findings = json::object();
  json witnesses = json::object();

  [[nodiscard]] json to_json() const {
    return {{"command", command}, {"input_digest", input_digest}, {"findings", findings}, {"witnesses", witnesses}};
  }

  void print(std::ostream& out, bool as_json) const {
    if (as_json) {
      out << to_json().dump(2) << '\n';
      return;
    }
    std::string cmd;
    for (const auto& c : command) cmd += (cmd.empty() ? "" : " ") + c;
    out << "command: " << cmd << '\n' << "input_digest: " << input_digest << '\n';
    for (const auto& [k, v] : findings.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    for (const auto& [k, v] : witnesses.items()) out << "witness " << k << ": " << v.dump() << '\n';
  }
};

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream ss;
  for (unsigned i = 0; i < len; ++i) ss << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return "sha256:" + ss.str();
}

struct Input {
  std::string text;
  AlgebraSpec spec;
};

/// A FILE argument is a path; when no such file exists, the basename without
/// ".json" is looked up in $SYMPLIE_CATALOG_DIR and then in the built-in
/// catalog.
inline Input resolve_input(const std::string& arg) {
  namespace fs = std::filesystem;
  Input in;
  if (fs::exists(arg)) {
    in.text = read_file(arg);
  } else {
    std::string name = fs::path(arg).filename().string();
    if (name.size() > 5 && name.ends_with(".json")) name.resize(name.size() - 5);
    const char* dir = std::getenv("SYMPLIE_CATALOG_DIR");
    if (dir != nullptr && fs::exists(fs::path(dir) / (name + ".json"))) {
      in.text = read_file((fs::path(dir) / (name + ".json")).string());
    } else if (auto entry = catalog_entry(name)) {
      in.text = symplie::to_json(spec_of(*entry)).dump(2) + "\n";
    } else {
      throw Error(ErrorKind::ParseError, "no such file or catalog entry: " + arg);
    }
  }
  in.spec = parse_spec_text(in.text);
  return in;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline Vector parse_vector(const std::string& s, std::size_t expected, const std::string& what) {
  Vector v;
  if (!s.empty())
    for (const auto& part : split(s, ',')) {
      auto r = Rational::parse(part);
      if (!r) throw Error(ErrorKind::ParseError, what + ": invalid rational \"" + part + "\"");
      v.push_back(*r);
    }
  if (v.size() != expected)
    throw Error(ErrorKind::ParseError, what + ": expected " + std::to_string(expected) + " entries, got " + std::to_string(v.size()));
  return v;
}

/// "nilblock", "zero", "identity", or rows "a,b;c,d".
inline Matrix parse_matrix(const std::string& s, std::size_t n, const std::string& what) {
  if (s == "nilblock") return nilblock(n);
  if (s == "zero") return Matrix(n, n);
  if (s == "identity" || s == "I") return Matrix::identity(n);
  auto rows = split(s, ';');
  if (rows.size() != n) throw Error(ErrorKind::ParseError, what + ": expected " + std::to_string(n) + " rows");
  std::vector<Vector> vs;
  for (const auto& r : rows) vs.push_back(parse_vector(r, n, what));
  return Matrix::from_rows(vs, n);
}

/// "x;T" where x is comma-separated and T is "I" or n rows separated by ';'.
inline AffGroupElement parse_element(const std::string& s, std::size_t n) {
  auto parts = split(s, ';');
  if (parts.empty()) throw Error(ErrorKind::ParseError, "--el: expected x;T");
  AffGroupElement el;
  el.x = parse_vector(parts[0], n, "--el x");
  std::string rest;
  for (std::size_t i = 1; i < parts.size(); ++i) rest += (i > 1 ? ";" : "") + parts[i];
  el.T = parse_matrix(rest, n, "--el T");
  return el;
}

inline json structure_json(const SymplecticStructure& s) { return symplie::to_json(s); }

inline json step_json(const ReductionStep& step) {
  json j{{"mode", std::string(to_string(step.mode))},
         {"ideal", symplie::to_json(step.iso_basis)},
         {"orthogonal", symplie::to_json(step.orth_basis)},
         {"kernel", symplie::to_json(step.kernel_basis)},
         {"reduced", structure_json(step.reduced)},
         {"projection", symplie::to_json(step.projection)},
         {"dim_before", step.ambient.dim()},
         {"dim_after", step.reduced.dim()}};
  json lift = json::array();
  for (const auto& v : step.lift) lift.push_back(symplie::to_json(v));
  j["lift"] = lift;
  if (step.ideal) j["ideal_structure"] = structure_json(*step.ideal);
  return j;
}

inline json functional_json(const AffFunctional& a) {
  return {{"n", a.n}, {"g", symplie::to_json(a.g)}, {"M", symplie::to_json(a.M)}};
}

inline SymplecticStructure require_symplectic(const LoadedAlgebra& loaded) {
  if (!std::holds_alternative<SymplecticStructure>(loaded))
    throw Error(ErrorKind::ParseError, "this command needs an \"omega\" entry");
  return std::get<SymplecticStructure>(loaded);
}

inline const LieAlgebra& algebra_of(const LoadedAlgebra& loaded) {
  if (const auto* s = std::get_if<SymplecticStructure>(&loaded)) return s->algebra();
  return std::get<LieAlgebra>(loaded);
}

inline std::vector<std::size_t> parse_indices(const std::string& s) {
  std::vector<std::size_t> out;
  if (s.empty()) return out;
  for (const auto& p : split(s, ',')) {
    if (p.empty() || !std::all_of(p.begin(), p.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw Error(ErrorKind::ParseError, "--ideal: invalid index \"" + p + "\"");
    out.push_back(std::stoul(p));
  }
  return out;
}

// Commands. Each fills the report and returns an exit code.

inline int cmd_check(const Input& in, Report& r) {
  const AlgebraSpec& spec = in.spec;
  r.findings["dim"] = spec.dim;
  r.findings["has_omega"] = spec.omega.has_value();
  LieAlgebra l;
  try {
    l = to_algebra(spec);
    r.findings["jacobi"] = true;
  } catch (const Error& e) {
    const bool jacobi = e.kind() == ErrorKind::JacobiViolation;
    r.findings[jacobi ? "jacobi" : "structure_constants"] = false;
    r.findings["error"] = std::string(to_string(e.kind()));
    r.witnesses[jacobi ? "jacobi" : "structure_constants"] = symplie::to_json(e.witness());
    return kValidationFailure;
  }
  if (!spec.omega) return kOk;
  const Matrix& om = *spec.omega;
  bool ok = true;
  auto anti = antisymmetry_witness(om);
  r.findings["omega_antisymmetric"] = !anti;
  if (anti) {
    r.witnesses["omega_antisymmetric"] = symplie::to_json(*anti);
    ok = false;
  }
  auto closed = closedness_witness(l, om);
  r.findings["closed"] = !closed;
  if (closed) {
    r.witnesses["closed"] = symplie::to_json(*closed);
    ok = false;
  }
  Subspace rad = kernel(om);
  r.findings["nondegenerate"] = rad.is_zero();
  if (!rad.is_zero()) {
    r.witnesses["nondegenerate"] = symplie::to_json(Witness{{}, rad.basis_vector(0)});
    ok = false;
  }
  r.findings["symplectic"] = ok;
  return ok ? kOk : kValidationFailure;
}

inline int cmd_analyze(const Input& in, Report& r) {
  LoadedAlgebra loaded = load(in.spec);
  const LieAlgebra& l = algebra_of(loaded);
  r.findings["dim"] = l.dim();
  r.findings["center"] = symplie::to_json(center(l));
  r.findings["derived_ideal"] = symplie::to_json(derived_ideal(l));
  json series = json::array();
  for (const auto& c : lower_central_series(l)) series.push_back(c.dim());
  r.findings["lower_central_series_dims"] = series;
  Nilpotency nil = nilpotency(l);
  r.findings["nilpotent"] = nil.nilpotent;
  r.findings["nilindex"] = nil.nilindex ? json(*nil.nilindex) : json(nullptr);
  r.findings["ad_traces"] = symplie::to_json(ad_traces(l));
  r.findings["unimodular"] = is_unimodular(l);
  r.findings["symplectic"] = std::holds_alternative<SymplecticStructure>(loaded);
  if (const auto* s = std::get_if<SymplecticStructure>(&loaded)) {
    LSATable t = lsa_product(*s);  // verified internally; throws on failure
    json table = json::array();
    for (std::size_t i = 0; i < t.dim(); ++i)
      for (std::size_t j = 0; j < t.dim(); ++j) {
        Vector p = t.product_basis(i, j);
        if (!is_zero(p)) table.push_back({{"i", i}, {"j", j}, {"product", symplie::to_json(p)}});
      }
    r.findings["lsa_table"] = table;
    r.findings["lsa_left_symmetric"] = !left_symmetry_witness(t);
    r.findings["lsa_compatible"] = !compatibility_witness(t, l);
  }
  return kOk;
}

inline int cmd_reduce(const Input& in, const std::string& ideal_arg, Report& r) {
  SymplecticStructure s = require_symplectic(load(in.spec));
  std::vector<Vector> gens;
  for (std::size_t i : parse_indices(ideal_arg)) {
    if (i >= s.dim()) throw Error(ErrorKind::ParseError, "--ideal: index " + std::to_string(i) + " out of range");
    gens.push_back(unit_vector(s.dim(), i));
  }
  ReductionStep step = reduce(s, Subspace::span(s.dim(), gens));
  r.findings["step"] = step_json(step);
  return kOk;
}

inline int cmd_chain(const Input& in, std::optional<std::size_t> center_index, Report& r) {
  SymplecticStructure s = require_symplectic(load(in.spec));
  std::vector<ReductionStep> chain;
  if (center_index && s.dim() > 0) {
    Subspace c = center(s.algebra());
    if (*center_index >= c.dim())
      throw Error(ErrorKind::ParseError, "--center-index exceeds the center dimension " + std::to_string(c.dim()));
    chain.push_back(central_reduction(s, c.basis_vector(*center_index)));
    for (auto& st : reduction_chain(chain.back().reduced)) chain.push_back(std::move(st));
  } else {
    chain = reduction_chain(s);
  }
  json steps = json::array();
  json dims = json::array({s.dim()});
  bool nil_ok = true;
  for (const auto& st : chain) {
    json j = step_json(st);
    j["central_element"] = symplie::to_json(st.iso_basis.basis().row(0));
    steps.push_back(j);
    dims.push_back(st.reduced.dim());
    nil_ok = nil_ok && is_nilpotent(st.reduced.algebra());
  }
  r.findings["steps"] = steps;
  r.findings["length"] = chain.size();
  r.findings["dims"] = dims;
  r.findings["final_dim"] = chain.empty() ? s.dim() : chain.back().reduced.dim();
  r.findings["intermediates_nilpotent"] = nil_ok;
  return kOk;
}

inline int cmd_frobenius(const Input& in, Report& r) {
  SymplecticStructure s = require_symplectic(load(in.spec));
  auto alpha = frobenius_solve(s);
  r.findings["frobenius"] = alpha.has_value();
  r.findings["alpha"] = alpha ? symplie::to_json(*alpha) : json("none");
  r.findings["round_trip"] = alpha ? json(coboundary(s.algebra(), *alpha) == s.omega()) : json(nullptr);
  return kOk;
}

inline int cmd_moment(const Input& in, const std::string& x_arg, std::optional<std::size_t> order, Report& r) {
  SymplecticStructure s = require_symplectic(load(in.spec));
  Vector x = parse_vector(x_arg, s.dim(), "--x");
  MomentumSeries m = momentum_cocycle(s, x, order);
  r.findings["covector"] = symplie::to_json(m.value);
  r.findings["last_nonzero_order"] = m.order;
  r.findings["truncated"] = order.has_value();
  return kOk;
}

inline int cmd_aff(const AffFunctional& a, const std::string& action, Report& r) {
  r.findings["n"] = a.n;
  r.findings["functional"] = functional_json(a);
  if (action == "open") {
    Rational d = det(delta_alpha(a));
    r.findings["open"] = !d.is_zero();
    r.findings["det_delta_alpha"] = d.str();
    return kOk;
  }
  if (action == "orientation") {
    r.findings["orientation"] = orientation(a);
    return kOk;
  }
  if (action == "cyclic") {
    r.findings["cyclic_vector"] = symplie::to_json(cyclic_vector(a));
    return kOk;
  }
  if (action == "reduce") {
    ReducedPair rp = reduced_pair(a);
    r.findings["g1"] = symplie::to_json(rp.g1);
    r.findings["M1"] = symplie::to_json(rp.M1);
    r.findings["supplement"] = symplie::to_json(rp.supplement);
    json kb = json::array();
    for (const auto& v : rp.kernel_basis) kb.push_back(symplie::to_json(v));
    r.findings["kernel_basis"] = kb;
    r.findings["next"] = functional_json(rp.next());
    r.findings["trace_identity"] = true;
    return kOk;
  }
  if (action == "split") {
    Splitting sp = orthogonal_splitting(a);
    r.findings["ideal"] = symplie::to_json(sp.ideal);
    r.findings["orthogonal"] = symplie::to_json(sp.orth);
    r.findings["commutant"] = symplie::to_json(sp.commutant);
    r.findings["direct_sum"] = sp.direct_sum;
    r.findings["subalgebras"] = sp.subalgebras;
    r.findings["lsa_ideal"] = sp.lsa_ideal;
    return sp.direct_sum && sp.subalgebras && sp.lsa_ideal ? kOk : kValidationFailure;
  }
  if (action == "lagrangian") {
    DecompositionReport d = lagrangian_pair(a);
    r.findings["cyclic_x"] = symplie::to_json(d.cyclic_x);
    r.findings["B"] = symplie::to_json(d.B);
    r.findings["L"] = symplie::to_json(d.L_sub);
    r.findings["Lprime"] = symplie::to_json(d.Lprime_sub);
    json ks = json::array();
    for (const auto& k : d.K_list) ks.push_back(symplie::to_json(k));
    json cs = json::array();
    for (const auto& c : d.C_list) cs.push_back(symplie::to_json(c));
    json rps = json::array();
    for (const auto& p : d.reduced_pairs) rps.push_back(functional_json(p));
    r.findings["K_list"] = ks;
    r.findings["C_list"] = cs;
    r.findings["reduced_pairs"] = rps;
    json checks{{"L_subalgebra", d.L_subalgebra},         {"Lprime_subalgebra", d.Lprime_subalgebra},
                {"L_lagrangian", d.L_lagrangian},         {"Lprime_lagrangian", d.Lprime_lagrangian},
                {"transversal", d.transversal},           {"K_sum_is_L", d.K_sum_is_L},
                {"C_sum_is_Lprime", d.C_sum_is_Lprime},   {"pieces_abelian", d.pieces_abelian},
                {"pieces_isotropic", d.pieces_isotropic}, {"reductions_match", d.reductions_match}};
    r.findings["checks"] = checks;
    r.findings["verified"] = d.all_verified();
    return d.all_verified() ? kOk : kValidationFailure;
  }
  throw Error(ErrorKind::ParseError, "unknown aff action \"" + action + "\"");
}

inline int cmd_coad(const AffFunctional& a, const AffGroupElement& el, Report& r) {
  AffFunctional image = coadjoint_apply(el, a);
  Vector jh = momentum_translations(a.g, el);
  r.findings["image"] = functional_json(image);
  r.findings["momentum_translations"] = symplie::to_json(jh);
  r.findings["momentum_agrees"] = jh == image.g;
  return jh == image.g ? kOk : kValidationFailure;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on symplectic Lie algebras", "symplie"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string file;

  auto add_file_cmd = [&](const std::string& name, const std::string& desc) {
    auto* sub = app.add_subcommand(name, desc);
    sub->add_option("FILE", file, "algebra spec file or catalog name")->required();
    sub->add_flag("--json", as_json, "emit the JSON report");
    return sub;
  };
  auto* check = add_file_cmd("check", "validate Jacobi, closedness and nondegeneracy");
  auto* analyze = add_file_cmd("analyze", "center, derived ideal, nilpotency, unimodularity, LSA table");
  auto* reduce_cmd = add_file_cmd("reduce", "symplectic reduction by an ideal spanned by basis vectors");
  std::string ideal_arg;
  reduce_cmd->add_option("--ideal", ideal_arg, "comma-separated 0-based basis indices")->required();
  auto* chain = add_file_cmd("chain", "central reduction chain of a nilpotent symplectic algebra");
  std::optional<std::size_t> center_index;
  chain->add_option("--center-index", center_index, "center basis row used at the first step");
  auto* frob = add_file_cmd("frobenius", "solve delta alpha = omega");
  auto* moment = add_file_cmd("moment", "momentum-cocycle series at x");
  std::string x_arg;
  std::optional<std::size_t> order;
  moment->add_option("--x", x_arg, "comma-separated coordinates")->required();
  moment->add_option("--order", order, "truncate after this many terms");

  std::size_t n = 0;
  std::string g_arg;
  std::string m_arg;
  std::string action;
  std::string el_arg;
  auto* aff = app.add_subcommand("aff", "analyses of aff(R^n) with alpha = (g, M)");
  aff->add_option("N", n)->required()->check(CLI::PositiveNumber);
  aff->add_option("--g", g_arg, "comma-separated covector")->required();
  aff->add_option("--M", m_arg, "rows a,b;c,d or nilblock|zero|identity")->required();
  aff->add_option("ACTION", action)->required()->check(
      CLI::IsMember({"open", "orientation", "cyclic", "reduce", "split", "lagrangian"}));
  aff->add_flag("--json", as_json, "emit the JSON report");
  auto* coad = app.add_subcommand("coad", "coadjoint action on aff(R^n)* and the translation momentum");
  coad->add_option("N", n)->required()->check(CLI::PositiveNumber);
  coad->add_option("--g", g_arg, "comma-separated covector")->required();
  coad->add_option("--M", m_arg, "rows a,b;c,d or nilblock|zero|identity")->required();
  coad->add_option("--el", el_arg, "group element x;T (T rows separated by ';' or I)")->required();
  coad->add_flag("--json", as_json, "emit the JSON report");
  auto* catalog = app.add_subcommand("catalog", "list built-in examples or emit one as a spec file");
  std::string name;
  catalog->add_option("NAME", name);
  catalog->add_flag("--json", as_json, "emit the JSON report when listing");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Report report;
  report.command.push_back("symplie");
  report.command.insert(report.command.end(), args.begin(), args.end());
  try {
    if (catalog->parsed()) {
      if (name.empty()) {
        auto names = catalog_names();
        if (as_json) {
          report.input_digest = sha256_hex("catalog");
          report.findings["entries"] = names;
          report.print(out, true);
        } else {
          for (const auto& nm : names) out << nm << '\n';
        }
        return kOk;
      }
      out << resolve_input(name).text;
      return kOk;
    }
    int code = kOk;
    if (aff->parsed() || coad->parsed()) {
      AffFunctional a{n, parse_vector(g_arg, n, "--g"), parse_matrix(m_arg, n, "--M")};
      std::string canon = "n=" + std::to_string(n) + ";g=" + symplie::to_json(a.g).dump() +
                          ";M=" + symplie::to_json(a.M).dump();
      if (aff->parsed()) {
        report.input_digest = sha256_hex(canon + ";action=" + action);
        code = cmd_aff(a, action, report);
      } else {
        AffGroupElement el = parse_element(el_arg, n);
        report.input_digest = sha256_hex(canon + ";x=" + symplie::to_json(el.x).dump() + ";T=" + symplie::to_json(el.T).dump());
        code = cmd_coad(a, el, report);
      }
    } else {
      Input in = resolve_input(file);
      report.input_digest = sha256_hex(in.text);
      if (check->parsed()) code = cmd_check(in, report);
      else if (analyze->parsed()) code = cmd_analyze(in, report);
      else if (reduce_cmd->parsed()) code = cmd_reduce(in, ideal_arg, report);
      else if (chain->parsed()) code = cmd_chain(in, center_index, report);
      else if (frob->parsed()) code = cmd_frobenius(in, report);
      else if (moment->parsed()) code = cmd_moment(in, x_arg, order, report);
    }
    report.print(out, as_json);
    return code;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) {
      err << "error: " << e.what() << '\n';
      return kUsage;
    }
    report.findings["error"] = std::string(to_string(e.kind()));
    report.findings["message"] = e.what();
    report.witnesses["error"] = symplie::to_json(e.witness());
    report.print(out, as_json);
    return kValidationFailure;
  }
}

}  // namespace symplie::cli
