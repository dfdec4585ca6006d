#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "kleinsig/bounds.hpp"
#include "kleinsig/braid.hpp"
#include "kleinsig/diagram.hpp"
#include "kleinsig/foam.hpp"
#include "kleinsig/generators.hpp"
#include "kleinsig/invariants.hpp"
#include "kleinsig/orientation.hpp"
#include "kleinsig/report.hpp"
#include "kleinsig/transform.hpp"

using namespace kleinsig;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kViolation = 2;

bool use_color() {
  const char* env = std::getenv("KLEINSIG_COLOR");
  std::string mode = env ? env : "auto";
  if (mode == "never") return false;
  if (mode == "always") return true;
  return isatty(fileno(stdout)) != 0;
}

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct Loaded {
  ColoredDiagram d;
  TotalOrientation t;
};

ColoredDiagram load(const std::string& path) {
  ColoredDiagram d = parse(read_all(path));
  if (d.name().empty() && path != "-") d.set_name(path);
  return d;
}

// --orient beats the file's own orient line, which beats all +.
TotalOrientation pick_orientation(const ColoredDiagram& d, const std::string& flag) {
  if (!flag.empty()) return parse_orientation(d, flag);
  if (d.orient_hint()) return parse_orientation(d, *d.orient_hint());
  return default_orientation(d);
}

Loaded load_oriented(const std::string& path, const std::string& flag) {
  Loaded l{load(path), {}};
  l.t = pick_orientation(l.d, flag);
  return l;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
  out << text;
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string str(long x) { return std::to_string(x); }

std::vector<std::string> inv_header() { return {"graph", "V", "mu", "sigma", "beta", "lambda", "sv", "zeta", "ham"}; }

std::vector<std::string> inv_row(const KleinInvariants& v) {
  return {v.name.empty() ? "-" : v.name, str(v.V), str(v.mu), str(v.sigma), str(v.beta), str(v.lambda), str(v.sv),
          str(v.zeta), v.hamiltonian ? "yes" : "no"};
}

ColoredDiagram with_orientation(ColoredDiagram d, const std::optional<TotalOrientation>& t) {
  if (t) d.set_orient_hint(format_orientation(*t));
  return d;
}

// ---- subcommands ----

int cmd_validate(const std::string& path, bool json) {
  ColoredDiagram d = load(path);
  int closed = 0;
  for (const auto& e : d.edges()) closed += e.closed();
  if (json) {
    print_json({{"schema", kSchemaVersion},
                {"valid", true},
                {"name", d.name()},
                {"vertices", d.vertex_count()},
                {"crossings", d.crossing_count()},
                {"arcs", d.arc_count()},
                {"edges", d.edges().size()},
                {"knot_components", closed}});
  } else {
    std::cout << "valid: " << (d.name().empty() ? path : d.name()) << ": " << d.vertex_count() << " vertices, "
              << d.crossing_count() << " crossings, " << d.arc_count() << " arcs, " << d.edges().size() << " edges";
    if (closed) std::cout << " (" << closed << " closed)";
    std::cout << '\n';
  }
  return kOk;
}

int cmd_invariants(const std::string& path, const std::string& orient, bool sweep, unsigned threads, bool json) {
  ColoredDiagram d = load(path);
  if (sweep) {
    if (!orient.empty()) throw std::invalid_argument("--orient and --sweep are exclusive");
    SweepResult s = orientation_sweep(d, threads);
    if (json) {
      print_json(to_json(s));
      return kOk;
    }
    std::vector<std::vector<std::string>> rows{{"orientation", "sigma", "|sigma|", "mu", "beta", "lambda", "sv", "zeta"}};
    for (const auto& r : s.rows)
      rows.push_back({format_orientation(r.orientation).substr(7), str(r.inv.sigma), str(std::labs(r.inv.sigma)),
                      str(r.inv.mu), str(r.inv.beta), str(r.inv.lambda), str(r.inv.sv), str(r.inv.zeta)});
    std::cout << render_table(rows, use_color());
    std::cout << s.rows.size() << " orientations, |sigma| in [" << s.min_abs_sigma << ", " << s.max_abs_sigma << "]\n";
    return kOk;
  }
  TotalOrientation t = pick_orientation(d, orient);
  KleinInvariants inv = compute(d, t);
  if (json) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["orientation"] = format_orientation(t);
    j["invariants"] = to_json(inv);
    print_json(j);
    return kOk;
  }
  std::cout << format_orientation(t) << '\n';
  std::cout << render_table({inv_header(), inv_row(inv)}, use_color());
  std::vector<std::vector<std::string>> pairs{{"pair", "mu", "sigma", "beta", "lambda"}};
  for (ColorPair p : kPairs) {
    const auto& b = inv.pairs[index(p)];
    pairs.push_back({std::string(pair_name(p)), str(b.mu), str(b.sigma), str(b.beta), str(inv.pair_lambda[index(p)])});
  }
  std::cout << render_table(pairs, use_color());
  return kOk;
}

int cmd_bound_theta(const std::string& path, const std::string& orient, bool json) {
  auto l = load_oriented(path, orient);
  KleinInvariants inv = compute(l.d, l.t);
  ThetaBound b = theta_unknotting_bound(inv);
  long mcu = constituent_bound(inv);
  Rational chi = gammasig_chi_upper(inv);
  if (json) {
    print_json({{"schema", kSchemaVersion},
                {"input", to_json(inv)},
                {"theta_bound_uY", rational_json(b.uY)},
                {"theta_bound_u", b.u},
                {"mcu_style_bound", mcu},
                {"gammasig_chi_upper", rational_json(chi)}});
    return kOk;
  }
  std::cout << "u_Y >= " << rational_text(b.uY) << ", u >= " << b.u << '\n';
  std::cout << "constituent bound: u >= " << mcu << '\n';
  std::cout << "chi_orb_4 <= " << rational_text(chi) << '\n';
  return kOk;
}

void print_report_text(const BoundsReport& r) {
  std::cout << render_table({inv_header(), inv_row(r.first), inv_row(r.second)}, use_color());
  std::cout << "left = " << r.left << "  (beta form: " << r.left_beta_form << ")\n";
  std::vector<std::vector<std::string>> rows{{"quantity", "relation", "value"}};
  for (const auto& c : r.chain) rows.push_back({c.quantity, c.relation, rational_text(c.value)});
  std::cout << render_table(rows, use_color());
  if (r.theta) std::cout << "u_Y >= " << rational_text(r.theta->uY) << ", u >= " << r.theta->u << '\n';
  if (r.cost)
    std::cout << "script cost " << rational_text(*r.cost) << ", gap " << rational_text(*r.gap)
              << (r.violation ? "  VIOLATION" : "") << '\n';
  for (const auto& w : r.warnings) std::cout << "warning: " << w << '\n';
}

int cmd_bound_gordian(const std::string& p1, const std::string& p2, const std::string& o1, const std::string& o2,
                      bool json) {
  auto a = load_oriented(p1, o1);
  auto b = load_oriented(p2, o2);
  BoundsReport r = chain_report(compute(a.d, a.t), compute(b.d, b.t), std::nullopt);
  if (json) print_json(to_json(r));
  else {
    std::cout << "d_Y >= " << rational_text(r.gordian) << '\n';
    print_report_text(r);
  }
  return kOk;
}

// Orientation for a script run: --orient, then the script's own, then the file's.
std::optional<TotalOrientation> script_orientation(const ColoredDiagram& d, const ChangeScript& s,
                                                   const std::string& flag) {
  if (!flag.empty()) return parse_orientation(d, flag);
  if (s.orient) return std::nullopt;
  if (d.orient_hint()) return parse_orientation(d, *d.orient_hint());
  return std::nullopt;
}

int cmd_chain(const std::string& p1, const std::string& p2, const std::string& script_path, const std::string& o1,
              const std::string& o2, bool json) {
  ColoredDiagram d1 = load(p1);
  ChangeScript s = parse_script(read_all(script_path));
  auto t_script = script_orientation(d1, s, o1);
  LedgerReport ledger = cobordism_ledger(d1, s, t_script);
  TotalOrientation t1 = t_script ? *t_script : s.orient ? parse_orientation(d1, *s.orient) : pick_orientation(d1, "");
  auto b = load_oriented(p2, o2);
  BoundsReport r = chain_report(compute(d1, t1), compute(b.d, b.t), ledger);
  if (json) print_json(to_json(r));
  else print_report_text(r);
  return r.violation ? kViolation : kOk;
}

int cmd_foam_ledger(const std::string& path, const std::string& script_path, const std::string& orient, bool json) {
  ColoredDiagram d = load(path);
  ChangeScript s = parse_script(read_all(script_path));
  LedgerReport r = cobordism_ledger(d, s, script_orientation(d, s, orient));
  if (json) {
    print_json(to_json(r));
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"quantity", "value"}};
  rows.push_back({"V", str(r.V)});
  rows.push_back({"same", str(r.same)});
  rows.push_back({"mixed", str(r.mixed)});
  rows.push_back({"cost", rational_text(r.cost)});
  rows.push_back({"facets", str(static_cast<long>(r.foam.facets.size()))});
  rows.push_back({"chi(F)", str(r.foam.euler())});
  rows.push_back({"chi(s)", str(r.foam.seam_euler())});
  rows.push_back({"chi_orb", rational_text(r.chi_orb)});
  rows.push_back({"-V/2 - cost", rational_text(r.closed_form)});
  std::cout << render_table(rows, use_color());
  for (const auto& w : r.warnings) std::cout << "warning: " << w << '\n';
  return kOk;
}

int cmd_gen(const std::string& family, const std::vector<int>& params, const std::string& out,
            const std::string& script_out) {
  Generated g = generate(family, params);
  emit(serialize(g.d), out);
  if (!script_out.empty()) {
    if (!g.script) throw std::invalid_argument("family '" + family + "' has no bundled script");
    emit(format_script(*g.script), script_out);
  }
  return kOk;
}

int cmd_mirror(const std::string& path, const std::string& orient, const std::string& out) {
  ColoredDiagram d = load(path);
  std::optional<TotalOrientation> t;
  if (!orient.empty() || d.orient_hint()) t = pick_orientation(d, orient);
  Transformed m = mirror(d, t);
  m.d.set_name(d.name().empty() ? "mirror" : "mir " + d.name());
  emit(serialize(with_orientation(m.d, m.t)), out);
  return kOk;
}

int cmd_reverse(const std::string& path, const std::string& orient, const std::string& out) {
  ColoredDiagram d = load(path);
  d.set_orient_hint(format_orientation(reverse(pick_orientation(d, orient))));
  emit(serialize(d), out);
  return kOk;
}

std::optional<TotalOrientation> hint_or_none(const ColoredDiagram& d) {
  if (!d.orient_hint()) return std::nullopt;
  return parse_orientation(d, *d.orient_hint());
}

int cmd_sum(int order, const std::string& p1, int at1, const std::string& p2, int at2, const std::string& matching,
            const std::string& out) {
  ColoredDiagram d1 = load(p1), d2 = load(p2);
  auto t1 = hint_or_none(d1), t2 = hint_or_none(d2);
  if (t1.has_value() != t2.has_value())
    throw TransformError("give orientations on both summands or on neither");
  Transformed r;
  if (order == 2) {
    Matching m = matching == "straight" ? Matching::Straight : matching == "crossed" ? Matching::Crossed : Matching::Auto;
    r = edge_sum(d1, at1, d2, at2, t1, t2, m);
  } else {
    auto v1 = vertex_nodes(d1), v2 = vertex_nodes(d2);
    if (at1 < 0 || at1 >= static_cast<int>(v1.size()) || at2 < 0 || at2 >= static_cast<int>(v2.size()))
      throw TransformError("vertex index out of range");
    r = vertex_sum(d1, v1[at1], d2, v2[at2], t1, t2);
  }
  r.d.set_name((d1.name().empty() ? "?" : d1.name()) + (order == 2 ? " #2 " : " #3 ") +
               (d2.name().empty() ? "?" : d2.name()));
  emit(serialize(with_orientation(r.d, r.t)), out);
  return kOk;
}

int cmd_corpus_check(bool json) {
  auto results = run_acceptance();
  bool ok = true;
  Json arr = Json::array();
  for (const auto& r : results) {
    ok = ok && r.pass;
    if (json) arr.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail}});
    else std::cout << format_result(r) << '\n';
  }
  if (json) print_json({{"schema", kSchemaVersion}, {"criteria", arr}, {"pass", ok}});
  return ok ? kOk : kInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signature invariants and unknotting bounds for Klein graphs"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "JSON output");

  std::string file, file2, orient, orient2, script, out, script_out, matching = "auto";
  bool sweep = false;
  unsigned threads = 0;
  int at1 = 0, at2 = 0;
  std::string family;
  std::vector<int> params;

  auto* validate_cmd = app.add_subcommand("validate", "check a .ksg file");
  validate_cmd->add_option("file", file, ".ksg file or -")->required();

  auto* inv_cmd = app.add_subcommand("invariants", "invariants of a totally oriented graph");
  inv_cmd->add_option("file", file, ".ksg file or - (default)")->default_val("-");
  inv_cmd->add_option("--orient", orient, "orientation, e.g. 'rb:c0=+ bg:c0=-'");
  inv_cmd->add_flag("--sweep", sweep, "all 2^mu total orientations");
  inv_cmd->add_option("--threads", threads, "sweep threads, 0 = all cores");

  auto* bound_cmd = app.add_subcommand("bound", "lower bounds");
  bound_cmd->require_subcommand(1);
  auto* theta_cmd = bound_cmd->add_subcommand("theta", "unknotting bound for a theta curve");
  theta_cmd->add_option("file", file)->required();
  theta_cmd->add_option("--orient", orient);
  auto* gordian_cmd = bound_cmd->add_subcommand("gordian", "Gordian distance bound");
  gordian_cmd->add_option("first", file)->required();
  gordian_cmd->add_option("second", file2)->required();
  gordian_cmd->add_option("--orient1", orient);
  gordian_cmd->add_option("--orient2", orient2);

  auto* chain_cmd = app.add_subcommand("chain", "full inequality chain against a crossing-change script");
  chain_cmd->add_option("first", file)->required();
  chain_cmd->add_option("second", file2)->required();
  chain_cmd->add_option("--script", script, "script taking the first graph to the second")->required();
  chain_cmd->add_option("--orient1", orient);
  chain_cmd->add_option("--orient2", orient2);

  auto* foam_cmd = app.add_subcommand("foam", "foam bookkeeping");
  foam_cmd->require_subcommand(1);
  auto* ledger_cmd = foam_cmd->add_subcommand("ledger", "Euler ledger of the cobordism a script realizes");
  ledger_cmd->add_option("file", file)->required();
  ledger_cmd->add_option("--script", script)->required();
  ledger_cmd->add_option("--orient", orient);

  auto* gen_cmd = app.add_subcommand("gen", "generate a diagram");
  std::string families;
  for (const auto& f : generator_families()) families += (families.empty() ? "" : ", ") + f;
  gen_cmd->add_option("family", family, families)->required();
  gen_cmd->add_option("params", params, "integer parameters");
  gen_cmd->add_option("-o,--output", out, "output file (default stdout)");
  gen_cmd->add_option("--script-out", script_out, "write the bundled script here");

  auto* tr_cmd = app.add_subcommand("transform", "mirror, reverse, #2, #3");
  tr_cmd->require_subcommand(1);
  auto* mir_cmd = tr_cmd->add_subcommand("mirror", "swap over and under everywhere");
  mir_cmd->add_option("file", file)->required();
  mir_cmd->add_option("--orient", orient);
  mir_cmd->add_option("-o,--output", out);
  auto* rev_cmd = tr_cmd->add_subcommand("reverse", "reverse the total orientation");
  rev_cmd->add_option("file", file)->required();
  rev_cmd->add_option("--orient", orient);
  rev_cmd->add_option("-o,--output", out);
  auto* sum2_cmd = tr_cmd->add_subcommand("sum2", "edge connected sum");
  sum2_cmd->add_option("first", file)->required();
  sum2_cmd->add_option("second", file2)->required();
  sum2_cmd->add_option("--e1", at1, "edge of the first graph (0-based)");
  sum2_cmd->add_option("--e2", at2, "edge of the second graph (0-based)");
  sum2_cmd->add_option("--matching", matching)->check(CLI::IsMember({"auto", "straight", "crossed"}));
  sum2_cmd->add_option("-o,--output", out);
  auto* sum3_cmd = tr_cmd->add_subcommand("sum3", "vertex connected sum");
  sum3_cmd->add_option("first", file)->required();
  sum3_cmd->add_option("second", file2)->required();
  sum3_cmd->add_option("--v1", at1, "vertex of the first graph (0-based, in node order)");
  sum3_cmd->add_option("--v2", at2, "vertex of the second graph");
  sum3_cmd->add_option("-o,--output", out);

  auto* corpus_cmd = app.add_subcommand("corpus", "generator corpus");
  corpus_cmd->require_subcommand(1);
  auto* check_cmd = corpus_cmd->add_subcommand("check", "run the acceptance suite");

  // --json is accepted after the subcommand too
  for (auto* sub : {validate_cmd, inv_cmd, theta_cmd, gordian_cmd, chain_cmd, ledger_cmd, check_cmd})
    sub->add_flag("--json", json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate_cmd) return cmd_validate(file, json);
    if (*inv_cmd) return cmd_invariants(file, orient, sweep, threads, json);
    if (*theta_cmd) return cmd_bound_theta(file, orient, json);
    if (*gordian_cmd) return cmd_bound_gordian(file, file2, orient, orient2, json);
    if (*chain_cmd) return cmd_chain(file, file2, script, orient, orient2, json);
    if (*ledger_cmd) return cmd_foam_ledger(file, script, orient, json);
    if (*gen_cmd) return cmd_gen(family, params, out, script_out);
    if (*mir_cmd) return cmd_mirror(file, orient, out);
    if (*rev_cmd) return cmd_reverse(file, orient, out);
    if (*sum2_cmd) return cmd_sum(2, file, at1, file2, at2, matching, out);
    if (*sum3_cmd) return cmd_sum(3, file, at1, file2, at2, matching, out);
    if (*check_cmd) return cmd_corpus_check(json);
  } catch (const ScriptError& e) {
    std::cerr << "error: script: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}
