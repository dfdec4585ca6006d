#include "kleinsig/report.hpp"

#include <algorithm>
#include <sstream>

#include "kleinsig/orientation.hpp"

namespace kleinsig {

Json rational_json(const Rational& q) {
  Json j;
  j["num"] = boost::multiprecision::numerator(q).convert_to<long long>();
  j["den"] = boost::multiprecision::denominator(q).convert_to<long long>();
  return j;
}

std::string rational_text(const Rational& q) {
  auto den = boost::multiprecision::denominator(q);
  std::string s = boost::multiprecision::numerator(q).str();
  if (den != 1) s += "/" + den.str();
  return s;
}

Json to_json(const KleinInvariants& inv) {
  Json j;
  j["name"] = inv.name;
  j["V"] = inv.V;
  j["mu"] = inv.mu;
  j["lambda"] = inv.lambda;
  j["sigma"] = inv.sigma;
  j["zeta"] = inv.zeta;
  j["beta"] = inv.beta;
  j["sv"] = inv.sv;
  j["hamiltonian"] = inv.hamiltonian;
  Json pairs = Json::object();
  for (ColorPair p : kPairs) {
    const auto& b = inv.pairs[index(p)];
    pairs[std::string(pair_name(p))] = {
        {"mu", b.mu}, {"sigma", b.sigma}, {"beta", b.beta}, {"lambda", inv.pair_lambda[index(p)]}};
  }
  j["pairs"] = pairs;
  return j;
}

Json to_json(const FoamDescriptor& f) {
  Json j;
  Json facets = Json::array();
  for (const auto& x : f.facets) facets.push_back({{"color", std::string(1, to_char(x.color))}, {"euler", x.euler}});
  j["facets"] = facets;
  j["seam_circles"] = f.seam_circles;
  j["seam_arcs"] = f.seam_arcs;
  j["seam_vertices"] = f.seam_vertices;
  j["boundary_vertex_total"] = f.boundary_vertex_total;
  Json bc = Json::object();
  for (ColorPair p : kPairs) bc[std::string(pair_name(p))] = f.bicolored_component_eulers[index(p)];
  j["bicolored_component_eulers"] = bc;
  j["euler"] = f.euler();
  j["chi_orb"] = rational_json(chi_orb(f));
  return j;
}

Json to_json(const LedgerReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["V"] = r.V;
  j["same"] = r.same;
  j["mixed"] = r.mixed;
  j["cost"] = rational_json(r.cost);
  j["chi_orb"] = rational_json(r.chi_orb);
  j["closed_form"] = rational_json(r.closed_form);
  j["identity_check"] = r.foam.seam_vertices == 0 ? Json(chiorb_identity_check(r.foam)) : Json(nullptr);
  j["foam"] = to_json(r.foam);
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const BoundsReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["inputs"] = Json::array({to_json(r.first), to_json(r.second)});
  j["left"] = r.left;
  j["left_beta_form"] = r.left_beta_form;
  j["gordian_bound"] = rational_json(r.gordian);
  Json chain = Json::array();
  for (const auto& c : r.chain)
    chain.push_back({{"quantity", c.quantity}, {"relation", c.relation}, {"value", rational_json(c.value)}});
  j["chain"] = chain;
  if (r.theta) {
    j["theta_bound_uY"] = rational_json(r.theta->uY);
    j["theta_bound_u"] = r.theta->u;
  }
  if (r.constituent) j["mcu_style_bound"] = *r.constituent;
  j["gammasig_chi_upper"] = rational_json(r.gammasig_first);
  if (r.cost) {
    j["cost"] = rational_json(*r.cost);
    j["gap"] = rational_json(*r.gap);
    j["violation"] = r.violation;
  }
  j["warnings"] = r.warnings;
  return j;
}

Json to_json(const SweepResult& s) {
  Json j;
  j["schema"] = kSchemaVersion;
  Json rows = Json::array();
  for (const auto& row : s.rows) {
    Json x = to_json(row.inv);
    x["orientation"] = format_orientation(row.orientation);
    rows.push_back(x);
  }
  j["rows"] = rows;
  j["min_abs_sigma"] = s.min_abs_sigma;
  j["max_abs_sigma"] = s.max_abs_sigma;
  j["sigma_constant"] = s.sigma_constant;
  return j;
}

std::string render_table(const std::vector<std::vector<std::string>>& rows, bool color) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  std::ostringstream out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i == 0 && color) out << "\033[1m";
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
      const auto& cell = rows[i][c];
      if (c) out << "  ";
      // numbers right-aligned, text left-aligned
      bool numeric = !cell.empty() && (std::isdigit(static_cast<unsigned char>(cell[0])) || cell[0] == '-');
      std::string pad(width[c] - cell.size(), ' ');
      if (c + 1 == rows[i].size() && !numeric) out << cell;
      else out << (numeric ? pad + cell : cell + pad);
    }
    if (i == 0 && color) out << "\033[0m";
    out << '\n';
  }
  return out.str();
}

}  // namespace kleinsig
