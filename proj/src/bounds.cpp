#include "kleinsig/bounds.hpp"

#include <algorithm>
#include <cstdlib>

namespace kleinsig {

namespace {

long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

void require_same_shape(const KleinInvariants& a, const KleinInvariants& b) {
  if (a.V != b.V)
    throw BoundsError("vertex counts differ (" + std::to_string(a.V) + " vs " + std::to_string(b.V) + ")");
  if (a.mu != b.mu)
    throw BoundsError("component counts differ (" + std::to_string(a.mu) + " vs " + std::to_string(b.mu) + ")");
}

}  // namespace

ThetaBound theta_unknotting_bound(const KleinInvariants& inv) {
  if (inv.V != 2 || inv.mu != 3)
    throw BoundsError("not a theta curve: V = " + std::to_string(inv.V) + ", mu = " + std::to_string(inv.mu));
  long s = std::labs(inv.sigma);
  return {Rational(s, 4), ceil_div(s, 4)};
}

long chain_left(const KleinInvariants& a, const KleinInvariants& b) {
  require_same_shape(a, b);
  return std::labs(static_cast<long>(a.sigma) - b.sigma) - 4L * a.mu + 12;
}

long chain_left_beta_form(const KleinInvariants& a, const KleinInvariants& b) {
  require_same_shape(a, b);
  return std::labs(static_cast<long>(a.sigma) - b.sigma) - a.beta - b.beta + 4L * a.mu - 12;
}

Rational gordian_lower_bound(const KleinInvariants& a, const KleinInvariants& b) {
  return Rational(std::max(0L, chain_left(a, b)), 4);
}

// Each bicolored surface, tubed into one piece, bounds |sigma_ij| by
// 1 - chi(F_ij) + 2(mu_ij - 1); summing and counting seam cells gives this.
Rational gammasig_chi_upper(const KleinInvariants& inv) {
  long v = 3 - inv.V + 2L * std::labs(inv.sv) + 2L * (inv.mu - 3) - std::labs(inv.sigma);
  return Rational(v, 4);
}

Rational gammasig_chi_upper_beta_form(const KleinInvariants& inv) {
  long v = 3 - inv.V + 2L * std::labs(inv.sv) - 2L * (inv.mu - 3) + inv.beta - std::labs(inv.sigma);
  return Rational(v, 4);
}

long constituent_bound(const KleinInvariants& inv) {
  if (!inv.hamiltonian) throw BoundsError("constituent bound needs every bicolored link to be a knot");
  long m = 0;
  for (const auto& p : inv.pairs) m = std::max(m, ceil_div(std::labs(p.sigma), 2));
  return m;
}

BoundsReport chain_report(const KleinInvariants& a, const KleinInvariants& b,
                          const std::optional<LedgerReport>& ledger) {
  BoundsReport r;
  r.first = a;
  r.second = b;
  r.left = chain_left(a, b);
  r.left_beta_form = chain_left_beta_form(a, b);
  r.gordian = Rational(std::max(0L, r.left), 4);
  long V = a.V;
  r.chain.push_back({"|dsigma| - 4mu + 12", "=", Rational(r.left)});
  r.chain.push_back({"chi_orb_4(G1 #3 -mir G2)", "<=", Rational(5 - 2 * V - r.left, 4)});
  r.chain.push_back({"chi_orb_4(G1, G2; s)", "<=", Rational(-2 * V - r.left, 4)});
  r.chain.push_back({"d_Y(G1, G2)", ">=", r.gordian});
  if (a.V == 2 && a.mu == 3) r.theta = theta_unknotting_bound(a);
  if (a.hamiltonian) r.constituent = constituent_bound(a);
  r.gammasig_first = gammasig_chi_upper(a);
  if (ledger) {
    if (ledger->V != V) throw BoundsError("script is for a graph with a different vertex count");
    r.cost = ledger->cost;
    r.gap = ledger->cost - r.gordian;
    r.violation = Rational(r.left) > 4 * ledger->cost;
    r.warnings = ledger->warnings;
  }
  return r;
}

Window theta_n_window(int n) {
  if (n < 1) throw BoundsError("theta_n needs n >= 1");
  return {ceil_div(3L * n, 2), 2L * n};
}

}  // namespace kleinsig
