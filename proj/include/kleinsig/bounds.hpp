#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kleinsig/foam.hpp"
#include "kleinsig/invariants.hpp"
#include "kleinsig/matrix.hpp"

namespace kleinsig {

class BoundsError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ThetaBound {
  Rational uY;  // |sigma|/4
  long u = 0;   // ceiling of uY
};

// requires V = 2 and mu = 3
ThetaBound theta_unknotting_bound(const KleinInvariants& inv);
// |dsigma| - 4mu + 12, the left side of the chain before dividing by 4.
// For mu = 3 this equals the beta form |dsigma| - beta1 - beta2 + 4mu - 12;
// for mu > 3 the beta form is not a valid bound (see README).
long chain_left(const KleinInvariants& a, const KleinInvariants& b);
long chain_left_beta_form(const KleinInvariants& a, const KleinInvariants& b);
// chain_left / 4 clamped at 0; requires equal V and equal mu
Rational gordian_lower_bound(const KleinInvariants& a, const KleinInvariants& b);
// (3 - V + 2|sv| + 2(mu - 3) - |sigma|) / 4
Rational gammasig_chi_upper(const KleinInvariants& inv);
// (3 - V + 2|sv| - 2(mu - 3) + beta - |sigma|) / 4, not a valid bound once mu > 3; agrees with the above when mu = 3
Rational gammasig_chi_upper_beta_form(const KleinInvariants& inv);
// max over bicolored knots of ceil(|sigma|/2); requires a 3-Hamiltonian graph
long constituent_bound(const KleinInvariants& inv);

struct ChainLine {
  std::string quantity;
  std::string relation;  // "<=" or ">="
  Rational value;
};

struct BoundsReport {
  KleinInvariants first;
  KleinInvariants second;
  long left = 0;
  long left_beta_form = 0;
  Rational gordian;                 // d_Y lower bound
  std::vector<ChainLine> chain;     // computable consequences of each link of the chain
  std::optional<ThetaBound> theta;  // when the first graph is a theta curve
  std::optional<long> constituent;  // when the first graph is 3-Hamiltonian
  Rational gammasig_first;
  std::optional<Rational> cost;
  std::optional<Rational> gap;      // cost - gordian
  bool violation = false;           // left > 4 cost
  std::vector<std::string> warnings;
};

BoundsReport chain_report(const KleinInvariants& a, const KleinInvariants& b,
                          const std::optional<LedgerReport>& ledger = std::nullopt);

// Window for u(theta_n) between the signature bound and the obvious upper bound.
struct Window {
  long lo = 0;
  long hi = 0;
};
Window theta_n_window(int n);

}  // namespace kleinsig
