#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kleinsig/linkops.hpp"

namespace kleinsig {

// Letter +i is sigma_i, -i its inverse; 1 <= i < strands.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;
  bool operator==(const BraidWord&) const = default;
};

std::string to_string(const BraidWord& w);

class BraidingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed braid, strands running downward, closing on the right. Letter signs
// equal crossing signs.
OrientedLinkDiagram braid_closure(const BraidWord& w);

// Vogel moves until the diagram is a closed braid, then read off the word.
// Input must be a connected piece: a single free loop, or crossings whose
// components all meet. Throws BraidingError on non-planar codes or when the
// move budget is exhausted.
BraidWord to_braid(const OrientedLinkDiagram& o);

// Seifert circles of an oriented diagram (free loops count as circles).
int seifert_circle_count(const OrientedLinkDiagram& o);

}  // namespace kleinsig
