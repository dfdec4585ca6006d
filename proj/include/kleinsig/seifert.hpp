#pragma once

#include <string>

#include "kleinsig/braid.hpp"
#include "kleinsig/matrix.hpp"

namespace kleinsig {

struct SeifertData {
  IntMatrix V;
  int r = 1;  // connected components of the Seifert surface
};

struct LinkSignatureBundle {
  int sigma = 0;
  int beta = 0;
  int mu = 1;
  bool operator==(const LinkSignatureBundle&) const = default;
};

// Disk-and-band surface of the braid closure: one disk per strand, one band
// per letter, one generator per consecutive pair of equal-index letters.
SeifertData seifert_matrix(const BraidWord& w);

LinkSignatureBundle signature_nullity(const SeifertData& s, int split_extra = 0, int mu = 1);

// split pieces -> braids -> Seifert matrices, combined over pieces
LinkSignatureBundle link_signature(const OrientedLinkDiagram& o);

// {"V": [[..]], "r": .., "diagonal": [{"num","den"}..]} as a JSON string
std::string seifert_debug_json(const SeifertData& s);

}  // namespace kleinsig
