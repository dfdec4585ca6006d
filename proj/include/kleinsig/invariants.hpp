#pragma once

#include <array>
#include <cstddef>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "kleinsig/diagram.hpp"
#include "kleinsig/orientation.hpp"
#include "kleinsig/seifert.hpp"

namespace kleinsig {

struct KleinInvariants {
  std::string name;
  int V = 0;
  int mu = 0;
  int lambda = 0;
  int sigma = 0;
  int zeta = 0;
  int beta = 0;
  int sv = 0;
  bool hamiltonian = false;
  bool knot_free = true;  // no closed edges
  std::array<LinkSignatureBundle, 3> pairs{};  // per bicolored link, ColorPair order
  std::array<int, 3> pair_lambda{};
};

// Signatures of oriented bicolored links keyed by their serialized code.
// Concurrent readers; a racing second insert of the same key is harmless.
class SignatureCache {
 public:
  bool lookup(const std::string& key, LinkSignatureBundle& out) const;
  void insert(const std::string& key, const LinkSignatureBundle& v);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex m_;
  std::unordered_map<std::string, LinkSignatureBundle> map_;
};

SignatureCache& global_signature_cache();

std::string link_key(const OrientedLinkDiagram& o);

KleinInvariants compute(const ColoredDiagram& d, const TotalOrientation& t,
                        SignatureCache* cache = &global_signature_cache());

struct SweepRow {
  TotalOrientation orientation;
  KleinInvariants inv;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  int min_abs_sigma = 0;
  int max_abs_sigma = 0;
  bool sigma_constant = true;
};

// All 2^mu orientations; threads = 0 picks the hardware count.
SweepResult orientation_sweep(const ColoredDiagram& d, unsigned threads = 0,
                              SignatureCache* cache = &global_signature_cache());

}  // namespace kleinsig
