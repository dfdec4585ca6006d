#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kleinsig/diagram.hpp"
#include "kleinsig/foam.hpp"

namespace kleinsig {

struct CorpusEntry {
  std::string name;
  ColoredDiagram d;
  std::optional<ChangeScript> script;  // crossing changes to the trivial theta, when known
};

// Generator outputs and small sums built from them.
const std::vector<CorpusEntry>& generator_corpus();

}  // namespace kleinsig
