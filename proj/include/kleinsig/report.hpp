#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kleinsig/bounds.hpp"
#include "kleinsig/foam.hpp"
#include "kleinsig/invariants.hpp"

namespace kleinsig {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json rational_json(const Rational& q);
std::string rational_text(const Rational& q);  // "9/2", "-3"
Json to_json(const KleinInvariants& inv);
Json to_json(const FoamDescriptor& f);
Json to_json(const LedgerReport& r);
Json to_json(const BoundsReport& r);
Json to_json(const SweepResult& s);

// Aligned text table; the first row is the header.
std::string render_table(const std::vector<std::vector<std::string>>& rows, bool color);

}  // namespace kleinsig
