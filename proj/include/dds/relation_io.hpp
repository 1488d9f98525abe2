#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "dds/relation.hpp"

namespace dds {

// Three-line text form:
//   domain: p q r s
//   radix: 2            (one value, or one per point)
//   0101010110101010
Relation read_relation(std::istream& in);
Relation parse_relation(const std::string& text);
std::string format_relation(const Relation& r);

// Decomposition tree as JSON. A node reached a second time through another
// branch is emitted as {"ref": <domain labels>} instead of being repeated.
nlohmann::ordered_json decomposition_json(const Decomposition& root);

}  // namespace dds
