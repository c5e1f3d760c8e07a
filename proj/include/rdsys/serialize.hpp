#pragma once

// JSON encodings of groups, subsets, certificates and graphs. Object keys are
// emitted in sorted order, so equal inputs always produce identical text.

#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "rdsys/cover.hpp"
#include "rdsys/ff.hpp"
#include "rdsys/groups.hpp"
#include "rdsys/linked.hpp"
#include "rdsys/rds.hpp"
#include "rdsys/schur.hpp"

namespace rdsys {

using Json = nlohmann::json;

/// {p, r, modulus} with the modulus low degree first.
Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

/// FNV-1a over the multiplication table; detects a rebuild that drifted.
std::string table_digest(const FiniteGroup& g);

/// {family, parameters, order, digest} plus factors/amalgamation for products.
/// Groups without a constructor ("associated", "explicit") carry the flattened
/// table instead.
Json group_to_json(const FiniteGroup& g);
/// Rebuilds through the named constructor, or from the table for explicit
/// groups (then audited). Throws std::invalid_argument on malformed input and
/// when the rebuilt order or digest differs from the recorded one.
GroupPtr group_from_json(const Json& j);

/// {indices, labels}
Json subset_to_json(const FiniteGroup& g, std::span<const Elem> set);
/// Accepts either a bare index array or an object with an "indices" array.
std::vector<Elem> subset_from_json(const Json& j);

Json to_json(const RdsCertificate& c);
Json to_json(const PdsCertificate& c);
/// Includes the associated group {order, class}.
Json to_json(const LinkedCertificate& c);
Json to_json(const SchurPartition& p, const StructureConstants& c);
Json to_json(const IntersectionArray& a);
Json to_json(const DrgCertificate& c);
Json to_json(const Graph& g);

/// One block per entry, each block a sorted index array.
Json blocks_to_json(const std::vector<std::vector<Elem>>& blocks);

/// Two-space indentation and a trailing newline.
std::string dump_stable(const Json& j);

}  // namespace rdsys
