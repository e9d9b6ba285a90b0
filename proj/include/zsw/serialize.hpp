#pragma once

#include <string_view>
#include <vector>

#include <json.hpp>

#include "zsw/bounds.hpp"
#include "zsw/integer_matrix.hpp"
#include "zsw/invariants.hpp"
#include "zsw/kemnitz.hpp"
#include "zsw/nonabelian.hpp"
#include "zsw/packing.hpp"
#include "zsw/smooth.hpp"

namespace zsw {

using Json = nlohmann::ordered_json;

/// {"group", "I", "m", "value", "witness": [[index, count], ...], "nodes"};
/// "value" is null with "exceeded": cap (or "budget_exhausted": true) when the
/// search did not finish.
Json to_json(const InvariantResult& r);
Json to_json(const NaResult& r);
Json to_json(const BoundReport& r);
Json to_json(const KnownValue& v);
Json to_json(const Packing& p);
Json to_json(const CentroidPartition& p);
Json to_json(const SmoothCertificate& c);
Json to_json(const EmSandwich& s);

/// Every formula that applies to G, keyed by name.
Json bounds_report(const FiniteAbelianGroup& group);

/// One "x y" pair per line; blank lines and '#' comments skipped.
/// Throws ParseError with the 1-based line number.
std::vector<LatticePoint> read_points(std::string_view text);
/// One nonnegative integer per line (arbitrary precision).
std::vector<BigInt> read_numbers(std::string_view text);

} // namespace zsw
