#pragma once

#include <json.hpp>

#include "littlewood/partition.hpp"
#include "littlewood/qseries.hpp"
#include "littlewood/rational_function.hpp"

namespace littlewood {

using Json = nlohmann::ordered_json;

/// Partitions as JSON arrays of parts.
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {"order": D | null, "coefficients": {"k": "p/q", ...}}; exact series have order null.
Json to_json(const QSeries& s);
QSeries qseries_from_json(const Json& j);

/// Exponent -> "p/q" map.
Json to_json(const LaurentPoly& p);
Json to_json(const RationalFunction& f);

}  // namespace littlewood
