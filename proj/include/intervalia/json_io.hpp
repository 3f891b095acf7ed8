#pragma once

#include "intervalia/explorer.hpp"
#include "intervalia/height3.hpp"
#include "intervalia/kcount.hpp"
#include "intervalia/linsys.hpp"
#include "intervalia/order.hpp"
#include "intervalia/perm.hpp"

#include <json.hpp>

namespace intervalia {

// All emitted documents carry {"schema": "intervalia/1"}. Rationals are exact
// "p/q" strings with integer shorthand; element ids are 1-based.
inline constexpr const char* kSchema = "intervalia/1";

nlohmann::json order_to_json(const IntervalOrder& p);
IntervalOrder order_from_json(const nlohmann::json& j);

nlohmann::json family_to_json(const IntervalFamily& f);
IntervalFamily family_from_json(const nlohmann::json& j);

nlohmann::json coloring_to_json(const SortedColoring& c);
SortedColoring coloring_from_json(const nlohmann::json& j);

nlohmann::json linsys_to_json(const LinearSystem& sys);

nlohmann::json verdict_to_json(const KCountVerdict& v, int k);
nlohmann::json report_to_json(const SearchReport& r);

} // namespace intervalia
