#pragma once

#include <span>
#include <string>

#include "json.hpp"
#include "mubenc/infotheory.hpp"
#include "mubenc/nogo.hpp"
#include "mubenc/protocol.hpp"
#include "mubenc/shift_ops.hpp"

namespace mubenc {

using Json = nlohmann::json;

/// Array of [re, im] pairs.
Json to_json(const QuditState& s);
/// Row-major array of rows, each an array of [re, im] pairs.
Json to_json(const UnitaryMatrix& u);
/// {"d", "rows": legend, "columns": legend, "shift": (d+2) x (d+1) ints}.
Json to_json(const ShiftTable& table);
/// {"d", "searched", "consistent", "witnesses"}.
Json to_json(const NoGoReport& report);
Json to_json(const ShiftAssignment& asg);
Json to_json(const EntropyReport& report);
Json to_json(const EfficiencyRow& row);
Json to_json(const RoundTripResult& result);
Json to_json(const UniquenessResult& result);
Json to_json(const Codeword& a);

/// Header "d,capacity_bits,max_info_bits,ratio", full precision, '.' decimal.
std::string efficiency_csv(std::span<const EfficiencyRow> rows);

/// Shortest round-trippable decimal for x, independent of locale.
std::string format_double(double x);
/// x with 6 significant digits.
std::string format_short(double x);

}  // namespace mubenc
