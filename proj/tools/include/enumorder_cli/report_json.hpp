#pragma once

#include <json.hpp>

#include "enumorder/coorder.hpp"
#include "enumorder/experiments.hpp"

namespace enumorder::cli {

using Json = nlohmann::ordered_json;

Json to_json(const WitnessPair& w);
Json to_json(const ShiftCell& cell);
Json to_json(const PairResult& pair);

/// Report schema:
///   { "experiment", "params", "passed",
///     "pairs": [ { "left", "right", "descriptor_verdict", "reason",
///                  "cells": [ { "m", "n", "witness": {i, j, h_i, h_j, g_i, g_j} | null } ] } ],
///     "timing": { "elapsed_ms" } }
/// with optional "role" / "growth" on pairs and "checks" at top level.
Json to_json(const ReproReport& report);

/// Drops the "timing" member, which is the only run-dependent field.
Json without_timing(Json report);

}  // namespace enumorder::cli
