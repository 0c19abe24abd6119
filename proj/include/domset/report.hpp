#pragma once

#include <cstdint>

#include <json.hpp>

#include "domset/bigint.hpp"
#include "domset/domination.hpp"
#include "domset/error.hpp"
#include "domset/plan.hpp"
#include "domset/search.hpp"

namespace domset {

using Json = nlohmann::ordered_json;

/// Largest integer emitted as a JSON number; larger values become decimal strings.
inline constexpr std::uint64_t kMaxJsonSafeInteger = std::uint64_t{1} << 53;

Json count_json(const BigInt& value);
Json count_json(std::uint64_t value);
Json rational_json(const Rational& value);
Json plan_json(const PartitionPlan& plan);
Json witnesses_json(const std::vector<VertexSet>& sets);

/// Status returned by the CLI for an error code.
int exit_code_for(Errc code);

} // namespace domset
