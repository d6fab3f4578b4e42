// Copyright 2026 The qnetbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON forms of networks, generators, reports and schedules. Malformed
// documents raise ParseError; well-formed documents with invalid content
// raise the error type of the constructor they feed.

#include <json.hpp>
#include <string>

#include "qnetbound/bounds.hpp"
#include "qnetbound/lie_depth.hpp"
#include "qnetbound/network.hpp"
#include "qnetbound/schedule.hpp"

namespace qnb {

using Json = nlohmann::json;

Json read_json_file(const std::string& path);
Json parse_json(const std::string& text);

/// Accepts either the explicit form or the {"preset", "n", "J"} shorthand.
QubitNetwork network_from_json(const Json& j);
Json network_to_json(const QubitNetwork& net);

GeneratorSpec generator_from_json(const Json& j);
Json generator_to_json(const GeneratorSpec& spec);

/// Unset optional bounds are written as null.
Json bound_report_to_json(const BoundReport& r);
BoundReport bound_report_from_json(const Json& j);

Json depth_result_to_json(const DepthResult& r);
DepthResult depth_result_from_json(const Json& j);

Json depth_table_to_json(const DepthTable& t);

Json schedule_to_json(const Schedule& s);
/// Checks stored durations against angle / |g_used|, the stored total
/// against the sum, and that g_used is the edge's strongest coupling.
Schedule schedule_from_json(const Json& j, const QubitNetwork& net);

}  // namespace qnb
