// Copyright 2026 The parkfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON echo of a RunConfig, shared by config and report code. Not installed.

#ifndef PARKFIELD__CONFIG_JSON_HPP_
#define PARKFIELD__CONFIG_JSON_HPP_

#include "json_node.hpp"
#include "parkfield/config.hpp"

namespace parkfield
{

/// Round-trips through load_config: load_config(to_json(c).dump()) == c.
json to_json(const RunConfig & config);

}  // namespace parkfield

#endif  // PARKFIELD__CONFIG_JSON_HPP_
