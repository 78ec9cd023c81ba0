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

#ifndef PARKFIELD__EXECUTION_HPP_
#define PARKFIELD__EXECUTION_HPP_

namespace parkfield
{

/// Selects the OpenMP kernel or its serial reference. Both produce
/// bit-identical results; the serial path exists for testing and benchmarks.
enum class Execution { serial, parallel };

/// Worker threads the parallel kernels will use (1 without OpenMP).
int max_threads();
/// Overrides the OpenMP thread count; `n <= 0` leaves it unchanged.
void set_threads(int n);

}  // namespace parkfield

#endif  // PARKFIELD__EXECUTION_HPP_
