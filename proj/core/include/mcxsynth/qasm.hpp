// Copyright 2026 The mcxsynth Authors
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

#pragma once

#include <string>
#include <string_view>

#include "mcxsynth/circuit.hpp"

namespace mcx {

/// OpenQASM 2.0 text with a single register `q`.
std::string to_qasm(const Circuit& c);

/// Reads the subset produced by to_qasm: one `qreg`, gates x/cx/ccx/swap,
/// `//` comments. Qubits come back with the auxiliary role.
Circuit from_qasm(std::string_view text);

}  // namespace mcx
