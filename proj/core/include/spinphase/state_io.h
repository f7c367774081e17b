// Copyright 2026 The spinphase Authors
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

#ifndef SPINPHASE_STATE_IO_H_
#define SPINPHASE_STATE_IO_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinphase/spin_algebra.h"
#include "spinphase/state_factory.h"

namespace spinphase {

/// Shortest-round-trip-safe text for a double: 17 significant digits, '.'
/// decimal point regardless of locale; "inf", "-inf", "nan" for non-finite.
std::string format_double(double value);

/// Parses a state flag: coherent | yurke | yurke(a) | noon | optimal |
/// twist(nu) | sss | pss. "twist:nu" and "yurke:a" are accepted too.
/// Throws ParseError on anything else.
StateKind parse_state_kind(std::string_view text, double default_alpha = kDefaultYurkeAlpha);

using StateParams = std::vector<std::pair<std::string, double>>;

/// {"two_j", "basis": "z", "re": [...], "im": [...], "kind", "params": {...}}.
/// Doubles are written so that state_from_json reproduces them bit for bit.
std::string state_to_json(const SpinState& state, std::string_view kind,
                          const StateParams& params = {});

struct LoadedState {
  SpinState state;
  std::string kind;
  StateParams params;
};

/// Throws ParseError on malformed input, InvalidArgument on a bad state.
LoadedState state_from_json(std::string_view text);

}  // namespace spinphase

#endif  // SPINPHASE_STATE_IO_H_
