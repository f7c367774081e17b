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

#include "spinphase/state_io.h"

#include <charconv>
#include <cmath>
#include <string>

#include "json.hpp"
#include "spinphase/errors.h"

namespace spinphase {
namespace {

using nlohmann::json;

double parse_number(std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError, "not a number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

StateKind parse_state_kind(std::string_view text, double default_alpha) {
  std::string_view name = text;
  std::string_view arg;
  if (const auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') {
      throw Error(ErrorCode::kParseError, "unbalanced parenthesis in '" + std::string(text) + "'");
    }
    name = text.substr(0, open);
    arg = text.substr(open + 1, text.size() - open - 2);
  } else if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    name = text.substr(0, colon);
    arg = text.substr(colon + 1);
  }
  auto no_arg = [&](StateKind kind) {
    if (!arg.empty()) {
      throw Error(ErrorCode::kParseError, "state '" + std::string(name) + "' takes no parameter");
    }
    return kind;
  };
  if (name == "coherent") return no_arg(StateKind::coherent());
  if (name == "noon") return no_arg(StateKind::noon());
  if (name == "optimal") return no_arg(StateKind::optimal_phase());
  if (name == "sss") return no_arg(StateKind::spin_squeezed_2act());
  if (name == "pss") return no_arg(StateKind::phase_squeezed_2act());
  if (name == "yurke") return StateKind::yurke(arg.empty() ? default_alpha : parse_number(arg));
  if (name == "twist") {
    if (arg.empty()) throw Error(ErrorCode::kParseError, "twist needs a time, e.g. twist(0.2)");
    return StateKind::two_axis_evolved(parse_number(arg));
  }
  throw Error(ErrorCode::kParseError, "unknown state '" + std::string(text) + "'");
}

std::string state_to_json(const SpinState& state, std::string_view kind,
                          const StateParams& params) {
  json doc;
  doc["two_j"] = state.spin().two_j();
  doc["basis"] = "z";
  json re = json::array();
  json im = json::array();
  for (int i = 0; i < state.dim(); ++i) {
    re.push_back(state.coeff(i).real());
    im.push_back(state.coeff(i).imag());
  }
  doc["re"] = std::move(re);
  doc["im"] = std::move(im);
  doc["kind"] = std::string(kind);
  json p = json::object();
  for (const auto& [key, value] : params) p[key] = value;
  doc["params"] = std::move(p);
  return doc.dump(2) + "\n";
}

LoadedState state_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  try {
    if (doc.value("basis", std::string("z")) != "z") {
      throw Error(ErrorCode::kParseError, "only basis \"z\" is supported");
    }
    const SpinQuantum j(doc.at("two_j").get<int>());
    const auto re = doc.at("re").get<std::vector<double>>();
    const auto im = doc.at("im").get<std::vector<double>>();
    if (re.size() != im.size() || int(re.size()) != j.dim()) {
      throw Error(ErrorCode::kParseError, "re/im arrays must both have length 2J+1");
    }
    ComplexVector c(j.dim());
    for (int i = 0; i < j.dim(); ++i) c(i) = Complex(re[i], im[i]);
    LoadedState out{SpinState(j, std::move(c)), doc.value("kind", std::string()), {}};
    if (doc.contains("params")) {
      for (const auto& [key, value] : doc.at("params").items()) {
        out.params.emplace_back(key, value.get<double>());
      }
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace spinphase
