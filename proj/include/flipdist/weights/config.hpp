// Copyright 2026 The flipdist Authors
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

#ifndef FLIPDIST_WEIGHTS_CONFIG_HPP_
#define FLIPDIST_WEIGHTS_CONFIG_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "flipdist/core/error.hpp"
#include "flipdist/core/rational.hpp"

namespace flipdist::weights {

using flipdist::to_string;

enum class Variant { kSimplified, kFull };

inline const char* to_string(Variant v) { return v == Variant::kFull ? "full" : "simplified"; }

inline Variant parse_variant(std::string_view text) {
  if (text == "simplified") return Variant::kSimplified;
  if (text == "full") return Variant::kFull;
  throw InvalidArgument("unknown variant '" + std::string(text) + "'");
}

inline constexpr int kDefaultC = 2;

struct VariantConfig {
  Variant variant = Variant::kSimplified;
  int c = kDefaultC;                        // inner capacity radius
  int c_outer = 10 * kDefaultC + 1;         // directed-arc radius, full variant
  int r0 = 1;                               // zeroed neighborhood, simplified variant
  std::optional<int> offset;                // rotation offset; chosen by rule if empty
  std::optional<int> separation_threshold;  // passed to the offset rule
  int threads = 1;

  // Radius within which dual arcs keep their orientation. The simplified
  // variant uses none: every arc is undirected.
  int direction_radius() const { return variant == Variant::kFull ? c_outer : 0; }

  void validate() const {
    if (c < 1) throw InvalidArgument("c must be >= 1");
    if (c_outer <= c) throw InvalidArgument("c' must exceed c");
    if (r0 < 1) throw InvalidArgument("r0 must be >= 1");
    if (threads < 1) throw InvalidArgument("threads must be >= 1");
    if (offset && *offset < 0) throw InvalidArgument("offset must be >= 0");
  }
};

inline VariantConfig default_config(Variant v, int c = kDefaultC) {
  VariantConfig cfg;
  cfg.variant = v;
  cfg.c = c;
  cfg.c_outer = 10 * c + 1;
  return cfg;
}

}  // namespace flipdist::weights

#endif  // FLIPDIST_WEIGHTS_CONFIG_HPP_
