//  Copyright 2026 The almonoid Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "almonoid/builtins.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "almonoid/errors.hpp"

namespace almonoid {

FiniteAlgebra make_mv_chain(int n) {
  if (n < 2) throw std::invalid_argument("mv chain needs n >= 2");
  FiniteAlgebra a("mv:" + std::to_string(n), n, 0);
  const int top = n - 1;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      a.set_plus(x, y, std::min(x + y, top));
      a.set_join(x, y, std::max(x, y));
      a.set_meet(x, y, std::min(x, y));
      a.set_star(x, y, std::abs(x - y));
    }
  return a;
}

FiniteAlgebra make_boolean(int k) {
  if (k < 0) throw std::invalid_argument("boolean algebra needs k >= 0");
  if (k > 4) throw SizeLimitError("boolean:k supports k <= 4");
  const int n = 1 << k;
  FiniteAlgebra a("boolean:" + std::to_string(k), n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      a.set_plus(x, y, x | y);
      a.set_join(x, y, x | y);
      a.set_meet(x, y, x & y);
      a.set_star(x, y, x ^ y);
    }
  return a;
}

std::optional<Model> builtin_model(const std::string& uri) {
  const auto colon = uri.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string scheme = uri.substr(0, colon);
  const std::string arg = uri.substr(colon + 1);
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(arg.data(), arg.data() + arg.size(), value);
  if (ec != std::errc() || ptr != arg.data() + arg.size()) return std::nullopt;

  if (scheme == "boolean") return Model(make_boolean(value));
  if (scheme == "mv") return Model(make_mv_chain(value));
  if (scheme == "int") return Model(make_int_window(value));
  if (scheme == "intu") return Model(make_int_with_top(value));
  if (scheme == "intuv") return Model(make_int_with_top_bottom(value));
  return std::nullopt;
}

}  // namespace almonoid
