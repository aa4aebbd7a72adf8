//
// Copyright 2026 The lipfilter Authors.
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
//

#ifndef LIPFILTER_FUNCTION_IO_HPP_
#define LIPFILTER_FUNCTION_IO_HPP_

#include <memory>
#include <string>
#include <string_view>

#include "lipfilter/function.hpp"
#include "lipfilter/graph.hpp"

namespace lipfilter {

// Domain objects:
//   {"kind": "hypergrid", "n": N, "d": D}
//   {"kind": "hypercube", "d": D}
//   {"kind": "explicit", "vertices": N, "edges": [[u, v], ...]}
// An object without "kind" but with "vertices" is read as an explicit graph.
std::shared_ptr<const Graph> GraphFromJson(std::string_view text);
std::string GraphToJson(const Graph& g);

// Function tables:
//   {"domain": <domain>, "r": "p/q", "lo": "p/q" (optional, default 0),
//    "values": {"<canonical vertex>": "p/q" | "?"}, "default": "p/q" | "?"}
// The declared range is [lo, lo + r]. Vertices missing from "values" take
// "default"; a missing default is an error unless every vertex is listed.
OraclePtr FunctionFromJson(std::string_view text);
std::string FunctionToJson(const Graph& g, const Rational& lo,
                           const Rational& hi, const ValueTable& values);

// Reads a whole file; throws kIoError.
std::string ReadFile(const std::string& path);

}  // namespace lipfilter

#endif  // LIPFILTER_FUNCTION_IO_HPP_
