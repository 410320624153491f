// Copyright 2026 The Authors.
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

// Text formats.
//
//   matrix:  "q r n", then r rows of n digits in [0, q)
//   graph:   "graph V E", then E lines "u v" (0-based), optional
//            "gamma v1 v2 ..." making it a graft
//   ranks:   "ranks n", then the 2^n ranks in subset-mask order
//
// Lines starting with '#' are ignored.

#ifndef MATROID_IO_H_
#define MATROID_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "matroid/matroid.h"

namespace matroid {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ParseError.
Matroid ParseMatroid(std::string_view text);

// `catalog:NAME` (a name accepted by Named), "-" for stdin, or a file path.
// Throws ParseError, or std::invalid_argument for an unknown catalog name.
Matroid LoadMatroid(const std::string& source);

// Linear matroids as matrices, graphic and graft matroids as graphs; rank
// tables as a GF(2) matrix when binary, else as ranks. Labels are dropped.
std::string FormatMatroid(const Matroid& m);

std::string FormatMatrix(const GFMatrix& a);

}  // namespace matroid

#endif  // MATROID_IO_H_
