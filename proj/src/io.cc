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

#include "matroid/io.h"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

#include "matroid/catalog.h"
#include "matroid/operations.h"

namespace matroid {

namespace {

// Whitespace tokens with '#' comment lines removed.
class Tokens {
 public:
  explicit Tokens(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
      size_t first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      std::istringstream words(line);
      std::vector<std::string> row;
      for (std::string w; words >> w;) row.push_back(w);
      lines_.push_back(row);
    }
  }

  bool AtEnd() const { return line_ >= lines_.size(); }
  const std::vector<std::string>& Line() const { return lines_.at(line_); }
  std::vector<std::string> Next() {
    if (AtEnd()) throw ParseError("unexpected end of input");
    return lines_[line_++];
  }

 private:
  std::vector<std::vector<std::string>> lines_;
  size_t line_ = 0;
};

long long ToInt(const std::string& s) {
  size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw ParseError("not an integer: " + s);
  return v;
}

void ExpectCount(const std::vector<std::string>& line, size_t n,
                 const char* what) {
  if (line.size() != n) {
    throw ParseError(std::string("malformed ") + what + " line");
  }
}

Matroid ParseMatrix(Tokens& t) {
  auto head = t.Next();
  ExpectCount(head, 3, "header");
  long long q = ToInt(head[0]), r = ToInt(head[1]), n = ToInt(head[2]);
  if (!Field::IsSupported(static_cast<int>(q))) {
    throw ParseError("unsupported field size " + head[0]);
  }
  if (r < 0 || n < 0 || r > kMaxMatrixDim || n > kMaxMatrixDim) {
    throw ParseError("matrix dimensions out of range");
  }
  GFMatrix a(static_cast<int>(q), static_cast<int>(r), static_cast<int>(n));
  for (int i = 0; i < r; ++i) {
    auto row = t.Next();
    ExpectCount(row, static_cast<size_t>(n), "matrix row");
    for (int j = 0; j < n; ++j) {
      long long v = ToInt(row[j]);
      if (v < 0 || v >= q) throw ParseError("entry out of range: " + row[j]);
      a.set(i, j, static_cast<FieldElement>(v));
    }
  }
  return Matroid::Linear(std::move(a));
}

Matroid ParseGraph(Tokens& t) {
  auto head = t.Next();
  ExpectCount(head, 3, "graph header");
  Graph g;
  g.vertices = static_cast<int>(ToInt(head[1]));
  long long e = ToInt(head[2]);
  if (g.vertices < 0 || e < 0 || e > 64) {
    throw ParseError("graph dimensions out of range");
  }
  for (long long i = 0; i < e; ++i) {
    auto edge = t.Next();
    ExpectCount(edge, 2, "edge");
    g.edges.emplace_back(static_cast<int>(ToInt(edge[0])),
                         static_cast<int>(ToInt(edge[1])));
  }
  try {
    ValidateGraph(g);
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
  if (t.AtEnd()) return Matroid::Graphic(std::move(g));
  auto gamma_line = t.Next();
  if (gamma_line.empty() || gamma_line[0] != "gamma") {
    throw ParseError("expected a gamma line");
  }
  Mask gamma = 0;
  for (size_t i = 1; i < gamma_line.size(); ++i) {
    long long v = ToInt(gamma_line[i]);
    if (v < 0 || v >= g.vertices) throw ParseError("gamma vertex out of range");
    gamma |= Bit(static_cast<int>(v));
  }
  return Matroid::Graft(std::move(g), gamma);
}

Matroid ParseRanks(Tokens& t) {
  auto head = t.Next();
  ExpectCount(head, 2, "ranks header");
  long long n = ToInt(head[1]);
  if (n < 0 || n > kMaxRankTableSize) throw ParseError("rank table too large");
  std::vector<std::uint8_t> ranks;
  ranks.reserve(size_t{1} << n);
  while (!t.AtEnd() && ranks.size() < (size_t{1} << n)) {
    for (const auto& w : t.Next()) {
      long long v = ToInt(w);
      if (v < 0 || v > n) throw ParseError("rank out of range");
      ranks.push_back(static_cast<std::uint8_t>(v));
    }
  }
  if (ranks.size() != (size_t{1} << n)) {
    throw ParseError("rank table has the wrong length");
  }
  try {
    return Matroid::FromRankTable(static_cast<int>(n), std::move(ranks));
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what());
  }
}

std::string FormatGraph(const Graph& g, const Mask* gamma) {
  std::ostringstream out;
  out << "graph " << g.vertices << " " << g.edges.size() << "\n";
  for (auto [u, v] : g.edges) out << u << " " << v << "\n";
  if (gamma != nullptr) {
    out << "gamma";
    ForEachBit(*gamma, [&](int v) { out << " " << v; });
    out << "\n";
  }
  return out.str();
}

}  // namespace

Matroid ParseMatroid(std::string_view text) {
  Tokens t(text);
  if (t.AtEnd()) throw ParseError("empty input");
  const std::string& first = t.Line().at(0);
  Matroid m;
  if (first == "graph") {
    m = ParseGraph(t);
  } else if (first == "ranks") {
    m = ParseRanks(t);
  } else {
    m = ParseMatrix(t);
  }
  if (!t.AtEnd()) throw ParseError("trailing input");
  return m;
}

Matroid LoadMatroid(const std::string& source) {
  constexpr std::string_view kScheme = "catalog:";
  if (source.rfind(kScheme, 0) == 0) return Named(source.substr(kScheme.size()));
  std::string text;
  if (source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(source);
    if (!in) throw ParseError("cannot open " + source);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return ParseMatroid(text);
}

std::string FormatMatrix(const GFMatrix& a) {
  std::ostringstream out;
  out << a.q() << " " << a.rows() << " " << a.cols() << "\n";
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out << (j ? " " : "") << static_cast<int>(a.at(i, j));
    }
    out << "\n";
  }
  return out.str();
}

std::string FormatMatroid(const Matroid& m) {
  switch (m.backend()) {
    case Backend::kLinear:
      return FormatMatrix(*m.matrix());
    case Backend::kGraphic:
      return FormatGraph(*m.graph(), nullptr);
    case Backend::kGraft: {
      Mask gamma = m.gamma();
      return FormatGraph(*m.graph(), &gamma);
    }
    case Backend::kRankTable:
      break;
  }
  if (std::optional<Matroid> rep = BinaryRepresentation(m)) {
    return FormatMatrix(*rep->matrix());
  }
  std::ostringstream out;
  out << "ranks " << m.size() << "\n";
  for (Mask x = 0; x < Bit(m.size()); ++x) {
    out << m.Rank(x) << ((x + 1) % 32 == 0 || x + 1 == Bit(m.size()) ? "\n" : " ");
  }
  return out.str();
}

}  // namespace matroid
