// Copyright 2026 The SHIA Authors.
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

#ifndef SHIA_VERIFY_KARNAUGH_H_
#define SHIA_VERIFY_KARNAUGH_H_

#include <array>
#include <string>
#include <vector>

#include "shia/verify/truth_table.h"

namespace shia::verify {

// Gray sequence used for both grid axes: 00, 01, 11, 10.
inline constexpr std::array<int, 4> kGrayCode = {0b00, 0b01, 0b11, 0b10};

// Where an input vector lands: grid selected by pin 5, row by pins (1,2),
// column by pins (3,4), each axis Gray coded.
struct CellPos {
  int grid = 0;
  int row = 0;
  int col = 0;

  friend bool operator==(const CellPos&, const CellPos&) = default;
};
CellPos PositionOf(const InputVector& v);
InputVector VectorAt(const CellPos& pos);

template <typename T>
using Grids = std::array<std::array<std::array<T, 4>, 4>, 2>;

struct KarnaughMap {
  int output_pin = 1;
  Grids<int> cells{};

  int at(const InputVector& v) const;
  // Two 4x4 grids side by side with Gray-coded axis labels.
  std::string Render() const;

  friend bool operator==(const KarnaughMap&, const KarnaughMap&) = default;
};

struct DiffMap {
  int output_pin = 1;
  Grids<int> cells{};
  bool is_zero = true;

  int at(const InputVector& v) const;
  std::vector<InputVector> NonzeroCells() const;
  std::string Render() const;

  friend bool operator==(const DiffMap&, const DiffMap&) = default;
};

// Throws kIncompleteTable when any row failed.
KarnaughMap BuildKmap(const TruthTable& table, int pin);
std::array<KarnaughMap, 5> BuildKmaps(const TruthTable& table);

// Cellwise a - b. Throws kPinMismatch when the maps describe different pins.
DiffMap DiffKmaps(const KarnaughMap& a, const KarnaughMap& b);

// Reassembles the outputs of a table from its five maps.
TruthTable FlattenKmaps(const std::array<KarnaughMap, 5>& maps);

struct Comparison {
  std::array<KarnaughMap, 5> reference;
  std::array<KarnaughMap, 5> candidate;
  std::array<DiffMap, 5> diffs;
  bool is_zero = true;
  std::size_t nonzero_cells = 0;
};
Comparison Compare(const TruthTable& reference, const TruthTable& candidate);

}  // namespace shia::verify

#endif  // SHIA_VERIFY_KARNAUGH_H_
