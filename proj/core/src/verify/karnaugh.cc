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

#include "shia/verify/karnaugh.h"

#include <sstream>

#include "shia/error.h"

namespace shia::verify {
namespace {

int GrayIndex(int two_bits) {
  for (int i = 0; i < 4; ++i) {
    if (kGrayCode[static_cast<std::size_t>(i)] == two_bits) return i;
  }
  return 0;
}

std::string AxisLabel(int index) {
  const int g = kGrayCode[static_cast<std::size_t>(index)];
  return std::string{static_cast<char>('0' + (g >> 1)),
                     static_cast<char>('0' + (g & 1))};
}

template <typename T>
T& Cell(Grids<T>& grids, const CellPos& p) {
  return grids[static_cast<std::size_t>(p.grid)][static_cast<std::size_t>(p.row)]
              [static_cast<std::size_t>(p.col)];
}
template <typename T>
const T& Cell(const Grids<T>& grids, const CellPos& p) {
  return grids[static_cast<std::size_t>(p.grid)][static_cast<std::size_t>(p.row)]
              [static_cast<std::size_t>(p.col)];
}

template <typename T>
std::string RenderGrids(const std::string& title, const Grids<T>& grids,
                        int width) {
  const std::string corner = "in1in2\\in3in4";
  const std::string gap = "    ";
  const auto grid_width = static_cast<std::size_t>(4 * width);
  auto pad = [&](const std::string& s) {
    return std::string(static_cast<std::size_t>(
                           std::max(0, width - static_cast<int>(s.size()))),
                       ' ') +
           s;
  };
  std::ostringstream out;
  out << title << '\n';
  std::string banner(corner.size(), ' ');
  for (int grid = 0; grid < 2; ++grid) {
    std::string label = " in5=" + std::to_string(grid);
    label.resize(grid_width, ' ');
    banner += label + (grid == 0 ? gap : "");
  }
  while (!banner.empty() && banner.back() == ' ') banner.pop_back();
  out << banner << '\n';
  out << corner;
  for (int grid = 0; grid < 2; ++grid) {
    for (int c = 0; c < 4; ++c) out << pad(AxisLabel(c));
    out << (grid == 0 ? gap : "");
  }
  out << '\n';
  for (int r = 0; r < 4; ++r) {
    out << std::string(corner.size() - 2, ' ') << AxisLabel(r);
    for (int grid = 0; grid < 2; ++grid) {
      for (int c = 0; c < 4; ++c) {
        out << pad(std::to_string(Cell(grids, CellPos{grid, r, c})));
      }
      out << (grid == 0 ? gap : "");
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

CellPos PositionOf(const InputVector& v) {
  const int i = v.index();  // pin1 pin2 pin3 pin4 pin5, pin1 most significant
  return {i & 1, GrayIndex((i >> 3) & 0b11), GrayIndex((i >> 1) & 0b11)};
}

InputVector VectorAt(const CellPos& pos) {
  const int row_bits = kGrayCode[static_cast<std::size_t>(pos.row)];
  const int col_bits = kGrayCode[static_cast<std::size_t>(pos.col)];
  return InputVector::FromIndex((row_bits << 3) | (col_bits << 1) | pos.grid);
}

int KarnaughMap::at(const InputVector& v) const { return Cell(cells, PositionOf(v)); }

std::string KarnaughMap::Render() const {
  return RenderGrids("Karnaugh map out" + std::to_string(output_pin), cells, 3);
}

int DiffMap::at(const InputVector& v) const { return Cell(cells, PositionOf(v)); }

std::vector<InputVector> DiffMap::NonzeroCells() const {
  std::vector<InputVector> out;
  for (int i = 0; i < logic::kVectorCount; ++i) {
    const InputVector v = InputVector::FromIndex(i);
    if (at(v) != 0) out.push_back(v);
  }
  return out;
}

std::string DiffMap::Render() const {
  return RenderGrids("Difference map out" + std::to_string(output_pin) +
                         (is_zero ? " (zero)" : " (NONZERO)"),
                     cells, 3);
}

KarnaughMap BuildKmap(const TruthTable& table, int pin) {
  if (pin < 1 || pin > logic::kChassisPins) {
    throw Error(ErrorCode::kInvalidPin, "no output pin " + std::to_string(pin));
  }
  if (!table.complete()) {
    throw Error(ErrorCode::kIncompleteTable,
                std::to_string(table.failed_rows()) +
                    " row(s) failed; refusing to build a Karnaugh map");
  }
  KarnaughMap map;
  map.output_pin = pin;
  for (const auto& row : table.rows) {
    Cell(map.cells, PositionOf(row.inputs)) = logic::ToBit(row.outputs.at(pin));
  }
  return map;
}

std::array<KarnaughMap, 5> BuildKmaps(const TruthTable& table) {
  std::array<KarnaughMap, 5> maps;
  for (int pin = 1; pin <= 5; ++pin) {
    maps[static_cast<std::size_t>(pin - 1)] = BuildKmap(table, pin);
  }
  return maps;
}

DiffMap DiffKmaps(const KarnaughMap& a, const KarnaughMap& b) {
  if (a.output_pin != b.output_pin) {
    throw Error(ErrorCode::kPinMismatch,
                "cannot subtract map of out" + std::to_string(b.output_pin) +
                    " from map of out" + std::to_string(a.output_pin));
  }
  DiffMap diff;
  diff.output_pin = a.output_pin;
  for (std::size_t g = 0; g < 2; ++g) {
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        diff.cells[g][r][c] = a.cells[g][r][c] - b.cells[g][r][c];
        if (diff.cells[g][r][c] != 0) diff.is_zero = false;
      }
    }
  }
  return diff;
}

TruthTable FlattenKmaps(const std::array<KarnaughMap, 5>& maps) {
  TruthTable table;
  for (auto& row : table.rows) {
    for (const auto& map : maps) {
      row.outputs.set(map.output_pin, logic::FromBool(map.at(row.inputs) != 0));
    }
  }
  return table;
}

Comparison Compare(const TruthTable& reference, const TruthTable& candidate) {
  Comparison cmp;
  cmp.reference = BuildKmaps(reference);
  cmp.candidate = BuildKmaps(candidate);
  for (std::size_t i = 0; i < 5; ++i) {
    cmp.diffs[i] = DiffKmaps(cmp.reference[i], cmp.candidate[i]);
    cmp.nonzero_cells += cmp.diffs[i].NonzeroCells().size();
    cmp.is_zero = cmp.is_zero && cmp.diffs[i].is_zero;
  }
  return cmp;
}

}  // namespace shia::verify
