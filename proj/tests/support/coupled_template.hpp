#pragma once

#include <string>
#include <vector>

#include "msrlab/matrix.hpp"

namespace msrlab::testing {

// Nonzero pattern of the plane-ordered parity-check matrix of the Q = 3,
// r = 4, k = 4 example, transcribed by hand. Column sections are planes 1..3;
// each holds nodes u1..u4 then p1..p4. Row blocks are planes, rows parities.
inline const std::vector<std::string> kCoupledTemplate = {
    "xxxxx... x....... x.......",
    "xxxx.x.. x....... x.......",
    "xxxx..x. x....... x.......",
    "xxxx...x x....... x.......",
    ".x...... xxxxx... .x......",
    ".x...... xxxx.x.. .x......",
    ".x...... xxxx..x. .x......",
    ".x...... xxxx...x .x......",
    "..x..... ..x..... xxxxx...",
    "..x..... ..x..... xxxx.x..",
    "..x..... ..x..... xxxx..x.",
    "..x..... ..x..... xxxx...x",
};

/// 'x' / '.' per entry, a space between column sections of width 8.
inline std::vector<std::string> pattern(const Matrix& h) {
  std::vector<std::string> out;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    std::string row;
    for (std::size_t c = 0; c < h.cols(); ++c) {
      if (c > 0 && c % 8 == 0) row += ' ';
      row += h(r, c) != 0 ? 'x' : '.';
    }
    out.push_back(row);
  }
  return out;
}

}  // namespace msrlab::testing
