#pragma once

#include <gtest/gtest.h>

#include <optional>

#include "msrlab/error.hpp"
#include "msrlab/matrix.hpp"

namespace msrlab {

inline void PrintTo(const Matrix& m, std::ostream* os) { *os << "\n" << to_string(m); }

}  // namespace msrlab

namespace msrlab::testing {

// Kind of the Error thrown by fn; records a failure when nothing is thrown.
template <typename Fn>
std::optional<ErrorKind> kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return std::nullopt;
}

}  // namespace msrlab::testing
