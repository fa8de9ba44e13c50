#pragma once

#include <doctest.h>

#include <cmath>
#include <complex>

#include "cesaro/errors.hpp"

namespace testing {

using cplx = std::complex<double>;

inline double rel_err(cplx got, cplx want) {
  double scale = std::abs(want);
  return std::abs(got - want) / (scale > 0 ? scale : 1.0);
}

// Runs f and returns the ErrorKind it threw; fails the test if nothing was thrown.
template <class F>
cesaro::ErrorKind thrown_kind(F&& f) {
  try {
    f();
  } catch (const cesaro::Error& e) {
    return e.kind();
  }
  FAIL("expected cesaro::Error");
  return cesaro::ErrorKind::contract;
}

}  // namespace testing

#define CHECK_CLOSE(got, want, tol) CHECK(std::abs(cplx(got) - cplx(want)) <= (tol))
