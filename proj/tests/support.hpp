#pragma once

#include "arguesia/instances.hpp"

namespace testing_support {

// Random inputs occasionally hit a degenerate draw; draw again.
template <class F>
auto redraw(F&& f) {
  for (int i = 0;; ++i) {
    try {
      return f();
    } catch (const arguesia::DegenerateError&) {
      if (i > 1000) throw;
    }
  }
}

inline arguesia::AffineChart x_axis() {
  using namespace arguesia;
  return AffineChart(PLine(Rat(0), Rat(1), Rat(0)), PPoint::affine(0, 0), PPoint::affine(1, 0));
}

inline arguesia::PPoint on_x(const arguesia::Rat& x) { return arguesia::PPoint::affine(x, 0); }

}  // namespace testing_support
