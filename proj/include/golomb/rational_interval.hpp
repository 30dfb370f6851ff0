#ifndef GOLOMB_RATIONAL_INTERVAL_HPP
#define GOLOMB_RATIONAL_INTERVAL_HPP

#include "golomb/numeric.hpp"

namespace golomb::approx {

// Closed interval with exact rational endpoints; every operation that builds
// one is outward-directed.
struct rational_interval {
  rational lo;
  rational hi;

  rational width() const { return hi - lo; }
  bool contains(const rational& x) const { return lo <= x && x <= hi; }
  bool contains(const rational_interval& o) const { return lo <= o.lo && o.hi <= hi; }
};

// Interval of |x - r| for x in the given interval.
rational_interval abs_distance(const rational_interval& x, const rational& r);

}  // namespace golomb::approx

#endif
