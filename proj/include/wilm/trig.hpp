#ifndef WILM_TRIG_HPP
#define WILM_TRIG_HPP

#include "wilm/interval.hpp"

#include <utility>

namespace wilm {

// Rigorous enclosures of cos(k j pi / n) and sin(k j pi / n), each of
// width <= 2^(1 - precision_bits).  Angles that reduce to a multiple of
// pi/2 yield exact point intervals.  Results are cached per
// (angle, precision) pair.
std::pair<Interval, Interval> trig_enclose(unsigned long k, unsigned j,
                                           unsigned n,
                                           unsigned precision_bits);

} // namespace wilm

#endif
