#pragma once

#include <boost/rational.hpp>
#include <cstdint>

namespace viewprop {

// Exact rational arithmetic for the bounds(R) machinery. Never floats.
using Rat = boost::rational<std::int64_t>;

struct RatInterval {
    Rat lo, hi;
    bool empty() const { return lo > hi; }
};

// Image of [lo,hi] under v ↦ a·v + b (a ≠ 0); swaps the ends for a < 0.
inline RatInterval affine_image(const RatInterval& i, const Rat& a, const Rat& b) {
    Rat x = a * i.lo + b;
    Rat y = a * i.hi + b;
    return x <= y ? RatInterval{x, y} : RatInterval{y, x};
}

inline RatInterval affine_preimage(const RatInterval& i, const Rat& a, const Rat& b) {
    Rat x = (i.lo - b) / a;
    Rat y = (i.hi - b) / a;
    return x <= y ? RatInterval{x, y} : RatInterval{y, x};
}

} // namespace viewprop
