#pragma once

#include "sshl/numeric.hpp"

namespace sshl {

// Vertical occupancy: a finite count or the column-0 sentinel.
struct Occ {
    int n = 0;
    bool inf = false;

    Occ() = default;
    Occ(int count) : n(count) {}
    static Occ infinite()
    {
        Occ o;
        o.inf = true;
        return o;
    }
};

// Label order everywhere: (bottom I, left j; top K, right l).
// Horizontal states outside {0,1} and labels off the table give 0.
// With both I and K infinite the weight is x^l; with exactly one infinite it is 0.
//
//   L: (I,0;I,0) (1-sxq^I)/(1-sx)     (I,1;I,1)   (x-sq^I)/(1-sx)
//      (I,1;I+1,0) (1-q^{I+1})/(1-sx) (I+1,0;I,1) x(1-s^2q^I)/(1-sx)
Q L(Occ I, int j, Occ K, int l, const Q& x, const Params& p);

//   M: (I,0;I,0) (x-sq^I)/(1-sx)       (I,1;I,1)   (1-sxq^I)/(1-sx)
//      (I,1;I+1,0) x(1-q^{I+1})/(1-sx) (I+1,0;I,1) (1-s^2q^I)/(1-sx)
Q M(Occ I, int j, Occ K, int l, const Q& x, const Params& p);

// Paths run downwards, so K + j = I + l.
//   M*: (I,0;I,0) (1-sxq^I)/(1-sx)   (I,1;I,1)   (x-sq^I)/(1-sx)
//       (K+1,1;K,0) (1-s^2q^K)/(1-sx) (I,0;I+1,1) x(1-q^{I+1})/(1-sx)
Q Mstar(Occ I, int j, Occ K, int l, const Q& x, const Params& p);

// L and M at s = 0.
Q L0(Occ I, int j, Occ K, int l, const Q& x, const Params& p);
Q M0(Occ I, int j, Occ K, int l, const Q& x, const Params& p);

//        j   k
//         \ /
//          R        label (i, j; k, l), z = xy
//         / \       conserves i + j = k + l
//        i   l
Q R(int i, int j, int k, int l, const Q& x, const Q& y, const Params& p);

// Same layout; conserves i - j = k - l.
Q Rstar(int i, int j, int k, int l, const Q& x, const Q& y, const Params& p);

// Negative-control hook: while set, L(I,1;I,1) is off by a factor of 2.
void set_weight_fault(bool on);
bool weight_fault();

} // namespace sshl
