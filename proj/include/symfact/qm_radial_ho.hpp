#pragma once

#include "symfact/state.hpp"

namespace symfact {

// Radial harmonic oscillator (units 2m = hbar = 1, V = (w^2/4) r^2).
//
// Factorization operators (source-l convention, fixed by the intertwining
// Delta^-_{r,l} H_l = H_{l-2} Delta^-_{r,l}):
//   a^+_l = -d/dr + (l-1)/r + (w/2) r      a^+_{l+1} R_n^l ~ R_{n+1}^{l+1}
//   a^-_l =  d/dr + (l+1)/r + (w/2) r      a^-_l     R_n^l ~ R_{n-1}^{l-1}
//   b^±_l = same with -(w/2) r
//   Delta^-_{r,l}   = b^-_{l-1} a^-_l      (l -> l-2 at fixed n)
//   Delta^+_{r,l+2} = b^+_{l+2} a^+_{l+1}  (l -> l+2 at fixed n)
//   Lambda^-_{l,r}  = b^+_l a^-_l          (n -> n-2 at fixed l)
//   Lambda^+_{l,r}  = b^-_{l+1} a^+_{l+1}  (n -> n+2 at fixed l)

struct HoParams {
  double omega{1.0};
};

// H_l = -d^2 - (2/r) d + l(l+1)/r^2 + (w^2/4) r^2
RadialFunction applyHl(const RadialFunction& f, int ell, const HoParams& p);

RadialFunction applyA(const RadialFunction& f, int ell, const HoParams& p, int sign);
RadialFunction applyB(const RadialFunction& f, int ell, const HoParams& p, int sign);

// Delta^±: ell is the SOURCE angular momentum; result l = ell ± 2.
RadialFunction shiftR(const RadialFunction& f, int ell, const HoParams& p, int sign);

// Lambda^±_{ell,r}: n -> n ± 2 at fixed ell.
RadialFunction ladderR(const RadialFunction& f, int ell, const HoParams& p, int sign);

// E_n = (w/2)(2n + 3)
double energy(int n, const HoParams& p);

// Lattice n >= l >= |m|, n - l even; unit-norm state grown from the even seed
// e^{-w r^2/4} or the odd seed r e^{-w r^2/4} by Lambda^+ and Delta^+ chains.
SeparatedState buildState(int n, int ell, int m, const HoParams& p);

// S^± = Delta^± lambda^± lambda^±: l -> l ± 2 at fixed (n, m).
SeparatedState symmetryS(const SeparatedState& state, const HoParams& p, int sign);

}  // namespace symfact
