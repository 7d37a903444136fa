#pragma once

#include "symfact/state.hpp"

namespace symfact {

// Radial Kepler-Coulomb (units 2m = hbar = 1, V = -k/r).
//
//   d^+_{r,l+1} = -d/dr + l/r - k/(2(l+1))     d^+_{r,l+1} R_n^l ~ R_n^{l+1}
//   d^-_{r,l}   =  d/dr + (l+1)/r - k/(2l)     d^-_{r,l}   R_n^l ~ R_n^{l-1}
//   h_n  = -r^2 d^2 - 2r d - E_n r^2 - k r,    h_n psi^n_l = -l(l+1) psi^n_l
//   D_n  = dilation r -> ((n+1)/n) r
//   Lambda^+_{r,n} = (-r d/dr + (k/(2(n+1))) r - (n+1)) D_n^{-1}   psi^{n-1} -> psi^n
//   Lambda^-_{r,n} = D_n (r d/dr + (k/(2(n+1))) r - n)             psi^n -> psi^{n-1}

struct KcParams {
  double k{1.0};
};

// H_l = -d^2 - (2/r) d + l(l+1)/r^2 - k/r
RadialFunction applyHl(const RadialFunction& f, int ell, const KcParams& p);

// sign=+1: d^+_{r,ell+1} on a source-ell function; sign=-1: d^-_{r,ell} (needs ell >= 1).
RadialFunction shiftR(const RadialFunction& f, int ell, const KcParams& p, int sign);

// h_n applied exactly.
RadialFunction applyHhat(const RadialFunction& f, int n, const KcParams& p);

// D_n (inverse=false) or D_n^{-1} (inverse=true); n >= 1.
RadialFunction applyDilation(const RadialFunction& f, int n, bool inverse = false);

// Lambda^±_{r,n}; n >= 1.
RadialFunction ladderR(const RadialFunction& f, int n, const KcParams& p, int sign);

// E_n = -k^2 / (4 (n+1)^2)
double energy(int n, const KcParams& p);

// Unit-norm eigenstate grown from e^{-k r/2} by Lambda^+ and S^+ chains; n >= l >= |m|.
SeparatedState buildState(int n, int ell, int m, const KcParams& p);

// S^+ = d^+_{r,l+1} lambda^+_{l+1}, S^- = d^-_{r,l} lambda^-_l: l -> l ± 1 at fixed (n, m).
SeparatedState symmetryS(const SeparatedState& state, const KcParams& p, int sign);

}  // namespace symfact
