#pragma once

#include "smalldiv/bigfloat.hpp"
#include "smalldiv/param_poly.hpp"

namespace smalldiv {

// Coefficient-ring glue used by the series templates. Two rings are
// supported: BigComplex scalars and ParamPoly (polynomials in the family
// parameters). Values are self-describing; `like` supplies the shape
// (precision, parameter arity) for zeros.

inline BigComplex ring_zero_like(const BigComplex& like) { return BigComplex(like.prec()); }
inline bool ring_is_zero(const BigComplex& x) { return x.is_zero(); }
inline bool ring_compatible(const BigComplex&, const BigComplex&) { return true; }
inline BigComplex ring_scale(const BigComplex& x, const BigComplex& s) { return x * s; }
inline BigComplex ring_div_scalar(const BigComplex& x, const BigComplex& s) { return x / s; }
inline BigFloat ring_max_abs(const BigComplex& x, long prec) {
    (void)prec;
    return abs(x);
}

inline ParamPoly ring_zero_like(const ParamPoly& like) { return ParamPoly(like.num_params()); }
inline bool ring_is_zero(const ParamPoly& x) { return x.is_zero(); }
inline bool ring_compatible(const ParamPoly& a, const ParamPoly& b) {
    return a.num_params() == b.num_params();
}
inline ParamPoly ring_scale(const ParamPoly& x, const BigComplex& s) { return x.scaled(s); }
inline ParamPoly ring_div_scalar(const ParamPoly& x, const BigComplex& s) { return x.divided(s); }
inline BigFloat ring_max_abs(const ParamPoly& x, long prec) { return x.max_abs(prec); }

}  // namespace smalldiv
