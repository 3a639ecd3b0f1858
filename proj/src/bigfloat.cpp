#include "smalldiv/bigfloat.hpp"

#include <cstdio>
#include <vector>

namespace smalldiv {

std::string BigFloat::str(int digits) const {
    if (digits <= 0) digits = static_cast<int>(static_cast<double>(prec()) * 0.3010299957) + 3;
    std::vector<char> buf(static_cast<size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

BigComplex BigComplex::unit_angle(const BigFloat& alpha, long prec) {
    // Reduce alpha mod 1 before scaling by 2*pi so large angles keep accuracy.
    BigFloat a(prec);
    mpfr_set(a.raw(), alpha.raw(), MPFR_RNDN);
    BigFloat fl = floor(a);
    mpfr_sub(a.raw(), a.raw(), fl.raw(), MPFR_RNDN);
    BigFloat theta = BigFloat::pi(prec) * BigFloat(2L, prec) * a;
    BigFloat c(prec), s(prec);
    mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
    return {c, s};
}

std::string BigComplex::str(int digits) const {
    std::string s = re_.str(digits);
    if (!im_.is_zero()) {
        std::string t = im_.str(digits);
        if (!t.empty() && t[0] != '-') s += "+";
        s += t + " i";
    }
    return s;
}

}  // namespace smalldiv
