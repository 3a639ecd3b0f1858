#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "smalldiv/bigfloat.hpp"
#include "smalldiv/errors.hpp"

namespace smalldiv {

using ParamIndex = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const ParamIndex& i) {
    std::uint32_t s = 0;
    for (auto e : i) s += e;
    return s;
}

// Polynomial in m parameter variables with BigComplex coefficients.
// Sparse by exponent multi-index; exact zeros are never stored, so the zero
// polynomial is the empty map and degree() reports -1 for it.
class ParamPoly {
  public:
    explicit ParamPoly(int num_params = 1) : m_(num_params) {}

    static ParamPoly constant(const BigComplex& c, int num_params) {
        ParamPoly p(num_params);
        if (!c.is_zero()) p.terms_.emplace(ParamIndex(num_params, 0), c);
        return p;
    }
    // The monomial t^i, coefficient c.
    static ParamPoly monomial(const ParamIndex& i, const BigComplex& c) {
        ParamPoly p(static_cast<int>(i.size()));
        if (!c.is_zero()) p.terms_.emplace(i, c);
        return p;
    }

    int num_params() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const {
        int d = -1;
        for (const auto& [i, c] : terms_) d = std::max(d, static_cast<int>(total_degree(i)));
        return d;
    }
    const std::map<ParamIndex, BigComplex>& terms() const { return terms_; }

    void add_term(const ParamIndex& i, const BigComplex& c) {
        if (static_cast<int>(i.size()) != m_) throw DimensionMismatch("parameter index arity mismatch");
        auto it = terms_.find(i);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(i, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
        check(a, b);
        ParamPoly r = a;
        for (const auto& [i, c] : b.terms_) r.add_term(i, c);
        return r;
    }
    friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
        check(a, b);
        ParamPoly r = a;
        for (const auto& [i, c] : b.terms_) r.add_term(i, -c);
        return r;
    }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        check(a, b);
        ParamPoly r(a.m_);
        for (const auto& [i, c] : a.terms_)
            for (const auto& [j, d] : b.terms_) {
                ParamIndex k(a.m_);
                for (int v = 0; v < a.m_; ++v) k[v] = i[v] + j[v];
                r.add_term(k, c * d);
            }
        return r;
    }
    ParamPoly operator-() const {
        ParamPoly r(m_);
        for (const auto& [i, c] : terms_) r.terms_.emplace(i, -c);
        return r;
    }

    ParamPoly scaled(const BigComplex& s) const {
        ParamPoly r(m_);
        if (s.is_zero()) return r;
        for (const auto& [i, c] : terms_) {
            BigComplex v = c * s;
            if (!v.is_zero()) r.terms_.emplace(i, v);
        }
        return r;
    }
    ParamPoly divided(const BigComplex& s) const {
        ParamPoly r(m_);
        for (const auto& [i, c] : terms_) {
            BigComplex v = c / s;
            if (!v.is_zero()) r.terms_.emplace(i, v);
        }
        return r;
    }

    BigComplex eval(const std::vector<BigComplex>& t, long prec) const {
        if (static_cast<int>(t.size()) != m_) throw DimensionMismatch("evaluation point arity mismatch");
        BigComplex acc(0.0, 0.0, prec);
        for (const auto& [i, c] : terms_) {
            BigComplex term = c;
            for (int v = 0; v < m_; ++v)
                if (i[v] > 0) term = term * pow_ui(t[v], i[v]);
            acc += term;
        }
        return acc;
    }

    // Largest coefficient magnitude (0 for the zero polynomial).
    BigFloat max_abs(long prec) const {
        BigFloat mx(prec);
        for (const auto& [i, c] : terms_) {
            BigFloat a = abs(c);
            if (a > mx) mx = a;
        }
        return mx;
    }

    std::string str() const;

  private:
    static void check(const ParamPoly& a, const ParamPoly& b) {
        if (a.m_ != b.m_) throw RingMismatch("parameter counts differ");
    }
    int m_;
    std::map<ParamIndex, BigComplex> terms_;
};

}  // namespace smalldiv
