#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "smalldiv/errors.hpp"
#include "smalldiv/ring.hpp"

namespace smalldiv {

// Multi-index over the z-variables.
using MultiIndex = std::vector<std::uint32_t>;

inline std::uint32_t index_order(const MultiIndex& i) {
    std::uint32_t s = 0;
    for (auto e : i) s += e;
    return s;
}

inline MultiIndex unit_index(int nvars, int pos) {
    MultiIndex i(static_cast<size_t>(nvars), 0);
    i[static_cast<size_t>(pos)] = 1;
    return i;
}

// One scalar-valued formal series in n variables, truncated by total degree.
// Sparse by multi-index; exact zeros are not stored. The constant term is
// always absent (total degree >= 1).
template <class R>
class SparsePoly {
  public:
    SparsePoly(int nvars, int order, R zero)
        : nvars_(nvars), order_(order), zero_(std::move(zero)) {}

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    const R& prototype() const { return zero_; }
    const std::map<MultiIndex, R>& terms() const { return terms_; }

    R coeff(const MultiIndex& i) const {
        auto it = terms_.find(i);
        return it == terms_.end() ? zero_ : it->second;
    }

    void add_term(const MultiIndex& i, const R& v) {
        if (static_cast<int>(i.size()) != nvars_) throw DimensionMismatch("multi-index arity mismatch");
        std::uint32_t d = index_order(i);
        if (d < 1) throw Error("constant term must stay zero");
        if (d > static_cast<std::uint32_t>(order_)) return;  // beyond truncation
        auto it = terms_.find(i);
        if (it == terms_.end()) {
            if (!ring_is_zero(v)) terms_.emplace(i, v);
        } else {
            it->second = it->second + v;
            if (ring_is_zero(it->second)) terms_.erase(it);
        }
    }

    int valuation() const {
        int v = order_ + 1;
        for (const auto& [i, c] : terms_) v = std::min(v, static_cast<int>(index_order(i)));
        return v;
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
        check(a, b);
        SparsePoly r = a;
        for (const auto& [i, c] : b.terms_) r.add_term(i, c);
        return r;
    }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
        check(a, b);
        SparsePoly r = a;
        for (const auto& [i, c] : b.terms_) r.add_term(i, -c);
        return r;
    }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        check(a, b);
        SparsePoly r(a.nvars_, std::min(a.order_, b.order_), a.zero_);
        for (const auto& [i, c] : a.terms_)
            for (const auto& [j, d] : b.terms_) {
                if (index_order(i) + index_order(j) > static_cast<std::uint32_t>(r.order_)) continue;
                MultiIndex k(i.size());
                for (size_t v = 0; v < i.size(); ++v) k[v] = i[v] + j[v];
                r.add_term(k, c * d);
            }
        return r;
    }

    SparsePoly scaled(const R& s) const {
        SparsePoly r(nvars_, order_, zero_);
        if (ring_is_zero(s)) return r;
        for (const auto& [i, c] : terms_) r.add_term(i, c * s);
        return r;
    }

    BigFloat max_abs(long prec) const {
        BigFloat mx(prec);
        for (const auto& [i, c] : terms_) {
            BigFloat a = ring_max_abs(c, prec);
            if (a > mx) mx = a;
        }
        return mx;
    }

  private:
    static void check(const SparsePoly& a, const SparsePoly& b) {
        if (a.nvars_ != b.nvars_) throw DimensionMismatch("variable counts differ");
        if (!ring_compatible(a.zero_, b.zero_)) throw RingMismatch("series over different rings");
    }
    int nvars_;
    int order_;
    R zero_;
    std::map<MultiIndex, R> terms_;
};

// A formal map germ (C^n, 0) -> (C^n, 0): one SparsePoly per component,
// truncated by total degree.
template <class R>
class MultiSeries {
  public:
    MultiSeries(int dim, int order, R zero) : dim_(dim), order_(order), zero_(std::move(zero)) {
        comp_.reserve(static_cast<size_t>(dim_));
        for (int j = 0; j < dim_; ++j) comp_.emplace_back(dim_, order_, zero_);
    }

    int dim() const { return dim_; }
    int order() const { return order_; }
    const R& prototype() const { return zero_; }
    const SparsePoly<R>& component(int j) const { return comp_.at(static_cast<size_t>(j)); }
    SparsePoly<R>& component(int j) { return comp_.at(static_cast<size_t>(j)); }

    // Valuation of the part of total degree >= 2 (the nonlinear part).
    int nonlinear_valuation() const {
        int v = order_ + 1;
        for (const auto& c : comp_)
            for (const auto& [i, x] : c.terms())
                if (index_order(i) >= 2) v = std::min(v, static_cast<int>(index_order(i)));
        return v;
    }

    BigFloat max_abs(long prec) const {
        BigFloat mx(prec);
        for (const auto& c : comp_) {
            BigFloat a = c.max_abs(prec);
            if (a > mx) mx = a;
        }
        return mx;
    }

  private:
    int dim_;
    int order_;
    R zero_;
    std::vector<SparsePoly<R>> comp_;
};

// Composition outer(inner(z)) truncated by total degree. `inner` must have
// no constant term (guaranteed structurally) and its components play the
// role of the substituted variables.
template <class R>
MultiSeries<R> multi_compose(const MultiSeries<R>& outer, const MultiSeries<R>& inner, int n) {
    if (outer.dim() != inner.dim()) throw DimensionMismatch("composition dimension mismatch");
    if (outer.order() < n || inner.order() < n)
        throw TruncationTooShort("operand truncation below requested order");
    int dim = outer.dim();
    MultiSeries<R> res(dim, n, outer.prototype());
    // memoized monomial powers inner^K
    std::map<MultiIndex, SparsePoly<R>> powers;
    auto monomial_power = [&](const MultiIndex& k, auto&& self) -> const SparsePoly<R>& {
        auto it = powers.find(k);
        if (it != powers.end()) return it->second;
        // split k = k' + e_v
        int v = 0;
        while (k[static_cast<size_t>(v)] == 0) ++v;
        SparsePoly<R> result(dim, n, outer.prototype());
        if (index_order(k) == 1) {
            result = inner.component(v);
        } else {
            MultiIndex k2 = k;
            --k2[static_cast<size_t>(v)];
            result = self(k2, self) * inner.component(v);
        }
        return powers.emplace(k, std::move(result)).first->second;
    };
    for (int j = 0; j < dim; ++j) {
        for (const auto& [k, c] : outer.component(j).terms()) {
            if (index_order(k) > static_cast<std::uint32_t>(n)) continue;
            const SparsePoly<R>& pk = monomial_power(k, monomial_power);
            for (const auto& [i, x] : pk.terms()) res.component(j).add_term(i, x * c);
        }
    }
    return res;
}

}  // namespace smalldiv
