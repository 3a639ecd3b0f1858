#pragma once

#include <utility>
#include <vector>

#include "smalldiv/errors.hpp"
#include "smalldiv/ring.hpp"

namespace smalldiv {

// Truncated formal power series c_1 z + c_2 z^2 + ... + c_N z^N over a
// coefficient ring R. The constant term is identically zero (germs fix the
// origin), so index 0 is not settable.
template <class R>
class TruncSeries {
  public:
    TruncSeries(int order, R zero) : order_(order), zero_(std::move(zero)), c_() {
        if (order_ < 1) throw TruncationTooShort("truncation order must be >= 1");
        c_.assign(static_cast<size_t>(order_) + 1, zero_);
    }

    int order() const { return order_; }
    const R& prototype() const { return zero_; }

    const R& coeff(int i) const {
        if (i < 0 || i > order_) throw TruncationTooShort("coefficient index out of range");
        return c_[static_cast<size_t>(i)];
    }
    void set_coeff(int i, R v) {
        if (i < 1 || i > order_) throw TruncationTooShort("coefficient index out of range");
        if (!ring_compatible(v, zero_)) throw RingMismatch("coefficient from a different ring");
        c_[static_cast<size_t>(i)] = std::move(v);
    }
    void add_coeff(int i, const R& v) { set_coeff(i, c_[static_cast<size_t>(i)] + v); }

    // Smallest index with a nonzero coefficient; order+1 for the zero series.
    int valuation() const {
        for (int i = 1; i <= order_; ++i)
            if (!ring_is_zero(c_[static_cast<size_t>(i)])) return i;
        return order_ + 1;
    }

    bool is_zero() const { return valuation() > order_; }

    // Largest coefficient magnitude across orders 1..N.
    BigFloat max_abs(long prec) const {
        BigFloat mx(prec);
        for (int i = 1; i <= order_; ++i) {
            BigFloat a = ring_max_abs(c_[static_cast<size_t>(i)], prec);
            if (a > mx) mx = a;
        }
        return mx;
    }

  private:
    int order_;
    R zero_;
    std::vector<R> c_;
};

namespace detail {
template <class R>
void require_operands(const TruncSeries<R>& a, const TruncSeries<R>& b, int n) {
    if (!ring_compatible(a.prototype(), b.prototype()))
        throw RingMismatch("series over different rings");
    if (a.order() < n || b.order() < n)
        throw TruncationTooShort("operand truncation below requested order");
}
}  // namespace detail

template <class R>
TruncSeries<R> series_truncate(const TruncSeries<R>& a, int n) {
    if (a.order() < n) throw TruncationTooShort("cannot extend a truncated series");
    TruncSeries<R> r(n, a.prototype());
    for (int i = 1; i <= n; ++i) r.set_coeff(i, a.coeff(i));
    return r;
}

template <class R>
TruncSeries<R> series_add(const TruncSeries<R>& a, const TruncSeries<R>& b, int n) {
    detail::require_operands(a, b, n);
    TruncSeries<R> r(n, a.prototype());
    for (int i = 1; i <= n; ++i) r.set_coeff(i, a.coeff(i) + b.coeff(i));
    return r;
}

template <class R>
TruncSeries<R> series_sub(const TruncSeries<R>& a, const TruncSeries<R>& b, int n) {
    detail::require_operands(a, b, n);
    TruncSeries<R> r(n, a.prototype());
    for (int i = 1; i <= n; ++i) r.set_coeff(i, a.coeff(i) - b.coeff(i));
    return r;
}

// Scale by a ring element.
template <class R>
TruncSeries<R> series_scale(const TruncSeries<R>& a, const R& s, int n) {
    if (a.order() < n) throw TruncationTooShort("operand truncation below requested order");
    if (!ring_compatible(a.prototype(), s)) throw RingMismatch("scalar from a different ring");
    TruncSeries<R> r(n, a.prototype());
    for (int i = 1; i <= n; ++i)
        if (!ring_is_zero(a.coeff(i))) r.set_coeff(i, a.coeff(i) * s);
    return r;
}

template <class R>
TruncSeries<R> series_multiply(const TruncSeries<R>& a, const TruncSeries<R>& b, int n) {
    detail::require_operands(a, b, n);
    TruncSeries<R> r(n, a.prototype());
    for (int i = 1; i < n; ++i) {
        if (ring_is_zero(a.coeff(i))) continue;
        for (int j = 1; i + j <= n; ++j) {
            if (ring_is_zero(b.coeff(j))) continue;
            r.add_coeff(i + j, a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

// outer(inner(z)) truncated at n, by ascending-order accumulation of inner
// powers. Cost is one series multiply per nonzero order of `outer`.
template <class R>
TruncSeries<R> series_compose(const TruncSeries<R>& outer, const TruncSeries<R>& inner, int n) {
    detail::require_operands(outer, inner, n);
    int kmax = 0;
    for (int k = 1; k <= n; ++k)
        if (!ring_is_zero(outer.coeff(k))) kmax = k;
    TruncSeries<R> acc(n, outer.prototype());
    if (kmax == 0) return acc;
    TruncSeries<R> p = series_truncate(inner, n);
    for (int k = 1; k <= kmax; ++k) {
        if (!ring_is_zero(outer.coeff(k)))
            acc = series_add(acc, series_scale(p, outer.coeff(k), n), n);
        if (k < kmax) p = series_multiply(p, inner, n);
    }
    return acc;
}

// Compositional inverse: g with g(h(z)) = z up to order n. Requires an
// invertible linear coefficient; with h_1 = 1 this always succeeds.
template <class R>
TruncSeries<R> series_invert(const TruncSeries<R>& h, const BigComplex& h1, int n) {
    if (h.order() < n) throw TruncationTooShort("operand truncation below requested order");
    if (h1.is_zero()) throw InversionFailure("vanishing linear coefficient");
    TruncSeries<R> g(n, h.prototype());
    // g_1 = 1/h_1; g_n = -(sum_{k<n} g_k [h^k]_n) / h_1^n
    TruncSeries<R> p = series_truncate(h, n);  // h^k, streamed
    TruncSeries<R> acc(n, h.prototype());      // sum_{k<=K} g_k h^k
    BigComplex h1n = h1;
    for (int k = 1; k <= n; ++k) {
        R gk = ring_zero_like(h.prototype());
        if (k == 1) {
            gk = ring_div_scalar(p.coeff(1), h1 * h1);  // p_1 = h_1: gives 1/h_1 in-ring
        } else {
            gk = ring_div_scalar(-acc.coeff(k), h1n);
        }
        g.set_coeff(k, gk);
        if (!ring_is_zero(gk)) acc = series_add(acc, series_scale(p, gk, n), n);
        if (k < n) {
            p = series_multiply(p, h, n);
            h1n = h1n * h1;
        }
    }
    return g;
}

}  // namespace smalldiv
