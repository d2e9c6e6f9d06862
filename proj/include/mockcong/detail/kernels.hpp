#pragma once

// Coefficient-level kernels shared by qseries and generators. Each ring is
// described by an Ops struct; the kernels are written once against it.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mockcong::detail {

struct IntegerOps {
  using T = mpz_class;
  using Acc = mpz_class;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& x) const { return sgn(x) == 0; }
  bool is_unit(const T& x) const { return x == 1 || x == -1; }
  T inverse(const T& x) const { return x; }  // only called on units
  T neg(const T& x) const { return -x; }
  T mul(const T& x, const T& y) const { return x * y; }
  void add_to(T& x, const T& y) const { x += y; }
  void sub_from(T& x, const T& y) const { x -= y; }
  void add_scaled(T& x, const T& y, std::int64_t c) const {
    if (c >= 0) {
      mpz_addmul_ui(x.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(c));
    } else {
      mpz_submul_ui(x.get_mpz_t(), y.get_mpz_t(), static_cast<unsigned long>(-c));
    }
  }
  T from_int(std::int64_t c) const { return T(static_cast<long>(c)); }

  Acc acc() const { return 0; }
  void acc_addmul(Acc& acc, const T& x, const T& y) const {
    mpz_addmul(acc.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  }
  T acc_finish(const Acc& acc) const { return acc; }
};

struct RationalOps {
  using T = mpq_class;
  using Acc = mpq_class;

  T zero() const { return 0; }
  T one() const { return 1; }
  bool is_zero(const T& x) const { return sgn(x) == 0; }
  bool is_unit(const T& x) const { return sgn(x) != 0; }
  T inverse(const T& x) const { return T(1) / x; }
  T neg(const T& x) const { return -x; }
  T mul(const T& x, const T& y) const { return x * y; }
  void add_to(T& x, const T& y) const { x += y; }
  void sub_from(T& x, const T& y) const { x -= y; }
  void add_scaled(T& x, const T& y, std::int64_t c) const { x += y * T(static_cast<long>(c)); }
  T from_int(std::int64_t c) const { return T(static_cast<long>(c)); }

  Acc acc() const { return 0; }
  void acc_addmul(Acc& acc, const T& x, const T& y) const { acc += x * y; }
  T acc_finish(const Acc& acc) const { return acc; }
};

// Residues mod m < 2^32; products fit in 64 bits and sums of them in 128.
struct ModOps {
  using T = std::uint64_t;
  using Acc = unsigned __int128;

  std::uint64_t m;

  T zero() const { return 0; }
  T one() const { return 1 % m; }
  T reduce(std::int64_t c) const {
    auto r = c % static_cast<std::int64_t>(m);
    return static_cast<T>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
  }
  bool is_zero(const T& x) const { return x == 0; }
  bool is_unit(const T& x) const { return std::gcd(x, m) == 1; }
  T inverse(const T& x) const {
    // extended Euclid on signed values
    std::int64_t r0 = static_cast<std::int64_t>(m), r1 = static_cast<std::int64_t>(x);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
      std::int64_t q = r0 / r1;
      std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
      std::tie(s0, s1) = std::pair{s1, s0 - q * s1};
    }
    return reduce(s0);
  }
  T neg(const T& x) const { return x == 0 ? 0 : m - x; }
  T mul(const T& x, const T& y) const { return (x * y) % m; }
  void add_to(T& x, const T& y) const {
    x += y;
    if (x >= m) x -= m;
  }
  void sub_from(T& x, const T& y) const { x = x >= y ? x - y : x + m - y; }
  void add_scaled(T& x, const T& y, std::int64_t c) const { add_to(x, mul(y, reduce(c))); }
  T from_int(std::int64_t c) const { return reduce(c); }

  Acc acc() const { return 0; }
  void acc_addmul(Acc& acc, const T& x, const T& y) const { acc += static_cast<Acc>(x * y); }
  T acc_finish(const Acc& acc) const { return static_cast<T>(acc % m); }
};

/// out[k] = sum_{i+j=k} a[i] b[j] for k < n.
template <class Ops>
std::vector<typename Ops::T> convolve_schoolbook(const Ops& ops, std::span<const typename Ops::T> a,
                                                 std::span<const typename Ops::T> b, std::size_t n) {
  std::vector<typename Ops::T> out(n, ops.zero());
  for (std::size_t k = 0; k < n; ++k) {
    auto acc = ops.acc();
    std::size_t lo = k >= b.size() ? k - b.size() + 1 : 0;
    std::size_t hi = std::min(k + 1, a.size());
    for (std::size_t i = lo; i < hi; ++i) {
      if (!ops.is_zero(a[i])) ops.acc_addmul(acc, a[i], b[k - i]);
    }
    out[k] = ops.acc_finish(acc);
  }
  return out;
}

namespace karatsuba_impl {

// Full product of two equal-length blocks into out (length 2n - 1).
template <class Ops>
void product(const Ops& ops, std::span<const typename Ops::T> a, std::span<const typename Ops::T> b,
             std::span<typename Ops::T> out) {
  using T = typename Ops::T;
  const std::size_t n = a.size();
  if (n <= 32) {
    auto full = convolve_schoolbook<Ops>(ops, a, b, 2 * n - 1);
    std::copy(full.begin(), full.end(), out.begin());
    return;
  }
  const std::size_t h = n / 2;
  const std::size_t hi = n - h;  // hi >= h
  auto a0 = a.first(h), a1 = a.subspan(h);
  auto b0 = b.first(h), b1 = b.subspan(h);

  std::vector<T> z0(2 * h - 1, ops.zero());
  std::vector<T> z2(2 * hi - 1, ops.zero());
  product<Ops>(ops, a0, b0, z0);
  product<Ops>(ops, a1, b1, z2);

  std::vector<T> sa(hi), sb(hi);
  for (std::size_t i = 0; i < hi; ++i) {
    sa[i] = a1[i];
    sb[i] = b1[i];
    if (i < h) {
      ops.add_to(sa[i], a0[i]);
      ops.add_to(sb[i], b0[i]);
    }
  }
  std::vector<T> z1(2 * hi - 1, ops.zero());
  product<Ops>(ops, std::span<const T>(sa), std::span<const T>(sb), z1);
  for (std::size_t i = 0; i < z0.size(); ++i) ops.sub_from(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) ops.sub_from(z1[i], z2[i]);

  std::fill(out.begin(), out.end(), ops.zero());
  for (std::size_t i = 0; i < z0.size(); ++i) ops.add_to(out[i], z0[i]);
  for (std::size_t i = 0; i < z1.size(); ++i) ops.add_to(out[i + h], z1[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) ops.add_to(out[i + 2 * h], z2[i]);
}

}  // namespace karatsuba_impl

/// Same contract as convolve_schoolbook, via Karatsuba on zero-padded blocks.
template <class Ops>
std::vector<typename Ops::T> convolve_karatsuba(const Ops& ops, std::span<const typename Ops::T> a,
                                                std::span<const typename Ops::T> b, std::size_t n) {
  using T = typename Ops::T;
  const std::size_t len = std::max({std::min(a.size(), n), std::min(b.size(), n), std::size_t{1}});
  std::vector<T> pa(len, ops.zero()), pb(len, ops.zero());
  std::copy_n(a.begin(), std::min(a.size(), len), pa.begin());
  std::copy_n(b.begin(), std::min(b.size(), len), pb.begin());
  std::vector<T> full(2 * len - 1, ops.zero());
  karatsuba_impl::product<Ops>(ops, std::span<const T>(pa), std::span<const T>(pb), full);
  full.resize(n, ops.zero());
  return full;
}

/// Power-series inverse to n terms; a[0] must be a unit.
template <class Ops>
std::vector<typename Ops::T> inverse_series(const Ops& ops, std::span<const typename Ops::T> a, std::size_t n) {
  std::vector<typename Ops::T> out(n, ops.zero());
  const auto inv0 = ops.inverse(a[0]);
  out[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    auto acc = ops.acc();
    const std::size_t hi = std::min(k, a.size() - 1);
    for (std::size_t i = 1; i <= hi; ++i) {
      if (!ops.is_zero(a[i])) ops.acc_addmul(acc, a[i], out[k - i]);
    }
    out[k] = ops.mul(ops.neg(ops.acc_finish(acc)), inv0);
  }
  return out;
}

/// A sparse series 1 + sum c_k q^{s_k} (all s_k > 0), listed without the leading 1.
using SparseTerms = std::vector<std::pair<std::size_t, std::int64_t>>;

/// x <- x * (1 + sum c_k q^{s_k}), truncated to x.size().
template <class Ops>
void multiply_sparse(const Ops& ops, std::vector<typename Ops::T>& x, const SparseTerms& terms) {
  for (std::size_t n = x.size(); n-- > 0;) {
    for (const auto& [s, c] : terms) {
      if (s > n) break;
      ops.add_scaled(x[n], x[n - s], c);
    }
  }
}

/// x <- x / (1 + sum c_k q^{s_k}), truncated to x.size(). Terms sorted by shift.
template <class Ops>
void divide_sparse(const Ops& ops, std::vector<typename Ops::T>& x, const SparseTerms& terms) {
  for (std::size_t n = 0; n < x.size(); ++n) {
    for (const auto& [s, c] : terms) {
      if (s > n) break;
      ops.add_scaled(x[n], x[n - s], -c);
    }
  }
}

}  // namespace mockcong::detail
