#pragma once

#include <type_traits>
#include <utility>
#include <vector>

#include "mockcong/detail/kernels.hpp"
#include "mockcong/qseries.hpp"

namespace mockcong::detail {

/// Calls f with the Ops object matching the ring.
template <class F>
decltype(auto) with_ops(const CoefficientRing& ring, F&& f) {
  switch (ring.kind()) {
    case CoefficientRing::Kind::Integer: return f(IntegerOps{});
    case CoefficientRing::Kind::Rational: return f(RationalOps{});
    case CoefficientRing::Kind::IntegerMod: break;
  }
  return f(ModOps{ring.modulus()});
}

template <class Ops>
const std::vector<typename Ops::T>& coeffs_of(const QSeries& a) {
  return std::get<std::vector<typename Ops::T>>(a.storage());
}

template <class Ops>
QSeries make_series(const Ops& ops, Rational offset, std::vector<typename Ops::T> coeffs) {
  if constexpr (std::is_same_v<Ops, ModOps>) {
    return QSeries(std::move(offset), ops.m, std::move(coeffs));
  } else {
    return QSeries(std::move(offset), std::move(coeffs));
  }
}

}  // namespace mockcong::detail
