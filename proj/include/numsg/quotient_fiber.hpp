#pragma once

#include <span>
#include <vector>

#include "numsg/core.hpp"

namespace numsg {

/// S/d = {x : dx in S}. Requires d >= 1.
NumericalSemigroup quotient(const NumericalSemigroup& s, Int d);

/// M/d for an arbitrary submonoid; the result keeps the monoid shape.
Monoid quotient(const Monoid& m, Int d);

/// Raised when a semigroup does not lie over the expected quotient. Carries
/// the quotient that was actually computed.
class WrongQuotientError : public Error {
 public:
  WrongQuotientError(const NumericalSemigroup& actual, const NumericalSemigroup& expected, Int d);

  const NumericalSemigroup& actual() const noexcept { return actual_; }

 private:
  NumericalSemigroup actual_;
};

/// A fixed base Δ != N and divisor d >= 2; the fiber is every numerical
/// semigroup S with S/d = Δ.
class FiberContext {
 public:
  FiberContext(NumericalSemigroup delta, Int d);

  const NumericalSemigroup& delta() const noexcept { return delta_; }
  Int d() const noexcept { return d_; }
  const std::vector<Int>& delta_gaps() const noexcept { return delta_gaps_; }
  const std::vector<Int>& d_delta_msg() const noexcept { return d_delta_msg_; }

  /// n in dΔ, decided as d | n and n/d in Δ.
  bool in_d_delta(Int n) const noexcept { return n >= 0 && n % d_ == 0 && delta_.contains(n / d_); }

  /// dΔ as a (non-numerical) monoid.
  Monoid d_delta() const { return Monoid(d_, delta_); }

 private:
  NumericalSemigroup delta_;
  Int d_;
  std::vector<Int> delta_gaps_;
  std::vector<Int> d_delta_msg_;
};

/// A semigroup of the fiber with its relative minimal generators
/// A = msg(S) \ dΔ. S = <A> + dΔ and rank = |A|.
struct FiberElement {
  NumericalSemigroup semigroup;
  std::vector<Int> relative_msg;

  Int rank() const noexcept { return static_cast<Int>(relative_msg.size()); }
};

/// Coin-problem table: entry n is true iff n is a nonnegative integer
/// combination of `gens`, for 0 <= n <= bound.
std::vector<bool> representable(std::span<const Int> gens, Int bound);

/// <X> avoids d(N \ Δ).
bool is_md_set(const FiberContext& ctx, std::span<const Int> x);

/// <X> + dΔ, the smallest fiber monoid containing X. Throws NotAnMdSet.
Monoid md_closure(const FiberContext& ctx, std::span<const Int> x);

/// Throws WrongQuotientError unless s/d = Δ.
FiberElement in_fiber(const FiberContext& ctx, const NumericalSemigroup& s);

/// M ∪ {n, n+1, ...}.
NumericalSemigroup cofinite_extension(const Monoid& m, Int n);

NumericalSemigroup intersect(const NumericalSemigroup& s, const NumericalSemigroup& t);

/// Every fiber element whose relative generators all lie in [1, gen_bound],
/// sorted by (rank, msg).
std::vector<FiberElement> enumerate_fiber(const FiberContext& ctx, Int gen_bound);

namespace detail {
// msg(m) with the members of dΔ removed.
std::vector<Int> strip_d_delta(const FiberContext& ctx, const std::vector<Int>& msg);
}  // namespace detail

}  // namespace numsg
