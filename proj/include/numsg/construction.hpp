#pragma once

#include <vector>

#include "numsg/core.hpp"
#include "numsg/quotient_fiber.hpp"

namespace numsg {

/// Parameters of the multiple Δ_d(a) = dΔ ∪ ({da+1, ..., da+d-1} + dΔ).
/// Requires a in Δ \ {0} and a+1 in Δ; throws InvalidA otherwise.
class DeltaDaSpec {
 public:
  DeltaDaSpec(FiberContext ctx, Int a);

  const FiberContext& ctx() const noexcept { return ctx_; }
  const NumericalSemigroup& delta() const noexcept { return ctx_.delta(); }
  Int d() const noexcept { return ctx_.d(); }
  Int a() const noexcept { return a_; }

 private:
  FiberContext ctx_;
  Int a_;
};

/// Smallest a >= 1 with a, a+1 both in Δ.
Int smallest_valid_a(const NumericalSemigroup& delta);

/// Δ_d(a) generated by d·msg(Δ) and da+1, ..., da+d-1.
FiberElement build_delta_d_a(const DeltaDaSpec& spec);

/// Closed-form m, F, g, n, e (and c = F+1) of Δ_d(a); does not build it.
Invariants predicted_invariants(const DeltaDaSpec& spec);

/// The d blocks d·Ap(Δ,m) and da+i + d·Ap(Δ,m), i = 1..d-1, with m = m(Δ).
std::vector<std::vector<Int>> predicted_apery_parts(const DeltaDaSpec& spec);

/// Ap(Δ_d(a), d·m(Δ)) assembled from predicted_apery_parts.
AperyTable predicted_apery(const DeltaDaSpec& spec);

/// Ap(S/d, m/d) read off Ap(S, m) by keeping the multiples of d.
/// Throws BadBase unless m is a nonzero member of S divisible by d.
AperyTable apery_quotient_reduction(const NumericalSemigroup& s, Int d, Int m);

/// e(S)n(S) - c(S) for S = Δ_d(a), next to the three terms
/// d(e(Δ)n(Δ) - c(Δ)), d(d-1)n(Δ) and a(e(Δ)-1) that sum to it.
struct WilfDecomposition {
  Int lhs = 0;
  Int base_margin_term = 0;
  Int sporadic_term = 0;
  Int a_term = 0;

  Int sum() const { return checked_add(checked_add(base_margin_term, sporadic_term), a_term); }
};

WilfDecomposition wilf_identity_margin(const DeltaDaSpec& spec);

/// ceil((c(Δ) + a) / m(Δ)).
Int predicted_depth(const DeltaDaSpec& spec);

struct EmbeddingRealization {
  Int d = 1;
  NumericalSemigroup semigroup;
};

/// A multiple S of Δ with e(S) = k, taking d = k - e(Δ) + 1 and the
/// smallest valid a. Throws BadTarget if k < e(Δ).
EmbeddingRealization realize_embedding_dimension(const NumericalSemigroup& delta, Int k);

}  // namespace numsg
