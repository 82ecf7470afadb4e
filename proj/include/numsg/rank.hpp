#pragma once

#include <vector>

#include "numsg/core.hpp"
#include "numsg/quotient_fiber.hpp"

namespace numsg {

/// msg(M) \ dΔ. Throws WrongQuotientError unless M/d = Δ.
std::vector<Int> relative_msg(const FiberContext& ctx, const Monoid& m);

/// |relative_msg(ctx, m)|; 0 exactly for dΔ.
Int rank(const FiberContext& ctx, const Monoid& m);

struct MaxRankWitness {
  Int bound = 0;  // (d-1) m(Δ)
  Int b = 0;      // least multiple of d m(Δ) above d F(Δ)
  FiberElement element;
};

/// The top of the rank filtration together with a semigroup attaining it,
/// generated over dΔ by {B + r : 0 <= r < d m(Δ), d ∤ r}.
MaxRankWitness max_rank_witness(const FiberContext& ctx);

struct EmbeddingDecomposition {
  Int e = 0;
  Int rank = 0;
  std::vector<Int> absorbed;  // n in msg(Δ) with dn in <A>
};

/// e(S) = e(Δ) + |A| - |{n in msg(Δ) : dn in <A>}|, with the absorbed set
/// decided by coin-problem queries against A.
EmbeddingDecomposition embedding_dim_via_rank(const FiberContext& ctx, const NumericalSemigroup& s);

/// min(M \ dΔ). Throws IsDDelta when M = dΔ.
Int mu(const FiberContext& ctx, const Monoid& m);

/// <x> + dΔ with x in Δ \ dΔ and gcd(x, d) = 1.
class RankOneSpec {
 public:
  /// Throws NotInDelta, InDDelta or NotCoprime.
  RankOneSpec(FiberContext ctx, Int x);

  const FiberContext& ctx() const noexcept { return ctx_; }
  Int x() const noexcept { return x_; }

 private:
  FiberContext ctx_;
  Int x_;
};

FiberElement rank_one_build(const RankOneSpec& spec);

struct FrobeniusGenus {
  Int frobenius = 0;
  Int genus = 0;

  friend bool operator==(const FrobeniusGenus&, const FrobeniusGenus&) = default;
};

/// F = dF(Δ) + (d-1)x and g = d g(Δ) + (d-1)(x-1)/2.
FrobeniusGenus rank_one_invariants(const RankOneSpec& spec);

/// {d f + (d-1)x : f in PF(Δ)}, sorted.
std::vector<Int> rank_one_pf(const RankOneSpec& spec);

struct GluingCertificate {
  NumericalSemigroup semigroup;
  NumericalSemigroup quotient;
  bool certified = false;  // quotient == Δ
};

/// S = <d msg(Δ) ∪ e msg(T)> and its quotient by d. For T = N this needs
/// e in Δ \ msg(Δ) and d, e >= 2; otherwise e in Δ and d in T \ msg(T).
/// gcd(d, e) = 1 always. Throws BadGluing when a hypothesis fails.
GluingCertificate gluing_quotient_check(const NumericalSemigroup& delta, const NumericalSemigroup& t,
                                        Int d, Int e);

}  // namespace numsg
