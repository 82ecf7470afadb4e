#include "numsg/rank.hpp"

#include <algorithm>
#include <numeric>

namespace numsg {

namespace {

void require_over_delta(const FiberContext& ctx, const Monoid& m) {
  const Monoid q = quotient(m, ctx.d());
  if (q.is_numerical() && q.base() == ctx.delta()) return;
  if (q.is_numerical()) throw WrongQuotientError(q.base(), ctx.delta(), ctx.d());
  throw Error(ErrorCode::WrongQuotient, "quotient by " + std::to_string(ctx.d()) + " is the monoid <" +
                                            q.to_string() + ">, expected <" + ctx.delta().to_string() +
                                            ">");
}

}  // namespace

std::vector<Int> relative_msg(const FiberContext& ctx, const Monoid& m) {
  require_over_delta(ctx, m);
  return detail::strip_d_delta(ctx, m.msg());
}

Int rank(const FiberContext& ctx, const Monoid& m) {
  return static_cast<Int>(relative_msg(ctx, m).size());
}

MaxRankWitness max_rank_witness(const FiberContext& ctx) {
  const Int d = ctx.d();
  const Int dm = checked_mul(d, ctx.delta().multiplicity());
  const Int dF = checked_mul(d, ctx.delta().frobenius());
  const Int b = (dF / dm + 1) * dm;
  std::vector<Int> gens;
  for (Int r = 0; r < dm; ++r)
    if (r % d != 0) gens.push_back(checked_add(b, r));
  gens.insert(gens.end(), ctx.d_delta_msg().begin(), ctx.d_delta_msg().end());
  auto s = NumericalSemigroup::from_generators(gens);
  auto relative = detail::strip_d_delta(ctx, s.msg());
  return MaxRankWitness{(d - 1) * ctx.delta().multiplicity(), b, FiberElement{std::move(s), std::move(relative)}};
}

EmbeddingDecomposition embedding_dim_via_rank(const FiberContext& ctx, const NumericalSemigroup& s) {
  const auto a = relative_msg(ctx, s);
  const auto& base = ctx.delta().msg();
  const auto table = representable(a, ctx.d_delta_msg().back());
  EmbeddingDecomposition out;
  out.rank = static_cast<Int>(a.size());
  for (std::size_t i = 0; i < base.size(); ++i)
    if (table[static_cast<std::size_t>(ctx.d_delta_msg()[i])]) out.absorbed.push_back(base[i]);
  out.e = ctx.delta().embedding_dimension() + out.rank - static_cast<Int>(out.absorbed.size());
  return out;
}

Int mu(const FiberContext& ctx, const Monoid& m) {
  const auto a = relative_msg(ctx, m);
  if (a.empty()) throw Error(ErrorCode::IsDDelta, "the monoid is dΔ itself; mu is undefined");
  return a.front();
}

RankOneSpec::RankOneSpec(FiberContext ctx, Int x) : ctx_(std::move(ctx)), x_(x) {
  if (x_ <= 0 || !ctx_.delta().contains(x_))
    throw Error(ErrorCode::NotInDelta, std::to_string(x_) + " is not a nonzero element of <" +
                                           ctx_.delta().to_string() + ">");
  if (ctx_.in_d_delta(x_))
    throw Error(ErrorCode::InDDelta, std::to_string(x_) + " already lies in dΔ");
  if (std::gcd(x_, ctx_.d()) != 1)
    throw Error(ErrorCode::NotCoprime, "gcd(" + std::to_string(x_) + ", " + std::to_string(ctx_.d()) +
                                           ") != 1, the complement would be infinite");
}

FiberElement rank_one_build(const RankOneSpec& spec) {
  std::vector<Int> gens{spec.x()};
  gens.insert(gens.end(), spec.ctx().d_delta_msg().begin(), spec.ctx().d_delta_msg().end());
  auto s = NumericalSemigroup::from_generators(gens);
  auto relative = detail::strip_d_delta(spec.ctx(), s.msg());
  return FiberElement{std::move(s), std::move(relative)};
}

FrobeniusGenus rank_one_invariants(const RankOneSpec& spec) {
  const auto& delta = spec.ctx().delta();
  const Int d = spec.ctx().d();
  const Int x = spec.x();
  // (d-1)(x-1) is even: d even forces x odd
  return FrobeniusGenus{
      checked_add(checked_mul(d, delta.frobenius()), checked_mul(d - 1, x)),
      checked_add(checked_mul(d, delta.genus()), checked_mul(d - 1, x - 1) / 2),
  };
}

std::vector<Int> rank_one_pf(const RankOneSpec& spec) {
  const Int d = spec.ctx().d();
  const Int shift = checked_mul(d - 1, spec.x());
  std::vector<Int> out;
  for (Int f : pseudo_frobenius(spec.ctx().delta())) out.push_back(checked_add(checked_mul(d, f), shift));
  return out;
}

GluingCertificate gluing_quotient_check(const NumericalSemigroup& delta, const NumericalSemigroup& t,
                                        Int d, Int e) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::BadGluing, why); };
  if (d < 2 || e < 2) fail("gluing coefficients must be >= 2");
  if (std::gcd(d, e) != 1) fail("gluing coefficients must be coprime");
  if (!delta.contains(e)) fail(std::to_string(e) + " is not in <" + delta.to_string() + ">");
  const auto& msg = delta.msg();
  if (t.is_naturals()) {
    if (std::binary_search(msg.begin(), msg.end(), e))
      fail(std::to_string(e) + " is a minimal generator of <" + delta.to_string() + ">");
  } else {
    const auto& tmsg = t.msg();
    if (!t.contains(d) || std::binary_search(tmsg.begin(), tmsg.end(), d))
      fail(std::to_string(d) + " must lie in <" + t.to_string() + "> minus its minimal generators");
  }
  std::vector<Int> gens;
  for (Int n : msg) gens.push_back(checked_mul(d, n));
  for (Int n : t.msg()) gens.push_back(checked_mul(e, n));
  auto s = NumericalSemigroup::from_generators(gens);
  auto q = quotient(s, d);
  const bool ok = q == delta;
  return GluingCertificate{std::move(s), std::move(q), ok};
}

}  // namespace numsg
