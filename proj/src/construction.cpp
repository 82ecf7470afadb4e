#include "numsg/construction.hpp"

#include <stdexcept>

namespace numsg {

DeltaDaSpec::DeltaDaSpec(FiberContext ctx, Int a) : ctx_(std::move(ctx)), a_(a) {
  const auto& delta = ctx_.delta();
  if (a_ <= 0 || !delta.contains(a_) || !delta.contains(a_ + 1))
    throw Error(ErrorCode::InvalidA, "a = " + std::to_string(a_) +
                                         " needs a, a+1 in <" + delta.to_string() + "> and a > 0");
}

Int smallest_valid_a(const NumericalSemigroup& delta) {
  Int a = 1;
  while (!(delta.contains(a) && delta.contains(a + 1))) ++a;
  return a;
}

FiberElement build_delta_d_a(const DeltaDaSpec& spec) {
  const Int d = spec.d();
  const Int da = checked_mul(d, spec.a());
  std::vector<Int> gens = spec.ctx().d_delta_msg();
  for (Int i = 1; i < d; ++i) gens.push_back(checked_add(da, i));
  auto s = NumericalSemigroup::from_generators(gens);
  auto relative = detail::strip_d_delta(spec.ctx(), s.msg());
  return FiberElement{std::move(s), std::move(relative)};
}

Invariants predicted_invariants(const DeltaDaSpec& spec) {
  const auto& delta = spec.delta();
  const Int d = spec.d();
  const Int a = spec.a();
  Invariants out;
  out.multiplicity = checked_mul(d, delta.multiplicity());
  out.frobenius = checked_add(checked_add(checked_mul(d, delta.frobenius()), checked_mul(d, a)), d - 1);
  out.genus = checked_add(checked_mul(d, delta.genus()), checked_mul(d - 1, a));
  out.sporadic = checked_add(checked_mul(d, delta.sporadic_count()), a);
  out.embedding_dimension = delta.embedding_dimension() + d - 1;
  out.conductor = out.frobenius + 1;
  return out;
}

std::vector<std::vector<Int>> predicted_apery_parts(const DeltaDaSpec& spec) {
  const Int d = spec.d();
  const auto base = apery(spec.delta(), spec.delta().multiplicity()).sorted();
  const Int da = checked_mul(d, spec.a());
  std::vector<std::vector<Int>> parts(static_cast<std::size_t>(d));
  for (Int i = 0; i < d; ++i) {
    const Int shift = i == 0 ? 0 : da + i;
    for (Int w : base) parts[static_cast<std::size_t>(i)].push_back(checked_add(shift, checked_mul(d, w)));
  }
  return parts;
}

AperyTable predicted_apery(const DeltaDaSpec& spec) {
  const Int base = checked_mul(spec.d(), spec.delta().multiplicity());
  AperyTable table{base, std::vector<Int>(static_cast<std::size_t>(base), -1)};
  for (const auto& part : predicted_apery_parts(spec)) {
    for (Int w : part) {
      auto& slot = table.reps[static_cast<std::size_t>(w % base)];
      if (slot >= 0) throw std::logic_error("Apéry blocks overlap in residue " + std::to_string(w % base));
      slot = w;
    }
  }
  return table;
}

AperyTable apery_quotient_reduction(const NumericalSemigroup& s, Int d, Int m) {
  if (d < 1 || m <= 0 || m % d != 0 || !s.contains(m))
    throw Error(ErrorCode::BadBase, "base " + std::to_string(m) + " must be a nonzero member divisible by " +
                                        std::to_string(d));
  const auto full = apery(s, m);
  const Int base = m / d;
  AperyTable out{base, std::vector<Int>(static_cast<std::size_t>(base), -1)};
  for (Int w : full.reps)
    if (w % d == 0) out.reps[static_cast<std::size_t>((w / d) % base)] = w / d;
  return out;
}

WilfDecomposition wilf_identity_margin(const DeltaDaSpec& spec) {
  const auto& delta = spec.delta();
  const Int d = spec.d();
  WilfDecomposition out;
  out.lhs = wilf_margin(build_delta_d_a(spec).semigroup);
  out.base_margin_term = checked_mul(d, wilf_margin(delta));
  out.sporadic_term = checked_mul(checked_mul(d, d - 1), delta.sporadic_count());
  out.a_term = checked_mul(spec.a(), delta.embedding_dimension() - 1);
  return out;
}

Int predicted_depth(const DeltaDaSpec& spec) {
  return ceil_div(checked_add(spec.delta().conductor(), spec.a()), spec.delta().multiplicity());
}

EmbeddingRealization realize_embedding_dimension(const NumericalSemigroup& delta, Int k) {
  const Int e = delta.embedding_dimension();
  if (k < e)
    throw Error(ErrorCode::BadTarget, "target " + std::to_string(k) +
                                          " is below e = " + std::to_string(e));
  if (k == e) return EmbeddingRealization{1, delta};
  const Int d = k - (e - 1);
  DeltaDaSpec spec(FiberContext(delta, d), smallest_valid_a(delta));
  return EmbeddingRealization{d, build_delta_d_a(spec).semigroup};
}

}  // namespace numsg
