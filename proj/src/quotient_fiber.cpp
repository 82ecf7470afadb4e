#include "numsg/quotient_fiber.hpp"

#include <algorithm>
#include <numeric>

namespace numsg {

NumericalSemigroup quotient(const NumericalSemigroup& s, Int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "quotient divisor must be >= 1");
  if (d == 1) return s;
  // dx >= c(S) as soon as x >= ceil(c/d)
  const Int bound = ceil_div(s.conductor(), d);
  return NumericalSemigroup::from_membership(bound, [&](Int x) { return s.contains(x * d); });
}

Monoid quotient(const Monoid& m, Int d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "quotient divisor must be >= 1");
  if (m.is_trivial()) return m;
  // dx in gT  <=>  (g/h) | x  and  (d/h)(x/(g/h)) in T,  h = gcd(g, d)
  const Int h = std::gcd(m.scale(), d);
  return Monoid(m.scale() / h, quotient(m.base(), d / h));
}

namespace {

std::string describe_quotient(const NumericalSemigroup& actual, const NumericalSemigroup& expected,
                              Int d) {
  return "quotient by " + std::to_string(d) + " is <" + actual.to_string() + ">, expected <" +
         expected.to_string() + ">";
}

}  // namespace

WrongQuotientError::WrongQuotientError(const NumericalSemigroup& actual,
                                       const NumericalSemigroup& expected, Int d)
    : Error(ErrorCode::WrongQuotient, describe_quotient(actual, expected, d)), actual_(actual) {}

FiberContext::FiberContext(NumericalSemigroup delta, Int d) : delta_(std::move(delta)), d_(d) {
  if (d_ < 2) throw Error(ErrorCode::InvalidArgument, "fiber divisor d must be >= 2");
  if (delta_.is_naturals()) throw Error(ErrorCode::IsN, "fiber base must differ from N");
  delta_gaps_ = delta_.gaps();
  for (Int n : delta_.msg()) d_delta_msg_.push_back(checked_mul(d_, n));
}

std::vector<bool> representable(std::span<const Int> gens, Int bound) {
  if (bound < 0) return {};
  std::vector<bool> table(static_cast<std::size_t>(bound) + 1, false);
  table[0] = true;
  for (Int g : gens) {
    if (g <= 0 || g > bound) continue;
    for (Int n = g; n <= bound; ++n)
      if (table[static_cast<std::size_t>(n - g)]) table[static_cast<std::size_t>(n)] = true;
  }
  return table;
}

bool is_md_set(const FiberContext& ctx, std::span<const Int> x) {
  const Int top = checked_mul(ctx.d(), ctx.delta().frobenius());
  const auto table = representable(x, top);
  return std::none_of(ctx.delta_gaps().begin(), ctx.delta_gaps().end(),
                      [&](Int gap) { return table[static_cast<std::size_t>(ctx.d() * gap)]; });
}

Monoid md_closure(const FiberContext& ctx, std::span<const Int> x) {
  if (!is_md_set(ctx, x))
    throw Error(ErrorCode::NotAnMdSet, "<X> meets d times a gap of the base semigroup");
  std::vector<Int> gens(x.begin(), x.end());
  gens.insert(gens.end(), ctx.d_delta_msg().begin(), ctx.d_delta_msg().end());
  return Monoid::from_generators(gens);
}

std::vector<Int> detail::strip_d_delta(const FiberContext& ctx, const std::vector<Int>& msg) {
  std::vector<Int> out;
  for (Int n : msg)
    if (!ctx.in_d_delta(n)) out.push_back(n);
  return out;
}

FiberElement in_fiber(const FiberContext& ctx, const NumericalSemigroup& s) {
  NumericalSemigroup q = quotient(s, ctx.d());
  if (q != ctx.delta()) throw WrongQuotientError(q, ctx.delta(), ctx.d());
  return FiberElement{s, detail::strip_d_delta(ctx, s.msg())};
}

NumericalSemigroup cofinite_extension(const Monoid& m, Int n) {
  return NumericalSemigroup::from_membership(n, [&](Int k) { return m.contains(k); });
}

NumericalSemigroup intersect(const NumericalSemigroup& s, const NumericalSemigroup& t) {
  const Int bound = std::max(s.conductor(), t.conductor());
  return NumericalSemigroup::from_membership(bound,
                                             [&](Int k) { return s.contains(k) && t.contains(k); });
}

namespace {

// Depth-first search over relative generator sets A listed in increasing
// order. A new candidate must lie outside the current closure <A> + dΔ
// (otherwise it is not a minimal generator), and the closure must keep
// avoiding d(N \ Δ). Both conditions are monotone in A, so failing
// branches are pruned. Each fiber monoid is reached exactly once, through
// its own relative msg.
class FiberSearch {
 public:
  FiberSearch(const FiberContext& ctx, Int gen_bound) : ctx_(ctx) {
    limit_ = std::max(gen_bound, checked_mul(ctx.d(), ctx.delta().frobenius()));
    for (Int n = 1; n <= gen_bound; ++n)
      if (n % ctx.d() != 0 && ctx.delta().contains(n)) candidates_.push_back(n);
  }

  std::vector<FiberElement> run() {
    std::vector<bool> closure(static_cast<std::size_t>(limit_) + 1, false);
    for (Int n = 0; n <= limit_; ++n) closure[static_cast<std::size_t>(n)] = ctx_.in_d_delta(n);
    std::vector<Int> chosen;
    visit(closure, chosen, 0, 0);
    return std::move(out_);
  }

 private:
  void visit(const std::vector<bool>& closure, std::vector<Int>& chosen, std::size_t next,
             Int g) {
    if (std::gcd(g, ctx_.d()) == 1) emit(chosen);
    for (std::size_t i = next; i < candidates_.size(); ++i) {
      const Int x = candidates_[i];
      if (closure[static_cast<std::size_t>(x)]) continue;
      std::vector<bool> grown = closure;
      for (Int n = x; n <= limit_; ++n)
        if (grown[static_cast<std::size_t>(n - x)]) grown[static_cast<std::size_t>(n)] = true;
      if (hits_d_gap(grown)) continue;
      chosen.push_back(x);
      visit(grown, chosen, i + 1, std::gcd(g, x));
      chosen.pop_back();
    }
  }

  bool hits_d_gap(const std::vector<bool>& closure) const {
    return std::any_of(ctx_.delta_gaps().begin(), ctx_.delta_gaps().end(), [&](Int gap) {
      return closure[static_cast<std::size_t>(ctx_.d() * gap)];
    });
  }

  void emit(const std::vector<Int>& chosen) {
    std::vector<Int> gens = chosen;
    gens.insert(gens.end(), ctx_.d_delta_msg().begin(), ctx_.d_delta_msg().end());
    out_.push_back(FiberElement{NumericalSemigroup::from_generators(gens), chosen});
  }

  const FiberContext& ctx_;
  Int limit_ = 0;
  std::vector<Int> candidates_;
  std::vector<FiberElement> out_;
};

}  // namespace

std::vector<FiberElement> enumerate_fiber(const FiberContext& ctx, Int gen_bound) {
  if (gen_bound < 0) throw Error(ErrorCode::InvalidArgument, "gen_bound must be >= 0");
  auto out = FiberSearch(ctx, gen_bound).run();
  std::sort(out.begin(), out.end(), [](const FiberElement& a, const FiberElement& b) {
    if (a.rank() != b.rank()) return a.rank() < b.rank();
    return a.semigroup.msg() < b.semigroup.msg();
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const FiberElement& a, const FiberElement& b) {
                          return a.semigroup == b.semigroup;
                        }),
            out.end());
  return out;
}

}  // namespace numsg
