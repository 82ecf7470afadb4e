#include "numsg/core.hpp"

#include <algorithm>
#include <sstream>

namespace numsg {

namespace {

// Largest membership vector we are willing to allocate (bits).
constexpr Int kMaxSieve = Int{1} << 28;

std::string join(const std::vector<Int>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  return out.str();
}

}  // namespace

NumericalSemigroup::NumericalSemigroup() : msg_{1} {}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> gens) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "empty generator list");
  for (Int g : gens) {
    if (g <= 0)
      throw Error(ErrorCode::InvalidArgument,
                  "generators must be positive, got " + std::to_string(g));
  }
  if (gcd_of(gens) != 1)
    throw Error(ErrorCode::NotCoprime, "gcd of generators is " + std::to_string(gcd_of(gens)));

  std::vector<Int> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const Int m = sorted.front();

  // Grow the closure until m consecutive members appear; the run start is
  // the conductor, since adding m then covers everything above it.
  BitVector bits;
  Int run = 0;
  Int n = 0;
  for (;; ++n) {
    if (n >= kMaxSieve)
      throw Error(ErrorCode::TooLarge, "conductor exceeds sieve limit for " + join(sorted));
    bool member = n == 0;
    for (Int g : sorted) {
      if (g > n) break;
      if (bits.test(static_cast<std::size_t>(n - g))) {
        member = true;
        break;
      }
    }
    bits.push_back(member);
    run = member ? run + 1 : 0;
    if (run == m) break;
  }
  bits.resize(static_cast<std::size_t>(n - m + 1));
  return from_bits(std::move(bits));
}

NumericalSemigroup NumericalSemigroup::from_membership(
    Int bound, const std::function<bool(Int)>& is_member) {
  if (bound <= 0) return NumericalSemigroup();
  if (bound > kMaxSieve) throw Error(ErrorCode::TooLarge, "membership bound exceeds sieve limit");
  BitVector bits(static_cast<std::size_t>(bound));
  bits.set(0);
  for (Int i = 1; i < bound; ++i)
    if (is_member(i)) bits.set(static_cast<std::size_t>(i));
  return from_bits(std::move(bits));
}

NumericalSemigroup NumericalSemigroup::from_bits(BitVector bits) {
  Int conductor = static_cast<Int>(bits.size());
  while (conductor > 0 && bits.test(static_cast<std::size_t>(conductor - 1))) --conductor;
  bits.resize(static_cast<std::size_t>(conductor));

  NumericalSemigroup s;
  if (conductor == 0) return s;
  s.members_ = std::move(bits);
  s.conductor_ = conductor;
  s.genus_ = conductor - static_cast<Int>(s.members_.count());

  Int m = 1;
  while (!s.contains(m)) ++m;

  // Minimal generators other than m live in Ap(S, m), and an Apéry element
  // is decomposable only as a sum of two nonzero Apéry elements.
  std::vector<Int> ap;
  ap.reserve(static_cast<std::size_t>(m));
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  for (Int n = 0; static_cast<Int>(ap.size()) < m; ++n) {
    auto r = static_cast<std::size_t>(n % m);
    if (!seen[r] && s.contains(n)) {
      seen[r] = true;
      ap.push_back(n);
    }
  }
  s.msg_.clear();
  s.msg_.push_back(m);
  for (std::size_t i = 1; i < ap.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 1; j < i && minimal; ++j)
      if (s.contains(ap[i] - ap[j])) minimal = false;
    if (minimal) s.msg_.push_back(ap[i]);
  }
  std::sort(s.msg_.begin(), s.msg_.end());
  return s;
}

std::vector<Int> NumericalSemigroup::gaps() const {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(genus_));
  for (Int n = 1; n < conductor_; ++n)
    if (!contains(n)) out.push_back(n);
  return out;
}

std::string NumericalSemigroup::to_string() const { return join(msg_); }

Invariants invariants(const NumericalSemigroup& s) {
  return Invariants{
      .multiplicity = s.multiplicity(),
      .frobenius = s.frobenius(),
      .genus = s.genus(),
      .embedding_dimension = s.embedding_dimension(),
      .sporadic = s.sporadic_count(),
      .conductor = s.conductor(),
  };
}

std::vector<Int> AperyTable::sorted() const {
  std::vector<Int> out = reps;
  std::sort(out.begin(), out.end());
  return out;
}

AperyTable apery(const NumericalSemigroup& s, Int m) {
  if (m <= 0 || !s.contains(m))
    throw Error(ErrorCode::NotAMember,
                std::to_string(m) + " is not a nonzero element of <" + s.to_string() + ">");
  AperyTable table{m, std::vector<Int>(static_cast<std::size_t>(m), -1)};
  Int filled = 0;
  for (Int n = 0; filled < m; ++n) {
    auto r = static_cast<std::size_t>(n % m);
    if (table.reps[r] < 0 && s.contains(n)) {
      table.reps[r] = n;
      ++filled;
    }
  }
  return table;
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s) {
  if (s.is_naturals()) throw Error(ErrorCode::IsN, "pseudo-Frobenius numbers of N are undefined");
  std::vector<Int> out;
  for (Int x : s.gaps()) {
    // x + s in S for all nonzero s reduces to the minimal generators
    bool pf = std::all_of(s.msg().begin(), s.msg().end(),
                          [&](Int g) { return s.contains(x + g); });
    if (pf) out.push_back(x);
  }
  return out;
}

Int type(const NumericalSemigroup& s) { return static_cast<Int>(pseudo_frobenius(s).size()); }

bool is_symmetric(const NumericalSemigroup& s) { return type(s) == 1; }

Int wilf_margin(const NumericalSemigroup& s) {
  return checked_sub(checked_mul(s.embedding_dimension(), s.sporadic_count()), s.conductor());
}

Int depth(const NumericalSemigroup& s) {
  if (s.is_naturals()) throw Error(ErrorCode::IsN, "depth is undefined for N");
  return ceil_div(s.conductor(), s.multiplicity());
}

Monoid::Monoid(Int scale, NumericalSemigroup base) : scale_(scale), base_(std::move(base)) {
  if (scale < 0) throw Error(ErrorCode::InvalidArgument, "negative monoid scale");
  if (scale == 0) base_ = NumericalSemigroup();
}

Monoid Monoid::from_generators(std::span<const Int> gens) {
  std::vector<Int> nonzero;
  for (Int g : gens) {
    if (g < 0) throw Error(ErrorCode::InvalidArgument, "negative generator " + std::to_string(g));
    if (g > 0) nonzero.push_back(g);
  }
  if (nonzero.empty()) return Monoid();
  const Int g = gcd_of(nonzero);
  for (Int& x : nonzero) x /= g;
  return Monoid(g, NumericalSemigroup::from_generators(nonzero));
}

std::vector<Int> Monoid::msg() const {
  if (scale_ == 0) return {};
  std::vector<Int> out;
  out.reserve(base_.msg().size());
  for (Int x : base_.msg()) out.push_back(checked_mul(x, scale_));
  return out;
}

const NumericalSemigroup& Monoid::as_numerical() const {
  if (scale_ != 1)
    throw Error(ErrorCode::NotNumerical,
                "monoid <" + to_string() + "> has gcd " + std::to_string(scale_));
  return base_;
}

std::string Monoid::to_string() const {
  if (scale_ == 0) return "0";
  return join(msg());
}

}  // namespace numsg
