#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "numsg/arith.hpp"
#include "numsg/bit_vector.hpp"

namespace numsg {

/// Classical invariants of a numerical semigroup.
struct Invariants {
  Int multiplicity = 0;         // m(S)
  Int frobenius = 0;            // F(S), -1 for S = N
  Int genus = 0;                // g(S)
  Int embedding_dimension = 0;  // e(S)
  Int sporadic = 0;             // n(S) = c(S) - g(S)
  Int conductor = 0;            // c(S) = F(S) + 1

  friend bool operator==(const Invariants&, const Invariants&) = default;
};

/// A numerical semigroup: a submonoid of (N,+) with finite complement.
///
/// Stored as its minimal generators together with a membership bit-vector
/// over [0, conductor); every integer at or above the conductor is a member.
/// Values are immutable once built, and two values compare equal exactly
/// when their minimal generating sets agree.
class NumericalSemigroup {
 public:
  /// N itself, with msg = {1} and Frobenius number -1.
  NumericalSemigroup();

  /// The semigroup generated by `gens`. Throws NotCoprime if gcd(gens) != 1.
  static NumericalSemigroup from_generators(std::span<const Int> gens);
  static NumericalSemigroup from_generators(std::initializer_list<Int> gens) {
    return from_generators(std::span<const Int>(gens.begin(), gens.size()));
  }

  /// Builds the semigroup whose members below `bound` are given by
  /// `is_member` and which contains every integer >= bound. The predicate
  /// must describe an additively closed set containing 0.
  static NumericalSemigroup from_membership(Int bound,
                                            const std::function<bool(Int)>& is_member);

  static NumericalSemigroup naturals() { return NumericalSemigroup(); }

  const std::vector<Int>& msg() const noexcept { return msg_; }
  Int multiplicity() const noexcept { return msg_.front(); }
  Int frobenius() const noexcept { return conductor_ - 1; }
  Int conductor() const noexcept { return conductor_; }
  Int genus() const noexcept { return genus_; }
  Int embedding_dimension() const noexcept { return static_cast<Int>(msg_.size()); }
  Int sporadic_count() const noexcept { return conductor_ - genus_; }
  bool is_naturals() const noexcept { return conductor_ == 0; }

  bool contains(Int n) const noexcept {
    if (n < 0) return false;
    if (n >= conductor_) return true;
    return members_.test(static_cast<std::size_t>(n));
  }

  /// Sorted list of gaps (N \ S).
  std::vector<Int> gaps() const;

  /// "4,5"-style rendering of the minimal generators.
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.msg_ == b.msg_;
  }

 private:
  static NumericalSemigroup from_bits(BitVector bits);

  std::vector<Int> msg_;
  BitVector members_;
  Int conductor_ = 0;
  Int genus_ = 0;
};

Invariants invariants(const NumericalSemigroup& s);

/// Apéry set with respect to a nonzero member: reps[r] is the least member
/// congruent to r modulo `base`.
struct AperyTable {
  Int base = 0;
  std::vector<Int> reps;

  /// The representatives in increasing order.
  std::vector<Int> sorted() const;

  friend bool operator==(const AperyTable&, const AperyTable&) = default;
};

/// Throws NotAMember if m is not a positive member of s.
AperyTable apery(const NumericalSemigroup& s, Int m);

/// Pseudo-Frobenius numbers, sorted. Throws IsN for S = N.
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s);

/// t(S) = |PF(S)|.
Int type(const NumericalSemigroup& s);

bool is_symmetric(const NumericalSemigroup& s);

/// e(S) n(S) - c(S); Wilf's inequality holds iff this is >= 0.
Int wilf_margin(const NumericalSemigroup& s);

/// ceil(c(S) / m(S)). Throws IsN for S = N.
Int depth(const NumericalSemigroup& s);

/// A submonoid of (N,+), not necessarily of finite complement.
///
/// Every nontrivial submonoid is g * T for g = gcd of its elements and T a
/// numerical semigroup; that pair is the stored form. The trivial monoid {0}
/// has scale 0.
class Monoid {
 public:
  Monoid() = default;  // {0}
  Monoid(NumericalSemigroup s) : scale_(1), base_(std::move(s)) {}  // NOLINT(implicit)
  Monoid(Int scale, NumericalSemigroup base);

  /// The monoid generated by `gens` (zeros ignored; may be empty).
  static Monoid from_generators(std::span<const Int> gens);
  static Monoid from_generators(std::initializer_list<Int> gens) {
    return from_generators(std::span<const Int>(gens.begin(), gens.size()));
  }

  Int scale() const noexcept { return scale_; }
  const NumericalSemigroup& base() const noexcept { return base_; }
  bool is_trivial() const noexcept { return scale_ == 0; }
  bool is_numerical() const noexcept { return scale_ == 1; }

  /// Minimal generators, sorted. Empty for {0}.
  std::vector<Int> msg() const;

  bool contains(Int n) const noexcept {
    if (n < 0) return false;
    if (scale_ == 0) return n == 0;
    return n % scale_ == 0 && base_.contains(n / scale_);
  }

  /// Throws NotNumerical unless gcd = 1.
  const NumericalSemigroup& as_numerical() const;

  std::string to_string() const;

  friend bool operator==(const Monoid& a, const Monoid& b) {
    return a.scale_ == b.scale_ && (a.scale_ == 0 || a.base_ == b.base_);
  }

 private:
  Int scale_ = 0;
  NumericalSemigroup base_;
};

}  // namespace numsg
