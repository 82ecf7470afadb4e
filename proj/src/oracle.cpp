#include "numsg/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "numsg/error.hpp"

namespace numsg {

namespace {

using I64 = std::int64_t;

[[noreturn]] void too_small(const std::string& what) { throw Error(ErrorCode::BoundTooSmall, what); }

// -1 when the tail run does not certify the conductor
I64 certified_conductor(const BoundedSet& s) {
  const I64 m = s.smallest_positive();
  if (m < 0 || s.bound - m + 1 < 1) return -1;
  for (I64 k = s.bound - m + 1; k <= s.bound; ++k)
    if (!s.members[static_cast<std::size_t>(k)]) return -1;
  I64 last_gap = -1;
  for (I64 k = s.bound; k >= 0; --k)
    if (!s.members[static_cast<std::size_t>(k)]) {
      last_gap = k;
      break;
    }
  return last_gap + 1;
}

}  // namespace

bool BoundedSet::contains(I64 n) const {
  if (n < 0) return false;
  if (n > bound) too_small("query " + std::to_string(n) + " beyond snapshot bound " + std::to_string(bound));
  return members[static_cast<std::size_t>(n)];
}

I64 BoundedSet::smallest_positive() const {
  for (I64 k = 1; k <= bound; ++k)
    if (members[static_cast<std::size_t>(k)]) return k;
  return -1;
}

I64 BoundedSet::conductor() const {
  const I64 c = certified_conductor(*this);
  if (c < 0) too_small("conductor not visible below bound " + std::to_string(bound));
  return c;
}

BoundedSet oracle_closure(std::span<const I64> gens, I64 bound) {
  if (bound < 0) too_small("negative bound");
  BoundedSet out{bound, std::vector<bool>(static_cast<std::size_t>(bound) + 1, false)};
  out.members[0] = true;
  for (I64 n = 1; n <= bound; ++n)
    for (I64 g : gens)
      if (g > 0 && g <= n && out.members[static_cast<std::size_t>(n - g)]) {
        out.members[static_cast<std::size_t>(n)] = true;
        break;
      }
  return out;
}

BoundedSet oracle_quotient(const BoundedSet& members, I64 d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "quotient divisor must be >= 1");
  const I64 bound = members.bound / d;
  BoundedSet out{bound, std::vector<bool>(static_cast<std::size_t>(bound) + 1, false)};
  for (I64 x = 0; x <= bound; ++x) out.members[static_cast<std::size_t>(x)] = members.contains(d * x);
  return out;
}

std::vector<I64> oracle_pf(const BoundedSet& members) {
  const I64 c = members.conductor();
  if (members.bound < 2 * c) too_small("pseudo-Frobenius scan needs bound >= 2c = " + std::to_string(2 * c));
  std::vector<I64> out;
  for (I64 x = 0; x < c; ++x) {
    if (members.contains(x)) continue;
    bool ok = true;
    for (I64 s = 1; s < c && ok; ++s)
      if (members.contains(s) && !members.contains(x + s)) ok = false;
    if (ok) out.push_back(x);
  }
  return out;
}

bool oracle_congruence_connected(std::span<const I64> gens, std::span<const OracleRelation> relations,
                                 I64 n) {
  if (n < 0) return true;
  const std::size_t k = gens.size();
  // odometer over all exponent vectors with each coordinate <= n / g
  std::vector<std::vector<I64>> facts;
  std::vector<I64> x(k, 0);
  while (true) {
    I64 total = 0;
    for (std::size_t i = 0; i < k; ++i) total += x[i] * gens[i];
    if (total == n) facts.push_back(x);
    std::size_t i = 0;
    while (i < k) {
      ++x[i];
      I64 partial = 0;
      for (std::size_t j = 0; j < k; ++j) partial += x[j] * gens[j];
      if (partial <= n) break;
      x[i] = 0;
      ++i;
    }
    if (i == k) break;
  }
  if (facts.size() < 2) return true;

  std::vector<std::size_t> label(facts.size());
  std::iota(label.begin(), label.end(), 0);
  auto joined = [&](const std::vector<I64>& a, const std::vector<I64>& b, const std::vector<I64>& p,
                    const std::vector<I64>& q) {
    for (std::size_t i = 0; i < k; ++i)
      if (a[i] < p[i] || b[i] < q[i] || a[i] - p[i] != b[i] - q[i]) return false;
    return true;
  };
  for (std::size_t i = 0; i < facts.size(); ++i)
    for (std::size_t j = i + 1; j < facts.size(); ++j) {
      bool edge = false;
      for (const auto& [p, q] : relations)
        if (joined(facts[i], facts[j], p, q) || joined(facts[i], facts[j], q, p)) edge = true;
      if (!edge || label[i] == label[j]) continue;
      const auto from = label[j];
      for (auto& l : label)
        if (l == from) l = label[i];
    }
  return std::all_of(label.begin(), label.end(), [&](std::size_t l) { return l == label[0]; });
}

BoundedSet oracle_snapshot(std::span<const I64> gens) {
  I64 g = 0, top = 0;
  for (I64 x : gens) {
    g = std::gcd(g, x);
    top = std::max(top, x);
  }
  if (g != 1) throw Error(ErrorCode::NotCoprime, "snapshot needs coprime generators");
  for (I64 bound = 2 * top + 2;; bound *= 2) {
    auto snap = oracle_closure(gens, bound);
    const I64 c = certified_conductor(snap);
    if (c >= 0 && bound >= 2 * c + top) return snap;
  }
}

OracleSummary oracle_summary(std::span<const I64> gens) {
  const auto snap = oracle_snapshot(gens);
  OracleSummary out;
  out.c = snap.conductor();
  out.frobenius = out.c - 1;
  out.m = snap.smallest_positive();
  for (I64 k = 0; k < out.c; ++k)
    if (!snap.contains(k)) ++out.genus;
  out.n = out.c - out.genus;
  std::vector<I64> sorted(gens.begin(), gens.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (I64 x : sorted) {
    // x is redundant iff x = y + rest with y a smaller generator, rest in S
    bool redundant = false;
    for (I64 y : sorted) {
      if (y >= x) break;
      if (snap.contains(x - y)) redundant = true;
    }
    if (!redundant) out.msg.push_back(x);
  }
  out.e = static_cast<I64>(out.msg.size());
  return out;
}

std::vector<I64> oracle_apery(const BoundedSet& members, I64 m) {
  const I64 f = members.conductor() - 1;
  if (members.bound < f + m) too_small("Apéry scan needs bound >= F + m");
  std::vector<I64> out;
  for (I64 s = 0; s <= f + m; ++s)
    if (members.contains(s) && !members.contains(s - m)) out.push_back(s);
  return out;
}

std::vector<I64> oracle_msg(const BoundedSet& members) {
  const I64 c = members.conductor();
  const I64 m = members.smallest_positive();
  if (members.bound < c + m) too_small("msg scan needs bound >= c + m");
  std::vector<I64> out;
  for (I64 x = 1; x < c + m; ++x) {
    if (!members.contains(x)) continue;
    bool sum = false;
    for (I64 s = 1; 2 * s <= x && !sum; ++s) sum = members.contains(s) && members.contains(x - s);
    if (!sum) out.push_back(x);
  }
  return out;
}

bool oracle_symmetric(const BoundedSet& members) {
  const I64 f = members.conductor() - 1;
  for (I64 x = 0; x <= f; ++x)
    if (!members.contains(x) && !members.contains(f - x)) return false;
  return true;
}

std::vector<std::vector<I64>> oracle_semigroups(I64 max_genus, I64 max_multiplicity) {
  // F <= 2g - 1 and every minimal generator is below F + m + 1 <= 3g + 1
  const I64 limit = 3 * max_genus + 3;
  struct Node {
    std::vector<bool> mem;
    I64 frobenius;
    I64 genus;
  };
  std::vector<std::vector<I64>> out;
  std::vector<Node> stack{{std::vector<bool>(static_cast<std::size_t>(limit), true), -1, 0}};
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    auto in = [&](I64 k) { return k >= limit || node.mem[static_cast<std::size_t>(k)]; };
    I64 m = 1;
    while (!in(m)) ++m;
    if (m > max_multiplicity) continue;
    std::vector<I64> msg;
    for (I64 x = 1; x < limit; ++x) {
      if (!in(x)) continue;
      bool sum = false;
      for (I64 s = 1; 2 * s <= x && !sum; ++s) sum = in(s) && in(x - s);
      if (!sum) msg.push_back(x);
    }
    if (node.genus > 0) out.push_back(msg);
    if (node.genus == max_genus) continue;
    for (I64 x : msg) {
      if (x <= node.frobenius) continue;
      Node child{node.mem, x, node.genus + 1};
      child.mem[static_cast<std::size_t>(x)] = false;
      stack.push_back(std::move(child));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace numsg
