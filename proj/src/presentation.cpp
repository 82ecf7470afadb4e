#include "numsg/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace numsg {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

void collect(std::span<const Int> gens, std::size_t index, Int remaining, Factorization& current,
             std::vector<Factorization>& out) {
  if (index == gens.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  const Int g = gens[index];
  for (Int k = 0; k * g <= remaining; ++k) {
    current[index] = k;
    collect(gens, index + 1, remaining - k * g, current, out);
  }
  current[index] = 0;
}

void check_balanced(const Presentation& p) {
  for (const auto& r : p.relations) {
    if (evaluate(p.generators, r.lhs) != evaluate(p.generators, r.rhs))
      throw std::logic_error("unbalanced relation in presentation");
    if (r.lhs == r.rhs) throw std::logic_error("trivial relation in presentation");
  }
}

Factorization padded(const Factorization& f, std::size_t width) {
  Factorization out = f;
  out.resize(width, 0);
  return out;
}

}  // namespace

Int evaluate(std::span<const Int> generators, const Factorization& f) {
  if (f.size() != generators.size())
    throw Error(ErrorCode::InvalidArgument, "factorization length does not match generator count");
  Int total = 0;
  for (std::size_t i = 0; i < f.size(); ++i) total = checked_add(total, checked_mul(f[i], generators[i]));
  return total;
}

std::vector<Factorization> factorizations(std::span<const Int> generators, Int n) {
  std::vector<Factorization> out;
  if (n < 0) return out;
  Factorization current(generators.size(), 0);
  collect(generators, 0, n, current, out);
  return out;
}

std::vector<Factorization> factorizations(const NumericalSemigroup& s, Int n) {
  if (!s.contains(n)) return {};
  return factorizations(s.msg(), n);
}

Int betti_bound(const NumericalSemigroup& s) {
  return checked_add(s.frobenius(), checked_mul(2, s.msg().back()));
}

Presentation minimal_presentation(const NumericalSemigroup& s) {
  Presentation p{s.msg(), {}};
  const Int bound = betti_bound(s);
  for (Int n = 1; n <= bound; ++n) {
    if (!s.contains(n)) continue;
    const auto facts = factorizations(s.msg(), n);
    if (facts.size() < 2) continue;
    // factorization graph: adjacent when the supports meet
    UnionFind uf(facts.size());
    for (std::size_t i = 0; i < facts.size(); ++i)
      for (std::size_t j = i + 1; j < facts.size(); ++j)
        for (std::size_t k = 0; k < p.generators.size(); ++k)
          if (facts[i][k] > 0 && facts[j][k] > 0) {
            uf.unite(i, j);
            break;
          }
    // facts is lexicographically increasing, so the first hit per root is
    // the component's least factorization
    std::vector<std::size_t> reps;
    std::vector<bool> taken(facts.size(), false);
    for (std::size_t i = 0; i < facts.size(); ++i) {
      const auto root = uf.find(i);
      if (!taken[root]) {
        taken[root] = true;
        reps.push_back(i);
      }
    }
    std::reverse(reps.begin(), reps.end());
    for (std::size_t i = 0; i + 1 < reps.size(); ++i)
      p.relations.push_back(Relation{facts[reps[i]], facts[reps[i + 1]]});
  }
  check_balanced(p);
  return p;
}

Presentation lifted_presentation(const DeltaDaSpec& spec, const Presentation& sigma,
                                 const Factorization& u, const Factorization& v) {
  const auto& delta = spec.delta();
  const auto& base_gens = delta.msg();
  if (sigma.generators != base_gens)
    throw Error(ErrorCode::InvalidArgument, "sigma must be presented over msg of the base semigroup");
  if (u.size() != base_gens.size() || evaluate(base_gens, u) != spec.a())
    throw Error(ErrorCode::BadFactorization, "u does not factor a = " + std::to_string(spec.a()));
  if (v.size() != base_gens.size() || evaluate(base_gens, v) != spec.a() + 1)
    throw Error(ErrorCode::BadFactorization, "v does not factor a+1 = " + std::to_string(spec.a() + 1));

  const Int d = spec.d();
  const std::size_t e = base_gens.size();
  const std::size_t width = e + static_cast<std::size_t>(d - 1);

  Presentation p;
  p.generators = spec.ctx().d_delta_msg();
  for (Int i = 1; i < d; ++i) p.generators.push_back(checked_add(checked_mul(d, spec.a()), i));

  for (const auto& r : sigma.relations) p.relations.push_back(Relation{padded(r.lhs, width), padded(r.rhs, width)});

  // f_i is the coordinate of da+i
  auto f = [&](Int i) {
    Factorization out(width, 0);
    out[e + static_cast<std::size_t>(i - 1)] = 1;
    return out;
  };
  auto plus = [](Factorization x, const Factorization& y) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += y[k];
    return x;
  };
  const auto uu = padded(u, width);
  const auto vv = padded(v, width);
  for (Int i = 1; i < d; ++i) {
    for (Int j = i; j < d; ++j) {
      Factorization rhs;
      if (i + j < d)
        rhs = plus(uu, f(i + j));
      else if (i + j == d)
        rhs = plus(uu, vv);
      else
        rhs = plus(vv, f(i + j - d));
      p.relations.push_back(Relation{plus(f(i), f(j)), rhs});
    }
  }
  check_balanced(p);
  return p;
}

Presentation lifted_presentation(const DeltaDaSpec& spec) {
  const auto& delta = spec.delta();
  const auto u = factorizations(delta, spec.a());
  const auto v = factorizations(delta, spec.a() + 1);
  return lifted_presentation(spec, minimal_presentation(delta), u.front(), v.front());
}

bool verify_presentation(const NumericalSemigroup& s, const Presentation& p, Int bound) {
  std::vector<Int> sorted = p.generators;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != s.msg())
    throw Error(ErrorCode::InvalidArgument, "presentation generators differ from msg(S)");
  for (const auto& r : p.relations)
    if (r.lhs.size() != p.generators.size() || r.rhs.size() != p.generators.size())
      throw Error(ErrorCode::InvalidArgument, "relation length does not match generator count");

  const std::size_t k = p.generators.size();
  for (Int n = 1; n <= bound; ++n) {
    if (!s.contains(n)) continue;
    const auto facts = factorizations(p.generators, n);
    if (facts.size() < 2) continue;
    std::map<Factorization, std::size_t> index;
    for (std::size_t i = 0; i < facts.size(); ++i) index.emplace(facts[i], i);
    UnionFind uf(facts.size());
    Factorization moved(k);
    for (std::size_t i = 0; i < facts.size(); ++i) {
      for (const auto& r : p.relations) {
        for (int side = 0; side < 2; ++side) {
          const auto& from = side == 0 ? r.lhs : r.rhs;
          const auto& to = side == 0 ? r.rhs : r.lhs;
          bool fits = true;
          for (std::size_t c = 0; c < k && fits; ++c) {
            moved[c] = facts[i][c] - from[c] + to[c];
            fits = facts[i][c] >= from[c];
          }
          if (fits) uf.unite(i, index.at(moved));
        }
      }
    }
    const auto root = uf.find(0);
    for (std::size_t i = 1; i < facts.size(); ++i)
      if (uf.find(i) != root) return false;
  }
  return true;
}

bool verify_presentation(const NumericalSemigroup& s, const Presentation& p) {
  return verify_presentation(s, p, betti_bound(s));
}

}  // namespace numsg
