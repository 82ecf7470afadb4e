#include <doctest.h>

#include "numsg/construction.hpp"
#include "numsg/rank.hpp"
#include "test_support.hpp"

using namespace numsg;
using numsg::testing::golden_generators;
using V = std::vector<Int>;

namespace {

NumericalSemigroup sg(std::initializer_list<Int> g) { return NumericalSemigroup::from_generators(g); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

RankOneSpec r1(std::initializer_list<Int> g, Int d, Int x) { return RankOneSpec(FiberContext(sg(g), d), x); }

}  // namespace

TEST_CASE("relative_msg and rank") {
  FiberContext ctx(sg({3, 4, 5}), 2);
  CHECK(relative_msg(ctx, sg({6, 7, 8, 9, 10})) == V{7, 9});
  CHECK(relative_msg(ctx, sg({3, 5})) == V{3, 5});
  CHECK(rank(ctx, sg({6, 7, 8, 9, 10})) == 2);
  CHECK(rank(ctx, ctx.d_delta()) == 0);
  CHECK(code_of([&] { rank(ctx, sg({4, 5})); }) == ErrorCode::WrongQuotient);

  FiberContext ctx45(sg({4, 5}), 3);
  CHECK(relative_msg(ctx45, sg({12, 13, 14, 15})) == V{13, 14});
  for (Int d = 2; d <= 5; ++d) {
    DeltaDaSpec sp(FiberContext(sg({5, 7, 9}), d), 9);
    CHECK(rank(sp.ctx(), build_delta_d_a(sp).semigroup) == d - 1);
  }
}

TEST_CASE("max_rank_witness") {
  auto w = max_rank_witness(FiberContext(sg({3, 4, 5}), 2));
  CHECK(w.bound == 3);
  CHECK(w.b == 6);
  CHECK(w.element.relative_msg == V{7, 9, 11});
  CHECK(w.element.semigroup == sg({6, 7, 8, 9, 10, 11}));
  CHECK(oracle_summary(w.element.semigroup.msg()).e == 6);

  auto v = max_rank_witness(FiberContext(sg({4, 5}), 2));
  CHECK(v.bound == 4);
  CHECK(v.element.rank() == 4);
  CHECK(v.b == 24);
}

TEST_CASE("embedding_dim_via_rank") {
  FiberContext ctx(sg({3, 4, 5}), 2);
  auto a = embedding_dim_via_rank(ctx, sg({6, 7, 8, 9, 10}));
  CHECK(a.e == 5);
  CHECK(a.rank == 2);
  CHECK(a.absorbed.empty());
  auto b = embedding_dim_via_rank(ctx, sg({3, 5}));
  CHECK(b.e == 2);
  CHECK(b.absorbed == V{3, 4, 5});
  auto c = embedding_dim_via_rank(ctx, sg({3, 8, 10}));
  CHECK(c.e == 3);
  CHECK(c.absorbed == V{3});
}

TEST_CASE("mu") {
  FiberContext ctx(sg({3, 4, 5}), 2);
  CHECK(mu(ctx, sg({6, 7, 8, 9, 10})) == 7);
  CHECK(mu(ctx, sg({3, 5})) == 3);
  CHECK(code_of([&] { mu(ctx, ctx.d_delta()); }) == ErrorCode::IsDDelta);
}

TEST_CASE("rank_one_build") {
  auto a = rank_one_build(r1({3, 4, 5}, 2, 3));
  CHECK(a.semigroup == sg({3, 8, 10}));
  CHECK(a.relative_msg == V{3});
  CHECK(rank_one_build(r1({4, 5}, 3, 5)).semigroup == sg({5, 12}));
  CHECK(code_of([] { r1({4, 5}, 2, 4); }) == ErrorCode::NotCoprime);
  CHECK(code_of([] { r1({3, 4, 5}, 2, 1); }) == ErrorCode::NotInDelta);
  CHECK(code_of([] { r1({3, 4, 5}, 2, 2); }) == ErrorCode::NotInDelta);
  CHECK(code_of([] { r1({3, 4, 5}, 2, 6); }) == ErrorCode::InDDelta);
}

TEST_CASE("rank-one invariants and pseudo-Frobenius numbers") {
  CHECK(rank_one_invariants(r1({4, 5}, 3, 5)) == FrobeniusGenus{43, 22});
  CHECK(rank_one_invariants(r1({3, 4, 5}, 2, 3)) == FrobeniusGenus{7, 5});
  CHECK(oracle_summary(V{3, 8, 10}).frobenius == 7);
  CHECK(oracle_summary(V{3, 8, 10}).genus == 5);
  CHECK(rank_one_pf(r1({3, 4, 5}, 2, 3)) == V{5, 7});
  CHECK(rank_one_pf(r1({4, 5}, 3, 5)) == V{43});
  CHECK(rank_one_pf(r1({4, 5}, 2, 5)) == V{27});
  CHECK(is_symmetric(rank_one_build(r1({4, 5}, 2, 5)).semigroup));
}

TEST_CASE("gluing_quotient_check") {
  auto g = gluing_quotient_check(sg({4, 5}), NumericalSemigroup(), 2, 9);
  CHECK(g.semigroup == sg({8, 9, 10}));
  CHECK(g.quotient == sg({4, 5}));
  CHECK(g.certified);
  CHECK(code_of([] { gluing_quotient_check(sg({4, 5}), NumericalSemigroup(), 2, 5); }) ==
        ErrorCode::BadGluing);
  CHECK(code_of([] { gluing_quotient_check(sg({4, 5}), NumericalSemigroup(), 2, 8); }) ==
        ErrorCode::BadGluing);
  CHECK(code_of([] { gluing_quotient_check(sg({4, 5}), NumericalSemigroup(), 3, 7); }) ==
        ErrorCode::BadGluing);

  auto h = gluing_quotient_check(sg({3, 4, 5}), sg({2, 3}), 5, 3);
  CHECK(h.quotient == sg({3, 4, 5}));
  CHECK(h.certified);
  CHECK(h.semigroup == sg({6, 9, 15, 20, 25}));
  auto snap = oracle_closure(h.semigroup.msg(), 5 * 20);
  auto q = oracle_quotient(snap, 5);
  CHECK(q.members == oracle_closure(V{3, 4, 5}, q.bound).members);
  CHECK(code_of([] { gluing_quotient_check(sg({3, 4, 5}), sg({2, 3}), 3, 4); }) == ErrorCode::BadGluing);
  CHECK(code_of([] { gluing_quotient_check(sg({3, 4, 5}), sg({2, 3}), 5, 2); }) == ErrorCode::BadGluing);
}

TEST_CASE("rank-one formulas match the oracle on small bases") {
  for (const auto& msg : oracle_semigroups(7, 6)) {
    auto delta = NumericalSemigroup::from_generators(msg);
    const auto pf_delta = pseudo_frobenius(delta);
    for (Int d = 2; d <= 4; ++d) {
      FiberContext ctx(delta, d);
      for (Int x = 1; x <= delta.conductor() + 2 * d; ++x) {
        if (!delta.contains(x) || ctx.in_d_delta(x) || std::gcd(x, d) != 1) continue;
        RankOneSpec sp(ctx, x);
        V gens{x};
        for (Int g : msg) gens.push_back(d * g);
        const auto o = oracle_summary(gens);
        const auto fg = rank_one_invariants(sp);
        CHECK(fg.frobenius == o.frobenius);
        CHECK(fg.genus == o.genus);
        const auto pf = rank_one_pf(sp);
        CHECK(pf == oracle_pf(oracle_snapshot(gens)));
        CHECK(pf.size() == pf_delta.size());
        auto built = rank_one_build(sp);
        CHECK(built.semigroup.msg() == o.msg);
        CHECK(built.rank() == 1);
        CHECK(mu(ctx, built.semigroup) == x);
      }
    }
  }
}

TEST_CASE("multiples with d=2 are rank one") {
  for (const auto& msg : oracle_semigroups(8, 8)) {
    auto delta = NumericalSemigroup::from_generators(msg);
    FiberContext ctx(delta, 2);
    for (Int a = 1; a <= delta.conductor() + 3; ++a) {
      if (!delta.contains(a) || !delta.contains(a + 1)) continue;
      auto s = build_delta_d_a(DeltaDaSpec(ctx, a)).semigroup;
      CHECK(s == rank_one_build(RankOneSpec(ctx, 2 * a + 1)).semigroup);
    }
  }
}

TEST_CASE("fiber enumeration respects the rank structure") {
  for (const V& g : {V{3, 4, 5}, V{4, 5}, V{3, 5}, V{2, 5}}) {
    auto delta = NumericalSemigroup::from_generators(g);
    for (Int d = 2; d <= 3; ++d) {
      FiberContext ctx(delta, d);
      const Int bound = d * delta.conductor() + 2 * d * delta.multiplicity();
      auto w = max_rank_witness(ctx);
      bool found = false;
      for (const auto& el : enumerate_fiber(ctx, bound)) {
        CHECK(el.rank() <= w.bound);
        auto emb = embedding_dim_via_rank(ctx, el.semigroup);
        CHECK(emb.e == el.semigroup.embedding_dimension());
        CHECK(emb.rank <= emb.e);
        CHECK(emb.e <= emb.rank + delta.embedding_dimension());
        if (el.rank() == 1) CHECK(el.semigroup == rank_one_build(RankOneSpec(ctx, mu(ctx, el.semigroup))).semigroup);
        if (el.semigroup == w.element.semigroup) found = true;
      }
      CHECK(w.element.rank() == w.bound);
      CHECK(found);
    }
  }
}
