#include "numsg/cli.hpp"

#include <CLI11.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "numsg/construction.hpp"
#include "numsg/oracle.hpp"
#include "numsg/presentation.hpp"
#include "numsg/quotient_fiber.hpp"
#include "numsg/rank.hpp"
#include "numsg/serialize.hpp"

namespace numsg::cli {

namespace {

struct Options {
  std::string sgp;
  std::string delta;
  std::optional<Int> d;
  std::optional<Int> a;
  std::optional<Int> x;
  std::optional<Int> bound;
  bool json = false;
  bool oracle = false;
  std::uint64_t seed = 20261016;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string csv(const std::vector<Int>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
  return out.str();
}

std::string vec(const Factorization& f) { return "(" + csv(f) + ")"; }

const char* verdict(bool ok) { return ok ? "MATCH" : "MISMATCH"; }

Int need(const std::optional<Int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

NumericalSemigroup need_sgp(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing required flag ") + flag);
  return parse_semigroup(value);
}

FiberContext context(const Options& o) {
  return FiberContext(need_sgp(o.delta, "--delta"), need(o.d, "--d"));
}

std::string invariants_line(const Invariants& inv) {
  std::ostringstream out;
  out << "m=" << inv.multiplicity << " F=" << inv.frobenius << " g=" << inv.genus
      << " e=" << inv.embedding_dimension << " n=" << inv.sporadic << " c=" << inv.conductor;
  return out.str();
}

Json invariants_record(const Invariants& inv) {
  return Json{{"m", inv.multiplicity}, {"F", inv.frobenius}, {"g", inv.genus},
              {"e", inv.embedding_dimension}, {"n", inv.sporadic}, {"c", inv.conductor}};
}

bool oracle_agrees(const NumericalSemigroup& s) {
  const auto o = oracle_summary(s.msg());
  const auto inv = invariants(s);
  return o.msg == s.msg() && o.m == inv.multiplicity && o.frobenius == inv.frobenius &&
         o.genus == inv.genus && o.n == inv.sporadic && o.c == inv.conductor;
}

void emit(std::ostream& out, const Options& o, const Json& record, const std::string& text) {
  if (o.json)
    out << record.dump() << '\n';
  else
    out << text << '\n';
}

void cmd_invariants(const Options& o, std::ostream& out) {
  const auto s = need_sgp(o.sgp, "--sgp");
  Json j = invariants_json(s);
  std::string text = "msg=" + s.to_string() + " " + invariants_line(invariants(s));
  if (o.oracle) {
    const bool ok = oracle_agrees(s);
    j["oracle"] = verdict(ok);
    text += std::string("\noracle: ") + verdict(ok);
  }
  emit(out, o, j, text);
}

void cmd_quotient(const Options& o, std::ostream& out) {
  const auto s = need_sgp(o.sgp, "--sgp");
  const Int d = need(o.d, "--d");
  const auto q = quotient(s, d);
  Json j = to_json(q);
  std::string text = q.to_string();
  if (o.oracle) {
    const auto snap = oracle_quotient(oracle_snapshot(s.msg()), d);
    bool ok = true;
    for (Int k = 0; k <= snap.bound; ++k) ok = ok && snap.contains(k) == q.contains(k);
    j["oracle"] = verdict(ok);
    text += std::string("\noracle: ") + verdict(ok);
  }
  emit(out, o, j, text);
}

void cmd_multiple(const Options& o, std::ostream& out) {
  const auto ctx = context(o);
  const Int a = o.a ? *o.a : smallest_valid_a(ctx.delta());
  const DeltaDaSpec spec(ctx, a);
  const auto built = build_delta_d_a(spec);
  const auto constructed = invariants(built.semigroup);
  const auto predicted = predicted_invariants(spec);
  const Int depth_built = depth(built.semigroup);
  const Int depth_pred = predicted_depth(spec);
  const auto ap_built = apery(built.semigroup, predicted.multiplicity);
  const auto ap_pred = predicted_apery(spec);
  bool ok = constructed == predicted && depth_built == depth_pred && ap_built == ap_pred;
  if (o.oracle) ok = ok && oracle_agrees(built.semigroup);

  Json j{{"delta", ctx.delta().msg()},
         {"d", ctx.d()},
         {"a", a},
         {"msg", built.semigroup.msg()},
         {"relative_msg", built.relative_msg},
         {"constructed", invariants_record(constructed)},
         {"predicted", invariants_record(predicted)},
         {"depth", Json{{"constructed", depth_built}, {"predicted", depth_pred}}},
         {"apery", ap_built.sorted()},
         {"verdict", verdict(ok)}};
  std::ostringstream text;
  text << "delta=" << ctx.delta().to_string() << " d=" << ctx.d() << " a=" << a << '\n'
       << "msg=" << built.semigroup.to_string() << " relative_msg=" << csv(built.relative_msg) << '\n'
       << "constructed: " << invariants_line(constructed) << " depth=" << depth_built << '\n'
       << "predicted:   " << invariants_line(predicted) << " depth=" << depth_pred << '\n'
       << "apery(" << ap_built.base << ")=" << csv(ap_built.sorted()) << '\n'
       << verdict(ok);
  emit(out, o, j, text.str());
}

void cmd_rank_one(const Options& o, std::ostream& out) {
  const RankOneSpec spec(context(o), need(o.x, "--x"));
  const auto built = rank_one_build(spec);
  const auto formula = rank_one_invariants(spec);
  const auto pf_formula = rank_one_pf(spec);
  const auto pf_built = pseudo_frobenius(built.semigroup);
  bool ok = formula == FrobeniusGenus{built.semigroup.frobenius(), built.semigroup.genus()} &&
            pf_formula == pf_built;
  if (o.oracle) ok = ok && oracle_pf(oracle_snapshot(built.semigroup.msg())) == pf_built;
  Json j{{"msg", built.semigroup.msg()},
         {"relative_msg", built.relative_msg},
         {"rank", built.rank()},
         {"constructed", Json{{"frobenius", built.semigroup.frobenius()},
                              {"genus", built.semigroup.genus()},
                              {"pf", pf_built}}},
         {"predicted", Json{{"frobenius", formula.frobenius}, {"genus", formula.genus}, {"pf", pf_formula}}},
         {"verdict", verdict(ok)}};
  std::ostringstream text;
  text << "msg=" << built.semigroup.to_string() << " rank=" << built.rank() << '\n'
       << "constructed: F=" << built.semigroup.frobenius() << " g=" << built.semigroup.genus()
       << " PF=" << csv(pf_built) << '\n'
       << "predicted:   F=" << formula.frobenius << " g=" << formula.genus << " PF=" << csv(pf_formula)
       << '\n'
       << verdict(ok);
  emit(out, o, j, text.str());
}

void cmd_fiber_check(const Options& o, std::ostream& out) {
  const auto ctx = context(o);
  const auto element = in_fiber(ctx, need_sgp(o.sgp, "--sgp"));
  emit(out, o, to_json(element),
       "in fiber: msg=" + element.semigroup.to_string() + " relative_msg=" + csv(element.relative_msg) +
           " rank=" + std::to_string(element.rank()));
}

void cmd_fiber_enum(const Options& o, std::ostream& out) {
  const auto ctx = context(o);
  for (const auto& e : enumerate_fiber(ctx, need(o.bound, "--bound"))) {
    emit(out, o, to_json(e),
         "msg=" + e.semigroup.to_string() + " relative_msg=" + csv(e.relative_msg) +
             " rank=" + std::to_string(e.rank()) + " F=" + std::to_string(e.semigroup.frobenius()) +
             " g=" + std::to_string(e.semigroup.genus()));
  }
}

void cmd_rank(const Options& o, std::ostream& out) {
  const auto ctx = context(o);
  const auto s = need_sgp(o.sgp, "--sgp");
  const auto dec = embedding_dim_via_rank(ctx, s);
  const auto rel = relative_msg(ctx, s);
  const Int m = mu(ctx, s);
  Json j{{"rank", dec.rank},
         {"relative_msg", rel},
         {"mu", m},
         {"e", dec.e},
         {"e_delta", ctx.delta().embedding_dimension()},
         {"absorbed", dec.absorbed}};
  std::ostringstream text;
  text << "rank=" << dec.rank << " relative_msg=" << csv(rel) << " mu=" << m << '\n'
       << "e=" << dec.e << " = e(delta) " << ctx.delta().embedding_dimension() << " + rank " << dec.rank
       << " - absorbed " << dec.absorbed.size() << " {" << csv(dec.absorbed) << "}";
  emit(out, o, j, text.str());
}

void cmd_apery(const Options& o, std::ostream& out) {
  const auto s = need_sgp(o.sgp, "--sgp");
  const Int base = o.x ? *o.x : s.multiplicity();
  const auto table = o.d ? apery_quotient_reduction(s, *o.d, base) : apery(s, base);
  Json j = to_json(table);
  std::string text = csv(table.sorted());
  if (o.oracle) {
    const auto target = o.d ? quotient(s, *o.d) : s;
    const bool ok = oracle_apery(oracle_snapshot(target.msg()), table.base) == table.sorted();
    j["oracle"] = verdict(ok);
    text += std::string("\noracle: ") + verdict(ok);
  }
  emit(out, o, j, text);
}

void cmd_pf(const Options& o, std::ostream& out) {
  const auto s = need_sgp(o.sgp, "--sgp");
  const auto pf = pseudo_frobenius(s);
  const bool sym = pf.size() == 1;
  Json j{{"pf", pf}, {"type", pf.size()}, {"symmetric", sym}};
  std::string text = csv(pf) + "\ntype=" + std::to_string(pf.size()) + " symmetric=" + (sym ? "true" : "false");
  if (o.oracle) {
    const bool ok = oracle_pf(oracle_snapshot(s.msg())) == pf;
    j["oracle"] = verdict(ok);
    text += std::string("\noracle: ") + verdict(ok);
  }
  emit(out, o, j, text);
}

void cmd_presentation(const Options& o, std::ostream& out) {
  NumericalSemigroup s;
  Presentation p;
  if (!o.sgp.empty()) {
    s = parse_semigroup(o.sgp);
    p = minimal_presentation(s);
  } else {
    const auto ctx = context(o);
    const DeltaDaSpec spec(ctx, o.a ? *o.a : smallest_valid_a(ctx.delta()));
    s = build_delta_d_a(spec).semigroup;
    p = lifted_presentation(spec);
  }
  const Int bound = o.bound ? *o.bound : betti_bound(s);
  if (o.json) {
    out << to_json(p).dump() << '\n';
    return;
  }
  out << "generators: " << csv(p.generators) << '\n';
  for (const auto& r : p.relations) out << vec(r.lhs) << " ~ " << vec(r.rhs) << '\n';
  out << "verified up to " << bound << ": " << (verify_presentation(s, p, bound) ? "true" : "false") << '\n';
  if (o.oracle) {
    std::vector<OracleRelation> rel;
    for (const auto& r : p.relations) rel.emplace_back(r.lhs, r.rhs);
    bool ok = true;
    for (Int n = 0; n <= bound && ok; ++n) ok = oracle_congruence_connected(p.generators, rel, n);
    out << "oracle: " << verdict(ok) << '\n';
  }
}

void cmd_wilf(const Options& o, std::ostream& out) {
  if (!o.sgp.empty()) {
    const Int margin = wilf_margin(parse_semigroup(o.sgp));
    emit(out, o, Json{{"wilf_margin", margin}}, "wilf_margin=" + std::to_string(margin));
    return;
  }
  const auto ctx = context(o);
  const DeltaDaSpec spec(ctx, o.a ? *o.a : smallest_valid_a(ctx.delta()));
  const auto w = wilf_identity_margin(spec);
  Json j{{"lhs", w.lhs},
         {"terms", Json::array({w.base_margin_term, w.sporadic_term, w.a_term})},
         {"sum", w.sum()},
         {"verdict", verdict(w.lhs == w.sum())}};
  emit(out, o, j,
       "lhs=" + std::to_string(w.lhs) + " = " + std::to_string(w.base_margin_term) + " + " +
           std::to_string(w.sporadic_term) + " + " + std::to_string(w.a_term) + "\n" +
           verdict(w.lhs == w.sum()));
}

void cmd_depth(const Options& o, std::ostream& out) {
  if (!o.sgp.empty()) {
    const Int q = depth(parse_semigroup(o.sgp));
    emit(out, o, Json{{"depth", q}}, "depth=" + std::to_string(q));
    return;
  }
  const auto ctx = context(o);
  const DeltaDaSpec spec(ctx, o.a ? *o.a : smallest_valid_a(ctx.delta()));
  const Int predicted = predicted_depth(spec);
  const Int built = depth(build_delta_d_a(spec).semigroup);
  emit(out, o, Json{{"constructed", built}, {"predicted", predicted}, {"verdict", verdict(built == predicted)}},
       "constructed=" + std::to_string(built) + " predicted=" + std::to_string(predicted) + "\n" +
           verdict(built == predicted));
}

void cmd_max_rank(const Options& o, std::ostream& out) {
  const auto w = max_rank_witness(context(o));
  Json j{{"bound", w.bound},  {"B", w.b}, {"msg", w.element.semigroup.msg()},
         {"relative_msg", w.element.relative_msg}, {"rank", w.element.rank()}};
  emit(out, o, j,
       "bound=" + std::to_string(w.bound) + " B=" + std::to_string(w.b) + "\nmsg=" +
           w.element.semigroup.to_string() + " relative_msg=" + csv(w.element.relative_msg) +
           " rank=" + std::to_string(w.element.rank()));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical semigroups, their quotients and fixed-quotient fibers", "numsg"};
  app.fallthrough();
  app.require_subcommand(1);

  Options o;
  app.add_flag("--json", o.json, "Emit single-line JSON records");
  app.add_flag("--oracle", o.oracle, "Cross-check against brute-force references");
  app.add_option("--seed", o.seed, "Seed for randomized drivers");

  struct Sub {
    const char* name;
    const char* help;
    void (*handler)(const Options&, std::ostream&);
  };
  const Sub subs[] = {
      {"invariants", "m, F, g, e, n, c of --sgp", cmd_invariants},
      {"quotient", "--sgp divided by --d", cmd_quotient},
      {"multiple", "build the multiple for --delta --d --a and compare with its closed forms", cmd_multiple},
      {"rank-one", "<x> + d*delta for --delta --d --x with closed-form F, g, PF", cmd_rank_one},
      {"fiber-check", "decide whether --sgp lies over --delta at --d", cmd_fiber_check},
      {"fiber-enum", "fiber elements with relative generators <= --bound", cmd_fiber_enum},
      {"rank", "relative generators, rank, mu and embedding dimension of --sgp", cmd_rank},
      {"apery", "Apery set of --sgp at --x (default m); with --d, of the quotient", cmd_apery},
      {"pf", "pseudo-Frobenius numbers of --sgp", cmd_pf},
      {"presentation", "minimal presentation of --sgp, or lifted for --delta --d --a", cmd_presentation},
      {"wilf", "Wilf margin of --sgp, or its decomposition for --delta --d --a", cmd_wilf},
      {"depth", "depth of --sgp, or predicted vs built for --delta --d --a", cmd_depth},
      {"max-rank", "maximal rank in the fiber of --delta --d and a witness", cmd_max_rank},
  };
  std::vector<std::pair<CLI::App*, const Sub*>> registered;
  for (const auto& sub : subs) {
    auto* cmd = app.add_subcommand(sub.name, sub.help);
    cmd->add_option("--sgp", o.sgp, "semigroup generators, comma separated");
    cmd->add_option("--delta", o.delta, "quotient semigroup generators, comma separated");
    cmd->add_option("--d", o.d, "divisor");
    cmd->add_option("--a", o.a, "element a with a, a+1 in delta");
    cmd->add_option("--x", o.x, "rank-one generator, or Apery base element");
    cmd->add_option("--bound", o.bound, "search or verification bound");
    registered.emplace_back(cmd, &sub);
  }

  std::vector<const char*> argv{"numsg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  for (const auto& [cmd, sub] : registered) {
    if (!cmd->parsed()) continue;
    try {
      sub->handler(o, out);
      return 0;
    } catch (const UsageError& e) {
      err << "usage: " << e.what() << '\n';
      return 2;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParseError) {
        err << "usage: " << e.what() << '\n';
        return 2;
      }
      err << "error: " << code_name(e.code()) << ": " << e.what() << '\n';
      return 1;
    }
  }
  return 2;
}

}  // namespace numsg::cli
