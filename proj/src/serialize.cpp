#include "numsg/serialize.hpp"

#include <charconv>

namespace numsg {

NumericalSemigroup parse_semigroup(std::string_view text) {
  std::vector<Int> gens;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    Int value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size() || value <= 0)
      throw Error(ErrorCode::ParseError, "expected comma-separated positive integers, got \"" +
                                             std::string(text) + "\"");
    gens.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return NumericalSemigroup::from_generators(gens);
}

Json to_json(const NumericalSemigroup& s) {
  return Json{{"msg", s.msg()}, {"frobenius", s.frobenius()}, {"genus", s.genus()}};
}

Json invariants_json(const NumericalSemigroup& s) {
  const auto inv = invariants(s);
  return Json{{"msg", s.msg()},
              {"multiplicity", inv.multiplicity},
              {"frobenius", inv.frobenius},
              {"genus", inv.genus},
              {"embedding_dimension", inv.embedding_dimension},
              {"sporadic", inv.sporadic},
              {"conductor", inv.conductor}};
}

Json to_json(const Presentation& p) {
  Json relations = Json::array();
  for (const auto& r : p.relations) relations.push_back(Json::array({r.lhs, r.rhs}));
  return Json{{"generators", p.generators}, {"relations", std::move(relations)}};
}

Presentation presentation_from_json(const Json& j) {
  try {
    Presentation p;
    p.generators = j.at("generators").get<std::vector<Int>>();
    for (const auto& r : j.at("relations"))
      p.relations.push_back(Relation{r.at(0).get<Factorization>(), r.at(1).get<Factorization>()});
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed presentation JSON: ") + e.what());
  }
}

Json to_json(const FiberElement& e) {
  return Json{{"msg", e.semigroup.msg()},
              {"relative_msg", e.relative_msg},
              {"rank", e.rank()},
              {"frobenius", e.semigroup.frobenius()},
              {"genus", e.semigroup.genus()}};
}

Json to_json(const AperyTable& t) { return Json{{"base", t.base}, {"reps", t.sorted()}}; }

}  // namespace numsg
