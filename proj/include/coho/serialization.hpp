#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "coho/archfield.hpp"
#include "coho/cohomological.hpp"
#include "coho/errors.hpp"
#include "coho/induction.hpp"
#include "coho/params.hpp"
#include "coho/purity.hpp"
#include "coho/transfer.hpp"
#include "coho/weight.hpp"

namespace coho {

using nlohmann::json;

/// Parse JSON text, mapping syntax errors onto coho::parse_error.
inline json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
}

inline const char* to_string(FieldMode m) {
  switch (m) {
  case FieldMode::TotallyReal:
    return "totally_real";
  case FieldMode::CM:
    return "cm";
  default:
    return "general";
  }
}

inline json json_of(const ArchField& field) {
  json j;
  j["mode"] = to_string(field.mode());
  j["d"] = field.degree();
  j["conjugation"] = field.conjugation().images();
  if (field.has_galois_data()) {
    json gens = json::array();
    for (const auto& g : field.galois_generators())
      gens.push_back(g.images());
    j["galois_generators"] = std::move(gens);
  }
  return j;
}

inline ArchField field_from_json(const json& j, std::size_t closure_cap = ArchField::kDefaultClosureCap) {
  try {
    const std::string mode = j.at("mode").get<std::string>();
    const int d = j.at("d").get<int>();
    std::optional<std::vector<Permutation>> gens;
    if (j.contains("galois_generators")) {
      gens.emplace();
      for (const auto& g : j.at("galois_generators"))
        gens->emplace_back(g.get<std::vector<int>>());
    }
    std::optional<Permutation> conj;
    if (j.contains("conjugation"))
      conj.emplace(j.at("conjugation").get<std::vector<int>>());

    if (mode == "general") {
      if (!conj)
        throw parse_error("general mode requires an explicit conjugation");
      return ArchField::general(d, std::move(*conj), std::move(gens), closure_cap);
    }
    ArchField f = mode == "totally_real" ? ArchField::totally_real(d)
                  : mode == "cm"         ? ArchField::cm(d)
                                         : throw parse_error("unknown field mode \"" + mode + "\"");
    if (conj && *conj != f.conjugation())
      throw domain_error("stored conjugation contradicts the " + mode + " construction");
    if (gens)
      f = attach_galois_data(std::move(f), std::move(*gens), closure_cap);
    return f;
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid field description: ") + e.what());
  }
}

inline json json_of(const Weight& mu) {
  json comps = json::object();
  for (int e = 0; e < mu.degree(); ++e) {
    auto c = mu.component(e);
    comps[std::to_string(e)] = std::vector<long long>(c.begin(), c.end());
  }
  return json{{"n", mu.rank()}, {"components", std::move(comps)}};
}

inline Weight weight_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    const json& comps = j.at("components");
    if (!comps.is_object() || comps.empty())
      throw parse_error("weight needs a nonempty components object");
    const int d = static_cast<int>(comps.size());
    std::vector<std::vector<long long>> rows(d);
    std::vector<char> seen(d, 0);
    for (const auto& [key, value] : comps.items()) {
      int e = -1;
      try {
        std::size_t pos = 0;
        e = std::stoi(key, &pos);
        if (pos != key.size())
          e = -1;
      } catch (const std::exception&) {
        e = -1;
      }
      if (e < 0 || e >= d)
        throw parse_error("component keys must be the embedding indices 0.." + std::to_string(d - 1) +
                          ", got \"" + key + "\"");
      seen[e] = 1;
      rows[e] = value.get<std::vector<long long>>();
      if (static_cast<int>(rows[e].size()) != n)
        throw domain_error("component " + key + " has length " + std::to_string(rows[e].size()) +
                           ", expected n = " + std::to_string(n));
    }
    for (int e = 0; e < d; ++e)
      if (!seen[e])
        throw parse_error("missing component for embedding " + std::to_string(e));
    return Weight::from_components(rows);
  } catch (const json::exception& e) {
    throw parse_error(std::string("invalid weight description: ") + e.what());
  }
}

inline json json_of(const PurityReport& r) {
  json j;
  j["is_pure"] = r.is_pure;
  if (r.purity_weight)
    j["w"] = *r.purity_weight;
  j["strongly_pure"] = to_string(r.strongly_pure);
  j["is_parallel"] = r.is_parallel;
  if (r.witness)
    j["witness"] = json{{"sigma", r.witness->sigma.images()}, {"weight", json_of(r.witness->conjugated)}};
  return j;
}

inline json json_of(const RepBlock& b) {
  if (const auto* ds = std::get_if<DiscreteSeriesBlock>(&b))
    return json{{"type", "D"}, {"ell", ds->ell}};
  if (const auto* sg = std::get_if<SignCharacter>(&b))
    return json{{"type", "Sign"}, {"eps", sg->eps}};
  const auto& cc = std::get<ComplexCharacter>(b);
  return json{{"type", "ComplexChar"}, {"a_doubled", cc.a.doubled()}, {"b_doubled", cc.b.doubled()}};
}

inline json json_of(const InducedRep& rep) {
  json blocks = json::array();
  for (const auto& b : rep.blocks())
    blocks.push_back(json_of(b));
  return json{{"blocks", std::move(blocks)}, {"tate_twist_doubled", rep.tate_twist().doubled()}};
}

inline json json_of(const ParamSummand& s) {
  if (const auto* t = std::get_if<TwoDimInduced>(&s))
    return json{{"type", "TwoDim"}, {"ell", t->ell}};
  if (const auto* sg = std::get_if<SignCharacter>(&s))
    return json{{"type", "Sign"}, {"eps", sg->eps}};
  const auto& cc = std::get<ComplexCharacter>(s);
  return json{{"type", "ComplexChar"}, {"a_doubled", cc.a.doubled()}, {"b_doubled", cc.b.doubled()}};
}

inline json json_of(const ArchParam& p) {
  json arr = json::array();
  for (const auto& s : p.summands())
    arr.push_back(json_of(s));
  return arr;
}

inline json json_of(const MatchDiff& d) {
  json j;
  j["block"] = d.block;
  j[d.what + "_expected"] = d.expected;
  j[d.what + "_got"] = d.got;
  return j;
}

inline json json_of(const MatchReport& r) {
  json diffs = json::array();
  for (const auto& d : r.diffs)
    diffs.push_back(json_of(d));
  return json{{"match", r.match}, {"diffs", std::move(diffs)}};
}

inline json json_of(const TransferReport& r) {
  json j;
  j["case"] = to_string(r.transfer_case.tag);
  j["n"] = r.transfer_case.n;
  j["N"] = r.transfer_case.gl_rank();
  j["embedding"] = r.embedding;
  j["mu_prime"] = r.mu_prime;
  j["rho_prime_doubled"] = doubled(r.rho_prime);
  j["lambda_prime_doubled"] = doubled(r.lambda_prime);
  j["ell"] = r.ell;
  j["param"] = json_of(r.param);
  j["rep"] = json_of(r.rep);
  j["middle_degree"] = r.middle_degree;
  j["match"] = r.match.match;
  json diffs = json::array();
  for (const auto& d : r.match.diffs)
    diffs.push_back(json_of(d));
  j["diffs"] = std::move(diffs);
  if (r.limit_of_discrete_series)
    j["warnings"] = json::array({"limit-of-discrete-series boundary: some D-block has ell = 0"});
  return j;
}

inline json json_of(const So2nObstruction& o) {
  return json{{"ell_prime", o.ell_prime}, {"ell_required", o.ell_required}, {"mismatch", o.mismatch}};
}

inline json json_of(const RamakrishnanReport& r) {
  json j;
  j["k1"] = r.k1;
  j["k2"] = r.k2;
  j["eps1"] = r.eps1;
  j["eps2"] = r.eps2;
  j["untwisted"] = json_of(r.untwisted);
  j["twisted"] = json_of(r.twisted);
  j["parity_obstruction"] = r.parity_obstruction;
  j["obstruction_two_mu1"] = r.obstruction_two_mu1;
  j["solution"] = json{{"w", r.solution.w},
                       {"mu", std::vector<long long>(r.solution.mu.begin(), r.solution.mu.end())},
                       {"dominant", r.solution.dominant},
                       {"pure", r.solution.pure}};
  j["identities_hold"] = r.identities_hold;
  return j;
}

inline json json_of(const HeckeInfinityType& t) {
  return json{{"f", t.f}};
}

inline CaseTag case_tag_from_string(const std::string& s) {
  if (s == "sp2n" || s == "Sp2n")
    return CaseTag::Sp2n;
  if (s == "so-odd" || s == "SOodd")
    return CaseTag::SOodd;
  if (s == "unitary" || s == "Unitary")
    return CaseTag::Unitary;
  if (s == "so-even" || s == "SOeven")
    return CaseTag::SOeven;
  throw parse_error("unknown transfer case \"" + s + "\" (expected sp2n, so-odd, unitary or so-even)");
}

} // namespace coho
