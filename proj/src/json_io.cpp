#include "tic/json_io.hpp"

#include <fstream>

namespace tic {

nlohmann::json family_to_json(const SetFamily& f) {
  nlohmann::json sets = nlohmann::json::array();
  for (const KSubset& a : f.sets) sets.push_back(a.elems);
  return nlohmann::json{{"n", f.n}, {"k", f.k}, {"sets", std::move(sets)}};
}

SetFamily family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("k") || !j.contains("sets")) {
    throw std::invalid_argument("family JSON needs fields n, k, sets");
  }
  int n = j.at("n").get<int>();
  int k = j.at("k").get<int>();
  std::vector<KSubset> sets;
  for (const auto& arr : j.at("sets")) {
    std::vector<int> elems = arr.get<std::vector<int>>();
    for (std::size_t i = 1; i < elems.size(); ++i) {
      if (elems[i] <= elems[i - 1]) {
        throw std::invalid_argument("set elements must be strictly increasing");
      }
    }
    sets.push_back(make_ksubset(n, std::move(elems)));
  }
  return make_family(n, k, std::move(sets));
}

SetFamily load_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return family_from_json(j);
}

void save_family(const std::string& path, const SetFamily& f) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << family_to_json(f).dump(2) << "\n";
}

namespace {

nlohmann::json big_to_json(const BigInt& v) { return v.get_str(); }
nlohmann::json rat_to_json(const Rational& q) { return rational_to_string(q); }

BigInt big_from_json(const nlohmann::json& j) {
  return BigInt(j.get<std::string>());
}

Rational rat_from_json(const nlohmann::json& j) {
  return parse_rational(j.get<std::string>());
}

}  // namespace

nlohmann::json solve_result_to_json(const SolveResult& r) {
  nlohmann::json j{{"n", r.n},
                   {"k", r.k},
                   {"m", r.m},
                   {"mi_value", big_to_json(r.mi_value)},
                   {"witness", family_to_json(r.witness)},
                   {"nodes_explored", r.nodes_explored},
                   {"exact", r.exact}};
  if (r.optima) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SetFamily& f : *r.optima) arr.push_back(family_to_json(f));
    j["optima"] = std::move(arr);
  }
  return j;
}

SolveResult solve_result_from_json(const nlohmann::json& j) {
  SolveResult r;
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  r.m = j.at("m").get<std::uint64_t>();
  r.mi_value = big_from_json(j.at("mi_value"));
  r.witness = family_from_json(j.at("witness"));
  r.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
  r.exact = j.at("exact").get<bool>();
  if (j.contains("optima")) {
    std::vector<SetFamily> opt;
    for (const auto& jf : j.at("optima")) opt.push_back(family_from_json(jf));
    r.optima = std::move(opt);
  }
  return r;
}

nlohmann::json hypothesis_report_to_json(const HypothesisReport& h) {
  return nlohmann::json{{"n", h.n},
                        {"k", h.k},
                        {"t", h.t},
                        {"r", h.r},
                        {"delta", rat_to_json(h.delta)},
                        {"required_n", big_to_json(h.required_n)},
                        {"delta_lo", rat_to_json(h.delta_lo)},
                        {"delta_hi", rat_to_json(h.delta_hi)},
                        {"n_ok", h.n_ok},
                        {"delta_ok", h.delta_ok},
                        {"met", h.met}};
}

HypothesisReport hypothesis_report_from_json(const nlohmann::json& j) {
  HypothesisReport h;
  h.n = j.at("n").get<int>();
  h.k = j.at("k").get<int>();
  h.t = j.at("t").get<int>();
  h.r = j.at("r").get<long>();
  h.delta = rat_from_json(j.at("delta"));
  h.required_n = big_from_json(j.at("required_n"));
  h.delta_lo = rat_from_json(j.at("delta_lo"));
  h.delta_hi = rat_from_json(j.at("delta_hi"));
  h.n_ok = j.at("n_ok").get<bool>();
  h.delta_ok = j.at("delta_ok").get<bool>();
  h.met = j.at("met").get<bool>();
  return h;
}

nlohmann::json bound_report_to_json(const BoundReport& r) {
  nlohmann::json j{{"n", r.n},
                   {"k", r.k},
                   {"t", r.t},
                   {"r", r.r},
                   {"delta", rat_to_json(r.delta)},
                   {"m", big_to_json(r.m)},
                   {"bound_value", rat_to_json(r.bound_value)},
                   {"hypotheses", hypothesis_report_to_json(r.hypotheses)}};
  j["reference_value"] =
      r.reference_value ? big_to_json(*r.reference_value) : nlohmann::json();
  j["bound_holds"] = r.bound_holds ? nlohmann::json(*r.bound_holds) : nlohmann::json();
  j["folded_value"] =
      r.folded_value ? rat_to_json(*r.folded_value) : nlohmann::json();
  return j;
}

BoundReport bound_report_from_json(const nlohmann::json& j) {
  BoundReport r;
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  r.t = j.at("t").get<int>();
  r.r = j.at("r").get<long>();
  r.delta = rat_from_json(j.at("delta"));
  r.m = big_from_json(j.at("m"));
  r.bound_value = rat_from_json(j.at("bound_value"));
  if (!j.at("reference_value").is_null())
    r.reference_value = big_from_json(j.at("reference_value"));
  if (!j.at("bound_holds").is_null())
    r.bound_holds = j.at("bound_holds").get<bool>();
  if (!j.at("folded_value").is_null())
    r.folded_value = rat_from_json(j.at("folded_value"));
  r.hypotheses = hypothesis_report_from_json(j.at("hypotheses"));
  return r;
}

nlohmann::json code_to_json(const ConstantWeightCode& c) {
  return nlohmann::json{{"n", c.n}, {"k", c.k}, {"words", c.words}};
}

ConstantWeightCode code_from_json(const nlohmann::json& j) {
  ConstantWeightCode c;
  c.n = j.at("n").get<int>();
  c.k = j.at("k").get<int>();
  c.words = j.at("words").get<std::vector<std::string>>();
  return c;
}

nlohmann::json min_distance_to_json(const MinDistanceResult& r) {
  nlohmann::json j{{"n", r.n},
                   {"k", r.k},
                   {"m", big_to_json(r.m)},
                   {"total", big_to_json(r.total)},
                   {"mean", rat_to_json(r.mean)},
                   {"witness", code_to_json(r.witness)},
                   {"solve", solve_result_to_json(r.solve)}};
  j["total_lower_bound"] =
      r.total_lower_bound ? rat_to_json(*r.total_lower_bound) : nlohmann::json();
  j["lower_bound_sound"] =
      r.lower_bound_sound ? nlohmann::json(*r.lower_bound_sound) : nlohmann::json();
  return j;
}

MinDistanceResult min_distance_from_json(const nlohmann::json& j) {
  MinDistanceResult r;
  r.n = j.at("n").get<int>();
  r.k = j.at("k").get<int>();
  r.m = big_from_json(j.at("m"));
  r.total = big_from_json(j.at("total"));
  r.mean = rat_from_json(j.at("mean"));
  r.witness = code_from_json(j.at("witness"));
  r.solve = solve_result_from_json(j.at("solve"));
  if (!j.at("total_lower_bound").is_null())
    r.total_lower_bound = rat_from_json(j.at("total_lower_bound"));
  if (!j.at("lower_bound_sound").is_null())
    r.lower_bound_sound = j.at("lower_bound_sound").get<bool>();
  return r;
}

}  // namespace tic
