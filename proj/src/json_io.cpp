#include "spherical/json_io.hpp"

#include <algorithm>
#include <limits>

namespace spherical {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidInput("malformed JSON: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field ") + key);
  return j.at(key);
}

std::vector<Weight> weights_from_json(const json& j) {
  if (!j.is_array()) bad("expected a list of vectors");
  std::vector<Weight> out;
  for (auto& x : j) out.push_back(weight_from_json(x));
  return out;
}

template <class B>
json graded_to_json(const Graded<B>& f, const char* key) {
  json grades = json::array();
  for (auto& [k, comp] : f.grades()) {
    json terms = json::array();
    for (auto& [w, c] : comp) terms.push_back({{key, to_json(w)}, {"coeff", to_json(c)}});
    grades.push_back({{"k", k}, {"terms", terms}});
  }
  json window = json::array();
  window.push_back(f.window().lo ? json(*f.window().lo) : json(nullptr));
  window.push_back(f.window().hi ? json(*f.window().hi) : json(nullptr));
  return {{"grades", grades}, {"window", window}};
}

template <class B>
Graded<B> graded_from_json(const json& j, const char* key) {
  GradeWindow w;
  if (j.is_object() && j.contains("window")) {
    const json& win = j.at("window");
    if (!win.is_array() || win.size() != 2) bad("window must be [lo, hi]");
    if (!win[0].is_null()) w.lo = win[0].get<int>();
    if (!win[1].is_null()) w.hi = win[1].get<int>();
  }
  Graded<B> f(w);
  const json& grades = field(j, "grades");
  if (!grades.is_array()) bad("grades must be a list");
  for (auto& g : grades) {
    const json& k = field(g, "k");
    if (!k.is_number_integer()) bad("grade must be an integer");
    const json& terms = field(g, "terms");
    if (!terms.is_array()) bad("terms must be a list");
    for (auto& t : terms) f.add(k.get<int>(), weight_from_json(field(t, key)), laurent_from_json(field(t, "coeff")));
  }
  return f;
}

}  // namespace

json to_json(const BigInt& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
    return n.convert_to<long long>();
  return n.str();
}

BigInt bigint_from_json(const json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos) bad("bad integer " + s);
    return BigInt(s);
  }
  bad("expected an integer");
}

json to_json(const Weight& w) { return w.coords(); }

Weight weight_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("expected an integer vector");
  std::vector<Weight::value_type> v;
  for (auto& x : j) {
    if (!x.is_number_integer()) bad("vector entries must be integers");
    v.push_back(x.get<Weight::value_type>());
  }
  return Weight(std::move(v));
}

json to_json(const QPoly& p) {
  json out = json::array();
  for (auto& [e, c] : p.terms()) out.push_back({e, to_json(c)});
  return out;
}

QPoly qpoly_from_json(const json& j) {
  if (!j.is_array()) bad("expected [[exp, coeff], ...]");
  QPoly p;
  for (auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer()) bad("bad q-polynomial term");
    p += QPoly::monomial(bigint_from_json(t[1]), t[0].get<int>());
  }
  return p;
}

json to_json(const LaurentCoeff& c) {
  json out = json::array();
  for (auto& [k, v] : c.terms()) out.push_back({k.first, k.second, to_json(v)});
  return out;
}

LaurentCoeff laurent_from_json(const json& j) {
  if (!j.is_array()) bad("expected [[v_exp, x_exp, coeff], ...]");
  LaurentCoeff c;
  for (auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer())
      bad("bad coefficient term");
    c += LaurentCoeff::monomial(bigint_from_json(t[2]), t[0].get<int>(), t[1].get<int>());
  }
  return c;
}

json to_json(const RootDatum& rd) {
  json pos = json::array();
  for (auto& a : rd.positive_roots()) pos.push_back(to_json(a));
  json simple = json::array(), cosimple = json::array();
  for (auto& a : rd.simple_roots()) simple.push_back(to_json(a));
  for (auto& a : rd.simple_coroots()) cosimple.push_back(to_json(a));
  return {{"cartan", rd.label()},
          {"rank", rd.coweight_rank()},
          {"sigma", to_json(rd.sigma())},
          {"simple_roots", simple},
          {"simple_coroots", cosimple},
          {"positive_roots", pos},
          {"rho_b_times_2", to_json(rd.rho_b_times_2())}};
}

RootDatum root_datum_from_json(const json& j) {
  const json& rank = field(j, "rank");
  if (!rank.is_number_unsigned()) bad("rank must be a positive integer");
  std::string label = j.contains("cartan") && j["cartan"].is_string() ? j["cartan"].get<std::string>()
                                                                       : std::string("custom");
  RootDatum rd(label, rank.get<std::size_t>(), weight_from_json(field(j, "sigma")),
               weights_from_json(field(j, "simple_roots")), weights_from_json(field(j, "simple_coroots")));
  if (j.contains("rho_b_times_2") && weight_from_json(j["rho_b_times_2"]) != rd.rho_b_times_2())
    throw InvalidInput("rho_b_times_2 does not match the simple data");
  if (j.contains("positive_roots")) {
    auto given = weights_from_json(j["positive_roots"]);
    std::sort(given.begin(), given.end());
    auto ours = rd.positive_roots();
    std::sort(ours.begin(), ours.end());
    if (given != ours) throw InvalidInput("positive_roots do not match the simple data");
  }
  return rd;
}

json to_json(const HeckeElement& f) { return graded_to_json(f, "mu"); }
HeckeElement hecke_from_json(const json& j) { return graded_from_json<HeckeBasis>(j, "mu"); }
json to_json(const SatakeImage& f) { return graded_to_json(f, "lambda"); }
SatakeImage satake_from_json(const json& j) { return graded_from_json<CharacterBasis>(j, "lambda"); }

json to_json(const IrrDecomp& d) {
  json out = json::array();
  for (auto& c : d) out.push_back({{"lambda", to_json(c.lambda)}, {"mult", to_json(c.mult)}});
  return out;
}

IrrDecomp irr_decomp_from_json(const json& j) {
  if (!j.is_array()) bad("expected a list of constituents");
  IrrDecomp d;
  for (auto& c : j) d.push_back({weight_from_json(field(c, "lambda")), bigint_from_json(field(c, "mult"))});
  return d;
}

json to_json(const VerifyReport& r) {
  json stages = json::array();
  for (auto& s : r.stages)
    stages.push_back({{"name", s.name},
                      {"grades", {s.grade_lo, s.grade_hi}},
                      {"terms_checked", s.terms_checked},
                      {"status", s.pass ? "PASS" : "FAIL"}});
  json out = {{"check", r.check},
              {"N", r.n},
              {"status", r.pass ? "PASS" : "FAIL"},
              {"stages", stages},
              {"seconds", r.seconds}};
  if (r.first_mismatch) {
    const Mismatch& m = *r.first_mismatch;
    out["first_mismatch"] = {{"stage", m.stage},
                             {"grade", m.grade},
                             {"mu", to_json(m.mu)},
                             {"expected", m.expected},
                             {"got", m.got}};
  } else {
    out["first_mismatch"] = nullptr;
  }
  return out;
}

}  // namespace spherical
