// Copyright 2026 The endokl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "endokl/query.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <map>
#include <set>

namespace endokl {

namespace {

// --- request access ---------------------------------------------------------

void check_keys(const Json& req, std::initializer_list<const char*> allowed) {
  if (!req.is_object()) throw ParseError("request must be a JSON object");
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [k, v] : req.items())
    if (!ok.count(k)) throw ParseError("unknown request field '" + k + "'");
}

const Json& field(const Json& req, const char* key) {
  auto it = req.find(key);
  if (it == req.end() || it->is_null()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

bool has(const Json& req, const char* key) {
  auto it = req.find(key);
  return it != req.end() && !it->is_null();
}

std::string text_field(const Json& req, const char* key) {
  const Json& j = field(req, key);
  if (!j.is_string()) throw ParseError(std::string("field '") + key + "' must be a string");
  return j.get<std::string>();
}

long long int_field(const Json& req, const char* key, long long fallback) {
  if (!has(req, key)) return fallback;
  const Json& j = field(req, key);
  if (!j.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return j.get<long long>();
}

bool bool_field(const Json& req, const char* key, bool fallback) {
  if (!has(req, key)) return fallback;
  const Json& j = field(req, key);
  if (!j.is_boolean()) throw ParseError(std::string("field '") + key + "' must be a boolean");
  return j.get<bool>();
}

// Integer list given as an array or as "c1,c2,...".
IntVec int_list(const Json& j) {
  if (j.is_string()) return parse_int_list(j.get<std::string>());
  if (!j.is_array()) throw ParseError("expected an integer list");
  IntVec out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("expected an integer list");
    out.push_back(x.get<long long>());
  }
  return out;
}

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw ParseError("expected a rational number");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  try {
    std::size_t used = 0;
    const long long p = std::stoll(s.substr(0, slash), &used);
    if (used != s.substr(0, slash).size()) throw ParseError("bad rational '" + s + "'");
    long long q = 1;
    if (slash != std::string::npos) {
      q = std::stoll(s.substr(slash + 1), &used);
      if (used != s.size() - slash - 1) throw ParseError("bad rational '" + s + "'");
    }
    if (q == 0) throw ParseError("zero denominator in '" + s + "'");
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

RootDatum datum_from(const Json& req, const char* key = "type") {
  std::string name = text_field(req, key);
  if (has(req, "rank")) name += std::to_string(int_field(req, "rank", 0));
  return RootDatum::build(name);
}

CoxeterElement element(const SystemPtr& sys, const Json& j) {
  if (j.is_string()) return CoxeterElement::parse(sys, j.get<std::string>());
  std::vector<int> word;
  for (long long label : int_list(j)) word.push_back(sys->generator_for_label(label));
  return CoxeterElement::from_word(sys, word);
}

// --- output helpers -----------------------------------------------------------

Json rationals(const RatVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

Json word_list(const std::vector<CoxeterElement>& ws) {
  Json out = Json::array();
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

Json generator_labels(const SystemPtr& sys, const std::vector<int>& gens) {
  Json out = Json::array();
  for (int g : gens) out.push_back(sys->label(g));
  return out;
}

Json lambda_json(const RationalCoweight& l) { return Json{{"mu", l.mu}, {"n", l.n}}; }

Json order_json(const std::vector<CoxeterElement>& labels) {
  Json out = Json::array();
  for (const auto& a : labels) {
    Json row = Json::array();
    for (const auto& b : labels) row.push_back(bruhat_leq(a, b));
    out.push_back(row);
  }
  return out;
}

// |W_J| by breadth-first search on right multiplication.
long long parabolic_order(const SystemPtr& sys, const std::vector<int>& J) {
  std::vector<CoxeterElement> seen{CoxeterElement::identity(sys)};
  for (std::size_t head = 0; head < seen.size(); ++head)
    for (int s : J) {
      if (seen[head].is_right_descent(s)) continue;
      CoxeterElement v = seen[head].right_multiply(s);
      if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
    }
  return static_cast<long long>(seen.size());
}

// --- commands -------------------------------------------------------------------

Json cmd_roots(const Json& req) {
  check_keys(req, {"type", "rank"});
  RootDatum d = datum_from(req);
  Json roots = Json::array();
  for (const Root& r : d.positive_roots()) roots.push_back({{"root", r.root}, {"coroot", r.coroot}});
  return {{"type", d.name()},         {"rank", d.rank()},       {"cartan", d.cartan()},
          {"positive_roots", roots},  {"rho", rationals(d.rho())},
          {"weyl_order", d.weyl_order()}};
}

Json cmd_weyl(const Json& req) {
  check_keys(req, {"type", "rank", "affine", "max_length", "y", "w", "translation"});
  RootDatum d = datum_from(req);
  const bool affine = bool_field(req, "affine", false);
  SystemPtr sys = affine ? CoxeterSystem::affine_weyl(d) : CoxeterSystem::weyl(d);
  Json out{{"type", sys->name()}, {"rank", sys->rank()}};
  if (has(req, "translation")) {
    if (!affine) throw DomainError("translations live in the affine Weyl group");
    CoxeterElement t = translation_element(sys, d, int_list(field(req, "translation")));
    out["translation"] = int_list(field(req, "translation"));
    out["word"] = t.to_string();
    out["length"] = t.length();
    out["geometric_length"] = geometric_length(d, t);
    return out;
  }
  if (has(req, "w")) {
    CoxeterElement w = element(sys, field(req, "w"));
    out["w"] = w.to_string();
    out["length"] = w.length();
    out["inverse"] = w.inverse().to_string();
    std::vector<int> left, right;
    for (int s = 0; s < sys->rank(); ++s) {
      if (w.is_left_descent(s)) left.push_back(s);
      if (w.is_right_descent(s)) right.push_back(s);
    }
    out["left_descents"] = generator_labels(sys, left);
    out["right_descents"] = generator_labels(sys, right);
    if (has(req, "y")) {
      CoxeterElement y = element(sys, field(req, "y"));
      out["y"] = y.to_string();
      out["bruhat_leq"] = bruhat_leq(y, w);
    }
    if (affine) {
      AffineElement dec = decompose(d, w);
      out["finite_part"] = dec.finite.to_string();
      out["translation"] = dec.translation;
    }
    return out;
  }
  const int max_length = static_cast<int>(int_field(req, "max_length", -1));
  auto elements = enumerate_elements(sys, max_length);
  out["count"] = elements.size();
  out["elements"] = word_list(elements);
  return out;
}

Json cmd_kl(const Json& req, const std::shared_ptr<KLCache>& cache) {
  check_keys(req, {"type", "rank", "affine", "y", "w"});
  RootDatum d = datum_from(req);
  SystemPtr sys = bool_field(req, "affine", false) ? CoxeterSystem::affine_weyl(d)
                                                   : CoxeterSystem::weyl(d);
  CoxeterElement y = element(sys, field(req, "y"));
  CoxeterElement w = element(sys, field(req, "w"));
  KLEngine kl(std::make_shared<const ElementTable>(sys, w.length()), cache);
  Poly p = kl.polynomial(y, w);
  const auto& t = kl.table();
  return {{"type", sys->name()},
          {"y", y.to_string()},
          {"w", w.to_string()},
          {"coefficients", p},
          {"polynomial", format_poly(p)},
          {"value_at_one", evaluate_at_one(p)},
          {"mu", kl.mu(t.id_of(y), t.id_of(w))}};
}

Json endoscopy_json(const StratificationDatum& sd) {
  Json integral = Json::array();
  for (const Root& r : sd.integral_roots) integral.push_back(r.root);
  Json simples = Json::array();
  for (const Root& r : sd.simples) simples.push_back({{"root", r.root}, {"coroot", r.coroot}});
  const long long wj = parabolic_order(sd.zeta_system, sd.J);
  return {{"type", sd.datum.name()},
          {"rank", sd.datum.rank()},
          {"lambda", lambda_json(sd.lambda)},
          {"integral_roots", integral},
          {"simples", simples},
          {"endoscopic_type", sd.zeta_system->name()},
          {"J", generator_labels(sd.zeta_system, sd.J)},
          {"lambda_prime", rationals(sd.lambda_prime)},
          {"y", sd.y.to_string()},
          {"index_set", word_list(sd.index_set)},
          {"parabolic_order", wj},
          {"group_order", wj * static_cast<long long>(sd.index_set.size())}};
}

Json cmd_endoscopy(const Json& req) {
  check_keys(req, {"type", "rank", "lambda"});
  return endoscopy_json(stratification_datum(datum_from(req), parse_lambda(field(req, "lambda"))));
}

Json cmd_strata(const Json& req) {
  check_keys(req, {"type", "rank", "lambda", "alpha"});
  auto sd = stratification_datum(datum_from(req), parse_lambda(field(req, "lambda")));
  IntVec alpha = int_list(field(req, "alpha"));
  return {{"type", sd.datum.name()},
          {"lambda", lambda_json(sd.lambda)},
          {"alpha", alpha},
          {"labels", word_list(strata_for_degree(sd, alpha))}};
}

Json cmd_multiplicity(const Json& req, const std::shared_ptr<KLCache>& cache) {
  check_keys(req, {"type", "rank", "lambda", "threads"});
  auto sd = stratification_datum(datum_from(req), parse_lambda(field(req, "lambda")));
  const long long threads = int_field(req, "threads", 1);
  if (threads < 1) throw DomainError("threads must be positive");
  return to_json(matrix_record(multiplicity_matrix(sd, cache, static_cast<unsigned>(threads))));
}

Json cmd_character(const Json& req, const std::shared_ptr<KLCache>& cache) {
  check_keys(req, {"type", "rank", "lambda", "label", "depth", "costalk"});
  RootDatum d = datum_from(req);
  if (has(req, "costalk")) {
    const long long bound = int_field(req, "costalk", 0);
    if (bound < 0) throw DomainError("costalk height bound must be nonnegative");
    Json terms = Json::array();
    for (const auto& [alpha, poly] : costalk_character(d, static_cast<int>(bound)))
      terms.push_back({{"alpha", alpha}, {"coefficients", poly}, {"polynomial", format_poly(poly)}});
    return {{"type", d.name()}, {"costalk", terms}};
  }
  auto sd = stratification_datum(d, parse_lambda(field(req, "lambda")));
  auto mm = multiplicity_matrix(sd, cache);
  CoxeterElement label = has(req, "label") ? element(sd.zeta_system, field(req, "label"))
                                           : CoxeterElement::identity(sd.zeta_system);
  const long long depth = int_field(req, "depth", 6);
  if (depth < 0) throw DomainError("depth must be nonnegative");
  auto ch = simple_character(mm, sd.label_index(label), static_cast<int>(depth));
  Json terms = Json::array();
  long long total = 0;
  for (const auto& [alpha, m] : ch) {
    terms.push_back({{"depth", alpha}, {"multiplicity", m}});
    total += m;
  }
  return {{"type", d.name()},
          {"lambda", lambda_json(sd.lambda)},
          {"label", label.to_string()},
          {"highest_weight", rationals(highest_weight(sd, label))},
          {"depth", depth},
          {"character", terms},
          {"total", total}};
}

Json cmd_affine(const Json& req, const std::shared_ptr<KLCache>& cache) {
  check_keys(req, {"type", "rank", "mu", "a", "b", "bound", "K", "max_length", "entries", "beta",
                   "beta_delta"});
  RootDatum d = datum_from(req);
  AffineCoweight x{int_list(field(req, "mu")), int_field(req, "a", 1), int_field(req, "b", 0)};
  if (!has(req, "a")) throw ParseError("missing field 'a'");
  if (!has(req, "b")) throw ParseError("missing field 'b'");
  auto sd = affine_endoscopy(d, x);
  Json simples = Json::array();
  for (const auto& s : sd.simples) simples.push_back({{"root", s.root}, {"m", s.m}});
  std::vector<int> J = sd.J;
  Json out{{"type", d.name()},
           {"rank", d.rank()},
           {"lambda", {{"mu", x.mu}, {"a", x.a}, {"b", x.b}}},
           {"level", format_rational(x.level())},
           {"level_class", to_string(sd.level)},
           {"simples", simples},
           {"endoscopic_type", sd.zeta_system->name()},
           {"J", generator_labels(sd.zeta_system, J)},
           {"y", sd.y.to_string()}};
  if (sd.level == LevelClass::Critical) {
    out["finite"] = endoscopy_json(*sd.finite);
    if (has(req, "beta")) {
      Json pairs = Json::array();
      for (const auto& p : critical_strata_index(sd, int_list(field(req, "beta")),
                                                 int_field(req, "beta_delta", 0)))
        pairs.push_back({{"w", p.w.to_string()}, {"alpha", p.alpha}});
      out["pairs"] = pairs;
    }
    return out;
  }
  if (!has(req, "bound")) return out;
  IntVec bound = int_list(field(req, "bound"));
  std::vector<int> K;
  if (has(req, "K"))
    for (long long l : int_list(field(req, "K"))) K.push_back(sd.zeta_system->generator_for_label(l));
  auto labels = affine_strata_index(sd, bound, K, static_cast<int>(int_field(req, "max_length", 64)));
  out["bound"] = bound;
  out["labels"] = word_list(labels);
  out["order"] = order_json(labels);
  if (bool_field(req, "entries", true)) out["entries"] = affine_multiplicities(sd, labels, cache);
  return out;
}

Json cmd_fold(const Json& req) {
  check_keys(req, {"source", "sigma", "k", "alpha"});
  RootDatum src = datum_from(req, "source");
  std::vector<int> sigma;
  for (long long s : int_list(field(req, "sigma"))) {
    if (s < 1 || s > src.rank()) throw DomainError("sigma entry " + std::to_string(s) + " is not a node");
    sigma.push_back(static_cast<int>(s - 1));
  }
  auto fd = fold(src, sigma);
  Json orbits = Json::array();
  for (const auto& o : fd.orbits) {
    Json row = Json::array();
    for (int i : o) row.push_back(i + 1);
    orbits.push_back(row);
  }
  Json out{{"source", src.name()},
           {"sigma", int_list(field(req, "sigma"))},
           {"d", fd.d},
           {"d_i", fd.d_i},
           {"orbits", orbits},
           {"invariant_type", fd.invariant_type},
           {"invariant_cartan", fd.invariant_cartan},
           {"dual_type", fd.dual_type},
           {"dual_cartan", fd.dual_cartan},
           {"twisted", fd.twisted}};
  if (has(req, "k")) out["untwist"] = to_string(untwist_classify(fd, parse_rational(field(req, "k"))));
  if (has(req, "alpha")) {
    IntVec alpha = int_list(field(req, "alpha"));
    out["a"] = coinvariant_map_a(fd, alpha);
    out["coinvariant_class"] = coinvariant_class(fd, alpha);
  }
  return out;
}

Json cmd_oracle(const Json& req, const std::shared_ptr<KLCache>& cache) {
  check_keys(req, {"type", "rank", "lambda", "depth"});
  RootDatum d = datum_from(req);
  RationalCoweight lambda = parse_lambda(field(req, "lambda"));
  auto mm = multiplicity_matrix(stratification_datum(d, lambda), cache);
  auto om = oracle_multiplicity_matrix(d, lambda, static_cast<int>(int_field(req, "depth", 0)));
  const auto kl = weight_keyed(mm);
  const auto oracle = weight_keyed(om);
  Json mismatches = Json::array();
  std::set<std::pair<RatVec, RatVec>> keys;
  for (const auto& [k, v] : kl) keys.insert(k);
  for (const auto& [k, v] : oracle) keys.insert(k);
  for (const auto& k : keys) {
    const long long a = kl.count(k) ? kl.at(k) : 0;
    const long long b = oracle.count(k) ? oracle.at(k) : 0;
    if (a != b)
      mismatches.push_back({{"verma", rationals(k.first)},
                            {"simple", rationals(k.second)},
                            {"kl", a},
                            {"oracle", b}});
  }
  return {{"type", d.name()},      {"lambda", lambda_json(lambda)},
          {"depth", om.depth},     {"size", mm.labels.size()},
          {"agree", mismatches.empty()}, {"mismatches", mismatches}};
}

}  // namespace

// --- schema -------------------------------------------------------------------------

MatrixRecord matrix_record(const MultiplicityMatrix& mm) {
  MatrixRecord r;
  r.type = mm.sd.datum.name();
  r.rank = mm.sd.datum.rank();
  r.mu = mm.sd.lambda.mu;
  r.n = mm.sd.lambda.n;
  for (const auto& w : mm.labels) r.labels.push_back(w.to_string());
  r.order = mm.order;
  r.entries = mm.entries;
  return r;
}

Json to_json(const MatrixRecord& m) {
  return {{"type", m.type},          {"rank", m.rank},   {"lambda", {{"mu", m.mu}, {"n", m.n}}},
          {"labels", m.labels},      {"order", m.order}, {"entries", m.entries}};
}

MatrixRecord matrix_record_from_json(const Json& j) {
  try {
    MatrixRecord r;
    r.type = j.at("type").get<std::string>();
    r.rank = j.at("rank").get<int>();
    r.mu = j.at("lambda").at("mu").get<IntVec>();
    r.n = j.at("lambda").at("n").get<long long>();
    r.labels = j.at("labels").get<std::vector<std::string>>();
    r.order = j.at("order").get<std::vector<std::vector<bool>>>();
    r.entries = j.at("entries").get<IntMatrix>();
    return r;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("matrix JSON: ") + e.what());
  }
}

RationalCoweight parse_lambda(const Json& j) {
  if (j.is_string()) return RationalCoweight::parse(j.get<std::string>());
  if (!j.is_object()) throw ParseError("lambda must be \"c1,...,ck/n\" or {\"mu\", \"n\"}");
  check_keys(j, {"mu", "n"});
  return RationalCoweight(int_list(field(j, "mu")), int_field(j, "n", 1));
}

// --- session -------------------------------------------------------------------------

Session::Session(std::string cache_path)
    : cache_path_(std::move(cache_path)), cache_(std::make_shared<KLCache>()) {
  if (!cache_path_.empty() && std::filesystem::exists(cache_path_)) cache_->load_file(cache_path_);
}

Session::~Session() {
  try {
    flush();
  } catch (...) {
  }
}

void Session::flush() {
  if (!cache_path_.empty() && cache_->dirty()) cache_->save_file(cache_path_);
}

Json Session::run(const std::string& command, const Json& request) {
  try {
    if (command == "roots") return cmd_roots(request);
    if (command == "weyl") return cmd_weyl(request);
    if (command == "kl") return cmd_kl(request, cache_);
    if (command == "endoscopy") return cmd_endoscopy(request);
    if (command == "strata") return cmd_strata(request);
    if (command == "multiplicity") return cmd_multiplicity(request, cache_);
    if (command == "character") return cmd_character(request, cache_);
    if (command == "affine") return cmd_affine(request, cache_);
    if (command == "fold") return cmd_fold(request);
    if (command == "oracle-check") return cmd_oracle(request, cache_);
    if (command == "cache") {
      check_keys(request, {"action", "path"});
      const std::string action = text_field(request, "action");
      if (action == "export") {
        cache_->save_file(text_field(request, "path"));
      } else if (action == "import") {
        cache_->load_file(text_field(request, "path"));
      } else if (action == "clear") {
        cache_->clear();
      } else if (action != "stats") {
        throw ParseError("unknown cache action '" + action + "'");
      }
      const auto st = cache_->stats();
      return {{"action", action},   {"entries", st.entries}, {"hits", st.hits},
              {"misses", st.misses}, {"path", cache_path_}};
    }
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
  throw ParseError("unknown command '" + command + "'");
}

}  // namespace endokl
