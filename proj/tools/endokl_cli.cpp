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

#include "endokl/endokl.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <iostream>
#include <memory>
#include <string>

namespace {

using Json = nlohmann::json;

std::string scalar(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

bool is_matrix(const Json& j) {
  return j.is_array() && !j.empty() && j.front().is_array();
}

void print_labelled_matrix(const Json& labels, const Json& entries) {
  std::size_t width = 1;
  for (const auto& l : labels) width = std::max(width, l.get<std::string>().size());
  std::cout << std::string(width, ' ');
  for (const auto& l : labels) std::cout << ' ' << l.get<std::string>();
  std::cout << '\n';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string l = labels[i].get<std::string>();
    std::cout << l << std::string(width - l.size(), ' ');
    for (std::size_t j = 0; j < entries[i].size(); ++j) {
      const std::string v = entries[i][j].dump();
      const std::size_t w = labels[j].get<std::string>().size();
      std::cout << ' ' << std::string(w > v.size() ? w - v.size() : 0, ' ') << v;
    }
    std::cout << '\n';
  }
}

void print_table(const std::string& command, const Json& r) {
  if (command == "kl") {
    std::cout << r["polynomial"].get<std::string>() << '\n';
    return;
  }
  for (const auto& [key, value] : r.items()) {
    if (key == "entries" && r.contains("labels")) {
      std::cout << "entries:\n";
      print_labelled_matrix(r["labels"], value);
    } else if (key == "order") {
      continue;
    } else if (is_matrix(value)) {
      std::cout << key << ":\n";
      for (const auto& row : value) std::cout << "  " << row.dump() << '\n';
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      std::cout << key << ":\n";
      for (const auto& row : value) std::cout << "  " << row.dump() << '\n';
    } else {
      std::cout << key << ": " << scalar(value) << '\n';
    }
  }
}

struct Common {
  std::string type;
  int rank = 0;
  std::string lambda;
};

void add_type(CLI::App* sub, Common& c) {
  sub->add_option("--type", c.type, "Cartan type letter, or a full name like A3")->required();
  sub->add_option("--rank", c.rank, "Rank (omit when --type carries it)");
}

void set_type(Json& req, const CLI::App* sub, const Common& c) {
  req["type"] = c.type;
  if (sub->count("--rank")) req["rank"] = c.rank;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fixed-point combinatorics for Kazhdan-Lusztig multiplicities"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "table";
  std::string cache_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--cache", cache_path, "KL cache file (default: $" ENDOKL_CACHE_ENV ")");

  Common c;
  Json req = Json::object();

  auto* roots = app.add_subcommand("roots", "Positive roots, coroots and rho");
  add_type(roots, c);

  auto* weyl = app.add_subcommand("weyl", "Weyl group elements, Bruhat order, translations");
  add_type(weyl, c);
  bool affine_flag = false;
  int max_length = -1;
  std::string w_text, y_text, translation;
  weyl->add_flag("--affine", affine_flag, "Use the affine Weyl group");
  weyl->add_option("--max-length", max_length, "Length bound for enumeration");
  weyl->add_option("--w", w_text, "Element as comma-separated labels or e");
  weyl->add_option("--y", y_text, "Second element for the Bruhat comparison");
  weyl->add_option("--translation", translation, "Coroot lattice vector for t_mu");

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{y,w}");
  add_type(kl, c);
  kl->add_option("--y", y_text)->required();
  kl->add_option("--w", w_text)->required();
  kl->add_flag("--affine", affine_flag, "Use the affine Weyl group");

  auto* endo = app.add_subcommand("endoscopy", "Endoscopic group of a rational coweight");
  add_type(endo, c);
  endo->add_option("--lambda", c.lambda, "Coweight mu/n as c1,...,ck/n")->required();

  std::string alpha;
  auto* strata = app.add_subcommand("strata", "Strata labels below a degree");
  add_type(strata, c);
  strata->add_option("--lambda", c.lambda)->required();
  strata->add_option("--alpha", alpha, "Degree in simple coroots")->required();

  int threads = 1;
  auto* mult = app.add_subcommand("multiplicity", "Verma multiplicity matrix");
  add_type(mult, c);
  mult->add_option("--lambda", c.lambda)->required();
  mult->add_option("--threads", threads)->check(CLI::PositiveNumber);

  std::string label;
  int depth = 6, costalk = -1;
  auto* ch = app.add_subcommand("character", "Simple character or costalk q-partitions");
  add_type(ch, c);
  ch->add_option("--lambda", c.lambda);
  ch->add_option("--label", label, "Stratum label of the simple module");
  ch->add_option("--depth", depth, "Height bound for the character");
  ch->add_option("--costalk", costalk, "Height bound for Kostant q-partitions");

  std::string mu, bound, K, beta;
  long long a = 1, b = 0, beta_delta = 0;
  bool no_entries = false;
  auto* aff = app.add_subcommand("affine", "Affine fixed points at a given level");
  add_type(aff, c);
  aff->add_option("--mu", mu, "Finite part mu")->required();
  aff->add_option("--a", a, "Loop rotation exponent")->required();
  aff->add_option("--b", b, "Central exponent")->required();
  aff->add_option("--bound", bound, "Degree bound, alpha_0^vee first");
  aff->add_option("--K", K, "Parabolic labels for the double quotient");
  aff->add_option("--max-length", max_length, "Enumeration length guard");
  aff->add_flag("--no-entries", no_entries, "Skip stalk dimensions");
  aff->add_option("--beta", beta, "Critical level: finite part of beta");
  aff->add_option("--beta-delta", beta_delta, "Critical level: delta coefficient of beta");

  std::string source, sigma, k_text;
  auto* fold = app.add_subcommand("fold", "Fold a simply-laced datum by a diagram automorphism");
  fold->add_option("--source", source, "Simply-laced type, e.g. A3")->required();
  fold->add_option("--sigma", sigma, "Images of nodes 1..r")->required();
  fold->add_option("--k", k_text, "Level for the untwisting test");
  fold->add_option("--alpha", alpha, "Coweight for the coinvariant map");

  auto* oracle = app.add_subcommand("oracle-check", "Compare with Verma modules built directly");
  add_type(oracle, c);
  oracle->add_option("--lambda", c.lambda)->required();
  oracle->add_option("--depth", depth, "Truncation depth (0: automatic)");

  std::string action, path;
  auto* cache = app.add_subcommand("cache", "KL cache management");
  cache->add_option("action", action, "stats, export, import or clear")
      ->required()
      ->check(CLI::IsMember({"stats", "export", "import", "clear"}));
  cache->add_option("path", path, "File for export or import");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  if (command == "fold") {
    req["source"] = source;
    req["sigma"] = sigma;
    if (sub->count("--k")) req["k"] = k_text;
    if (sub->count("--alpha")) req["alpha"] = alpha;
  } else if (command == "cache") {
    req["action"] = action;
    if (sub->count("path")) req["path"] = path;
  } else {
    set_type(req, sub, c);
    if (!c.lambda.empty()) req["lambda"] = c.lambda;
  }
  if (command == "weyl" || command == "kl") {
    if (affine_flag) req["affine"] = true;
    if (sub->count("--w")) req["w"] = w_text;
    if (sub->count("--y")) req["y"] = y_text;
  }
  if (command == "weyl") {
    if (sub->count("--max-length")) req["max_length"] = max_length;
    if (sub->count("--translation")) req["translation"] = translation;
  }
  if (command == "strata") req["alpha"] = alpha;
  if (command == "multiplicity") req["threads"] = threads;
  if (command == "character") {
    if (sub->count("--label")) req["label"] = label;
    req["depth"] = depth;
    if (sub->count("--costalk")) req["costalk"] = costalk;
  }
  if (command == "affine") {
    req["mu"] = mu;
    req["a"] = a;
    req["b"] = b;
    if (sub->count("--bound")) req["bound"] = bound;
    if (sub->count("--K")) req["K"] = K;
    if (sub->count("--max-length")) req["max_length"] = max_length;
    if (no_entries) req["entries"] = false;
    if (sub->count("--beta")) {
      req["beta"] = beta;
      req["beta_delta"] = beta_delta;
    }
  }
  if (command == "oracle-check" && sub->count("--depth")) req["depth"] = depth;

  std::unique_ptr<endokl_session, decltype(&endokl_session_free)> session(
      endokl_session_new(app.count("--cache") ? cache_path.c_str() : nullptr), endokl_session_free);
  if (!session) {
    std::cerr << "error: cannot open the KL cache\n";
    return ENDOKL_ERR_PARSE;
  }
  char* out = nullptr;
  const endokl_status status = endokl_query(session.get(), command.c_str(), req.dump().c_str(), &out);
  const Json result = Json::parse(out ? out : "{}");
  endokl_string_free(out);
  if (status != ENDOKL_OK) {
    if (format == "json") {
      std::cout << result.dump(2) << '\n';
    } else {
      std::cerr << "error: " << result["error"]["message"].get<std::string>() << '\n';
    }
    return status;
  }
  if (format == "json") {
    std::cout << result.dump(2) << '\n';
  } else {
    print_table(command, result);
  }
  return endokl_session_flush(session.get()) == ENDOKL_OK ? 0 : ENDOKL_ERR_INTERNAL;
}
