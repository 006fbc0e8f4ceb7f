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

#pragma once

#include "endokl/affine.hpp"
#include "endokl/folding.hpp"
#include "endokl/multiplicity.hpp"

#include "json.hpp"

#include <memory>
#include <string>
#include <vector>

namespace endokl {

using Json = nlohmann::json;

/// Plain form of the matrix JSON schema, for round trips.
struct MatrixRecord {
  std::string type;
  int rank = 0;
  IntVec mu;
  long long n = 1;
  std::vector<std::string> labels;
  std::vector<std::vector<bool>> order;
  IntMatrix entries;
  friend bool operator==(const MatrixRecord&, const MatrixRecord&) = default;
};

MatrixRecord matrix_record(const MultiplicityMatrix& mm);
Json to_json(const MatrixRecord& m);
/// Throws ParseError on missing or mistyped fields.
MatrixRecord matrix_record_from_json(const Json& j);

/// Parses "c1,...,ck/n" or {"mu": [...], "n": n}.
RationalCoweight parse_lambda(const Json& j);

/// Command dispatcher over a KL cache that may be backed by a file.
///
/// Commands: roots, weyl, kl, endoscopy, strata, multiplicity, character,
/// affine, fold, oracle-check, cache. Requests and results are JSON objects.
class Session {
 public:
  /// Loads `cache_path` when it names an existing file; an empty path keeps
  /// the cache in memory.
  explicit Session(std::string cache_path = "");
  ~Session();
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  Json run(const std::string& command, const Json& request);
  const std::shared_ptr<KLCache>& cache() const { return cache_; }
  const std::string& cache_path() const { return cache_path_; }
  /// Writes the cache back to its file if it changed.
  void flush();

 private:
  std::string cache_path_;
  std::shared_ptr<KLCache> cache_;
};

}  // namespace endokl
