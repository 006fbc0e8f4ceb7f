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

#include "endokl/coxeter.hpp"

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace endokl {

/// Integer polynomial in q, coefficients ascending, no trailing zeros.
/// The zero polynomial is empty.
using Poly = std::vector<long long>;

std::string format_poly(const Poly& p);
long long evaluate_at_one(const Poly& p);

/// Persistent store of computed polynomials keyed by
/// (system name, rank, canonical y word, canonical w word).
///
/// Text format, one record per line after a `KLCACHE v1` header:
///   TYPE RANK | y-word | w-word | c0,c1,...,ck
/// Lookups may run concurrently; inserts are serialized and idempotent.
class KLCache {
 public:
  struct Stats {
    std::uint64_t hits = 0;
    std::uint64_t misses = 0;
    std::uint64_t entries = 0;
  };

  std::optional<Poly> lookup(const CoxeterElement& y, const CoxeterElement& w) const;
  /// Throws DomainError if a different value is already stored for the key.
  void insert(const CoxeterElement& y, const CoxeterElement& w, const Poly& p);

  Stats stats() const;
  std::size_t size() const;
  void clear();
  bool dirty() const { return dirty_; }

  /// Merges records from a stream; unknown versions and malformed lines throw ParseError.
  void load(std::istream& in);
  void save(std::ostream& out) const;
  void load_file(const std::string& path);
  void save_file(const std::string& path) const;

 private:
  static std::string key(const CoxeterElement& y, const CoxeterElement& w);
  void insert_key(const std::string& key, const Poly& p);

  mutable std::shared_mutex mutex_;
  std::map<std::string, Poly> entries_;
  mutable std::atomic<std::uint64_t> hits_{0};
  mutable std::atomic<std::uint64_t> misses_{0};
  mutable std::atomic<bool> dirty_{false};
};

/// Kazhdan-Lusztig polynomials P_{y,w} over an ElementTable, computed by
/// induction on l(w) through a left descent and memoized row by row.
///
/// Rows may be requested from several threads at once; a row computed twice
/// is identical and the first insert wins.
class KLEngine {
 public:
  explicit KLEngine(std::shared_ptr<const ElementTable> table,
                    std::shared_ptr<KLCache> cache = nullptr);

  const ElementTable& table() const { return *table_; }
  const std::shared_ptr<const ElementTable>& table_ptr() const { return table_; }

  Poly polynomial(int y, int w);
  Poly polynomial(const CoxeterElement& y, const CoxeterElement& w);
  /// P_{y,w}(1).
  long long total_dimension(const CoxeterElement& y, const CoxeterElement& w);
  /// Coefficient of q^{(l(w)-l(y)-1)/2} in P_{y,w} (0 when the length gap is even).
  long long mu(int y, int w);

  /// Row of the inverse of the unitriangular matrix [P_{y,z}(1)] on [e, w]:
  /// returns y -> Q(y, w) with sum_z P_{y,z}(1) Q(z,w) = delta_{y,w}.
  std::map<int, long long> inverse_row(int w);
  std::map<CoxeterElement, long long> inverse_row(const CoxeterElement& w);

  /// Fills every row. Rows of equal length are independent and are handed to
  /// `threads` workers, optionally in reverse order.
  void compute_all(unsigned threads = 1, bool reverse = false);
  /// Deterministic text dump of every row computed so far.
  std::string dump() const;

 private:
  using Row = std::vector<std::pair<int, Poly>>;

  const Row& row(int w);
  const Row* find_row(int w) const;
  Row compute_row(int w);
  static const Poly* lookup(const Row& row, int y);

  std::shared_ptr<const ElementTable> table_;
  std::shared_ptr<KLCache> cache_;
  mutable std::shared_mutex mutex_;
  std::vector<std::unique_ptr<const Row>> rows_;
};

}  // namespace endokl
