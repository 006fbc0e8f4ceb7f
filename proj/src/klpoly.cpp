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

#include "endokl/klpoly.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace endokl {

namespace {

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void add_shifted(Poly& acc, const Poly& p, long long factor, std::size_t shift) {
  if (p.empty() || factor == 0) return;
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += factor * p[k];
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(' ');
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(' ');
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string format_poly(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k] == 0) continue;
    long long c = p[k];
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    long long a = c < 0 ? -c : c;
    if (k == 0) {
      out += std::to_string(a);
      continue;
    }
    if (a != 1) out += std::to_string(a);
    out += "q";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

long long evaluate_at_one(const Poly& p) {
  long long s = 0;
  for (auto c : p) s += c;
  return s;
}

// --- KLCache ---------------------------------------------------------------

std::string KLCache::key(const CoxeterElement& y, const CoxeterElement& w) {
  const auto& sys = *w.system();
  return sys.cache_tag() + " " + std::to_string(sys.rank()) + " | " + y.to_string() + " | " +
         w.to_string();
}

std::optional<Poly> KLCache::lookup(const CoxeterElement& y, const CoxeterElement& w) const {
  const std::string k = key(y, w);
  std::shared_lock lock(mutex_);
  auto it = entries_.find(k);
  if (it == entries_.end()) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return it->second;
}

void KLCache::insert_key(const std::string& k, const Poly& p) {
  std::unique_lock lock(mutex_);
  auto [it, fresh] = entries_.emplace(k, p);
  if (!fresh && it->second != p) throw DomainError("KL cache conflict for " + k);
  if (fresh) dirty_ = true;
}

void KLCache::insert(const CoxeterElement& y, const CoxeterElement& w, const Poly& p) {
  insert_key(key(y, w), p);
}

KLCache::Stats KLCache::stats() const {
  std::shared_lock lock(mutex_);
  return Stats{hits_.load(), misses_.load(), entries_.size()};
}

std::size_t KLCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void KLCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
  dirty_ = true;
}

void KLCache::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty KL cache");
  line = strip(line);
  if (line.rfind("KLCACHE ", 0) != 0) throw ParseError("missing KLCACHE header");
  if (line != "KLCACHE v1") throw ParseError("unsupported KL cache version: " + line.substr(8));
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (strip(line).empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, '|')) fields.push_back(strip(f));
    if (fields.size() != 4 || fields[0].find(' ') == std::string::npos)
      throw ParseError("malformed KL cache record at line " + std::to_string(lineno));
    Poly p;
    for (auto c : parse_int_list(fields[3])) p.push_back(c);
    trim(p);
    insert_key(fields[0] + " | " + fields[1] + " | " + fields[2], p);
  }
}

void KLCache::save(std::ostream& out) const {
  std::shared_lock lock(mutex_);
  out << "KLCACHE v1\n";
  for (const auto& [k, p] : entries_) {
    out << k << " | ";
    if (p.empty()) out << 0;
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i];
    out << '\n';
  }
}

void KLCache::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open KL cache file '" + path + "'");
  load(in);
}

void KLCache::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write KL cache file '" + path + "'");
  save(out);
  dirty_.store(false);
}

// --- KLEngine --------------------------------------------------------------

KLEngine::KLEngine(std::shared_ptr<const ElementTable> table, std::shared_ptr<KLCache> cache)
    : table_(std::move(table)), cache_(std::move(cache)) {
  rows_.resize(table_->size());
}

const KLEngine::Row* KLEngine::find_row(int w) const {
  std::shared_lock lock(mutex_);
  return rows_[w].get();
}

const Poly* KLEngine::lookup(const Row& row, int y) {
  auto it = std::lower_bound(row.begin(), row.end(), y,
                             [](const auto& entry, int key) { return entry.first < key; });
  if (it == row.end() || it->first != y) return nullptr;
  return &it->second;
}

const KLEngine::Row& KLEngine::row(int w) {
  if (const Row* r = find_row(w)) return *r;
  Row fresh = compute_row(w);
  std::unique_lock lock(mutex_);
  if (!rows_[w]) rows_[w] = std::make_unique<const Row>(std::move(fresh));
  return *rows_[w];
}

KLEngine::Row KLEngine::compute_row(int w) {
  const ElementTable& t = *table_;
  Row out;
  if (t.at(w).is_identity()) {
    out.emplace_back(w, Poly{1});
    return out;
  }
  const int s = t.first_left_descent(w);
  const int v = t.left(s, w);
  const Row& rv = row(v);
  const int lw = t.length(w);
  const int lv = t.length(v);

  // z < v with s z < z and mu(z, v) != 0.
  struct Correction {
    int z;
    long long mu;
    std::size_t shift;
    const Row* rz;
  };
  std::vector<Correction> corrections;
  for (const auto& [z, pz] : rv) {
    if (z == v) continue;
    const int gap = lv - t.length(z);
    if (gap % 2 == 0 || !t.at(z).is_left_descent(s)) continue;
    const std::size_t deg = static_cast<std::size_t>((gap - 1) / 2);
    if (pz.size() <= deg || pz[deg] == 0) continue;
    corrections.push_back({z, pz[deg], static_cast<std::size_t>((lw - t.length(z)) / 2), nullptr});
  }
  for (auto& c : corrections) c.rz = &row(c.z);

  for (int y : t.lower_interval(w)) {
    if (y == w) {
      out.emplace_back(y, Poly{1});
      continue;
    }
    const bool c = t.at(y).is_left_descent(s);
    const int sy = t.left(s, y);
    Poly p;
    if (const Poly* a = lookup(rv, sy)) add_shifted(p, *a, 1, c ? 0 : 1);
    if (const Poly* b = lookup(rv, y)) add_shifted(p, *b, 1, c ? 1 : 0);
    for (const auto& corr : corrections)
      if (const Poly* pyz = lookup(*corr.rz, y)) add_shifted(p, *pyz, -corr.mu, corr.shift);
    trim(p);
    out.emplace_back(y, std::move(p));
  }
  return out;
}

Poly KLEngine::polynomial(int y, int w) {
  const Poly* p = lookup(row(w), y);
  return p ? *p : Poly{};
}

Poly KLEngine::polynomial(const CoxeterElement& y, const CoxeterElement& w) {
  if (y.system() != w.system()) throw DomainError("KL polynomial of elements from different systems");
  if (cache_) {
    if (auto hit = cache_->lookup(y, w)) return *hit;
  }
  Poly p = polynomial(table_->id_of(y), table_->id_of(w));
  if (cache_) cache_->insert(y, w, p);
  return p;
}

long long KLEngine::total_dimension(const CoxeterElement& y, const CoxeterElement& w) {
  return evaluate_at_one(polynomial(y, w));
}

long long KLEngine::mu(int y, int w) {
  const int gap = table_->length(w) - table_->length(y);
  if (gap <= 0 || gap % 2 == 0) return 0;
  Poly p = polynomial(y, w);
  const std::size_t deg = static_cast<std::size_t>((gap - 1) / 2);
  return deg < p.size() ? p[deg] : 0;
}

std::map<int, long long> KLEngine::inverse_row(int w) {
  std::vector<int> interval = table_->lower_interval(w);
  std::stable_sort(interval.begin(), interval.end(),
                   [&](int a, int b) { return table_->length(a) > table_->length(b); });
  std::map<int, long long> q;
  for (int y : interval) {
    if (y == w) {
      q[y] = 1;
      continue;
    }
    long long acc = 0;
    for (const auto& [z, qz] : q) {
      if (z == y || !table_->leq(y, z)) continue;
      acc += evaluate_at_one(polynomial(y, z)) * qz;
    }
    q[y] = -acc;
  }
  return q;
}

std::map<CoxeterElement, long long> KLEngine::inverse_row(const CoxeterElement& w) {
  std::map<CoxeterElement, long long> out;
  for (const auto& [y, v] : inverse_row(table_->id_of(w))) out.emplace(table_->at(y), v);
  return out;
}

void KLEngine::compute_all(unsigned threads, bool reverse) {
  const ElementTable& t = *table_;
  std::map<int, std::vector<int>> levels;
  for (int w = 0; w < static_cast<int>(t.size()); ++w) levels[t.length(w)].push_back(w);
  threads = std::max(1U, threads);
  for (auto& [len, ids] : levels) {
    if (reverse) std::reverse(ids.begin(), ids.end());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t k = next++; k < ids.size(); k = next++) row(ids[k]);
    };
    if (threads == 1) {
      work();
      continue;
    }
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work);
  }
}

std::string KLEngine::dump() const {
  std::ostringstream os;
  std::shared_lock lock(mutex_);
  for (std::size_t w = 0; w < rows_.size(); ++w) {
    if (!rows_[w]) continue;
    const std::string ws = table_->at(static_cast<int>(w)).to_string();
    for (const auto& [y, p] : *rows_[w]) {
      os << table_->at(y).to_string() << " | " << ws << " | ";
      if (p.empty()) os << 0;
      for (std::size_t k = 0; k < p.size(); ++k) os << (k ? "," : "") << p[k];
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace endokl
