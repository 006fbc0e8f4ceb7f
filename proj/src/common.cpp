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

#include "endokl/common.hpp"

#include <charconv>
#include <sstream>
#include <utility>

namespace endokl {

RatVec solve_rational(const std::vector<RatVec>& m, const RatVec& rhs) {
  const std::size_t n = rhs.size();
  std::vector<RatVec> a = m;
  RatVec b = rhs;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw DomainError("singular linear system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string format_vector(const IntVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::string format_vector(const RatVec& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i)
    os << (i ? "," : "") << format_rational(v[i]);
  os << ')';
  return os.str();
}

IntVec parse_int_list(const std::string& text) {
  IntVec out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    long long value = 0;
    auto first = tok.data();
    auto last = tok.data() + tok.size();
    if (!tok.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (tok.empty() || ec != std::errc() || ptr != last)
      throw ParseError("not an integer list: '" + text + "'");
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<IntVec> cone_vectors(int rank, int bound) {
  std::vector<IntVec> out{IntVec(rank, 0)};
  for (std::size_t k = 0; k < out.size(); ++k) {
    const IntVec v = out[k];
    long long h = 0;
    int last = 0;
    for (int i = 0; i < rank; ++i) {
      h += v[i];
      if (v[i] != 0) last = i;
    }
    if (h >= bound) continue;
    // Raise only at or after the last nonzero coordinate so each vector appears once.
    for (int i = last; i < rank; ++i) {
      IntVec u = v;
      ++u[i];
      out.push_back(u);
    }
  }
  return out;
}

}  // namespace endokl
