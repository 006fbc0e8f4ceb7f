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

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Boost 1.74 mixed rational/integer equality recurses forever under C++20
// reversed-operator lookup. Exact non-template overloads take precedence.
namespace boost {
inline bool operator==(const rational<long long>& a, long long b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const rational<long long>& a, int b) {
  return a.denominator() == 1 && a.numerator() == b;
}
}  // namespace boost

namespace endokl {

using Rational = boost::rational<long long>;
using IntVec = std::vector<long long>;
using RatVec = std::vector<Rational>;
using IntMatrix = std::vector<std::vector<long long>>;

/// Raised for requests the mathematics rejects (bad type/rank, labels
/// outside an index set, unbounded affine queries, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised for malformed textual input (words, weights, cache records).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline RatVec to_rational(const IntVec& v) {
  return RatVec(v.begin(), v.end());
}

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

inline bool is_integral(const RatVec& v) {
  for (const auto& x : v)
    if (x.denominator() != 1) return false;
  return true;
}

/// Solves `m * x = rhs` over the rationals; `m` must be square and invertible.
RatVec solve_rational(const std::vector<RatVec>& m, const RatVec& rhs);

/// Nonnegative integer vectors with coordinate sum <= bound, by sum.
std::vector<IntVec> cone_vectors(int rank, int bound);

std::string format_vector(const IntVec& v);
std::string format_vector(const RatVec& v);
std::string format_rational(const Rational& r);

/// Parses "c1,c2,...,ck" into integers; empty string gives an empty vector.
IntVec parse_int_list(const std::string& text);

}  // namespace endokl
