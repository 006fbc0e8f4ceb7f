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
#include "endokl/rootsys.hpp"

#include <vector>

namespace endokl {

/// Coweight action of a Weyl group element (word applied right to left).
RatVec weyl_act(const RootDatum& datum, const CoxeterElement& w, RatVec v);

/// Positive roots beta with <lambda, beta> integral.
std::vector<Root> integrality_subsystem(const RootDatum& datum, const RatVec& lambda);
std::vector<Root> integrality_subsystem(const RootDatum& datum, const RationalCoweight& lambda);

/// Indecomposable members of a positive subsystem: those that are not the sum
/// of two members. Throws DomainError if the input is not reflection-closed.
std::vector<Root> simple_system(const RootDatum& datum, const std::vector<Root>& subsystem);

/// Elements w of W with lambda - w lambda in the coweight lattice, by
/// enumeration of all of W (elements of `weyl` when given).
std::vector<CoxeterElement> integral_stabilizer_brute(const RootDatum& datum, const RatVec& lambda,
                                                      SystemPtr weyl = nullptr);

/// Output of the fixed-point algorithm for a rational coweight.
struct StratificationDatum {
  RootDatum datum;
  RationalCoweight lambda;
  SystemPtr weyl;
  /// Positive roots with integral pairing, and the indecomposables among them.
  std::vector<Root> integral_roots;
  std::vector<Root> simples;
  /// Coxeter system on the simples, labels 1..k.
  SystemPtr zeta_system;
  /// Generator indices (into simples) with <lambda', gamma> = 0.
  std::vector<int> J;
  /// Dominant conjugate: <lambda', gamma> in Z>=0 for every integral positive root.
  RatVec lambda_prime;
  /// lambda = y lambda', y minimal in y W_J.
  CoxeterElement y;
  /// Minimal coset representatives, shortlex.
  std::vector<CoxeterElement> index_set;
  /// order[i][j]: index_set[i] <= index_set[j].
  std::vector<std::vector<bool>> order;

  /// Action of an element of the endoscopic group on coweights.
  RatVec act(const CoxeterElement& w, RatVec v) const;
  /// The same element viewed inside W.
  CoxeterElement to_weyl(const CoxeterElement& w) const;
  /// Position of w in index_set; DomainError if absent.
  int label_index(const CoxeterElement& w) const;
};

StratificationDatum stratification_datum(const RootDatum& datum, const RationalCoweight& lambda);

/// Labels w with lambda' - w lambda' <= alpha. alpha must lie in the positive cone.
std::vector<CoxeterElement> strata_for_degree(const StratificationDatum& sd, const IntVec& alpha);

/// Converts an integral-valued rational vector; DomainError otherwise.
IntVec to_integral(const RatVec& v);

}  // namespace endokl
