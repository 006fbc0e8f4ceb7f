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

#include "endokl/common.hpp"

#include <string>
#include <vector>

namespace endokl {

/// A positive root of g together with its coroot.
///
/// `root` is written in the simple-root basis and acts as a functional on the
/// coweight lattice; `coroot` is written in the simple-coroot basis, which is
/// the coordinate system of every coweight in this library.
struct Root {
  IntVec root;
  IntVec coroot;

  friend bool operator==(const Root&, const Root&) = default;
};

/// Rational coweight mu/n. Stored exactly as given, without gcd reduction.
struct RationalCoweight {
  IntVec mu;
  long long n = 1;

  RationalCoweight() = default;
  RationalCoweight(IntVec mu_, long long n_);

  RatVec value() const;
  /// Parses the "c1,c2,.../n" syntax; "/n" may be omitted for n = 1.
  static RationalCoweight parse(const std::string& text);
  std::string to_string() const;
};

/// Finite-type root datum of a simply connected group.
///
/// Conventions: `cartan()[i][j] = <alpha_i^vee, alpha_j>`. Coweights live in
/// the simple-coroot basis, so the coweight lattice is Z^rank and rho (half
/// the sum of positive coroots) has half-integer coordinates.
class RootDatum {
 public:
  /// Builds one of A_n (n>=1), B_n (n>=2), C_n (n>=3), D_n (n>=4), E6-8,
  /// F4, G2. Throws DomainError on any other pair.
  static RootDatum build(char family, int rank);
  /// Parses names like "A3", "E6".
  static RootDatum build(const std::string& name);
  /// Finite-type datum from an arbitrary Cartan matrix.
  static RootDatum from_cartan(IntMatrix cartan, std::string name);

  int rank() const { return static_cast<int>(cartan_.size()); }
  const std::string& name() const { return name_; }
  char family() const { return name_.empty() ? '?' : name_[0]; }
  const IntMatrix& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& simple(int i) const { return positive_[simple_index_[i]]; }
  /// Index of the highest root in positive_roots().
  int highest_root_index() const { return highest_; }
  RatVec rho() const;
  /// Langlands dual: the transposed Cartan matrix.
  RootDatum dual() const;

  /// <coweight, root>, root given in the simple-root basis.
  Rational pairing(const RatVec& coweight, const IntVec& root) const;
  long long pairing(const IntVec& coweight, const IntVec& root) const;
  Rational pairing(const Root& alpha, const RationalCoweight& lambda) const;

  /// s_i(v) = v - <v, alpha_i> alpha_i^vee on coweights.
  IntVec reflect(int i, IntVec v) const;
  RatVec reflect(int i, RatVec v) const;
  /// Reflection in an arbitrary root.
  RatVec reflect(const Root& alpha, RatVec v) const;
  IntVec reflect(const Root& alpha, IntVec v) const;

  /// beta <= alpha iff alpha - beta is a nonnegative combination of simple coroots.
  static bool dominance_leq(const IntVec& beta, const IntVec& alpha);

  /// Symmetrizing weights eps_i with eps_i a_ij = eps_j a_ji, normalized so
  /// the largest is 1; eps_i = (alpha_i, alpha_i)/2 with long roots of length 2.
  const RatVec& root_length_weights() const { return eps_; }
  /// (beta, beta) in the normalization where long roots have square length 2.
  Rational root_norm(const IntVec& root) const;
  /// Invariant form on coweights with short coroots of square length 2.
  Rational coweight_form(const RatVec& x, const RatVec& y) const;

  /// Order of the Weyl group (closed form per family).
  long long weyl_order() const;

  friend bool operator==(const RootDatum& a, const RootDatum& b) {
    return a.cartan_ == b.cartan_;
  }

 private:
  void generate();

  std::string name_;
  IntMatrix cartan_;
  std::vector<Root> positive_;
  std::vector<int> simple_index_;
  int highest_ = 0;
  RatVec eps_;
};

/// Height (sum of coordinates).
long long height(const IntVec& v);

/// Finds the standard name of a finite-type Cartan matrix up to a
/// relabeling of nodes, e.g. "C2" or "A1xA1". Returns "" if unrecognized.
std::string identify_cartan_type(const IntMatrix& cartan);

}  // namespace endokl
