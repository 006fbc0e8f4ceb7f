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
#include "endokl/rootsys.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <string>
#include <vector>

namespace endokl {

class CoxeterSystem;
using SystemPtr = std::shared_ptr<const CoxeterSystem>;

/// A crystallographic Coxeter system given by a generalized Cartan matrix.
///
/// Elements are realized through the contragredient action on functionals of
/// the root lattice. The orbit of the point with all coordinates equal to 1
/// is free, so that orbit point identifies an element uniquely.
class CoxeterSystem {
 public:
  enum class Kind { Finite, Affine };

  /// `labels[i]` is the printed name of generator i (generators are ordered
  /// by label for canonical words).
  static SystemPtr create(IntMatrix gcm, std::string name, Kind kind, std::vector<int> labels);
  /// Weyl group of a finite root datum, generators labeled 1..rank.
  static SystemPtr weyl(const RootDatum& datum);
  /// Untwisted affinization; generator 0 is the affine node i0 (alpha_0 = delta - theta).
  static SystemPtr affine_weyl(const RootDatum& datum);

  int rank() const { return static_cast<int>(gcm_.size()); }
  const std::string& name() const { return name_; }
  /// Name qualified by the Coxeter matrix unless the generators are in the
  /// standard order of a named type; used to key persistent caches.
  const std::string& cache_tag() const { return cache_tag_; }
  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const IntMatrix& cartan() const { return gcm_; }
  /// m(i,j); 0 encodes an infinite order.
  const std::vector<std::vector<int>>& coxeter_matrix() const { return coxeter_; }
  int label(int generator) const { return labels_[generator]; }
  /// Generator index for a printed label; throws ParseError if unknown.
  int generator_for_label(long long label) const;

  /// s_i acting on a chamber vector in place.
  void act(int i, IntVec& chamber) const;

 private:
  CoxeterSystem() = default;

  IntMatrix gcm_;
  std::vector<std::vector<int>> coxeter_;
  std::string name_;
  std::string cache_tag_;
  Kind kind_ = Kind::Finite;
  std::vector<int> labels_;
};

/// A group element in canonical form: the lexicographically least reduced
/// word with respect to generator order.
class CoxeterElement {
 public:
  CoxeterElement() = default;

  static CoxeterElement identity(SystemPtr sys);
  static CoxeterElement generator(SystemPtr sys, int i);
  /// Any word (not necessarily reduced) in generator indices.
  static CoxeterElement from_word(SystemPtr sys, const std::vector<int>& word);
  /// Parses "e" or comma-separated generator labels.
  static CoxeterElement parse(SystemPtr sys, const std::string& text);

  const SystemPtr& system() const { return sys_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }
  const IntVec& chamber() const { return chamber_; }

  /// l(s_i w) < l(w).
  bool is_left_descent(int i) const { return chamber_[i] < 0; }
  /// l(w s_i) < l(w).
  bool is_right_descent(int i) const { return inverse_chamber_[i] < 0; }

  CoxeterElement inverse() const;
  CoxeterElement left_multiply(int i) const;
  CoxeterElement right_multiply(int i) const;

  /// Word printed with generator labels; "e" for the identity.
  std::string to_string() const;
  std::vector<int> label_word() const;

  friend CoxeterElement operator*(const CoxeterElement& a, const CoxeterElement& b);
  friend bool operator==(const CoxeterElement& a, const CoxeterElement& b) {
    return a.sys_ == b.sys_ && a.chamber_ == b.chamber_;
  }
  /// Shortlex on the canonical word.
  friend bool operator<(const CoxeterElement& a, const CoxeterElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word_ < b.word_;
  }

 private:
  static CoxeterElement from_chamber(SystemPtr sys, IntVec chamber);

  SystemPtr sys_;
  std::vector<int> word_;
  IntVec chamber_;
  IntVec inverse_chamber_;
};

struct CoxeterElementHash {
  std::size_t operator()(const CoxeterElement& w) const;
};

/// y <= w in the Bruhat order, by the descent recursion
/// (s in D_L(w): y <= w iff sy <= sw when s in D_L(y), else y <= sw).
bool bruhat_leq(const CoxeterElement& y, const CoxeterElement& w);

/// All elements of length <= max_length (max_length < 0: whole finite group).
/// Sorted shortlex. Infinite groups require a bound.
std::vector<CoxeterElement> enumerate_elements(const SystemPtr& sys, int max_length = -1);

/// Affine elements of length <= max_length.
std::vector<CoxeterElement> affine_elements_up_to(const SystemPtr& sys_hat, int max_length);

/// Minimal-length representatives of the cosets w W_J.
std::vector<CoxeterElement> parabolic_quotient(const SystemPtr& sys, const std::vector<int>& J,
                                               int max_length = -1);

bool in_parabolic_quotient(const CoxeterElement& w, const std::vector<int>& J);

/// Minimal representative of w W_J.
CoxeterElement min_coset_rep(CoxeterElement w, const std::vector<int>& J);
/// Minimal representative of W_K w W_J.
CoxeterElement min_double_coset_rep(CoxeterElement w, const std::vector<int>& K,
                                    const std::vector<int>& J);
/// w = u v with u in W^J, v in W_J, lengths adding.
std::pair<CoxeterElement, CoxeterElement> parabolic_factor(const CoxeterElement& w,
                                                           const std::vector<int>& J);
/// Longest element of a finite parabolic subgroup W_J (J empty: identity;
/// all generators: w0).
CoxeterElement longest_element(const SystemPtr& sys, const std::vector<int>& J);
std::vector<int> all_generators(const SystemPtr& sys);

/// Indexed, downward-closed set of elements (a finite group, or an affine
/// group truncated at a length bound) with multiplication tables and Bruhat
/// lower sets. Immutable after construction.
class ElementTable {
 public:
  ElementTable(SystemPtr sys, int max_length = -1);

  const SystemPtr& system() const { return sys_; }
  std::size_t size() const { return elements_.size(); }
  int max_length() const { return max_length_; }
  const CoxeterElement& at(int id) const { return elements_[id]; }
  const std::vector<CoxeterElement>& elements() const { return elements_; }
  std::optional<int> find(const CoxeterElement& w) const;
  int id_of(const CoxeterElement& w) const;
  int length(int id) const { return elements_[id].length(); }
  /// Id of s_i w, or -1 if it falls outside the table.
  int left(int i, int id) const { return left_[i][id]; }
  int first_left_descent(int id) const { return first_descent_[id]; }
  bool leq(int y, int w) const {
    return (lower_[w][static_cast<std::size_t>(y) >> 6] >> (y & 63)) & 1U;
  }
  /// Ids y <= w, ascending.
  std::vector<int> lower_interval(int w) const;

 private:
  SystemPtr sys_;
  int max_length_;
  std::vector<CoxeterElement> elements_;
  std::unordered_map<IntVec, int, std::function<std::size_t(const IntVec&)>> index_;
  std::vector<std::vector<int>> left_;
  std::vector<int> first_descent_;
  std::vector<std::vector<std::uint64_t>> lower_;
};

}  // namespace endokl
