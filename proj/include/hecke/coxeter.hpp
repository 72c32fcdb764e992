#pragma once

// Finite Coxeter systems enumerated by coset enumeration over the trivial
// subgroup. Elements are dense ids in ShortLex order of their normal forms.

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hecke/error.hpp"

namespace hecke {

using Elem = int;
/// Bitset over S; bit i is generator i.
using Subset = std::uint32_t;
using CoxeterMatrix = std::vector<std::vector<int>>;

inline bool subset_of(Subset a, Subset b) { return (a & ~b) == 0; }
inline int subset_size(Subset a) { return __builtin_popcount(a); }
inline bool contains(Subset a, int s) { return (a >> s) & 1u; }
inline Subset singleton(int s) { return Subset{1} << s; }

/// 1-based display, matching the usual numbering of simple reflections: "{1,3}", "{}".
std::string subset_str(Subset a);
/// Parses "{1,3}", "13", "{}", "0"/"e" (empty) in the same 1-based convention.
Subset parse_subset(const std::string& text, int rank);

class CoxeterSystem {
 public:
  static constexpr std::size_t kDefaultCap = 10000;

  /// Validates the matrix and enumerates W. Throws BadMatrix or NonFiniteGroup.
  static std::shared_ptr<const CoxeterSystem> build(const CoxeterMatrix& m,
                                                    std::size_t cap = kDefaultCap);
  /// "A1".."A8", "B2".."B8", "D4".."D8", "I2(n)", "G2", "H3", "F4".
  static CoxeterMatrix named_matrix(const std::string& type);

  int rank() const { return rank_; }
  std::size_t order() const { return len_.size(); }
  const CoxeterMatrix& coxeter_matrix() const { return m_; }
  int m(int s, int t) const { return m_[s][t]; }
  Subset full() const { return (Subset{1} << rank_) - 1; }
  const std::string& fingerprint() const { return fingerprint_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  Elem identity() const { return 0; }
  Elem gen(int s) const { return right_[0][s]; }
  int length(Elem w) const { return len_[w]; }
  const std::vector<int>& word(Elem w) const { return word_[w]; }
  std::string word_str(Elem w) const;

  Elem rmul(Elem w, int s) const { return right_[w][s]; }  // w*s
  Elem lmul(int s, Elem w) const { return left_[w][s]; }   // s*w
  Elem multiply(Elem x, Elem y) const;
  Elem inverse(Elem w) const { return inv_[w]; }
  Elem from_word(const std::vector<int>& letters) const;

  Subset descents_left(Elem w) const { return ldes_[w]; }
  Subset descents_right(Elem w) const { return rdes_[w]; }
  /// Letters occurring in a (any) reduced word of w.
  Subset support(Elem w) const { return supp_[w]; }
  bool in_parabolic(Elem w, Subset I) const { return subset_of(supp_[w], I); }

  /// Bruhat order via the subword property; tables built on first use.
  bool bruhat_leq(Elem y, Elem w) const;

  Elem longest_element(Subset I) const;
  std::vector<Elem> parabolic(Subset I) const;
  /// D_I: minimal representatives of the cosets W_I w (no left descent in I).
  std::vector<Elem> min_coset_reps(Subset I) const;
  /// D_{IJ} = D_I ∩ D_J^{-1}, minimal W_I-W_J double-coset representatives.
  std::vector<Elem> double_coset_reps(Subset I, Subset J) const;
  /// D⁺_{IJ}: longest element of every W_I-W_J double coset.
  std::vector<Elem> double_coset_reps_longest(Subset I, Subset J) const;
  std::vector<Elem> double_coset(Subset I, Elem d, Subset J) const;
  Elem double_coset_min(Subset I, Elem w, Subset J) const;
  Elem double_coset_max(Subset I, Elem w, Subset J) const;
  bool is_min_double(Subset I, Elem d, Subset J) const;
  bool is_max_double(Subset I, Elem d, Subset J) const;

  /// K ⊆ J with W_K = d⁻¹W_I d ∩ W_J. Requires d ∈ D_{IJ}.
  Subset intersect_parabolic(Subset I, Elem d, Subset J) const;

  /// Hecke monoid product x*y.
  Elem demazure(Elem x, Elem y) const;

  /// All subsets of S (every subset is finitary for finite W), by (size, bits).
  std::vector<Subset> lambda() const;

  void check_same(const CoxeterSystem& other) const;

 private:
  CoxeterSystem() = default;
  void build_bruhat() const;

  int rank_ = 0;
  CoxeterMatrix m_;
  std::string fingerprint_;
  std::string name_;
  std::vector<int> len_;
  std::vector<std::vector<int>> word_;
  std::vector<std::vector<Elem>> right_;
  std::vector<std::vector<Elem>> left_;
  std::vector<Elem> inv_;
  std::vector<Subset> ldes_, rdes_, supp_;
  std::vector<Elem> longest_;  // indexed by subset bits

  mutable std::once_flag bruhat_once_;
  mutable std::vector<std::vector<std::uint64_t>> below_;
};

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

/// Convenience: named type or JSON matrix text.
SystemPtr make_system(const std::string& type, std::size_t cap = CoxeterSystem::kDefaultCap);

}  // namespace hecke
