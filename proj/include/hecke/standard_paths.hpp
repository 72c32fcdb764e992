#pragma once

// Standard paths B_{J,I} for I_n and A3, and the spanning/rank report.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/quiver.hpp"

namespace hecke {

class StandardPaths {
 public:
  /// Throws UnsupportedTorsion outside rank 2 and A3.
  explicit StandardPaths(SystemPtr sys);

  const SystemPtr& system() const { return sys_; }
  /// Paths from I to J.
  const std::vector<Path>& at(Subset I, Subset J) const;
  bool is_standard(const Path& p) const;
  const std::map<std::pair<Subset, Subset>, std::vector<Path>>& lists() const { return lists_; }
  /// Closure disagreements between a transcribed list and a symmetry image.
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  void put(Subset I, Subset J, std::vector<Path> paths);
  void build_dihedral();
  void build_a3();
  void close_under_symmetry(const std::vector<int>& sigma);
  void fill_general();

  SystemPtr sys_;
  std::map<std::pair<Subset, Subset>, std::vector<Path>> lists_;
  std::vector<std::string> notes_;
};

/// Fraction-free elimination over Z[q]: determinant of a square matrix.
IntPoly bareiss_det(std::vector<std::vector<IntPoly>> m);
/// Rank of an integer matrix.
std::size_t integer_rank(std::vector<std::vector<Integer>> m);

/// Coefficient vectors of eval(p) against hom_basis(I, J), one row per path.
std::vector<std::vector<IntPoly>> eval_matrix(const SystemPtr& sys, const std::vector<Path>& paths,
                                              Subset I, Subset J);

struct SpanningEntry {
  Subset I = 0;
  Subset J = 0;
  std::size_t paths = 0;
  std::size_t reps = 0;
  /// Rank at q = 2, 3, 5.
  std::vector<std::size_t> ranks;
  bool independent = false;
  bool symbolic = false;
  IntPoly det;
  bool unimodular = false;
};

struct SpanningReport {
  std::vector<SpanningEntry> entries;
  std::size_t total_paths = 0;
  std::size_t total_reps = 0;
  bool ok() const;
};

SpanningReport spanning_report(const StandardPaths& sp);

}  // namespace hecke
