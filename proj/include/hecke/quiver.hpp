#pragma once

// The Hasse quiver of the subset lattice, its path algebra over Z[q] and the
// evaluation map into the endomorphism algebra.
//
// A path is stored as its vertex sequence in traversal order. A step A -> B
// with A ⊏ B is the arrow δ_{B,A}; a step B -> A is υ_{A,B}. Products follow
// the composition convention: in a*b the path b is traversed first.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hecke/endomorphism.hpp"

namespace hecke {

struct Path {
  std::vector<Subset> v;

  Subset start() const { return v.front(); }
  Subset end() const { return v.back(); }
  std::size_t length() const { return v.size() - 1; }
  bool visits(Subset x) const;
  /// Turning points: endpoints and every interior local extremum.
  std::vector<Subset> turning_points() const;
  /// "{1} > {} > {2}", 1-based.
  std::string str() const;

  friend auto operator<=>(const Path& a, const Path& b) = default;
  friend bool operator==(const Path& a, const Path& b) = default;
};

/// Throws BadPath unless consecutive vertices form covering pairs inside S.
Path make_path(const CoxeterSystem& sys, std::vector<Subset> vertices);
Path trivial_path(Subset K);
/// A then B (B must start where A ends).
Path then(const Path& a, const Path& b);
/// Expands turning points with canonical chains (add or remove elements in increasing order).
Path from_turning_points(const std::vector<Subset>& tp);
std::vector<Subset> chain_up(Subset lower, Subset upper);
std::vector<Subset> chain_down(Subset upper, Subset lower);

/// υ_{I,J}: J -> I, and δ_{J,I}: I -> J, as (possibly non-covering) canonical chains.
Path upsilon(Subset I, Subset J);
Path delta(Subset J, Subset I);
/// χ_s = υ_{∅,{s}} δ_{{s},∅}
Path chi_s(int s);
/// χ_{s_1} ... χ_{s_k}; the last letter is traversed first.
Path chi_word(const std::vector<int>& letters);

/// Anti-involution swapping υ and δ: reverses the traversal.
Path tau(const Path& p);
/// Relabels generators by perm (perm[s] = image of s).
Path relabel(const Path& p, const std::vector<int>& perm);
Subset relabel(Subset a, const std::vector<int>& perm);

class PathElement {
 public:
  PathElement() = default;
  PathElement(Subset source, Subset target) : src_(source), dst_(target) {}
  PathElement(const Path& p, const IntPoly& c = 1);  // NOLINT(google-explicit-constructor)

  Subset source() const { return src_; }
  Subset target() const { return dst_; }
  const std::map<Path, IntPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Path& p, const IntPoly& c);

  PathElement& operator+=(const PathElement& o);
  PathElement& operator-=(const PathElement& o);
  PathElement& operator*=(const IntPoly& c);
  friend PathElement operator+(PathElement a, const PathElement& b) { return a += b; }
  friend PathElement operator-(PathElement a, const PathElement& b) { return a -= b; }
  friend PathElement operator*(PathElement a, const IntPoly& c) { return a *= c; }
  friend PathElement operator*(const IntPoly& c, PathElement a) { return a *= c; }
  /// a*b: b first, then a.
  friend PathElement operator*(const PathElement& a, const PathElement& b);
  friend bool operator==(const PathElement& a, const PathElement& b) = default;

  std::string str() const;

 private:
  void require(const PathElement& o) const;
  Subset src_ = 0;
  Subset dst_ = 0;
  std::map<Path, IntPoly> terms_;
};

PathElement tau(const PathElement& p);
PathElement relabel(const PathElement& p, const std::vector<int>& perm);

/// Vertices and covering arrows.
struct HasseQuiver {
  std::vector<Subset> vertices;
  /// (lower, upper) covering pairs; each carries one υ and one δ.
  std::vector<std::pair<Subset, Subset>> covers;
  std::size_t arrow_count() const { return 2 * covers.size(); }
};
HasseQuiver build_quiver(const CoxeterSystem& sys);

/// ψ: υ -> inclusion u, δ -> d', e_K -> 1_K. Memoized per path.
class PathEvaluator {
 public:
  explicit PathEvaluator(SystemPtr sys) : sys_(std::move(sys)) {}
  const SystemPtr& system() const { return sys_; }
  HomElement eval(const Path& p);
  HomElement eval(const PathElement& p);

 private:
  SystemPtr sys_;
  std::map<Path, HomElement> memo_;
};

HomElement eval_path(const SystemPtr& sys, const PathElement& p);

struct TraceStep {
  std::string rule;
  int position = 0;
  std::string detail;
};

/// c * path after raising every valley to the meet of its neighbouring turning
/// points (sandwich plus quasi-idempotent relations) and straightening
/// monotone runs to canonical chains.
struct NormalForm {
  IntPoly scalar = 1;
  Path path;
  std::vector<TraceStep> trace;
};
NormalForm normalize(const CoxeterSystem& sys, const Path& p);
PathElement normalize(const CoxeterSystem& sys, const PathElement& p);

/// For a closed path at ∅: multiplier F and X in H_q with F*path = X modulo
/// the relations J1-J3 (each nonempty valley M is split at the cost of π(M),
/// each remaining mountain ∅ -> K -> ∅ is χ_{K•} = x_K).
struct CornerImage {
  IntPoly multiplier = 1;
  HeckeElement value;
};
CornerImage corner_image(const SystemPtr& sys, const Path& loop);

/// The criterion "υ_{∅,J} p δ_{I,∅} = 0" computed in the path algebra.
struct TorsionReport {
  bool torsion = false;
  /// F with F * υ_J p δ_I reduced to `residual` in H_q.
  IntPoly multiplier = 1;
  HeckeElement residual;
  /// π(I)π(J), which kills p when torsion holds.
  IntPoly annihilator = 1;
};
TorsionReport torsion_report(const SystemPtr& sys, const PathElement& p);
bool torsion_check(const SystemPtr& sys, const PathElement& p);

}  // namespace hecke
