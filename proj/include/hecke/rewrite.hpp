#pragma once

// Rewriting path-algebra elements onto the standard paths of I_n and A3.
//
// A normalized path through ∅ is cut at its first and last visit to ∅ and
// brought to the shape δ_J Y υ_I with Y in e_∅ A e_∅ ≅ H_q. Y is expanded in
// x-monomials and absorbed into δ_J and υ_I. Paths that stay in the middle
// layers (A3 only) are first pushed down to ∅ or up to S with the refined
// braid relations or T3/T4.

#include <map>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "hecke/relations.hpp"
#include "hecke/standard_paths.hpp"

namespace hecke {

class Rewriter {
 public:
  /// Throws UnsupportedTorsion outside rank 2 and A3.
  explicit Rewriter(SystemPtr sys);

  const SystemPtr& system() const { return sys_; }
  const StandardPaths& standard() const { return std_; }

  /// Equal to p modulo the relations and supported on standard paths.
  /// StuckPath if no rule applies to a non-standard path.
  PathElement rewrite(const PathElement& p);
  PathElement rewrite(const Path& p) { return rewrite(PathElement(p)); }

  /// Rule applications of the last rewrite, in order.
  const std::vector<TraceStep>& trace() const { return trace_; }

  /// Y in H_q with r = Y υ_{∅,A} for a path r: A -> ∅.
  HeckeElement corner(const Path& r);

  /// Standard-path coordinates of δ_J χ_{w} υ_I for w in D_{JI}, solved
  /// from evaluation images (Cramer's rule over Z[q]).
  const PathElement& key(Subset I, Elem w, Subset J);

 private:
  PathElement std_of(const Path& p, int depth);
  PathElement through_empty(const IntPoly& c, const Path& p, int depth);
  PathElement middle(const IntPoly& c, const Path& p, int depth);
  HeckeElement corner(const Path& r, int depth);
  std::vector<std::pair<HeckeElement, Path>> hook(Subset L, Subset K);
  /// Y = Σ c_w x_{word(w)}, ShortLex words.
  std::map<Elem, IntPoly> monomials(HeckeElement y);
  const HeckeElement& x_mono(Elem w);
  void note(const std::string& rule, int position, const std::string& detail);

  SystemPtr sys_;
  StandardPaths std_;
  PathEvaluator eval_;
  SystemKind kind_;
  struct MiddleRule {
    std::string family;
    Path lhs;
    PathElement rhs;
  };
  std::vector<MiddleRule> middle_rules_;
  std::map<Elem, HeckeElement> x_mono_;
  std::map<std::tuple<Subset, Elem, Subset>, PathElement> keys_;
  std::vector<TraceStep> trace_;
};

PathElement rewrite_to_standard(const SystemPtr& sys, const PathElement& p);

}  // namespace hecke
