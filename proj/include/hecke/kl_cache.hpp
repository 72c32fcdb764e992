#pragma once

// Kazhdan-Lusztig polynomials and the C+ basis, memoized per system.

#include <map>
#include <shared_mutex>
#include <string>

#include "hecke/hecke_algebra.hpp"

namespace hecke {

class KLCache {
 public:
  explicit KLCache(SystemPtr sys) : sys_(std::move(sys)) {}

  const SystemPtr& system() const { return sys_; }

  /// C+_w = sum_{y<=w} P_{y,w} T_y, built by C+_s C+_{sw} minus the mu terms.
  HeckeElement c_plus(Elem w);
  IntPoly kl_poly(Elem y, Elem w);
  /// Coefficient of q^{(l(w)-l(y)-1)/2} in P_{y,w}; zero if l(w)-l(y) is even or y !< w.
  Integer mu(Elem y, Elem w);

  /// Computes every C+_w.
  void fill();
  std::size_t size() const;

  /// Writes {fingerprint, entries:[{y,w,p}]}.
  void save(const std::string& path) const;
  /// Loads a saved cache. Returns false and leaves the cache empty when the
  /// file's fingerprint belongs to another system.
  bool load(const std::string& path);

 private:
  SystemPtr sys_;
  mutable std::shared_mutex mu_;
  std::map<Elem, HeckeElement> cplus_;
};

IntPoly kl_poly(Elem y, Elem w, KLCache& cache);
Integer mu(Elem y, Elem w, KLCache& cache);
HeckeElement c_plus(Elem w, KLCache& cache);
/// c_w = C+_w at q = 0.
HeckeElement c0_basis(Elem w, KLCache& cache);

}  // namespace hecke
