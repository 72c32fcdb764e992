#include "hecke/kl_cache.hpp"

#include <fstream>
#include <mutex>

#include "hecke/json_io.hpp"
#include "json.hpp"

namespace hecke {

HeckeElement KLCache::c_plus(Elem w) {
  {
    std::shared_lock lock(mu_);
    auto it = cplus_.find(w);
    if (it != cplus_.end()) return it->second;
  }
  HeckeElement c(sys_);
  if (w == sys_->identity()) {
    c = HeckeElement::one(sys_);
  } else {
    int s = sys_->word(w).front();
    Elem v = sys_->lmul(s, w);
    const HeckeElement cv = c_plus(v);
    c = cv.left_mul_gen(s) + cv;
    const int lv = sys_->length(v);
    // Subtract mu(y,v) q^{(l(v)-l(y)+1)/2} C+_y over y < v with sy < y.
    for (const auto& [y, p] : cv.terms()) {
      if (y == v || !contains(sys_->descents_left(y), s)) continue;
      int gap = lv - sys_->length(y);
      if (gap % 2 == 0) continue;
      Integer m = p.coeff((gap - 1) / 2);
      if (m == 0) continue;
      c -= c_plus(y) * IntPoly::q_power((gap + 1) / 2, m);
    }
  }
  std::unique_lock lock(mu_);
  return cplus_.emplace(w, std::move(c)).first->second;
}

IntPoly KLCache::kl_poly(Elem y, Elem w) {
  if (!sys_->bruhat_leq(y, w)) return IntPoly();
  return c_plus(w).coeff(y);
}

Integer KLCache::mu(Elem y, Elem w) {
  int gap = sys_->length(w) - sys_->length(y);
  if (gap <= 0 || gap % 2 == 0) return 0;
  return kl_poly(y, w).coeff((gap - 1) / 2);
}

void KLCache::fill() {
  for (Elem w = 0; w < static_cast<Elem>(sys_->order()); ++w) c_plus(w);
}

std::size_t KLCache::size() const {
  std::shared_lock lock(mu_);
  return cplus_.size();
}

void KLCache::save(const std::string& path) const {
  nlohmann::json entries = nlohmann::json::array();
  {
    std::shared_lock lock(mu_);
    for (const auto& [w, c] : cplus_)
      for (const auto& [y, p] : c.terms())
        entries.push_back({{"y", y}, {"w", w}, {"p", poly_to_json(p)}});
  }
  nlohmann::json doc = {{"fingerprint", sys_->fingerprint()}, {"entries", entries}};
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::BadInput, "cannot write cache file " + path);
  out << doc.dump() << "\n";
}

bool KLCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::CacheMismatch, std::string("unreadable cache: ") + e.what());
  }
  if (!doc.contains("fingerprint") || doc["fingerprint"] != sys_->fingerprint()) return false;
  std::map<Elem, HeckeElement> loaded;
  const auto n = static_cast<Elem>(sys_->order());
  for (const auto& e : doc.at("entries")) {
    Elem y = e.at("y").get<Elem>();
    Elem w = e.at("w").get<Elem>();
    if (y < 0 || y >= n || w < 0 || w >= n)
      throw Error(ErrorKind::CacheMismatch, "cache entry outside the group");
    auto it = loaded.try_emplace(w, HeckeElement(sys_)).first;
    it->second.add_term(y, poly_from_json(e.at("p")));
  }
  std::unique_lock lock(mu_);
  for (auto& [w, c] : loaded) cplus_.insert_or_assign(w, std::move(c));
  return true;
}

IntPoly kl_poly(Elem y, Elem w, KLCache& cache) { return cache.kl_poly(y, w); }
Integer mu(Elem y, Elem w, KLCache& cache) { return cache.mu(y, w); }
HeckeElement c_plus(Elem w, KLCache& cache) { return cache.c_plus(w); }
HeckeElement c0_basis(Elem w, KLCache& cache) { return specialize_0(cache.c_plus(w)); }

}  // namespace hecke
