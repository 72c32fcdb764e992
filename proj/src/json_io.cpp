#include "hecke/json_io.hpp"

namespace hecke {

Json poly_to_json(const IntPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) {
    if (c.fits_slong_p()) {
      arr.push_back(c.get_si());
    } else {
      arr.push_back(c.get_str());
    }
  }
  return arr;
}

IntPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::BadInput, "polynomial must be a coefficient array");
  std::vector<Integer> coeffs;
  for (const auto& c : j) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(static_cast<long>(c.get<long long>()));
    } else if (c.is_string()) {
      coeffs.emplace_back(c.get<std::string>());
    } else {
      throw Error(ErrorKind::BadInput, "polynomial coefficient must be an integer");
    }
  }
  return IntPoly(std::move(coeffs));
}

namespace {

Json word_json(const CoxeterSystem& sys, Elem w) {
  Json arr = Json::array();
  for (int s : sys.word(w)) arr.push_back(s + 1);
  return arr;
}

}  // namespace

Json hecke_to_json(const HeckeElement& h) {
  Json terms = Json::array();
  for (const auto& [w, c] : h.terms())
    terms.push_back({{"word", word_json(*h.system(), w)}, {"poly", poly_to_json(c)}});
  return {{"terms", terms}};
}

Json hom_to_json(const HomElement& h) {
  Json j = hecke_to_json(h.value);
  j["source"] = subset_str(h.source);
  j["target"] = subset_str(h.target);
  return j;
}

Json zb_to_json(const ZBElement& z) {
  Json terms = Json::array();
  for (const auto& [t, c] : z.terms())
    terms.push_back({{"source", subset_str(t.J)},
                     {"target", subset_str(t.I)},
                     {"word", word_json(*z.system(), t.d)},
                     {"coeff", c.get_str()}});
  return {{"terms", terms}};
}

Json factorization_to_json(const CoxeterSystem& sys, const Factorization& f) {
  Json steps = Json::array();
  for (const auto& st : f.steps) steps.push_back(st.label());
  Json trail = Json::array();
  for (const auto& [jt, j1] : f.trail)
    trail.push_back({{"J_tilde", subset_str(jt)}, {"J_next", subset_str(j1)}});
  return {{"I", subset_str(f.I)},
          {"J", subset_str(f.J)},
          {"longest", word_json(sys, f.longest)},
          {"steps", steps},
          {"trail", trail}};
}

Json path_to_json(const Path& p) {
  Json arr = Json::array();
  for (Subset v : p.v) arr.push_back(subset_str(v));
  return arr;
}

Json path_element_to_json(const PathElement& p) {
  Json terms = Json::array();
  for (const auto& [path, c] : p.terms()) terms.push_back({{"path", path_to_json(path)}, {"poly", poly_to_json(c)}});
  return {{"source", subset_str(p.source())}, {"target", subset_str(p.target())}, {"terms", terms}};
}

Json trace_to_json(const std::vector<TraceStep>& trace) {
  Json arr = Json::array();
  for (const auto& t : trace) arr.push_back({{"rule", t.rule}, {"position", t.position}, {"detail", t.detail}});
  return arr;
}

Json spanning_to_json(const SpanningReport& r, const std::vector<std::string>& notes) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j = {{"source", subset_str(e.I)},
              {"target", subset_str(e.J)},
              {"paths", e.paths},
              {"representatives", e.reps},
              {"ranks", e.ranks},
              {"independent", e.independent},
              {"symbolic", e.symbolic},
              {"unimodular", e.unimodular}};
    if (e.paths == e.reps) j["det"] = poly_to_json(e.det);
    entries.push_back(std::move(j));
  }
  return {{"ok", r.ok()},
          {"total_paths", r.total_paths},
          {"total_representatives", r.total_reps},
          {"notes", notes},
          {"entries", entries}};
}

Json family_to_json(const FamilyReport& f) {
  Json failures = Json::array();
  for (const auto& x : f.failures) failures.push_back({{"id", x.id}, {"detail", x.detail}});
  Json j = {{"family", f.family},   {"description", f.description}, {"ok", f.ok()},
            {"checked", f.checked}, {"failures", failures},         {"seconds", f.seconds}};
  if (!f.skipped.empty()) j["skipped"] = f.skipped;
  if (!f.notes.empty()) j["notes"] = f.notes;
  return j;
}

}  // namespace hecke
