// hecke: command-line driver for the library.
//
// Settings come from flags first, then HECKE_* environment variables, then
// built-in defaults.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "hecke/json_io.hpp"
#include "hecke/kl_cache.hpp"
#include "hecke/standard_paths.hpp"
#include "hecke/verify.hpp"
#include "hecke/zero_hecke.hpp"

using namespace hecke;

namespace {

struct RunConfig {
  std::string type = "A3";
  std::string matrix_file;
  std::string out;
  std::string format = "text";
  std::string cache;
  unsigned jobs = 0;
  std::size_t max_order = CoxeterSystem::kDefaultCap;
  int verbose = 0;
};

enum class Exit { Ok = 0, Failed = 1, Error = 2 };

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Error(ErrorKind::BadInput, "cannot write " + path);
    }
  }
  std::ostream& os() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

SystemPtr load_system(const RunConfig& cfg) {
  if (!cfg.matrix_file.empty()) {
    std::ifstream in(cfg.matrix_file);
    if (!in) throw Error(ErrorKind::BadInput, "cannot read " + cfg.matrix_file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    text.erase(0, text.find_first_not_of(" \t\r\n"));
    return make_system(text, cfg.max_order);
  }
  return make_system(cfg.type, cfg.max_order);
}

Elem parse_word(const CoxeterSystem& W, const std::string& text) {
  std::vector<int> letters;
  if (text != "e") {
    for (char c : text) {
      const int s = c - '1';
      if (s < 0 || s >= W.rank()) throw Error(ErrorKind::BadInput, "bad word '" + text + "'");
      letters.push_back(s);
    }
  }
  return W.from_word(letters);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

Json system_json(const CoxeterSystem& W) {
  return {{"name", W.name()}, {"rank", W.rank()}, {"order", W.order()}, {"matrix", W.coxeter_matrix()}};
}

Exit cmd_group(const RunConfig& cfg, std::ostream& os) {
  const SystemPtr sys = load_system(cfg);
  const CoxeterSystem& W = *sys;
  const auto lambda = W.lambda();
  if (cfg.format == "json") {
    Json parabolics = Json::array();
    for (Subset I : lambda)
      parabolics.push_back({{"subset", subset_str(I)},
                            {"longest", W.word_str(W.longest_element(I))},
                            {"order", W.parabolic(I).size()},
                            {"poincare", poly_to_json(poincare_poly(W, I))}});
    Json census = Json::array();
    for (Subset I : lambda)
      for (Subset J : lambda)
        census.push_back({{"I", subset_str(I)}, {"J", subset_str(J)}, {"double_cosets", W.double_coset_reps(I, J).size()}});
    Json j = system_json(W);
    j["parabolics"] = parabolics;
    j["double_cosets"] = census;
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "I,J,double_cosets\n";
    for (Subset I : lambda)
      for (Subset J : lambda)
        os << csv_quote(subset_str(I)) << "," << csv_quote(subset_str(J)) << "," << W.double_coset_reps(I, J).size()
           << "\n";
  } else {
    os << W.name() << ": rank " << W.rank() << ", order " << W.order() << "\n";
    os << "longest element " << W.word_str(W.longest_element(W.full())) << " (length "
       << W.length(W.longest_element(W.full())) << ")\n";
    for (Subset I : lambda)
      os << "  " << subset_str(I) << "  w_I = " << W.word_str(W.longest_element(I))
         << "  pi = " << poincare_poly(W, I) << "\n";
    os << "double cosets |D_IJ|:\n";
    for (Subset I : lambda) {
      os << "  " << subset_str(I) << ":";
      for (Subset J : lambda) os << " " << W.double_coset_reps(I, J).size();
      os << "\n";
    }
  }
  return Exit::Ok;
}

Exit cmd_kl(const RunConfig& cfg, const std::string& y_text, const std::string& w_text, bool all,
            std::ostream& os) {
  const SystemPtr sys = load_system(cfg);
  const CoxeterSystem& W = *sys;
  KLCache kl(sys);
  if (!cfg.cache.empty() && !kl.load(cfg.cache) && cfg.verbose)
    std::cerr << "cache " << cfg.cache << " belongs to another system; recomputing\n";
  std::vector<Elem> ys, ws;
  for (Elem x = 0; x < static_cast<Elem>(W.order()); ++x) ys.push_back(x);
  ws = ys;
  if (!y_text.empty()) ys = {parse_word(W, y_text)};
  if (!w_text.empty()) ws = {parse_word(W, w_text)};
  struct Row {
    Elem y, w;
    IntPoly p;
    Integer mu;
  };
  std::vector<Row> rows;
  for (Elem w : ws)
    for (Elem y : ys) {
      if (!W.bruhat_leq(y, w)) continue;
      IntPoly p = kl.kl_poly(y, w);
      if (!all && y_text.empty() && w_text.empty() && p == IntPoly(1)) continue;
      rows.push_back({y, w, p, kl.mu(y, w)});
    }
  if (!cfg.cache.empty()) kl.save(cfg.cache);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& r : rows)
      arr.push_back({{"y", W.word_str(r.y)}, {"w", W.word_str(r.w)}, {"P", poly_to_json(r.p)}, {"mu", r.mu.get_str()}});
    os << Json{{"system", system_json(W)}, {"polynomials", arr}}.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "y,w,P,mu\n";
    for (const auto& r : rows)
      os << W.word_str(r.y) << "," << W.word_str(r.w) << "," << csv_quote(r.p.str()) << "," << r.mu << "\n";
  } else {
    for (const auto& r : rows)
      os << "P(" << W.word_str(r.y) << ", " << W.word_str(r.w) << ") = " << r.p << "   mu = " << r.mu << "\n";
    if (rows.empty()) os << "no polynomials selected\n";
  }
  return Exit::Ok;
}

std::vector<std::string> split_families(const std::string& text) {
  if (text.empty() || text == "all") return verify_families();
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string f; std::getline(ss, f, ',');)
    if (!f.empty()) out.push_back(f);
  return out;
}

Exit cmd_verify(const RunConfig& cfg, const std::string& families, VerifyOptions opts, std::ostream& os) {
  const SystemPtr sys = load_system(cfg);
  opts.jobs = cfg.jobs ? cfg.jobs : std::max(1u, std::thread::hardware_concurrency());
  const VerifyReport rep = verify(sys, split_families(families), opts);
  if (cfg.format == "json") {
    Json arr = Json::array();
    for (const auto& f : rep.families) arr.push_back(family_to_json(f));
    os << Json{{"system", system_json(*sys)}, {"ok", rep.ok()}, {"families", arr}}.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "family,checked,failed,seconds,status\n";
    for (const auto& f : rep.families)
      os << f.family << "," << f.checked << "," << f.failures.size() << "," << f.seconds << ","
         << (!f.skipped.empty() ? "skipped" : f.ok() ? "pass" : "fail") << "\n";
  } else {
    for (const auto& f : rep.families) {
      os << (!f.skipped.empty() ? "SKIP" : f.ok() ? "PASS" : "FAIL") << "  " << f.family << "  " << f.checked
         << " checks, " << f.failures.size() << " failed (" << f.seconds << " s)";
      if (!f.skipped.empty()) os << "  " << f.skipped;
      os << "\n";
      const std::size_t shown = cfg.verbose ? f.failures.size() : std::min<std::size_t>(f.failures.size(), 5);
      for (std::size_t i = 0; i < shown; ++i)
        os << "      " << f.failures[i].id << (f.failures[i].detail.empty() ? "" : ": " + f.failures[i].detail)
           << "\n";
      if (cfg.verbose)
        for (const auto& n : f.notes) os << "      note: " << n << "\n";
    }
    os << sys->name() << ": " << (rep.ok() ? "all checks passed" : "FAILURES") << "\n";
  }
  return rep.ok() ? Exit::Ok : Exit::Failed;
}

Exit cmd_factorize(const RunConfig& cfg, const std::string& I_text, const std::string& J_text,
                   const std::string& d_text, std::ostream& os) {
  const SystemPtr sys = load_system(cfg);
  const CoxeterSystem& W = *sys;
  const Subset I = parse_subset(I_text, W.rank()), J = parse_subset(J_text, W.rank());
  std::vector<Elem> members;
  if (d_text.empty())
    members = W.double_coset_reps_longest(I, J);
  else
    members = {parse_word(W, d_text)};
  bool all_ok = true;
  Json arr = Json::array();
  if (cfg.format == "csv") os << "I,longest,J,steps,round_trip\n";
  for (Elem d : members) {
    const Factorization f = factorize_double_coset(sys, I, d, J);
    const bool ok = multiply_out(sys, f) == ZBElement::basis(sys, I, f.longest, J);
    all_ok = all_ok && ok;
    std::string steps;
    for (const auto& st : f.steps) steps += (steps.empty() ? "" : " ") + st.label();
    if (cfg.format == "json") {
      Json j = factorization_to_json(W, f);
      j["round_trip"] = ok;
      arr.push_back(std::move(j));
    } else if (cfg.format == "csv") {
      os << csv_quote(subset_str(I)) << "," << W.word_str(f.longest) << "," << csv_quote(subset_str(J)) << ","
         << csv_quote(steps) << "," << (ok ? "ok" : "FAIL") << "\n";
    } else {
      os << "(" << subset_str(I) << ", c_" << W.word_str(f.longest) << ", " << subset_str(J) << ") = "
         << (steps.empty() ? "f" : steps) << "   [" << (ok ? "ok" : "FAIL") << "]\n";
    }
  }
  if (cfg.format == "json") os << Json{{"system", system_json(W)}, {"ok", all_ok}, {"factorizations", arr}}.dump(2) << "\n";
  return all_ok ? Exit::Ok : Exit::Failed;
}

Exit cmd_standard_paths(const RunConfig& cfg, bool list, std::ostream& os) {
  const SystemPtr sys = load_system(cfg);
  const StandardPaths sp(sys);
  const SpanningReport rep = spanning_report(sp);
  if (cfg.format == "json") {
    Json j = spanning_to_json(rep, sp.notes());
    if (list) {
      Json lists = Json::array();
      for (const auto& [key, paths] : sp.lists()) {
        Json ps = Json::array();
        for (const Path& p : paths) ps.push_back(path_to_json(p));
        lists.push_back({{"source", subset_str(key.first)}, {"target", subset_str(key.second)}, {"paths", ps}});
      }
      j["lists"] = lists;
    }
    j["system"] = system_json(*sys);
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "source,target,paths,representatives,rank_q2,rank_q3,rank_q5,independent,unimodular\n";
    for (const auto& e : rep.entries)
      os << csv_quote(subset_str(e.I)) << "," << csv_quote(subset_str(e.J)) << "," << e.paths << "," << e.reps << ","
         << e.ranks[0] << "," << e.ranks[1] << "," << e.ranks[2] << "," << e.independent << "," << e.unimodular
         << "\n";
  } else {
    for (const auto& e : rep.entries) {
      os << subset_str(e.I) << " -> " << subset_str(e.J) << ": " << e.paths << " paths, " << e.reps
         << " double cosets, rank " << e.ranks[0] << "/" << e.ranks[1] << "/" << e.ranks[2]
         << (e.independent ? "" : "  DEPENDENT") << (e.unimodular ? "  det = ±1" : "") << "\n";
      if (list)
        for (const Path& p : sp.at(e.I, e.J)) os << "    " << p.str() << "\n";
    }
    for (const auto& n : sp.notes()) os << "note: " << n << "\n";
    os << "total " << rep.total_paths << " paths, " << rep.total_reps << " double cosets: "
       << (rep.ok() ? "basis" : "NOT a basis") << "\n";
  }
  return rep.ok() ? Exit::Ok : Exit::Failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hecke endomorphism algebras: construction and verification"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  auto* type_opt = app.add_option("-t,--type", cfg.type, "Named type: A1..A8, B2..B8, D4..D8, I2(n), G2, H3, F4")
                       ->envname("HECKE_TYPE");
  app.add_option("-m,--matrix", cfg.matrix_file, "File holding a Coxeter matrix as a JSON array")
      ->envname("HECKE_MATRIX")
      ->excludes(type_opt);
  app.add_option("-o,--out", cfg.out, "Write the report here instead of stdout");
  app.add_option("-f,--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->envname("HECKE_FORMAT");
  app.add_option("--cache", cfg.cache, "KL cache file (read, then updated)")->envname("HECKE_CACHE");
  app.add_option("-j,--jobs", cfg.jobs, "Worker threads (0: one per core)")->envname("HECKE_JOBS");
  app.add_option("--max-order", cfg.max_order, "Abort enumeration beyond this many elements")
      ->envname("HECKE_MAX_ORDER");
  app.add_flag("-v,--verbose", cfg.verbose, "List every failure and note");

  auto* group = app.add_subcommand("group", "Order, parabolic subgroups and double-coset census");

  auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomials");
  std::string y_text, w_text;
  bool kl_all = false;
  kl->add_option("--y", y_text, "Lower element as a 1-based word, e for the identity");
  kl->add_option("--w", w_text, "Upper element as a 1-based word");
  kl->add_flag("--all", kl_all, "Include trivial polynomials");

  auto* ver = app.add_subcommand("verify", "Run verification families");
  std::string families;
  VerifyOptions vopts;
  ver->add_option("--families", families, "Comma-separated family names, or all");
  ver->add_option("--seed", vopts.seed, "Seed for the random checks");
  ver->add_option("--fuzz", vopts.fuzz, "Random triples for the Hecke axioms");
  ver->add_option("--walks", vopts.walks, "Random paths for the rewriting check");
  ver->add_option("--walk-length", vopts.walk_length, "Maximal random path length");
  bool list_families = false;
  ver->add_flag("--list", list_families, "List the families and exit");

  auto* fac = app.add_subcommand("factorize", "Factor double-coset basis elements of the 0-Hecke algebra");
  std::string I_text, J_text, d_text;
  fac->add_option("-I", I_text, "Left subset, 1-based, e.g. 13 or {}")->required();
  fac->add_option("-J", J_text, "Right subset")->required();
  fac->add_option("-d", d_text, "Any member of the double coset (default: every double coset)");

  auto* sp = app.add_subcommand("standard-paths", "Standard paths and the spanning report");
  bool list_paths = false;
  sp->add_flag("--list", list_paths, "Print the paths themselves");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    Output out(cfg.out);
    std::ostream& os = out.os();
    Exit code = Exit::Ok;
    if (*group) {
      code = cmd_group(cfg, os);
    } else if (*kl) {
      code = cmd_kl(cfg, y_text, w_text, kl_all, os);
    } else if (*ver) {
      if (list_families) {
        for (const auto& f : verify_families()) os << f << "  " << family_description(f) << "\n";
      } else {
        code = cmd_verify(cfg, families, vopts, os);
      }
    } else if (*fac) {
      code = cmd_factorize(cfg, I_text, J_text, d_text, os);
    } else if (*sp) {
      code = cmd_standard_paths(cfg, list_paths, os);
    }
    return static_cast<int>(code);
  } catch (const Error& e) {
    std::cerr << Json{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}}.dump() << "\n";
    return static_cast<int>(Exit::Error);
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", {{"kind", "Internal"}, {"message", e.what()}}}}.dump() << "\n";
    return static_cast<int>(Exit::Error);
  }
}
