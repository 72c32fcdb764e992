// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/kl_cache.hpp"
#include "hecke/verify.hpp"
#include "oracles.hpp"

using namespace hecke;

namespace {

const std::vector<std::string> kDihedral = {"I2(2)", "I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

// Runs families on each system; records counts and the first failure.
void run_families(Outcome& out, const std::vector<std::string>& systems, const std::vector<std::string>& families,
                  const VerifyOptions& opts = {}) {
  std::size_t checks = 0;
  for (const auto& name : systems) {
    const SystemPtr sys = make_system(name);
    const VerifyReport rep = verify(sys, families, opts);
    for (const auto& f : rep.families) {
      checks += f.checked;
      if (!f.skipped.empty()) {
        out.pass = false;
        out.detail << " " << name << "/" << f.family << " skipped (" << f.skipped << ");";
      }
      if (!f.ok()) {
        out.pass = false;
        out.detail << " " << name << "/" << f.family << " " << f.failures.size() << " failed, first "
                   << f.failures.front().id << ";";
      }
    }
  }
  out.detail << " " << checks << " checks";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void c1(Outcome& out) {
  const auto systems = with({"A3", "B2"}, kDihedral);
  VerifyOptions opts;
  opts.fuzz = 1000;
  run_families(out, systems, {"hecke"}, opts);
  // Independent product on a further sample per system.
  std::size_t mismatches = 0;
  for (const auto& name : systems) {
    const SystemPtr sys = make_system(name);
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(sys->order()) - 1);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int k = 0; k < 100; ++k) {
      HeckeElement a(sys), b(sys);
      for (int i = 0; i < 3; ++i) {
        a.add_term(pick(rng), IntPoly{c(rng), c(rng)});
        b.add_term(pick(rng), IntPoly{c(rng), c(rng)});
      }
      if (oracle::from(t_mul(a, b)) != oracle::product(*sys, oracle::from(a), oracle::from(b))) ++mismatches;
    }
  }
  if (mismatches) out.pass = false;
  out.detail << ", " << mismatches << " mismatches against the naive product";
}

void c10(Outcome& out) {
  std::size_t pairs = 0, bad = 0;
  for (const char* name : {"A3"}) {
    const SystemPtr sys = make_system(name);
    const CoxeterSystem& W = *sys;
    KLCache kl(sys);
    const oracle::KL ref(W);
    const Elem n = static_cast<Elem>(W.order());
    for (Elem w = 0; w < n; ++w)
      for (Elem y = 0; y < n; ++y) {
        ++pairs;
        if (!(kl.kl_poly(y, w) == ref.P(y, w))) ++bad;
        // The KL matrix and its signed w0-twist are inverse to each other.
        const IntPoly e = oracle::inversion_entry(W, y, w, [&](Elem a, Elem b) { return kl.kl_poly(a, b); });
        if (!(e == IntPoly(y == w ? 1 : 0))) ++bad;
      }
  }
  out.pass = bad == 0;
  out.detail << " " << pairs << " pairs, " << bad << " disagreements";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double budget;  // seconds, 0 for none
    std::function<void(Outcome&)> run;
  };
  const auto a3_dihedral = with({"A3"}, kDihedral);
  const std::vector<Criterion> criteria = {
      {1, "Hecke axioms and associativity", 30, c1},
      {2, "C_s C_w expansion, exhaustive", 0,
       [&](Outcome& o) { run_families(o, a3_dihedral, {"kl-product"}); }},
      {3, "dihedral recursion and closed form", 0,
       [&](Outcome& o) {
         run_families(o, with(kDihedral, {"A3", "I2(16)"}), {"dihedral-recursion", "dihedral-closed-form"});
       }},
      {4, "presentation over the localisation", 0,
       [&](Outcome& o) { run_families(o, a3_dihedral, {"r-presentation"}); }},
      {5, "integral relations and torsion", 120,
       [&](Outcome& o) {
         run_families(o, {"A3"}, {"J1", "J2", "J3", "refined-braid", "T1", "T2", "T3", "T4"});
         run_families(o, kDihedral, {"J1", "J2", "J3", "refined-braid"});
       }},
      {6, "standard paths span and are independent", 0,
       [&](Outcome& o) { run_families(o, a3_dihedral, {"spanning"}); }},
      {7, "rewriting soundness", 0,
       [&](Outcome& o) {
         VerifyOptions opts;
         opts.walks = 500;
         opts.walk_length = 10;
         run_families(o, a3_dihedral, {"rewrite"}, opts);
       }},
      {8, "0-Hecke layer", 0,
       [&](Outcome& o) { run_families(o, {"A3"}, {"monoid-products", "zb-algebra", "zero-hecke-presentation"}); }},
      {9, "double-coset factorization", 10,
       [&](Outcome& o) { run_families(o, a3_dihedral, {"factorize"}); }},
      {10, "KL polynomials against an independent oracle", 0, c10},
  };

  bool all = true;
  for (const auto& c : criteria) {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << " exception: " << e.what();
    }
    const double secs = seconds_since(t0);
    if (c.budget > 0 && secs > c.budget) {
      out.pass = false;
      out.detail << ", over the " << c.budget << " s budget";
    }
    all = all && out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " ("
              << static_cast<long>(secs * 1000) << " ms)" << out.detail.str() << "\n";
  }
  return all ? 0 : 1;
}
