#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "albertine/census.hpp"
#include "albertine/fts.hpp"
#include "albertine/iso.hpp"
#include "albertine/models.hpp"
#include "albertine/tits.hpp"

using namespace alb;

namespace {

Report verify_target(const std::string& target) {
  Ctx z = RingCtx::integers();
  Ctx q = RingCtx::rationals();
  if (target == "comp:zorn")
    return comp_verify(comp_construct(CompKind::zorn, z));
  if (target == "comp:coxeter")
    return comp_verify(comp_construct(CompKind::coxeter_order, z));
  if (target == "jordan:mat3") return cns_verify_all(mat3_plus(z));
  if (target == "jordan:split-albert")
    return cns_verify_all(her3(her_layout(comp_construct(CompKind::zorn, z))));
  if (target == "jordan:her3-coxeter")
    return cns_verify_all(
        her3(her_layout(comp_construct(CompKind::coxeter_order, z))));
  if (target == "tits:mat3-q")
    return cns_verify_all(
        tits1(assoc_construct(AssocKind::mat3, q), q->from_int(2)));
  if (target == "fts:split")
    return ft_divisibility(
        fts_of(her3(her_layout(comp_construct(CompKind::zorn, z)))));
  if (target == "fts:coxeter")
    return ft_divisibility(
        fts_of(her3(her_layout(comp_construct(CompKind::coxeter_order, z)))));
  throw CLI::ValidationError("unknown verify target " + target);
}

Report signature_report(const std::string& model) {
  Report rep;
  bool found = false;
  for (const SigEntry& e : signature_table()) {
    if (model != "all" && model != e.name) continue;
    found = true;
    std::cout << e.name << " " << e.computed << " (expected " << e.expected
              << ")\n";
    rep.add("signature." + e.name, "sig.table", e.computed == e.expected,
            "computed " + std::to_string(e.computed));
  }
  if (!found) throw CLI::ValidationError("unknown model " + model);
  return rep;
}

Report census_report(const std::string& which) {
  Report rep;
  if (which == "roots") {
    Ctx z = RingCtx::integers();
    CompAlg oct = comp_construct(CompKind::coxeter_order, z);
    IntMatrix g8 = mat_to_intmatrix(oct.gram());
    bool even = true;
    for (std::size_t i = 0; i < 8; ++i)
      if (g8.at(i, i) % 2 != 0) even = false;
    rep.add("roots.even", "census.e8", even);
    rep.add("roots.unimodular", "census.e8", det(g8) == 1);
    IntLattice L{g8, 8, "octonion trace lattice"};
    std::size_t n = enumerate_norm(L, 2).size();
    std::cout << "vectors of norm 2: " << n << "\n";
    rep.add("roots.count", "census.e8", n == 240, std::to_string(n));
    return rep;
  }
  if (which != "her" && which != "lambda")
    throw CLI::ValidationError("unknown census target " + which);
  CensusData C = build_census_lattices();
  rep.merge(C.certificates);
  CensusResult r = idempotent_census(
      C, which == "her" ? CensusWhich::her : CensusWhich::lambda);
  std::cout << "count " << r.count << "\n";
  if (r.count > 0) std::cout << census_witnesses_json(r) << "\n";
  rep.merge(r.report);
  return rep;
}

Report diagonalize_report(const std::string& field, unsigned seed,
                          int trials) {
  Report rep;
  if (field == "q") {
    CensusData C = build_census_lattices();
    Ctx q = RingCtx::rationals();
    // the order itself only exists over Z; the trials run in its Q-span
    CompAlg octz = comp_construct(CompKind::coxeter_order, RingCtx::integers());
    HerLayout L = her_layout(comp_from_json(q, comp_to_json(octz)));
    CubicJordan j = her3(L);
    Vec u(j.dim);
    for (std::size_t k = 0; k < j.dim; ++k)
      u[k] = q->from_int(C.v[k].as_int());
    auto [g, d] = diagonalize(L, j, u);
    bool diag = true;
    for (std::size_t k = 3; k < j.dim; ++k)
      if (!d[k].is_zero()) diag = false;
    rep.add("diag.q.diagonal", "diag.field", diag);
    rep.add("diag.q.norm", "diag.field", j.norm_of(d) == j.norm_of(u));
    rep.add("diag.q.map", "diag.field", g.m.apply(u) == d);
    return rep;
  }
  int p = 0;
  try {
    p = std::stoi(field);
  } catch (const std::exception&) {
    throw CLI::ValidationError("--field takes q or a prime");
  }
  Ctx f = RingCtx::gf(p);
  HerLayout L = her_layout(comp_construct(CompKind::zorn, f));
  CubicJordan j = her3(L);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(0, p - 1);
  int ok = 0;
  for (int t = 0; t < trials; ++t) {
    Vec u(j.dim);
    do {
      for (std::size_t k = 0; k < j.dim; ++k)
        u[k] = f->from_int(coef(rng));
    } while (j.norm_of(u).is_zero());
    auto [g, d] = diagonalize(L, j, u);
    bool diag = true;
    for (std::size_t k = 3; k < j.dim; ++k)
      if (!d[k].is_zero()) diag = false;
    if (diag && j.norm_of(d) == j.norm_of(u) && g.m.apply(u) == d) ++ok;
  }
  rep.add("diag.gf" + std::to_string(p), "diag.field", ok == trials,
          std::to_string(ok) + "/" + std::to_string(trials) + " trials");
  return rep;
}

Report generators_report(const std::string& which, unsigned seed) {
  Report rep;
  if (which == "mat2-f2") {
    PairCensus c = generator_census_mat2();
    std::cout << "max pair-closure dim " << c.max_pair_dim << "\n";
    rep.add("mat2.pairs", "gen.counts", c.max_pair_dim <= 3,
            "max dim " + std::to_string(c.max_pair_dim));
    rep.add("mat2.triple", "gen.counts", c.witness.size() == 3);
    return rep;
  }
  Ctx f;
  if (which == "albert-f2")
    f = RingCtx::gf(2);
  else if (which == "albert-q")
    f = RingCtx::rationals();
  else
    throw CLI::ValidationError("unknown generators target " + which);
  CubicJordan j = her3(her_layout(comp_construct(CompKind::zorn, f)));
  std::vector<Vec> gens = generating_triple(j, seed);
  std::size_t d = subalgebra_generated(j, gens).dim();
  std::cout << "closure dim " << d << " from 3 generators\n";
  rep.add("albert.triple", "gen.counts", d == j.dim, std::to_string(d));
  return rep;
}

int finish(Report rep, const std::string& command, const std::string& json,
           std::chrono::steady_clock::time_point start) {
  rep.command = command;
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  std::cout << rep.to_text();
  if (!json.empty()) {
    if (json == "-") {
      std::cout << rep.to_json() << "\n";
    } else {
      std::ofstream out(json);
      out << rep.to_json() << "\n";
      if (!out) {
        std::cerr << "cannot write " << json << "\n";
        return 2;
      }
    }
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic cubic Jordan algebra toolkit"};
  app.require_subcommand(1);
  std::string json;
  app.add_option("--json", json, "Write the JSON report to PATH ('-' stdout)");

  std::string target;
  auto* verify = app.add_subcommand("verify", "Generic-point identity suites");
  verify->add_option("target", target, "Suite to run")->required();

  std::string model = "all";
  auto* sig = app.add_subcommand("signature", "Trace-form signatures");
  sig->add_option("model", model, "Model name or 'all'");

  std::string cwhich;
  auto* census = app.add_subcommand("census", "Integral idempotent censuses");
  census->add_option("which", cwhich, "her, lambda or roots")->required();

  std::string field = "q";
  unsigned seed = 1;
  int trials = 10;
  auto* diag = app.add_subcommand("diagonalize", "Diagonalization trials");
  diag->add_option("--field", field, "q or a prime p");
  diag->add_option("--seed", seed, "Random seed");
  diag->add_option("--trials", trials, "Trial count over GF(p)");

  std::string gwhich;
  auto* gens = app.add_subcommand("generators", "Generation experiments");
  gens->add_option("which", gwhich, "mat2-f2, albert-f2 or albert-q")
      ->required();
  gens->add_option("--seed", seed, "Random seed");

  auto* report = app.add_subcommand("report", "Summary report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (const char* env = std::getenv("ALBERTINE_SEED")) seed = std::atoi(env);

  auto start = std::chrono::steady_clock::now();
  try {
    if (verify->parsed())
      return finish(verify_target(target), "verify " + target, json, start);
    if (sig->parsed())
      return finish(signature_report(model), "signature " + model, json,
                    start);
    if (census->parsed())
      return finish(census_report(cwhich), "census " + cwhich, json, start);
    if (diag->parsed())
      return finish(diagonalize_report(field, seed, trials),
                    "diagonalize --field " + field, json, start);
    if (gens->parsed())
      return finish(generators_report(gwhich, seed), "generators " + gwhich,
                    json, start);
    if (report->parsed()) {
      Report rep = signature_report("all");
      rep.merge(census_report("her"));
      rep.merge(census_report("lambda"));
      rep.merge(census_report("roots"));
      return finish(std::move(rep), "report", json, start);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const AlbError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
