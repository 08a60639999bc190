#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "albertine/census.hpp"
#include "albertine/fts.hpp"
#include "albertine/models.hpp"
#include "albertine/tits.hpp"

namespace py = pybind11;
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
  throw std::invalid_argument("unknown verify target " + target);
}

}  // namespace

PYBIND11_MODULE(_albertine, m) {
  m.doc() = "Exact-arithmetic cubic Jordan algebra toolkit";

  m.def("verify", [](const std::string& target) {
    Report r = verify_target(target);
    return py::make_tuple(r.all_pass(), r.to_json());
  },
        "Run a generic-point verification suite; returns (all_pass, report_json)");

  m.def("signature_table", [] {
    std::vector<std::tuple<std::string, int, int>> out;
    for (const SigEntry& e : signature_table())
      out.emplace_back(e.name, e.computed, e.expected);
    return out;
  },
        "Trace-form signatures of the 11 rational models as (name, computed, expected)");

  m.def("census", [](const std::string& which) {
    CensusData C = build_census_lattices();
    CensusResult r = idempotent_census(
        C, which == "her" ? CensusWhich::her : CensusWhich::lambda);
    std::vector<std::vector<long long>> wit;
    for (const Vec& w : r.witnesses) {
      std::vector<long long> row;
      for (const Scalar& s : w)
        row.push_back(static_cast<long long>(s.as_int()));
      wit.push_back(std::move(row));
    }
    return py::make_tuple(r.count, wit);
  },
        "Count of rank-1 idempotent-type vectors in 'her' or 'lambda'");

  m.def("root_count", [](long long value) {
    Ctx z = RingCtx::integers();
    IntMatrix g8 = mat_to_intmatrix(
        comp_construct(CompKind::coxeter_order, z).gram());
    return enumerate_norm(IntLattice{g8, 8, "octonion"}, Int(value)).size();
  },
        "Number of octonion-order lattice vectors of the given norm");
}
