#include "albertine/models.hpp"

#include <map>
#include <random>

#include "albertine/tits.hpp"

namespace alb {

CompAlg comp_restrict(const CompAlg& c, const std::vector<std::size_t>& keep) {
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = i;
  CompAlg r;
  r.ctx = c.ctx;
  r.rank = keep.size();
  for (std::size_t i : keep) r.labels.push_back(c.labels[i]);
  r.mul.resize(r.rank * r.rank);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t k = 0; k < r.rank; ++k)
      for (const auto& [m, s] : c.mul[keep[i] * c.rank + keep[k]]) {
        auto it = pos.find(m);
        if (it == pos.end()) throw AlbError("subset is not closed");
        r.mul[i * r.rank + k].emplace_back(it->second, s);
      }
  r.unit = vec_zero(c.ctx, r.rank);
  for (std::size_t m = 0; m < c.rank; ++m) {
    if (c.unit[m].is_zero()) continue;
    auto it = pos.find(m);
    if (it == pos.end()) throw AlbError("unit leaves the subset");
    r.unit[it->second] = c.unit[m];
  }
  for (const auto& [ij, s] : c.normq) {
    auto a = pos.find(ij.first), b = pos.find(ij.second);
    if (a == pos.end() || b == pos.end()) continue;
    r.normq.push_back({{a->second, b->second}, s});
  }
  return r;
}

CompAlg definite_comp(const Ctx& ctx, int r) {
  CompAlg oct = comp_construct(CompKind::real_octonions, ctx);
  switch (r) {
    case 0:
      return comp_restrict(oct, {0});
    case 1:
      return comp_restrict(oct, {0, 1});
    case 2:
      // e1 e2 = e4 closes the quaternion line
      return comp_restrict(oct, {0, 1, 2, 4});
    case 3:
      return oct;
  }
  throw AlbError("rank exponent out of range");
}

namespace {

int sig_of(const CubicJordan& j) {
  auto [p, m, z] = ldl_signature(mat_to_intmatrix(j.tmat));
  if (z != 0) throw AlbError("degenerate trace form");
  return static_cast<int>(p) - static_cast<int>(m);
}

}  // namespace

std::vector<SigEntry> signature_table() {
  Ctx z = RingCtx::integers();
  std::vector<SigEntry> out;
  for (int r = 0; r <= 3; ++r) {
    CompAlg c = definite_comp(z, r);
    std::string n = std::to_string(1 << r);
    out.push_back({"her3-" + n,
                   sig_of(her3(her_layout(c))),
                   3 * (1 + (1 << r))});
    out.push_back({"her3-" + n + "-neg",
                   sig_of(her3(her_layout(
                       c, {z->one(), z->one(), -z->one()}))),
                   3 - (1 << r)});
  }
  out.push_back({"split-9",
                 sig_of(her3(her_layout(
                     comp_construct(CompKind::split_etale, z)))),
                 3});
  out.push_back({"split-15",
                 sig_of(her3(her_layout(comp_construct(CompKind::mat2, z)))),
                 3});
  out.push_back({"split-27",
                 sig_of(her3(her_layout(comp_construct(CompKind::zorn, z)))),
                 3});
  return out;
}

std::vector<Vec> generating_triple(const CubicJordan& j, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(0, 2);
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Vec> gens;
    for (int g = 0; g < 3; ++g) {
      Vec v(j.dim);
      for (std::size_t k = 0; k < j.dim; ++k)
        v[k] = j.ctx->from_int(coef(rng));
      gens.push_back(std::move(v));
    }
    if (subalgebra_generated(j, gens).dim() == j.dim) return gens;
  }
  throw AlbError("no generating triple found");
}

}  // namespace alb
