#include "albertine/census.hpp"

#include <functional>

#include <nlohmann/json.hpp>

namespace alb {

namespace {

Int to_int(const Scalar& s) { return s.as_int(); }

IntMatrix gram_of(const CubicJordan& j, const Mat& uv) {
  // G_lambda(x, y) = T(U_v x, y); with uv = Id this is T itself
  Mat m = uv.transpose() * j.tmat;
  IntMatrix g(j.dim, j.dim);
  for (std::size_t i = 0; i < j.dim; ++i)
    for (std::size_t k = 0; k < j.dim; ++k) g.at(i, k) = to_int(m.at(i, k));
  return g;
}

}  // namespace

CensusData build_census_lattices() {
  Ctx z = RingCtx::integers();
  CensusData C{comp_construct(CompKind::coxeter_order, z),
               HerLayout{},
               CubicJordan{},
               {},
               {},
               {},
               {},
               Report{}};
  C.layout = her_layout(C.oct);
  C.j = her3(C.layout);
  C.beta = coxeter_beta(C.oct);
  Report& rep = C.certificates;

  const CompAlg& O = C.oct;
  Vec b2 = O.times(C.beta, C.beta);
  Vec b3 = O.times(C.beta, b2);
  rep.add("beta.trace", "census.beta",
          O.trace(C.beta) == z->from_int(-1));
  rep.add("beta.norm", "census.beta", O.norm(C.beta) == z->from_int(2));
  {
    Vec lhs = vec_add(vec_add(b2, C.beta),
                      vec_scale(z->from_int(2), O.unit));
    rep.add("beta.quadratic", "census.beta", vec_is_zero(lhs));
  }
  rep.add("beta.cube.trace", "census.beta", O.trace(b3) == z->from_int(5));

  Vec v = vec_zero(z, C.j.dim);
  for (int i = 1; i <= 3; ++i) {
    v[C.layout.eps(i)] = z->from_int(2);
    for (std::size_t k = 0; k < O.rank; ++k)
      v[C.layout.delta(i, k)] = C.beta[k];
  }
  C.v = v;
  rep.add("v.norm", "census.v", C.j.norm_of(v).is_one());
  // generic minimal polynomial (t-1)(t^2-5t+1) = t^3 - 6t^2 + 6t - 1
  rep.add("v.minpoly", "census.v",
          C.j.tr(v) == z->from_int(6) && C.j.s_form(v) == z->from_int(6) &&
              C.j.norm_of(v).is_one());

  C.her = IntLattice{gram_of(C.j, Mat::identity(z, C.j.dim)), C.j.dim,
                     "trace form"};
  C.lambda = IntLattice{gram_of(C.j, u_matrix(C.j, v)), C.j.dim,
                        "trace form twisted through U_v"};

  rep.add("her.det", "census.gram", det(C.her.gram) == 1);
  rep.add("lambda.det", "census.gram", det(C.lambda.gram) == 1);
  rep.add("her.posdef", "census.gram",
          ldl_signature(C.her.gram) == std::tuple<std::size_t, std::size_t,
                                                  std::size_t>{27, 0, 0});
  rep.add("lambda.posdef", "census.gram",
          ldl_signature(C.lambda.gram) ==
              std::tuple<std::size_t, std::size_t, std::size_t>{27, 0, 0});
  rep.add("lambda.symmetric", "census.gram", C.lambda.gram.is_symmetric());
  {
    // diag(1,1,1) + three copies of the octonion bilinear Gram
    IntMatrix g8 = mat_to_intmatrix(O.gram());
    bool block = true;
    for (std::size_t i = 0; i < 27 && block; ++i)
      for (std::size_t k = 0; k < 27 && block; ++k) {
        Int want = 0;
        if (i < 3 || k < 3)
          want = (i == k) ? 1 : 0;
        else if ((i - 3) / 8 == (k - 3) / 8)
          want = g8.at((i - 3) % 8, (k - 3) % 8);
        if (C.her.gram.at(i, k) != want) block = false;
      }
    rep.add("her.blocks", "census.gram", block);
  }
  if (!rep.all_pass()) throw AlbError("census certificate failure");
  return C;
}

std::vector<std::vector<Int>> enumerate_norm(const IntLattice& L,
                                             const Int& value) {
  std::size_t n = L.dim;
  if (value < 0) throw AlbError("negative norm value");
  auto sig = ldl_signature(L.gram);
  if (sig != std::tuple<std::size_t, std::size_t, std::size_t>{n, 0, 0})
    throw AlbError("enumeration needs a positive-definite Gram");

  // exact rational decomposition x^T G x = sum_i q_ii (x_i + sum_j>i q_ij x_j)^2
  std::vector<std::vector<Rat>> q(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) q[i][k] = Rat(L.gram.at(i, k));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 1; k < n; ++k) {
      Rat gik = q[i][k];
      q[k][i] = gik;
      q[i][k] = gik / q[i][i];
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q[k][l] -= q[k][i] * q[i][l];
  }

  std::vector<std::vector<Int>> out;
  std::vector<Int> x(n, 0);
  std::vector<Rat> budget(n);  // remaining value at each level
  budget[n - 1] = Rat(value);

  auto floor_rat = [](const Rat& z) {
    Int p = boost::multiprecision::numerator(z);
    Int d = boost::multiprecision::denominator(z);
    Int f = p / d;
    if (p < 0 && f * d != p) --f;
    return f;
  };

  // descend from the last coordinate; at level i the inner offset is
  // u_i = sum_{j>i} q_ij x_j and q_ii (x_i + u_i)^2 <= budget
  std::function<void(std::size_t)> walk = [&](std::size_t lvl) {
    Rat u(0);
    for (std::size_t jj = lvl + 1; jj < n; ++jj) u += q[lvl][jj] * Rat(x[jj]);
    Rat r = budget[lvl] / q[lvl][lvl];
    if (r < 0) return;
    // overestimate sqrt(r), then trim the closed integer window exactly
    Int p = boost::multiprecision::numerator(r);
    Int d = boost::multiprecision::denominator(r);
    Int pd = p * d;
    Rat s(Int(boost::multiprecision::sqrt(pd)) + 1, d);
    Int hi = floor_rat(s - u);
    Int lo = -floor_rat(s + u);
    auto fits = [&](const Int& xi) {
      Rat t = Rat(xi) + u;
      return q[lvl][lvl] * t * t <= budget[lvl];
    };
    while (hi >= lo && !fits(hi)) --hi;
    while (lo <= hi && !fits(lo)) ++lo;
    for (Int xi = lo; xi <= hi; ++xi) {
      Rat t = Rat(xi) + u;
      Rat rem = budget[lvl] - q[lvl][lvl] * t * t;
      x[lvl] = xi;
      if (lvl == 0) {
        if (rem == 0) out.push_back(x);
      } else {
        budget[lvl - 1] = rem;
        walk(lvl - 1);
      }
    }
    x[lvl] = 0;
  };
  walk(n - 1);
  return out;
}

CensusResult idempotent_census(const CensusData& C, CensusWhich which) {
  const CubicJordan& j = C.j;
  const IntLattice& L = which == CensusWhich::her ? C.her : C.lambda;
  CensusResult r;
  // x# = 0 and trace 1 force T(x,x) = Tr(x)^2 - 2 Tr(x#) = 1, so every
  // candidate lies at norm 1 of the model's trace lattice
  auto shell = enumerate_norm(L, 1);
  for (const auto& xi : shell) {
    Vec xv(j.dim);
    for (std::size_t k = 0; k < j.dim; ++k)
      xv[k] = Scalar::make_int(j.ctx, xi[k]);
    // in the twisted model x is degenerate exactly when x# = 0
    if (!vec_is_zero(j.sharp(xv))) continue;
    Scalar tr = which == CensusWhich::her ? j.tr(xv) : j.t_form(C.v, xv);
    if (!tr.is_one()) continue;
    ++r.count;
    r.witnesses.push_back(xv);
  }
  r.report.add(which == CensusWhich::her ? "census.her" : "census.lambda",
               "census.count",
               which == CensusWhich::her ? r.count == 3 : r.count == 0,
               "count " + std::to_string(r.count) + " of " +
                   std::to_string(shell.size()) + " shell vectors");
  return r;
}

std::string census_witnesses_json(const CensusResult& r) {
  nlohmann::json out = nlohmann::json::array();
  for (const Vec& w : r.witnesses) {
    nlohmann::json row = nlohmann::json::array();
    for (const Scalar& s : w) row.push_back(s.str());
    out.push_back(row);
  }
  return out.dump(2);
}

}  // namespace alb
