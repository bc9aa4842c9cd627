#include <algorithm>
#include <functional>
#include <tuple>

#include "dkpcli/commands.hpp"

namespace dkp::cli {

namespace {

void require(CheckReport& r, bool ok, const std::string& what) {
  ++r.identities_checked;
  if (!ok) r.fail("failed: " + what);
}

Representation corrupted_irrep() {
  auto betas = builtin_irrep_1p1().betas();
  betas[1](0, 1) = betas[1](0, 1) + GaussianRational(1L);
  return Representation(Metric::minkowski(2), std::move(betas));
}

struct Fixtures {
  Representation irrep;
  Representation kron2 = build_kronecker_rep(build_gamma(GammaBasis::dirac2), true);
  Representation kron2_nohalf = build_kronecker_rep(build_gamma(GammaBasis::dirac2), false);
  Representation kron4 = build_kronecker_rep(build_gamma(GammaBasis::dirac4), true);
  Representation scalar2 = build_scalar_rep(2), vector2 = build_vector_rep(2);
  Representation scalar4 = build_scalar_rep(4), vector4 = build_vector_rep(4);
};

// Each claim runs in isolation: an exception is a failed claim, not a crash.
ReportCheck claim(const std::string& name, const std::function<void(CheckReport&, json&)>& body) {
  CheckReport r{name};
  json details = json::object();
  try {
    body(r, details);
  } catch (const std::exception& e) {
    r.fail(std::string("error: ") + e.what());
  }
  return from_check(r, std::move(details));
}

bool has_triple(const AlgebraReport& a, std::vector<std::size_t> t) {
  return std::any_of(a.violations.begin(), a.violations.end(), [&](const Violation& v) { return v.indices == t; });
}

}  // namespace

Report paper_report(bool corrupt) {
  Fixtures f{corrupt ? corrupted_irrep() : builtin_irrep_1p1()};
  Report report{"paper"};
  report.inputs = input_digest({}, {{"corrupt", corrupt}});
  auto& checks = report.checks;

  checks.push_back(claim("irrep1p1_dkp_algebra", [&](CheckReport& r, json& d) {
    const auto a = verify_dkp(f.irrep);
    d["relations_checked"] = a.relations_checked;
    require(r, a.relations_checked == 8, "8 triples checked");
    for (const auto& v : a.violations) r.expect_zero("triple", v.residual);
    require(r, a.passed, "every triple vanishes");
  }));

  checks.push_back(claim("kronecker_half_factor", [&](CheckReport& r, json& d) {
    require(r, verify_clifford(build_gamma(GammaBasis::dirac2)).passed, "dirac2 gammas are Clifford");
    require(r, verify_dkp(f.kron2).passed, "with 1/2: DKP");
    const auto bad = verify_dkp(f.kron2_nohalf);
    require(r, !bad.passed, "without 1/2: not DKP");
    require(r, has_triple(bad, {0, 0, 0}), "triple (0,0,0) violated");
    json triples = json::array();
    for (const auto& v : bad.violations) triples.push_back(v.indices);
    d["nohalf_violated_triples"] = std::move(triples);
    const auto& b0 = f.kron2_nohalf.upper(0);
    const auto rhs = GaussianRational(2L) * b0;
    for (const auto& v : bad.violations)
      if (v.indices == std::vector<std::size_t>{0, 0, 0}) r.expect_equal("residual(0,0,0) = 3 RHS", v.residual, GaussianRational(3L) * rhs);
  }));

  checks.push_back(claim("kron2_decomposition", [&](CheckReport& r, json& d) {
    const auto res = decompose(f.kron2);
    d["block_dims"] = res.block_dims();
    require(r, res.block_dims() == std::vector<std::size_t>{1, 3}, "blocks [1,3]");
    require(r, res.complete, "every block irreducible");
    if (res.blocks.size() != 2) return;
    require(r, res.blocks[0].trivial, "1-dim block is the zero representation");
    const auto cert = intertwiner(res.blocks[1].subrep, f.irrep);
    require(r, cert.has_value(), "intertwiner from the 3-dim block to the irrep");
    if (!cert) return;
    const auto u = unitarize(*cert, res.blocks[1].subrep, f.irrep);
    d["S"] = dkp::to_json(u.S);
    d["unitarity"] = to_string(u.unitarity);
    if (u.lambda) d["lambda"] = to_string(*u.lambda);
    require(r, u.lambda && sgn(*u.lambda) > 0, "S^dagger S = lambda I with lambda > 0");
  }));

  checks.push_back(claim("commutant_dimensions", [&](CheckReport& r, json& d) {
    const std::size_t irrep = commutant(f.irrep).dimension(), k2 = commutant(f.kron2).dimension(),
                      k4 = commutant(f.kron4).dimension();
    d["irrep1p1"] = irrep;
    d["kron2"] = k2;
    d["kron4"] = k4;
    require(r, irrep == 1, "irrep1p1 -> 1");
    require(r, k2 == 2, "kron2 -> 2");
    require(r, k4 == 3, "kron4 -> 3");
  }));

  checks.push_back(claim("kron4_decomposition", [&](CheckReport& r, json& d) {
    const auto res = decompose(f.kron4);
    d["block_dims"] = res.block_dims();
    require(r, res.block_dims() == std::vector<std::size_t>{1, 5, 10}, "blocks [1,5,10]");
    if (res.blocks.size() != 3) return;
    require(r, res.blocks[0].trivial, "1-dim block is trivial");
    require(r, res.blocks[1].irreducible && res.blocks[2].irreducible, "5- and 10-blocks irreducible");
    require(r, !intertwiner(res.blocks[1].subrep, res.blocks[2].subrep), "5-block and 10-block inequivalent");
    require(r, intertwiner(res.blocks[1].subrep, f.scalar4).has_value(), "5-block equivalent to the scalar construction");
    require(r, intertwiner(res.blocks[2].subrep, f.vector4).has_value(), "10-block equivalent to the vector construction");
  }));

  checks.push_back(claim("rels_1p1", [&](CheckReport& r, json& d) {
    const auto block = decompose(f.kron2).blocks.back().subrep;
    const std::vector<std::pair<std::string, const Representation*>> reps{
        {"irrep1p1", &f.irrep}, {"kron2", &f.kron2}, {"kron2 3-block", &block},
        {"scalar-D 2", &f.scalar2}, {"vector-D 2", &f.vector2}};
    json names = json::array();
    for (const auto& [name, rep] : reps) {
      names.push_back(name);
      const auto ps = build_projectors(*rep);
      for (const auto& sub : {verify_rels_1p1(ps, *rep), verify_r01_scalar(ps)}) {
        r.identities_checked += sub.identities_checked;
        for (const auto& fl : sub.failures) r.failures.push_back({name + ": " + fl.label, fl.value});
        if (!sub.passed()) r.status = CheckStatus::fail;
      }
    }
    d["representations"] = std::move(names);
  }));

  checks.push_back(claim("orthogonality_dichotomy", [&](CheckReport& r, json& d) {
    for (const auto& [name, rep] : std::vector<std::pair<std::string, const Representation*>>{
             {"kron4", &f.kron4}, {"scalar-D 4", &f.scalar4}, {"vector-D 4", &f.vector4}}) {
      const auto o = verify_orthogonality(build_projectors(*rep));
      d[name] = {{"all_vanish", o.all_vanish}, {"products_checked", o.products_checked}};
      require(r, o.all_vanish, name + ": all products vanish");
    }
    for (const auto& [name, rep] : std::vector<std::pair<std::string, const Representation*>>{
             {"irrep1p1", &f.irrep}, {"kron2", &f.kron2}}) {
      const auto o = verify_orthogonality(build_projectors(*rep));
      d[name] = {{"all_vanish", o.all_vanish}, {"nonzero_products", o.nonzero_products}};
      require(r, !o.all_vanish, name + ": some product is nonzero");
    }
  }));

  checks.push_back(claim("scalar_vector_builders", [&](CheckReport& r, json& d) {
    require(r, f.scalar2 == f.irrep, "scalar-D 2 equals irrep1p1");
    require(r, f.vector2 == f.irrep, "vector-D 2 equals irrep1p1");
    d["scalar4_dim"] = f.scalar4.dim();
    d["vector4_dim"] = f.vector4.dim();
    require(r, f.scalar4.dim() == 5 && verify_dkp(f.scalar4).passed, "scalar-D 4: dim 5, DKP");
    require(r, f.vector4.dim() == 10 && verify_dkp(f.vector4).passed, "vector-D 4: dim 10, DKP");
  }));

  checks.push_back(claim("plane_wave_suite", [&](CheckReport& r, json& d) {
    const auto ps = build_projectors(f.irrep);
    json grid = json::array();
    for (const auto& [p0, p1, m] : std::vector<std::tuple<long, long, long>>{{5, 4, 3}, {13, 12, 5}, {3, 0, 3}}) {
      const Momentum p({Rational(p0), Rational(p1)}, Rational(m));
      const auto sol = solution_space(f.irrep, p);
      const std::string tag = "(" + std::to_string(p0) + "," + std::to_string(p1) + ";" + std::to_string(m) + ")";
      grid.push_back({{"p", tag}, {"kernel_dim", sol.amplitude_basis.size()}});
      require(r, sol.amplitude_basis.size() == 1, tag + " kernel dim 1");
      for (const auto& sub : {kg_relations_check(f.irrep, ps, sol), proca_relations_check(f.irrep, ps, sol),
                              verify_dkp_sector_equations(ps, f.irrep, p)}) {
        r.identities_checked += sub.identities_checked;
        for (const auto& fl : sub.failures) r.failures.push_back({tag + " " + fl.label, fl.value});
        if (sub.status != CheckStatus::pass) r.fail(tag + " " + sub.name + ": " + to_string(sub.status));
      }
    }
    for (const auto& [p0, p1, m] : std::vector<std::tuple<long, long, long>>{{1, 1, 1}, {5, 4, 2}, {2, 0, 3}}) {
      const Momentum p({Rational(p0), Rational(p1)}, Rational(m));
      const auto k = solution_space(f.irrep, p).amplitude_basis.size();
      const std::string tag = "(" + std::to_string(p0) + "," + std::to_string(p1) + ";" + std::to_string(m) + ")";
      grid.push_back({{"p", tag}, {"kernel_dim", k}, {"off_shell", true}});
      require(r, k == 0, tag + " off-shell kernel is empty");
    }
    d["grid"] = std::move(grid);
    d["convention"] = kPlaneWaveConvention;
  }));

  checks.push_back(claim("field_map", [&](CheckReport& r, json& d) {
    if (f.irrep != builtin_irrep_1p1()) {
      r.fail("builtin irrep altered");
      return;
    }
    const auto fm = field_map_check(Momentum({Rational(5), Rational(4)}, Rational(3)));
    r.identities_checked = fm.check.identities_checked;
    r.failures = fm.check.failures;
    r.status = fm.check.status;
    d["phi"] = dkp::to_json(fm.phi);
    d["F01"] = dkp::to_json(fm.F01);
    d["A0"] = dkp::to_json(fm.A0);
    d["A1"] = dkp::to_json(fm.A1);
  }));

  checks.push_back(claim("lorentz_covariance", [&](CheckReport& r, json& d) {
    json per_rep = json::object();
    for (const auto& [name, rep] : std::vector<std::pair<std::string, const Representation*>>{
             {"irrep1p1", &f.irrep}, {"kron2", &f.kron2}, {"kron4", &f.kron4}, {"scalar-D 4", &f.scalar4},
             {"vector-D 4", &f.vector4}}) {
      const auto ps = build_projectors(*rep);
      std::vector<CheckReport> subs{verify_scalar_covariance(ps)};
      for (auto family : {VectorFamily::P_up, VectorFamily::R_up}) subs.push_back(verify_vector_covariance(ps, family).law);
      for (const auto& sub : subs) {
        r.identities_checked += sub.identities_checked;
        for (const auto& fl : sub.failures) r.failures.push_back({name + ": " + fl.label, fl.value});
        if (!sub.passed()) r.status = CheckStatus::fail;
      }
      per_rep[name] = "checked";
    }
    d["representations"] = std::move(per_rep);
    d["vector_law_sign"] = vector_law_sign();
  }));

  checks.push_back(claim("central_theorem_1p1", [&](CheckReport& r, json& d) {
    // direct sum hidden behind a fixed non-unitary change of basis
    Matrix t = Matrix::identity(7);
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = i + 1; j < 7; ++j)
        t(i, j) = GaussianRational(Rational(static_cast<long>((i + 2 * j) % 3) - 1), Rational(static_cast<long>((i * j) % 2)));
    const auto hidden = conjugate(direct_sum({f.irrep, trivial_rep(2), f.irrep}), t);
    for (const auto& [name, rep] : std::vector<std::pair<std::string, Representation>>{
             {"irrep1p1", f.irrep}, {"kron2", f.kron2}, {"scalar-D 2", f.scalar2}, {"vector-D 2", f.vector2},
             {"trivial x2", trivial_rep(2, 2)}, {"conjugated irrep+trivial+irrep", hidden}}) {
      const auto res = decompose(rep);
      d[name] = res.block_dims();
      require(r, res.complete, name + ": decomposition complete");
      for (const auto& b : res.blocks)
        require(r, b.trivial || intertwiner(b.subrep, f.irrep).has_value(),
                name + ": block is trivial or equivalent to irrep1p1");
    }
  }));

  return report;
}

}  // namespace dkp::cli
