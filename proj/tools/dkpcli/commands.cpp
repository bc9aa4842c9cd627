#include "dkpcli/commands.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace dkp::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw UsageError("cannot write " + path);
}

Representation load(const std::string& path, std::string& bytes) {
  bytes = read_file(path);
  try {
    return parse_representation(bytes);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

json dims_json(const std::vector<std::size_t>& dims) { return json(dims); }

json columns_json(const std::vector<Matrix>& columns) {
  json out = json::array();
  for (const auto& c : columns) out.push_back(dkp::to_json(c.transpose()).at(0));
  return out;
}

json rationals_json(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

void require(CheckReport& r, bool ok, const std::string& what) {
  ++r.identities_checked;
  if (!ok) r.fail("failed: " + what);
}

int emit(const Report& report, std::ostream& out) {
  out << report.dump();
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"dirac2", "dirac4",   "kron2",    "kron2-nohalf",
                                              "kron4",  "irrep1p1", "scalar-D", "vector-D"};
  return names;
}

Representation build_named(const std::string& name, std::optional<long> spacetime_dim) {
  const bool sized = name == "scalar-D" || name == "vector-D";
  if (sized && !spacetime_dim) throw UsageError(name + " requires --D");
  if (!sized && spacetime_dim) throw UsageError(name + " does not take --D");
  if (sized) {
    if (*spacetime_dim < 2 || *spacetime_dim > 16) throw UsageError("--D must be between 2 and 16");
    const auto d = static_cast<std::size_t>(*spacetime_dim);
    return name == "scalar-D" ? build_scalar_rep(d) : build_vector_rep(d);
  }
  if (name == "dirac2") return build_gamma(GammaBasis::dirac2);
  if (name == "dirac4") return build_gamma(GammaBasis::dirac4);
  if (name == "kron2") return build_kronecker_rep(build_gamma(GammaBasis::dirac2), true);
  if (name == "kron2-nohalf") return build_kronecker_rep(build_gamma(GammaBasis::dirac2), false);
  if (name == "kron4") return build_kronecker_rep(build_gamma(GammaBasis::dirac4), true);
  if (name == "irrep1p1") return builtin_irrep_1p1();
  throw UsageError("unknown representation name '" + name + "'");
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    token = first == std::string::npos ? "" : token.substr(first, last - first + 1);
    out.push_back(parse_rational(token));
  }
  if (out.empty() || text.back() == ',') throw ParseError("expected a comma-separated list of rationals, got '" + text + "'");
  return out;
}

// ---------------------------------------------------------------- checks

std::vector<ReportCheck> algebra_checks(const Representation& rep) {
  const auto dkp = verify_dkp(rep);
  CheckReport r{"dkp_algebra"};
  r.identities_checked = dkp.relations_checked;
  json triples = json::array();
  for (const auto& v : dkp.violations) {
    std::string label = "triple (";
    for (std::size_t k = 0; k < v.indices.size(); ++k) label += (k ? "," : "") + std::to_string(v.indices[k]);
    r.failures.push_back({label + ")", v.residual});
    triples.push_back(v.indices);
  }
  if (!dkp.passed) r.status = CheckStatus::fail;
  json details{{"D", rep.D()}, {"dim", rep.dim()}, {"clifford", verify_clifford(rep).passed}};
  if (!dkp.passed) details["violated_triples"] = std::move(triples);
  return {from_check(r, std::move(details))};
}

std::vector<ReportCheck> projector_checks(const Representation& rep) {
  std::optional<ProjectorSet> ps;
  try {
    ps.emplace(build_projectors(rep));
  } catch (const PreconditionError& e) {
    return {status_check("projectors", CheckStatus::vacuous, {{"reason", e.what()}})};
  }
  std::vector<ReportCheck> out;
  CheckReport idem{"projector_idempotence"};
  idem.expect_equal("P^2 = P", ps->P * ps->P, ps->P);
  if (idem.passed() && ps->P.is_zero()) idem.notes.push_back("P = 0 on this representation");
  out.push_back(from_check(idem, {{"rank_P", rank(ps->P)}}));

  out.push_back(from_check(verify_scalar_covariance(*ps)));
  for (auto family : {VectorFamily::P_up, VectorFamily::R_up}) {
    auto v = verify_vector_covariance(*ps, family);
    out.push_back(from_check(v.law, {{"sign_convention", v.sign_convention}, {"literal_invariance", v.literal_invariance}}));
  }

  const auto orth = verify_orthogonality(*ps);
  CheckStatus orth_status = CheckStatus::pass;
  std::string expectation = "none (dichotomy stated for D=2 and D=4 only)";
  if (rep.D() == 4) {
    expectation = "all products vanish";
    if (!orth.all_vanish) orth_status = CheckStatus::fail;
  } else if (rep.D() == 2) {
    expectation = "some product is nonzero";
    if (orth.all_vanish) orth_status = ps->P.is_zero() ? CheckStatus::vacuous : CheckStatus::fail;
  }
  ReportCheck orth_check = status_check("orthogonality", orth_status,
                                        {{"expectation", expectation},
                                         {"all_vanish", orth.all_vanish},
                                         {"nonzero_products", orth.nonzero_products}});
  orth_check.residual_summary = {{"identities_checked", orth.products_checked},
                                 {"nonzero_residuals", orth.nonzero_products.size()}};
  out.push_back(std::move(orth_check));

  if (rep.D() == 2) {
    out.push_back(from_check(verify_r01_scalar(*ps)));
    out.push_back(from_check(verify_rels_1p1(*ps, rep)));
  }
  return out;
}

std::vector<ReportCheck> decomposition_checks(const Representation& rep, const DecompositionResult& result) {
  json blocks = json::array();
  for (std::size_t k = 0; k < result.blocks.size(); ++k) {
    const auto& b = result.blocks[k];
    blocks.push_back({{"index", k},
                      {"dim", b.basis.size()},
                      {"trivial", b.trivial},
                      {"irreducible", b.irreducible},
                      {"commutant_dim", b.commutant_dim},
                      {"orthogonal_basis", b.scalar_gram},
                      {"basis", columns_json(b.basis)}});
  }
  ReportCheck summary = status_check("decomposition", result.complete ? CheckStatus::pass : CheckStatus::partial,
                                     {{"block_dims", dims_json(result.block_dims())},
                                      {"blocks", std::move(blocks)},
                                      {"change_of_basis", dkp::to_json(result.change_of_basis)},
                                      {"commutant_field", kCommutantField},
                                      {"notes", result.notes}});

  CheckReport reassembly{"reassembly"};
  std::vector<Representation> parts;
  for (const auto& b : result.blocks) parts.push_back(b.subrep);
  const auto conjugated = conjugate(rep, result.change_of_basis);
  const auto assembled = direct_sum(parts);
  for (std::size_t mu = 0; mu < rep.D(); ++mu)
    reassembly.expect_equal("C^-1 beta^" + std::to_string(mu) + " C = block diagonal", conjugated.upper(mu),
                            assembled.upper(mu));
  return {std::move(summary), from_check(reassembly)};
}

std::vector<ReportCheck> planewave_checks(const Representation& rep, const Momentum& p) {
  if (rep.D() != p.D())
    throw UsageError("momentum has " + std::to_string(p.D()) + " components but the representation has D=" +
                     std::to_string(rep.D()));
  std::vector<ReportCheck> out;
  const bool on_shell = p.on_shell();
  std::vector<Rational> lower;
  for (std::size_t mu = 0; mu < p.D(); ++mu) lower.push_back(p.lower(mu));
  out.push_back(status_check("dispersion", on_shell ? CheckStatus::pass : CheckStatus::vacuous,
                             {{"p_upper", rationals_json(p.components())},
                              {"p_lower", rationals_json(lower)},
                              {"p_squared", to_string(p.square())},
                              {"m_squared", to_string(Rational(p.mass() * p.mass()))},
                              {"on_shell", on_shell},
                              {"convention", kPlaneWaveConvention}}));

  const auto sol = solution_space(rep, p);
  out.push_back(status_check("kernel", CheckStatus::pass,
                             {{"kernel_dim", sol.amplitude_basis.size()}, {"basis", columns_json(sol.amplitude_basis)}}));

  const char* relation_names[] = {"klein_gordon_relations", "proca_relations", "sector_equations"};
  if (!on_shell) {
    for (const char* name : relation_names) out.push_back(status_check(name, CheckStatus::vacuous, {{"reason", "off-shell"}}));
    return out;
  }
  std::optional<ProjectorSet> ps;
  try {
    ps.emplace(build_projectors(rep));
  } catch (const PreconditionError& e) {
    for (const char* name : relation_names) out.push_back(status_check(name, CheckStatus::vacuous, {{"reason", e.what()}}));
    return out;
  }
  out.push_back(from_check(kg_relations_check(rep, *ps, sol)));
  if (rep.D() == 2 || rep.D() == 4)
    out.push_back(from_check(proca_relations_check(rep, *ps, sol)));
  else
    out.push_back(status_check("proca_relations", CheckStatus::vacuous, {{"reason", "vector sector checked for D=2 and D=4"}}));
  out.push_back(from_check(verify_dkp_sector_equations(*ps, rep, p)));

  if (rep.D() == 2 && rep == builtin_irrep_1p1()) {
    const auto fm = field_map_check(p);
    out.push_back(from_check(fm.check, {{"phi", dkp::to_json(fm.phi)},
                                        {"d_up0_phi", dkp::to_json(fm.d_up0_phi)},
                                        {"d_up1_phi", dkp::to_json(fm.d_up1_phi)},
                                        {"F01", dkp::to_json(fm.F01)},
                                        {"A0", dkp::to_json(fm.A0)},
                                        {"A1", dkp::to_json(fm.A1)}}));
  }
  return out;
}

// ---------------------------------------------------------------- commands

int cmd_build(const std::string& name, std::optional<long> spacetime_dim, const std::string& out_path, std::ostream& out,
              std::ostream& err) {
  try {
    const auto text = dump_representation(build_named(name, spacetime_dim));
    if (out_path.empty() || out_path == "-")
      out << text;
    else
      write_file(out_path, text);
    return kExitPass;
  } catch (const UsageError& e) {
    err << "dkp build: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_verify(const std::string& file, const std::string& suite, std::ostream& out, std::ostream& err) {
  try {
    if (suite != "algebra" && suite != "projectors" && suite != "all") throw UsageError("unknown suite '" + suite + "'");
    std::string bytes;
    const auto rep = load(file, bytes);
    Report report{"verify"};
    report.inputs = input_digest({{file, bytes}}, {{"suite", suite}});
    if (suite != "projectors")
      for (auto& c : algebra_checks(rep)) report.checks.push_back(std::move(c));
    if (suite != "algebra")
      for (auto& c : projector_checks(rep)) report.checks.push_back(std::move(c));
    return emit(report, out);
  } catch (const UsageError& e) {
    err << "dkp verify: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_decompose(const std::string& file, const std::string& out_dir, std::ostream& out, std::ostream& err) {
  try {
    std::string bytes;
    const auto rep = load(file, bytes);
    if (!verify_dkp(rep).passed) throw UsageError(file + ": not a DKP representation (run verify --suite algebra)");
    const auto result = decompose(rep);
    Report report{"decompose"};
    report.inputs = input_digest({{file, bytes}}, json::object());
    report.checks = decomposition_checks(rep, result);
    if (!out_dir.empty()) {
      std::error_code ec;
      std::filesystem::create_directories(out_dir, ec);
      if (ec) throw UsageError("cannot create " + out_dir + ": " + ec.message());
      for (std::size_t k = 0; k < result.blocks.size(); ++k)
        write_file((std::filesystem::path(out_dir) / ("block-" + std::to_string(k) + ".json")).string(),
                   dump_representation(result.blocks[k].subrep));
    }
    return emit(report, out);
  } catch (const UsageError& e) {
    err << "dkp decompose: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_equiv(const std::string& file_a, const std::string& file_b, std::ostream& out, std::ostream& err) {
  try {
    std::string bytes_a, bytes_b;
    const auto a = load(file_a, bytes_a);
    const auto b = load(file_b, bytes_b);
    if (a.metric() != b.metric())
      throw UsageError("metric mismatch: D=" + std::to_string(a.D()) + " vs D=" + std::to_string(b.D()));
    Report report{"equiv"};
    report.inputs = input_digest({{file_a, bytes_a}, {file_b, bytes_b}}, json::object());
    const auto cert = intertwiner(a, b);
    if (!cert) {
      report.checks.push_back(status_check("equivalence", CheckStatus::fail,
                                           {{"equivalent", false},
                                            {"verdict", "inequivalent"},
                                            {"dims", {a.dim(), b.dim()}}}));
      return emit(report, out);
    }
    const auto u = unitarize(*cert, a, b);
    json details{{"equivalent", true},
                 {"verdict", "equivalent"},
                 {"S", dkp::to_json(u.S)},
                 {"intertwiner_space_dim", u.solution_space_dim},
                 {"unitarity", to_string(u.unitarity)}};
    if (u.lambda) details["lambda"] = to_string(*u.lambda);
    if (u.unitary_witness) details["W"] = dkp::to_json(*u.unitary_witness);
    CheckReport identity{"equivalence"};
    for (std::size_t mu = 0; mu < a.D(); ++mu)
      identity.expect_equal("S beta_A^" + std::to_string(mu) + " = beta_B^" + std::to_string(mu) + " S", u.S * a.upper(mu),
                            b.upper(mu) * u.S);
    require(identity, is_invertible(u.S), "S invertible");
    if (u.lambda) identity.expect_equal("S^dagger S = lambda I", conj_transpose(u.S) * u.S,
                                        GaussianRational(*u.lambda) * Matrix::identity(a.dim()));
    report.checks.push_back(from_check(identity, std::move(details)));
    return emit(report, out);
  } catch (const UsageError& e) {
    err << "dkp equiv: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_planewave(const std::string& file, const std::string& p_text, const std::string& m_text, std::ostream& out,
                  std::ostream& err) {
  try {
    std::string bytes;
    const auto rep = load(file, bytes);
    std::vector<Rational> p;
    Rational m;
    try {
      p = parse_rational_list(p_text);
      m = parse_rational(m_text);
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
    if (sgn(m) <= 0) throw UsageError("--m must be positive");
    if (p.size() != rep.D())
      throw UsageError("--p has " + std::to_string(p.size()) + " components but the representation has D=" +
                       std::to_string(rep.D()));
    Report report{"planewave"};
    report.inputs = input_digest({{file, bytes}}, {{"p", rationals_json(p)}, {"m", to_string(m)}});
    report.checks = algebra_checks(rep);
    for (auto& c : planewave_checks(rep, Momentum(p, m))) report.checks.push_back(std::move(c));
    return emit(report, out);
  } catch (const UsageError& e) {
    err << "dkp planewave: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_paper(bool as_json, bool corrupt, std::ostream& out, std::ostream&) {
  const auto report = paper_report(corrupt);
  if (as_json) return emit(report, out);
  for (const auto& c : report.checks) out << to_string(c.status) << "  " << c.name << "\n";
  out << "overall: " << (report.passed() ? "pass" : "fail") << "\n";
  return report.passed() ? kExitPass : kExitFail;
}

}  // namespace dkp::cli
