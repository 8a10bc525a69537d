#include "g2holo/cli.hpp"

#include "g2holo/atlas.hpp"
#include "g2holo/json_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace g2holo::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Options {
  std::string input = "-";
  std::string gram_path;
  std::string family_token;
  std::string eps = "0";
  std::string a = "0", b = "0", c = "0";
  std::string example_name;
  bool json_output = false;
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::ifstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << file.rdbuf();
  return ss.str();
}

struct LoadedAlgebra {
  MetricLieAlgebra m;
  bool standard = false;  // gram is the split-g2 one on dimension 7
};

LoadedAlgebra load_metric_algebra(const Options& opt, std::istream& in) {
  LoadedAlgebra loaded;
  loaded.m.lie = lie_algebra_from_json(read_all(opt.input, in));
  const int n = loaded.m.lie.dim();
  if (!opt.gram_path.empty()) {
    loaded.m.gram = gram_from_json(read_all(opt.gram_path, in));
    if (loaded.m.gram.rows() != n)
      throw std::runtime_error("gram dimension does not match the algebra");
  } else {
    if (n != 7)
      throw std::runtime_error("default metric needs dimension 7; pass --gram for dimension " +
                               std::to_string(n));
    loaded.m.gram = standard_gram();
  }
  loaded.standard = (loaded.m.gram == standard_gram());
  return loaded;
}

json matrix_json(const QMat& m) {
  json flat = json::array();
  for (const auto& token : matrix_tokens(m)) flat.push_back(token);
  return flat;
}

void print_matrix(std::ostream& out, const QMat& m, const std::string& indent) {
  for (int i = 0; i < m.rows(); ++i) {
    out << indent << "[";
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ", ";
      out << m.at(i, j).to_token();
    }
    out << "]\n";
  }
}

std::vector<QMat> load_span(const Options& opt, std::istream& in) {
  if (!opt.family_token.empty()) {
    auto name = parse_family(opt.family_token);
    if (!name) throw std::runtime_error("unknown family token '" + opt.family_token + "'");
    return family(*name).basis;
  }
  return matrix_span_from_json(read_all(opt.input, in));
}

int cmd_validate(const Options& opt, std::istream& in, std::ostream& out) {
  QLieAlgebra g = lie_algebra_from_json(read_all(opt.input, in));
  auto report = jacobi_check(g);
  if (opt.json_output) {
    json violations = json::array();
    for (const auto& v : report.violations) {
      violations.push_back({{"i", v.i + 1},
                            {"j", v.j + 1},
                            {"k", v.k + 1},
                            {"l", v.l + 1},
                            {"residual", v.residual.to_token()}});
    }
    out << json{{"ok", report.ok()}, {"violations", violations}}.dump(2) << "\n";
  } else if (report.ok()) {
    out << "jacobi: ok (dimension " << g.dim() << ")\n";
  } else {
    out << "jacobi: " << report.violations.size() << " nonzero component(s); first at (i,j,k,l) = (";
    const auto& v = report.violations.front();
    out << v.i + 1 << "," << v.j + 1 << "," << v.k + 1 << "," << v.l + 1
        << "), residual " << v.residual.to_token() << "\n";
  }
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_metric(const Options& opt, std::istream& in, std::ostream& out) {
  LoadedAlgebra loaded = load_metric_algebra(opt, in);
  auto [pos, neg, zero] = gram_signature(loaded.m.gram);
  if (opt.json_output) {
    out << json{{"positive", pos}, {"negative", neg}, {"null", zero}}.dump(2) << "\n";
  } else {
    out << "signature: positive " << pos << ", negative " << neg << ", null " << zero << "\n";
  }
  return kOk;
}

int cmd_connection(const Options& opt, std::istream& in, std::ostream& out) {
  LoadedAlgebra loaded = load_metric_algebra(opt, in);
  loaded.m.validate();
  Connection c = levi_civita(loaded.m);
  if (opt.json_output) {
    json lambdas = json::array();
    for (const auto& l : c.lambda) lambdas.push_back(matrix_json(l));
    out << json{{"lambda", lambdas}}.dump(2) << "\n";
  } else {
    for (int i = 0; i < c.dim(); ++i) {
      out << "Lambda_" << i + 1 << (c[i].is_zero() ? " = 0\n" : ":\n");
      if (!c[i].is_zero()) print_matrix(out, c[i], "  ");
    }
  }
  return kOk;
}

int cmd_curvature(const Options& opt, std::istream& in, std::ostream& out) {
  LoadedAlgebra loaded = load_metric_algebra(opt, in);
  loaded.m.validate();
  Connection c = levi_civita(loaded.m);
  CurvatureTensor r = curvature(loaded.m, c);
  MatrixSpan span = matrix_span(loaded.m.dim(), r.r);
  if (opt.json_output) {
    json entries = json::array();
    for (int i = 0; i < r.n; ++i)
      for (int j = i + 1; j < r.n; ++j) {
        const QMat& rij = r.r[static_cast<size_t>(CurvatureTensor::slot(r.n, i, j))];
        if (rij.is_zero()) continue;
        entries.push_back({{"i", i + 1}, {"j", j + 1}, {"matrix", matrix_json(rij)}});
      }
    out << json{{"span_dimension", span.flat.dim()}, {"nonzero", entries}}.dump(2) << "\n";
    return kOk;
  }
  out << "curvature span dimension: " << span.flat.dim() << "\n";
  for (int i = 0; i < r.n; ++i)
    for (int j = i + 1; j < r.n; ++j) {
      const QMat& rij = r.r[static_cast<size_t>(CurvatureTensor::slot(r.n, i, j))];
      if (rij.is_zero()) continue;
      out << "R_" << i + 1 << j + 1 << ":\n";
      print_matrix(out, rij, "  ");
    }
  return kOk;
}

int cmd_holonomy(const Options& opt, std::istream& in, std::ostream& out) {
  LoadedAlgebra loaded = load_metric_algebra(opt, in);
  loaded.m.validate();
  Connection c = levi_civita(loaded.m);
  MatrixSpan hol = holonomy(loaded.m, c);
  std::vector<std::string> equal_to;
  if (loaded.standard && loaded.m.dim() == 7) {
    for (FamilyName name :
         {FamilyName::G2Star, FamilyName::HI, FamilyName::HIII, FamilyName::M101,
          FamilyName::M102, FamilyName::Sl2, FamilyName::Gl2, FamilyName::Co2, FamilyName::Diag,
          FamilyName::RDiag10}) {
      if (hol.flat == family(name).flat) equal_to.push_back(family_display(name));
    }
  }
  if (opt.json_output) {
    json basis = json::array();
    for (const auto& b : hol.basis) basis.push_back(matrix_json(b));
    out << json{{"dimension", hol.flat.dim()}, {"equals", equal_to}, {"basis", basis}}.dump(2)
        << "\n";
  } else {
    out << "holonomy dimension " << hol.flat.dim();
    for (const auto& name : equal_to) out << ", equals " << name;
    out << "\n";
  }
  return kOk;
}

int cmd_bianchi(const Options& opt, std::istream& in, std::ostream& out) {
  LoadedAlgebra loaded = load_metric_algebra(opt, in);
  loaded.m.validate();
  Connection c = levi_civita(loaded.m);
  CurvatureTensor r = curvature(loaded.m, c);
  auto first = second_bianchi_scan(loaded.m, c, r);
  if (opt.json_output) {
    json j = {{"ok", !first.has_value()}};
    if (first) j["first_nonzero"] = {(*first)[0] + 1, (*first)[1] + 1, (*first)[2] + 1};
    out << j.dump(2) << "\n";
  } else if (first) {
    out << "second Bianchi residual nonzero at (i,j,k) = (" << (*first)[0] + 1 << ","
        << (*first)[1] + 1 << "," << (*first)[2] + 1 << ")\n";
  } else {
    out << "second Bianchi: all residuals vanish\n";
  }
  return first ? kCheckFailed : kOk;
}

int cmd_classify(const Options& opt, std::istream& in, std::ostream& out) {
  std::vector<QMat> span = load_span(opt, in);
  Representation rep{span, standard_gram()};
  if (!rep.metric_skew()) throw std::runtime_error("span is not metric-skew for the split metric");
  RepReport report = classify_type(rep);
  const char* verdict = report.verdict.kind == IndecompKind::Indecomposable ? "indecomposable"
                        : report.verdict.kind == IndecompKind::Decomposable ? "decomposable"
                                                                            : "inconclusive";
  if (opt.json_output) {
    json socle_basis = json::array();
    for (const auto& b : report.socle.basis()) {
      json v = json::array();
      for (int i = 0; i < b.size(); ++i) v.push_back(b[i].to_token());
      socle_basis.push_back(v);
    }
    out << json{{"socle_dimension", report.socle.dim()},
                {"socle_basis", socle_basis},
                {"socle_isotropic", report.socle_isotropic},
                {"verdict", verdict},
                {"certificate", report.verdict.certificate},
                {"type", rep_type_name(report.type)}}
               .dump(2)
        << "\n";
  } else {
    out << "socle dimension " << report.socle.dim() << " ("
        << (report.socle_isotropic ? "isotropic" : "not isotropic") << "), " << verdict
        << ", type " << rep_type_name(report.type) << "\n";
  }
  return kOk;
}

int cmd_kspace(const Options& opt, std::istream& in, std::ostream& out) {
  std::vector<QMat> span = load_span(opt, in);
  KSpace k = curvature_space(span, 7);
  if (opt.json_output) {
    json basis = json::array();
    for (const auto& elem : k.basis) {
      json rs = json::array();
      for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) {
          QMat rij = elem.at(i, j);
          if (rij.is_zero()) continue;
          rs.push_back({{"i", i + 1}, {"j", j + 1}, {"matrix", matrix_json(rij)}});
        }
      basis.push_back(rs);
    }
    out << json{{"dimension", k.dimension}, {"basis", basis}}.dump(2) << "\n";
    return kOk;
  }
  out << "formal curvature space dimension: " << k.dimension << "\n";
  out << "identically zero pairs:";
  bool any = false;
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j) {
      bool zero = true;
      for (const auto& elem : k.basis) {
        if (!elem.at(i, j).is_zero()) {
          zero = false;
          break;
        }
      }
      if (zero && k.dimension > 0) {
        out << " R" << i + 1 << j + 1;
        any = true;
      }
    }
  out << (any ? "\n" : " none\n");
  return kOk;
}

int cmd_berger(const Options& opt, std::istream& in, std::ostream& out) {
  std::vector<QMat> span = load_span(opt, in);
  MatrixSpan h = matrix_span(7, span);
  BergerResult result = berger_test(span, 7);
  if (opt.json_output) {
    out << json{{"span_dimension", h.flat.dim()},
                {"generated_dimension", result.generated.dim()},
                {"is_berger", result.is_berger}}
               .dump(2)
        << "\n";
  } else {
    out << "span dimension " << h.flat.dim() << ", curvature evaluations span "
        << result.generated.dim() << ": " << (result.is_berger ? "Berger" : "not Berger") << "\n";
  }
  return result.is_berger ? kOk : kCheckFailed;
}

int cmd_deform(const Options& opt, std::istream& in, std::ostream& out) {
  LoadedAlgebra loaded = load_metric_algebra(opt, in);
  loaded.m.validate();
  const QSqrt2 a = parse_qsqrt2(opt.a), b = parse_qsqrt2(opt.b), c = parse_qsqrt2(opt.c);
  DeformationReport report = check_deformation_parallel(loaded.m, a, b, c);
  if (opt.json_output) {
    json nonzero = json::array();
    for (int l : report.nonzero_d) nonzero.push_back(l + 1);
    json d6 = json::array();
    for (int i = 0; i < 7; ++i) {
      json row = json::array();
      for (int j = 0; j < 7; ++j) row.push_back(report.d[5].at(i, j).to_token());
      d6.push_back(row);
    }
    out << json{{"nilpotent", report.m_cubed_zero},
                {"orthogonal", report.gram_orthogonal},
                {"parallel", report.parallel},
                {"nonzero_directions", nonzero},
                {"d6", d6},
                {"omega_t0", json::parse(three_form_to_json(report.omega_t0))}}
               .dump(2)
        << "\n";
  } else {
    out << "M^3 = 0: " << (report.m_cubed_zero ? "yes" : "no")
        << "; A orthogonal: " << (report.gram_orthogonal ? "yes" : "no")
        << "; parallel: " << (report.parallel ? "yes" : "no") << "\n";
    out << "nonzero D_l directions:";
    if (report.nonzero_d.empty()) out << " none";
    for (int l : report.nonzero_d) out << " D_" << l + 1;
    out << "\n";
    if (!report.d[5].is_zero()) {
      out << "D_6 columns (e5, e6, e7):\n";
      for (int col : {4, 5, 6}) {
        out << "  D_6(e" << col + 1 << ") =";
        bool first = true;
        for (int row = 0; row < 7; ++row) {
          const LaurentExp& entry = report.d[5].at(row, col);
          if (entry.is_zero()) continue;
          out << (first ? " " : " + ") << "(" << entry.to_token() << ") e" << row + 1;
          first = false;
        }
        if (first) out << " 0";
        out << "\n";
      }
    }
  }
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_example(const Options& opt, std::ostream& out) {
  if (opt.example_name != "g-eps")
    throw std::runtime_error("unknown example '" + opt.example_name + "' (available: g-eps)");
  MetricLieAlgebra m = example_family(parse_qsqrt2(opt.eps));
  out << lie_algebra_to_json(m.lie) << "\n";
  return kOk;
}

int cmd_verify_paper(const Options& opt, std::ostream& out) {
  std::vector<SuiteResult> results = verify_paper_suites();
  bool all_pass = true;
  json jresults = json::array();
  for (const auto& s : results) {
    if (opt.json_output) {
      jresults.push_back({{"suite", s.name}, {"pass", s.pass}, {"detail", s.detail}});
    } else {
      out << (s.pass ? "PASS " : "FAIL ") << s.name << ": " << s.detail << "\n";
    }
    if (!s.pass) {
      all_pass = false;
      break;  // exits nonzero on first failure
    }
  }
  if (opt.json_output) out << json{{"ok", all_pass}, {"suites", jresults}}.dump(2) << "\n";
  return all_pass ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"exact computations with left-invariant split-g2 structures", "g2holo"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", opt.input, "Lie algebra JSON file ('-' for stdin)");
    cmd->add_flag("--json", opt.json_output, "machine-readable output");
  };
  auto add_gram = [&](CLI::App* cmd) {
    cmd->add_option("--gram", opt.gram_path, "Gram matrix override (JSON nested array)");
  };
  auto add_span = [&](CLI::App* cmd) {
    cmd->add_option("input", opt.input, "matrix span JSON file ('-' for stdin)");
    cmd->add_option("--family", opt.family_token,
                    "named family: g2star hI hIII m101 m102 sl2 gl2 co2 d rdiag10");
    cmd->add_flag("--json", opt.json_output, "machine-readable output");
  };

  CLI::App* validate = app.add_subcommand("validate", "check the Jacobi identity");
  add_input(validate);
  CLI::App* metric = app.add_subcommand("metric", "exact signature of the metric");
  add_input(metric);
  add_gram(metric);
  CLI::App* connection = app.add_subcommand("connection", "Levi-Civita connection");
  add_input(connection);
  add_gram(connection);
  CLI::App* curvature = app.add_subcommand("curvature", "curvature tensor");
  add_input(curvature);
  add_gram(curvature);
  CLI::App* holonomy = app.add_subcommand("holonomy", "infinitesimal holonomy algebra");
  add_input(holonomy);
  add_gram(holonomy);
  CLI::App* bianchi = app.add_subcommand("bianchi", "second Bianchi residuals");
  add_input(bianchi);
  add_gram(bianchi);
  CLI::App* classify = app.add_subcommand("classify", "socle, indecomposability, type");
  add_span(classify);
  CLI::App* kspace = app.add_subcommand("kspace", "formal curvature tensors");
  add_span(kspace);
  CLI::App* berger = app.add_subcommand("berger", "Berger criterion");
  add_span(berger);
  CLI::App* deform = app.add_subcommand("deform", "deformed parallel structures");
  add_input(deform);
  add_gram(deform);
  deform->add_option("--a", opt.a, "first deformation parameter");
  deform->add_option("--b", opt.b, "second deformation parameter");
  deform->add_option("--c", opt.c, "third deformation parameter");
  CLI::App* example = app.add_subcommand("example", "emit a built-in example algebra");
  example->add_option("name", opt.example_name, "example name (g-eps)")->required();
  example->add_option("--eps", opt.eps, "family parameter (scalar token)");
  CLI::App* verify = app.add_subcommand("verify-paper", "run every verification suite");
  verify->add_flag("--json", opt.json_output, "machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream ss;
    int code = app.exit(e, ss, ss);
    (code == 0 ? out : err) << ss.str();
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (validate->parsed()) return cmd_validate(opt, in, out);
    if (metric->parsed()) return cmd_metric(opt, in, out);
    if (connection->parsed()) return cmd_connection(opt, in, out);
    if (curvature->parsed()) return cmd_curvature(opt, in, out);
    if (holonomy->parsed()) return cmd_holonomy(opt, in, out);
    if (bianchi->parsed()) return cmd_bianchi(opt, in, out);
    if (classify->parsed()) return cmd_classify(opt, in, out);
    if (kspace->parsed()) return cmd_kspace(opt, in, out);
    if (berger->parsed()) return cmd_berger(opt, in, out);
    if (deform->parsed()) return cmd_deform(opt, in, out);
    if (example->parsed()) return cmd_example(opt, out);
    if (verify->parsed()) return cmd_verify_paper(opt, out);
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  err << "error: no subcommand\n";
  return kInputError;
}

}  // namespace g2holo::cli
