// Command-line front end: numeric theta evaluation, singular-point
// construction and verification, the exact Pfaffian/class/slope certificates,
// and the one-shot reproduction report.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "thetadiv/errors.hpp"
#include "thetadiv/eval.hpp"
#include "thetadiv/graded_class.hpp"
#include "thetadiv/pfaffian.hpp"
#include "thetadiv/prym.hpp"
#include "thetadiv/report.hpp"
#include "thetadiv/singular.hpp"
#include "thetadiv/textio.hpp"

using namespace thetadiv;

namespace {

std::string fmt_c(std::complex<double> v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g %+.15gi", v.real(), v.imag());
  return buf;
}

std::string factored(const Rational& r) {
  auto factor_int = [](long long v) {
    if (v < 0) v = -v;
    if (v <= 3) return std::to_string(v);
    std::string out;
    for (long long p = 2; p * p <= v; ++p) {
      int e = 0;
      while (v % p == 0) {
        v /= p;
        ++e;
      }
      if (e) {
        if (!out.empty()) out += " * ";
        out += std::to_string(p);
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
    if (v > 1) {
      if (!out.empty()) out += " * ";
      out += std::to_string(v);
    }
    return out;
  };
  long long num = (long long)r.num();
  std::string s = (r.sign() < 0 ? "-" : "") + factor_int(num);
  if (!r.is_integer()) s += " / " + factor_int((long long)r.den());
  return s;
}

struct ThetaArgs {
  std::string input;
  std::string char_override;
  double tol = 1e-12;
  int j = 1, k = 1;
  double h = 1e-4;
};

struct Loaded {
  PeriodMatrix tau;
  Eigen::VectorXcd z;
  Characteristic chi;
};

Loaded load_theta_input(const ThetaArgs& a) {
  ParsedInput p = parse_input_file(a.input);
  if (!p.tau) throw Error("input file has no period matrix");
  Characteristic chi = Characteristic::zero(p.tau->genus());
  if (p.chi) chi = *p.chi;
  if (!a.char_override.empty()) chi = Characteristic::parse(a.char_override);
  Eigen::VectorXcd z = p.z ? *p.z : Eigen::VectorXcd::Zero(p.tau->genus());
  return Loaded{*p.tau, z, chi};
}

void print_trace(const std::vector<std::string>& trace) {
  for (auto& line : trace) std::cout << "  " << line << "\n";
}

int run_report_cmd(const std::vector<std::string>& section_names, const std::string& format,
                   const std::string& out_file, uint64_t seed, double tol, bool timings) {
  ReportOptions opt;
  opt.seed = seed;
  opt.tol = tol;
  opt.timings = timings;
  if (section_names.empty()) {
    opt.sections = all_sections();
  } else {
    for (auto& s : section_names) {
      if (s == "theta") opt.sections.insert(Section::Theta);
      else if (s == "sing") opt.sections.insert(Section::Sing);
      else if (s == "pfaff") opt.sections.insert(Section::Pfaff);
      else if (s == "ag") opt.sections.insert(Section::Ag);
      else if (s == "prym") opt.sections.insert(Section::Prym);
      else if (s == "none") { /* empty report */ }
      else throw Error("unknown section '" + s + "'");
    }
  }
  ReportFormat f = ReportFormat::Md;
  if (format == "json") f = ReportFormat::Json;
  else if (format == "csv") f = ReportFormat::Csv;
  else if (format != "md") throw Error("unknown format '" + format + "'");

  auto entries = run_report(opt);
  std::string doc = format_report(entries, f, timings);
  if (out_file.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(out_file);
    if (!out) throw Error("cannot write '" + out_file + "'");
    out << doc;
  }
  return all_pass(entries) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"theta divisor singularities and divisor-class certificates"};
  app.require_subcommand(1);
  int exit_code = 0;

  ThetaArgs ta;

  // ---- theta ----------------------------------------------------------
  auto* theta = app.add_subcommand("theta", "evaluate theta functions with characteristics");
  theta->require_subcommand(1);

  auto* theta_eval = theta->add_subcommand("eval", "value at the input point");
  theta_eval->add_option("--input", ta.input, "structured text input file")->required();
  theta_eval->add_option("--char", ta.char_override, "characteristic, e.g. 10|01");
  theta_eval->add_option("--tol", ta.tol, "absolute truncation tolerance");
  theta_eval->callback([&] {
    Loaded in = load_theta_input(ta);
    auto v = theta_value(in.tau, in.z, in.chi, {ta.tol, 64});
    std::cout << "theta[" << in.chi.str() << "] = " << fmt_c(v) << "\n";
  });

  auto* theta_jet_cmd = theta->add_subcommand("jet", "value, gradient and Hessian");
  theta_jet_cmd->add_option("--input", ta.input)->required();
  theta_jet_cmd->add_option("--char", ta.char_override);
  theta_jet_cmd->add_option("--tol", ta.tol);
  theta_jet_cmd->callback([&] {
    Loaded in = load_theta_input(ta);
    ThetaJet jet = theta_jet(in.tau, in.z, in.chi, {ta.tol, 64});
    std::cout << "value      " << fmt_c(jet.value) << "\n";
    for (int i = 0; i < jet.grad.size(); ++i)
      std::cout << "grad[" << (i + 1) << "]    " << fmt_c(jet.grad(i)) << "\n";
    for (int r = 0; r < jet.hess.rows(); ++r)
      for (int c = r; c < jet.hess.cols(); ++c)
        std::cout << "hess[" << (r + 1) << "," << (c + 1) << "]  " << fmt_c(jet.hess(r, c))
                  << "\n";
    std::cout << "tail bound " << jet.trunc_bound << "\n";
  });

  auto* theta_heat = theta->add_subcommand("heat", "heat-equation residual");
  theta_heat->add_option("--input", ta.input)->required();
  theta_heat->add_option("--char", ta.char_override);
  theta_heat->add_option("--tol", ta.tol);
  theta_heat->add_option("--j", ta.j, "row index, 1-based");
  theta_heat->add_option("--k", ta.k, "column index, 1-based");
  theta_heat->add_option("--step", ta.h, "finite-difference step");
  theta_heat->callback([&] {
    Loaded in = load_theta_input(ta);
    double r = heat_residual(in.tau, in.z, in.chi, ta.j - 1, ta.k - 1, ta.h, {ta.tol, 64});
    std::cout << "heat residual (" << ta.j << "," << ta.k << ") = " << r << "\n";
  });

  // ---- sing -----------------------------------------------------------
  auto* sing = app.add_subcommand("sing", "singular points of theta divisors");
  sing->require_subcommand(1);
  std::string sing_tau1, sing_tau2, sing_input, sing_char, sing_entry = "1,2", sing_fmt = "table";
  double sing_tol = 1e-8;
  uint64_t sing_seed = 1;

  auto* sing_product = sing->add_subcommand("product", "singular point on a product ppav");
  sing_product->add_option("--tau1", sing_tau1, "genus-1 factor input file")->required();
  sing_product->add_option("--tau2", sing_tau2, "second factor input file")->required();
  sing_product->add_option("--tol", ta.tol);
  sing_product->add_option("--format", sing_fmt, "table|records");
  sing_product->callback([&] {
    ParsedInput p1 = parse_input_file(sing_tau1);
    ParsedInput p2 = parse_input_file(sing_tau2);
    if (!p1.tau || !p2.tau) throw Error("both inputs need a period matrix");
    Eigen::VectorXcd z2;
    if (p2.z) {
      z2 = *p2.z;
    } else if (p2.tau->genus() == 1) {
      z2 = Eigen::VectorXcd(1);
      z2(0) = 0.5 * (1.0 + p2.tau->tau()(0, 0));
    } else {
      // odd theta constants vanish identically, so any odd two-torsion
      // point is certified to lie on the theta divisor
      Characteristic odd = enumerate_characteristics(p2.tau->genus(), Parity::Odd)[0];
      z2 = two_torsion_point(*p2.tau, odd);
    }
    SingCandidate c = product_singular_point(*p1.tau, *p2.tau, z2, {ta.tol, 64});
    std::cout << serialize_candidate(c);
    SingReport rep = verify_singular(c, {ta.tol, 64}, sing_tol);
    std::cerr << (sing_fmt == "records" ? format_report_records(rep)
                                        : format_report_table(rep));
  });

  auto* sing_null = sing->add_subcommand("thetanull", "walk a theta constant to zero");
  sing_null->add_option("--input", sing_input, "start period matrix file")->required();
  sing_null->add_option("--char", sing_char, "even characteristic")->required();
  sing_null->add_option("--entry", sing_entry, "deformed entry J,K (1-based)");
  sing_null->add_option("--seed", sing_seed);
  sing_null->add_option("--format", sing_fmt, "table|records");
  sing_null->callback([&] {
    ParsedInput p = parse_input_file(sing_input);
    if (!p.tau) throw Error("input file has no period matrix");
    Characteristic chi = Characteristic::parse(sing_char);
    int j = 0, k = 0;
    if (std::sscanf(sing_entry.c_str(), "%d,%d", &j, &k) != 2)
      throw Error("--entry must look like J,K");
    NewtonOptions opt;
    opt.seed = sing_seed;
    PeriodMatrix tstar = thetanull_path(chi, *p.tau, j - 1, k - 1, opt);
    SingCandidate c = two_torsion_candidate(tstar, chi);
    std::cout << serialize_candidate(c);
    double constant =
        std::abs(theta_value(tstar, Eigen::VectorXcd::Zero(tstar.genus()), chi, {1e-14, 64}));
    std::cerr << "|theta constant| = " << constant << "\n";
    SingReport rep = verify_singular(c, {1e-12, 64}, sing_tol);
    std::cerr << (sing_fmt == "records" ? format_report_records(rep)
                                        : format_report_table(rep));
  });

  auto* sing_verify = sing->add_subcommand("verify", "verify a candidate from a file");
  sing_verify->add_option("--input", sing_input)->required();
  sing_verify->add_option("--tol", ta.tol);
  sing_verify->add_option("--sing-tol", sing_tol);
  sing_verify->add_option("--format", sing_fmt, "table|records");
  sing_verify->callback([&] {
    SingCandidate c = parse_input_file(sing_input).candidate();
    SingReport rep = verify_singular(c, {ta.tol, 64}, sing_tol);
    std::cout << (sing_fmt == "records" ? format_report_records(rep)
                                        : format_report_table(rep));
  });

  // ---- pfaff ----------------------------------------------------------
  auto* pfaff = app.add_subcommand("pfaff", "exact skew linear algebra");
  pfaff->require_subcommand(1);
  int pf_trials = 200;
  uint64_t pf_seed = 7;
  std::string pf_input;

  auto* pfaff_check = pfaff->add_subcommand("check", "rank-4 equivalence property check");
  pfaff_check->add_option("--trials", pf_trials);
  pfaff_check->add_option("--seed", pf_seed);
  pfaff_check->callback([&] {
    Rank4Report rep = rank4_equivalence_check(pf_trials, pf_seed);
    std::cout << rep.counterexamples << " counterexamples in " << rep.tested
              << " tested instances (" << rep.trials << " trials, " << rep.skipped_kernel_dim
              << " skipped for kernel dimension, " << rep.zero_quadric
              << " zero quadrics flagged)\n";
    std::cout << "rank <= 4: " << rep.rank_le4 << ", kernel meets Grassmannian: " << rep.meets
              << "\n";
    for (auto& dump : rep.counterexample_dump) std::cout << dump;
    if (rep.counterexamples > 0) exit_code = 1;
  });

  auto* pfaff_pf = pfaff->add_subcommand("pf", "Pfaffian of a skew matrix from a file");
  pfaff_pf->add_option("--input", pf_input)->required();
  pfaff_pf->callback([&] {
    ParsedInput p = parse_input_file(pf_input);
    if (!p.rational_matrix || p.rational_kind != "skew")
      throw Error("input file needs a 'skew N' block");
    SkewMatrix m(*p.rational_matrix);
    Rational pf = pfaffian(m);
    std::cout << "Pf  = " << pf.str() << "\n";
    std::cout << "det = " << m.mat().det().str() << " (= Pf^2: "
              << (pf * pf == m.mat().det() ? "yes" : "NO") << ")\n";
  });

  auto* pfaff_quadric = pfaff->add_subcommand("quadric", "Pfaffian quadric of a Petri map");
  pfaff_quadric->add_option("--input", pf_input)->required();
  pfaff_quadric->callback([&] {
    ParsedInput p = parse_input_file(pf_input);
    if (!p.rational_matrix || p.rational_kind != "petri")
      throw Error("input file needs a 'petri R C' block");
    PetriMap mu{*p.rational_matrix};
    QuadraticForm q = pfaffian_quadric(mu);
    std::cout << "gram =\n" << q.gram.str();
    std::cout << "rank(Q) = " << q.rank() << " (rank(mu) = " << mu.m.rank() << ")\n";
    std::cout << "kernel meets Grassmannian: "
              << (kernel_meets_grassmannian(mu) ? "yes" : "no") << "\n";
  });

  // ---- classes --------------------------------------------------------
  auto* classes = app.add_subcommand("classes", "exact divisor class tables");
  classes->require_subcommand(1);
  int genus = 4;

  auto* classes_ag = classes->add_subcommand("ag", "Hessian-degeneracy classes on A_g");
  classes_ag->add_option("--genus", genus, "genus, >= 4")->required();
  classes_ag->callback([&] {
    ModularWeights mw = modular_weights(genus);
    BaseClass n0h = class_n0_hessian(genus);
    BaseClass tnh = class_thetanull_hessian(genus);
    BaseClass h = class_nonordinary(genus);
    auto row = [](const char* name, const Rational& v) {
      std::printf("  %-34s %-18s = %s\n", name, v.str().c_str(), factored(v).c_str());
    };
    std::printf("genus %d\n", genus);
    row("[N0] lambda1 coefficient", mw.n0_lambda_coeff);
    row("weight of even-constant product", mw.weight_theta_product);
    row("weight of residual form", mw.weight_n0prime);
    row("[N0^(g-1)] lambda1^2 coefficient", n0h.coeff(2));
    row("[thetanull^(g-1)] coefficient", tnh.coeff(2));
    row("[H] coefficient", h.coeff(2));
    if (genus == 4) {
      Genus4Forms f = genus4_complete_intersection();
      row("det-Hessian form weight", f.weight_det_hessian);
      row("complete intersection class", f.intersection_class);
    }
  });

  auto* classes_r6 = classes->add_subcommand("r6", "the fixed divisor-class ledger");
  classes_r6->callback([&] {
    for (auto& [name, entry] : known_classes()) {
      std::printf("  %-8s (%s)  %s\n", name.c_str(), basis_name(entry.cls.basis).c_str(),
                  entry.cls.str().c_str());
      std::printf("           %s\n", entry.description.c_str());
    }
  });

  // ---- certificates ---------------------------------------------------
  auto* push = app.add_subcommand("push", "pushforward solvers");
  push->require_subcommand(1);
  auto* push_prym = push->add_subcommand("prym", "pushforwards along the degree-27 Prym map");
  push_prym->callback([&] {
    auto p = prym_pushforward();
    print_trace(p.trace);
  });

  auto* slope_cmd = app.add_subcommand("slope", "slope certificates");
  slope_cmd->require_subcommand(1);
  auto* slope_a5 = slope_cmd->add_subcommand("a5", "minimal slope and rigidity");
  slope_a5->callback([&] {
    auto cert = slope_certificate();
    print_trace(cert.trace);
    std::cout << "  slope = " << cert.n0prime_slope.str() << "\n";
  });

  auto* testcurve = app.add_subcommand("testcurve", "pairings against the certifying pencil");
  std::string curve_name = "R";
  testcurve->add_option("name", curve_name, "pencil name (only R)");
  testcurve->callback([&] {
    if (curve_name != "R") throw Error("unknown test curve '" + curve_name + "'");
    TestCurve R;
    std::printf("  R . lambda     = %s\n", R.dot_lambda.str().c_str());
    std::printf("  R . delta0'    = %s\n", R.dot_delta0_prime.str().c_str());
    std::printf("  R . delta0''   = %s\n", R.dot_delta0_dblprime.str().c_str());
    std::printf("  R . delta0ram  = %s\n", R.dot_delta0_ram.str().c_str());
    std::printf("  R . Qtilde     = %s\n", testcurve_pairing(known("Qtilde")).str().c_str());
    std::printf("  R . Utilde     = %s\n", testcurve_pairing(known("Utilde")).str().c_str());
    std::printf("  R . P*(N0')    = %s\n",
                testcurve_pairing(prym_pullback()(known("N0prime"))).str().c_str());
  });

  auto* taut = app.add_subcommand("taut", "tautological pushforward certificates");
  taut->require_subcommand(1);
  auto* taut_vx = taut->add_subcommand("vx", "conic degeneracy class equals 5 [Z]");
  taut_vx->callback([&] {
    auto cert = taut_class_certificate();
    print_trace(cert.trace);
  });

  auto* mult = app.add_subcommand("mult", "multiplicity computations");
  mult->require_subcommand(1);
  auto* mult_j5 = mult->add_subcommand("j5", "multiplicity along the genus-5 Jacobians");
  mult_j5->callback([&] {
    auto m = jacobian_multiplicity_chain();
    std::printf("  chi(Sym^4 C)        = %lld\n", m.chi_sym4);
    std::printf("  chi(W^1_4)          = %lld\n", m.chi_w14);
    std::printf("  chi(C^1_4)          = %lld\n", m.chi_c14);
    std::printf("  chi(W_4)            = %lld\n", m.chi_w4);
    std::printf("  chi(theta generic)  = %lld\n", m.chi_theta_generic);
    std::printf("  nodes               = %lld\n", m.nodes);
    std::printf("  multiplicity        = %lld\n", m.jacobian_multiplicity);
    std::printf("  boundary coefficient= %lld\n", m.boundary_coefficient);
  });

  // ---- report ---------------------------------------------------------
  auto* report = app.add_subcommand("report", "run every certificate, one PASS/FAIL row each");
  std::vector<std::string> section_names;
  std::string rep_format = "md", rep_out;
  uint64_t rep_seed = 7;
  double rep_tol = 1e-12;
  bool rep_timings = false;
  report->add_option("--sections", section_names, "subset of theta,sing,pfaff,ag,prym")
      ->delimiter(',');
  report->add_option("--format", rep_format, "md|json|csv");
  report->add_option("--out", rep_out, "write the document to a file");
  report->add_option("--seed", rep_seed);
  report->add_option("--tol", rep_tol);
  report->add_flag("--timings", rep_timings, "include per-entry runtimes (not byte-stable)");
  report->callback([&] {
    exit_code = run_report_cmd(section_names, rep_format, rep_out, rep_seed, rep_tol,
                               rep_timings);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
