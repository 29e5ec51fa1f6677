// Command-line front end: one subcommand per checkable statement, JSON
// reports on stdout (17-significant-digit numbers, stable field order, so
// identical inputs produce byte-identical reports), exit code 0 when the
// checked claim holds, 1 when it is violated, 2 on usage or input errors.

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "blocknorm/block_matrix.hpp"
#include "blocknorm/counterexamples.hpp"
#include "blocknorm/errors.hpp"
#include "blocknorm/inequalities.hpp"
#include "blocknorm/matrix_io.hpp"
#include "blocknorm/norms.hpp"
#include "blocknorm/sampling.hpp"
#include "blocknorm/spectral.hpp"
#include "blocknorm/tolerances.hpp"

namespace {

using namespace blocknorm;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string input;
  double tol = -1.0;  // negative: per-operation default
  std::string format = "json";
};

double effective_tol(const CommonOpts& opts, double fallback) {
  return opts.tol >= 0.0 ? opts.tol : fallback;
}

// --- small emit helpers -----------------------------------------------------

void write_double_list(JsonWriter& w, const std::vector<double>& values) {
  w.begin_array(true);
  for (double v : values) w.num(v);
  w.end_array();
}

void write_bool_list(JsonWriter& w, const std::vector<bool>& values) {
  w.begin_array(true);
  for (bool v : values) w.boolean(v);
  w.end_array();
}

void write_block_matrix(JsonWriter& w, const BlockMatrix& m) {
  w.begin_object();
  w.key("n").uinteger(m.n());
  w.key("A");
  write_matrix_entries(w, m.a());
  w.key("X");
  write_matrix_entries(w, m.x());
  w.key("B");
  write_matrix_entries(w, m.b());
  w.end_object();
}

void write_tol_option(JsonWriter& w, const CommonOpts& opts) {
  w.key("tol");
  if (opts.tol >= 0.0) {
    w.num(opts.tol);
  } else {
    w.null();
  }
}

void write_optional_index(JsonWriter& w, const std::optional<std::size_t>& k) {
  if (k) {
    w.uinteger(*k);
  } else {
    w.null();
  }
}

std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    out += " ";
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += " " + row[i] + std::string(width[i] - row[i].size(), ' ');
    }
    out += "\n";
  }
  return out;
}

void print_margin_table(std::ostream& os, const char* lhs_name, const char* rhs_name,
                        const KyFanProfile& lhs, const KyFanProfile& rhs,
                        const std::vector<double>& margins) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"k", lhs_name, rhs_name, "margin"});
  for (std::size_t k = 0; k < margins.size(); ++k) {
    rows.push_back({std::to_string(k + 1), format_number(lhs.cumsum[k]),
                    format_number(rhs.cumsum[k]), format_number(margins[k])});
  }
  os << text_table(rows);
}

// --- check -------------------------------------------------------------------

int run_check(const CommonOpts& opts) {
  const BlockMatrix m = require_block(parse_matrix_file(opts.input));
  const auto eigs = herm_eig(m.assemble()).eigenvalues;
  const InequalityReport report = check_main_inequality(m, opts.tol);
  if (opts.format == "json") {
    JsonWriter w;
    w.begin_object();
    w.key("command").str("check");
    w.key("options").begin_object(true);
    w.key("input").str(opts.input);
    write_tol_option(w, opts);
    w.end_object();
    w.key("input_digest").str(digest(m.assemble()));
    w.key("block_size").uinteger(m.n());
    w.key("tolerance").num(report.tol);
    w.key("hypothesis").str(to_string(report.hypothesis));
    w.key("eigenvalues");
    write_double_list(w, eigs);
    w.key("m_singular_values");
    write_double_list(w, report.m_profile.sigma);
    w.key("sum_singular_values");
    write_double_list(w, report.sum_profile.sigma);
    w.key("margins");
    write_double_list(w, report.margins);
    w.key("first_violation");
    write_optional_index(w, report.first_violation);
    w.key("holds").boolean(report.holds);
    w.key("verdict").str(report.holds ? "holds" : "violated");
    w.end_object();
    std::cout << w.take();
  } else {
    std::cout << "command:         check\n";
    std::cout << "input:           " << opts.input << "\n";
    std::cout << "input_digest:    " << digest(m.assemble()) << "\n";
    std::cout << "tolerance:       " << format_number(report.tol) << "\n";
    std::cout << "hypothesis:      " << to_string(report.hypothesis) << "\n";
    print_margin_table(std::cout, "||M||_k", "||(A+B)#0||_k", report.m_profile,
                       report.sum_profile, report.margins);
    std::cout << "verdict:         " << (report.holds ? "holds" : "violated") << "\n";
  }
  return report.holds ? kExitOk : kExitViolated;
}

// --- decompose ----------------------------------------------------------------

int run_decompose(const CommonOpts& opts, const std::string& mode_name) {
  const PartMode mode = mode_name == "re" ? PartMode::re : PartMode::im;
  const BlockMatrix m = require_block(parse_matrix_file(opts.input));
  const DecompositionResult d = decompose_half_parts(m, mode);
  const double scale = std::max(1.0, frobenius_norm(m.assemble()));
  const double recon_error = frobenius_norm(reconstruct(d) - m.assemble());
  const double unitarity_u =
      frobenius_norm(d.u.adjoint() * d.u - ComplexMatrix::identity(2 * m.n()));
  const double unitarity_v =
      frobenius_norm(d.v.adjoint() * d.v - ComplexMatrix::identity(2 * m.n()));
  const double tol_eff = effective_tol(opts, tol::dominance);
  const bool ok =
      recon_error <= tol_eff * scale && unitarity_u <= tol_eff && unitarity_v <= tol_eff;

  if (opts.format == "json") {
    JsonWriter w;
    w.begin_object();
    w.key("command").str("decompose");
    w.key("options").begin_object(true);
    w.key("input").str(opts.input);
    w.key("mode").str(to_string(mode));
    write_tol_option(w, opts);
    w.end_object();
    w.key("input_digest").str(digest(m.assemble()));
    w.key("block_size").uinteger(m.n());
    w.key("tolerance").num(tol_eff);
    w.key("top");
    write_matrix_entries(w, d.top);
    w.key("bottom");
    write_matrix_entries(w, d.bottom);
    w.key("u");
    write_matrix_entries(w, d.u);
    w.key("v");
    write_matrix_entries(w, d.v);
    w.key("unitarity_error_u").num(unitarity_u);
    w.key("unitarity_error_v").num(unitarity_v);
    w.key("reconstruction_error").num(recon_error);
    w.key("reconstruction_scale").num(scale);
    w.key("verdict").str(ok ? "ok" : "failed");
    w.end_object();
    std::cout << w.take();
  } else {
    std::cout << "command:               decompose --mode " << to_string(mode) << "\n";
    std::cout << "input:                 " << opts.input << "\n";
    std::cout << "reconstruction_error:  " << format_number(recon_error) << "\n";
    std::cout << "unitarity_error_u:     " << format_number(unitarity_u) << "\n";
    std::cout << "unitarity_error_v:     " << format_number(unitarity_v) << "\n";
    std::cout << "verdict:               " << (ok ? "ok" : "failed") << "\n";
  }
  return ok ? kExitOk : kExitViolated;
}

// --- norms ---------------------------------------------------------------------

int run_norms(const CommonOpts& opts, bool kyfan) {
  const ComplexMatrix m = require_full(parse_matrix_file(opts.input));
  const KyFanProfile profile = ky_fan_profile(m);
  const double frob = frobenius_norm(m);
  if (opts.format == "json") {
    JsonWriter w;
    w.begin_object();
    w.key("command").str("norms");
    w.key("options").begin_object(true);
    w.key("input").str(opts.input);
    w.key("kyfan").boolean(kyfan);
    w.end_object();
    w.key("input_digest").str(digest(m));
    w.key("rows").uinteger(m.rows());
    w.key("cols").uinteger(m.cols());
    w.key("spectral_norm").num(profile.spectral());
    w.key("frobenius_norm").num(frob);
    w.key("trace_norm").num(profile.trace_norm());
    if (kyfan) {
      w.key("ky_fan_profile").begin_object();
      w.key("sigma");
      write_double_list(w, profile.sigma);
      w.key("cumsum");
      write_double_list(w, profile.cumsum);
      w.end_object();
    }
    w.key("verdict").str("ok");
    w.end_object();
    std::cout << w.take();
  } else {
    std::cout << "command:         norms\n";
    std::cout << "input:           " << opts.input << "\n";
    std::cout << "spectral_norm:   " << format_number(profile.spectral()) << "\n";
    std::cout << "frobenius_norm:  " << format_number(frob) << "\n";
    std::cout << "trace_norm:      " << format_number(profile.trace_norm()) << "\n";
    if (kyfan) {
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"k", "sigma_k", "ky_fan_k"});
      for (std::size_t k = 0; k < profile.size(); ++k) {
        rows.push_back({std::to_string(k + 1), format_number(profile.sigma[k]),
                        format_number(profile.cumsum[k])});
      }
      std::cout << text_table(rows);
    }
    std::cout << "verdict:         ok\n";
  }
  return kExitOk;
}

// --- facts ----------------------------------------------------------------------

int run_facts(const CommonOpts& opts) {
  const BlockMatrix m = require_block(parse_matrix_file(opts.input));
  const LoewnerBoundsReport report = check_loewner_bounds(m, effective_tol(opts, tol::psd));
  const char* names[4] = {"sum_plus_2im", "sum_minus_2im", "sum_plus_2re", "sum_minus_2re"};
  if (opts.format == "json") {
    JsonWriter w;
    w.begin_object();
    w.key("command").str("facts");
    w.key("options").begin_object(true);
    w.key("input").str(opts.input);
    write_tol_option(w, opts);
    w.end_object();
    w.key("input_digest").str(digest(m.assemble()));
    w.key("block_size").uinteger(m.n());
    w.key("bounds").begin_array();
    for (int i = 0; i < 4; ++i) {
      w.begin_object(true);
      w.key("name").str(names[i]);
      w.key("holds").boolean(report.holds[i]);
      w.key("lambda_min").num(report.lambda_min[i]);
      w.end_object();
    }
    w.end_array();
    w.key("all_hold").boolean(report.all());
    w.key("verdict").str(report.all() ? "holds" : "violated");
    w.end_object();
    std::cout << w.take();
  } else {
    std::cout << "command:  facts\n";
    std::cout << "input:    " << opts.input << "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"bound", "holds", "lambda_min"});
    for (int i = 0; i < 4; ++i) {
      rows.push_back({names[i], report.holds[i] ? "true" : "false",
                      format_number(report.lambda_min[i])});
    }
    std::cout << text_table(rows);
    std::cout << "verdict:  " << (report.all() ? "holds" : "violated") << "\n";
  }
  return report.all() ? kExitOk : kExitViolated;
}

// --- reduce ---------------------------------------------------------------------

int run_reduce(const CommonOpts& opts) {
  const BlockMatrix m = require_block(parse_matrix_file(opts.input));
  const double tol_eff = effective_tol(opts, tol::classify);
  const bool a_side = commutes(m.x().adjoint(), m.a(), tol_eff);
  const bool b_side = commutes(m.x(), m.b(), tol_eff);
  const auto cert = reduce_offdiag_to_hermitian(m, tol_eff);

  double congruence_error = 0.0;
  double offdiag_residual = 0.0;
  bool valid = false;
  if (cert) {
    congruence_error = frobenius_norm(cert->w.adjoint() * m.assemble() * cert->w -
                                      cert->reduced.assemble());
    offdiag_residual = hermitian_residual(cert->reduced.x());
    const double scale = std::max(1.0, frobenius_norm(m.assemble()));
    valid = congruence_error <= tol_eff * scale && offdiag_residual <= tol_eff;
  }

  if (opts.format == "json") {
    JsonWriter w;
    w.begin_object();
    w.key("command").str("reduce");
    w.key("options").begin_object(true);
    w.key("input").str(opts.input);
    write_tol_option(w, opts);
    w.end_object();
    w.key("input_digest").str(digest(m.assemble()));
    w.key("block_size").uinteger(m.n());
    w.key("commutes_xadj_a").boolean(a_side);
    w.key("commutes_x_b").boolean(b_side);
    w.key("certificate");
    if (cert) {
      w.begin_object();
      w.key("w");
      write_matrix_entries(w, cert->w);
      w.key("reduced_x");
      write_matrix_entries(w, cert->reduced.x());
      w.key("congruence_error").num(congruence_error);
      w.key("offdiag_hermitian_residual").num(offdiag_residual);
      w.key("valid").boolean(valid);
      w.end_object();
    } else {
      w.null();
    }
    w.key("verdict").str(cert ? (valid ? "certificate" : "invalid-certificate") : "absent");
    w.end_object();
    std::cout << w.take();
  } else {
    std::cout << "command:           reduce\n";
    std::cout << "input:             " << opts.input << "\n";
    std::cout << "commutes_xadj_a:   " << (a_side ? "true" : "false") << "\n";
    std::cout << "commutes_x_b:      " << (b_side ? "true" : "false") << "\n";
    if (cert) {
      std::cout << "congruence_error:  " << format_number(congruence_error) << "\n";
      std::cout << "offdiag_residual:  " << format_number(offdiag_residual) << "\n";
    }
    std::cout << "verdict:           "
              << (cert ? (valid ? "certificate" : "invalid-certificate") : "absent") << "\n";
  }
  return cert && valid ? kExitOk : kExitViolated;
}

// --- bound2 ---------------------------------------------------------------------

int run_bound2(const CommonOpts& opts) {
  const BlockMatrix m = require_block(parse_matrix_file(opts.input));
  const FactorTwoReport report = factor_two_bound(m, opts.tol);
  if (opts.format == "json") {
    JsonWriter w;
    w.begin_object();
    w.key("command").str("bound2");
    w.key("options").begin_object(true);
    w.key("input").str(opts.input);
    write_tol_option(w, opts);
    w.end_object();
    w.key("input_digest").str(digest(m.assemble()));
    w.key("block_size").uinteger(m.n());
    w.key("tolerance").num(report.tol);
    w.key("margins");
    write_double_list(w, report.margins);
    w.key("min_margin").num(report.min_margin);
    w.key("lambda_min_m1").num(report.lambda_min_m1);
    w.key("lambda_min_m2").num(report.lambda_min_m2);
    w.key("strict").boolean(report.strict);
    w.key("first_violation");
    write_optional_index(w, report.first_violation);
    w.key("holds").boolean(report.holds);
    w.key("verdict").str(report.holds ? "holds" : "violated");
    w.end_object();
    std::cout << w.take();
  } else {
    std::cout << "command:     bound2\n";
    std::cout << "input:       " << opts.input << "\n";
    std::cout << "min_margin:  " << format_number(report.min_margin) << "\n";
    std::cout << "strict:      " << (report.strict ? "true" : "false") << "\n";
    std::cout << "verdict:     " << (report.holds ? "holds" : "violated") << "\n";
  }
  return report.holds ? kExitOk : kExitViolated;
}

// --- gen-family -----------------------------------------------------------------

int run_gen_family(const CommonOpts& opts, const std::vector<double>& a,
                   const std::vector<double>& b, const std::vector<double>& d, bool verify) {
  FamilySpec spec;
  spec.a = a;
  spec.b = b;
  spec.d_diag.assign(d.begin(), d.end());
  const BlockMatrix family = build_family(spec);
  const QuadraticRoots roots = family_eigenvalues(spec);

  std::optional<ViolationReport> violation;
  if (verify) violation = verify_violation(spec);

  if (opts.format == "json") {
    JsonWriter w;
    w.begin_object();
    w.key("command").str("gen-family");
    w.key("options").begin_object(true);
    w.key("a");
    write_double_list(w, a);
    w.key("b");
    write_double_list(w, b);
    w.key("d");
    write_double_list(w, d);
    w.key("verify").boolean(verify);
    w.end_object();
    w.key("n").uinteger(spec.n());
    w.key("d_abs_squared");
    write_double_list(w, spec.d());
    w.key("sum_ok");
    write_bool_list(w, spec.sum_ok());
    w.key("prod_ok");
    write_bool_list(w, spec.prod_ok());
    w.key("root_pairs").begin_array();
    for (const auto& [x, y] : roots.pairs) {
      w.begin_object(true);
      w.key("x").num(x);
      w.key("y").num(y);
      w.end_object();
    }
    w.end_array();
    w.key("roots");
    write_double_list(w, roots.sorted());
    w.key("matrix");
    write_block_matrix(w, family);
    if (violation) {
      w.key("n_psd").boolean(violation->n_psd);
      w.key("neg_n_psd").boolean(violation->neg_n_psd);
      w.key("margins");
      write_double_list(w, violation->margins);
      w.key("confirmed").boolean(violation->confirmed);
    }
    w.key("verdict").str(violation ? (violation->confirmed ? "confirmed" : "not-confirmed")
                                   : "generated");
    w.end_object();
    std::cout << w.take();
  } else {
    std::cout << "command:  gen-family\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"i", "a_i", "b_i", "d_i", "x_i", "y_i"});
    for (std::size_t i = 0; i < spec.n(); ++i) {
      rows.push_back({std::to_string(i), format_number(a[i]), format_number(b[i]),
                      format_number(d[i]), format_number(roots.pairs[i].first),
                      format_number(roots.pairs[i].second)});
    }
    std::cout << text_table(rows);
    if (violation) {
      std::cout << "n_psd:      " << (violation->n_psd ? "true" : "false") << "\n";
      std::cout << "neg_n_psd:  " << (violation->neg_n_psd ? "true" : "false") << "\n";
      std::cout << "confirmed:  " << (violation->confirmed ? "true" : "false") << "\n";
    }
    std::cout << "verdict:    "
              << (violation ? (violation->confirmed ? "confirmed" : "not-confirmed")
                            : "generated")
              << "\n";
  }
  if (!violation) return kExitOk;
  return violation->confirmed ? kExitOk : kExitViolated;
}

// --- examples -------------------------------------------------------------------

int run_examples(const CommonOpts& opts, const std::string& name, double y, bool check) {
  const BlockMatrix m = name == "T" ? counterexample_T() : counterexample_Ny(y);
  const auto eigs = herm_eig(m.assemble()).eigenvalues;
  const PsdCheck psd = is_psd(m.assemble());

  std::optional<InequalityReport> report;
  if (check) report = check_main_inequality(m, opts.tol);

  if (opts.format == "json") {
    JsonWriter w;
    w.begin_object();
    w.key("command").str("examples");
    w.key("options").begin_object(true);
    w.key("name").str(name);
    if (name == "Ny") w.key("y").num(y);
    w.key("check").boolean(check);
    write_tol_option(w, opts);
    w.end_object();
    w.key("matrix");
    write_block_matrix(w, m);
    w.key("input_digest").str(digest(m.assemble()));
    w.key("eigenvalues");
    write_double_list(w, eigs);
    w.key("is_psd").boolean(psd.psd);
    w.key("lambda_min").num(psd.lambda_min);
    if (report) {
      w.key("check").begin_object();
      w.key("tolerance").num(report->tol);
      w.key("hypothesis").str(to_string(report->hypothesis));
      w.key("m_singular_values");
      write_double_list(w, report->m_profile.sigma);
      w.key("sum_singular_values");
      write_double_list(w, report->sum_profile.sigma);
      w.key("margins");
      write_double_list(w, report->margins);
      w.key("first_violation");
      write_optional_index(w, report->first_violation);
      w.key("holds").boolean(report->holds);
      w.end_object();
    }
    w.key("verdict").str(report ? (report->holds ? "holds" : "violated") : "ok");
    w.end_object();
    std::cout << w.take();
  } else {
    std::cout << "command:      examples --name " << name << "\n";
    std::cout << "eigenvalues: ";
    for (double e : eigs) std::cout << " " << format_number(e);
    std::cout << "\n";
    std::cout << "is_psd:       " << (psd.psd ? "true" : "false") << "\n";
    if (report) {
      print_margin_table(std::cout, "||M||_k", "||(A+B)#0||_k", report->m_profile,
                         report->sum_profile, report->margins);
    }
    std::cout << "verdict:      " << (report ? (report->holds ? "holds" : "violated") : "ok")
              << "\n";
  }
  if (!report) return kExitOk;
  return report->holds ? kExitOk : kExitViolated;
}

// --- search ---------------------------------------------------------------------

int run_search(const CommonOpts& opts, std::size_t dim, std::size_t trials,
               std::uint64_t seed) {
  const SearchResult result = search_psd_violations(dim, trials, seed);
  if (opts.format == "json") {
    JsonWriter w;
    w.begin_object();
    w.key("command").str("search");
    w.key("options").begin_object(true);
    w.key("dim").uinteger(dim);
    w.key("trials").uinteger(trials);
    w.key("seed").uinteger(seed);
    write_tol_option(w, opts);
    w.end_object();
    w.key("hit_count").uinteger(result.hits.size());
    w.key("hits").begin_array();
    for (const auto& hit : result.hits) {
      w.begin_object();
      w.key("origin").str(hit.from_corpus ? "corpus" : "trial");
      w.key("index").uinteger(hit.index);
      w.key("first_violation").uinteger(hit.first_violation);
      w.key("margins");
      write_double_list(w, hit.margins);
      w.key("matrix");
      write_block_matrix(w, hit.matrix);
      w.end_object();
    }
    w.end_array();
    w.key("verdict").str("completed");
    w.end_object();
    std::cout << w.take();
  } else {
    std::cout << "command:    search --dim " << dim << " --trials " << trials << " --seed "
              << seed << "\n";
    std::cout << "hit_count:  " << result.hits.size() << "\n";
    for (const auto& hit : result.hits) {
      std::cout << "  hit at " << (hit.from_corpus ? "corpus " : "trial ") << hit.index
                << ", first violating k = " << hit.first_violation << "\n";
    }
    std::cout << "verdict:    completed\n";
  }
  return kExitOk;
}

// --- det-shortcut ----------------------------------------------------------------

int run_det_shortcut(const CommonOpts& opts) {
  const ComplexMatrix m = require_full(parse_matrix_file(opts.input));
  const double tol_eff = effective_tol(opts, tol::classify);
  const Complex shortcut = det_commuting_blocks(m, tol_eff);
  const Complex direct = det(m);
  const double abs_error = std::abs(shortcut - direct);
  const double scale = std::max(1.0, std::abs(direct));
  const bool match = abs_error <= tol_eff * scale;

  if (opts.format == "json") {
    JsonWriter w;
    w.begin_object();
    w.key("command").str("det-shortcut");
    w.key("options").begin_object(true);
    w.key("input").str(opts.input);
    write_tol_option(w, opts);
    w.end_object();
    w.key("input_digest").str(digest(m));
    w.key("block_size").uinteger(m.rows() / 2);
    w.key("det_shortcut");
    write_complex(w, shortcut);
    w.key("det_direct");
    write_complex(w, direct);
    w.key("abs_error").num(abs_error);
    w.key("scale").num(scale);
    w.key("match").boolean(match);
    w.key("verdict").str(match ? "match" : "mismatch");
    w.end_object();
    std::cout << w.take();
  } else {
    std::cout << "command:       det-shortcut\n";
    std::cout << "det_shortcut:  " << format_number(shortcut.real()) << " + "
              << format_number(shortcut.imag()) << "i\n";
    std::cout << "det_direct:    " << format_number(direct.real()) << " + "
              << format_number(direct.imag()) << "i\n";
    std::cout << "abs_error:     " << format_number(abs_error) << "\n";
    std::cout << "verdict:       " << (match ? "match" : "mismatch") << "\n";
  }
  return match ? kExitOk : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetric-norm inequality toolkit for Hermitian block matrices"};
  app.require_subcommand(1);

  CommonOpts opts;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input) cmd->add_option("--input", opts.input, "matrix file (JSON)")->required();
    cmd->add_option("--tol", opts.tol, "tolerance override (default per operation)");
    cmd->add_option("--format", opts.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* check_cmd = app.add_subcommand("check", "norm inequality ||M|| <= ||A+B||");
  add_common(check_cmd, true);

  std::string mode = "im";
  auto* decompose_cmd = app.add_subcommand("decompose", "two-summand PSD decomposition");
  add_common(decompose_cmd, true);
  decompose_cmd->add_option("--mode", mode, "re or im")->check(CLI::IsMember({"re", "im"}));

  bool kyfan = false;
  auto* norms_cmd = app.add_subcommand("norms", "spectral/Frobenius/trace norms");
  add_common(norms_cmd, true);
  norms_cmd->add_flag("--kyfan", kyfan, "include the full Ky Fan profile");

  auto* facts_cmd = app.add_subcommand("facts", "Loewner bounds behind the half parts");
  add_common(facts_cmd, true);

  auto* reduce_cmd = app.add_subcommand("reduce", "congruence to Hermitian off-diagonal block");
  add_common(reduce_cmd, true);

  auto* bound2_cmd = app.add_subcommand("bound2", "factor-two norm bound");
  add_common(bound2_cmd, true);

  std::vector<double> fam_a, fam_b, fam_d;
  bool verify = false;
  auto* family_cmd = app.add_subcommand("gen-family", "diagonal family with closed-form spectrum");
  add_common(family_cmd, false);
  family_cmd->add_option("--a", fam_a, "diagonal of A (nonnegative)")
      ->required()
      ->delimiter(',');
  family_cmd->add_option("--b", fam_b, "diagonal of B (negative)")->required()->delimiter(',');
  family_cmd->add_option("--d", fam_d, "diagonal of D")->required()->delimiter(',');
  family_cmd->add_flag("--verify", verify, "confirm the predicted violation");

  std::string example_name;
  double example_y = 0.5;
  bool example_check = false;
  auto* examples_cmd = app.add_subcommand("examples", "built-in matrices T and Ny");
  add_common(examples_cmd, false);
  examples_cmd->add_option("--name", example_name, "T or Ny")
      ->required()
      ->check(CLI::IsMember({"T", "Ny"}));
  examples_cmd->add_option("--y", example_y, "parameter of Ny (default 0.5)");
  examples_cmd->add_flag("--check", example_check, "also run the norm inequality check");

  std::size_t dim = 2;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  auto* search_cmd = app.add_subcommand("search", "randomized PSD violation search");
  add_common(search_cmd, false);
  search_cmd->add_option("--dim", dim, "block size n (matrices are 2n x 2n)");
  search_cmd->add_option("--trials", trials, "number of sampled matrices");
  search_cmd->add_option("--seed", seed, "stream seed");

  auto* det_cmd = app.add_subcommand("det-shortcut", "block determinant via AD - CB");
  add_common(det_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return run_check(opts);
    if (decompose_cmd->parsed()) return run_decompose(opts, mode);
    if (norms_cmd->parsed()) return run_norms(opts, kyfan);
    if (facts_cmd->parsed()) return run_facts(opts);
    if (reduce_cmd->parsed()) return run_reduce(opts);
    if (bound2_cmd->parsed()) return run_bound2(opts);
    if (family_cmd->parsed()) return run_gen_family(opts, fam_a, fam_b, fam_d, verify);
    if (examples_cmd->parsed()) return run_examples(opts, example_name, example_y, example_check);
    if (search_cmd->parsed()) return run_search(opts, dim, trials, seed);
    if (det_cmd->parsed()) return run_det_shortcut(opts);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
