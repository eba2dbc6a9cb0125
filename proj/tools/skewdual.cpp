// skewdual: construct skew-polynomial codes, compute their duals, and run the
// verification suites. JSON on stdout; exit 0 ok, 2 failed check, 1 error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "skewdual/basis.hpp"
#include "skewdual/constacyclic.hpp"
#include "skewdual/convolutional.hpp"
#include "skewdual/kernels.hpp"
#include "skewdual/skewrs.hpp"
#include "skewdual/verify.hpp"

using json = nlohmann::ordered_json;
using namespace skewdual;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCheckFailed = 2;

std::vector<std::uint32_t> parse_list(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw Error(ErrorKind::InvalidArgument, "bad integer '" + item + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

std::vector<Felt> parse_felts(const Field& f, const std::string& text) {
  std::vector<Felt> out;
  for (std::uint32_t v : parse_list(text)) out.push_back(f.element(v));
  return out;
}

// Rows separated by ';', entries by ','.
Mat parse_matrix(const Field& f, const std::string& text) {
  std::vector<std::vector<std::uint32_t>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) rows.push_back(parse_list(row));
  return Mat::from_values(f, rows);
}

json felts_json(std::span<const Felt> xs) {
  json out = json::array();
  for (Felt x : xs) out.push_back(x.value);
  return out;
}

json mat_json(const Mat& m) { return m.values(); }
json polymat_json(const PolyMat& m) { return m.values(); }

json report_json(const CheckReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"input", f.input}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  return {{"checked", r.checked}, {"failures", failures}};
}

json field_json(const Field& f) {
  json modulus = json::array();
  for (unsigned d : f.modulus()) modulus.push_back(d);
  return {{"p", f.p()}, {"m", f.m()}, {"q", f.q()}, {"modulus", modulus}, {"primitive", f.primitive().value}};
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, j.dump());
  }
}

void emit(const json& doc, const std::string& format) {
  if (format == "table") {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(doc, "", rows);
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  } else {
    std::cout << doc.dump(2) << "\n";
  }
}

struct FieldArgs {
  unsigned p = 2;
  unsigned m = 1;
  std::string modulus;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p", p, "characteristic")->required();
    cmd->add_option("--m", m, "extension degree")->required();
    cmd->add_option("--modulus", modulus, "modulus digits, ascending");
  }
  Field build() const {
    std::optional<std::vector<unsigned>> mod;
    if (!modulus.empty()) {
      std::vector<unsigned> digits;
      for (std::uint32_t v : parse_list(modulus)) digits.push_back(v);
      mod = digits;
    }
    return Field::create(p, m, mod);
  }
};

SkewPoly make_skew(const Field& f, unsigned s, const std::string& conv, const std::string& coeffs) {
  const Convention c = conv == "right" ? Convention::Right : Convention::Left;
  return SkewPoly(f, FieldAut{s}, c, parse_felts(f, coeffs));
}

json skew_json(const SkewPoly& f) { return felts_json(f.coeffs()); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Skew-polynomial codes and their duals"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 1;
  if (const char* env = std::getenv("SKEWDUAL_SEED")) seed = std::strtoull(env, nullptr, 10);
  std::string output = "json";
  app.add_option("--seed", seed, "random seed (default $SKEWDUAL_SEED or 1)");
  app.add_option("--output", output, "json or table")->check(CLI::IsMember({"json", "table"}));

  json doc;
  int status = kExitOk;

  // field
  auto* field_cmd = app.add_subcommand("field", "finite field arithmetic");
  field_cmd->require_subcommand(1);

  FieldArgs info_args;
  auto* info = field_cmd->add_subcommand("info", "field parameters");
  info_args.attach(info);
  info->callback([&] {
    doc = {{"command", "field info"}, {"field", field_json(info_args.build())}};
  });

  FieldArgs arith_args;
  std::string arith_op;
  std::uint32_t arith_x = 0;
  std::int64_t arith_y = 0;
  auto* arith = field_cmd->add_subcommand("arith", "add, sub, mul, div, pow, inv");
  arith_args.attach(arith);
  arith->add_option("--op", arith_op)->required()->check(CLI::IsMember({"add", "sub", "mul", "div", "pow", "inv"}));
  arith->add_option("--x", arith_x)->required();
  arith->add_option("--y", arith_y, "second operand or exponent");
  arith->callback([&] {
    const Field f = arith_args.build();
    const Felt x = f.element(arith_x);
    Felt r;
    if (arith_op == "pow") {
      r = f.pow(x, arith_y);
    } else if (arith_op == "inv") {
      require(x.value != 0, ErrorKind::DivisionByZero, "inverse of zero");
      r = f.inv(x);
    } else {
      const Felt y = f.element(static_cast<std::uint64_t>(arith_y));
      if (arith_op == "add") r = f.add(x, y);
      if (arith_op == "sub") r = f.sub(x, y);
      if (arith_op == "mul") r = f.mul(x, y);
      if (arith_op == "div") {
        require(y.value != 0, ErrorKind::DivisionByZero, "division by zero");
        r = f.div(x, y);
      }
    }
    doc = {{"command", "field arith"}, {"op", arith_op}, {"result", r.value}};
  });

  FieldArgs frob_args;
  unsigned frob_s = 1;
  std::uint32_t frob_x = 0;
  auto* frob = field_cmd->add_subcommand("frobenius", "x^(p^s)");
  frob_args.attach(frob);
  frob->add_option("--s", frob_s)->required();
  frob->add_option("--x", frob_x)->required();
  frob->callback([&] {
    const Field f = frob_args.build();
    doc = {{"command", "field frobenius"}, {"result", f.frobenius(frob_s, f.element(frob_x)).value}};
  });

  FieldArgs trace_args;
  unsigned trace_d = 1;
  std::uint32_t trace_x = 0;
  auto* trace = field_cmd->add_subcommand("trace", "trace and norm to GF(p^d)");
  trace_args.attach(trace);
  trace->add_option("--d", trace_d)->required();
  trace->add_option("--x", trace_x)->required();
  trace->callback([&] {
    const Field f = trace_args.build();
    const Felt x = f.element(trace_x);
    doc = {{"command", "field trace"}, {"trace", f.trace(trace_d, x).value}, {"norm", f.norm(trace_d, x).value}};
  });

  FieldArgs h90_args;
  unsigned h90_d = 1;
  std::uint32_t h90_mu = 1;
  auto* h90 = field_cmd->add_subcommand("hilbert90", "nu with nu^(p^d) / nu = mu");
  h90_args.attach(h90);
  h90->add_option("--d", h90_d)->required();
  h90->add_option("--mu", h90_mu)->required();
  h90->callback([&] {
    const Field f = h90_args.build();
    doc = {{"command", "field hilbert90"}, {"nu", hilbert90(f, h90_d, f.element(h90_mu)).value}};
  });

  // basis
  FieldArgs basis_args;
  unsigned basis_d = 1;
  std::string basis_elements;
  std::optional<std::uint32_t> basis_alpha;
  bool basis_find = false;
  auto* basis = app.add_subcommand("basis", "bases of GF(p^m) over GF(p^d)");
  basis_args.attach(basis);
  basis->add_option("--d", basis_d)->required();
  basis->add_option("--elements", basis_elements, "explicit basis elements");
  basis->add_option("--alpha", basis_alpha, "normal basis generator");
  basis->add_flag("--find-self-dual-normal", basis_find);
  basis->callback([&] {
    const Field f = basis_args.build();
    doc = {{"command", "basis"}};
    if (basis_find) {
      const auto a = find_self_dual_normal(f, basis_d);
      doc["self_dual_normal_alpha"] = a ? json(a->value) : json(nullptr);
      return;
    }
    require(basis_alpha.has_value() != !basis_elements.empty(), ErrorKind::InvalidArgument,
            "give exactly one of --alpha, --elements, --find-self-dual-normal");
    if (basis_alpha) {
      const Felt alpha = f.element(*basis_alpha);
      doc["normal"] = normal_basis_check(f, basis_d, alpha);
      if (!doc["normal"].get<bool>()) return;
    }
    const SubfieldBasis b = basis_alpha ? make_normal_basis(f, basis_d, f.element(*basis_alpha))
                                        : make_subfield_basis(f, basis_d, parse_felts(f, basis_elements));
    doc["elements"] = felts_json(b.elements);
    doc["dual"] = felts_json(b.dual);
    doc["normal"] = b.normal;
    doc["self_dual"] = b.self_dual;
    doc["gram"] = mat_json(trace_gram(f, basis_d, b.elements));
  });

  // skewpoly
  FieldArgs sp_args;
  unsigned sp_sigma = 1;
  std::string sp_conv = "left", sp_op, sp_f, sp_g;
  std::uint32_t sp_a = 0;
  std::size_t sp_i = 0;
  auto* sp = app.add_subcommand("skewpoly", "skew polynomial arithmetic");
  sp_args.attach(sp);
  sp->add_option("--sigma", sp_sigma, "Frobenius exponent s of sigma");
  sp->add_option("--convention", sp_conv)->check(CLI::IsMember({"left", "right"}));
  sp->add_option("--op", sp_op)->required()->check(
      CLI::IsMember({"mul", "divr", "divl", "gcrd", "gcld", "lclm", "lcrm", "eval", "norm", "convert"}));
  sp->add_option("--f", sp_f, "coefficients, ascending");
  sp->add_option("--g", sp_g, "coefficients, ascending");
  sp->add_option("--a", sp_a, "evaluation point or norm argument");
  sp->add_option("--i", sp_i, "norm index");
  sp->callback([&] {
    const Field fl = sp_args.build();
    doc = {{"command", "skewpoly"}, {"op", sp_op}};
    if (sp_op == "norm") {
      doc["result"] = sp_norm(fl, FieldAut{sp_sigma}, fl.element(sp_a), sp_i).value;
      return;
    }
    const SkewPoly f = make_skew(fl, sp_sigma, sp_conv, sp_f);
    if (sp_op == "eval") {
      const Felt by_div = sp_right_eval(f, fl.element(sp_a));
      const Felt by_norms = sp_right_eval_norms(f, fl.element(sp_a));
      doc["result"] = by_div.value;
      doc["checks"] = {{"norm_formula", by_div == by_norms}};
      if (by_div != by_norms) status = kExitCheckFailed;
      return;
    }
    if (sp_op == "convert") {
      const SkewPoly c = convert_convention(f);
      doc["result"] = skew_json(c);
      doc["sigma"] = c.sigma().s;
      return;
    }
    const SkewPoly g = make_skew(fl, sp_sigma, sp_conv, sp_g);
    if (sp_op == "mul") doc["result"] = skew_json(f * g);
    if (sp_op == "divr" || sp_op == "divl") {
      const SkewDivision qr = sp_divide(sp_op == "divr" ? Side::Right : Side::Left, f, g);
      doc["quotient"] = skew_json(qr.quot);
      doc["remainder"] = skew_json(qr.rem);
    }
    if (sp_op == "gcrd") doc["result"] = skew_json(gcrd(f, g));
    if (sp_op == "gcld") doc["result"] = skew_json(gcld(f, g));
    if (sp_op == "lclm") doc["result"] = skew_json(lclm(f, g));
    if (sp_op == "lcrm") doc["result"] = skew_json(lcrm(f, g));
  });

  // code
  auto* code_cmd = app.add_subcommand("code", "codes and their duals");
  code_cmd->require_subcommand(1);

  FieldArgs cc_args;
  unsigned cc_sigma = 1;
  std::size_t cc_n = 1;
  std::uint32_t cc_u = 1;
  std::string cc_gen;
  auto* cc = code_cmd->add_subcommand("constacyclic", "skew constacyclic code");
  cc_args.attach(cc);
  cc->add_option("--sigma", cc_sigma);
  cc->add_option("--n", cc_n)->required();
  cc->add_option("--u", cc_u);
  cc->add_option("--gen", cc_gen, "monic generator, ascending coefficients")->required();
  cc->callback([&] {
    const Field L = cc_args.build();
    const ConstaRing R = ConstaRing::create(L, FieldAut{cc_sigma}, cc_n, L.element(cc_u));
    const ConstaDual d = consta_dual(R, SkewPoly(L, R.sigma(), Convention::Left, parse_felts(L, cc_gen)));
    const bool ok = d.codes.kernel_match() && d.codes.theta_match() && d.dimensions_add_up;
    doc = {{"command", "code constacyclic"},
           {"generator_matrix", mat_json(d.codes.code.canonical())},
           {"dimension", d.codes.code.dimension()},
           {"dual_generator_poly", skew_json(d.h)},
           {"dual_theta_poly", felts_json(theta(R, R.reduce(d.h)).coeffs)},
           {"dual_matrix", mat_json(d.codes.dual_via_theta.canonical())},
           {"dual_dimension", d.codes.dual.dimension()},
           {"checks",
            {{"kernel_match", d.codes.kernel_match()},
             {"transposition", d.codes.theta_match()},
             {"dimensions", d.dimensions_add_up}}}};
    if (!ok) status = kExitCheckFailed;
  });

  FieldArgs rs_args;
  unsigned rs_sigma = 1;
  std::uint32_t rs_alpha = 0;
  std::size_t rs_delta = 2;
  bool rs_dual_flag = false, rs_eval = false, rs_mindist = false;
  auto* rs = code_cmd->add_subcommand("skewrs", "skew Reed-Solomon code");
  rs_args.attach(rs);
  rs->add_option("--sigma", rs_sigma);
  rs->add_option("--alpha", rs_alpha)->required();
  rs->add_option("--delta", rs_delta)->required();
  rs->add_flag("--dual", rs_dual_flag);
  rs->add_flag("--eval", rs_eval);
  rs->add_flag("--mindist", rs_mindist);
  rs->callback([&] {
    const Field L = rs_args.build();
    const SkewRSCode code = rs_create(L, FieldAut{rs_sigma}, L.element(rs_alpha), rs_delta);
    const LinearCode<Mat> c = code.code();
    doc = {{"command", "code skewrs"},
           {"n", code.n},
           {"g", skew_json(code.g)},
           {"k", code.k},
           {"gamma", code.gamma.value},
           {"generator_matrix", mat_json(c.canonical())}};
    json checks = json::object();
    bool ok = true;
    if (rs_dual_flag) {
      const SkewRSCode dual = rs_dual(code);
      doc["dual_g"] = skew_json(dual.g);
      const bool match = dual.code() == kernel_dual(c);
      checks["dual_kernel_match"] = match;
      ok = ok && match;
    }
    if (rs_eval) {
      const EvalParams ep = eval_params(code);
      doc["mu"] = ep.mu.value;
      doc["nu"] = ep.nu.value;
      const Mat sge = sge_matrix(code, ep);
      doc["sge_matrix"] = mat_json(sge);
      const bool match = LinearCode<Mat>(sge) == c;
      checks["sge_span"] = match;
      ok = ok && match;
    }
    if (rs_mindist) {
      const std::size_t d = min_distance(c);
      doc["min_distance"] = d;
      doc["mds"] = d == code.n - code.k + 1;
      ok = ok && d == code.n - code.k + 1;
    }
    doc["checks"] = checks;
    if (!ok) status = kExitCheckFailed;
  });

  unsigned conv_p = 2, conv_d = 1, conv_t = 2, conv_h = 0;
  std::size_t conv_n = 2;
  std::string conv_u, conv_idem;
  auto* conv = code_cmd->add_subcommand("conv", "left ideal convolutional code from an idempotent");
  conv->set_help_flag("--help", "print help for this command");
  conv->add_option("--p", conv_p)->required();
  conv->add_option("--d", conv_d, "degree of F over GF(p)")->required();
  conv->add_option("--t", conv_t, "degree of K over F")->required();
  conv->add_option("--n", conv_n, "matrix size")->required();
  conv->add_option("--U", conv_u, "regular n x n matrix over K, rows ';'-separated (default identity)");
  conv->add_option("--h", conv_h, "Frobenius power");
  conv->add_option("--idem", conv_idem, "idempotent n x n matrix over K")->required();
  conv->callback([&] {
    const WordAmbient W = WordAmbient::create(conv_p, conv_d, conv_t, conv_n);
    const Mat U = conv_u.empty() ? Mat::identity(W.K(), conv_n) : parse_matrix(W.K(), conv_u);
    const OreRing R(W, make_mat_aut(W, U, conv_h));
    const Mat e = parse_matrix(W.K(), conv_idem);
    const LiccDual d = licc_dual_idem(R, e);
    doc = {{"command", "code conv"},
           {"basis", felts_json(W.D().elements)},
           {"M_R_f", polymat_json(d.codes.code.generator())},
           {"generators", polymat_json(d.codes.code.canonical())},
           {"dual_generators", polymat_json(d.codes.dual.canonical())},
           {"checks",
            {{"transposition", d.transposition},
             {"kernel_match", d.codes.kernel_match()},
             {"direct_summand", d.direct_summand}}}};
    if (!(d.transposition && d.codes.kernel_match() && d.direct_summand)) status = kExitCheckFailed;
  });

  // verify
  std::string verify_target = "all";
  auto* verify = app.add_subcommand("verify", "seeded property suites");
  unsigned verify_samples = 100;
  verify->add_option("suite", verify_target, "all or one suite name");
  verify->add_option("--samples", verify_samples, "random sample count, percent of the default")
      ->check(CLI::Range(1u, 10000u));
  verify->callback([&] {
    std::vector<std::string> names;
    if (verify_target == "all") {
      names = suite_names();
    } else {
      names = {verify_target};
    }
    json suites = json::array();
    bool all_ok = true;
    for (const std::string& name : names) {
      const SuiteReport r = run_suite(name, seed, verify_samples);
      json entry = {{"name", r.name}, {"passed", r.report.passed()}};
      entry.update(report_json(r.report));
      suites.push_back(entry);
      all_ok = all_ok && r.report.passed();
    }
    doc = {{"command", "verify"}, {"seed", seed}, {"samples", verify_samples}, {"passed", all_ok}, {"suites", suites}};
    if (!all_ok) status = kExitCheckFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: InvalidArgument: " << e.what() << "\n";
    return kExitError;
  }
  emit(doc, output);
  return status;
}
