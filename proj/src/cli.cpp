#include "einobs/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "einobs/error.hpp"
#include "einobs/parser.hpp"
#include "einobs/serialize.hpp"

namespace einobs::cli {
namespace {

using nlohmann::json;

struct GlobalOptions {
  bool json = false;
};

struct ChenFlags {
  std::string C = "1";
  unsigned precision_bits = 64;
  unsigned precision_cap = 4096;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--chen-C", C, "Threshold C in x > C (exact integer)")->capture_default_str();
    cmd.add_option("--precision-bits", precision_bits, "Starting interval precision in bits")
        ->capture_default_str();
    cmd.add_option("--precision-cap", precision_cap, "Maximum interval precision in bits")
        ->capture_default_str();
  }

  ChenParams params() const {
    ChenParams p{parse_integer(C), precision_bits, precision_cap};
    validate(p);
    return p;
  }

  json echo() const {
    return json{{"chen_C", C}, {"precision_bits", precision_bits}, {"precision_cap", precision_cap}};
  }
};

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void print_invariants(std::ostream& out, const Invariants& inv) {
  out << "e          = " << inv.e.get_str() << '\n'
      << "sigma      = " << inv.sigma.get_str() << '\n'
      << "b1         = " << inv.b1.get_str() << '\n'
      << "2e+3sigma  = " << inv.two_e_plus_3sigma().get_str() << '\n'
      << "chi_h      = " << to_string(inv.chi_h()) << '\n';
  if (inv.b2) {
    out << "b2+ / b2-  = " << inv.b2->plus.get_str() << " / " << inv.b2->minus.get_str() << '\n';
  } else {
    out << "b2+ / b2-  = not computed\n";
  }
}

void print_descriptor(std::ostream& out, const std::string& title, const SpinCDescriptor& d,
                      const Invariants& inv) {
  out << title << '\n' << "  c1^2   = " << d.c1_sq().get_str() << '\n';
  try {
    out << "  d      = " << formal_dimension(d.c1_sq(), inv).get_str() << '\n';
  } catch (const Error& e) {
    out << "  d      = undefined (" << e.what() << ")\n";
  }
  out << "  status = " << to_string(d.status()) << '\n';
  if (d.holonomy_count()) out << "  SW_theta = " << d.holonomy_count()->get_str() << '\n';
  for (const auto& p : d.provenance()) out << "  - " << p << '\n';
}

void print_verdicts(std::ostream& out, const std::vector<Verdict>& verdicts) {
  for (const auto& v : verdicts) {
    out << std::left << std::setw(19) << to_string(v.rule) << std::setw(21) << to_string(v.status);
    if (v.certificate) {
      const auto& c = *v.certificate;
      out << c.lhs_meaning << " = " << to_string(c.lhs) << ' ' << to_string(c.relation) << ' '
          << to_string(c.rhs) << " = " << c.rhs_meaning;
    }
    out << "  [" << v.notes << "]\n";
  }
}

int cmd_invariants(const std::string& text, const GlobalOptions& g, std::ostream& out) {
  const ManifoldExpr expr = parse(text);
  const Invariants inv = connected_sum_invariants(expr);
  if (g.json) {
    json j = to_json(inv);
    j["expr"] = format(expr);
    print_json(out, j);
  } else {
    out << "expr       = " << format(expr) << '\n';
    print_invariants(out, inv);
  }
  return 0;
}

int cmd_spinc(const std::string& text, bool deg_k_positive, const GlobalOptions& g, std::ostream& out) {
  const ManifoldExpr expr = parse(text);
  const auto mkl = decompose_mkl(expr);
  if (!mkl) {
    throw Error(ErrorKind::kHypothesisUnmet, "cli.spinc",
                "expression is not of the form M # k*~CP2 # l*S1xS3 with a single base block");
  }
  const Invariants base_inv = block_invariants(mkl->base);
  const SpinCDescriptor base =
      canonical_spinc_of_kahler(base_inv, base_inv.two_e_plus_3sigma(), deg_k_positive);
  auto current = std::make_pair(base, base_inv);
  current = blow_up(current.first, current.second, mkl->k);
  if (mkl->l > 0) current = s1s3_sum(current.first, current.second, mkl->l);
  const auto bound = c1plus_sq_lower_bound(base_inv);

  if (g.json) {
    print_json(out, json{{"expr", format(expr)},
                         {"base", block_name(mkl->base)},
                         {"k", json_integer(mkl->k)},
                         {"l", json_integer(mkl->l)},
                         {"deg_K_positive", deg_k_positive},
                         {"base_spinc", to_json(base, base_inv)},
                         {"spinc", to_json(current.first, current.second)},
                         {"invariants", to_json(current.second)},
                         {"c1plus_sq_lower_bound", json_integer(bound.at_least)}});
  } else {
    out << "expr = " << format(expr) << "  (base " << block_name(mkl->base) << ", k = "
        << mkl->k.get_str() << ", l = " << mkl->l.get_str() << ")\n";
    print_descriptor(out, "base canonical class:", base, base_inv);
    print_descriptor(out, "after blow-ups and S1xS3 sums:", current.first, current.second);
    out << "lower bound: " << bound.certificate << '\n';
  }
  return 0;
}

int cmd_obstructions(const std::string& text, const std::string& volume, bool deg_k_positive,
                     const GlobalOptions& g, std::ostream& out) {
  const ManifoldExpr expr = parse(text);
  std::optional<Rational> vol;
  if (!volume.empty()) {
    vol = parse_rational(volume);
    if (*vol < 0) {
      throw Error(ErrorKind::kInvalidArgument, "cli.obstructions", "simplicial volume must be >= 0");
    }
  }
  std::optional<SpinCDescriptor> base_spinc;
  if (const auto mkl = decompose_mkl(expr)) {
    const Invariants base_inv = block_invariants(mkl->base);
    base_spinc = canonical_spinc_of_kahler(base_inv, base_inv.two_e_plus_3sigma(), deg_k_positive);
  }
  const auto verdicts = evaluate_all(expr, base_spinc, vol);
  if (g.json) {
    json list = json::array();
    for (const auto& v : verdicts) list.push_back(to_json(v));
    print_json(out, json{{"expr", format(expr)},
                         {"simplicial_volume", vol ? json(to_string(*vol)) : json(nullptr)},
                         {"deg_K_positive", deg_k_positive},
                         {"invariants", to_json(connected_sum_invariants(expr))},
                         {"verdicts", list}});
  } else {
    out << "expr = " << format(expr) << '\n';
    print_verdicts(out, verdicts);
  }
  return 0;
}

int cmd_construct(const std::string& m_text, const std::string& n_text, std::size_t count,
                  const ChenFlags& flags, const GlobalOptions& g, std::ostream& out) {
  const Integer m = parse_integer(m_text);
  const Integer n = parse_integer(n_text);
  const ChenParams p = flags.params();
  if (count == 0) throw Error(ErrorKind::kInvalidArgument, "cli.construct", "--count must be >= 1");
  const auto witnesses = solve(m, n, count, p);
  std::vector<bool> verified;
  for (const auto& w : witnesses) verified.push_back(verify(w, m, n, p).ok);

  if (g.json) {
    json list = json::array();
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      json j = to_json(witnesses[i]);
      j["verified"] = static_cast<bool>(verified[i]);
      list.push_back(j);
    }
    json params = flags.echo();
    params["e"] = json_integer(m);
    params["sigma"] = json_integer(n);
    params["count"] = count;
    print_json(out, json{{"parameters", params}, {"witnesses", list}});
  } else {
    out << "target (e, sigma) = (" << m.get_str() << ", " << n.get_str() << "), C = " << p.C.get_str()
        << " (witnesses valid conditional on the surface existence theorem at this C)\n";
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      const auto& w = witnesses[i];
      out << "\nwitness " << i + 1 << ": " << format(w.expr) << '\n'
          << "  chen (x, y) = (" << w.chen_x.get_str() << ", " << w.chen_y.get_str() << ")\n"
          << "  k = " << w.k.get_str() << ", l = " << w.l.get_str() << " (b1 = "
          << w.invariants.b1.get_str() << ")\n"
          << "  e = " << w.invariants.e.get_str() << ", sigma = " << w.invariants.sigma.get_str() << '\n'
          << "  spin^c status: " << to_string(w.spinc.status()) << '\n'
          << "  verified: " << (verified[i] ? "yes" : "NO") << '\n';
      print_verdicts(out, w.verdicts);
    }
  }
  return std::all_of(verified.begin(), verified.end(), [](bool b) { return b; }) ? 0 : 1;
}

int cmd_geography(const std::string& x_min, const std::string& x_max, const std::string& step,
                  const std::string& fmt, const std::string& output, const ChenFlags& flags,
                  const GlobalOptions& g, std::ostream& out) {
  const ChenParams p = flags.params();
  const auto format_kind = fmt == "svg" ? GeographyFormat::kSvg : GeographyFormat::kCsv;
  const std::string doc = emit_geography(parse_integer(x_min), parse_integer(x_max),
                                         parse_integer(step), format_kind, p);
  if (output.empty()) {
    out << doc;
    return 0;
  }
  write_document(output, doc);
  if (g.json) {
    json params = flags.echo();
    params["x_min"] = x_min;
    params["x_max"] = x_max;
    params["step"] = step;
    params["format"] = fmt;
    print_json(out, json{{"parameters", params},
                         {"output", output},
                         {"bytes", doc.size()},
                         {"min_feasible_x", json_integer(min_feasible_x(p))}});
  } else {
    out << "wrote " << doc.size() << " bytes to " << output << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"einobs: Einstein-metric obstruction calculator for 4-manifolds"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_flag("--json", g.json, "Emit JSON instead of text");

  std::string expr_text;
  std::string volume;
  bool deg_k_positive = false;

  auto* invariants = app.add_subcommand("invariants", "Characteristic numbers of an expression");
  invariants->add_option("expr", expr_text, "Connected-sum expression")->required();

  auto* spinc = app.add_subcommand("spinc", "Propagate the canonical spin^c class of the base");
  spinc->add_option("expr", expr_text, "Expression M # k*~CP2 # l*S1xS3")->required();
  spinc->add_flag("--deg-K-positive", deg_k_positive, "Base is Kahler with deg K > 0");

  auto* obstructions = app.add_subcommand("obstructions", "Evaluate all Einstein obstructions");
  obstructions->add_option("expr", expr_text, "Connected-sum expression")->required();
  obstructions->add_option("--simplicial-volume", volume, "Simplicial volume as P/Q");
  obstructions->add_flag("--deg-K-positive", deg_k_positive, "Base is Kahler with deg K > 0");

  std::string m_text, n_text;
  std::size_t count = 1;
  ChenFlags construct_flags;
  auto* construct = app.add_subcommand("construct", "Build non-Einstein witnesses for (e, sigma)");
  construct->add_option("-e,--euler", m_text, "Target Euler characteristic")->required();
  construct->add_option("-s,--signature", n_text, "Target signature")->required();
  construct->add_option("--count", count, "Number of witnesses")->capture_default_str();
  construct_flags.add_to(*construct);

  std::string x_min, x_max, step = "1", fmt = "csv", output;
  ChenFlags geo_flags;
  auto* geography = app.add_subcommand("geography", "Emit the surface geography region");
  geography->add_option("--x-min", x_min, "First x")->required();
  geography->add_option("--x-max", x_max, "Last x")->required();
  geography->add_option("--step", step, "Step in x")->capture_default_str();
  geography->add_option("--format", fmt, "csv or svg")
      ->check(CLI::IsMember({"csv", "svg"}))
      ->capture_default_str();
  geography->add_option("-o,--output", output, "Output file (stdout when omitted)");
  geo_flags.add_to(*geography);

  std::vector<std::string> reversed;
  for (std::size_t i = args.size(); i-- > 1;) reversed.push_back(args[i]);
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*invariants) return cmd_invariants(expr_text, g, out);
    if (*spinc) return cmd_spinc(expr_text, deg_k_positive, g, out);
    if (*obstructions) return cmd_obstructions(expr_text, volume, deg_k_positive, g, out);
    if (*construct) return cmd_construct(m_text, n_text, count, construct_flags, g, out);
    if (*geography) return cmd_geography(x_min, x_max, step, fmt, output, geo_flags, g, out);
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.is_input_error() ? 2 : 1;
  }
  return 2;
}

}  // namespace einobs::cli
