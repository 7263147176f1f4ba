#include "neron/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "neron/decomposition.hpp"
#include "neron/error.hpp"
#include "neron/green.hpp"
#include "neron/json_io.hpp"
#include "neron/jumping.hpp"
#include "neron/moduli.hpp"
#include "neron/period.hpp"
#include "neron/theta.hpp"

namespace neron::cli {

namespace {

OrderedJson ids_json(const MultiGraph& g) { return OrderedJson(g.vertex_ids()); }

OrderedJson edges_json(const std::vector<std::size_t>& edges) { return OrderedJson(edges); }

std::vector<long> parse_weights(const std::string& text) {
  std::vector<long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kMalformedInput, "weights must be comma-separated integers");
    }
  }
  return out;
}

struct GraphArgs {
  std::string graph;
  std::string d;
  std::string e;
};

OrderedJson cmd_green(const GraphArgs& a, bool any_degree) {
  const MultiGraph graph = graph_from_json(load_json(a.graph));
  const Divisor d = divisor_from_json(load_json(a.d));
  const Divisor e = divisor_from_json(load_json(a.e));
  if (!any_degree) {
    require_degree_zero(d, "d");
    require_degree_zero(e, "e");
  }
  const GreenKernel kernel(graph);
  OrderedJson out;
  out["vertices"] = ids_json(graph);
  out["laplacian"] = matrix_to_json(kernel.laplacian());
  out["pseudo_inverse"] = matrix_to_json(kernel.pseudo_inverse());
  out["green"] = format_rational(kernel.green(d, e));
  return out;
}

OrderedJson cmd_resistance(const GraphArgs& a, const std::string& from, const std::string& to) {
  const bool pair = !from.empty() || !to.empty();
  const bool divisors = !a.d.empty() || !a.e.empty();
  if (!pair && !divisors) {
    throw Error(ErrorCode::kUsage, "give --from/--to vertices or --d/--e divisors");
  }
  const GreenKernel kernel(graph_from_json(load_json(a.graph)));
  OrderedJson out;
  if (pair) {
    if (from.empty() || to.empty()) throw Error(ErrorCode::kUsage, "--from and --to go together");
    out["resistance"] = format_rational(kernel.resistance(from, to));
  }
  if (divisors) {
    if (a.d.empty() || a.e.empty()) throw Error(ErrorCode::kUsage, "--d and --e go together");
    out["resistance_pairing"] = format_rational(
        kernel.resistance_pairing(divisor_from_json(load_json(a.d)), divisor_from_json(load_json(a.e))));
  }
  return out;
}

OrderedJson cmd_phi(const GraphArgs& a) {
  const MultiGraph graph = graph_from_json(load_json(a.graph));
  const Divisor d = divisor_from_json(load_json(a.d));
  return OrderedJson{{"phi", divisor_to_json(phi(graph, d), graph)}};
}

OrderedJson cmd_pairing(const GraphArgs& a, const std::string& finite_part) {
  AdmissibleInput in{graph_from_json(load_json(a.graph)), divisor_from_json(load_json(a.d)),
                     divisor_from_json(load_json(a.e)), parse_rational(finite_part)};
  const Rational value = admissible_pairing(in);
  OrderedJson out;
  out["pairing"] = format_rational(value);
  out["finite_part"] = format_rational(in.finite_part);
  out["green"] = format_rational(value - in.finite_part);
  return out;
}

OrderedJson cmd_decompose(const GraphArgs& a) {
  const MarkedGraph marked = marked_graph_from_json(load_json(a.graph));
  const MultiGraph& graph = marked.graph();
  const BlockDecomposition dec = decompose(graph);
  std::optional<Divisor> d;
  std::optional<Divisor> e;
  if (!a.d.empty()) d = divisor_from_json(load_json(a.d));
  if (!a.e.empty()) e = divisor_from_json(load_json(a.e));

  OrderedJson blocks = OrderedJson::array();
  OrderedJson bridge_list = OrderedJson::array();
  for (std::size_t i = 0; i < dec.size(); ++i) {
    const Block& block = dec.blocks()[i];
    OrderedJson entry;
    entry["index"] = i;
    entry["kind"] = to_string(block.kind);
    entry["edges"] = edges_json(block.edges);
    entry["vertices"] = ids_json(block.subgraph);
    if (block.kind == BlockKind::kBridge) {
      entry["type"] = bridge_type_to_json(bridge_type(marked, block.edges.front()));
      bridge_list.push_back(block.edges.front());
    }
    if (d) entry["pushforward_d"] = divisor_to_json(dec.pushforward(i, *d), block.subgraph);
    if (e) entry["pushforward_e"] = divisor_to_json(dec.pushforward(i, *e), block.subgraph);
    blocks.push_back(std::move(entry));
  }
  OrderedJson out;
  out["vertices"] = ids_json(graph);
  out["blocks"] = std::move(blocks);
  out["bridges"] = std::move(bridge_list);
  if (d && e) {
    out["additivity_sum"] = format_rational(additivity_sum(marked, *d, *e));
    out["green"] = format_rational(green(graph, *d, *e));
  } else if (d || e) {
    throw Error(ErrorCode::kUsage, "--d and --e go together");
  }
  return out;
}

OrderedJson cmd_jump(const GraphArgs& a) {
  const MarkedGraph marked = marked_graph_from_json(load_json(a.graph));
  const MultiGraph& graph = marked.graph();
  const Rational j = jump(marked);
  const Divisor d = reduction_divisor(marked);

  OrderedJson blocks = OrderedJson::array();
  for (const BlockContribution& c : jump_decomposed(marked)) {
    OrderedJson entry;
    entry["index"] = c.block;
    entry["kind"] = to_string(c.kind);
    entry["edges"] = edges_json(c.edges);
    entry["value"] = format_rational(c.value);
    if (c.type) {
      entry["type"] = bridge_type_to_json(*c.type);
      entry["a_coefficient"] = format_rational(bridge_coefficient(marked, *c.type));
    }
    blocks.push_back(std::move(entry));
  }
  OrderedJson counts = OrderedJson::array();
  for (const auto& [type, count] : bridge_counts(marked)) {
    OrderedJson entry = bridge_type_to_json(type);
    entry["count"] = count;
    counts.push_back(std::move(entry));
  }
  OrderedJson out;
  out["jump"] = format_rational(j);
  out["genus"] = genus(marked);
  out["vertices"] = ids_json(graph);
  out["canonical_divisor"] = divisor_to_json(canonical_divisor(marked), graph);
  out["reduction_divisor"] = divisor_to_json(d, graph);
  out["green"] = format_rational(green(graph, d, d));
  out["blocks"] = std::move(blocks);
  out["bridge_counts"] = std::move(counts);
  return out;
}

OrderedJson cmd_lear_class(long g, std::optional<int> n, const std::string& weights, long m,
                           const std::string& basis, bool coefficients) {
  LearInput in{g, parse_weights(weights), m};
  if (n && *n != in.n()) {
    throw Error(ErrorCode::kMalformedInput,
                "--n is " + std::to_string(*n) + " but --d has " + std::to_string(in.n()) + " entries");
  }
  validate(in);
  if (coefficients) {
    OrderedJson zero = OrderedJson::array();
    OrderedJson higher = OrderedJson::array();
    for (const MarkSet& p : mark_subsets(in.n())) {
      if (p.size() >= 2) {
        zero.push_back({{"P", p}, {"value", format_rational(Rational(a_coeff_zero(p, in.d, in.m)))}});
      }
      for (long h = 1; h <= in.g - 1; ++h) {
        higher.push_back({{"h", h}, {"P", p},
                          {"value", format_rational(Rational(a_coeff(h, p, in.d, in.m, in.g)))}});
      }
    }
    return OrderedJson{{"a_zero", zero}, {"a", higher}};
  }
  if (basis == "deligne") return pic_class_to_json(lear_class_deligne_basis(in));
  if (basis == "kappa-psi") return pic_class_to_json(lear_class_kappa_psi(in));
  return pic_class_to_json(deligne_self_pairing_expansion(in));
}

OrderedJson cmd_theta(const std::string& tau_text, const std::string& z_text,
                      const std::string& w_text, double eps) {
  const CMatrix tau = cmatrix_from_json(load_json(tau_text));
  const CVector z = z_text.empty() ? CVector::Zero(tau.rows()) : cvector_from_json(load_json(z_text));
  const PeriodPoint p{z, tau};
  const ThetaSum sum = theta_sum(p, eps);
  OrderedJson out;
  out["theta"] = complex_to_json(sum.value);
  out["theta_norm"] = theta_norm(p, eps);
  out["radius"] = sum.radius;
  out["terms"] = sum.terms;
  out["eps"] = eps;
  if (!w_text.empty()) {
    const EtaNorm eta = eta_norm(z, cvector_from_json(load_json(w_text)), tau, eps);
    if (eta.value) {
      out["eta_norm"] = *eta.value;
    } else {
      out["pole"] = {{"argument", eta.pole->argument}, {"magnitude", eta.pole->magnitude}};
    }
  }
  return out;
}

struct SlopeArgs {
  long n = 1;
  long a = 0;
  long b = 0;
  double t_min = 1e-6;
  double t_max = 0.1;
  std::size_t steps = 41;
  double b_imag = 1.0;
};

OrderedJson cmd_slope_check(const SlopeArgs& s, double eps) {
  const PeriodFamily family = harness_family(s.n, s.a, s.b, s.b_imag);
  const Rational predicted = cycle_prediction(s.n, s.a, s.b);
  const SlopeReport report = slope_check(family, predicted, geometric_grid(s.t_max, s.t_min, s.steps), eps);
  OrderedJson samples = OrderedJson::array();
  for (const SlopeSample& sample : report.samples) {
    samples.push_back({{"t", sample.t},
                       {"tau", complex_to_json(sample.tau)},
                       {"im_inverse", sample.im_inverse},
                       {"F", sample.value}});
  }
  OrderedJson out;
  out["N"] = s.n;
  out["a"] = s.a;
  out["b"] = s.b;
  out["predicted"] = format_rational(report.predicted);
  out["predicted_value"] = report.predicted.get_d();
  out["fitted_slope"] = report.fitted_slope;
  out["slope_error"] = report.slope_error;
  out["residual_spread"] = report.residual_spread;
  out["resamples"] = report.resamples;
  out["dropped"] = report.dropped;
  out["samples"] = std::move(samples);
  return out;
}

void write_error(std::ostream& out, ErrorCode code, const std::string& message) {
  OrderedJson doc;
  doc["error"] = {{"code", std::string(error_code_name(code))}, {"message", message}};
  out << doc.dump() << "\n";
}

}  // namespace

const std::map<std::string, std::vector<std::string>>& operation_table() {
  static const std::map<std::string, std::vector<std::string>> table{
      {"green", {"laplacian", "pseudo_inverse", "green"}},
      {"resistance", {"resistance", "resistance_pairing"}},
      {"phi", {"phi"}},
      {"pairing", {"admissible_pairing"}},
      {"decompose", {"decompose", "pushforward", "bridge_type", "additivity_sum"}},
      {"jump",
       {"canonical_divisor", "genus", "reduction_divisor", "bridge_counts", "jump",
        "jump_decomposed"}},
      {"lear-class",
       {"a_coeff_zero", "a_coeff", "lear_class_deligne_basis", "deligne_self_pairing_expansion",
        "lear_class_kappa_psi"}},
      {"theta", {"theta", "theta_norm", "eta_norm"}},
      {"slope-check", {"period", "im_inverse", "slope_check"}},
  };
  return table;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Green's functions, Neron pairings and jump divisors on reduction graphs",
               "neron"};
  app.require_subcommand(1);
  double eps = default_theta_eps();

  GraphArgs g;
  bool any_degree = false;
  std::string from;
  std::string to;
  std::string finite_part = "0";
  auto graph_options = [&g](CLI::App* sub, bool with_d, bool with_e, bool required) {
    sub->add_option("--graph", g.graph, "graph JSON file or inline JSON")->required();
    if (with_d) sub->add_option("--d", g.d, "divisor {vertex: \"p/q\"}")->required(required);
    if (with_e) sub->add_option("--e", g.e, "divisor {vertex: \"p/q\"}")->required(required);
  };

  auto* green_cmd = app.add_subcommand("green", "Laplacian, pseudoinverse and g(d,e)");
  graph_options(green_cmd, true, true, true);
  green_cmd->add_flag("--allow-any-degree", any_degree, "skip the degree-zero requirement");

  auto* resistance_cmd = app.add_subcommand("resistance", "effective resistance");
  graph_options(resistance_cmd, true, true, false);
  resistance_cmd->add_option("--from", from, "vertex id");
  resistance_cmd->add_option("--to", to, "vertex id");

  auto* phi_cmd = app.add_subcommand("phi", "compensating divisor -L+ d");
  graph_options(phi_cmd, true, false, true);

  auto* pairing_cmd = app.add_subcommand("pairing", "admissible local pairing");
  graph_options(pairing_cmd, true, true, true);
  pairing_cmd->add_option("--finite-part", finite_part, "local intersection number \"p/q\"");

  auto* decompose_cmd = app.add_subcommand("decompose", "bridges and 2-connected blocks");
  graph_options(decompose_cmd, true, true, false);

  auto* jump_cmd = app.add_subcommand("jump", "height jump of a marked graph");
  graph_options(jump_cmd, false, false, false);

  long lear_g = 0;
  std::optional<int> lear_n;
  std::string lear_d;
  long lear_m = 0;
  std::string basis = "deligne";
  bool coefficients = false;
  auto* lear_cmd = app.add_subcommand("lear-class", "Lear extension class on M_{g,n}");
  lear_cmd->add_option("--g", lear_g, "genus")->required();
  lear_cmd->add_option("--n", lear_n, "number of marks");
  lear_cmd->add_option("--d", lear_d, "comma-separated weights")->required()->allow_extra_args(false);
  lear_cmd->add_option("--m", lear_m, "twist")->required();
  lear_cmd->add_option("--basis", basis, "deligne | kappa-psi | self-pairing")
      ->check(CLI::IsMember({"deligne", "kappa-psi", "self-pairing"}));
  lear_cmd->add_flag("--coefficients", coefficients, "list a(P,d) and a(P,h,d) instead");

  std::string tau_text;
  std::string z_text;
  std::string w_text;
  auto* theta_cmd = app.add_subcommand("theta", "Riemann theta, its norm and the eta norm");
  theta_cmd->add_option("--tau", tau_text, "period matrix [[[re,im],..],..]")->required();
  theta_cmd->add_option("--z", z_text, "vector [[re,im],..] (default 0)");
  theta_cmd->add_option("--w", w_text, "second vector for the eta norm");
  theta_cmd->add_option("--eps", eps, "truncation tolerance")->check(CLI::PositiveNumber);

  SlopeArgs slope;
  auto* slope_cmd = app.add_subcommand("slope-check", "genus-1 degeneration slope against the N-cycle");
  slope_cmd->add_option("--N", slope.n, "multiplicity A = (N)")->required()->check(CLI::PositiveNumber);
  slope_cmd->add_option("--a", slope.a, "first section fraction a/N");
  slope_cmd->add_option("--b", slope.b, "second section fraction b/N");
  slope_cmd->add_option("--tmin", slope.t_min, "smallest t");
  slope_cmd->add_option("--tmax", slope.t_max, "largest t");
  slope_cmd->add_option("--steps", slope.steps, "grid size");
  slope_cmd->add_option("--b-imag", slope.b_imag, "Im B");
  slope_cmd->add_option("--eps", eps, "truncation tolerance")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    write_error(out, ErrorCode::kUsage, e.what());
    err << app.help();
    return 2;
  }

  try {
    OrderedJson result;
    if (green_cmd->parsed()) {
      result = cmd_green(g, any_degree);
    } else if (resistance_cmd->parsed()) {
      result = cmd_resistance(g, from, to);
    } else if (phi_cmd->parsed()) {
      result = cmd_phi(g);
    } else if (pairing_cmd->parsed()) {
      result = cmd_pairing(g, finite_part);
    } else if (decompose_cmd->parsed()) {
      result = cmd_decompose(g);
    } else if (jump_cmd->parsed()) {
      result = cmd_jump(g);
    } else if (lear_cmd->parsed()) {
      result = cmd_lear_class(lear_g, lear_n, lear_d, lear_m, basis, coefficients);
    } else if (theta_cmd->parsed()) {
      result = cmd_theta(tau_text, z_text, w_text, eps);
    } else {
      result = cmd_slope_check(slope, eps);
    }
    out << result.dump() << "\n";
    return 0;
  } catch (const Error& e) {
    write_error(out, e.code(), e.what());
  } catch (const std::exception& e) {
    write_error(out, ErrorCode::kMalformedInput, e.what());
  }
  return 2;
}

}  // namespace neron::cli
