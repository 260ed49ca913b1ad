#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cohomlen/asymptotics.hpp"
#include "cohomlen/dsl.hpp"
#include "cohomlen/errors.hpp"
#include "cohomlen/graph.hpp"
#include "cohomlen/polyhedra.hpp"

namespace cohomlen::cli {

using nlohmann::json;

namespace {

struct Inputs {
  std::string ideal;
  std::string avoid;
  std::string graph;
  std::string family = "powers";
  std::string n = "1";
  std::size_t index = 1;
  std::size_t check_n = 0;
  bool growth = false;
};

std::string read_source(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw std::ios_base::failure("cannot read " + arg);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  return arg;
}

IdealFamily make_family(const MonomialIdeal& base, const std::string& kind) {
  if (kind == "powers") return IdealFamily::powers(base);
  if (kind == "sat") return IdealFamily::saturated_powers(base);
  if (kind == "intclosure") return IdealFamily::integral_closure_powers(base);
  throw CLI::ValidationError("--family", "expected powers, sat or intclosure, got " + kind);
}

// Approximate values: decimal, 12 significant digits.
std::string approx_text(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double approx(double v) { return std::strtod(approx_text(v).c_str(), nullptr); }

json degree_json(const ExponentVector& a) { return json(a.entries()); }

json entry_json(std::size_t n, const LengthResult& r) {
  json e{{"n", n}};
  if (r.infinite) {
    e["length"] = "infinite";
  } else {
    e["length"] = r.value;
    json support = json::array();
    for (const auto& [a, dim] : r.support) support.push_back(json::array({degree_json(a), dim}));
    e["support"] = std::move(support);
  }
  return e;
}

std::string length_text(const LengthResult& r) { return r.infinite ? "infinite" : std::to_string(r.value); }

json qp_json(const QuasiPolynomial& qp) {
  json polys = json::array();
  for (const auto& p : qp.polys) {
    json c = json::array();
    for (const auto& q : p) c.push_back(to_string(q));
    polys.push_back(std::move(c));
  }
  return {{"period", qp.period}, {"polys", std::move(polys)}, {"valid_from", qp.valid_from}};
}

json gf_json(const RationalGeneratingFunction& gf) {
  json num = json::array();
  for (const auto& c : gf.numerator) num.push_back(to_string(c));
  return {{"numerator", std::move(num)}, {"denominator_factors", gf.denominator_factors}, {"text", gf.to_string()}};
}

FitOptions fit_options(const RunConfig& cfg, std::size_t d) {
  return {cfg.max_degree < 0 ? d : static_cast<std::size_t>(cfg.max_degree), cfg.max_period};
}

ScanOptions scan_options(const RunConfig& cfg) { return {FieldSpec(cfg.characteristic), cfg.threads, true}; }

std::string witness_name(VertexWitness w) {
  switch (w) {
    case VertexWitness::isolated_vertices:
      return "isolated_vertices";
    case VertexWitness::bipartite_component:
      return "bipartite_component";
    case VertexWitness::fails:
      return "fails";
  }
  return "fails";
}

struct Output {
  json doc;
  std::string csv;
};

Output cmd_length(const Inputs& in, const RunConfig& cfg) {
  const auto base = parse_ideal(read_source(in.ideal));
  const auto family = make_family(base, in.family);
  const auto r = total_length(family_member(family, cfg.n_first), in.index, scan_options(cfg));
  return {entry_json(cfg.n_first, r), std::to_string(cfg.n_first) + "," + length_text(r) + "\n"};
}

LengthSequence run_sequence(const Inputs& in, const RunConfig& cfg) {
  const auto base = parse_ideal(read_source(in.ideal));
  return length_sequence(make_family(base, in.family), in.index, cfg.n_first, cfg.n_last, scan_options(cfg));
}

Output cmd_sequence(const Inputs& in, const RunConfig& cfg) {
  const auto seq = run_sequence(in, cfg);
  Output o;
  json values = json::array();
  for (const auto& e : seq.values) {
    values.push_back(entry_json(e.n, e.result));
    o.csv += std::to_string(e.n) + "," + length_text(e.result) + "\n";
  }
  o.doc = {{"family", in.family}, {"i", in.index}, {"values", std::move(values)}};
  if (in.growth) {
    const auto g = growth_estimate(seq, fit_options(cfg, seq.family.dim()));
    json gj{{"limsup_est", approx(g.limsup_est)},
            {"liminf_est", approx(g.liminf_est)},
            {"trend", approx(g.trend)},
            {"certified", false}};
    gj["fitted_degree"] = g.fitted_degree ? json(*g.fitted_degree) : json(nullptr);
    if (g.leading_coefficient) gj["leading_coefficient"] = to_string(*g.leading_coefficient);
    o.csv += "limsup_est," + approx_text(g.limsup_est) + "\n";
    o.csv += "liminf_est," + approx_text(g.liminf_est) + "\n";
    o.csv += "trend," + approx_text(g.trend) + "\n";
    o.doc["growth"] = std::move(gj);
  }
  return o;
}

Output cmd_fit(const Inputs& in, const RunConfig& cfg, bool with_gf) {
  if (cfg.n_first != 1) throw CLI::ValidationError("--n", "fitting needs a range starting at 1");
  const auto seq = run_sequence(in, cfg);
  const auto qp = fit_quasipolynomial(seq, fit_options(cfg, seq.family.dim()));
  Output o;
  o.doc = qp_json(qp);
  for (std::size_t r = 0; r < qp.period; ++r) {
    o.csv += std::to_string(r);
    for (const auto& c : qp.polys[r]) o.csv += "," + to_string(c);
    o.csv += "\n";
  }
  if (with_gf) {
    const auto values = seq.from_zero();
    const auto gf = to_generating_function(qp, std::span(values).first(qp.valid_from));
    // The emitted function has to reproduce every computed value.
    if (gf.series(values.size()) != values) throw ConsistencyError("generating function disagrees with the sequence");
    o.doc = {{"quasi_polynomial", o.doc}, {"generating_function", gf_json(gf)}};
    o.csv = "numerator";
    for (const auto& c : gf.numerator) o.csv += "," + to_string(c);
    o.csv += "\ndenominator_factors";
    for (auto b : gf.denominator_factors) o.csv += "," + std::to_string(b);
    o.csv += "\n";
  }
  return o;
}

Output cmd_limit(const Inputs& in, const RunConfig& cfg) {
  const auto base = parse_ideal(read_source(in.ideal));
  VolumeLimitOptions opts;
  opts.field = FieldSpec(cfg.characteristic);
  opts.check_n = in.check_n;
  opts.threads = cfg.threads;
  const auto v = limit_via_volume(base, in.index, opts);
  return {{{"i", in.index}, {"limit", to_string(v)}}, to_string(v) + "\n"};
}

Output cmd_finite(const Inputs& in, const RunConfig& cfg) {
  const auto base = parse_ideal(read_source(in.ideal));
  const auto member = family_member(make_family(base, in.family), cfg.n_first);
  const bool finite = finiteness_oracle(LocalizationTable(member), in.index, scan_options(cfg));
  return {{{"n", cfg.n_first}, {"i", in.index}, {"finite", finite}},
          std::to_string(cfg.n_first) + "," + (finite ? "true" : "false") + "\n"};
}

Output cmd_graph_check(const Inputs& in, const RunConfig& cfg, bool with_oracle) {
  const auto g = parse_graph(read_source(in.graph));
  const auto crit = star_deletion_criterion(g);
  Output o;
  json witnesses = json::array();
  for (std::size_t v = 0; v < crit.witnesses.size(); ++v) {
    witnesses.push_back({{"vertex", v + 1}, {"witness", witness_name(crit.witnesses[v])}});
    o.csv += std::to_string(v + 1) + "," + witness_name(crit.witnesses[v]) + "\n";
  }
  o.doc = {{"finite", crit.finite},
           {"witnesses", std::move(witnesses)},
           {"locally_bipartite", locally_bipartite(g)},
           {"height", height_edge_ideal(g)},
           {"edge_ideal", to_dsl(edge_ideal(g))}};
  o.csv += std::string("finite,") + (crit.finite ? "true" : "false") + "\n";
  if (with_oracle) {
    const auto member = FamilyMember::from_ideal(power(edge_ideal(g), cfg.n_first));
    const bool finite = finiteness_oracle(LocalizationTable(member), 1, scan_options(cfg));
    o.doc["oracle"] = {{"n", cfg.n_first}, {"finite", finite}};
    o.csv += "oracle," + std::to_string(cfg.n_first) + "," + (finite ? "true" : "false") + "\n";
  }
  return o;
}

Output cmd_volume(const Inputs& in, const RunConfig& cfg, bool with_count) {
  const auto outer = parse_ideals(read_source(in.ideal));
  const auto avoid = in.avoid.empty() ? std::vector<MonomialIdeal>{} : parse_ideals(read_source(in.avoid));
  const std::size_t d = outer.front().dim();
  CoConvexRegion region;
  region.outer.dim = d;
  Integer initial = 1;
  for (const auto& ideal : outer) {
    region.outer.add(newton_polyhedron(ideal));
    for (const auto& g : ideal.generators()) initial += static_cast<unsigned long>(g.total_degree());
  }
  for (const auto& ideal : avoid) {
    if (ideal.dim() != d) throw DimensionMismatch("avoided ideal lives in a different ring");
    ConvexRegion r{d, {}};
    r.add(newton_polyhedron(ideal));
    region.inner.push_back(std::move(r));
    for (const auto& g : ideal.generators()) initial += static_cast<unsigned long>(g.total_degree());
  }
  Rational vol;
  region = certify_box(std::move(region), initial, 10, &vol);
  Output o;
  o.doc = {{"volume", to_string(vol)}, {"box_bound", to_string(region.box_bound)}};
  o.csv = "volume," + to_string(vol) + "\n";
  if (with_count) {
    const auto count = lattice_count(region, cfg.n_first);
    o.doc["n"] = cfg.n_first;
    o.doc["lattice_count"] = to_string(count);
    o.csv += "lattice_count," + std::to_string(cfg.n_first) + "," + to_string(count) + "\n";
  }
  return o;
}

void envelope(std::ostream& err, const std::string& code, const std::string& message, const json& location = nullptr) {
  json e{{"code", code}, {"message", message}};
  if (!location.is_null()) e["location"] = location;
  err << json{{"error", e}}.dump() << "\n";
}

}  // namespace

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad n range '" + text + "'");
    return static_cast<std::size_t>(std::stoull(s));
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto n = number(text);
    return {n, n};
  }
  const auto a = number(text.substr(0, dots));
  const auto b = number(text.substr(dots + 2));
  if (a > b) throw std::invalid_argument("empty n range '" + text + "'");
  return {a, b};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  Inputs in;
  if (const char* env = std::getenv("COHOMLEN_THREADS")) {
    try {
      cfg.threads = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      envelope(err, "usage", std::string("COHOMLEN_THREADS is not a number: ") + env);
      return usage;
    }
  }

  CLI::App app{"Lengths of local cohomology of monomial ideal families"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto common = [&](CLI::App* sub, bool needs_ideal) {
    auto* opt = sub->add_option("--ideal", in.ideal, "ideal DSL, inline or a file path");
    if (needs_ideal) opt->required();
    sub->add_option("--i", in.index, "cohomological index")->capture_default_str();
    sub->add_option("--n", in.n, "n or a..b")->capture_default_str();
    sub->add_option("--family", in.family, "powers|sat|intclosure")->capture_default_str();
    sub->add_option("--char", cfg.characteristic, "field characteristic, 0 or a prime")->capture_default_str();
    sub->add_option("--threads", cfg.threads, "worker threads (default from COHOMLEN_THREADS)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "json|csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--out", cfg.output_path, "write the result here instead of stdout");
    sub->add_option("--max-period", cfg.max_period, "largest period tried by the fit")->capture_default_str();
    sub->add_option("--max-degree", cfg.max_degree, "largest degree tried by the fit (default d)");
  };

  auto* length = app.add_subcommand("length", "lambda(H^i) for one n");
  common(length, true);
  auto* sequence = app.add_subcommand("sequence", "lambda(H^i) over a range of n");
  common(sequence, true);
  sequence->add_flag("--growth", in.growth, "append non-certified growth estimates");
  auto* fit = app.add_subcommand("fit", "exact quasi-polynomial fit over --n 1..N");
  common(fit, true);
  auto* genfun = app.add_subcommand("genfun", "rational generating function over --n 1..N");
  common(genfun, true);
  auto* limit = app.add_subcommand("limit", "volume limit for integral-closure powers");
  common(limit, true);
  limit->add_option("--check-n", in.check_n, "n at which finiteness is checked (default d)");
  auto* finite = app.add_subcommand("finite", "finiteness of lambda(H^i) at one n");
  common(finite, true);
  auto* graph_check = app.add_subcommand("graph-check", "edge-ideal finiteness criteria");
  common(graph_check, false);
  graph_check->add_option("--graph", in.graph, "graph DSL, inline or a file path")->required();
  auto* volume = app.add_subcommand("volume", "co-convex volume and lattice counts");
  common(volume, true);
  volume->add_option("--avoid", in.avoid, "ideals whose Newton polyhedra are removed");

  std::vector<const char*> argv{"cohomlen"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    envelope(err, "usage", e.what());
    return usage;
  }

  const bool n_given = [&] {
    for (auto* sub : app.get_subcommands())
      if (sub->count("--n") > 0) return true;
    return false;
  }();

  try {
    std::tie(cfg.n_first, cfg.n_last) = parse_range(in.n);
    (void)FieldSpec(cfg.characteristic);
    Output result;
    if (length->parsed())
      result = cmd_length(in, cfg);
    else if (sequence->parsed())
      result = cmd_sequence(in, cfg);
    else if (fit->parsed())
      result = cmd_fit(in, cfg, false);
    else if (genfun->parsed())
      result = cmd_fit(in, cfg, true);
    else if (limit->parsed())
      result = cmd_limit(in, cfg);
    else if (finite->parsed())
      result = cmd_finite(in, cfg);
    else if (graph_check->parsed())
      result = cmd_graph_check(in, cfg, n_given);
    else
      result = cmd_volume(in, cfg, n_given);

    const std::string text = cfg.format == "csv" ? result.csv : result.doc.dump(2) + "\n";
    if (cfg.output_path.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.output_path);
      if (!file || !(file << text)) {
        envelope(err, "io", "cannot write " + cfg.output_path);
        return usage;
      }
    }
    return ok;
  } catch (const ParseError& e) {
    envelope(err, "parse", e.detail(), {{"line", e.line()}, {"column", e.column()}});
    return usage;
  } catch (const CLI::ValidationError& e) {
    envelope(err, "usage", e.what());
    return usage;
  } catch (const std::ios_base::failure& e) {
    envelope(err, "io", e.what());
    return usage;
  } catch (const ResourceError& e) {
    envelope(err, "resource", e.what());
    return resource;
  } catch (const ConsistencyError& e) {
    envelope(err, "consistency", e.what());
    return consistency;
  } catch (const InsufficientData& e) {
    envelope(err, "insufficient_data", e.what());
    return usage;
  } catch (const Error& e) {
    envelope(err, "domain", e.what());
    return usage;
  } catch (const std::invalid_argument& e) {
    envelope(err, "usage", e.what());
    return usage;
  }
}

}  // namespace cohomlen::cli
