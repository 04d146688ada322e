// graphmetric: realize, embed and inspect finite metric spaces as graph metrics.
//
// Reports go to stdout as JSON, summaries to stderr. Exit status: 0 success,
// 1 negative finding (failed check, violation, unmet precondition), 2 usage or
// input error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "graphmetric/graph.hpp"
#include "graphmetric/metric.hpp"
#include "graphmetric/quadruples.hpp"
#include "graphmetric/realization.hpp"

namespace gm = graphmetric;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
  if (!content.empty() && content.back() != '\n') out << '\n';
}

Json rational_json(const gm::Rational& r) {
  if (r.is_integer()) return r.numerator();
  return r.to_string();
}

int emit(const Json& report, int code) {
  std::cout << report.dump() << '\n';
  return code;
}

struct Options {
  std::string format = "json";
  std::string input;
  std::string out;
  std::string map;
  bool fallback_embed = false;
  bool require_onto = false;
  bool as_graph = false;
  bool mb = false, line = false, plq = false, quad = false;
  std::vector<std::string> labels;
  std::string conjecture;
  std::size_t max_n = 5;
  std::size_t max_violations = 10;
  std::size_t jobs = 1;
};

bool text_format(const Options& o) { return o.format == "text"; }

gm::MetricSpace load_metric(const Options& o) {
  return gm::parse_metric(read_input(o.input), text_format(o) ? gm::MetricFormat::kMatrix : gm::MetricFormat::kJson);
}

gm::Graph load_graph(const Options& o) {
  return gm::parse_graph(read_input(o.input), text_format(o) ? gm::GraphFormat::kText : gm::GraphFormat::kJson);
}

std::string format_graph(const Options& o, const gm::Graph& g) {
  return text_format(o) ? gm::graph_to_text(g) : gm::graph_to_json(g);
}

Json violation_json(const gm::MetricViolation& v) {
  return Json{{"kind", gm::to_string(v.kind())}, {"indices", v.indices()}, {"message", v.what()}};
}

int cmd_validate(const Options& o) {
  Json report{{"command", "validate"}};
  std::optional<gm::MetricSpace> m;
  try {
    m = load_metric(o);
  } catch (const gm::MetricViolation& v) {
    report["metric_valid"] = false;
    report["violation"] = violation_json(v);
    std::cerr << "not a metric: " << v.what() << '\n';
    return emit(report, kNegative);
  }
  report["metric_valid"] = true;
  report["points"] = m->size();
  const bool integer = gm::is_integer_metric(*m);
  report["integer"] = integer;
  if (!integer) {
    report["kay_chartrand"] = Json{{"status", "not_applicable"}};
    std::cerr << "metric is valid but has non-integer distances\n";
    return emit(report, kNegative);
  }
  auto kc = gm::kay_chartrand_check(*m);
  if (kc.passed()) {
    report["kay_chartrand"] = Json{{"status", "pass"}};
    std::cerr << "metric is the geodesic metric of a graph\n";
    return emit(report, kOk);
  }
  auto [x, z] = *kc.witness;
  report["kay_chartrand"] = Json{{"status", "fail"}, {"witness", {m->label(x), m->label(z)}}};
  std::cerr << "no point lies between " << m->label(x) << " and " << m->label(z) << '\n';
  return emit(report, kNegative);
}

enum class Construction { kRealize, kEmbed, kCeilEmbed };

int cmd_construct(const Options& o, Construction which) {
  static const char* names[] = {"realize", "embed", "ceil-embed"};
  Json report{{"command", names[static_cast<int>(which)]}};
  const gm::MetricSpace m = load_metric(o);

  std::optional<gm::RealizationResult> result;
  try {
    switch (which) {
      case Construction::kRealize:
        try {
          result = gm::realize(m);
        } catch (const gm::ConditionFailed& e) {
          if (!o.fallback_embed) throw;
          report["fallback"] = true;
          report["condition_witness"] = {e.pair().first, e.pair().second};
          result = gm::embed(m);
        }
        break;
      case Construction::kEmbed: result = gm::embed(m); break;
      case Construction::kCeilEmbed: result = gm::ceil_embed(m); break;
    }
  } catch (const gm::ConditionFailed& e) {
    report["status"] = "condition_failed";
    report["witness"] = {e.pair().first, e.pair().second};
    std::cerr << e.what() << "; rerun with --fallback-embed or use embed\n";
    return emit(report, kNegative);
  } catch (const gm::NotIntegerMetric& e) {
    report["status"] = "not_integer";
    std::cerr << e.what() << "; use ceil-embed\n";
    return emit(report, kNegative);
  }

  report["status"] = "ok";
  report["vertices"] = result->graph.order();
  report["edges"] = result->graph.size();
  report["aux_count"] = result->aux_count;
  report["verified"] = result->map.verified();
  bool onto_ok = true;
  if (o.require_onto) {
    onto_ok = gm::verify_map(m, result->graph, result->map, true).passed();
    report["onto"] = onto_ok;
    if (!onto_ok) report["status"] = "not_onto";
  }

  if (which == Construction::kCeilEmbed) {
    auto md = gm::geodesic_distances(result->graph);
    gm::Rational worst = 0;
    auto pairs = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        auto gi = result->graph.index_of(result->map.target(m.label(i)));
        auto gj = result->graph.index_of(result->map.target(m.label(j)));
        gm::Rational dg = md.at(gi, gj);
        worst = std::max(worst, dg - m.distance(i, j));
        pairs.push_back(Json{{"x", m.label(i)}, {"y", m.label(j)}, {"d", rational_json(m.distance(i, j))},
                             {"d_G", md.at(gi, gj)}});
      }
    }
    report["distortion"] = Json{{"bounds_hold", !gm::check_ceiling_bounds(m, result->graph, result->map)},
                                {"max_additive", rational_json(worst)},
                                {"pairs", std::move(pairs)}};
  }

  if (!o.out.empty()) {
    write_output(o.out, format_graph(o, result->graph));
  } else {
    report["graph"] = Json::parse(gm::graph_to_json(result->graph));
  }
  if (!o.map.empty()) {
    write_output(o.map, gm::map_to_json(result->map, result->aux_count));
  } else {
    report["map"] = Json::parse(gm::map_to_json(result->map, result->aux_count));
  }
  std::cerr << names[static_cast<int>(which)] << ": " << result->graph.order() << " vertices, "
            << result->graph.size() << " edges, " << result->aux_count << " auxiliary\n";
  return emit(report, onto_ok ? kOk : kNegative);
}

int cmd_distances(const Options& o) {
  const gm::Graph g = load_graph(o);
  gm::MetricSpace m = [&] {
    try {
      return gm::geodesic_metric(g);
    } catch (const gm::Disconnected&) {
      emit(Json{{"command", "distances"}, {"status", "disconnected"}}, kNegative);
      throw;
    }
  }();
  std::cout << (text_format(o) ? gm::metric_to_matrix_text(m) : gm::metric_to_json(m) + "\n");
  return kOk;
}

/// Metric from a metric file or, for graph files, the graph's geodesic metric.
gm::MetricSpace load_metric_or_graph(const Options& o) {
  std::string text = read_input(o.input);
  bool is_graph = o.as_graph;
  if (!text_format(o)) {
    try {
      auto doc = nlohmann::json::parse(text);
      is_graph = doc.is_object() && doc.contains("vertices");
    } catch (const nlohmann::json::parse_error&) {
    }
  }
  if (!is_graph) return gm::parse_metric(text, text_format(o) ? gm::MetricFormat::kMatrix : gm::MetricFormat::kJson);
  return gm::geodesic_metric(gm::parse_graph(text, text_format(o) ? gm::GraphFormat::kText : gm::GraphFormat::kJson));
}

std::vector<std::size_t> quad_points(const gm::MetricSpace& m, const std::vector<std::string>& labels) {
  if (labels.empty()) {
    if (m.size() != 4) throw UsageError("give 4 labels for a space with " + std::to_string(m.size()) + " points");
    return {0, 1, 2, 3};
  }
  if (labels.size() != 4) throw UsageError("expected 4 labels, got " + std::to_string(labels.size()));
  std::vector<std::size_t> out;
  for (const auto& l : labels) out.push_back(m.index_of(l));
  return out;
}

std::vector<std::string> names_of(const gm::MetricSpace& m, auto indices) {
  std::vector<std::string> out;
  for (std::size_t i : indices) out.push_back(m.label(i));
  return out;
}

int cmd_check(const Options& o) {
  if (o.mb + o.line + o.plq + o.quad != 1) throw UsageError("choose exactly one of --mb, --line, --plq, --quad-ineq");
  Json report{{"command", "check"}};
  gm::MetricSpace m = [&] {
    try {
      return load_metric_or_graph(o);
    } catch (const gm::Disconnected&) {
      report["status"] = "disconnected";
      emit(report, kNegative);
      throw;
    }
  }();

  if (o.mb) {
    report["check"] = "mb";
    auto r = gm::mb_check(m);
    if (r.passed()) {
      report["status"] = "pass";
      return emit(report, kOk);
    }
    report["status"] = "fail";
    report["witness"] = names_of(m, *r.witness);
    std::cerr << "d(x,z) >= max(d(x,y), d(y,z)) without additivity at (x,y,z) = (" << m.label((*r.witness)[0])
              << ", " << m.label((*r.witness)[1]) << ", " << m.label((*r.witness)[2]) << ")\n";
    return emit(report, kNegative);
  }
  if (o.line) {
    report["check"] = "line";
    auto coords = gm::line_embed(m);
    if (!coords) {
      report["status"] = "not_embeddable";
      return emit(report, kNegative);
    }
    report["status"] = "embeddable";
    Json c = Json::object();
    for (std::size_t i = 0; i < m.size(); ++i) c[m.label(i)] = rational_json((*coords)[i]);
    report["coordinates"] = std::move(c);
    return emit(report, kOk);
  }
  auto points = quad_points(m, o.labels);
  if (o.plq) {
    report["check"] = "plq";
    auto c = gm::plq_classify(m, points);
    if (!c.is_plq()) {
      report["status"] = "not_plq";
      return emit(report, kNegative);
    }
    report["status"] = "plq";
    report["s"] = rational_json(c.plq->s);
    report["t"] = rational_json(c.plq->t);
    report["equilateral"] = c.equilateral;
    report["ordering"] = names_of(m, c.plq->ordering);
    return emit(report, kOk);
  }
  report["check"] = "quad_ineq";
  auto q = gm::quad_inequality(m, points);
  report["ordering"] = names_of(m, points);
  report["lhs"] = rational_json(q.lhs);
  report["bound"] = rational_json(q.bound);
  report["slack"] = rational_json(q.slack);
  return emit(report, kOk);
}

int cmd_search(const Options& o) {
  gm::SearchOptions s;
  if (o.conjecture == "4.2") {
    s.conjecture = gm::ConjectureId::kC42;
  } else if (o.conjecture == "4.4") {
    s.conjecture = gm::ConjectureId::kC44;
  } else {
    throw UsageError("--conjecture must be 4.2 or 4.4");
  }
  s.max_n = o.max_n;
  s.max_violations = o.max_violations;
  s.jobs = o.jobs;
  auto report = gm::search(s);
  std::cerr << "checked " << report.graphs_checked << " graphs, " << report.violations_found << " violations\n";
  std::cout << gm::report_to_json(report) << '\n';
  return report.violations_found == 0 ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph realizations of finite metric spaces"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "File format of inputs and written graphs")
        ->check(CLI::IsMember({"json", "text"}));
  };

  auto* validate = app.add_subcommand("validate", "Check metric axioms, integrality and the betweenness condition");
  validate->add_option("file", o.input, "Metric file ('-' for stdin)")->required();
  add_format(validate);

  std::vector<std::pair<CLI::App*, Construction>> constructions;
  for (auto [name, which, help] : {
           std::tuple{"realize", Construction::kRealize, "Graph whose geodesic metric equals the metric"},
           std::tuple{"embed", Construction::kEmbed, "Isometric embedding of an integer metric into a graph"},
           std::tuple{"ceil-embed", Construction::kCeilEmbed, "Embedding of the ceiling metric (distortion < 1)"},
       }) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.input, "Metric file ('-' for stdin)")->required();
    sub->add_option("--out", o.out, "Write the graph here");
    sub->add_option("--map", o.map, "Write the point-to-vertex map here");
    sub->add_flag("--require-onto", o.require_onto, "Fail unless every graph vertex is the image of a point");
    add_format(sub);
    if (which == Construction::kRealize) {
      sub->add_flag("--fallback-embed", o.fallback_embed, "Embed instead when the condition fails");
    }
    constructions.emplace_back(sub, which);
  }

  auto* distances = app.add_subcommand("distances", "Geodesic distance matrix of a connected graph");
  distances->add_option("file", o.input, "Graph file ('-' for stdin)")->required();
  add_format(distances);

  auto* check = app.add_subcommand("check", "Four-point and betweenness checks on a metric or graph");
  check->add_option("file", o.input, "Metric or graph file ('-' for stdin)")->required();
  check->add_option("labels", o.labels, "Four point labels for --plq / --quad-ineq");
  check->add_flag("--mb", o.mb, "Additivity class membership");
  check->add_flag("--line", o.line, "Isometric embedding into the real line");
  check->add_flag("--plq", o.plq, "Pseudo-linear quadruple classification");
  check->add_flag("--quad-ineq", o.quad, "Four-point p^2/8 inequality");
  check->add_flag("--graph", o.as_graph, "Treat a text-format input as a graph edge list");
  add_format(check);

  auto* search = app.add_subcommand("search", "Check a conjecture over all small connected graphs");
  search->add_option("--conjecture", o.conjecture, "4.2 or 4.4")->required();
  search->add_option("--max-n", o.max_n, "Largest vertex count (at most 8)");
  search->add_option("--max-violations", o.max_violations, "Violations to list");
  search->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(o);
    for (auto [sub, which] : constructions)
      if (sub->parsed()) return cmd_construct(o, which);
    if (distances->parsed()) return cmd_distances(o);
    if (check->parsed()) return cmd_check(o);
    if (search->parsed()) return cmd_search(o);
  } catch (const gm::Disconnected& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNegative;
  } catch (const gm::InternalVerificationFailure& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
