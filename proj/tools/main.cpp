#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pimtc/harness.hpp"
#include "pimtc/report.hpp"
#include "pimtc/synth.hpp"

namespace {

std::optional<std::uint64_t> parse_capacity(const std::string& text) {
  if (text == "auto") return std::nullopt;
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw pimtc::ArgumentError("capacity must be a positive integer or 'auto', got '" +
                               text + "'");
  return value;
}

double parse_double(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw pimtc::ArgumentError(std::string("malformed ") + what + " '" + text + "'");
  }
}

struct SweepSpec {
  pimtc::SweepAxis axis;
  std::vector<double> values;
};

SweepSpec parse_sweep(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos)
    throw pimtc::ArgumentError("sweep spec must look like AXIS=V1,V2,..., got '" +
                               text + "'");
  SweepSpec spec{pimtc::parse_axis(text.substr(0, eq)), {}};
  std::string rest = text.substr(eq + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    std::size_t comma = rest.find(',', pos);
    std::string token = rest.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (token.empty()) throw pimtc::ArgumentError("empty value in sweep spec");
    spec.values.push_back(parse_double(token, "sweep value"));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (spec.values.empty()) throw pimtc::ArgumentError("sweep needs at least one value");
  return spec;
}

void emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw pimtc::IoError("cannot open output file '" + out_path + "'");
  out << body;
  if (!body.empty() && body.back() != '\n') out << '\n';
  if (!out) throw pimtc::IoError("failed writing to '" + out_path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Color-partitioned triangle counting over a simulated PIM backend"};
  app.require_subcommand(0, 1);

  pimtc::RunConfig cfg;
  std::string capacity_text = "auto";
  std::string sweep_text;
  std::string out_path;
  std::string format = "json";
  std::optional<unsigned> dynamic_k;
  std::optional<double> truth;

  app.add_option("--input", cfg.input_path, "COO edge-list file (whitespace pairs; '#'/'%' comments)");
  app.add_option("--colors", cfg.colors,
                 "number of colors C; cores = binom(C+2,3). Full-scale systems use 23 (2300 cores); the default suits desk-scale runs")
      ->capture_default_str();
  app.add_option("--uniform-p", cfg.uniform_p,
                 "uniform edge-sampling probability in (0, 1]")
      ->capture_default_str();
  app.add_option("--capacity", capacity_text,
                 "per-core reservoir capacity in edges, or 'auto'")
      ->capture_default_str();
  app.add_option("--capacity-fraction", cfg.capacity_fraction,
                 "reservoir capacity as a fraction of the expected core load 6|E|/C^2");
  app.add_option("--mg-k", cfg.mg_capacity,
                 "Misra-Gries summary capacity K (0 disables the summary)")
      ->capture_default_str();
  app.add_option("--mg-top", cfg.mg_top,
                 "heavy nodes to remap to the highest ids (0 disables)")
      ->capture_default_str();
  app.add_option("--host-workers", cfg.host_workers, "host-side worker threads")
      ->capture_default_str();
  app.add_option("--core-threads", cfg.core_threads, "threads per simulated core")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "global RNG seed")->capture_default_str();
  app.add_option("--dynamic", dynamic_k,
                 "split the stream into N chunks and re-count after each");
  app.add_option("--sweep", sweep_text,
                 "AXIS=V1,V2,... with AXIS in {colors, uniform_p, capacity_fraction, mg_K, mg_top_t}");
  app.add_option("--truth", truth, "known true triangle count for error columns");
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--format", format, "report format: json or csv")
      ->capture_default_str();

  CLI::App* synth = app.add_subcommand("synth", "generate a synthetic COO graph");
  std::string kind;
  std::string synth_out;
  std::uint64_t synth_seed = 0;
  std::uint64_t er_nodes = 100;
  double er_prob = 0.1;
  pimtc::RmatParams rmat;
  std::uint64_t star_leaves = 100;
  std::uint64_t star_clique = 5;
  synth->add_option("kind", kind, "erdos_renyi | rmat | star_plus_clique")->required();
  synth->add_option("--out", synth_out, "output path")->required();
  synth->add_option("--seed", synth_seed, "generator seed")->capture_default_str();
  synth->add_option("--nodes", er_nodes, "erdos_renyi: node count")->capture_default_str();
  synth->add_option("--edge-prob", er_prob, "erdos_renyi: edge probability")
      ->capture_default_str();
  synth->add_option("--scale", rmat.scale, "rmat: log2 of the node count")
      ->capture_default_str();
  synth->add_option("--edges", rmat.edges, "rmat: edges to draw")->capture_default_str();
  synth->add_option("--a", rmat.a, "rmat: top-left quadrant weight")->capture_default_str();
  synth->add_option("--b", rmat.b, "rmat: top-right quadrant weight")->capture_default_str();
  synth->add_option("--c", rmat.c, "rmat: bottom-left quadrant weight")
      ->capture_default_str();
  synth->add_option("--leaves", star_leaves, "star_plus_clique: leaf count")
      ->capture_default_str();
  synth->add_option("--clique", star_clique, "star_plus_clique: clique size")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (synth->parsed()) {
      pimtc::RawEdgeList graph;
      if (kind == "erdos_renyi") {
        graph = pimtc::gen_erdos_renyi(er_nodes, er_prob, synth_seed);
      } else if (kind == "rmat") {
        graph = pimtc::gen_rmat(rmat, synth_seed);
      } else if (kind == "star_plus_clique") {
        graph = pimtc::gen_star_clique(star_leaves, star_clique);
      } else {
        throw pimtc::ArgumentError("unknown graph kind '" + kind + "'");
      }
      pimtc::write_coo(synth_out, graph);
      return 0;
    }

    if (format != "json" && format != "csv")
      throw pimtc::ArgumentError("format must be json or csv, got '" + format + "'");
    if (cfg.input_path.empty())
      throw pimtc::ArgumentError("--input is required");
    if (dynamic_k && *dynamic_k == 0)
      throw pimtc::ArgumentError("--dynamic needs at least 1 chunk");
    if (dynamic_k && !sweep_text.empty())
      throw pimtc::ArgumentError("--dynamic and --sweep are mutually exclusive");
    cfg.capacity = parse_capacity(capacity_text);
    pimtc::validate_config(cfg);

    std::string body;
    if (!sweep_text.empty()) {
      SweepSpec spec = parse_sweep(sweep_text);
      pimtc::SweepResult result = pimtc::sweep(cfg, spec.axis, spec.values, truth);
      body = format == "json" ? pimtc::sweep_report_json(cfg, result).dump(2)
                              : pimtc::sweep_csv(result);
    } else if (dynamic_k) {
      std::vector<pimtc::RunReport> reports = pimtc::run_dynamic(cfg, *dynamic_k);
      body = format == "json"
                 ? pimtc::run_report_json(cfg, reports, "dynamic").dump(2)
                 : pimtc::run_report_csv(reports);
    } else {
      pimtc::RunReport report = pimtc::run_static(cfg);
      std::vector<pimtc::RunReport> reports{report};
      body = format == "json"
                 ? pimtc::run_report_json(cfg, reports, "static").dump(2)
                 : pimtc::run_report_csv(reports);
    }
    emit(body, out_path);
    return 0;
  } catch (const pimtc::ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const pimtc::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const pimtc::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
