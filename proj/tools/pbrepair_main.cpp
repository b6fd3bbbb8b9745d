#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pbr/driver/bench.hpp"
#include "pbr/driver/pbrepair.hpp"
#include "pbr/driver/report.hpp"
#include "pbr/error.hpp"
#include "pbr/lang/parser.hpp"
#include "pbr/lang/printer.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw pbr::Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw pbr::Error("cannot write " + path);
  out << text;
}

pbr::LineRange parse_region(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    const int first = std::stoi(text.substr(0, dots), &used);
    if (used != (dots == std::string::npos ? text.size() : dots)) throw std::invalid_argument(text);
    int last = first;
    if (dots != std::string::npos) {
      const std::string tail = text.substr(dots + 2);
      last = std::stoi(tail, &used);
      if (used != tail.size()) throw std::invalid_argument(text);
    }
    return {first, last};
  } catch (const std::logic_error&) {
    throw pbr::Error("bad region '" + text + "', expected L or L1..L2");
  }
}

void add_common(CLI::App& app, pbr::RepairOptions& o) {
  app.add_option("--width", o.width, "Bit width of all words")->capture_default_str()->check(CLI::Range(1, 32));
  app.add_option("--unroll", o.unroll, "Loop unrolling bound")->capture_default_str();
  app.add_option("--max-iters", o.max_iters, "Iteration cap of the repair loop")->capture_default_str();
  app.add_option("--node-limit", o.node_limit, "BDD node cap")->capture_default_str();
}

int repair_main(int argc, char** argv) {
  CLI::App app{"Path-based repair of a fault region"};
  std::string file, region_text, report_path, emit_path;
  bool trace = false;
  pbr::RepairOptions options;
  app.add_option("file", file, "Program to repair")->required();
  app.add_option("--region", region_text, "Fault region: statement L or range L1..L2")->required();
  add_common(app, options);
  app.add_option("--report", report_path, "Write a JSON run report");
  app.add_option("--emit", emit_path, "Write the final program");
  app.add_flag("--trace", trace, "Print annotated counterexamples and candidates");
  CLI11_PARSE(app, argc, argv);

  try {
    const auto program = pbr::parse_program(read_file(file), options.width);
    if (trace) options.trace = &std::cout;
    const auto report = pbr::pbrepair(program, parse_region(region_text), options);

    std::cout << "outcome: " << pbr::to_string(report.outcome) << " after " << report.iterations.size()
              << " iteration(s)\n";
    for (const auto& it : report.iterations)
      std::cout << "  " << it.path << " [" << (it.realizable ? std::to_string(it.gates) : "-") << "]\n";
    if (!report.message.empty()) std::cout << report.message << '\n';
    if (report.outcome == pbr::Outcome::Unrealizable) {
      std::cout << "witness:";
      for (const auto& [var, value] : report.witness) std::cout << ' ' << var << '=' << value;
      std::cout << '\n';
    }
    if (report.outcome == pbr::Outcome::Repaired) std::cout << pbr::emit(report.program);
    if (!report_path.empty()) write_file(report_path, pbr::report_json(report));
    if (!emit_path.empty()) write_file(emit_path, pbr::emit(report.program));
    return pbr::exit_code(report.outcome);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

int bench_main(int argc, char** argv) {
  CLI::App app{"Seed faults into a correct program and repair each one"};
  std::string file, report_path;
  unsigned jobs = 1;
  pbr::RepairOptions options;
  app.add_option("file", file, "Correct program")->required();
  add_common(app, options);
  app.add_option("--report", report_path, "Write a JSON report of all runs");
  app.add_option("--jobs", jobs, "Concurrent repair runs")->capture_default_str()->check(CLI::Range(1, 256));
  CLI11_PARSE(app, argc, argv);

  try {
    const auto program = pbr::parse_program(read_file(file), options.width);
    const auto rows = pbr::bench(program, options, jobs);
    std::cout << pbr::bench_table(rows);
    if (!report_path.empty()) write_file(report_path, pbr::bench_json(rows));
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.report.outcome == pbr::Outcome::Repaired && r.verified;
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1 && std::string(argv[1]) == "bench") return bench_main(argc - 1, argv + 1);
  return repair_main(argc, argv);
}
