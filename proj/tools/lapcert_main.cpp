// Command-line front end; talks to the core exclusively through the C API.

#include <sys/stat.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lapcert.h"

namespace {

bool file_exists(const std::string& path) {
  struct stat st{};
  return stat(path.c_str(), &st) == 0 && S_ISREG(st.st_mode);
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open " << path << "\n";
    std::exit(2);
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_line(const std::string& content) {
  std::stringstream ss(content);
  std::string line;
  while (std::getline(ss, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty() && line[0] != '#') return line;
  }
  return "";
}

bool looks_like_edge_list(const std::string& content) {
  std::stringstream ls(first_line(content));
  long long a, b;
  std::string extra;
  return static_cast<bool>(ls >> a >> b) && !(ls >> extra);
}

[[noreturn]] void fail(const char* context) {
  std::cerr << "error: " << context << ": " << lapcert_last_error() << "\n";
  std::exit(2);
}

// A positional that names a file loads from it; otherwise it is taken as a
// family spec ("path:10") or a bare graph6 string.
lapcert_graph* load_graph(const std::string& input, bool strict) {
  lapcert_graph* g = nullptr;
  if (file_exists(input) || input == "-") {
    std::string content = read_all(input);
    if (looks_like_edge_list(content)) {
      if (lapcert_graph_from_edge_list(content.c_str(), &g) != LAPCERT_OK)
        fail(input.c_str());
    } else {
      std::string line = first_line(content);
      if (lapcert_graph_from_graph6(line.c_str(), strict ? 1 : 0, &g) != LAPCERT_OK)
        fail(input.c_str());
    }
    return g;
  }
  if (lapcert_graph_from_family(input.c_str(), &g) == LAPCERT_OK) return g;
  if (lapcert_graph_from_graph6(input.c_str(), strict ? 1 : 0, &g) == LAPCERT_OK)
    return g;
  fail(input.c_str());
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian-spectrum certificates for graph invariants"};
  app.require_subcommand(1);

  // --- scan ---
  auto* scan_cmd = app.add_subcommand(
      "scan", "evaluate certificates vs exact invariants over a corpus");
  std::vector<std::string> inputs;
  int samples = 200, workers = 0;
  std::uint64_t seed = 0;
  std::string format = "json", out_path;
  double tolerance = 1e-9, theta_scale = 1.0;
  bool strict = false;
  int alpha_cap = -1, chi_cap = -1, ham_cap = -1, subset_cap = -1, fwd_cap = -1;
  scan_cmd->add_option("--input", inputs,
                       "graph6 file, edge-list file, or family spec "
                       "(family specs accept one n1..n2 range)")
      ->required();
  scan_cmd->add_option("--samples", samples, "subset-pair samples per graph");
  scan_cmd->add_option("--seed", seed, "global RNG seed");
  scan_cmd->add_option("--format", format, "json or csv");
  scan_cmd->add_option("--out", out_path, "write the report here instead of stdout");
  scan_cmd->add_option("--tolerance", tolerance, "inequality comparison slack");
  scan_cmd->add_option("--theta-scale", theta_scale,
                       "multiply theta by this factor (negative-control hook)");
  scan_cmd->add_option("--workers", workers,
                       "worker threads (default: LAPCERT_WORKERS or 1)");
  scan_cmd->add_flag("--strict", strict, "reject nonzero graph6 padding bits");
  scan_cmd->add_option("--alpha-cap", alpha_cap, "independence-number oracle size cap");
  scan_cmd->add_option("--chi-cap", chi_cap, "chromatic-number oracle size cap");
  scan_cmd->add_option("--ham-cap", ham_cap, "exact hamiltonicity size cap");
  scan_cmd->add_option("--subset-cap", subset_cap, "subset-enumeration size cap");
  scan_cmd->add_option("--forwarding-cap", fwd_cap, "forwarding-index size cap");

  // --- encode / decode ---
  auto* encode_cmd = app.add_subcommand("encode", "edge list -> graph6");
  std::string encode_input;
  encode_cmd->add_option("input", encode_input, "edge-list file or - for stdin")
      ->required();

  auto* decode_cmd = app.add_subcommand("decode", "graph6 -> edge list");
  std::string decode_input;
  bool decode_strict = false;
  decode_cmd->add_option("input", decode_input, "graph6 file, string, or - for stdin")
      ->required();
  decode_cmd->add_flag("--strict", decode_strict,
                       "reject nonzero graph6 padding bits");

  // --- spectrum ---
  auto* spectrum_cmd = app.add_subcommand("spectrum", "print Laplacian eigenvalues");
  std::string spectrum_input;
  spectrum_cmd->add_option("input", spectrum_input, "graph file or family spec")
      ->required();

  CLI11_PARSE(app, argc, argv);

  if (scan_cmd->parsed()) {
    std::string cfg = "{\"sources\": [";
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (i) cfg += ", ";
      cfg += json_escape(inputs[i]);
    }
    cfg += "], \"samples\": " + std::to_string(samples);
    cfg += ", \"seed\": " + std::to_string(seed);
    cfg += ", \"tolerance\": " + json_double(tolerance);
    cfg += ", \"theta_scale\": " + json_double(theta_scale);
    cfg += ", \"format\": " + json_escape(format);
    if (!out_path.empty()) cfg += ", \"out\": " + json_escape(out_path);
    cfg += ", \"workers\": " + std::to_string(workers);
    if (strict) cfg += ", \"strict_graph6\": true";
    std::string caps;
    auto add_cap = [&](const char* key, long long v) {
      if (v < 0) return;
      if (!caps.empty()) caps += ", ";
      caps += std::string("\"") + key + "\": " + std::to_string(v);
    };
    add_cap("alpha_max_n", alpha_cap);
    add_cap("chi_max_n", chi_cap);
    add_cap("ham_exact_max_n", ham_cap);
    add_cap("subset_enum_max_n", subset_cap);
    add_cap("forwarding_max_n", fwd_cap);
    if (!caps.empty()) cfg += ", \"caps\": {" + caps + "}";
    cfg += "}";

    char* report = nullptr;
    int64_t violations = 0;
    if (lapcert_scan_json(cfg.c_str(), &report, &violations) != LAPCERT_OK)
      fail("scan");
    if (out_path.empty()) std::fputs(report, stdout);
    lapcert_string_free(report);
    if (violations > 0) {
      std::cerr << "scan: " << violations << " violation(s) found\n";
      return 1;
    }
    return 0;
  }

  if (encode_cmd->parsed()) {
    std::string content = read_all(encode_input);
    lapcert_graph* g = nullptr;
    if (lapcert_graph_from_edge_list(content.c_str(), &g) != LAPCERT_OK)
      fail(encode_input.c_str());
    char* text = nullptr;
    if (lapcert_graph_to_graph6(g, &text) != LAPCERT_OK) fail("encode");
    std::printf("%s\n", text);
    lapcert_string_free(text);
    lapcert_graph_free(g);
    return 0;
  }

  if (decode_cmd->parsed()) {
    std::string line = decode_input;
    if (file_exists(decode_input) || decode_input == "-")
      line = first_line(read_all(decode_input));
    lapcert_graph* g = nullptr;
    if (lapcert_graph_from_graph6(line.c_str(), decode_strict ? 1 : 0, &g) !=
        LAPCERT_OK)
      fail(decode_input.c_str());
    char* text = nullptr;
    if (lapcert_graph_to_edge_list(g, &text) != LAPCERT_OK) fail("decode");
    std::fputs(text, stdout);
    lapcert_string_free(text);
    lapcert_graph_free(g);
    return 0;
  }

  if (spectrum_cmd->parsed()) {
    lapcert_graph* g = load_graph(spectrum_input, false);
    int n = lapcert_graph_vertex_count(g);
    std::vector<double> values(static_cast<std::size_t>(n));
    if (lapcert_spectrum(g, values.data()) != LAPCERT_OK) fail("spectrum");
    for (double v : values) std::printf("%.12g\n", v);
    lapcert_graph_free(g);
    return 0;
  }

  return 0;
}
