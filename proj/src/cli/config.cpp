#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hessgkm/cli/cli.hpp"
#include "hessgkm/errors.hpp"

namespace hessgkm::cli {

namespace {

int parse_int(const std::string& s, const std::string& what) {
  int v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("bad " + what + ": '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    parts.push_back(b == std::string::npos ? "" : cur.substr(b, e - b + 1));
  }
  return parts;
}

}  // namespace

std::pair<int, int> parse_n_range(const std::string& text) {
  const auto dots = text.find("..");
  int lo = 0;
  int hi = 0;
  if (dots == std::string::npos) {
    lo = hi = parse_int(text, "--n");
  } else {
    lo = parse_int(text.substr(0, dots), "--n");
    hi = parse_int(text.substr(dots + 2), "--n");
  }
  if (lo < 1 || hi < lo) throw UsageError("--n must be a positive value or range lo..hi");
  if (hi > 8) throw UsageError("--n above 8 is out of scope");
  return {lo, hi};
}

SkeletalNilpotent parse_skeletal(const std::string& text, int n) {
  std::map<int, SkeletalNilpotent::Entry> entries;
  for (const auto& item : split(text, ';')) {
    if (item.empty()) continue;
    const auto f = split(item, ',');
    if (f.size() != 3) throw UsageError("skeletal entry must be i,j,p/q: '" + item + "'");
    const int i = parse_int(f[0], "row");
    const int j = parse_int(f[1], "column");
    mpq_class c;
    if (c.set_str(f[2], 10) != 0) throw UsageError("bad coefficient '" + f[2] + "'");
    if (c.get_den() == 0) throw UsageError("zero denominator in '" + f[2] + "'");
    c.canonicalize();
    if (entries.contains(i)) throw UsageError("row " + std::to_string(i) + " given twice");
    entries[i] = {j, c};
  }
  try {
    return SkeletalNilpotent(n, std::move(entries));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::optional<SkeletalNilpotent> resolve_operator(const RunConfig& config, int n) {
  if (!config.skeletal.empty()) return parse_skeletal(config.skeletal, n);
  if (config.op.empty()) return std::nullopt;
  if (config.op == "subregular") {
    if (n < 3) throw UsageError("the subregular operator needs n >= 3");
    return make_subregular(n);
  }
  if (config.op.size() >= 2 && (config.op[0] == 'F' || config.op[0] == 'f')) {
    const int k = parse_int(config.op.substr(1), "--operator");
    if (k < 1 || k > n - 1) {
      throw UsageError("F" + std::to_string(k) + " needs 1 <= k <= n-1 (n = " + std::to_string(n) + ")");
    }
    return make_fk(n, k);
  }
  throw UsageError("unknown operator '" + config.op + "' (expected F<k> or subregular)");
}

std::vector<HessenbergFunction> resolve_hessenberg(const RunConfig& config, int n) {
  if (config.sweep) return enumerate_hessenberg_functions(n);
  if (config.h.empty()) throw UsageError("give --h or --sweep");
  if (static_cast<int>(config.h.size()) != n) {
    throw UsageError("--h has length " + std::to_string(config.h.size()) + " but n = " + std::to_string(n));
  }
  try {
    return {HessenbergFunction(config.h)};
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Subtorus resolve_torus(const std::string& spec, const SkeletalNilpotent& x) {
  const int n = x.size();
  if (spec == "T") return Subtorus::full(n);
  if (spec == "canonical") return canonical_k(x).torus;
  std::vector<Character> chars;
  for (const auto& item : split(spec, ';')) {
    if (item.empty()) continue;
    const auto f = split(item, ',');
    if (static_cast<int>(f.size()) != n) throw UsageError("character '" + item + "' needs " + std::to_string(n) + " entries");
    Character c = Character::zero(n);
    for (int i = 0; i < n; ++i) c.exponents[static_cast<std::size_t>(i)] = parse_int(f[static_cast<std::size_t>(i)], "character entry");
    chars.push_back(std::move(c));
  }
  return subtorus_from_characters(chars, n);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torus actions and GKM graphs of Hessenberg varieties for skeletal nilpotents"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);
  RunConfig config;
  std::string n_text;
  std::string h_text;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", n_text, "dimension or range lo..hi")->required();
    sub->add_option("--operator", config.op, "F<k> or subregular");
    sub->add_option("--skeletal", config.skeletal, "entries i,j,p/q;...");
    sub->add_option("--trials", config.trials, "random samples per task")->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "seed for every sampled quantity");
    sub->add_option("--out", config.out, "write the report to this file");
    sub->add_option("--format", config.format, "json, text or dot")->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--h", h_text, "Hessenberg function h(1),..,h(n)");
    sub->add_flag("--sweep", config.sweep, "all Hessenberg functions");
  };
  auto* classify = app.add_subcommand("classify", "T-stability, GKM and stabilizer bounds per h");
  common(classify);
  auto* verify = app.add_subcommand("verify", "cross-validation suites");
  common(verify);
  verify->add_option("--suite", config.suite, "suite name or 'all'")->required();
  auto* graph = app.add_subcommand("moment-graph", "moment graph of H(X, h)");
  common(graph);
  graph->add_option("--torus", config.torus, "T, canonical, or characters a1,..,an;...");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    std::tie(config.n_min, config.n_max) = parse_n_range(n_text);
    if (!h_text.empty()) {
      for (const auto& part : split(h_text, ',')) config.h.push_back(parse_int(part, "--h"));
    }
    if (!config.op.empty() && !config.skeletal.empty()) throw UsageError("give --operator or --skeletal, not both");
    if (config.sweep && !config.h.empty()) throw UsageError("give --h or --sweep, not both");

    std::ostringstream buffer;
    std::ostringstream summary;
    int code = kOk;
    if (classify->parsed()) {
      config.command = "classify";
      code = cmd_classify(config, buffer, summary);
    } else if (verify->parsed()) {
      config.command = "verify";
      code = cmd_verify(config, buffer, summary);
    } else {
      config.command = "moment-graph";
      code = cmd_moment_graph(config, buffer, summary);
    }
    if (config.out.empty()) {
      out << buffer.str();
    } else {
      std::ofstream file(config.out, std::ios::binary);
      if (!file) throw UsageError("cannot write " + config.out);
      file << buffer.str();
      out << summary.str();
    }
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedDimension& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Unsupported& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotSkeletal& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace hessgkm::cli
