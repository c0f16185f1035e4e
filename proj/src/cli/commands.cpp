#include <functional>
#include <ostream>
#include <set>
#include <sstream>

#include "hessgkm/classify/f2.hpp"
#include "hessgkm/classify/moment_graph.hpp"
#include "hessgkm/classify/varieties.hpp"
#include "hessgkm/cli/cli.hpp"
#include "hessgkm/errors.hpp"
#include "hessgkm/hess/column_test.hpp"
#include "hessgkm/hess/membership.hpp"
#include "hessgkm/hess/sampling.hpp"
#include "hessgkm/hess/stabilizer.hpp"
#include "hessgkm/io/json_io.hpp"
#include "hessgkm/util/parallel.hpp"

namespace hessgkm::cli {

using io::Json;

namespace {

std::string operator_label(const RunConfig& c) { return c.skeletal.empty() ? c.op : "skeletal:" + c.skeletal; }

void reject_dot(const RunConfig& c) {
  if (c.format == "dot") throw UsageError("--format dot is only available for moment-graph");
}

std::string bounds_text(const StabilizerEstimate& e) {
  std::ostringstream s;
  s << "K codim " << e.lower.codimension() << ", upper codim " << e.upper.codimension()
    << (e.determined() ? " (determined)" : "");
  return s.str();
}

// ---- verify --------------------------------------------------------------

struct Check {
  Check(std::string s, std::string c, int dim) : suite(std::move(s)), name(std::move(c)), n(dim) {}

  std::string suite;
  std::string name;
  int n = 0;
  int instances = 0;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
  bool pass() const { return failures == 0 && instances > 0; }
};

using SuiteFn = std::function<std::vector<Check>(const RunConfig&, int n)>;

struct Suite {
  const char* name;
  int min_n;
  SuiteFn run;
  bool in_all = true;
};

std::vector<Check> suite_f2_tstable(const RunConfig& c, int n) {
  Check check("f2-tstable", "closed-form-vs-search", n);
  const auto hs = enumerate_hessenberg_functions(n);
  const auto results = parallel_map(hs.size(), [&](std::size_t i) -> std::string {
    const auto closed = classify_f2_tstable(hs[i]);
    const auto brute = brute_f2_tstable(hs[i], c.trials, derive_seed(c.seed, i));
    if (closed.t_stable != brute.t_stable) return "verdicts differ";
    if (closed.t_stable) return "";
    if (!brute.witness) return "search found no witness";
    const FlagMatrix cert = instability_certificate(closed);
    const SkeletalNilpotent x = make_fk(n, 2);
    if (!member(cert, x, hs[i])) return "certificate is not a member";
    if (!column_test(cert, x, hs[i]).full_torus_obstructed) return "certificate is not obstructed";
    return "";
  });
  for (std::size_t i = 0; i < hs.size(); ++i) {
    ++check.instances;
    if (!results[i].empty()) check.fail(hs[i].to_string() + ": " + results[i]);
  }
  return {check};
}

std::vector<Check> suite_f2_gkm(const RunConfig&, int n) {
  Check check("f2-gkm", "closed-form-vs-locked-pair-scan", n);
  for (const auto& h : enumerate_hessenberg_functions(n)) {
    ++check.instances;
    if (classify_f2_gkm(h) != brute_f2_gkm(h).gkm) check.fail(h.to_string());
  }
  return {check};
}

Check max_subtorus_check(const RunConfig& c, const char* suite, int n, int k) {
  Check check(suite, "F" + std::to_string(k) + "-canonical-is-maximal", n);
  const auto v = max_subtorus_fk(k, HessenbergFunction::shifted(n, 1), c.trials, c.seed);
  ++check.instances;
  if (!v.certified) check.fail("bounds do not coincide");
  else if (!(v.upper == canonical_k(make_fk(n, k)).torus)) check.fail("maximal torus differs from canonical K");
  return check;
}

std::vector<Check> suite_peterson(const RunConfig& c, int n) {
  Check check = max_subtorus_check(c, "peterson", n, n - 1);
  Check codim("peterson", "codimension-n-2", n);
  ++codim.instances;
  const int got = canonical_k(make_fk(n, n - 1)).torus.codimension();
  if (got != n - 2) codim.fail("codimension " + std::to_string(got));
  return {check, codim};
}

std::vector<Check> suite_max_subtorus(const RunConfig& c, int n) {
  std::vector<Check> out;
  for (int k = 1; k <= n - 1; ++k) out.push_back(max_subtorus_check(c, "max-subtorus", n, k));
  return out;
}

SkeletalNilpotent operator_or_random(const RunConfig& c, int n, std::mt19937_64& rng) {
  if (auto x = resolve_operator(c, n)) return *x;
  return random_skeletal(n, rng);
}

std::vector<Check> suite_action(const RunConfig& c, int n) {
  Check codim("action", "canonical-codimension", n);
  Check action("action", "canonical-torus-preserves-members", n);
  for (int i = 0; i < c.trials; ++i) {
    std::mt19937_64 rng(derive_seed(c.seed, static_cast<std::uint64_t>(i)));
    const SkeletalNilpotent x = operator_or_random(c, n, rng);
    const HessenbergFunction h = random_hessenberg_function(n, rng);
    const auto k = canonical_k(x);
    ++codim.instances;
    if (k.torus.codimension() != std::max(x.rank() - 1, 0)) codim.fail("X rank " + std::to_string(x.rank()));
    const auto g = random_member(x, h, rng);
    if (!g) continue;
    for (int p = 0; p < 10; ++p) {
      ++action.instances;
      const auto t = k.torus.sample_point(rng);
      if (!member(act_by_torus(t, g->matrix()), x, h)) action.fail("h " + h.to_string());
    }
  }
  return {codim, action};
}

std::vector<Check> suite_short_last_row(const RunConfig& c, int n) {
  std::vector<int> values(static_cast<std::size_t>(n), n - 1);
  values.back() = n;
  const HessenbergFunction h(values);
  std::vector<Check> out;
  for (int k = 1; k <= n - 1; ++k) {
    const SkeletalNilpotent x = make_fk(n, k);
    Check stable("short-last-row", "F" + std::to_string(k) + "-T-stable", n);
    Check pivot("short-last-row", "F" + std::to_string(k) + "-last-pivot-below-k", n);
    std::mt19937_64 rng(derive_seed(c.seed, static_cast<std::uint64_t>(k)));
    const auto cells = fixed_points(x, h);
    std::vector<FlagMatrix> members;
    for (const auto& w : cells) members.push_back(cell_point(w, {}));
    for (int i = 0; i < c.trials; ++i) {
      FlagMatrix g = random_cell_point(cells[rng() % cells.size()], rng, 0.3);
      if (member(g, x, h)) members.push_back(std::move(g));
    }
    for (const auto& g : members) {
      ++pivot.instances;
      if (g.pivots()(n) <= k) pivot.fail("pivot " + std::to_string(g.pivots()(n)));
      for (int t = 0; t < 50; ++t) {
        ++stable.instances;
        if (!member(act_by_torus(random_torus_element(n, rng), g.matrix()), x, h)) {
          stable.fail("cell " + g.pivots().to_string());
        }
      }
    }
    out.push_back(stable);
    out.push_back(pivot);
  }
  return out;
}

std::vector<Check> suite_flag_reduction(const RunConfig& c, int n) {
  std::vector<int> values(static_cast<std::size_t>(n), n - 1);
  values.back() = n;
  const HessenbergFunction h(values);
  const SkeletalNilpotent x = make_fk(n, n - 1);

  Check fixed("flag-reduction", "fixed-points-fix-n", n);
  std::set<Permutation> expected;
  for (const auto& w : all_permutations(n)) {
    if (w(n) == n) expected.insert(w);
  }
  const auto cells = fixed_points(x, h);
  ++fixed.instances;
  if (std::set<Permutation>(cells.begin(), cells.end()) != expected) {
    fixed.fail(std::to_string(cells.size()) + " fixed points");
  }

  Check cells_check("flag-reduction", "union-of-schubert-cells", n);
  for (const auto& r : union_of_schubert_check(x, h, c.trials, c.seed)) {
    ++cells_check.instances;
    if (r.status != CellContainment::Contained) cells_check.fail("cell " + r.w.to_string());
  }

  Check graph("flag-reduction", "graph-matches-full-flags-n-1", n);
  ++graph.instances;
  const auto reduced = drop_last_index(moment_graph(x, h, Subtorus::full(n)));
  const auto full = moment_graph(SkeletalNilpotent(n - 1), HessenbergFunction::full(n - 1), Subtorus::full(n - 1));
  if (!reduced || !same_graph(*reduced, full)) graph.fail("graphs differ");
  return {fixed, cells_check, graph};
}

std::vector<Check> suite_first_row_one(const RunConfig& c, int n) {
  std::vector<int> values(static_cast<std::size_t>(n), n);
  values.front() = 1;
  const HessenbergFunction h(values);
  Check stable("first-row-one", "T-stable", n);
  Check vacuous("first-row-one", "column-test-unobstructed", n);
  for (int i = 0; i < c.trials; ++i) {
    std::mt19937_64 rng(derive_seed(c.seed, static_cast<std::uint64_t>(i)));
    const SkeletalNilpotent x = operator_or_random(c, n, rng);
    const auto g = random_member(x, h, rng);
    if (!g) continue;
    ++vacuous.instances;
    if (column_test(*g, x, h).full_torus_obstructed) vacuous.fail("cell " + g->pivots().to_string());
    for (int t = 0; t < 10; ++t) {
      ++stable.instances;
      if (!member(act_by_torus(random_torus_element(n, rng), g->matrix()), x, h)) {
        stable.fail("cell " + g->pivots().to_string());
      }
    }
  }
  return {stable, vacuous};
}

// Tests the claim that H(X, h) is T-stable for the given operator and h.
// A constraint found by the column test, or a member pushed out by a torus
// element, refutes it.
std::vector<Check> suite_t_stable(const RunConfig& c, int n) {
  const auto x = resolve_operator(c, n);
  if (!x) throw UsageError("suite t-stable needs --operator or --skeletal");
  std::vector<Check> out;
  const auto hs = resolve_hessenberg(c, n);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    Check check("t-stable", "h=" + hs[i].to_string(), n);
    std::mt19937_64 rng(derive_seed(c.seed, i));
    const auto bounds = stabilizer_estimate(*x, hs[i], c.trials, derive_seed(c.seed, i));
    ++check.instances;
    if (!bounds.upper.is_full()) check.fail("members force " + bounds.upper.to_string());
    for (int s = 0; s < c.trials; ++s) {
      const auto g = random_member(*x, hs[i], rng);
      if (!g) continue;
      ++check.instances;
      if (!member(act_by_torus(random_torus_element(n, rng), g->matrix()), *x, hs[i])) {
        check.fail("cell " + g->pivots().to_string() + " leaves under T");
      }
    }
    out.push_back(std::move(check));
  }
  return out;
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"f2-tstable", 4, suite_f2_tstable},
      {"f2-gkm", 4, suite_f2_gkm},
      {"peterson", 2, suite_peterson},
      {"max-subtorus", 2, suite_max_subtorus},
      {"action", 1, suite_action},
      {"short-last-row", 2, suite_short_last_row},
      {"flag-reduction", 3, suite_flag_reduction},
      {"first-row-one", 2, suite_first_row_one},
      {"t-stable", 1, suite_t_stable, false},
  };
  return all;
}

}  // namespace

int cmd_classify(const RunConfig& c, std::ostream& out, std::ostream& summary) {
  reject_dot(c);
  if (c.op.empty() && c.skeletal.empty()) throw UsageError("classify needs --operator or --skeletal");
  struct Row {
    int n;
    HessenbergFunction h;
    std::optional<StabilityVerdict> stability;
    std::optional<bool> gkm;
    StabilizerEstimate bounds;
  };
  std::vector<Row> rows;
  for (int n = c.n_min; n <= c.n_max; ++n) {
    const SkeletalNilpotent x = *resolve_operator(c, n);
    const bool f2 = c.skeletal.empty() && (c.op == "F2" || c.op == "f2");
    if (f2 && n < 4) throw UsageError("the F2 classification needs n >= 4");
    const auto hs = resolve_hessenberg(c, n);
    auto batch = parallel_map(hs.size(), [&](std::size_t i) {
      Row r{n, hs[i], std::nullopt, std::nullopt, StabilizerEstimate{}};
      std::vector<FlagMatrix> known;
      if (f2) {
        r.stability = classify_f2_tstable(hs[i]);
        r.gkm = classify_f2_gkm(hs[i]);
        if (!r.stability->t_stable) known.push_back(instability_certificate(*r.stability));
      }
      r.bounds = stabilizer_estimate(x, hs[i], c.trials, derive_seed(c.seed, i), known);
      return r;
    });
    rows.insert(rows.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
  }

  int stable = 0;
  for (const auto& r : rows) stable += r.stability && r.stability->t_stable;
  summary << rows.size() << " rows";
  if (rows.front().stability) summary << ", " << stable << " T-stable";
  summary << "\n";

  if (c.format == "text") {
    for (const auto& r : rows) {
      out << "n=" << r.n << " h=" << r.h.to_string();
      if (r.stability) {
        if (r.stability->t_stable) {
          out << " T-stable (condition " << r.stability->condition << ")";
        } else {
          out << " not T-stable [" << to_string(*r.stability->row) << "; witness "
              << r.stability->witness->to_string() << "]";
        }
      }
      if (r.gkm) out << " gkm=" << (*r.gkm ? "yes" : "no");
      out << " | " << bounds_text(r.bounds) << "\n";
    }
    return kOk;
  }
  Json doc = io::document("classify");
  doc["operator"] = operator_label(c);
  doc["seed"] = c.seed;
  doc["trials"] = c.trials;
  Json table = Json::array();
  for (const auto& r : rows) {
    Json row = {{"n", r.n}, {"h", io::to_json(r.h)}};
    if (r.stability) row["t_stability"] = io::to_json(*r.stability);
    if (r.gkm) row["gkm"] = *r.gkm;
    row["stabilizer"] = io::to_json(r.bounds);
    table.push_back(std::move(row));
  }
  doc["rows"] = std::move(table);
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& summary) {
  reject_dot(c);
  std::vector<const Suite*> chosen;
  for (const auto& s : suites()) {
    if ((c.suite == "all" && s.in_all) || c.suite == s.name) chosen.push_back(&s);
  }
  if (chosen.empty()) {
    std::string names;
    for (const auto& s : suites()) names += std::string(" ") + s.name;
    throw UsageError("unknown suite '" + c.suite + "'; choose all or one of:" + names);
  }
  if (chosen.size() == 1 && c.n_min < chosen.front()->min_n) {
    throw UsageError(std::string("suite ") + chosen.front()->name + " needs n >= " +
                     std::to_string(chosen.front()->min_n));
  }
  std::vector<Check> checks;
  for (const auto* s : chosen) {
    for (int n = std::max(c.n_min, s->min_n); n <= c.n_max; ++n) {
      for (auto& ch : s->run(c, n)) checks.push_back(std::move(ch));
    }
  }
  bool all_pass = !checks.empty();
  for (const auto& ch : checks) all_pass = all_pass && ch.pass();
  int passed = 0;
  for (const auto& ch : checks) passed += ch.pass();
  summary << passed << "/" << checks.size() << " checks passed\n";

  if (c.format == "text") {
    for (const auto& ch : checks) {
      out << (ch.pass() ? "PASS " : "FAIL ") << ch.suite << " " << ch.name << " n=" << ch.n
          << " instances=" << ch.instances << " failures=" << ch.failures;
      if (!ch.first_failure.empty()) out << " first: " << ch.first_failure;
      out << "\n";
    }
  } else {
    Json doc = io::document("verify");
    doc["suite"] = c.suite;
    doc["n"] = {c.n_min, c.n_max};
    doc["operator"] = operator_label(c);
    doc["seed"] = c.seed;
    doc["trials"] = c.trials;
    Json list = Json::array();
    for (const auto& ch : checks) {
      Json j = {{"suite", ch.suite}, {"check", ch.name}, {"n", ch.n}, {"instances", ch.instances},
                {"failures", ch.failures}, {"pass", ch.pass()}};
      if (!ch.first_failure.empty()) j["first_failure"] = ch.first_failure;
      list.push_back(std::move(j));
    }
    doc["checks"] = std::move(list);
    doc["pass"] = all_pass;
    out << doc.dump(2) << "\n";
  }
  return all_pass ? kOk : kVerificationFailed;
}

int cmd_moment_graph(const RunConfig& c, std::ostream& out, std::ostream& summary) {
  if (c.n_min != c.n_max) throw UsageError("moment-graph needs a single --n");
  if (c.sweep) throw UsageError("moment-graph takes a single --h");
  const int n = c.n_min;
  const auto x = resolve_operator(c, n);
  if (!x) throw UsageError("moment-graph needs --operator or --skeletal");
  const HessenbergFunction h = resolve_hessenberg(c, n).front();
  const Subtorus torus = resolve_torus(c.torus, *x);
  const MomentGraph g = moment_graph(*x, h, torus);

  summary << g.vertices.size() << " vertices, " << g.edges.size() << " edges, complete="
          << (g.complete ? "true" : "false") << "\n";
  if (c.format == "dot") {
    out << io::to_dot(g);
  } else if (c.format == "text") {
    out << "torus " << g.torus.to_string() << "\n";
    out << g.vertices.size() << " vertices, " << g.edges.size() << " edges, complete="
        << (g.complete ? "true" : "false") << "\n";
    for (const auto& w : g.vertices) out << "vertex " << w.to_string() << "\n";
    for (const auto& e : g.edges) {
      out << "edge " << e.from.to_string() << " -- " << e.to.to_string() << " " << e.weight.to_string() << "\n";
    }
    if (g.locked_pair_witness) out << "locked pair in cell " << g.locked_pair_witness->to_string() << "\n";
    if (!g.note.empty()) out << "note: " << g.note << "\n";
  } else {
    Json doc = io::document("moment-graph");
    doc["operator"] = operator_label(c);
    doc["x"] = io::to_json(*x);
    doc["h"] = io::to_json(h);
    doc["graph"] = io::to_json(g);
    out << doc.dump(2) << "\n";
  }
  return kOk;
}

}  // namespace hessgkm::cli
