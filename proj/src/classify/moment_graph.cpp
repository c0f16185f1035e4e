#include "hessgkm/classify/moment_graph.hpp"

#include <set>
#include <tuple>

#include "hessgkm/classify/f2.hpp"
#include "hessgkm/errors.hpp"
#include "hessgkm/hess/curves.hpp"
#include "hessgkm/hess/membership.hpp"

namespace hessgkm {

MomentGraph moment_graph(const SkeletalNilpotent& x, const HessenbergFunction& h,
                         const Subtorus& torus, int first_sample) {
  const int n = x.size();
  if (h.size() != n || torus.ambient_rank() != n) throw InvalidArgument("dimension mismatch");
  if (!is_regular(torus)) {
    throw Unsupported("torus " + torus.to_string() + " is not regular; its fixed flags are not isolated");
  }
  MomentGraph g;
  g.n = n;
  g.torus = torus;
  g.vertices = fixed_points(x, h);

  std::set<std::pair<Permutation, Permutation>> seen;
  for (const auto& w : g.vertices) {
    for (const auto& c : cell_coordinates(w)) {
      const RootPosition pos = root_of(w, c);
      if (!curve_in_variety(w, pos, x, h, first_sample)) continue;
      Permutation other = w.swap_values(pos.i, pos.j);
      auto key = w < other ? std::pair{w, other} : std::pair{other, w};
      if (!seen.insert(std::move(key)).second) continue;
      g.edges.push_back({w, std::move(other), Character::ratio(n, pos.i, pos.j)});
    }
  }

  if (torus.is_full()) return g;
  if (n >= 4 && x == make_fk(n, 2) && torus == canonical_k(x).torus) {
    const auto scan = brute_f2_gkm(h);
    if (!scan.gkm) {
      g.complete = false;
      g.locked_pair_witness = scan.witness;
      g.note = "locked pair u(2,n), u(1,n-1) free in cell " + scan.witness->to_string() +
               ": infinitely many one-dimensional orbits";
    }
  } else {
    g.note = "one-dimensional orbits beyond root curves are only detected for F2 with its canonical torus";
  }
  return g;
}

std::optional<MomentGraph> drop_last_index(const MomentGraph& g) {
  const int n = g.n;
  auto restrict = [n](const Permutation& w) -> std::optional<Permutation> {
    if (w(n) != n) return std::nullopt;
    return Permutation(std::vector<int>(w.images().begin(), w.images().end() - 1));
  };
  MomentGraph out;
  out.n = n - 1;
  out.complete = g.complete;
  for (const auto& w : g.vertices) {
    auto r = restrict(w);
    if (!r) return std::nullopt;
    out.vertices.push_back(std::move(*r));
  }
  for (const auto& e : g.edges) {
    if (e.weight.exponents.back() != 0) return std::nullopt;
    auto from = restrict(e.from);
    auto to = restrict(e.to);
    if (!from || !to) return std::nullopt;
    Character weight{std::vector<std::int64_t>(e.weight.exponents.begin(), e.weight.exponents.end() - 1)};
    out.edges.push_back({std::move(*from), std::move(*to), std::move(weight)});
  }
  return out;
}

bool same_graph(const MomentGraph& a, const MomentGraph& b) {
  if (a.n != b.n) return false;
  const std::set<Permutation> va(a.vertices.begin(), a.vertices.end());
  const std::set<Permutation> vb(b.vertices.begin(), b.vertices.end());
  if (va != vb) return false;
  using Key = std::tuple<Permutation, Permutation, Character>;
  auto keys = [](const MomentGraph& g) {
    std::set<Key> out;
    for (const auto& e : g.edges) {
      const bool fwd = e.from < e.to;
      Character w = e.weight;
      for (auto x : w.exponents) {
        if (x == 0) continue;
        if (x < 0) w = -w;
        break;
      }
      out.emplace(fwd ? e.from : e.to, fwd ? e.to : e.from, std::move(w));
    }
    return out;
  };
  return a.edges.size() == b.edges.size() && keys(a) == keys(b);
}

}  // namespace hessgkm
