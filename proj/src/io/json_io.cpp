#include "hessgkm/io/json_io.hpp"

#include <sstream>

#include "hessgkm/errors.hpp"

namespace hessgkm::io {

namespace {

Json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from(const Json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw InvalidArgument("expected an integer, got " + j.dump());
}

std::string key(const CellCoordinate& c) { return std::to_string(c.row) + "," + std::to_string(c.col); }

Json witness_json(const std::optional<ObstructionWitness>& w) {
  if (!w) return nullptr;
  return Json{{"column", w->column}, {"row", w->row}};
}

}  // namespace

Json document(const std::string& kind) {
  Json j;
  j["schema"] = "hessgkm." + kind + "/" + kSchemaVersion;
  return j;
}

Json to_json(const mpq_class& q) { return Json::array({integer(q.get_num()), integer(q.get_den())}); }

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const HessenbergFunction& h) { return Json(std::vector<int>(h.values().begin(), h.values().end())); }

Json to_json(const SkeletalNilpotent& x) {
  Json out = Json::array();
  for (const auto& [row, e] : x.entries()) {
    out.push_back({row, e.column, integer(e.coefficient.get_num()), integer(e.coefficient.get_den())});
  }
  return out;
}

Json to_json(const Permutation& w) { return Json(std::vector<int>(w.images().begin(), w.images().end())); }

Json to_json(const Character& c) { return Json(c.exponents); }

Json to_json(const Subtorus& k) {
  Json basis = Json::array();
  for (const auto& c : k.basis()) basis.push_back(to_json(c));
  return {{"rank", k.ambient_rank()}, {"codimension", k.codimension()}, {"basis", basis}};
}

Json to_json(const TorusConstraintReport& r) {
  Json eqs = Json::array();
  for (const auto& c : r.equalities) eqs.push_back(to_json(c));
  Json vac = Json::object();
  for (const auto& [col, reason] : r.vacuous_columns) vac[std::to_string(col)] = std::string(to_string(reason));
  Json unresolved = Json::array();
  for (const auto& w : r.unresolved) unresolved.push_back(witness_json(w));
  return {{"n", r.n},
          {"equalities", eqs},
          {"full_torus_obstructed", r.full_torus_obstructed},
          {"witness", witness_json(r.witness)},
          {"vacuous_columns", vac},
          {"unresolved", unresolved}};
}

Json to_json(const CellProfile& p) {
  Json coords = Json::object();
  for (const auto& [c, s] : p.coordinates) coords[key(c)] = std::string(to_string(s));
  Json out = {{"w", to_json(p.w)}, {"coordinates", coords}, {"entangled", p.entangled}, {"samples", p.samples}};
  out["entangled_witness"] = p.entangled_witness ? to_json(p.entangled_witness->matrix()) : Json(nullptr);
  return out;
}

Json to_json(const StabilizerEstimate& e) {
  return {{"lower", to_json(e.lower)},
          {"upper", to_json(e.upper)},
          {"upper_is_full", e.upper_is_full()},
          {"determined", e.determined()},
          {"members_tested", e.members_tested},
          {"inconclusive", e.inconclusive},
          {"seed", e.seed},
          {"trials", e.trials}};
}

Json to_json(const StabilityVerdict& v) {
  Json out = {{"h", to_json(v.h)}, {"t_stable", v.t_stable}};
  if (v.t_stable) {
    out["condition"] = v.condition;
  } else {
    out["table_row"] = std::string(to_string(*v.row));
    out["witness_index"] = v.witness_index;
    out["witness"] = to_json(*v.witness);
  }
  return out;
}

Json to_json(const BruteStability& b) {
  Json out = {{"h", to_json(b.h)},
              {"t_stable", b.t_stable},
              {"fixed_points", b.fixed_points},
              {"points_checked", b.points_checked},
              {"seed", b.seed},
              {"trials", b.trials}};
  out["cell"] = b.cell ? to_json(*b.cell) : Json(nullptr);
  out["witness"] = b.witness ? to_json(b.witness->matrix()) : Json(nullptr);
  out["obstruction"] = witness_json(b.obstruction);
  return out;
}

Json to_json(const MomentGraph& g) {
  Json vertices = Json::array();
  for (const auto& w : g.vertices) vertices.push_back(to_json(w));
  Json edges = Json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"from", to_json(e.from)}, {"to", to_json(e.to)}, {"weight", to_json(e.weight)}});
  }
  Json out = {{"n", g.n},
              {"torus", to_json(g.torus)},
              {"vertices", vertices},
              {"edges", edges},
              {"complete", g.complete}};
  out["locked_pair_witness"] = g.locked_pair_witness ? to_json(*g.locked_pair_witness) : Json(nullptr);
  if (!g.note.empty()) out["note"] = g.note;
  return out;
}

Json to_json(const CellContainmentResult& r) {
  Json out = {{"w", to_json(r.w)}, {"status", std::string(to_string(r.status))}, {"samples", r.samples}};
  out["failing_point"] = r.failing_point ? to_json(r.failing_point->matrix()) : Json(nullptr);
  return out;
}

Json to_json(const MaxSubtorusVerdict& v) {
  Json out = {{"n", v.n},
              {"k", v.k},
              {"h", to_json(v.h)},
              {"lower", to_json(v.lower)},
              {"upper", to_json(v.upper)},
              {"certified", v.certified}};
  out["witness"] = v.witness ? to_json(v.witness->matrix()) : Json(nullptr);
  return out;
}

mpq_class rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidArgument("rational must be [num, den]: " + j.dump());
  const mpz_class den = integer_from(j[1]);
  if (den == 0) throw InvalidArgument("zero denominator");
  mpq_class q(integer_from(j[0]), den);
  q.canonicalize();
  return q;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw InvalidArgument("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

HessenbergFunction hessenberg_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("h must be an integer array");
  return HessenbergFunction(j.get<std::vector<int>>());
}

SkeletalNilpotent skeletal_from_json(int n, const Json& j) {
  if (!j.is_array()) throw InvalidArgument("skeletal X must be a list of [row, col, num, den]");
  std::map<int, SkeletalNilpotent::Entry> entries;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) throw InvalidArgument("bad skeletal entry " + e.dump());
    const int row = e[0].get<int>();
    if (entries.contains(row)) throw NotSkeletal("row " + std::to_string(row) + " listed twice");
    entries[row] = {e[1].get<int>(), rational_from_json(Json::array({e[2], e[3]}))};
  }
  return SkeletalNilpotent(n, std::move(entries));
}

Permutation permutation_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidArgument("permutation must be an integer array");
  return Permutation(j.get<std::vector<int>>());
}

std::string to_dot(const MomentGraph& g) {
  std::ostringstream out;
  out << "graph moment_graph {\n";
  for (const auto& w : g.vertices) out << "  \"" << w.to_string() << "\";\n";
  for (const auto& e : g.edges) {
    out << "  \"" << e.from.to_string() << "\" -- \"" << e.to.to_string() << "\" [label=\"(";
    for (std::size_t i = 0; i < e.weight.exponents.size(); ++i) out << (i ? "," : "") << e.weight.exponents[i];
    out << ")\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hessgkm::io
