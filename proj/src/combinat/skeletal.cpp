#include "hessgkm/combinat/skeletal.hpp"

#include <set>
#include <sstream>

#include "hessgkm/errors.hpp"
#include "hessgkm/exactla/rational_matrix.hpp"

namespace hessgkm {

namespace {

std::string position(int r, int c) {
  return "(" + std::to_string(r) + "," + std::to_string(c) + ")";
}

}  // namespace

SkeletalNilpotent::SkeletalNilpotent(int n, std::map<int, Entry> entries)
    : n_(n), entries_(std::move(entries)) {
  std::map<int, int> row_of_column;
  for (const auto& [row, e] : entries_) {
    if (row < 1 || row > n_ || e.column < 1 || e.column > n_) {
      throw InvalidArgument("entry " + position(row, e.column) + " outside " +
                            std::to_string(n_) + "x" + std::to_string(n_));
    }
    if (e.coefficient == 0) throw InvalidArgument("zero coefficient at " + position(row, e.column));
    if (e.column <= row) throw NotSkeletal("entry " + position(row, e.column) + " is not strictly upper");
    auto [it, fresh] = row_of_column.emplace(e.column, row);
    if (!fresh) {
      throw NotSkeletal("column " + std::to_string(e.column) + " repeated at " +
                        position(it->second, e.column) + " and " + position(row, e.column));
    }
  }
}

int SkeletalNilpotent::column_of(int row) const {
  auto it = entries_.find(row);
  return it == entries_.end() ? 0 : it->second.column;
}

const mpq_class& SkeletalNilpotent::coefficient(int row) const {
  auto it = entries_.find(row);
  if (it == entries_.end()) throw InvalidArgument("row " + std::to_string(row) + " of X is zero");
  return it->second.coefficient;
}

std::vector<int> SkeletalNilpotent::rows() const {
  std::vector<int> out;
  for (const auto& [row, e] : entries_) out.push_back(row);
  return out;
}

std::vector<int> SkeletalNilpotent::columns() const {
  std::vector<int> out;
  for (const auto& [row, e] : entries_) out.push_back(e.column);
  return out;
}

RationalMatrix SkeletalNilpotent::to_matrix() const {
  RationalMatrix m(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
  for (const auto& [row, e] : entries_) {
    m(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(e.column - 1)) = e.coefficient;
  }
  return m;
}

SkeletalNilpotent SkeletalNilpotent::conjugate_by_diagonal(const std::vector<mpq_class>& t) const {
  if (static_cast<int>(t.size()) != n_) throw InvalidArgument("torus element has wrong length");
  std::map<int, Entry> scaled;
  for (const auto& [row, e] : entries_) {
    const auto& ti = t[static_cast<std::size_t>(row - 1)];
    const auto& tc = t[static_cast<std::size_t>(e.column - 1)];
    if (ti == 0 || tc == 0) throw InvalidArgument("torus element has a zero entry");
    scaled.emplace(row, Entry{e.column, mpq_class(e.coefficient * tc / ti)});
  }
  return SkeletalNilpotent(n_, std::move(scaled));
}

SkeletalNilpotent make_fk(int n, int k) {
  if (k < 1 || k > n - 1) {
    throw InvalidArgument("F_k needs 1 <= k <= n-1 (got k=" + std::to_string(k) +
                          ", n=" + std::to_string(n) + ")");
  }
  std::map<int, SkeletalNilpotent::Entry> entries;
  for (int i = 1; i <= k; ++i) entries.emplace(i, SkeletalNilpotent::Entry{n - k + i, 1});
  return SkeletalNilpotent(n, std::move(entries));
}

SkeletalNilpotent make_subregular(int n) {
  if (n < 3) throw InvalidArgument("subregular nilpotent needs n >= 3");
  std::map<int, SkeletalNilpotent::Entry> entries;
  for (int i = 2; i <= n - 1; ++i) entries.emplace(i, SkeletalNilpotent::Entry{i + 1, 1});
  return SkeletalNilpotent(n, std::move(entries));
}

SkeletalNilpotent skeletal_from_matrix(const RationalMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("skeletal nilpotent must be square");
  const int n = static_cast<int>(m.rows());
  std::map<int, SkeletalNilpotent::Entry> entries;
  std::vector<std::string> problems;
  std::map<int, int> row_of_column;
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      const auto& v = m(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1));
      if (v == 0) continue;
      if (c <= r) {
        problems.push_back(position(r, c) + " on or below the diagonal");
        continue;
      }
      if (auto it = entries.find(r); it != entries.end()) {
        problems.push_back("row " + std::to_string(r) + " repeated at " +
                           position(r, it->second.column) + " and " + position(r, c));
        continue;
      }
      if (auto it = row_of_column.find(c); it != row_of_column.end()) {
        problems.push_back("column " + std::to_string(c) + " repeated at " +
                           position(it->second, c) + " and " + position(r, c));
        continue;
      }
      entries.emplace(r, SkeletalNilpotent::Entry{c, v});
      row_of_column.emplace(c, r);
    }
  }
  if (!problems.empty()) {
    std::ostringstream msg;
    msg << "not skeletal:";
    for (const auto& p : problems) msg << ' ' << p << ';';
    throw NotSkeletal(msg.str());
  }
  return SkeletalNilpotent(n, std::move(entries));
}

}  // namespace hessgkm
