#include "hessgkm/combinat/constructions.hpp"

#include <set>

#include "hessgkm/errors.hpp"
#include "hessgkm/exactla/flag.hpp"

namespace hessgkm {

Permutation circle_permutation(const SkeletalNilpotent& x) {
  if (x.empty()) throw PreconditionFailed("circle_permutation needs a nonzero row");
  const int n = x.size();
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  auto assigned = [&](int i) { return images[static_cast<std::size_t>(i - 1)] != 0; };
  int next_value = 1;
  for (int start : x.rows()) {
    if (assigned(start)) continue;
    images[static_cast<std::size_t>(start - 1)] = next_value++;
    for (int cur = start; x.is_row(cur);) {
      cur = x.column_of(cur);
      images[static_cast<std::size_t>(cur - 1)] = next_value++;
    }
  }
  // Order-preserving fill of the remaining indices.
  for (int i = 1; i <= n; ++i) {
    if (!assigned(i)) images[static_cast<std::size_t>(i - 1)] = next_value++;
  }
  return Permutation(std::move(images));
}

FlagMatrix greedy_witness(int n, int k, const std::vector<mpq_class>& seed) {
  const SkeletalNilpotent fk = make_fk(n, k);
  if (static_cast<int>(seed.size()) != n) throw InvalidWitness("seed column must have length n");
  for (const auto& s : seed) {
    if (s == 0) throw InvalidWitness("seed column must have every entry nonzero");
  }
  if (seed.back() != 1) throw InvalidWitness("seed column must end in 1");

  const RationalMatrix f = fk.to_matrix();
  std::vector<RationalVector> columns{seed};
  std::set<int> used{piv(seed)};
  while (static_cast<int>(columns.size()) < n) {
    RationalVector next = f * columns.back();
    if (is_zero(next)) {
      int row = n;
      while (used.contains(row)) --row;
      next.assign(static_cast<std::size_t>(n), 0);
      next[static_cast<std::size_t>(row - 1)] = 1;
    }
    used.insert(piv(next));
    columns.push_back(std::move(next));
  }
  return normalize_schubert(RationalMatrix::from_columns(columns));
}

}  // namespace hessgkm
