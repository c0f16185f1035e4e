#include "hessgkm/classify/varieties.hpp"
#include "hessgkm/combinat/constructions.hpp"
#include "hessgkm/errors.hpp"
#include "hessgkm/hess/column_test.hpp"
#include "hessgkm/hess/membership.hpp"
#include "hessgkm/hess/stabilizer.hpp"

namespace hessgkm {

MaxSubtorusVerdict max_subtorus_fk(int k, const HessenbergFunction& h, int trials,
                                   std::uint64_t seed) {
  const int n = h.size();
  if (k < 1 || k > n - 1) throw InvalidArgument("F_k needs 1 <= k <= n-1");
  const SkeletalNilpotent x = make_fk(n, k);
  MaxSubtorusVerdict v;
  v.n = n;
  v.k = k;
  v.h = h;
  v.lower = canonical_k(x).torus;

  if (h(1) == 2 && h.contains(HessenbergFunction::shifted(n, 1))) {
    FlagMatrix g = greedy_witness(n, k, std::vector<mpq_class>(static_cast<std::size_t>(n), mpq_class(1)));
    if (member(g, x, h)) {
      v.upper = column_test(g, x, h).constraint_torus();
      v.certified = v.upper == v.lower;
      v.witness = std::move(g);
      if (v.certified) return v;
    }
  }
  const auto est = stabilizer_estimate(x, h, trials, seed);
  v.upper = est.upper;
  v.certified = est.determined();
  v.witness.reset();
  return v;
}

}  // namespace hessgkm
