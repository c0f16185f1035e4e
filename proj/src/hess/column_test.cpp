#include "hessgkm/hess/column_test.hpp"

#include "hessgkm/errors.hpp"
#include "hessgkm/hess/membership.hpp"

namespace hessgkm {

std::string_view to_string(VacuousReason r) {
  switch (r) {
    case VacuousReason::ZeroImage: return "zero-image";
    case VacuousReason::EmptyB: return "empty-b";
    case VacuousReason::ZeroB: return "zero-b";
    case VacuousReason::Cancelled: return "cancelled";
  }
  return "?";
}

Subtorus TorusConstraintReport::constraint_torus() const {
  return subtorus_from_characters({equalities.begin(), equalities.end()}, n);
}

namespace {

// Sign convention: first nonzero exponent positive.
Character oriented(Character c) {
  for (auto a : c.exponents) {
    if (a == 0) continue;
    if (a < 0) c = -c;
    break;
  }
  return c;
}

}  // namespace

TorusConstraintReport column_test(const FlagMatrix& g, const SkeletalNilpotent& x,
                                  const HessenbergFunction& h) {
  if (!member(g, x, h)) throw PreconditionFailed("column_test requires a member of H(X, h)");
  const int n = g.size();
  TorusConstraintReport report;
  report.n = n;

  auto weight = [&](int row) { return Character::ratio(n, x.column_of(row), row); };

  for (int j = 1; j <= n; ++j) {
    const ColumnSystem sys = column_system(g, x, h, j);
    if (sys.image_is_zero()) {
      report.vacuous_columns[j] = VacuousReason::ZeroImage;
      continue;
    }
    if (sys.dependent_rows.empty()) {
      report.vacuous_columns[j] = VacuousReason::EmptyB;
      continue;
    }
    if (sys.dependent_block.is_zero()) {
      report.vacuous_columns[j] = VacuousReason::ZeroB;
      continue;
    }
    const RationalMatrix p = sys.dependent_block * inverse(sys.pivot_block);
    bool any = false;
    for (std::size_t r = 0; r < sys.dependent_rows.size(); ++r) {
      std::map<Character, mpq_class> poly;
      for (std::size_t q = 0; q < sys.pivot_rows.size(); ++q) {
        const mpq_class c = p(r, q) * sys.solution[q];
        if (c != 0) poly[weight(sys.pivot_rows[q])] += c;
      }
      if (sys.constraint[r] != 0) poly[weight(sys.dependent_rows[r])] -= sys.constraint[r];
      std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
      if (poly.empty()) continue;

      any = true;
      const ObstructionWitness here{j, sys.dependent_rows[r]};
      if (!report.witness) report.witness = here;
      report.full_torus_obstructed = true;
      if (poly.size() == 2) {
        report.equalities.insert(oriented(poly.begin()->first - std::next(poly.begin())->first));
      } else {
        // One monomial cannot occur for a member (it would fail at t = 1).
        report.unresolved.push_back(here);
      }
    }
    if (!any) report.vacuous_columns[j] = VacuousReason::Cancelled;
  }
  return report;
}

}  // namespace hessgkm
