#pragma once

#include "hessgkm/combinat/hessenberg_function.hpp"
#include "hessgkm/combinat/permutation.hpp"
#include "hessgkm/combinat/skeletal.hpp"
#include "hessgkm/exactla/flag.hpp"
#include "hessgkm/exactla/rational_matrix.hpp"

namespace hessgkm {

/// gB lies in H(X, h): g^{-1} X g vanishes below row h(j) in each column j.
/// Works for any square X, skeletal or not. Throws SingularMatrix.
bool member(const RationalMatrix& g, const RationalMatrix& x, const HessenbergFunction& h);
bool member(const RationalMatrix& g, const SkeletalNilpotent& x, const HessenbergFunction& h);
bool member(const FlagMatrix& g, const SkeletalNilpotent& x, const HessenbergFunction& h);

/// The permutation flag wB lies in H(X, h): w^{-1}(i) <= h(w^{-1}(X(i)))
/// for every nonzero row i. Purely combinatorial.
bool member_fixed_point(const Permutation& w, const SkeletalNilpotent& x,
                        const HessenbergFunction& h);

/// All permutation flags in H(X, h), lexicographic.
std::vector<Permutation> fixed_points(const SkeletalNilpotent& x, const HessenbergFunction& h);

/// diag(t) g.
RationalMatrix act_by_torus(const std::vector<mpq_class>& t, const RationalMatrix& g);

}  // namespace hessgkm
