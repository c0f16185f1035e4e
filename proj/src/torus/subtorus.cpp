#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

#include "hessgkm/errors.hpp"
#include "hessgkm/exactla/rational_matrix.hpp"
#include "hessgkm/torus/torus.hpp"

namespace hessgkm {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// col[dst] -= q * col[src]
void sub_col(IntMatrix& m, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (auto& row : m) row[dst] -= q * row[src];
}

struct ColumnReduction {
  std::size_t rank = 0;
  IntMatrix w;  // unimodular, n x n
};

/// Unimodular column operations W with B W = [H | 0], H of full column rank.
ColumnReduction column_reduce(IntMatrix b, std::size_t n) {
  ColumnReduction out;
  out.w.assign(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) out.w[i][i] = 1;
  std::size_t k = 0;
  for (std::size_t r = 0; r < b.size() && k < n; ++r) {
    while (true) {
      std::size_t best = n;
      for (std::size_t c = k; c < n; ++c) {
        if (b[r][c] != 0 && (best == n || abs(b[r][c]) < abs(b[r][best]))) best = c;
      }
      if (best == n) break;
      if (best != k) {
        swap_cols(b, best, k);
        swap_cols(out.w, best, k);
      }
      bool done = true;
      for (std::size_t c = k + 1; c < n; ++c) {
        if (b[r][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), b[r][c].get_mpz_t(), b[r][k].get_mpz_t());
        sub_col(b, c, k, q);
        sub_col(out.w, c, k, q);
        if (b[r][c] != 0) done = false;
      }
      if (done) {
        ++k;
        break;
      }
    }
  }
  out.rank = k;
  return out;
}

/// Reduced row Hermite normal form of a full-row-rank integer matrix.
IntMatrix hermite(IntMatrix m, std::size_t n) {
  std::size_t p = 0;
  for (std::size_t c = 0; c < n && p < m.size(); ++c) {
    while (true) {
      std::size_t best = m.size();
      for (std::size_t r = p; r < m.size(); ++r) {
        if (m[r][c] != 0 && (best == m.size() || abs(m[r][c]) < abs(m[best][c]))) best = r;
      }
      if (best == m.size()) break;
      std::swap(m[best], m[p]);
      bool done = true;
      for (std::size_t r = p + 1; r < m.size(); ++r) {
        if (m[r][c] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[p][c].get_mpz_t());
        for (std::size_t k = 0; k < n; ++k) m[r][k] -= q * m[p][k];
        if (m[r][c] != 0) done = false;
      }
      if (done) break;
    }
    if (p >= m.size() || m[p][c] == 0) continue;
    if (m[p][c] < 0) {
      for (auto& x : m[p]) x = -x;
    }
    for (std::size_t r = 0; r < p; ++r) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[p][c].get_mpz_t());
      if (q != 0) {
        for (std::size_t k = 0; k < n; ++k) m[r][k] -= q * m[p][k];
      }
    }
    ++p;
  }
  return m;
}

IntMatrix to_int(const std::vector<Character>& chars) {
  IntMatrix m;
  for (const auto& ch : chars) {
    std::vector<mpz_class> row;
    for (auto a : ch.exponents) row.emplace_back(static_cast<long>(a));
    m.push_back(std::move(row));
  }
  return m;
}

std::int64_t to_i64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error("lattice entry exceeds 64 bits");
  return z.get_si();
}

}  // namespace

Subtorus subtorus_from_characters(const std::vector<Character>& chars, int n) {
  for (const auto& ch : chars) {
    if (ch.size() != n) throw InvalidArgument("character length does not match torus rank");
  }
  Subtorus out(n);
  const auto un = static_cast<std::size_t>(n);
  const auto red = column_reduce(to_int(chars), un);
  if (red.rank == 0) return out;

  // The first `rank` rows of W^{-1} span the saturation.
  RationalMatrix w(un, un);
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) w(i, j) = red.w[i][j];
  }
  const RationalMatrix winv = inverse(w);
  IntMatrix sat(red.rank, std::vector<mpz_class>(un));
  for (std::size_t i = 0; i < red.rank; ++i) {
    for (std::size_t j = 0; j < un; ++j) sat[i][j] = winv(i, j).get_num();
  }
  for (const auto& row : hermite(std::move(sat), un)) {
    Character ch = Character::zero(n);
    for (std::size_t j = 0; j < un; ++j) ch.exponents[j] = to_i64(row[j]);
    out.basis_.push_back(std::move(ch));
  }
  return out;
}

bool Subtorus::kills(const Character& chi) const {
  if (chi.size() != n_) throw InvalidArgument("character length does not match torus rank");
  // The basis is echelon and saturated, so reduction decides lattice membership.
  std::vector<mpz_class> rest;
  for (auto a : chi.exponents) rest.emplace_back(static_cast<long>(a));
  for (const auto& row : basis_) {
    std::size_t c = 0;
    while (row.exponents[c] == 0) ++c;
    if (rest[c] % row.exponents[c] != 0) return false;
    const mpz_class q = rest[c] / row.exponents[c];
    for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= q * row.exponents[k];
  }
  return std::all_of(rest.begin(), rest.end(), [](const mpz_class& z) { return z == 0; });
}

bool Subtorus::is_subtorus_of(const Subtorus& other) const {
  if (other.n_ != n_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const Character& c) { return kills(c); });
}

Subtorus Subtorus::meet(const Subtorus& other) const {
  if (other.n_ != n_) throw InvalidArgument("meet of subtori of different tori");
  std::vector<Character> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return subtorus_from_characters(all, n_);
}

std::vector<Cocharacter> Subtorus::cocharacter_basis() const {
  const auto un = static_cast<std::size_t>(n_);
  const auto red = column_reduce(to_int(basis_), un);
  std::vector<Cocharacter> out;
  for (std::size_t c = red.rank; c < un; ++c) {
    Cocharacter lambda;
    for (std::size_t i = 0; i < un; ++i) lambda.exponents.push_back(to_i64(red.w[i][c]));
    out.push_back(std::move(lambda));
  }
  return out;
}

std::vector<mpq_class> Subtorus::sample_point(std::mt19937_64& rng) const {
  static const std::array<mpq_class, 8> pool = {mpq_class(2), mpq_class(3), mpq_class(5),
                                                mpq_class(7), mpq_class(3, 2), mpq_class(5, 3),
                                                mpq_class(7, 2), mpq_class(11, 5)};
  std::vector<mpq_class> t(static_cast<std::size_t>(n_), mpq_class(1));
  for (const auto& lambda : cocharacter_basis()) {
    const mpq_class& base = pool[rng() % pool.size()];
    for (std::size_t i = 0; i < t.size(); ++i) {
      const auto a = lambda.exponents[i];
      mpq_class p = 1;
      for (std::int64_t k = 0; k < (a < 0 ? -a : a); ++k) p *= base;
      t[i] *= a < 0 ? mpq_class(1 / p) : p;
    }
  }
  return t;
}

std::string Subtorus::to_string() const {
  if (basis_.empty()) return "T";
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < basis_.size(); ++i) out << (i ? ", " : "") << basis_[i].to_string() << " = 0";
  out << '}';
  return out.str();
}

CanonicalSubtorus canonical_k(const SkeletalNilpotent& x) {
  const int n = x.size();
  CanonicalSubtorus out{Subtorus(n), x.empty()};
  const auto rows = x.rows();
  if (rows.size() < 2) return out;
  const Character first = Character::ratio(n, x.column_of(rows[0]), rows[0]);
  std::vector<Character> constraints;
  for (std::size_t m = 1; m < rows.size(); ++m) {
    constraints.push_back(first - Character::ratio(n, x.column_of(rows[m]), rows[m]));
  }
  out.torus = subtorus_from_characters(constraints, n);
  return out;
}

bool cochar_in_subtorus(const Cocharacter& lambda, const Subtorus& k) {
  return std::all_of(k.basis().begin(), k.basis().end(),
                     [&](const Character& chi) { return pairing(chi, lambda) == 0; });
}

bool is_regular(const Subtorus& k) {
  const int n = k.ambient_rank();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (k.kills(Character::ratio(n, i, j))) return false;
    }
  }
  return true;
}

}  // namespace hessgkm
