#include "jaccoord/kernels.hpp"

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jaccoord::kernels {

namespace {

constexpr std::size_t kDenseThreshold = 256;

Int common_denominator(const BiPoly& p) {
  Int l = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

// grid[j][i] holds the integer coefficient of x^i y^j after scaling by den.
std::vector<std::vector<Int>> integer_grid(const BiPoly& p, const Int& den) {
  std::vector<std::vector<Int>> grid(static_cast<std::size_t>(p.degy()) + 1,
                                     std::vector<Int>(static_cast<std::size_t>(p.degx()) + 1));
  for (const auto& [m, c] : p.terms()) {
    Int v = c.get_num() * (den / c.get_den());
    grid[static_cast<std::size_t>(m.j)][static_cast<std::size_t>(m.i)] = v;
  }
  return grid;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

BiPoly mul_sparse_reference(const BiPoly& a, const BiPoly& b) {
  std::map<Mono, Rat, CanonicalOrder> acc;
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) acc[Mono{ma.i + mb.i, ma.j + mb.j}] += ca * cb;
  return BiPoly(std::move(acc));
}

BiPoly mul_dense_parallel(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Int da = common_denominator(a), db = common_denominator(b);
  const auto ga = integer_grid(a, da);
  const auto gb = integer_grid(b, db);
  const long rows = static_cast<long>(ga.size() + gb.size() - 1);
  const std::size_t width = ga[0].size() + gb[0].size() - 1;
  std::vector<std::vector<Int>> out(static_cast<std::size_t>(rows), std::vector<Int>(width));

#pragma omp parallel for schedule(dynamic)
  for (long l = 0; l < rows; ++l) {
    auto& row = out[static_cast<std::size_t>(l)];
    for (std::size_t ja = 0; ja < ga.size(); ++ja) {
      const long jb = l - static_cast<long>(ja);
      if (jb < 0 || jb >= static_cast<long>(gb.size())) continue;
      const auto& ca = ga[ja];
      const auto& cb = gb[static_cast<std::size_t>(jb)];
      for (std::size_t ia = 0; ia < ca.size(); ++ia) {
        if (sgn(ca[ia]) == 0) continue;
        for (std::size_t ib = 0; ib < cb.size(); ++ib) {
          if (sgn(cb[ib]) == 0) continue;
          mpz_addmul(row[ia + ib].get_mpz_t(), ca[ia].get_mpz_t(), cb[ib].get_mpz_t());
        }
      }
    }
  }

  const Int den = da * db;
  BiPoly::Terms terms;
  for (std::size_t l = 0; l < out.size(); ++l)
    for (std::size_t i = 0; i < width; ++i)
      if (sgn(out[l][i]) != 0)
        terms.emplace(Mono{static_cast<int>(i), static_cast<int>(l)}, make_rat(out[l][i], den));
  return BiPoly(std::move(terms));
}

BiPoly mul(const BiPoly& a, const BiPoly& b) {
  if (a.size() * b.size() < kDenseThreshold) return mul_sparse_reference(a, b);
  return mul_dense_parallel(a, b);
}

}  // namespace jaccoord::kernels
