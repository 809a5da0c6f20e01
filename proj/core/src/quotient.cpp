#include "hessideals/quotient.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

#include "hessideals/parallel.hpp"

namespace hessideals {

std::vector<Monomial> lt_ideal_generators(const HessenbergFunction& h) {
  const int n = h.n();
  const DegreeTuple beta = to_degree_tuple(h);
  std::vector<Monomial> out;
  out.reserve(n);
  for (int i = 1; i <= n; ++i) out.push_back(Monomial::variable(i, n, beta.at(i)));
  return out;
}

void for_each_basis_monomial(const HessenbergFunction& h,
                             const std::function<void(const Monomial&)>& visit) {
  const int n = h.n();
  const DegreeTuple beta = to_degree_tuple(h);
  // odometer with x_n as the fastest digit: ascending lex order
  std::vector<int> exps(n, 0);
  for (;;) {
    visit(Monomial(exps));
    int pos = n - 1;
    while (pos >= 0 && exps[pos] == beta.at(pos + 1) - 1) {
      exps[pos] = 0;
      --pos;
    }
    if (pos < 0) return;
    ++exps[pos];
  }
}

std::vector<Monomial> monomial_basis(const HessenbergFunction& h) {
  std::vector<Monomial> out;
  for_each_basis_monomial(h, [&out](const Monomial& m) { out.push_back(m); });
  return out;
}

long long quotient_rank(const HessenbergFunction& h) {
  const DegreeTuple beta = to_degree_tuple(h);
  BigInt product = 1;
  for (int i = 1; i <= h.n(); ++i) product *= beta.at(i);
  if (!product.fits_slong_p()) throw std::overflow_error("quotient_rank: product exceeds long long");
  return static_cast<long long>(product.get_si());
}

std::vector<long long> graded_dimensions(const HessenbergFunction& h) {
  const DegreeTuple beta = to_degree_tuple(h);
  std::vector<long long> coeffs{1};
  for (int i = 1; i <= h.n(); ++i) {
    const int b = beta.at(i);
    std::vector<long long> next(coeffs.size() + static_cast<size_t>(b) - 1, 0);
    for (size_t d = 0; d < coeffs.size(); ++d)
      for (int t = 0; t < b; ++t) next[d + static_cast<size_t>(t)] += coeffs[d];
    coeffs = std::move(next);
  }
  return coeffs;
}

std::vector<long long> graded_histogram(const HessenbergFunction& h) {
  const DegreeTuple beta = to_degree_tuple(h);
  size_t maxdeg = 0;
  for (int i = 1; i <= h.n(); ++i) maxdeg += static_cast<size_t>(beta.at(i) - 1);
  std::vector<long long> hist(maxdeg + 1, 0);
  for_each_basis_monomial(h, [&hist](const Monomial& m) {
    ++hist[static_cast<size_t>(m.total_degree())];
  });
  return hist;
}

Polynomial normal_form(const Polynomial& f, const HessenbergFunction& h, GroebnerCache& cache) {
  const GroebnerBasis& gb = cache.get(IdealKind::Basis, h, MonomialOrder::Lex);
  return reduce(f, gb.basis, gb.order);
}

std::vector<VerificationRecord> verify_quotient_data(int n, GroebnerCache& cache, int workers,
                                                     const HessenbergFunction* only) {
  std::vector<HessenbergFunction> all = enumerate_hessenberg(n);
  if (only) all = {*only};
  return parallel_map<VerificationRecord>(static_cast<int>(all.size()), workers, [&](int idx) {
    const HessenbergFunction& h = all[static_cast<size_t>(idx)];
    VerificationRecord rec;
    rec.subject = h.to_string();
    rec.claim = "quotient";
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const long long rank = quotient_rank(h);
      const std::vector<Monomial> basis = monomial_basis(h);
      if (static_cast<long long>(basis.size()) != rank) {
        rec.witness = "basis has " + std::to_string(basis.size()) + " monomials, rank is " +
                      std::to_string(rank);
      } else if (graded_dimensions(h) != graded_histogram(h)) {
        rec.witness = "graded dimensions disagree with the basis degree histogram";
      } else {
        const auto dims = graded_dimensions(h);
        long long total = 0;
        for (long long d : dims) total += d;
        if (total != rank) {
          rec.witness = "graded dimensions sum to " + std::to_string(total) + ", rank is " +
                        std::to_string(rank);
        } else {
          bool ok = true;
          // every basis monomial is its own normal form
          for (const Monomial& m : basis) {
            const Polynomial p = Polynomial::term(1, m);
            if (normal_form(p, h, cache) != p) {
              rec.witness = "basis monomial " + m.to_string() + " is not reduced";
              ok = false;
              break;
            }
          }
          // the ideal generators vanish in the quotient
          if (ok)
            for (const auto& cell : basis_presentation(h).cells) {
              if (!normal_form(cell.poly, h, cache).is_zero()) {
                rec.witness = "generator " + cell.poly.to_string() + " has nonzero normal form";
                ok = false;
                break;
              }
            }
          // the full function has rank n!
          if (ok && h.values() == std::vector<int>(static_cast<size_t>(n), n)) {
            BigInt fact = factorial(n);
            if (BigInt(static_cast<long>(rank)) != fact) {
              rec.witness = "rank of the full function is " + std::to_string(rank) +
                            ", expected " + fact.get_str();
              ok = false;
            }
          }
          if (ok) {
            rec.pass = true;
            rec.witness = "rank=" + std::to_string(rank);
          }
        }
      }
    } catch (const std::exception& e) {
      rec.pass = false;
      rec.witness = std::string("exception: ") + e.what();
    }
    rec.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return rec;
  });
}

}  // namespace hessideals
