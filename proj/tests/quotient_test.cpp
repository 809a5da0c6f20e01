#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hessideals/hessenberg.hpp>
#include <hessideals/ideals.hpp>
#include <hessideals/parallel.hpp>
#include <hessideals/quotient.hpp>

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

using namespace hessideals;

namespace {
HessenbergFunction H(const std::string& s) { return HessenbergFunction::parse(s); }
Polynomial P(const std::string& s, int nvars = 4) { return Polynomial::parse(s, nvars); }

std::vector<std::string> strings(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}
}  // namespace

TEST_CASE("leading-term ideal generators are the pure powers") {
  CHECK(strings(lt_ideal_generators(H("3,3,3,4"))) ==
        std::vector<std::string>{"x1", "x2^2", "x3^3", "x4"});
  CHECK(strings(lt_ideal_generators(H("4,4,4,4"))) ==
        std::vector<std::string>{"x1", "x2^2", "x3^3", "x4^4"});
  CHECK(strings(lt_ideal_generators(H("1,2,3,4"))) ==
        std::vector<std::string>{"x1", "x2", "x3", "x4"});
}

TEST_CASE("monomial basis under the staircase bound") {
  // Exponent of x_i ranges over [0, beta_i - 1]; x4 varies fastest.
  CHECK(strings(monomial_basis(H("3,3,3,4"))) ==
        std::vector<std::string>{"1", "x3", "x3^2", "x2", "x2*x3", "x2*x3^2"});
  CHECK(monomial_basis(H("1,2,3,4")).size() == 1);
  CHECK(monomial_basis(H("4,4,4,4")).size() == 24);

  for (const auto& h : enumerate_hessenberg(5)) {
    const auto beta = to_degree_tuple(h).ascending();
    for (const auto& m : monomial_basis(h))
      for (int i = 1; i <= 5; ++i) CHECK(m.exponent(i) < beta[i - 1]);
  }
}

TEST_CASE("rank is the product of the degree bounds") {
  CHECK(quotient_rank(H("3,3,3,4")) == 6);
  CHECK(quotient_rank(H("1,2,3,4")) == 1);
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    long long full = 1;
    std::string s;
    for (int i = 1; i <= n; ++i) {
      full *= i;
      s += (i > 1 ? "," : "") + std::to_string(n);
    }
    // The constant function has the regular-representation rank n!.
    CHECK(quotient_rank(H(s)) == full);

    for (const auto& h : enumerate_hessenberg(n)) {
      const auto beta = to_degree_tuple(h).ascending();
      const long long prod = std::accumulate(beta.begin(), beta.end(), 1LL,
                                             [](long long a, int b) { return a * b; });
      CHECK(quotient_rank(h) == prod);
      CHECK(static_cast<long long>(monomial_basis(h).size()) == prod);
    }
  }
}

TEST_CASE("graded dimensions match the degree histogram") {
  CHECK(graded_dimensions(H("3,3,3,4")) == std::vector<long long>{1, 2, 2, 1});
  CHECK(graded_dimensions(H("4,4,4,4")) == std::vector<long long>{1, 3, 5, 6, 5, 3, 1});
  CHECK(graded_dimensions(H("1,2,3,4")) == std::vector<long long>{1});

  for (const auto& h : enumerate_hessenberg(5)) {
    const auto dims = graded_dimensions(h);
    CHECK(dims == graded_histogram(h));
    CHECK(std::accumulate(dims.begin(), dims.end(), 0LL) == quotient_rank(h));
    // Symmetric (Poincare duality of the graded quotient).
    auto rev = dims;
    std::reverse(rev.begin(), rev.end());
    CHECK(rev == dims);
  }
}

TEST_CASE("normal forms against the cached basis") {
  GroebnerCache cache;
  CHECK(normal_form(P("x1*x2"), H("3,3,3,4"), cache) == P("x3^2"));
  CHECK(normal_form(P("x2^2"), H("3,3,3,4"), cache) == P("-x2*x3 - x3^2"));
  CHECK(normal_form(P("x4"), H("3,3,3,4"), cache).is_zero());

  // Basis monomials are their own normal forms; generators collapse to zero.
  for (const auto& m : monomial_basis(H("3,3,3,4")))
    CHECK(normal_form(Polynomial::term(1, m), H("3,3,3,4"), cache) ==
          Polynomial::term(1, m));
  for (const auto& g : basis_presentation(H("3,3,3,4")).generators)
    CHECK(normal_form(g, H("3,3,3,4"), cache).is_zero());
}

TEST_CASE("quotient verification sweep") {
  GroebnerCache cache;
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    for (const auto& r : verify_quotient_data(n, cache, 2)) {
      CAPTURE(r.subject);
      CAPTURE(r.witness);
      CHECK(r.pass);
    }
  }
  const HessenbergFunction h = H("3,3,3,4");
  const auto one = verify_quotient_data(4, cache, 0, &h);
  CHECK(one.size() == 1);
  CHECK(one[0].pass);
  CHECK(one[0].witness == "rank=6");
}

TEST_CASE("worker count resolution") {
  CHECK(worker_count(3) == 3);
  CHECK(worker_count(1) == 1);
  ::setenv("HESSIDEALS_WORKERS", "5", 1);
  CHECK(worker_count() == 5);
  CHECK(worker_count(2) == 2);  // explicit request outranks the environment
  ::unsetenv("HESSIDEALS_WORKERS");
  CHECK(worker_count() >= 1);
}

TEST_CASE("parallel map keeps results ordered and propagates errors") {
  const auto square = [](int i) { return i * i; };
  const std::vector<int> serial = parallel_map<int>(50, 1, square);
  const std::vector<int> parallel = parallel_map<int>(50, 4, square);
  CHECK(serial == parallel);
  for (int i = 0; i < 50; ++i) CHECK(parallel[i] == i * i);

  CHECK(parallel_map<int>(0, 4, square).empty());

  CHECK_THROWS_WITH_AS(parallel_map<int>(10, 3,
                                         [](int i) -> int {
                                           if (i == 5) throw std::runtime_error("boom");
                                           return i;
                                         }),
                       "boom", std::runtime_error);
}
