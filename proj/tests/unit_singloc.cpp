// Jacobian matrices, block decomposition, minor ideals and the
// singular-locus description of the extended presentations.

#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "reeslike/jacobian.hpp"
#include "reeslike/rees.hpp"
#include "test_util.hpp"

using namespace reeslike;
using testutil::load_oracle;
using testutil::pp;
using testutil::qring;

namespace {

ReesLikePresentation<QQ> present(const std::vector<std::string>& gens) {
  auto R = qring({"x1", "x2"});
  std::vector<Polynomial<QQ>> fs;
  for (const auto& s : gens) fs.push_back(pp(R, s));
  return build_rees_like(Ideal<QQ>(R, fs));
}

struct Example {
  ReesLikePresentation<QQ> pres;
  SingularLocusReport<QQ> rep;
};

// The singular-locus reports are expensive; compute each example once and
// share it (and its Groebner caches) across the test cases below.
const Example& example(const std::vector<std::string>& gens) {
  static std::map<std::string, Example> cache;
  std::string key;
  for (const auto& g : gens) key += g + ";";
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto pres = present(gens);
    auto rep = singular_locus(pres);
    it = cache.emplace(key, Example{std::move(pres), std::move(rep)}).first;
  }
  return it->second;
}

}  // namespace

TEST_CASE("jacobian rows follow variable order, columns follow generators") {
  auto R = qring({"x", "y"});
  auto J = jacobian(R, {pp(R, "x^2 - y"), pp(R, "x*y")});
  REQUIRE(J.rows() == 2);
  REQUIRE(J.cols() == 2);
  REQUIRE(J.at(0, 0) == pp(R, "2*x"));
  REQUIRE(J.at(0, 1) == pp(R, "y"));
  REQUIRE(J.at(1, 0) == pp(R, "-1"));
  REQUIRE(J.at(1, 1) == pp(R, "x"));
}

TEST_CASE("determinant and minors via memoized expansion") {
  auto R = qring({"a", "b", "c", "d"});
  PolyMatrix<QQ> M(R, 2, 2);
  M.at(0, 0) = pp(R, "a");
  M.at(0, 1) = pp(R, "b");
  M.at(1, 0) = pp(R, "c");
  M.at(1, 1) = pp(R, "d");
  REQUIRE(determinant(M) == pp(R, "a*d - b*c"));

  PolyMatrix<QQ> N(R, 3, 3);
  N.at(0, 0) = pp(R, "a");
  N.at(0, 1) = pp(R, "b");
  N.at(1, 0) = pp(R, "c");
  N.at(1, 1) = pp(R, "d");
  N.at(2, 2) = pp(R, "1");
  REQUIRE(determinant(N) == pp(R, "a*d - b*c"));

  auto ones = all_minors(M, 1);
  REQUIRE(ones.size() == 4);
  auto twos = all_minors(M, 2);
  REQUIRE(twos.size() == 1);
  REQUIRE(twos[0].value == pp(R, "a*d - b*c"));
  REQUIRE(all_minors(M, 3).empty());

  REQUIRE_THROWS_AS(all_minors(N, 1, 2), MinorBudgetExceeded);
  try {
    all_minors(N, 1, 2);
  } catch (const MinorBudgetExceeded& e) {
    REQUIRE(e.count() == 9);
    REQUIRE(e.budget() == 2);
  }
}

TEST_CASE("size-zero minors give the unit ideal") {
  auto R = qring({"a"});
  PolyMatrix<QQ> M(R, 1, 1);
  M.at(0, 0) = pp(R, "a");
  auto I0 = minors_ideal(M, 0);
  REQUIRE(I0.is_unit_ideal());
}

TEST_CASE("block Jacobian of the two-generator example, entry by entry") {
  auto pres = present({"x1", "x2"});
  auto bj = block_jacobian(pres);
  const auto& T = pres.big_ring;  // x1, x2, y1, y2, z

  REQUIRE(bj.n == 2);
  REQUIRE(bj.m == 2);
  REQUIRE(bj.b == 1);
  REQUIRE(bj.full.rows() == 5);
  REQUIRE(bj.full.cols() == 4);

  PolyMatrix<QQ> want(T, 5, 4);
  // column 1: the lifted syzygy -x2*y1 + x1*y2
  want.at(0, 0) = pp(T, "y2");
  want.at(1, 0) = pp(T, "-y1");
  want.at(2, 0) = pp(T, "-x2");
  want.at(3, 0) = pp(T, "x1");
  // columns 2..4: y1^2 - z*x1^2, y1*y2 - z*x1*x2, y2^2 - z*x2^2
  want.at(0, 1) = pp(T, "-2*x1*z");
  want.at(0, 2) = pp(T, "-x2*z");
  want.at(1, 2) = pp(T, "-x1*z");
  want.at(1, 3) = pp(T, "-2*x2*z");
  want.at(2, 1) = pp(T, "2*y1");
  want.at(2, 2) = pp(T, "y2");
  want.at(3, 2) = pp(T, "y1");
  want.at(3, 3) = pp(T, "2*y2");
  want.at(4, 1) = pp(T, "-x1^2");
  want.at(4, 2) = pp(T, "-x1*x2");
  want.at(4, 3) = pp(T, "-x2^2");

  REQUIRE(bj.full.equals(want));
}

TEST_CASE("every block of the Jacobian reassembles from its closed form") {
  for (auto gens : {std::vector<std::string>{"x1", "x2"},
                    std::vector<std::string>{"x1*x2"},
                    std::vector<std::string>{"x1^2", "x1*x2", "x2^2"}}) {
    auto pres = present(gens);
    auto bj = block_jacobian(pres);
    auto bad = verify_block_structure(pres, bj);
    CAPTURE(gens);
    REQUIRE(bad.empty());
  }
}

TEST_CASE("nonzero minor count matches the frozen cross-check") {
  auto oracle = load_oracle("memberships.json");
  const auto& ex = example({"x1", "x2"});
  REQUIRE(ex.rep.minor_size == 2);
  REQUIRE(ex.rep.nonzero_minors == oracle.at("minor_count_nonzero").get<long>());
}

TEST_CASE("radical membership in the minors ideal matches the frozen cross-check") {
  auto oracle = load_oracle("memberships.json");
  const auto& ex = example({"x1", "x2"});
  bool got = radical_membership(pp(ex.pres.big_ring, "x1*x2"), ex.rep.minors);
  REQUIRE(got == oracle.at("x1x2_in_radical_I2").get<bool>());
}

TEST_CASE("two-generator example: minors ideal has height 4 = 2 + 2") {
  const auto& ex = example({"x1", "x2"});
  REQUIRE(ex.rep.height_of_minors == 4);
  REQUIRE(ex.rep.expected_height == 4);
  REQUIRE(ex.rep.height_matches);

  auto ver = verify_singular_locus(ex.pres, ex.rep);
  REQUIRE(ver.height_matches);
  REQUIRE(ver.located_minors_in_I_plus_y);
  REQUIRE(ver.pure_syzygy_minors_in_radical);
  REQUIRE(ver.product_inclusion);
  REQUIRE(ver.radical_described_by_primes);
  REQUIRE(ver.ok());
  // The unique minimal prime over the minors ideal is (x1, x2, y1, y2).
  REQUIRE(ver.claimed_primes == std::vector<std::vector<int>>{{0, 1, 2, 3}});
}

TEST_CASE("principal ideal example: height 2 and two minimal primes") {
  const auto& ex = example({"x1*x2"});
  REQUIRE(ex.rep.minor_size == 1);
  REQUIRE(ex.rep.height_of_minors == 2);
  REQUIRE(ex.rep.expected_height == 2);
  REQUIRE(ex.rep.height_matches);

  auto ver = verify_singular_locus(ex.pres, ex.rep);
  REQUIRE(ver.ok());
  // Ring is x1, x2, y1, z: the primes are (x1, y1) and (x2, y1).
  REQUIRE(ver.claimed_primes == std::vector<std::vector<int>>{{0, 2}, {1, 2}});
}

TEST_CASE("squared maximal ideal example: height 5 = 3 + 2") {
  const auto& ex = example({"x1^2", "x1*x2", "x2^2"});
  REQUIRE(ex.rep.minor_size == 3);
  REQUIRE(ex.rep.height_of_minors == 5);
  REQUIRE(ex.rep.expected_height == 5);
  REQUIRE(ex.rep.height_matches);

  auto ver = verify_singular_locus(ex.pres, ex.rep);
  REQUIRE(ver.ok());
  // Ring is x1, x2, y1, y2, y3, z: the unique prime is (x1, x2, y1, y2, y3).
  REQUIRE(ver.claimed_primes == std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
}

TEST_CASE("codimension of the singular locus inside the presented variety") {
  // dim of the presented quotient is n + 1; the singular locus has height
  // mu + ht(I) in the big ring, hence codimension ht(I) inside the variety.
  const auto& ex = example({"x1", "x2"});
  long big_arity = static_cast<long>(ex.pres.big_ring->arity());
  long variety_dim = big_arity - static_cast<long>(ex.pres.num_gens());  // = n + 1
  long sing_dim = big_arity - ex.rep.height_of_minors;
  REQUIRE(variety_dim - sing_dim == height(ex.pres.base_ideal));
}

TEST_CASE("y-Jacobian of the pure quadratic monomials catches each y_i^m") {
  for (std::size_t m : {2u, 3u}) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= m; ++i) names.push_back("y" + std::to_string(i));
    auto R = qring(names);
    std::vector<Polynomial<QQ>> prods;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j)
        prods.push_back(Polynomial<QQ>::variable(R, static_cast<int>(i)) *
                        Polynomial<QQ>::variable(R, static_cast<int>(j)));
    auto I = minors_ideal(jacobian(R, prods), m);
    for (std::size_t i = 0; i < m; ++i) {
      auto yi = Polynomial<QQ>::variable(R, static_cast<int>(i));
      REQUIRE(I.contains(yi.pow(static_cast<long>(m))));
    }
  }
}

TEST_CASE("monomial minimal primes") {
  auto R = qring({"x1", "x2", "x3"});
  using VV = std::vector<std::vector<int>>;
  REQUIRE(monomial_min_primes(Ideal<QQ>(R, {pp(R, "x1"), pp(R, "x2")})) == VV{{0, 1}});
  REQUIRE(monomial_min_primes(Ideal<QQ>(R, {pp(R, "x1*x2")})) == VV{{0}, {1}});
  REQUIRE(monomial_min_primes(Ideal<QQ>(R, {pp(R, "x1^2"), pp(R, "x1*x2"), pp(R, "x2^2")})) ==
          VV{{0, 1}});
  REQUIRE(monomial_min_primes(Ideal<QQ>(R, {pp(R, "x1*x2"), pp(R, "x3")})) ==
          VV{{0, 2}, {1, 2}});
  REQUIRE_THROWS_AS(monomial_min_primes(Ideal<QQ>(R, {pp(R, "x1 + x2")})),
                    std::invalid_argument);
}

TEST_CASE("positive characteristic is refused for the singular locus") {
  GFp F3(3);
  auto R = make_ring<GFp>(F3, {"x1", "x2"}, {1, 1});
  Ideal<GFp> I(R, {Polynomial<GFp>::variable(R, 0), Polynomial<GFp>::variable(R, 1)});
  auto pres = build_rees_like(I);
  REQUIRE_THROWS_AS(singular_locus(pres), std::invalid_argument);
}
