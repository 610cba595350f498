#include <catch2/catch_amalgamated.hpp>

#include "reeslike/rees.hpp"
#include "test_util.hpp"

using namespace reeslike;
using testutil::load_oracle;
using testutil::parse_list;
using testutil::pp;
using testutil::qring;
using testutil::same_poly_set;

namespace {

Ideal<QQ> two_linear() {
  auto S = qring({"x1", "x2"});
  return Ideal<QQ>(S, {pp(S, "x1"), pp(S, "x2")});
}

Ideal<QQ> principal_product() {
  auto S = qring({"x1", "x2"});
  return Ideal<QQ>(S, {pp(S, "x1*x2")});
}

Ideal<QQ> squared_max() {
  auto S = qring({"x1", "x2"});
  return Ideal<QQ>(S, {pp(S, "x1^2"), pp(S, "x1*x2"), pp(S, "x2^2")});
}

// Check that g dies under x -> x, y_i -> f_i t, z -> t^2.
bool vanishes_under_substitution(const ReesLikePresentation<QQ>& pres,
                                 const Polynomial<QQ>& g) {
  std::vector<std::string> vars = pres.base_ring->vars();
  vars.push_back("t");
  std::vector<long> weights = pres.base_ring->weights();
  weights.push_back(1);
  auto St = reeslike::make_ring<QQ>(QQ{}, vars, weights);

  std::vector<Polynomial<QQ>> images;
  for (std::size_t v = 0; v < pres.base_ring->arity(); ++v)
    images.push_back(Polynomial<QQ>::variable(St, static_cast<int>(v)));
  auto t = Polynomial<QQ>::variable(St, static_cast<int>(St->arity()) - 1);
  for (std::size_t i = 0; i < pres.num_gens(); ++i)
    images.push_back(pres.f[i].embed(St) * t);
  images.push_back(t * t);
  return g.substitute(St, images).is_zero();
}

}  // namespace

TEST_CASE("worked two-generator example comes out exactly") {
  auto pres = build_rees_like(two_linear());
  const auto& T = pres.big_ring;

  REQUIRE(T->vars() == std::vector<std::string>{"x1", "x2", "y1", "y2", "z"});
  REQUIRE(T->weights() == std::vector<long>{1, 1, 2, 2, 2});
  REQUIRE(pres.f.size() == 2);
  REQUIRE(pres.f[0] == pp(pres.base_ring, "x1"));
  REQUIRE(pres.f[1] == pp(pres.base_ring, "x2"));
  REQUIRE(pres.d == std::vector<long>{1, 1});

  REQUIRE(pres.syz_gens.size() == 1);
  REQUIRE(pres.syz_gens[0] == pp(T, "-x2*y1 + x1*y2"));
  REQUIRE(pres.syzygy_degrees == std::vector<long>{2});

  REQUIRE(pres.gen_gens.size() == 3);
  REQUIRE(pres.gen_gens[0] == pp(T, "y1^2 - z*x1^2"));
  REQUIRE(pres.gen_gens[1] == pp(T, "y1*y2 - z*x1*x2"));
  REQUIRE(pres.gen_gens[2] == pp(T, "y2^2 - z*x2^2"));
}

TEST_CASE("principal ideals have no syzygy block") {
  auto pres = build_rees_like(principal_product());
  REQUIRE(pres.syz_gens.empty());
  REQUIRE(pres.gen_gens.size() == 1);
  REQUIRE(pres.gen_gens[0] == pp(pres.big_ring, "y1^2 - z*x1^2*x2^2"));
  REQUIRE(pres.big_ring->weights() == std::vector<long>{1, 1, 3, 2});
}

TEST_CASE("presentation generators vanish under the defining substitution") {
  for (const auto& I : {two_linear(), principal_product(), squared_max()}) {
    auto pres = build_rees_like(I);
    for (const auto& g : pres.presentation.gens())
      REQUIRE(vanishes_under_substitution(pres, g));
  }
}

TEST_CASE("presentation equals the elimination kernel") {
  auto oracle = load_oracle("kernels.json");
  struct Case {
    Ideal<QQ> I;
    std::string key;
  };
  std::vector<Case> cases = {{two_linear(), "kernel_x1_x2"},
                             {principal_product(), "kernel_x1x2"},
                             {squared_max(), "kernel_sq"}};
  for (const auto& c : cases) {
    auto pres = build_rees_like(c.I);
    auto kernel = presentation_kernel(pres);
    REQUIRE(pres.presentation.equals(kernel));
    // The frozen cross-check generators cut out the same ideal.
    auto frozen = parse_list<QQ>(pres.big_ring, oracle[c.key]);
    REQUIRE(kernel.equals(Ideal<QQ>(pres.big_ring, frozen)));
  }
}

TEST_CASE("presentation is homogeneous in the assigned grading") {
  for (const auto& I : {two_linear(), principal_product(), squared_max()}) {
    auto pres = build_rees_like(I);
    for (const auto& g : pres.presentation.gens()) REQUIRE(g.weighted_degree().is_value());
  }
}

TEST_CASE("invariants for two linear forms, both routes") {
  auto pres = build_rees_like(two_linear());
  auto inv = rees_like_invariants(pres);
  REQUIRE(inv.all_match());
  REQUIRE(inv["maxdeg"].computed == 4);
  REQUIRE(inv["multiplicity"].computed == 8);
  REQUIRE(inv["regularity"].computed == 4);
  REQUIRE(inv["projective_dimension"].computed == 3);
  REQUIRE(inv["depth"].computed == 2);
  REQUIRE(inv["height"].computed == 2);
  REQUIRE(inv["dimension"].computed == 3);
}

TEST_CASE("invariants for a principal quadric, both routes") {
  auto pres = build_rees_like(principal_product());
  auto inv = rees_like_invariants(pres);
  REQUIRE(inv.all_match());
  REQUIRE(inv["maxdeg"].computed == 6);
  REQUIRE(inv["multiplicity"].computed == 6);
  REQUIRE(inv["regularity"].computed == 5);
  REQUIRE(inv["projective_dimension"].computed == 1);
  REQUIRE(inv["depth"].computed == 3);
  REQUIRE(inv["height"].computed == 1);
  REQUIRE(inv["dimension"].computed == 3);
}

TEST_CASE("invariants for the squared maximal ideal, both routes") {
  auto pres = build_rees_like(squared_max());
  REQUIRE(pres.syz_gens.size() == 2);
  REQUIRE(pres.gen_gens.size() == 6);
  auto inv = rees_like_invariants(pres);
  REQUIRE(inv.all_match());
  REQUIRE(inv["maxdeg"].computed == 6);
  REQUIRE(inv["multiplicity"].computed == 54);
  REQUIRE(inv["regularity"].computed == 9);
  REQUIRE(inv["projective_dimension"].computed == 4);
  REQUIRE(inv["depth"].computed == 2);
  REQUIRE(inv["height"].computed == 3);
  REQUIRE(inv["dimension"].computed == 3);
}

TEST_CASE("name collisions are refused, not silently renamed") {
  auto S1 = qring({"x1", "y1"});
  REQUIRE_THROWS_AS(build_rees_like(Ideal<QQ>(S1, {pp(S1, "x1"), pp(S1, "y1")})),
                    std::invalid_argument);
  auto S2 = qring({"x1", "z"});
  REQUIRE_THROWS_AS(build_rees_like(Ideal<QQ>(S2, {pp(S2, "x1"), pp(S2, "z")})),
                    std::invalid_argument);
}

TEST_CASE("zero ideal is refused") {
  auto S = qring({"x1", "x2"});
  REQUIRE_THROWS_AS(build_rees_like(Ideal<QQ>::zero(S)), std::invalid_argument);
}
