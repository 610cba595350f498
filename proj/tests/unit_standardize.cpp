// Standardizations: step-by-step homogenization, prime standardization,
// prime-sequence certificates, partials-height bound, and the
// singular-locus codimension harness.

#include <catch2/catch_amalgamated.hpp>

#include "reeslike/rees.hpp"
#include "reeslike/resolution.hpp"
#include "reeslike/standardize.hpp"
#include "test_util.hpp"

using namespace reeslike;
using testutil::pp;
using testutil::qring;
using testutil::same_poly_set;

namespace {

// Determinantal ideal of [[x, y, z], [u, v, w]] in a ring where the top-row
// variables have weight 2 and the bottom-row ones weight 1.
Ideal<QQ> mixed_weight_determinantal(RingPtr<QQ>& ring_out) {
  ring_out = qring({"u", "v", "w", "x", "y", "z"}, {1, 1, 1, 2, 2, 2});
  auto& R = ring_out;
  return Ideal<QQ>(R, {pp(R, "x*v - y*u"), pp(R, "x*w - z*u"), pp(R, "y*w - z*v")});
}

}  // namespace

TEST_CASE("step-by-step expands each weight-d variable into d fresh factors") {
  RingPtr<QQ> R;
  auto Q = mixed_weight_determinantal(R);
  auto [sm, Qstd] = step_by_step(R, Q);

  REQUIRE(sm.kind == Standardization<QQ>::Kind::step_by_step);
  REQUIRE(sm.is_graded());
  REQUIRE_FALSE(sm.is_identity());

  const auto& T = sm.target;
  REQUIRE(T->vars() == std::vector<std::string>{"u", "v", "w", "x1", "x2", "y1", "y2",
                                                "z1", "z2"});
  for (long w : T->weights()) REQUIRE(w == 1);
  REQUIRE(sm.images[3] == pp(T, "x1*x2"));

  REQUIRE(same_poly_set(Qstd.gens(),
                        {pp(T, "x1*x2*v - y1*y2*u"), pp(T, "x1*x2*w - z1*z2*u"),
                         pp(T, "y1*y2*w - z1*z2*v")}));
}

TEST_CASE("step-by-step on an already standard ring is the identity") {
  auto R = qring({"x", "y"});
  Ideal<QQ> I(R, {pp(R, "x^2 + y^2")});
  auto [sm, Istd] = step_by_step(R, I);
  REQUIRE(sm.is_identity());
  REQUIRE(sm.target->same_structure(*R));
  REQUIRE(Istd.equals(I));
  REQUIRE(sm.apply(pp(R, "x^3 - y")) == pp(R, "x^3 - y"));
}

TEST_CASE("step-by-step refuses colliding fresh names") {
  auto R = qring({"x", "x1"}, {2, 1});
  Ideal<QQ> I(R, {pp(R, "x - x1^2")});
  REQUIRE_THROWS_AS(step_by_step(R, I), std::invalid_argument);
}

TEST_CASE("prime standardization formula for a single weight-2 variable") {
  auto R = qring({"t1"}, {2});
  Ideal<QQ> I(R, {pp(R, "t1")});
  auto [sm, Istd] = prime_standardize(R, I);
  REQUIRE(sm.kind == Standardization<QQ>::Kind::prime_full);
  const auto& T = sm.target;
  REQUIRE(T->vars() ==
          std::vector<std::string>{"w_1_0_1", "w_1_0_2", "w_1_1_1", "w_1_1_2"});
  REQUIRE(sm.images[0] == pp(T, "w_1_0_1*w_1_0_2 + w_1_1_1*w_1_1_2"));
  REQUIRE(Istd.gens().size() == 1);
  REQUIRE(Istd.gens()[0] == sm.images[0]);
  REQUIRE(sm.is_graded());
}

TEST_CASE("prime standardization of the two cuspidal relations, entry by entry") {
  auto R = qring({"x1", "x2", "x3"}, {1, 2, 3});
  Ideal<QQ> I(R, {pp(R, "x1^2 - x2"), pp(R, "x1^3 - x3")});
  auto [sm, Istd] = prime_standardize(R, I);
  const auto& T = sm.target;
  REQUIRE(T->arity() == 4 + 8 + 12);

  std::string L = "(w_1_0_1 + w_1_1_1 + w_1_2_1 + w_1_3_1)";
  auto f = pp(T, L + "^2 - (w_2_0_1*w_2_0_2 + w_2_1_1*w_2_1_2 + w_2_2_1*w_2_2_2 + "
                  "w_2_3_1*w_2_3_2)");
  auto g = pp(T, L + "^3 - (w_3_0_1*w_3_0_2*w_3_0_3 + w_3_1_1*w_3_1_2*w_3_1_3 + "
                  "w_3_2_1*w_3_2_2*w_3_2_3 + w_3_3_1*w_3_3_2*w_3_3_3)");
  REQUIRE(Istd.gens().size() == 2);
  REQUIRE(Istd.gens()[0] == f);
  REQUIRE(Istd.gens()[1] == g);
  REQUIRE(sm.is_graded());

  // The images form a prime sequence: disjoint supports, certified shapes.
  auto rep = prime_sequence_check(sm.images);
  REQUIRE(rep.is_prime_sequence);
  REQUIRE(rep.regular_sequence);
  REQUIRE(rep.element_status ==
          std::vector<std::string>{"linear", "sum-of-disjoint-products",
                                   "sum-of-disjoint-products"});
}

TEST_CASE("subset prime standardization carries unselected variables") {
  auto R = qring({"x", "y"}, {1, 2});
  Ideal<QQ> I(R, {pp(R, "x^2 - y")});
  auto [sm, Istd] = prime_standardize(R, I, {1});
  REQUIRE(sm.kind == Standardization<QQ>::Kind::prime_subset);
  const auto& T = sm.target;
  // n = 2, so three blocks of two fresh variables each, x carried over.
  REQUIRE(T->arity() == 7);
  REQUIRE(T->vars()[0] == "x");
  REQUIRE(sm.images[0] == pp(T, "x"));
  REQUIRE(sm.images[1] ==
          pp(T, "w_2_0_1*w_2_0_2 + w_2_1_1*w_2_1_2 + w_2_2_1*w_2_2_2"));
  REQUIRE(Istd.gens()[0] == pp(T, "x^2") - sm.images[1]);
  REQUIRE(sm.is_graded());
}

TEST_CASE("prime sequence check: certificates and counterexamples") {
  auto R = qring({"x", "y"});
  auto ok = prime_sequence_check<QQ>({pp(R, "x"), pp(R, "y")});
  REQUIRE(ok.is_prime_sequence);
  REQUIRE(ok.element_status == std::vector<std::string>{"linear", "linear"});

  auto bad = prime_sequence_check<QQ>({pp(R, "x*y")});
  REQUIRE_FALSE(bad.is_prime_sequence);
  REQUIRE(bad.element_status == std::vector<std::string>{"reducible"});
  REQUIRE_FALSE(bad.counterexample.empty());

  REQUIRE_FALSE(prime_sequence_check<QQ>({pp(R, "x^2")}).is_prime_sequence);

  // Shared variables: no certificate applies, refuse rather than guess.
  REQUIRE_THROWS_AS(prime_sequence_check<QQ>({pp(R, "x"), pp(R, "x + y")}),
                    std::invalid_argument);
  // No structural certificate for a general polynomial either.
  REQUIRE_THROWS_AS(prime_sequence_check<QQ>({pp(R, "x^2 + x*y")}),
                    std::invalid_argument);
}

TEST_CASE("height of the partials ideal of a replacement image") {
  // Weight 2, one variable: partials generate all four fresh variables.
  {
    auto R = qring({"t1"}, {2});
    auto [sm, Istd] = prime_standardize(R, Ideal<QQ>(R, {pp(R, "t1")}));
    auto rep = partials_height_check(sm, 0);
    REQUIRE(rep.height == 4);
    REQUIRE(rep.required == 2);
    REQUIRE(rep.ok);
    REQUIRE(rep.certificate.size() == 2);
  }
  // Weight 1: partials are units, height is infinite.
  {
    auto R = qring({"t1"}, {1});
    auto [sm, Istd] = prime_standardize(R, Ideal<QQ>(R, {pp(R, "t1")}));
    auto rep = partials_height_check(sm, 0);
    REQUIRE(rep.height == kInfiniteHeight);
    REQUIRE(rep.ok);
  }
  // The weight-3 image from the cuspidal example: two per block, four blocks.
  {
    auto R = qring({"x1", "x2", "x3"}, {1, 2, 3});
    auto [sm, Istd] = prime_standardize(R, Ideal<QQ>(R, {pp(R, "x3")}));
    auto rep = partials_height_check(sm, 2);
    REQUIRE(rep.required == 4);
    REQUIRE(rep.height == 8);
    REQUIRE(rep.ok);
  }
}

TEST_CASE("codimension drops under step-by-step on the determinantal example") {
  RingPtr<QQ> R;
  auto Q = mixed_weight_determinantal(R);
  auto [sm, Qstd] = step_by_step(R, Q);
  auto rep = codim_preservation_harness(Q, sm);
  REQUIRE(rep.height_before == 2);
  REQUIRE(rep.height_after == 2);
  REQUIRE(rep.ideal_height_agrees);
  REQUIRE(rep.sing_height_before == 6);
  REQUIRE(rep.sing_height_after == 5);
  REQUIRE(rep.excess_before == 4);
  REQUIRE(rep.excess_after == 3);
  REQUIRE_FALSE(rep.codim_preserved);
}

TEST_CASE("single-variable prime standardization preserves the codimension") {
  RingPtr<QQ> R;
  auto Q = mixed_weight_determinantal(R);
  auto [sm, Qstd] = prime_standardize(R, Q, {3});  // replace x only
  auto rep = codim_preservation_harness(Q, sm);
  REQUIRE(rep.height_before == 2);
  REQUIRE(rep.height_after == 2);
  REQUIRE(rep.sing_height_before == 6);
  REQUIRE(rep.excess_after == 4);
  REQUIRE(rep.codim_preserved);
}

TEST_CASE("identity standardization trivially preserves the codimension") {
  auto R = qring({"x", "y"});
  Ideal<QQ> I(R, {pp(R, "x^2 - y^2")});
  auto [sm, Istd] = step_by_step(R, I);
  REQUIRE(sm.is_identity());
  auto rep = codim_preservation_harness(I, sm);
  REQUIRE(rep.codim_preserved);
  REQUIRE(rep.excess_before == rep.excess_after);
}

TEST_CASE("the exact minors identity behind codimension preservation") {
  // One replaced variable: I_c of the substituted Jacobian equals the minors
  // from the carried rows plus the partials ideal times the substituted
  // original minors.
  {
    auto R = qring({"x", "y"}, {1, 2});
    Ideal<QQ> I(R, {pp(R, "x^2 - y")});
    auto [sm, Istd] = prime_standardize(R, I, {1});
    REQUIRE(codim_claim_identity_holds(I, sm, 1));
  }
  {
    auto R = qring({"x", "y"}, {1, 2});
    Ideal<QQ> I(R, {pp(R, "x^4 - y^2"), pp(R, "x^2*y - y^2")});
    auto [sm, Istd] = prime_standardize(R, I, {1});
    REQUIRE(codim_claim_identity_holds(I, sm, 1));
  }
  {
    auto R = qring({"y"}, {2});
    Ideal<QQ> I(R, {pp(R, "y^2")});
    auto [sm, Istd] = prime_standardize(R, I, {0});
    REQUIRE(codim_claim_identity_holds(I, sm, 0));
  }
  // Refusals: not single-variable, or the variable was not replaced.
  {
    auto R = qring({"x", "y"}, {1, 2});
    Ideal<QQ> I(R, {pp(R, "x^2 - y")});
    auto [sm_full, a] = prime_standardize(R, I);
    REQUIRE_THROWS_AS(codim_claim_identity_holds(I, sm_full, 1), std::invalid_argument);
    auto [sm_one, b] = prime_standardize(R, I, {1});
    REQUIRE_THROWS_AS(codim_claim_identity_holds(I, sm_one, 0), std::invalid_argument);
  }
}

TEST_CASE("graded Betti numbers transfer along a prime standardization") {
  // Small pair first: a complete intersection with a weighted variable.
  auto R = qring({"x", "y"}, {1, 2});
  Ideal<QQ> I(R, {pp(R, "x^2 - y"), pp(R, "y^2")});
  auto [sm, Istd] = prime_standardize(R, I, {1});
  auto before = free_resolution(I);
  auto after = free_resolution(Istd);
  REQUIRE(before.betti.counts == after.betti.counts);
  REQUIRE(before.projective_dimension == after.projective_dimension);
  REQUIRE(before.regularity == after.regularity);
}

TEST_CASE("heights transfer along standardizations") {
  auto R = qring({"x", "y", "z"}, {1, 2, 1});
  Ideal<QQ> I(R, {pp(R, "x^2 - y"), pp(R, "z^3")});
  long before = height(I);

  auto [sbs, I_sbs] = step_by_step(R, I);
  REQUIRE(height(I_sbs) == before);

  auto [psm, I_p] = prime_standardize(R, I, {1});
  REQUIRE(height(I_p) == before);
}

TEST_CASE("presented extended-algebra ideal keeps its height under step-by-step") {
  auto S = qring({"x1", "x2"});
  auto pres = build_rees_like(Ideal<QQ>(S, {pp(S, "x1"), pp(S, "x2")}));
  Ideal<QQ> P(pres.big_ring, [&] {
    auto v = pres.syz_gens;
    v.insert(v.end(), pres.gen_gens.begin(), pres.gen_gens.end());
    return v;
  }());
  REQUIRE(height(P) == 2);
  auto [sm, Pstd] = step_by_step(pres.big_ring, P);
  REQUIRE(sm.target->arity() == 8);  // y1, y2, z each split into two factors
  REQUIRE(height(Pstd) == 2);
}

TEST_CASE("Betti numbers of the presented ideal survive replacing one variable") {
  auto S = qring({"x1", "x2"});
  auto pres = build_rees_like(Ideal<QQ>(S, {pp(S, "x1"), pp(S, "x2")}));
  Ideal<QQ> P(pres.big_ring, [&] {
    auto v = pres.syz_gens;
    v.insert(v.end(), pres.gen_gens.begin(), pres.gen_gens.end());
    return v;
  }());
  auto [sm, Pstd] = prime_standardize(pres.big_ring, P, {pres.z_index()});
  REQUIRE(sm.target->arity() == 4 + 12);  // z replaced by six blocks of two

  auto before = free_resolution(P);
  auto after = free_resolution(Pstd);
  REQUIRE(before.betti.counts == after.betti.counts);
  REQUIRE(before.projective_dimension == after.projective_dimension);
  REQUIRE(before.regularity == after.regularity);
  REQUIRE(before.depth - after.depth ==
          static_cast<long>(pres.big_ring->arity()) -
              static_cast<long>(sm.target->arity()));
}
