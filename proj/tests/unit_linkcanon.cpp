// Linkage layer: the squares complete intersection, bridge forms, colon
// links, sign-variant decomposition, lex Groebner behaviour, and the doubled
// Koszul complex with its duality and acyclicity certificates.

#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "reeslike/linkage.hpp"
#include "reeslike/rees.hpp"
#include "test_util.hpp"

using reeslike::GFp;
using reeslike::Ideal;
using reeslike::PolyMatrix;
using reeslike::Polynomial;
using reeslike::QQ;
using reeslike::ReesLikePresentation;
using reeslike::RingPtr;
using testutil::pp;
using testutil::qring;

namespace {

struct Fixtures {
  ReesLikePresentation<QQ> two_linear;     // base (x1, x2)
  ReesLikePresentation<QQ> square_max;     // base (x1^2, x1*x2, x2^2)
  ReesLikePresentation<QQ> principal_one;  // base (x) in a one-variable ring
};

const Fixtures& fx() {
  static const Fixtures f = [] {
    Fixtures r;
    auto S = qring({"x1", "x2"});
    r.two_linear = reeslike::build_rees_like(Ideal<QQ>(S, {pp(S, "x1"), pp(S, "x2")}));
    r.square_max = reeslike::build_rees_like(
        Ideal<QQ>(S, {pp(S, "x1^2"), pp(S, "x1*x2"), pp(S, "x2^2")}));
    auto S1 = qring({"x"});
    r.principal_one = reeslike::build_rees_like(Ideal<QQ>(S1, {pp(S1, "x")}));
    return r;
  }();
  return f;
}

PolyMatrix<QQ> mat(const RingPtr<QQ>& R, const std::vector<std::vector<std::string>>& rows) {
  PolyMatrix<QQ> M(R, rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) M.at(r, c) = pp(R, rows[r][c]);
  return M;
}

std::vector<long long> subtract_numerators(std::vector<long long> a,
                                           const std::vector<long long>& b) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

}  // namespace

TEST_CASE("bridge forms: subset expansion matches the recurrence") {
  for (const auto* pres : {&fx().two_linear, &fx().square_max}) {
    for (std::size_t j = 0; j <= pres->num_gens(); ++j) {
      auto [even, odd] = reeslike::bridge_pair_by_recurrence(*pres, j);
      REQUIRE(reeslike::bridge_even(*pres, j) == even);
      REQUIRE(reeslike::bridge_odd(*pres, j) == odd);
    }
  }
  const auto& T = fx().two_linear.big_ring;
  REQUIRE(reeslike::bridge_even(fx().two_linear, 0) == pp(T, "1"));
  REQUIRE(reeslike::bridge_odd(fx().two_linear, 0).is_zero());
  REQUIRE(reeslike::bridge_even(fx().two_linear, 2) == pp(T, "y1*y2 + z*x1*x2"));
  REQUIRE(reeslike::bridge_odd(fx().two_linear, 2) == pp(T, "x1*y2 + x2*y1"));
  REQUIRE_THROWS_AS(reeslike::bridge_even(fx().two_linear, 3), std::invalid_argument);
}

TEST_CASE("bridge forms for the squared maximal ideal") {
  const auto& pres = fx().square_max;
  const auto& T = pres.big_ring;
  REQUIRE(pres.f.size() == 3);
  REQUIRE(pres.f[0] == pp(pres.base_ring, "x1^2"));
  REQUIRE(pres.f[1] == pp(pres.base_ring, "x1*x2"));
  REQUIRE(pres.f[2] == pp(pres.base_ring, "x2^2"));
  REQUIRE(reeslike::bridge_even(pres, 3) ==
          pp(T, "y1*y2*y3 + x1*x2^3*y1*z + x1^2*x2^2*y2*z + x1^3*x2*y3*z"));
  REQUIRE(reeslike::bridge_odd(pres, 3) ==
          pp(T, "x2^2*y1*y2 + x1*x2*y1*y3 + x1^2*y2*y3 + x1^3*x2^3*z"));
}

TEST_CASE("multiplication identities tie squares to bridge forms") {
  for (const auto* pres : {&fx().two_linear, &fx().square_max, &fx().principal_one})
    for (std::size_t j = 1; j <= pres->num_gens(); ++j)
      REQUIRE(reeslike::bridge_multiplication_identities_hold(*pres, j));
}

TEST_CASE("squares ideal is a complete intersection inside the presentation") {
  for (const auto* pres : {&fx().two_linear, &fx().square_max}) {
    auto squares = reeslike::square_difference_ci(*pres);
    long m = static_cast<long>(pres->num_gens());
    REQUIRE(reeslike::height(squares) == m);
    REQUIRE(reeslike::dimension(squares) ==
            static_cast<long>(pres->base_ring->arity()) + 1);
    for (const auto& g : squares.gens()) REQUIRE(pres->presentation.contains(g));
    std::size_t k = 0;
    for (const auto& g : squares.gens())
      REQUIRE(g.weighted_degree().value == 2 * (pres->d[k++] + 1));
  }
}

TEST_CASE("colon links for two linear forms") {
  auto rep = reeslike::colon_link_report(fx().two_linear);
  REQUIRE(rep.colon_by_odd_is_presentation);
  REQUIRE(rep.colon_by_even_recovers_cone);
  REQUIRE(rep.colon_by_presentation_is_bridge_sum);
}

TEST_CASE("colon links against the frozen cross-checks") {
  const auto& pres = fx().two_linear;
  const auto& T = pres.big_ring;
  auto oracle = testutil::load_oracle("linkage_gb.json");
  auto ylex = reeslike::y_first_lex(pres);

  auto squares = reeslike::square_difference_ci(pres);
  REQUIRE(testutil::same_poly_set(
      squares.groebner(ylex),
      testutil::parse_list(T, oracle.at("C_m2_reduced_gb"))));

  std::vector<Polynomial<QQ>> bridge_gens = reeslike::square_difference_gens(pres);
  bridge_gens.push_back(reeslike::bridge_even(pres, 2));
  bridge_gens.push_back(reeslike::bridge_odd(pres, 2));
  Ideal<QQ> J(T, bridge_gens);
  auto gb = J.groebner(ylex);
  std::vector<Polynomial<QQ>> gb_sorted(gb.begin(), gb.end());
  REQUIRE(testutil::same_poly_set(
      gb_sorted, testutil::parse_list(T, oracle.at("J_m2_reduced_gb"))));

  auto nf = J.reduce(pp(T, "y1*y2").with_order(ylex), ylex);
  REQUIRE(nf == testutil::parse_starstar(
                    T, oracle.at("J_m2_nf_y1y2").get<std::string>()).with_order(ylex));
}

TEST_CASE("colon links for the squared maximal ideal") {
  auto rep = reeslike::colon_link_report(fx().square_max);
  REQUIRE(rep.colon_by_odd_is_presentation);
  REQUIRE(rep.colon_by_even_recovers_cone);
  REQUIRE(rep.colon_by_presentation_is_bridge_sum);
}

TEST_CASE("sign variants of the presentation kernel") {
  const auto& pres = fx().two_linear;
  const auto& T = pres.big_ring;
  auto plus_plus = reeslike::signed_presentation_kernel(pres, {1, 1});
  auto plus_minus = reeslike::signed_presentation_kernel(pres, {1, -1});
  auto minus_minus = reeslike::signed_presentation_kernel(pres, {-1, -1});

  REQUIRE(plus_plus.equals(pres.presentation));
  REQUIRE(minus_minus.equals(pres.presentation));  // flipping every sign
  REQUIRE_FALSE(plus_minus.equals(pres.presentation));
  REQUIRE(plus_plus.contains(pp(T, "y1*y2 - z*x1*x2")));
  REQUIRE_FALSE(plus_minus.contains(pp(T, "y1*y2 - z*x1*x2")));
  REQUIRE(plus_minus.contains(pp(T, "y1*y2 + z*x1*x2")));

  auto oracle = testutil::load_oracle("linkage_gb.json");
  REQUIRE(oracle.at("intersection_equals_C").get<bool>());
  auto meet = reeslike::intersect(plus_plus, plus_minus);
  Ideal<QQ> frozen(T, testutil::parse_list(T, oracle.at("kernel_pp_cap_pm")));
  REQUIRE(meet.equals(frozen));
  REQUIRE(meet.equals(reeslike::square_difference_ci(pres)));

  REQUIRE_THROWS_AS(reeslike::signed_presentation_kernel(pres, {1}), std::invalid_argument);
  REQUIRE_THROWS_AS(reeslike::signed_presentation_kernel(pres, {1, 2}), std::invalid_argument);
}

TEST_CASE("sign decomposition of the squares ideal, two linear forms") {
  auto dec = reeslike::sign_component_decomposition(fx().two_linear, true);
  REQUIRE(dec.sign_vectors.size() == 2);
  REQUIRE(dec.components_pairwise_distinct);
  REQUIRE(dec.intersection_equals_squares);
  for (long d : dec.component_dimensions) REQUIRE(d == 3);
  REQUIRE(dec.squares_multiplicity == 16);  // prod of the degrees 4 * 4
  REQUIRE(dec.component_multiplicities == std::vector<long long>{8, 8});
  REQUIRE(dec.multiplicity_additive);
}

TEST_CASE("sign decomposition of the squares ideal, squared maximal ideal") {
  auto dec = reeslike::sign_component_decomposition(fx().square_max, true);
  REQUIRE(dec.sign_vectors.size() == 4);
  REQUIRE(dec.components_pairwise_distinct);
  REQUIRE(dec.intersection_equals_squares);
  for (long d : dec.component_dimensions) REQUIRE(d == 3);
  REQUIRE(dec.squares_multiplicity == 216);  // prod of the degrees 6 * 6 * 6
  REQUIRE(dec.component_multiplicities == std::vector<long long>{54, 54, 54, 54});
  REQUIRE(dec.multiplicity_additive);
}

TEST_CASE("kernel elimination matches the frozen resultant") {
  // Eliminating t from (y - x t, z - t^2) is the simplest instance of the
  // signed kernel computation; the frozen file pins the result.
  auto oracle = testutil::load_oracle("linkage_gb.json");
  auto R = qring({"x", "y", "z"}, {1, 2, 2});
  auto ext = reeslike::prepend_vars(R, {"t"}, {1});
  Ideal<QQ> E(ext, {pp(ext, "y - x*t"), pp(ext, "z - t^2")});
  auto elim = reeslike::eliminate(E, {0});
  REQUIRE(elim.gens.size() == 1);
  auto back = elim.gens[0].embed(R);
  auto frozen = testutil::parse_starstar(
      R, oracle.at("resultant_y_xt_z_t2").get<std::string>());
  REQUIRE((back == frozen || back == -frozen));

  // The one-generator case degenerates: the squares ideal is the kernel.
  const auto& pres = fx().principal_one;
  REQUIRE(reeslike::square_difference_ci(pres).equals(pres.presentation));
  REQUIRE(reeslike::signed_presentation_kernel(pres, {1}).equals(pres.presentation));
}

TEST_CASE("y-first lex Groebner report, two linear forms") {
  auto rep = reeslike::bridge_groebner_report(fx().two_linear);
  REQUIRE(rep.gb_is_squares_and_bridges);
  REQUIRE(rep.initial_matches_closed_form);
  REQUIRE(rep.pd_at_most_m_plus_one);

  const auto& T = fx().two_linear.big_ring;
  auto oracle = testutil::load_oracle("linkage_gb.json");
  std::vector<reeslike::Monomial> frozen;
  for (const auto& p : testutil::parse_list(T, oracle.at("J_m2_initial_ideal")))
    frozen.push_back(p.leading_monomial());
  REQUIRE(rep.initial_gens.size() == frozen.size());
  for (const auto& m : frozen) {
    bool found = false;
    for (const auto& g : rep.initial_gens)
      if (g == m) found = true;
    REQUIRE(found);
  }
}

TEST_CASE("y-first lex Groebner report, squared maximal ideal") {
  auto rep = reeslike::bridge_groebner_report(fx().square_max);
  REQUIRE(rep.gb_is_squares_and_bridges);
  REQUIRE(rep.initial_matches_closed_form);
  REQUIRE(rep.reduced_gb.size() == 5);  // m squares plus the two bridge forms
  REQUIRE(rep.pd_at_most_m_plus_one);
}

TEST_CASE("doubled Koszul complex for the squared maximal ideal") {
  const auto& pres = fx().square_max;
  const auto& T = pres.big_ring;
  auto cx = reeslike::doubled_koszul_complex(pres);

  REQUIRE(cx.shifts.size() == 4);
  REQUIRE(cx.shifts[0] == std::vector<long>{9, 8});
  REQUIRE(cx.shifts[1] == std::vector<long>{12, 12, 12, 11, 11, 11});
  REQUIRE(cx.shifts[2] == std::vector<long>{15, 15, 15, 14, 14, 14});
  REQUIRE(cx.shifts[3] == std::vector<long>{18, 17});
  REQUIRE(cx.composes_to_zero);
  REQUIRE(cx.minimal);

  PolyMatrix<QQ> d1 = mat(T, {{"y1", "y2", "y3", "x1^2", "x1*x2", "x2^2"},
                              {"z*x1^2", "z*x1*x2", "z*x2^2", "y1", "y2", "y3"}});
  REQUIRE(cx.diff[0].equals(d1));

  PolyMatrix<QQ> d2 = mat(T, {{"-y2", "-y3", "0", "-x1*x2", "-x2^2", "0"},
                              {"y1", "0", "-y3", "x1^2", "0", "-x2^2"},
                              {"0", "y1", "y2", "0", "x1^2", "x1*x2"},
                              {"-z*x1*x2", "-z*x2^2", "0", "-y2", "-y3", "0"},
                              {"z*x1^2", "0", "-z*x2^2", "y1", "0", "-y3"},
                              {"0", "z*x1^2", "z*x1*x2", "0", "y1", "y2"}});
  REQUIRE(cx.diff[1].equals(d2));

  // The remaining differential agrees up to the sign of the top basis vector.
  PolyMatrix<QQ> d3 = mat(T, {{"-y3", "-x2^2"},
                              {"y2", "x1*x2"},
                              {"-y1", "-x1^2"},
                              {"-z*x2^2", "-y3"},
                              {"z*x1*x2", "y2"},
                              {"-z*x1^2", "-y1"}});
  REQUIRE(reeslike::detail::negated(cx.diff[2]).equals(d3));
  REQUIRE((d1 * d2).is_zero());
  REQUIRE((d2 * d3).is_zero());
}

TEST_CASE("doubled Koszul complex for two linear forms") {
  const auto& pres = fx().two_linear;
  auto cx = reeslike::doubled_koszul_complex(pres);
  REQUIRE(cx.shifts[0] == std::vector<long>{4, 3});
  REQUIRE(cx.shifts[1] == std::vector<long>{6, 6, 5, 5});
  REQUIRE(cx.shifts[2] == std::vector<long>{8, 7});
  REQUIRE(cx.composes_to_zero);
  REQUIRE(cx.minimal);
  REQUIRE(reeslike::paired_relation_matrix(pres).equals(cx.diff[0]));
}

TEST_CASE("duality pairing gives a chain isomorphism with the dual complex") {
  for (const auto* pres : {&fx().two_linear, &fx().square_max}) {
    auto cx = reeslike::doubled_koszul_complex(*pres);
    REQUIRE(reeslike::doubled_koszul_self_dual(*pres, cx));
    std::size_t m = pres->num_gens();
    for (std::size_t i = 0; i <= m; ++i) {
      auto P = reeslike::duality_pairing_matrix(*pres, i);
      REQUIRE(P.rows() == P.cols());
      for (std::size_t r = 0; r < P.rows(); ++r) {
        std::size_t nonzero = 0;
        for (std::size_t c = 0; c < P.cols(); ++c)
          if (!P.at(r, c).is_zero()) {
            ++nonzero;
            REQUIRE(P.at(r, c).max_weighted_degree() == 0);
          }
        REQUIRE(nonzero == 1);
      }
    }
  }
}

TEST_CASE("acyclicity certificate for the doubled Koszul complex") {
  auto one = reeslike::acyclicity_report(reeslike::doubled_koszul_complex(fx().principal_one));
  REQUIRE(one.expected_ranks == std::vector<long>{2});
  REQUIRE(one.acyclic());

  auto two = reeslike::acyclicity_report(reeslike::doubled_koszul_complex(fx().two_linear));
  REQUIRE(two.expected_ranks == std::vector<long>{2, 2});
  REQUIRE(two.euler_characteristic_zero);
  REQUIRE(two.ranks_witnessed);
  REQUIRE(two.minor_ideal_heights[0] >= 1);
  REQUIRE(two.minor_ideal_heights[1] >= 2);
  REQUIRE(two.acyclic());
}

TEST_CASE("graded shifts account for the two-generator quotient") {
  const auto& pres = fx().two_linear;
  auto cx = reeslike::doubled_koszul_complex(pres);
  auto numerator = reeslike::shifts_numerator(cx.shifts);
  REQUIRE(numerator == std::vector<long long>{0, 0, 0, 1, 1, -2, -2, 1, 1});

  auto squares = reeslike::square_difference_ci(pres);
  std::vector<Polynomial<QQ>> bridge_gens = reeslike::square_difference_gens(pres);
  bridge_gens.push_back(reeslike::bridge_even(pres, 2));
  bridge_gens.push_back(reeslike::bridge_odd(pres, 2));
  Ideal<QQ> J(pres.big_ring, bridge_gens);

  auto h_squares = reeslike::hilbert_data(squares);
  auto h_bridge = reeslike::hilbert_data(J);
  REQUIRE(subtract_numerators(h_squares.numerator, h_bridge.numerator) == numerator);
}

TEST_CASE("canonical quotient report, two linear forms") {
  auto rep = reeslike::canonical_module_report(fx().two_linear);
  REQUIRE(rep.augmentation_lands_in_squares);
  REQUIRE(rep.cofactor_identities_hold);
  REQUIRE(rep.killed_by_presentation);
  REQUIRE(rep.self_dual);
  REQUIRE(rep.type == 2);
}

TEST_CASE("canonical quotient report, squared maximal ideal") {
  auto rep = reeslike::canonical_module_report(fx().square_max);
  REQUIRE(rep.augmentation_lands_in_squares);
  REQUIRE(rep.cofactor_identities_hold);
  REQUIRE(rep.killed_by_presentation);
  REQUIRE(rep.self_dual);
  REQUIRE(rep.type == 2);
}

TEST_CASE("linkage constructions refuse characteristic two") {
  GFp f2{2};
  auto S = reeslike::make_ring<GFp>(f2, {"x1", "x2"}, {1, 1});
  auto x1 = reeslike::parse_polynomial<GFp>("x1", S);
  auto x2 = reeslike::parse_polynomial<GFp>("x2", S);
  auto pres = reeslike::build_rees_like(Ideal<GFp>(S, {x1, x2}));
  REQUIRE_THROWS_AS(reeslike::colon_link_report(pres), std::domain_error);
  REQUIRE_THROWS_AS(reeslike::sign_component_decomposition(pres), std::domain_error);
  REQUIRE_THROWS_AS(reeslike::canonical_module_report(pres), std::domain_error);

  GFp f3{3};
  auto S3 = reeslike::make_ring<GFp>(f3, {"x1", "x2"}, {1, 1});
  auto pres3 = reeslike::build_rees_like(
      Ideal<GFp>(S3, {reeslike::parse_polynomial<GFp>("x1", S3),
                      reeslike::parse_polynomial<GFp>("x2", S3)}));
  REQUIRE(reeslike::colon_link_report(pres3).all());
}

TEST_CASE("canonical quotient report needs base height at least two") {
  auto S = qring({"x1", "x2"});
  auto pres = reeslike::build_rees_like(Ideal<QQ>(S, {pp(S, "x1")}));
  REQUIRE_THROWS_AS(reeslike::canonical_module_report(pres), std::domain_error);
}
