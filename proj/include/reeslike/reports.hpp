#pragma once
// JSON views of the library's report structs, built on nlohmann::json.
// Polynomials, matrix entries, and monomial orders are serialized as their
// canonical text forms, so every number with a denominator travels as an
// exact string rather than a float. Each builder returns only the payload;
// the caller wraps it in whatever envelope it needs.

#include <string>
#include <vector>

#include <json.hpp>

#include "jacobian.hpp"
#include "linkage.hpp"
#include "normality.hpp"
#include "rees.hpp"
#include "resolution.hpp"
#include "standardize.hpp"

namespace reeslike {

using json = nlohmann::json;

inline std::string field_label(const QQ&) { return "QQ"; }
inline std::string field_label(const GFp& f) {
  return "GF(" + std::to_string(f.characteristic()) + ")";
}

template <class F>
json ring_json(const RingPtr<F>& R) {
  return json{{"vars", R->vars()},
              {"weights", R->weights()},
              {"field", field_label(R->field())}};
}

template <class F>
json poly_list_json(const std::vector<Polynomial<F>>& v) {
  json arr = json::array();
  for (const auto& p : v) arr.push_back(to_string(p));
  return arr;
}

template <class F>
json matrix_json(const PolyMatrix<F>& M) {
  json rows = json::array();
  for (std::size_t r = 0; r < M.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < M.cols(); ++c) row.push_back(to_string(M.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class F>
json presentation_json(const ReesLikePresentation<F>& pres) {
  json j;
  j["base_ring"] = ring_json(pres.base_ring);
  j["big_ring"] = ring_json(pres.big_ring);
  j["generators"] = poly_list_json(pres.f);
  j["generator_degrees"] = pres.d;
  j["syzygy_matrix"] = matrix_json(pres.syzygy_mat);
  j["syzygy_part"] = poly_list_json(pres.syz_gens);
  j["product_part"] = poly_list_json(pres.gen_gens);
  return j;
}

inline json invariants_json(const ReesLikeInvariants& inv, const std::string& mode) {
  json pairs = json::array();
  for (const auto& p : inv.pairs) {
    json e;
    e["name"] = p.name;
    if (mode != "computed") e["formula"] = p.formula;
    if (mode != "formula") e["computed"] = p.computed;
    if (mode == "both") e["match"] = p.match();
    pairs.push_back(std::move(e));
  }
  return json{{"mode", mode}, {"values", std::move(pairs)}, {"all_match", inv.all_match()}};
}

template <class F>
json block_jacobian_json(const BlockJacobian<F>& bj) {
  json j;
  j["matrix"] = matrix_json(bj.full);
  j["rows"] = bj.full.rows();
  j["cols"] = bj.full.cols();
  j["base_vars"] = bj.n;
  j["num_gens"] = bj.m;
  j["num_syzygies"] = bj.b;
  return j;
}

template <class F>
json singular_locus_json(const SingularLocusReport<F>& rep) {
  json j;
  j["minor_size"] = rep.minor_size;
  j["nonzero_minors"] = rep.nonzero_minors;
  j["minors_generators"] = poly_list_json(rep.minors.gens());
  j["height"] = rep.height_of_minors;
  j["expected_height"] = rep.expected_height;
  j["height_matches"] = rep.height_matches;
  return j;
}

template <class F>
json singular_locus_verification_json(const SingularLocusVerification<F>& v) {
  json j;
  j["height_matches"] = v.height_matches;
  j["located_minors_in_ideal_plus_y"] = v.located_minors_in_I_plus_y;
  j["pure_syzygy_minors_in_radical"] = v.pure_syzygy_minors_in_radical;
  j["product_inclusion"] = v.product_inclusion;
  j["radical_described_by_primes"] = v.radical_described_by_primes;
  j["claimed_primes"] = v.claimed_primes;
  j["ok"] = v.ok();
  return j;
}

template <class F>
json standardization_json(const Standardization<F>& std_map, const Ideal<F>& image) {
  const char* kind = "identity";
  switch (std_map.kind) {
    case Standardization<F>::Kind::step_by_step: kind = "step_by_step"; break;
    case Standardization<F>::Kind::prime_full: kind = "prime_full"; break;
    case Standardization<F>::Kind::prime_subset: kind = "prime_subset"; break;
    default: break;
  }
  json j;
  j["kind"] = kind;
  j["source_ring"] = ring_json(std_map.source);
  j["target_ring"] = ring_json(std_map.target);
  j["images"] = poly_list_json(std_map.images);
  j["graded"] = std_map.is_graded();
  j["image_ideal"] = poly_list_json(image.gens());
  return j;
}

template <class F>
json colon_link_json(const ColonLinkReport<F>& rep) {
  json j;
  j["even"] = to_string(rep.even);
  j["odd"] = to_string(rep.odd);
  j["squares"] = poly_list_json(rep.squares.gens());
  j["colon_by_odd_is_presentation"] = rep.colon_by_odd_is_presentation;
  j["colon_by_even_recovers_cone"] = rep.colon_by_even_recovers_cone;
  j["colon_by_presentation_is_bridge_sum"] = rep.colon_by_presentation_is_bridge_sum;
  j["ok"] = rep.all();
  return j;
}

template <class F>
json sign_decomposition_json(const SignDecomposition<F>& dec) {
  json comps = json::array();
  for (std::size_t i = 0; i < dec.components.size(); ++i) {
    json c;
    c["signs"] = dec.sign_vectors[i];
    c["generators"] = poly_list_json(dec.components[i].gens());
    c["dimension"] = dec.component_dimensions[i];
    if (i < dec.component_multiplicities.size())
      c["multiplicity"] = dec.component_multiplicities[i];
    comps.push_back(std::move(c));
  }
  json j;
  j["components"] = std::move(comps);
  j["pairwise_distinct"] = dec.components_pairwise_distinct;
  j["intersection_equals_squares"] = dec.intersection_equals_squares;
  if (dec.squares_multiplicity != 0) {
    j["squares_multiplicity"] = dec.squares_multiplicity;
    j["multiplicity_additive"] = dec.multiplicity_additive;
  }
  return j;
}

template <class F>
json doubled_complex_json(const DoubledKoszulComplex<F>& cx) {
  json diffs = json::array();
  for (const auto& d : cx.diff) diffs.push_back(matrix_json(d));
  json j;
  j["differentials"] = std::move(diffs);
  j["shifts"] = cx.shifts;
  j["composes_to_zero"] = cx.composes_to_zero;
  j["minimal"] = cx.minimal;
  return j;
}

template <class F>
json canonical_module_json(const CanonicalModuleReport<F>& rep) {
  json j;
  j["relation_matrix"] = matrix_json(rep.relation_matrix);
  j["even"] = to_string(rep.even);
  j["odd"] = to_string(rep.odd);
  j["complex"] = doubled_complex_json(rep.complex);
  j["augmentation_lands_in_squares"] = rep.augmentation_lands_in_squares;
  j["cofactor_identities_hold"] = rep.cofactor_identities_hold;
  j["killed_by_presentation"] = rep.killed_by_presentation;
  j["self_dual"] = rep.self_dual;
  j["type"] = rep.type;
  return j;
}

template <class F>
json seminormality_json(const SeminormalityReport<F>& rep) {
  const char* status = "undetermined";
  if (rep.status == Seminormality::seminormal) status = "seminormal";
  if (rep.status == Seminormality::not_seminormal) status = "not_seminormal";
  json j;
  j["status"] = status;
  j["monomial"] = rep.monomial;
  j["radical"] = rep.radical;
  if (rep.cube.found) {
    j["cube_witness"] = to_string(rep.cube.element);
    j["cube_witness_power"] = rep.cube.power;
  }
  return j;
}

template <class F>
json probe_json(const SeminormalityProbe<F>& probe) {
  json j;
  j["outcome"] = probe.refuted() ? "counterexample_found" : "none_found_up_to_bound";
  j["sigma"] = probe.sigma;
  j["bound"] = probe.bound;
  if (probe.refuted()) {
    j["witness"] = to_string(probe.witness);
    j["witness_base"] = to_string(probe.base_element);
    j["witness_outside"] = probe.witness_outside;
    j["witness_square_inside"] = probe.witness_square_inside;
    j["witness_power_inside"] = probe.witness_power_inside;
  }
  return j;
}

template <class F>
json fsplit_json(const FsplitReport<F>& rep) {
  json j;
  j["characteristic"] = rep.p;
  j["split"] = rep.split;
  if (rep.split) j["certificate"] = to_string(rep.certificate);
  return j;
}

inline json betti_json(const BettiTable& b) {
  json rows = json::array();
  for (const auto& [key, count] : b.counts)
    rows.push_back(json{{"index", key.first}, {"degree", key.second}, {"count", count}});
  return rows;
}

template <class F>
json resolution_json(const MinimalResolution<F>& res) {
  json j;
  j["betti"] = betti_json(res.betti);
  j["shifts"] = res.complex.shifts;
  j["projective_dimension"] = res.projective_dimension;
  j["regularity"] = res.regularity;
  j["depth"] = res.depth;
  return j;
}

inline json hilbert_json(const HilbertData& h) {
  json j;
  j["numerator"] = h.numerator;
  j["reduced_numerator"] = h.reduced_numerator;
  j["dim"] = h.dim;
  j["codim"] = h.codim;
  j["multiplicity"] = h.multiplicity;
  return j;
}

}  // namespace reeslike
