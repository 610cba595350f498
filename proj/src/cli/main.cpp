// Command-line front end. Parses a ring + ideal description (inline flags or
// a job file), dispatches one pipeline command, and prints either a
// human-readable report or a JSON document (--json) matching the shipped
// schema. Exit codes: 0 success, 1 input error, 2 when a verification
// command reports a violated check.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "reeslike/normality.hpp"
#include "reeslike/parse.hpp"
#include "reeslike/reports.hpp"

namespace {

using reeslike::GFp;
using reeslike::Ideal;
using reeslike::json;
using reeslike::Polynomial;
using reeslike::QQ;
using reeslike::RingPtr;

// ---------------------------------------------------------------------------
// Input descriptions.

struct RingSpec {
  std::vector<std::string> vars;
  std::vector<long> weights;
  long characteristic = 0;  // 0 means the rationals
};

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

// Natural comparison so that x2 sorts before x10.
std::pair<std::string, long long> name_key(const std::string& name) {
  std::size_t i = name.size();
  while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) --i;
  long long num = -1;
  if (i < name.size()) num = std::stoll(name.substr(i));
  return {name.substr(0, i), num};
}

bool natural_less(const std::string& a, const std::string& b) {
  auto ka = name_key(a), kb = name_key(b);
  if (ka.first != kb.first) return ka.first < kb.first;
  if (ka.second != kb.second) return ka.second < kb.second;
  return a < b;
}

// "x1:1, x2:1, z:2 over QQ" or "... over FF 3" / "... over GF(3)".
RingSpec parse_ring_spec(const std::string& text) {
  RingSpec spec;
  std::string vars_part = text, field_part = "QQ";
  std::size_t over = text.find(" over ");
  if (over != std::string::npos) {
    vars_part = text.substr(0, over);
    field_part = trim(text.substr(over + 6));
  }
  for (const auto& piece : split(vars_part, ',')) {
    std::string entry = trim(piece);
    if (entry.empty()) continue;
    std::size_t colon = entry.find(':');
    std::string name = trim(colon == std::string::npos ? entry : entry.substr(0, colon));
    long weight = 1;
    if (colon != std::string::npos) weight = std::stol(trim(entry.substr(colon + 1)));
    if (name.empty()) throw std::invalid_argument("empty variable name in ring description");
    spec.vars.push_back(name);
    spec.weights.push_back(weight);
  }
  if (spec.vars.empty()) throw std::invalid_argument("ring description lists no variables");

  if (field_part == "QQ" || field_part == "Q") {
    spec.characteristic = 0;
  } else if (field_part.rfind("FF", 0) == 0) {
    spec.characteristic = std::stol(trim(field_part.substr(2)));
  } else if (field_part.rfind("GF(", 0) == 0 && field_part.back() == ')') {
    spec.characteristic = std::stol(field_part.substr(3, field_part.size() - 4));
  } else {
    throw std::invalid_argument("unknown field '" + field_part + "' (use QQ or FF <p>)");
  }
  return spec;
}

// All identifiers appearing in the generator text, weight 1, over QQ.
RingSpec infer_ring(const std::string& ideal_text) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < ideal_text.size()) {
    char c = ideal_text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < ideal_text.size() &&
             (std::isalnum(static_cast<unsigned char>(ideal_text[j])) || ideal_text[j] == '_'))
        ++j;
      names.push_back(ideal_text.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  std::sort(names.begin(), names.end(), natural_less);
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (names.empty())
    throw std::invalid_argument("cannot infer a ring: the ideal text names no variables");
  RingSpec spec;
  spec.vars = std::move(names);
  spec.weights.assign(spec.vars.size(), 1);
  return spec;
}

struct Job {
  RingSpec ring;
  std::string ideal_text;
};

// Job file format: a "ring:" header line and an "ideal:" line whose generator
// list may continue on following lines. Blank lines and #-comments skipped.
Job load_job_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file " + path);
  Job job;
  bool have_ring = false, in_ideal = false;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("ring:", 0) == 0) {
      job.ring = parse_ring_spec(trim(t.substr(5)));
      have_ring = true;
      in_ideal = false;
    } else if (t.rfind("ideal:", 0) == 0) {
      job.ideal_text = trim(t.substr(6));
      in_ideal = true;
    } else if (in_ideal) {
      job.ideal_text += " " + t;
    } else {
      throw std::invalid_argument("unexpected line in job file: " + t);
    }
  }
  if (!have_ring) throw std::invalid_argument("job file has no ring: header");
  if (job.ideal_text.empty()) throw std::invalid_argument("job file has no ideal: line");
  return job;
}

// ---------------------------------------------------------------------------
// Options gathered from the command line.

struct Options {
  std::string command;
  std::string file, ring_text, ideal_text;
  bool json_out = false;

  std::string mode = "both";        // invariants
  std::string order = "grevlex";    // gb
  std::string kind = "step";        // standardize
  std::vector<std::string> selected_vars;
  bool decompose = false;           // link
  bool multiplicities = false;      // link
  bool probe = false;               // seminormal
  int sigma = 3;
  long bound = 6;
  std::string radical_flag;         // seminormal: yes/no for non-monomial input
  bool cone = false;                // fsplit
  unsigned long long budget = 20000;  // singloc minor budget
  std::string example_id;
  bool list_examples = false;
};

struct Outcome {
  bool ok = true;
  json data;
  std::string text;
};

template <class F>
struct Session {
  RingPtr<F> ring;
  Ideal<F> ideal;
};

template <class F>
Session<F> make_session(const F& field, const RingSpec& spec, const std::string& ideal_text) {
  auto R = reeslike::make_ring<F>(field, spec.vars, spec.weights);
  std::vector<Polynomial<F>> gens;
  for (const auto& piece : split(ideal_text, ',')) {
    std::string g = trim(piece);
    if (g.empty()) throw std::invalid_argument("empty generator in ideal list");
    gens.push_back(reeslike::parse_polynomial<F>(g, R));
  }
  return {R, Ideal<F>(R, std::move(gens))};
}

template <class F>
std::string ring_text(const RingPtr<F>& R) {
  std::string s = reeslike::field_label(R->field()) + "[";
  for (std::size_t v = 0; v < R->arity(); ++v) {
    if (v) s += ", ";
    s += R->vars()[v] + ":" + std::to_string(R->weights()[v]);
  }
  return s + "]";
}

template <class F>
std::string poly_lines(const std::vector<Polynomial<F>>& v, const std::string& indent = "  ") {
  std::string s;
  for (const auto& p : v) s += indent + to_string(p) + "\n";
  return s;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// Commands.

template <class F>
Outcome cmd_present(const Session<F>& s) {
  auto pres = reeslike::build_rees_like(s.ideal);
  Outcome out;
  out.data = reeslike::presentation_json(pres);
  std::ostringstream t;
  t << "base ring:     " << ring_text(pres.base_ring) << "\n"
    << "extended ring: " << ring_text(pres.big_ring) << "\n"
    << "minimal generators (" << pres.f.size() << "):\n"
    << poly_lines(pres.f) << "syzygy part (" << pres.syz_gens.size() << "):\n"
    << poly_lines(pres.syz_gens) << "product part (" << pres.gen_gens.size() << "):\n"
    << poly_lines(pres.gen_gens);
  out.text = t.str();
  return out;
}

template <class F>
Outcome cmd_invariants(const Session<F>& s, const std::string& mode) {
  auto pres = reeslike::build_rees_like(s.ideal);
  auto inv = reeslike::rees_like_invariants(pres);
  Outcome out;
  out.ok = mode == "both" ? inv.all_match() : true;
  out.data = reeslike::invariants_json(inv, mode);
  std::ostringstream t;
  t << "  " << std::left << std::setw(22) << "invariant";
  if (mode != "computed") t << std::setw(9) << "formula";
  if (mode != "formula") t << std::setw(10) << "computed";
  if (mode == "both") t << "match";
  t << "\n";
  for (const auto& p : inv.pairs) {
    t << "  " << std::left << std::setw(22) << p.name;
    if (mode != "computed") t << std::setw(9) << p.formula;
    if (mode != "formula") t << std::setw(10) << p.computed;
    if (mode == "both") t << yesno(p.match());
    t << "\n";
  }
  if (mode == "both") t << "all match: " << yesno(inv.all_match()) << "\n";
  out.text = t.str();
  return out;
}

template <class F>
Outcome cmd_jacobian(const Session<F>& s) {
  auto pres = reeslike::build_rees_like(s.ideal);
  auto bj = reeslike::block_jacobian(pres);
  auto problems = reeslike::verify_block_structure(pres, bj);
  Outcome out;
  out.ok = problems.empty();
  out.data = reeslike::block_jacobian_json(bj);
  out.data["block_structure_verified"] = problems.empty();
  out.data["problems"] = problems;
  std::ostringstream t;
  t << "Jacobian of the presentation: " << bj.full.rows() << " x " << bj.full.cols()
    << " over " << ring_text(pres.big_ring) << "\n"
    << "rows: " << bj.n << " base vars, " << bj.m << " y's, 1 z; columns: " << bj.b
    << " syzygy, " << (bj.full.cols() - bj.b) << " product\n";
  for (std::size_t r = 0; r < bj.full.rows(); ++r) {
    t << "  [ ";
    for (std::size_t c = 0; c < bj.full.cols(); ++c) {
      if (c) t << ", ";
      t << to_string(bj.full.at(r, c));
    }
    t << " ]\n";
  }
  t << "block structure verified: " << yesno(problems.empty()) << "\n";
  for (const auto& p : problems) t << "  problem: " << p << "\n";
  out.text = t.str();
  return out;
}

template <class F>
Outcome cmd_singloc(const Session<F>& s, unsigned long long budget) {
  auto pres = reeslike::build_rees_like(s.ideal);
  auto rep = reeslike::singular_locus(pres, budget);
  auto ver = reeslike::verify_singular_locus(pres, rep, budget);
  Outcome out;
  out.ok = ver.ok();
  out.data["minors"] = reeslike::singular_locus_json(rep);
  out.data["verification"] = reeslike::singular_locus_verification_json(ver);
  std::ostringstream t;
  t << "maximal minors of the Jacobian: size " << rep.minor_size << ", " << rep.nonzero_minors
    << " nonzero\n"
    << "height of the minors ideal: " << rep.height_of_minors << " (expected "
    << rep.expected_height << ", match: " << yesno(rep.height_matches) << ")\n"
    << "minors meet the expected components: " << yesno(ver.located_minors_in_I_plus_y) << "\n"
    << "pure syzygy minors lie in the radical: " << yesno(ver.pure_syzygy_minors_in_radical)
    << "\n"
    << "product-block inclusion: " << yesno(ver.product_inclusion) << "\n"
    << "radical equals the prime intersection: " << yesno(ver.radical_described_by_primes)
    << "\n"
    << "all checks: " << yesno(ver.ok()) << "\n";
  out.text = t.str();
  return out;
}

template <class F>
Outcome cmd_standardize(const Session<F>& s, const std::string& kind,
                        const std::vector<std::string>& selected) {
  std::pair<reeslike::Standardization<F>, Ideal<F>> result;
  if (kind == "step") {
    result = reeslike::step_by_step(s.ring, s.ideal);
  } else if (kind == "prime") {
    std::vector<int> idx;
    for (const auto& name : selected) {
      int v = s.ring->var_index(name);
      if (v < 0) throw std::invalid_argument("unknown variable " + name);
      idx.push_back(v);
    }
    result = reeslike::prime_standardize(s.ring, s.ideal, idx);
  } else {
    throw std::invalid_argument("unknown standardization kind " + kind);
  }
  auto& [sm, image] = result;
  Outcome out;
  out.ok = sm.is_graded();
  out.data = reeslike::standardization_json(sm, image);
  std::ostringstream t;
  t << "standardization kind: " << out.data["kind"].template get<std::string>() << "\n"
    << "source: " << ring_text(sm.source) << "\n"
    << "target: " << ring_text(sm.target) << "\n"
    << "variable images:\n";
  for (std::size_t v = 0; v < sm.source->arity(); ++v)
    t << "  " << sm.source->vars()[v] << " -> " << to_string(sm.images[v]) << "\n";
  t << "image ideal:\n" << poly_lines(image.gens());
  t << "degree-preserving: " << yesno(sm.is_graded()) << "\n";
  out.text = t.str();
  return out;
}

template <class F>
Outcome cmd_link(const Session<F>& s, bool decompose, bool multiplicities) {
  auto pres = reeslike::build_rees_like(s.ideal);
  auto rep = reeslike::colon_link_report(pres);
  Outcome out;
  out.ok = rep.all();
  out.data = reeslike::colon_link_json(rep);
  std::ostringstream t;
  t << "squares ideal:\n"
    << poly_lines(rep.squares.gens()) << "bridge forms:\n"
    << "  even: " << to_string(rep.even) << "\n"
    << "  odd:  " << to_string(rep.odd) << "\n"
    << "squares : odd = presentation: " << yesno(rep.colon_by_odd_is_presentation) << "\n"
    << "(squares + odd) : even recovers the cone: " << yesno(rep.colon_by_even_recovers_cone)
    << "\n"
    << "squares : presentation = squares + bridges: "
    << yesno(rep.colon_by_presentation_is_bridge_sum) << "\n";
  if (decompose) {
    auto dec = reeslike::sign_component_decomposition(pres, multiplicities);
    out.ok = out.ok && dec.components_pairwise_distinct && dec.intersection_equals_squares &&
             (!multiplicities || dec.multiplicity_additive);
    out.data["decomposition"] = reeslike::sign_decomposition_json(dec);
    t << "sign components: " << dec.components.size() << " (pairwise distinct: "
      << yesno(dec.components_pairwise_distinct)
      << ", intersection = squares: " << yesno(dec.intersection_equals_squares) << ")\n";
    if (multiplicities) {
      t << "multiplicity " << dec.squares_multiplicity << " splits additively: "
        << yesno(dec.multiplicity_additive) << "\n";
    }
  }
  t << "all checks: " << yesno(out.ok) << "\n";
  out.text = t.str();
  return out;
}

template <class F>
Outcome cmd_canonical(const Session<F>& s) {
  auto pres = reeslike::build_rees_like(s.ideal);
  auto rep = reeslike::canonical_module_report(pres);
  Outcome out;
  out.ok = rep.augmentation_lands_in_squares && rep.cofactor_identities_hold &&
           rep.killed_by_presentation && rep.self_dual && rep.complex.composes_to_zero &&
           rep.complex.minimal && rep.type == 2;
  out.data = reeslike::canonical_module_json(rep);
  std::ostringstream t;
  t << "canonical-module relation matrix (" << rep.relation_matrix.rows() << " x "
    << rep.relation_matrix.cols() << "):\n";
  for (std::size_t r = 0; r < rep.relation_matrix.rows(); ++r) {
    t << "  [ ";
    for (std::size_t c = 0; c < rep.relation_matrix.cols(); ++c) {
      if (c) t << ", ";
      t << to_string(rep.relation_matrix.at(r, c));
    }
    t << " ]\n";
  }
  t << "resolving complex ranks:";
  t << " 2";
  for (const auto& d : rep.complex.diff) t << " " << d.cols();
  t << "\n";
  t << "complex composes to zero: " << yesno(rep.complex.composes_to_zero) << "\n"
    << "complex is minimal: " << yesno(rep.complex.minimal) << "\n"
    << "augmentation lands in the squares ideal: " << yesno(rep.augmentation_lands_in_squares)
    << "\n"
    << "cofactor identities hold: " << yesno(rep.cofactor_identities_hold) << "\n"
    << "presentation kills the module: " << yesno(rep.killed_by_presentation) << "\n"
    << "self-dual: " << yesno(rep.self_dual) << "\n"
    << "Cohen-Macaulay type: " << rep.type << "\n"
    << "all checks: " << yesno(out.ok) << "\n";
  out.text = t.str();
  return out;
}

template <class F>
Outcome cmd_seminormal(const Session<F>& s, const Options& opt) {
  Outcome out;
  std::ostringstream t;
  if (!opt.radical_flag.empty()) {
    auto rep = reeslike::rees_like_seminormality(s.ideal, opt.radical_flag == "yes");
    out.data = reeslike::seminormality_json(rep);
    t << "radicality supplied by caller: " << opt.radical_flag << "\n";
    t << "verdict: " << out.data["status"].template get<std::string>() << "\n";
  } else {
    auto rep = reeslike::rees_like_seminormality(s.ideal);
    out.data = reeslike::seminormality_json(rep);
    t << "monomial input: " << yesno(rep.monomial) << "\n";
    if (rep.monomial) t << "radical: " << yesno(rep.radical) << "\n";
    t << "verdict: " << out.data["status"].template get<std::string>() << "\n";
    if (rep.cube.found) {
      t << "cube witness: " << to_string(rep.cube.element) << " (power " << rep.cube.power
        << ")\n";
      out.ok = rep.probe.refuted() && rep.probe.witness_outside &&
               rep.probe.witness_square_inside && rep.probe.witness_power_inside;
      out.data["probe"] = reeslike::probe_json(rep.probe);
      t << "probe confirms: " << yesno(out.ok) << " (witness "
        << to_string(rep.probe.witness) << ")\n";
    }
  }
  if (opt.probe) {
    auto probe = reeslike::seminormality_probe(s.ideal, opt.sigma, opt.bound);
    out.data["probe"] = reeslike::probe_json(probe);
    t << "probe (sigma " << opt.sigma << ", bound " << opt.bound << "): ";
    if (probe.refuted()) {
      t << "counterexample " << to_string(probe.witness) << "\n";
      out.ok = out.ok && probe.witness_outside && probe.witness_square_inside &&
               probe.witness_power_inside;
    } else {
      t << "no counterexample up to the bound\n";
    }
  }
  out.text = t.str();
  return out;
}

template <class F>
Outcome cmd_fsplit(const Session<F>& s, bool cone) {
  Outcome out;
  auto base = reeslike::fedder_fsplit(s.ideal);
  out.data["base"] = reeslike::fsplit_json(base);
  std::ostringstream t;
  t << "characteristic: " << base.p << "\n"
    << "base quotient F-split: " << yesno(base.split) << "\n";
  if (base.split) t << "  certificate: " << to_string(base.certificate) << "\n";
  if (cone) {
    auto pres = reeslike::build_rees_like(s.ideal);
    auto cone_rep = reeslike::fedder_fsplit(pres.presentation);
    out.data["cone"] = reeslike::fsplit_json(cone_rep);
    out.data["agree"] = base.split == cone_rep.split;
    out.ok = base.split == cone_rep.split;
    t << "presented cone F-split: " << yesno(cone_rep.split) << "\n";
    if (cone_rep.split) t << "  certificate: " << to_string(cone_rep.certificate) << "\n";
    t << "verdicts agree: " << yesno(out.ok) << "\n";
  }
  out.text = t.str();
  return out;
}

template <class F>
Outcome cmd_gb(const Session<F>& s, const std::string& order_name) {
  std::vector<int> ranking(s.ring->arity());
  for (std::size_t v = 0; v < ranking.size(); ++v) ranking[v] = static_cast<int>(v);
  reeslike::MonomialOrder ord;
  if (order_name == "grevlex")
    ord = reeslike::MonomialOrder::grevlex(s.ring->arity());
  else if (order_name == "lex")
    ord = reeslike::MonomialOrder::lex(ranking);
  else if (order_name == "wdeglex")
    ord = reeslike::MonomialOrder::wdeglex(ranking);
  else
    throw std::invalid_argument("unknown order " + order_name);

  const auto& gb = s.ideal.groebner(ord);
  Outcome out;
  out.data["order"] = order_name;
  out.data["basis"] = reeslike::poly_list_json(gb);
  json leading = json::array();
  for (const auto& g : gb)
    leading.push_back(reeslike::monomial_str(*s.ring, g.leading_monomial()));
  out.data["leading_terms"] = leading;
  std::ostringstream t;
  t << "reduced Groebner basis (" << order_name << ", " << gb.size() << " elements):\n"
    << poly_lines(gb);
  out.text = t.str();
  return out;
}

template <class F>
Outcome cmd_resolve(const Session<F>& s) {
  auto res = reeslike::free_resolution(s.ideal);
  auto hd = reeslike::hilbert_data(s.ideal);
  Outcome out;
  out.data["resolution"] = reeslike::resolution_json(res);
  out.data["hilbert"] = reeslike::hilbert_json(hd);
  std::ostringstream t;
  t << "minimal free resolution of the quotient:\n"
    << "  projective dimension " << res.projective_dimension << ", regularity "
    << res.regularity << ", depth " << res.depth << "\n"
    << "graded Betti numbers (index, degree, count):\n";
  for (const auto& [key, count] : res.betti.counts)
    t << "  " << key.first << "  " << key.second << "  " << count << "\n";
  t << "Hilbert data: dim " << hd.dim << ", codim " << hd.codim << ", multiplicity "
    << hd.multiplicity << "\n";
  out.text = t.str();
  return out;
}

// ---------------------------------------------------------------------------
// Built-in example suite: each entry recomputes a worked construction and
// compares against embedded golden values; any mismatch makes the whole
// command exit nonzero.

struct Example {
  std::string id;
  std::string description;
  std::function<bool(json&)> run;
};

RingPtr<QQ> qq_ring(std::vector<std::string> vars, std::vector<long> weights = {}) {
  if (weights.empty()) weights.assign(vars.size(), 1);
  return reeslike::make_ring<QQ>(QQ{}, std::move(vars), std::move(weights));
}

Polynomial<QQ> qp(const RingPtr<QQ>& R, const std::string& s) {
  return reeslike::parse_polynomial<QQ>(s, R);
}

Ideal<QQ> two_linear_ideal() {
  auto S = qq_ring({"x1", "x2"});
  return Ideal<QQ>(S, {qp(S, "x1"), qp(S, "x2")});
}

std::vector<Example> example_registry() {
  std::vector<Example> ex;

  ex.push_back({"present-two-linear", "presentation of the two-variable maximal ideal",
                [](json& detail) {
                  auto pres = reeslike::build_rees_like(two_linear_ideal());
                  const auto& T = pres.big_ring;
                  bool ok = pres.syz_gens.size() == 1 && pres.gen_gens.size() == 3 &&
                            pres.syz_gens[0] == qp(T, "-x2*y1 + x1*y2") &&
                            pres.gen_gens[0] == qp(T, "y1^2 - z*x1^2") &&
                            pres.gen_gens[1] == qp(T, "y1*y2 - z*x1*x2") &&
                            pres.gen_gens[2] == qp(T, "y2^2 - z*x2^2");
                  detail["generators"] = reeslike::poly_list_json(pres.presentation.gens());
                  return ok;
                }});

  ex.push_back({"jacobian-ht2-ci", "block Jacobian of the same presentation, entry by entry",
                [](json& detail) {
                  auto pres = reeslike::build_rees_like(two_linear_ideal());
                  auto bj = reeslike::block_jacobian(pres);
                  const auto& T = pres.big_ring;
                  reeslike::PolyMatrix<QQ> want(T, 5, 4);
                  want.at(0, 0) = qp(T, "y2");
                  want.at(1, 0) = qp(T, "-y1");
                  want.at(2, 0) = qp(T, "-x2");
                  want.at(3, 0) = qp(T, "x1");
                  want.at(0, 1) = qp(T, "-2*x1*z");
                  want.at(0, 2) = qp(T, "-x2*z");
                  want.at(1, 2) = qp(T, "-x1*z");
                  want.at(1, 3) = qp(T, "-2*x2*z");
                  want.at(2, 1) = qp(T, "2*y1");
                  want.at(2, 2) = qp(T, "y2");
                  want.at(3, 2) = qp(T, "y1");
                  want.at(3, 3) = qp(T, "2*y2");
                  want.at(4, 1) = qp(T, "-x1^2");
                  want.at(4, 2) = qp(T, "-x1*x2");
                  want.at(4, 3) = qp(T, "-x2^2");
                  detail["matrix"] = reeslike::matrix_json(bj.full);
                  return bj.full.equals(want) &&
                         reeslike::verify_block_structure(pres, bj).empty();
                }});

  ex.push_back({"invariants-two-linear",
                "multiplicity 8, regularity 4, pd 3, depth 2, height 2, dimension 3",
                [](json& detail) {
                  auto inv =
                      reeslike::rees_like_invariants(reeslike::build_rees_like(two_linear_ideal()));
                  detail = reeslike::invariants_json(inv, "both");
                  return inv.all_match() && inv["multiplicity"].computed == 8 &&
                         inv["regularity"].computed == 4 &&
                         inv["projective_dimension"].computed == 3 &&
                         inv["depth"].computed == 2 && inv["height"].computed == 2 &&
                         inv["dimension"].computed == 3;
                }});

  ex.push_back({"singloc-ht2-ci", "singular locus height 4 = 2 generators + height 2",
                [](json& detail) {
                  auto pres = reeslike::build_rees_like(two_linear_ideal());
                  auto rep = reeslike::singular_locus(pres);
                  auto ver = reeslike::verify_singular_locus(pres, rep);
                  detail["minors"] = reeslike::singular_locus_json(rep);
                  detail["verification"] = reeslike::singular_locus_verification_json(ver);
                  return rep.height_of_minors == 4 && rep.height_matches && ver.ok();
                }});

  ex.push_back({"singloc-principal-product",
                "singular locus height 2 with two minimal primes for one product generator",
                [](json& detail) {
                  auto S = qq_ring({"x1", "x2"});
                  Ideal<QQ> I(S, {qp(S, "x1*x2")});
                  auto pres = reeslike::build_rees_like(I);
                  auto rep = reeslike::singular_locus(pres);
                  auto ver = reeslike::verify_singular_locus(pres, rep);
                  detail["minors"] = reeslike::singular_locus_json(rep);
                  return rep.height_of_minors == 2 && rep.height_matches && ver.ok() &&
                         ver.claimed_primes.size() == 2;
                }});

  ex.push_back({"standardize-codim-drop",
                "step-by-step heights (2, 2, 6, 5): ideal keeps height, singular locus drops",
                [](json& detail) {
                  auto R = qq_ring({"u", "v", "w", "x", "y", "z"}, {1, 1, 1, 2, 2, 2});
                  Ideal<QQ> Q(R, {qp(R, "x*v - y*u"), qp(R, "x*w - z*u"), qp(R, "y*w - z*v")});
                  auto [sm, Qstd] = reeslike::step_by_step(R, Q);
                  auto rep = reeslike::codim_preservation_harness(Q, sm);
                  detail["heights"] = {rep.height_before, rep.height_after,
                                       rep.sing_height_before, rep.sing_height_after};
                  return rep.height_before == 2 && rep.height_after == 2 &&
                         rep.sing_height_before == 6 && rep.sing_height_after == 5 &&
                         rep.ideal_height_agrees && !rep.codim_preserved;
                }});

  ex.push_back({"standardize-prime-preserves",
                "single-variable prime standardization keeps the codimension excess",
                [](json& detail) {
                  auto R = qq_ring({"u", "v", "w", "x", "y", "z"}, {1, 1, 1, 2, 2, 2});
                  Ideal<QQ> Q(R, {qp(R, "x*v - y*u"), qp(R, "x*w - z*u"), qp(R, "y*w - z*v")});
                  auto [sm, Qstd] = reeslike::prime_standardize(R, Q, {3});
                  auto rep = reeslike::codim_preservation_harness(Q, sm);
                  detail["heights"] = {rep.height_before, rep.height_after,
                                       rep.sing_height_before, rep.sing_height_after};
                  return rep.height_before == 2 && rep.height_after == 2 &&
                         rep.sing_height_before == 6 && rep.codim_preserved;
                }});

  ex.push_back({"gb-closed-form", "reduced y-first basis = squares plus the two bridge forms",
                [](json& detail) {
                  auto pres = reeslike::build_rees_like(two_linear_ideal());
                  auto rep = reeslike::bridge_groebner_report(pres);
                  detail["basis"] = reeslike::poly_list_json(rep.reduced_gb);
                  return rep.gb_is_squares_and_bridges && rep.initial_matches_closed_form &&
                         rep.pd_at_most_m_plus_one;
                }});

  ex.push_back({"link-colons", "the three colon identities linking squares, bridges, cone",
                [](json& detail) {
                  auto rep =
                      reeslike::colon_link_report(reeslike::build_rees_like(two_linear_ideal()));
                  detail = reeslike::colon_link_json(rep);
                  return rep.all();
                }});

  ex.push_back({"canonical-self-dual", "doubled Koszul complex, type 2, self-dual",
                [](json& detail) {
                  auto rep = reeslike::canonical_module_report(
                      reeslike::build_rees_like(two_linear_ideal()));
                  detail["type"] = rep.type;
                  detail["self_dual"] = rep.self_dual;
                  return rep.augmentation_lands_in_squares && rep.cofactor_identities_hold &&
                         rep.killed_by_presentation && rep.self_dual &&
                         rep.complex.composes_to_zero && rep.complex.minimal && rep.type == 2;
                }});

  ex.push_back({"bridge-forms-m3", "degree-3 bridge forms for the squared maximal ideal",
                [](json& detail) {
                  auto S = qq_ring({"x1", "x2"});
                  Ideal<QQ> I(S, {qp(S, "x1^2"), qp(S, "x1*x2"), qp(S, "x2^2")});
                  auto pres = reeslike::build_rees_like(I);
                  auto even = reeslike::bridge_even(pres, 3);
                  auto odd = reeslike::bridge_odd(pres, 3);
                  const auto& T = pres.big_ring;
                  detail["even"] = to_string(even);
                  detail["odd"] = to_string(odd);
                  return even == qp(T, "y1*y2*y3 + x1*x2^3*y1*z + x1^2*x2^2*y2*z + "
                                       "x1^3*x2*y3*z") &&
                         odd == qp(T, "x2^2*y1*y2 + x1*x2*y1*y3 + x1^2*y2*y3 + x1^3*x2^3*z");
                }});

  ex.push_back({"seminormal-square", "cube witness x*t refutes seminormality over (x^2)",
                [](json& detail) {
                  auto R = qq_ring({"x"});
                  auto rep = reeslike::rees_like_seminormality(Ideal<QQ>(R, {qp(R, "x^2")}));
                  detail = reeslike::seminormality_json(rep);
                  detail["probe"] = reeslike::probe_json(rep.probe);
                  bool clean = !reeslike::seminormality_probe(Ideal<QQ>(R, {qp(R, "x")}), 3, 6)
                                    .refuted();
                  return rep.status == reeslike::Seminormality::not_seminormal &&
                         rep.cube.found && rep.cube.element == qp(R, "x") &&
                         rep.probe.refuted() && rep.probe.witness_outside &&
                         rep.probe.witness_square_inside && rep.probe.witness_power_inside &&
                         clean;
                }});

  ex.push_back({"seminormal-curve",
                "weighted curve: b t^2 escapes the Rees algebra, its square and cube do not",
                [](json& detail) {
                  auto R = qq_ring({"x", "y", "z"}, {9, 10, 13});
                  Ideal<QQ> P(R, {qp(R, "y^4 - x^3*z"), qp(R, "x*y^3 - z^3"),
                                  qp(R, "x^4 - y*z^2")});
                  auto b = qp(R, "x^7*y^2 - 3*x^3*y^3*z^2 + x^2*z^5 + y^7*z");
                  reeslike::GBConfig cfg;
                  cfg.degree_cap = 800;
                  reeslike::IdealPowers<QQ> powers(P, cfg);
                  bool in1 = powers.power(1).contains(b);
                  bool in2 = powers.power(2).contains(b);
                  bool in4 = powers.power(4).contains(b * b);
                  bool in6 = powers.power(6).contains(b * b * b);
                  detail["b_in_first_power"] = in1;
                  detail["b_in_second_power"] = in2;
                  detail["b2_in_fourth_power"] = in4;
                  detail["b3_in_sixth_power"] = in6;
                  return in1 && !in2 && in4 && in6;
                }});

  ex.push_back({"fsplit-gf3", "colon criterion over GF(3): base and cone verdicts agree",
                [](json& detail) {
                  GFp f3{3};
                  auto S = reeslike::make_ring<GFp>(f3, {"x1", "x2"}, {1, 1});
                  auto g = [&](const std::string& s) {
                    return reeslike::parse_polynomial<GFp>(s, S);
                  };
                  Ideal<GFp> product(S, {g("x1*x2")});
                  Ideal<GFp> maximal(S, {g("x1"), g("x2")});
                  bool sp = reeslike::fedder_fsplit(product).split;
                  bool sm = reeslike::fedder_fsplit(maximal).split;
                  bool tp =
                      reeslike::fedder_fsplit(reeslike::build_rees_like(product).presentation)
                          .split;
                  bool tm =
                      reeslike::fedder_fsplit(reeslike::build_rees_like(maximal).presentation)
                          .split;
                  detail["base_product"] = sp;
                  detail["base_maximal"] = sm;
                  detail["cone_product"] = tp;
                  detail["cone_maximal"] = tm;
                  return sp && sm && tp && tm && sp == tp && sm == tm;
                }});

  return ex;
}

Outcome cmd_examples(const Options& opt) {
  auto registry = example_registry();
  Outcome out;
  std::ostringstream t;
  if (opt.list_examples) {
    json arr = json::array();
    for (const auto& e : registry) {
      arr.push_back(json{{"id", e.id}, {"description", e.description}});
      t << e.id << " - " << e.description << "\n";
    }
    out.data["examples"] = std::move(arr);
    out.data["all_ok"] = true;
    out.text = t.str();
    return out;
  }

  bool any = false, all_ok = true;
  json arr = json::array();
  for (const auto& e : registry) {
    if (!opt.example_id.empty() && e.id != opt.example_id) continue;
    any = true;
    json detail;
    bool ok = e.run(detail);
    all_ok = all_ok && ok;
    arr.push_back(json{{"id", e.id},
                       {"description", e.description},
                       {"ok", ok},
                       {"detail", std::move(detail)}});
    t << (ok ? "ok   " : "FAIL ") << e.id << " - " << e.description << "\n";
  }
  if (!any) throw std::invalid_argument("no example with id " + opt.example_id);
  out.ok = all_ok;
  out.data["examples"] = std::move(arr);
  out.data["all_ok"] = all_ok;
  t << (all_ok ? "all examples verified\n" : "SOME EXAMPLES FAILED\n");
  out.text = t.str();
  return out;
}

// ---------------------------------------------------------------------------
// Dispatch and output.

template <class F>
Outcome dispatch(const Session<F>& s, const Options& opt) {
  if (opt.command == "present") return cmd_present(s);
  if (opt.command == "invariants") return cmd_invariants(s, opt.mode);
  if (opt.command == "jacobian") return cmd_jacobian(s);
  if (opt.command == "singloc") return cmd_singloc(s, opt.budget);
  if (opt.command == "standardize") return cmd_standardize(s, opt.kind, opt.selected_vars);
  if (opt.command == "link") return cmd_link(s, opt.decompose, opt.multiplicities);
  if (opt.command == "canonical") return cmd_canonical(s);
  if (opt.command == "seminormal") return cmd_seminormal(s, opt);
  if (opt.command == "fsplit") return cmd_fsplit(s, opt.cone);
  if (opt.command == "gb") return cmd_gb(s, opt.order);
  if (opt.command == "resolve") return cmd_resolve(s);
  throw std::logic_error("unhandled command " + opt.command);
}

void emit(const Outcome& out, const Options& opt, const json& ring) {
  if (opt.json_out) {
    json envelope;
    envelope["command"] = opt.command;
    envelope["ring"] = ring;
    envelope["ok"] = out.ok;
    envelope["data"] = out.data;
    std::cout << envelope.dump(2) << "\n";
  } else {
    std::cout << out.text;
    if (!out.ok) std::cout << "verification failed\n";
  }
}

template <class F>
int run_over_field(const F& field, const Job& job, const Options& opt) {
  auto session = make_session(field, job.ring, job.ideal_text);
  Outcome out = dispatch(session, opt);
  emit(out, opt, reeslike::ring_json(session.ring));
  return out.ok ? 0 : 2;
}

int run(const Options& opt) {
  if (opt.command == "examples") {
    Outcome out = cmd_examples(opt);
    emit(out, opt, json(nullptr));
    return out.ok ? 0 : 2;
  }

  Job job;
  if (!opt.file.empty()) {
    job = load_job_file(opt.file);
    if (!opt.ideal_text.empty()) job.ideal_text = opt.ideal_text;
    if (!opt.ring_text.empty()) job.ring = parse_ring_spec(opt.ring_text);
  } else {
    if (opt.ideal_text.empty())
      throw std::invalid_argument("provide an ideal via --ideal or --file");
    job.ideal_text = opt.ideal_text;
    job.ring = opt.ring_text.empty() ? infer_ring(opt.ideal_text)
                                     : parse_ring_spec(opt.ring_text);
  }

  if (job.ring.characteristic == 0) return run_over_field(QQ{}, job, opt);
  return run_over_field(GFp{job.ring.characteristic}, job, opt);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rees-like algebra toolkit: presentations, invariants, singular loci,\n"
               "standardizations, linkage, canonical modules, seminormality, F-splitting"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--file", opt.file, "job file with ring: and ideal: lines");
    sub->add_option("--ring", opt.ring_text,
                    "ring description, e.g. \"x1:1, x2:1 over QQ\" or \"x over FF 3\"");
    sub->add_option("--ideal", opt.ideal_text, "comma-separated generators");
    sub->add_flag("--json", opt.json_out, "emit a JSON report");
  };

  add_common(app.add_subcommand("present", "build the defining presentation of the extended ring"));
  auto* inv = app.add_subcommand("invariants", "degree, regularity, depth and friends, two ways");
  add_common(inv);
  inv->add_option("--mode", opt.mode, "formula | computed | both")
      ->check(CLI::IsMember({"formula", "computed", "both"}));
  add_common(app.add_subcommand("jacobian", "block Jacobian matrix of the presentation"));
  auto* sing = app.add_subcommand("singloc", "singular locus via maximal minors");
  add_common(sing);
  sing->add_option("--budget", opt.budget, "minor expansion budget");
  auto* stdz = app.add_subcommand("standardize", "degree-preserving passage to weight one");
  add_common(stdz);
  stdz->add_option("--kind", opt.kind, "step | prime")
      ->check(CLI::IsMember({"step", "prime"}));
  stdz->add_option("--var", opt.selected_vars, "variables to replace (prime kind)");
  auto* link = app.add_subcommand("link", "colon links between the squares ideal and the cone");
  add_common(link);
  link->add_flag("--decompose", opt.decompose, "split the squares ideal into sign components");
  link->add_flag("--multiplicities", opt.multiplicities,
                 "also compare multiplicities (with --decompose)");
  add_common(app.add_subcommand("canonical", "canonical module and its doubled Koszul resolution"));
  auto* semi = app.add_subcommand("seminormal", "radicality test and seminormality verdict");
  add_common(semi);
  semi->add_flag("--probe", opt.probe, "run the bounded counterexample search");
  semi->add_option("--sigma", opt.sigma, "odd probe exponent (default 3)");
  semi->add_option("--bound", opt.bound, "probe degree bound (default 6)");
  semi->add_option("--radical", opt.radical_flag, "caller-supplied radicality: yes | no")
      ->check(CLI::IsMember({"yes", "no"}));
  auto* fs = app.add_subcommand("fsplit", "Frobenius splitting via the colon criterion");
  add_common(fs);
  fs->add_flag("--cone", opt.cone, "also test the presented cone and compare");
  auto* gb = app.add_subcommand("gb", "reduced Groebner basis");
  add_common(gb);
  gb->add_option("--order", opt.order, "grevlex | lex | wdeglex")
      ->check(CLI::IsMember({"grevlex", "lex", "wdeglex"}));
  add_common(app.add_subcommand("resolve", "minimal free resolution, Betti table, Hilbert data"));
  auto* exs = app.add_subcommand("examples", "replay the built-in verified example suite");
  exs->add_flag("--json", opt.json_out, "emit a JSON report");
  exs->add_option("--id", opt.example_id, "run a single example");
  exs->add_flag("--list", opt.list_examples, "list example ids without running them");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  opt.command = app.get_subcommands().front()->get_name();
  try {
    return run(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
