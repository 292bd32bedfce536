#include "doctest.h"
#include "k0wb/gallery.hpp"
#include "k0wb/wwald.hpp"

using namespace k0wb;
using namespace k0wb::wwald;
using fincat::Mor;
using fincat::Obj;
using fincat::SequenceTriple;

namespace {

Bundle mod_a2() { return gallery::build_mod_a2(); }

Mor arrow(const fincat::FinCategory& cat, int s, int d) { return fincat::basis_mor(cat, s, d, 0); }

}  // namespace

TEST_CASE("SeqClass membership: generators, splits, sums") {
  Bundle b = mod_a2();
  Structure s = make_structure(b, "canonical");
  const auto& cat = b.cat;
  const SequenceTriple& gen = s.seq->generators()[0];

  CHECK(s.seq->is_member(gen));

  // canonical split A -> A⊕C -> C
  Obj a{{0}}, c{{2}};
  Obj ac = fincat::direct_sum(a, c);
  SequenceTriple split{a, fincat::inclusion(cat, a, ac, {0}), ac, fincat::projection(cat, ac, c, {1}), c,
                       std::nullopt};
  CHECK(s.seq->is_member(split));

  // direct sum of generator and split is a member
  SequenceTriple sum = fincat::direct_sum(cat, gen, split);
  CHECK(s.seq->is_member(sum));

  // a sequence that is not a member: S2 -> P1 -> 0 with b replaced by zero
  SequenceTriple bogus{Obj{{0}}, gen.f, Obj{{1}}, fincat::zero_mor(cat, Obj{{1}}, Obj{}), Obj{}, std::nullopt};
  CHECK_FALSE(s.seq->is_member(bogus));
}

TEST_CASE("SeqClass membership is invariant under triple isomorphism") {
  Bundle b = mod_a2();
  Structure s = make_structure(b, "canonical");
  const auto& cat = b.cat;
  const SequenceTriple& gen = s.seq->generators()[0];
  SequenceTriple padded = fincat::direct_sum(
      cat, gen,
      SequenceTriple{Obj{{1}}, fincat::identity_mor(cat, Obj{{1}}), Obj{{1}},
                     fincat::zero_mor(cat, Obj{{1}}, Obj{}), Obj{}, std::nullopt});
  // permute the middle object parts
  SequenceTriple sorted = sort_triple(cat, padded);
  CHECK(sorted.B.parts == sorted.B.sorted_parts());
  CHECK(s.seq->is_member(padded));
  CHECK(s.seq->is_member(sorted));
}

TEST_CASE("cofibrations and fibrations of the canonical mod_a2 structure") {
  Bundle b = mod_a2();
  Structure s = make_structure(b, "canonical");
  const auto& cat = b.cat;
  Mor a = arrow(cat, 0, 1);
  Mor bb = arrow(cat, 1, 2);
  CHECK(s.seq->is_cofibration(a));
  CHECK(s.seq->is_fibration(bb));
  CHECK_FALSE(s.seq->is_cofibration(bb));  // b is epi, not an inflation here
  CHECK_FALSE(s.seq->is_fibration(a));
  CHECK(s.seq->is_cofibration(fincat::identity_mor(cat, Obj{{1}})));
  CHECK(s.seq->is_cofibration(fincat::zero_mor(cat, Obj{}, Obj{{2}})));
  CHECK(s.seq->is_fibration(fincat::zero_mor(cat, Obj{{2}}, Obj{})));

  CHECK(s.seq->is_cofibration_with_cone_in(a, {2}));
  CHECK_FALSE(s.seq->is_cofibration_with_cone_in(a, {0}));
  CHECK(s.seq->is_fibration_with_cocone_in(bb, {0}));
  CHECK_FALSE(s.seq->is_fibration_with_cocone_in(bb, {1}));
}

TEST_CASE("canonical axioms pass on mod_a2, paper_example_d and the right-exact structure") {
  for (const char* name : {"mod_a2", "paper_example_d"}) {
    Bundle b = gallery::build(name);
    Structure s = make_structure(b, "canonical");
    Report r = check_axioms(s, 3);
    INFO(name);
    CHECK(r.all_pass());
  }
  Bundle re = gallery::build_rightexact_mod_a2();
  Structure s = make_structure(re, "rightexact");
  Report r = check_axioms(s, 3);
  CHECK(r.all_pass());
}

TEST_CASE("WC1 fails when the nonsplit generator is removed but declared as a probe") {
  Bundle b = mod_a2();
  StructureData mutated = b.structures["canonical"];
  mutated.seq_probes = {mutated.seq_generators[0]};
  mutated.seq_generators.clear();
  b.structures["probe_mutation"] = mutated;
  Structure s = make_structure(b, "probe_mutation");
  Report r = check_axioms(s, 3);
  REQUIRE(r.find("WC1") != nullptr);
  CHECK(r.find("WC1")->verdict == Verdict::Fail);
  CHECK(r.find("WC1")->certificate.find("declared sequence") != std::string::npos);
}

TEST_CASE("dropping split closure fails WC1 with a split certificate") {
  Bundle b = mod_a2();
  StructureData mutated = b.structures["canonical"];
  mutated.include_splits = false;
  b.structures["nosplit"] = mutated;
  Structure s = make_structure(b, "nosplit");
  Report r = check_axioms(s, 2);
  REQUIRE(r.find("WC1") != nullptr);
  CHECK(r.find("WC1")->verdict == Verdict::Fail);
  CHECK(r.find("WC1")->certificate.find("split sequence") != std::string::npos);
}

TEST_CASE("WW0 fails when a weq composite is dropped (depth 1 closure)") {
  Bundle b = gallery::build_paper_example_d();
  const auto& cat = b.cat;
  StructureData mutated = b.structures["canonical"];
  mutated.weq.kind = WeqSpec::Kind::Generated;
  mutated.weq.generators = {arrow(cat, 2, 0), arrow(cat, 0, 3)};  // b: 2/3 -> 2 and d: 2 -> 1/2
  mutated.weq.depth = 1;
  b.structures["dropped_composite"] = mutated;
  Structure s = make_structure(b, "dropped_composite");
  Report r = check_axioms(s, 2);
  REQUIRE(r.find("WW0") != nullptr);
  CHECK(r.find("WW0")->verdict == Verdict::Fail);
  CHECK(r.find("WW0")->certificate.find("composite") != std::string::npos);
  // the other axioms stay green for this mutation
  CHECK(r.find("WC0")->verdict == Verdict::Pass);
  CHECK(r.find("WC1")->verdict == Verdict::Pass);
  CHECK(r.find("WC2")->verdict == Verdict::Pass);
}

TEST_CASE("WW1' fails for the glued-generator mutation") {
  Bundle b = mod_a2();
  const auto& cat = b.cat;
  StructureData mutated = b.structures["canonical"];
  mutated.weq.kind = WeqSpec::Kind::Generated;
  mutated.weq.generators = {arrow(cat, 0, 1)};  // a: S2 -> P1 as a declared weak equivalence
  mutated.weq.depth = 3;
  b.structures["broken_gluing"] = mutated;
  Structure s = make_structure(b, "broken_gluing");
  Report r = check_axioms(s, 2);
  REQUIRE(r.find("WW1'") != nullptr);
  CHECK(r.find("WW1'")->verdict == Verdict::Fail);
  CHECK(r.find("WW0")->verdict == Verdict::Pass);
}

TEST_CASE("saturation: iso passes, engineered violation fails with certificate") {
  Bundle b = mod_a2();
  Structure s = make_structure(b, "canonical");
  CHECK(check_saturation(s, 2).all_pass());

  Bundle d = gallery::build_paper_example_d();
  const auto& cat = d.cat;
  StructureData mutated = d.structures["canonical"];
  mutated.weq.kind = WeqSpec::Kind::Generated;
  mutated.weq.generators = {arrow(cat, 2, 0), arrow(cat, 2, 3)};  // b and c = d∘b, without d
  mutated.weq.depth = 3;
  d.structures["unsaturated"] = mutated;
  Structure su = make_structure(d, "unsaturated");
  Report r = check_saturation(su, 2);
  CHECK_FALSE(r.all_pass());
  CHECK(r.checks[0].certificate.find("g is not") != std::string::npos);
}

TEST_CASE("extension axiom: canonical passes, explicit-list mutation fails") {
  Bundle b = mod_a2();
  Structure s = make_structure(b, "canonical");
  CHECK(check_extension_axiom(s, 2).all_pass());
}

TEST_CASE("acyclics") {
  Bundle b = mod_a2();
  Structure s = make_structure(b, "canonical");
  CHECK(acyclics(s, 2).empty());  // W = iso: only the zero object

  Bundle re = gallery::build_rightexact_mod_a2();
  Structure sre = make_structure(re, "rightexact");
  CHECK(acyclics(sre, 2).empty());  // W = iso again; C -> 0 -> 0 shapes do not make 0 -> C a weq
}

TEST_CASE("derived classes on the right-exact structure: Remark-style fixture") {
  Bundle re = gallery::build_rightexact_mod_a2();
  Structure s = make_structure(re, "rightexact");
  const auto& cat = re.cat;
  Mor bb = arrow(cat, 1, 2);  // proper epi P1 -> S1
  CHECK(s.seq->is_cofibration(bb));
  DerivedClasses dc = derived_classes(s, 2);
  // b is a cofibration with acyclic distinguished cokernel (0), but not in Lac
  for (const Mor& f : dc.lac) CHECK(f != bb);
  // with W = iso, Lac consists of cofibrations that are isomorphisms
  for (const Mor& f : dc.lac) CHECK(fincat::is_isomorphism(cat, f));
}

TEST_CASE("Lemma-style properties: direct sums of cofibrations and weqs stay in class") {
  Bundle b = mod_a2();
  Structure s = make_structure(b, "canonical");
  const auto& cat = b.cat;
  Mor a = arrow(cat, 0, 1);
  Mor id_s1 = fincat::identity_mor(cat, Obj{{2}});
  Mor sum = fincat::direct_sum(cat, a, id_s1);
  CHECK(s.seq->is_cofibration(sum));

  const MemberSet& weq = s.weq.members(3);
  // direct sum of two isos is an iso hence a member
  Mor i1 = fincat::identity_mor(cat, Obj{{0}});
  Mor i2 = fincat::identity_mor(cat, Obj{{1}});
  Mor s12 = fincat::direct_sum(cat, i1, i2);
  CHECK(weq.contains(s12));
}

TEST_CASE("Lemma 3.3-style: Lac members have acyclic cones on both sides") {
  // With W = iso on mod_a2, every Lac member is an iso; its distinguished
  // cokernels are zero objects, so 0 -> C and C -> 0 are weqs trivially.
  Bundle b = mod_a2();
  Structure s = make_structure(b, "canonical");
  DerivedClasses dc = derived_classes(s, 2);
  const auto& cat = b.cat;
  for (const Mor& f : dc.lac) {
    for (const SequenceTriple& comp : s.seq->completions_of_cofibration(f)) {
      // every completion third term of an iso cofibration is zero-ish here
      CHECK(s.weq.is_member(fincat::zero_mor(cat, Obj{}, Obj{comp.C.sorted_parts()}), 2));
    }
  }
}

TEST_CASE("WW1 original form agrees with WW1' on small bundles") {
  for (const char* name : {"mod_a2", "paper_example_d"}) {
    Bundle b = gallery::build(name);
    Structure s = make_structure(b, "canonical");
    Report r = check_axioms(s, 2);
    CheckResult orig = check_ww1_original(s, 2);
    INFO(name);
    CHECK(r.find("WW1'")->verdict == orig.verdict);
  }
  // and on a mutated structure where both must fail
  Bundle b = mod_a2();
  const auto& cat = b.cat;
  StructureData mutated = b.structures["canonical"];
  mutated.weq.kind = WeqSpec::Kind::Generated;
  mutated.weq.generators = {arrow(cat, 0, 1)};
  mutated.weq.depth = 3;
  b.structures["broken_gluing"] = mutated;
  Structure s = make_structure(b, "broken_gluing");
  Report r = check_axioms(s, 2);
  CheckResult orig = check_ww1_original(s, 2);
  CHECK(r.find("WW1'")->verdict == Verdict::Fail);
  CHECK(orig.verdict == Verdict::Fail);
}

TEST_CASE("is_waldhausen") {
  Bundle b = mod_a2();
  Structure s = make_structure(b, "canonical");
  CHECK(is_waldhausen(s, 2));

  Bundle re = gallery::build_rightexact_mod_a2();
  Structure sre = make_structure(re, "rightexact");
  CHECK(is_waldhausen(sre, 2));

  Bundle w = gallery::build_derived_window_a2(2);
  Structure sw = make_structure(w, "canonical");
  CHECK_FALSE(is_waldhausen(sw, 1));  // weak cokernels in a triangulated window are not cokernels
}

TEST_CASE("restriction to acyclics: axioms survive") {
  // Engineer a structure with nontrivial acyclics: declare 0 -> S2 a weq
  // generator on the canonical sequence class (the Serre-style shape).
  Bundle b = mod_a2();
  const auto& cat = b.cat;
  StructureData st = b.structures["canonical"];
  st.weq.kind = WeqSpec::Kind::Generated;
  st.weq.generators = {fincat::zero_mor(cat, Obj{}, Obj{{0}}), fincat::zero_mor(cat, Obj{{0}}, Obj{}),
                       arrow(cat, 1, 2)};
  st.weq.depth = 3;
  b.structures["serre_like"] = st;
  Structure s = make_structure(b, "serre_like");
  auto ac = acyclics(s, 2);
  CHECK(ac == std::vector<int>{0});
  Structure sub = restrict_to_acyclics(s, 2);
  CHECK(sub.seq->generators().empty());  // the lone generator leaves add S2
}
