#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "catv/gpdsuite.hpp"

using namespace catv;

namespace {

Budget big_budget() { return Budget{50'000'000, 0}; }

int mor_between(const CatPtr& c, int dom, int cod) {
  for (int m = 0; m < c->n_mor(); ++m)
    if (c->mors[m].dom == dom && c->mors[m].cod == cod) return m;
  return -1;
}

}  // namespace

TEST_CASE("separate finds nerve-level witnesses") {
  CatPtr arr = walking_arrow();
  ProbeFamily pf = probes_for(arr);
  Budget b = big_budget();
  Functor idf = identity_functor(arr);
  Functor const0{arr, arr, {0, 0}, {arr->id_of[0], arr->id_of[0], arr->id_of[0]}, "c0"};
  REQUIRE(check_functor(const0).holds);

  Verdict v = separate(idf, const0, pf, b);
  CHECK(v.holds);
  CHECK(v.witness["test"] == "core inclusion");
  CHECK(v.witness["at_object"] == "1");

  Verdict eq = separate(idf, idf, pf, b);
  CHECK_FALSE(eq.holds);
  CHECK(eq.counterexample.contains("precondition"));

  // Equal on objects, different on morphisms: caught by the tautological cell.
  CatPtr pp = parallel_pair();
  ProbeFamily pf2 = probes_for(pp);
  int s = mor_between(pp, 0, 1);
  int t = -1;
  for (int m = 0; m < pp->n_mor(); ++m)
    if (pp->mors[m].dom == 0 && pp->mors[m].cod == 1 && m != s) t = m;
  Functor swap = identity_functor(pp);
  swap.mor[s] = t;
  swap.mor[t] = s;
  REQUIRE(check_functor(swap).holds);
  Verdict v2 = separate(identity_functor(pp), swap, pf2, b);
  CHECK(v2.holds);
  CHECK(v2.witness["test"] == "tautological 2-cell");
  CHECK(v2.witness["at"] == "f");
}

TEST_CASE("separate distinguishes parallel 2-cells") {
  CatPtr pp = parallel_pair();
  ProbeFamily pf = probes_for(pp);
  Budget b = big_budget();
  int s = mor_between(pp, 0, 1);
  int t = -1;
  for (int m = 0; m < pp->n_mor(); ++m)
    if (pp->mors[m].dom == 0 && pp->mors[m].cod == 1 && m != s) t = m;
  Functor ca{pp, pp, {0, 0}, {pp->id_of[0], pp->id_of[0], pp->id_of[0], pp->id_of[0]}, "ca"};
  Functor cb{pp, pp, {1, 1}, {pp->id_of[1], pp->id_of[1], pp->id_of[1], pp->id_of[1]}, "cb"};
  REQUIRE(check_functor(ca).holds);
  REQUIRE(check_functor(cb).holds);
  Transformation al{ca, cb, {s, s}, "al"};
  Transformation be{ca, cb, {t, t}, "be"};
  REQUIRE(check_transformation(al).holds);
  REQUIRE(check_transformation(be).holds);
  Verdict v = separate(al, be, pf, b);
  CHECK(v.holds);
  CHECK(v.witness["test"] == "evaluation at core inclusion");
  CHECK(v.witness["at_object"] == "a");
  CHECK_FALSE(separate(al, al, pf, b).holds);
}

TEST_CASE("reconstruct round-trips functors and 2-cells") {
  CatPtr arr = walking_arrow();
  ProbeFamily pf = probes_for(arr);
  Budget b = big_budget();

  Functor idf = identity_functor(arr);
  ReconstructResult r1 = reconstruct(restrict_functor(idf), pf, b);
  CHECK(r1.verdict.holds);
  CHECK(same_functor(r1.f, idf));

  Functor const0{arr, arr, {0, 0}, {arr->id_of[0], arr->id_of[0], arr->id_of[0]}, "c0"};
  ReconstructResult r2 = reconstruct(restrict_functor(const0), pf, b);
  CHECK(r2.verdict.holds);
  CHECK(same_functor(r2.f, const0));

  // 2-cell: the unique cell from the constant-at-0 functor to the identity.
  int arrow = mor_between(arr, 0, 1);
  Transformation cell{const0, idf, {arr->id_of[0], arrow}, "cell"};
  REQUIRE(check_transformation(cell).holds);
  ReconstructCellResult rc = reconstruct_cell(restrict_transformation(cell), pf, b);
  CHECK(rc.verdict.holds);
  CHECK(rc.t.comp == cell.comp);
  CHECK(rc.verdict.witness["two_cell_clause_automatic"] == true);
}

TEST_CASE("reconstruct rejects broken naturality") {
  CatPtr arr = walking_arrow();
  ProbeFamily pf = probes_for(arr);
  Budget b = big_budget();
  Functor idf = identity_functor(arr);
  GroupoidNaturalData d = restrict_functor(idf);
  // Lie about the value at nerve level 1 (the core of the arrow category).
  int n1 = pf.nv.dc.c1->n_obj();
  auto honest = d.on_obj;
  d.on_obj = [honest, n1, arr](const Functor& g) {
    Functor r = honest(g);
    if (g.src->n_obj() == n1 && g.src->n_mor() == g.src->n_obj()) {
      for (auto& o : r.obj) o = 0;
      for (int i = 0; i < g.src->n_obj(); ++i) r.mor[g.src->id_of[i]] = arr->id_of[0];
    }
    return r;
  };
  CHECK_THROWS_WITH_AS(reconstruct(d, pf, b), doctest::Contains("NaturalityViolation"),
                       ValidationError);
}

TEST_CASE("limit operator on the boolean poset") {
  Budget b = big_budget();
  CatPtr b2 = boolean_poset();
  LimitOperatorData lo = limit_operator(b2, discrete_cat(2), b);
  REQUIRE(lo.exists);
  CHECK(lo.checks.holds);

  // The chosen cone over the pair of atoms has the bottom object as vertex.
  const FinCat& B = *b2;
  auto leq = [&](int p, int q) { return mor_between(b2, p, q) >= 0; };
  int bot = -1, p = -1, q = -1;
  for (int o = 0; o < B.n_obj(); ++o) {
    bool below_all = true;
    for (int o2 = 0; o2 < B.n_obj(); ++o2) below_all = below_all && leq(o, o2);
    if (below_all) bot = o;
  }
  for (int o = 0; o < B.n_obj(); ++o)
    for (int o2 = 0; o2 < B.n_obj(); ++o2)
      if (o != o2 && !leq(o, o2) && !leq(o2, o)) {
        p = o;
        q = o2;
      }
  REQUIRE(bot >= 0);
  REQUIRE(p >= 0);
  Functor diag{discrete_cat(2), b2, {p, q}, {B.id_of[p], B.id_of[q]}, "atoms"};
  diag.src = lo.fj.obj_fun[0].src;
  int fi = lo.fj.find_obj(diag);
  REQUIRE(fi >= 0);
  int vertex_obj = lo.fjh.obj_fun[lo.ell.obj[fi]].obj[0];
  // The join puts the fresh vertex first; its value must be the meet p /\ q.
  CHECK(vertex_obj == bot);

  LimitOperatorData triv = limit_operator(b2, terminal_cat(), b);
  CHECK(triv.exists);
  CHECK(triv.checks.holds);
}

TEST_CASE("limit operator detects a missing terminal object") {
  Budget b = big_budget();
  LimitOperatorData lo = limit_operator(discrete_cat(2), empty_cat(), b);
  CHECK_FALSE(lo.exists);
  CHECK_FALSE(lo.checks.holds);
  CHECK(lo.checks.counterexample["cones_tested"] == 2);
}

TEST_CASE("power morphism workbench at bound 4") {
  Budget b = big_budget();
  ClassifierConfig cfg;
  cfg.n = 4;
  Verdict v = power_morphism_check(cfg, b);
  CHECK(v.holds);
  CHECK(v.witness["power_admissible"] == std::vector<int>{0, 1, 2});
  CHECK(v.witness["diagram_admissible"] == std::vector<int>{0, 1});
  CHECK(v.witness["skipped_sizes"] == std::vector<int>{2});
  CHECK(v.witness["membership_respecting_candidates"] == 1);

  ClassifierConfig low;
  low.n = 3;
  CHECK_THROWS_WITH_AS(power_morphism_check(low, b), doctest::Contains("PowerNotAdmissible"),
                       ValidationError);
}

TEST_CASE("direct image of the swap permutes the four subsets") {
  SetSkeleton s = build_set_skeleton(4);
  ClassifierConfig cfg;
  cfg.n = 4;
  SubsetFibration sf = subset_fibration(s, cfg);
  int swap = s.mor_of_fn(2, 2, {1, 0});
  // Locate the admissible-core morphism over the swap and read off pow's value.
  int found = -1;
  for (int mm = 0; mm < sf.admissible.cat->n_mor(); ++mm)
    if (sf.s_iso.mor_of[sf.admissible.mor_of[mm]] == swap) found = mm;
  REQUIRE(found >= 0);
  CHECK(s.fn[sf.pow.mor[found]] == std::vector<int>{0, 2, 1, 3});
}

TEST_CASE("exponential workbench") {
  Budget b = big_budget();
  ClassifierConfig cfg;
  cfg.n = 4;
  Verdict v = exponential_check(cfg, b);
  CHECK(v.holds);
  CHECK(v.witness["heyting"].size() == 4);
  for (const auto& e : v.witness["heyting"]) CHECK(e["holds"] == true);
  CHECK(v.witness["skeleton_holds"] == true);
  CHECK(v.witness["skeleton_skipped"].size() > 0);
}

TEST_CASE("representable opposites") {
  Budget b = big_budget();
  CHECK(op_representable_check(terminal_cat(), b).holds);
  Verdict v = op_representable_check(walking_arrow(), b);
  CHECK(v.holds);
  CHECK(v.witness["endofunctors"].size() == 3);
  for (const auto& e : v.witness["endofunctors"]) CHECK(e["matching_candidates"] == 1);
  CHECK(op_representable_check(walking_iso(), b).holds);
}
