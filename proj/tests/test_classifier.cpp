#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catv/classifier.hpp"

using namespace catv;

namespace {

// Constant-2 functor on the walking iso with the swap action on the fibre.
Functor swap_action(const CatPtr& wiso, const SetSkeleton& s) {
  int swap = s.mor_of_fn(2, 2, {1, 0});
  return Functor{wiso, s.cat, {2, 2}, {s.cat->id_of[2], s.cat->id_of[2], swap, swap}, "gswap"};
}

}  // namespace

TEST_CASE("bounded set classifier and its genericity criterion") {
  ClassifierConfig cfg;
  cfg.n = 2;
  auto c = build_classifier(cfg);
  CHECK(c.s.cat->n_obj() == 3);
  CHECK(c.s.cat->n_mor() == 11);  // sum of n^m over m,n in 0..2
  CHECK(c.star->n_obj() == 3);    // (1,0), (2,0), (2,1)
  CHECK(c.genericity.holds);
  CHECK(check_property(MapProperty::kDiscreteOpfibration, c.p).holds);
  CHECK(c.s.cat->hom(2, 2).size() == 4);

  // Points of the 2-element set = lifts of its name through p.
  Budget bud{100'000'000, 0};
  Functor pick2{terminal_cat(), c.s.cat, {2}, {c.s.cat->id_of[2]}, "pick2"};
  CHECK(enumerate_lifts(pick2, c.p, bud).size() == 2);

  for (int n = 1; n <= 5; ++n) CHECK(genericity_criterion(n).holds);

  ClassifierConfig degenerate;
  degenerate.n = 0;
  auto c0 = build_classifier(degenerate);
  CHECK(c0.s.cat->n_obj() == 1);
  CHECK(c0.star->n_obj() == 0);
  CHECK(c0.genericity.holds);
}

TEST_CASE("category of elements of a set-valued functor") {
  auto s = build_set_skeleton(2);
  auto arr = walking_arrow();

  // g: [1] -> S picking the injection of a point into the 2-element set.
  Functor g{arr, s.cat, {1, 2}, {s.cat->id_of[1], s.cat->id_of[2], s.mor_of_fn(1, 2, {0})},
            "g"};
  auto el = gr(g, s);
  CHECK(el.total->n_obj() == 3);
  CHECK(el.total->n_mor() == 4);  // three identities plus the single lift
  CHECK(check_property(MapProperty::kDiscreteOpfibration, el.proj).holds);
  CHECK(el.total->mors[3].dom == el.obj_of(0, 0));
  CHECK(el.total->mors[3].cod == el.obj_of(1, 0));

  // Constant singleton fibres: the projection is an isomorphism.
  auto wiso = walking_iso();
  Functor one{wiso, s.cat, {1, 1},
              {s.cat->id_of[1], s.cat->id_of[1], s.cat->id_of[1], s.cat->id_of[1]}, "one"};
  auto el1 = gr(one, s);
  CHECK(el1.total->n_obj() == wiso->n_obj());
  CHECK(el1.total->n_mor() == wiso->n_mor());

  // The identity 2-cell induces the identity on elements.
  Functor t = gr_2cell(identity_transformation(g), el, el, s);
  CHECK(same_functor(t, identity_functor(el.total)));
}

TEST_CASE("classification of discrete opfibrations round-trips") {
  auto s = build_set_skeleton(2);
  auto wiso = walking_iso();

  auto cid = classify(identity_functor(wiso), s);
  CHECK(cid.g.obj == std::vector<int>{1, 1});

  Functor from_empty{empty_cat(), wiso, {}, {}, "e"};
  auto cempty = classify(from_empty, s);
  CHECK(cempty.g.obj == std::vector<int>{0, 0});

  auto arr = walking_arrow();
  Functor g0{arr, s.cat, {1, 2}, {s.cat->id_of[1], s.cat->id_of[2], s.mor_of_fn(1, 2, {0})},
             "g0"};
  auto el = gr(g0, s);
  auto rt = classify(el.proj, s);
  CHECK(same_functor(rt.g, g0));
  CHECK(same_functor(compose_functors(rt.iso, el.proj), rt.el.proj));
  CHECK(rt.el.total->n_obj() == el.total->n_obj());
  CHECK(rt.el.total->n_mor() == el.total->n_mor());

  // Oversized fibres are refused at the bound.
  auto s4 = build_set_skeleton(4);
  Functor g3{terminal_cat(), s4.cat, {3}, {s4.cat->id_of[3]}, "g3"};
  auto el3 = gr(g3, s4);
  CHECK_THROWS_WITH_AS(classify(el3.proj, s), doctest::Contains("FibreTooLarge"),
                       ValidationError);
}

TEST_CASE("taking elements is fully faithful") {
  auto s = build_set_skeleton(2);
  Budget bud{100'000'000, 0};
  auto one = terminal_cat();

  Functor f2{one, s.cat, {2}, {s.cat->id_of[2]}, "f2"};
  Verdict v = check_gr_fully_faithful(one, f2, f2, s, bud);
  CHECK(v.holds);
  CHECK(v.witness["two_cells"] == 4);
  CHECK(v.witness["over_functors"] == 4);

  // An empty fibre on one side.
  auto arr = walking_arrow();
  Functor fe{arr, s.cat, {0, 1}, {s.cat->id_of[0], s.cat->id_of[1], s.mor_of_fn(0, 1, {})},
             "fe"};
  Functor h2{arr, s.cat, {2, 2}, {s.cat->id_of[2], s.cat->id_of[2], s.cat->id_of[2]}, "h2"};
  CHECK(check_gr_fully_faithful(arr, fe, h2, s, bud).holds);

  // A groupoid probe with a nontrivial action.
  auto wiso = walking_iso();
  Functor fsw = swap_action(wiso, s);
  Functor hid{wiso, s.cat, {2, 2},
              {s.cat->id_of[2], s.cat->id_of[2], s.cat->id_of[2], s.cat->id_of[2]}, "hid"};
  CHECK(check_gr_fully_faithful(wiso, fsw, fsw, s, bud).holds);
  CHECK(check_gr_fully_faithful(wiso, fsw, hid, s, bud).holds);
}

TEST_CASE("smallness closure laws") {
  ClassifierConfig cfg2, cfg4;
  cfg2.n = 2;
  cfg4.n = 4;
  Verdict v2 = smallness_suite(cfg2);
  CHECK(v2.holds);
  CHECK(v2.witness["cases"].size() == 5);
  // The fibre-4 composite is only small at the larger bound.
  CHECK(v2.witness["cases"][2]["small_at_bound"] == false);
  Verdict v4 = smallness_suite(cfg4);
  CHECK(v4.holds);
  CHECK(v4.witness["cases"][2]["small_at_bound"] == true);
}

TEST_CASE("subset fibration over the core") {
  auto s4 = build_set_skeleton(4);
  ClassifierConfig cfg4;
  cfg4.n = 4;
  auto w = subset_fibration(s4, cfg4);

  int over2 = 0;
  for (auto [m, mask] : w.wobj)
    if (m == 2) over2++;
  CHECK(over2 == 4);  // subsets of a 2-element set

  // The boundary component at (2, {1}) is the injection 0 |-> 1.
  int idx = w.wobj_of(2, 0b10);
  CHECK(s4.fn[w.tilde_d.comp[idx]] == std::vector<int>{1});
  CHECK(check_property(MapProperty::kPointwiseMono, w.tilde_d).holds);
  CHECK(check_property(MapProperty::kDiscreteOpfibration, w.dot_pow).holds);
  CHECK(w.collapse_check.holds);
  CHECK(w.collapse_check.witness["checked_bound"] == 3);

  // pow sends an admissible size to the size of its power set.
  int adm2 = w.admissible.obj_back[2];
  CHECK(adm2 >= 0);
  CHECK(w.pow.obj[adm2] == 4);
  CHECK(pow_value(cfg4, 2) == 4);
  ClassifierConfig cfg2;
  cfg2.n = 2;
  CHECK_THROWS_WITH_AS(pow_value(cfg2, 2), doctest::Contains("PowerNotAdmissible"),
                       ValidationError);

  // At the small bound the collapse comparison is exact.
  auto s2 = build_set_skeleton(2);
  auto w2 = subset_fibration(s2, cfg2);
  CHECK(w2.collapse_check.holds);
  CHECK(w2.collapse_check.witness["checked_bound"] == 2);
}

TEST_CASE("pointwise monos classify uniquely into the subset fibration") {
  auto s4 = build_set_skeleton(4);
  ClassifierConfig cfg4;
  cfg4.n = 4;
  auto w = subset_fibration(s4, cfg4);
  Budget bud{200'000'000, 0};
  auto one = terminal_cat();

  Functor f1{one, s4.cat, {1}, {s4.cat->id_of[1]}, "f1"};
  Functor g2{one, s4.cat, {2}, {s4.cat->id_of[2]}, "g2"};
  Transformation pick0{f1, g2, {s4.mor_of_fn(1, 2, {0})}, "pick0"};
  CHECK(verify_pow_universal(one, pick0, s4, w, cfg4, bud).holds);

  // An iso classifies as the full subset.
  Transformation idal{g2, g2, {s4.cat->id_of[2]}, "idal"};
  CHECK(verify_pow_universal(one, idal, s4, w, cfg4, bud).holds);

  // Equivariance over the walking iso with the swap action.
  auto wiso = walking_iso();
  Functor gsw = swap_action(wiso, s4);
  Functor fone{wiso, s4.cat, {1, 1},
               {s4.cat->id_of[1], s4.cat->id_of[1], s4.cat->id_of[1], s4.cat->id_of[1]},
               "fone"};
  Transformation al{fone, gsw, {s4.mor_of_fn(1, 2, {0}), s4.mor_of_fn(1, 2, {1})}, "al"};
  CHECK(check_transformation(al).holds);
  CHECK(verify_pow_universal(wiso, al, s4, w, cfg4, bud).holds);

  // Precondition failures.
  CHECK_THROWS_WITH_AS(
      verify_pow_universal(walking_arrow(),
                           identity_transformation(Functor{walking_arrow(), s4.cat, {1, 1},
                                                           {s4.cat->id_of[1], s4.cat->id_of[1],
                                                            s4.cat->id_of[1]},
                                                           "c1"}),
                           s4, w, cfg4, bud),
      doctest::Contains("NotGroupoid"), ValidationError);
  auto s2 = build_set_skeleton(2);
  ClassifierConfig cfg2;
  cfg2.n = 2;
  auto w2 = subset_fibration(s2, cfg2);
  Functor g2s{one, s2.cat, {2}, {s2.cat->id_of[2]}, "g2s"};
  CHECK_THROWS_WITH_AS(
      verify_pow_universal(one, identity_transformation(g2s), s2, w2, cfg2, bud),
      doctest::Contains("PowerNotAdmissible"), ValidationError);
}

TEST_CASE("power objects over groupoid bases") {
  ClassifierConfig cfg4;
  cfg4.n = 4;
  auto one = terminal_cat();
  auto d2 = discrete_cat(2);
  Functor a_dof{d2, one, {0, 0}, {0, 0}, "a"};

  auto po = power_object_in_dof(a_dof, cfg4);
  CHECK(po.p_total->n_obj() == 4);    // subsets of the 2-element fibre
  CHECK(po.eps_total->n_obj() == 4);  // sum of |T| over subsets
  CHECK(po.axp.apex->n_obj() == 8);
  CHECK(check_property(MapProperty::kMono, po.j).holds);

  Budget bud{200'000'000, 0};
  CHECK(verify_power_universal(a_dof, po, cfg4, bud).holds);

  // Oversized fibres are refused.
  auto d3 = discrete_cat(3);
  Functor a3{d3, one, {0, 0, 0}, {0, 0, 0}, "a3"};
  CHECK_THROWS_WITH_AS(power_object_in_dof(a3, cfg4),
                       doctest::Contains("PowerNotAdmissible"), ValidationError);

  // Walking iso base with the swap action on a 2-element fibre.
  auto s4 = build_set_skeleton(4);
  auto wiso = walking_iso();
  Functor gsw = swap_action(wiso, s4);
  auto el = gr(gsw, s4);
  auto posw = power_object_in_dof(el.proj, cfg4);
  CHECK(posw.p_total->n_obj() == 8);
  Budget bud2{400'000'000, 0};
  CHECK(verify_power_universal(el.proj, posw, cfg4, bud2).holds);

  // Stability along a groupoid probe.
  Functor pickx{one, wiso, {0}, {wiso->id_of[0]}, "pickx"};
  Budget bud3{100'000'000, 0};
  CHECK(power_stability(pickx, el.proj, cfg4, bud3).holds);
  CHECK(power_stability(identity_functor(one), a_dof, cfg4, bud3).holds);
}

TEST_CASE("limits in the category of discrete opfibrations") {
  ClassifierConfig cfg4;
  cfg4.n = 4;
  Budget bud{400'000'000, 0};
  Verdict v = dof_limits(walking_arrow(), cfg4, 2, bud);
  CHECK(v.holds);
  CHECK(v.witness["terminal_checked"] == 6);
  CHECK(v.witness["cospans_checked"].get<int>() >= 1);
}
