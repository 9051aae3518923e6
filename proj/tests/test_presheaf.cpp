#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catv/presheaf.hpp"

using namespace catv;

namespace {

// Presheaf on [1] with fibres (discrete 2, discrete 1) and the collapse action.
PresheafOfCats collapse_ps(const CatPtr& c) {
  CatPtr d2 = discrete_cat(2);
  CatPtr d1 = discrete_cat(1);
  PresheafOfCats f;
  f.index = c;
  f.name = "collapse";
  f.at = {d2, d1};
  f.act = {identity_functor(d2), identity_functor(d1),
           Functor{d2, d1, {0, 0}, {0, 0}, "!"}};
  return f;
}

// Pointwise strict pullback of a cospan of presheaf morphisms.
struct PsPb {
  PresheafOfCats p;
  PsMorphism h, k;
};
PsPb ps_pullback(const PsMorphism& f, const PsMorphism& g) {
  const FinCat& C = *f.src.index;
  std::vector<PullbackData> pbs;
  for (int c = 0; c < C.n_obj(); ++c) pbs.push_back(build_pullback(f.comp[c], g.comp[c]));
  PsPb out;
  out.p.index = f.src.index;
  out.p.name = "pb";
  for (int c = 0; c < C.n_obj(); ++c) out.p.at.push_back(pbs[c].apex);
  for (int u = 0; u < C.n_mor(); ++u) {
    int c = C.mors[u].dom, c2 = C.mors[u].cod;
    Functor a;
    a.src = pbs[c].apex;
    a.dst = pbs[c2].apex;
    a.obj.resize(a.src->n_obj());
    a.mor.resize(a.src->n_mor());
    for (int o = 0; o < a.src->n_obj(); ++o)
      a.obj[o] = pbs[c2].pair_obj(f.src.act[u].obj[pbs[c].pr1.obj[o]],
                                  g.src.act[u].obj[pbs[c].pr2.obj[o]]);
    for (int m = 0; m < a.src->n_mor(); ++m)
      a.mor[m] = pbs[c2].pair_mor(f.src.act[u].mor[pbs[c].pr1.mor[m]],
                                  g.src.act[u].mor[pbs[c].pr2.mor[m]]);
    out.p.act.push_back(std::move(a));
  }
  out.h = PsMorphism{out.p, f.src, {}, "pr1"};
  out.k = PsMorphism{out.p, g.src, {}, "pr2"};
  for (int c = 0; c < C.n_obj(); ++c) {
    out.h.comp.push_back(pbs[c].pr1);
    out.k.comp.push_back(pbs[c].pr2);
  }
  return out;
}

// Unique morphism to the constant terminal presheaf.
PsMorphism to_terminal(const PresheafOfCats& f, const PresheafOfCats& one) {
  PsMorphism out{f, one, {}, "!"};
  for (std::size_t c = 0; c < f.at.size(); ++c) {
    Functor bang;
    bang.src = f.at[c];
    bang.dst = one.at[c];
    bang.obj.assign(f.at[c]->n_obj(), 0);
    bang.mor.assign(f.at[c]->n_mor(), one.at[c]->id_of[0]);
    out.comp.push_back(std::move(bang));
  }
  return out;
}

}  // namespace

TEST_CASE("category of elements of a presheaf of categories") {
  CatPtr c = walking_composable_pair();
  PresheafOfCats one = constant_presheaf(c, terminal_cat(), "1");
  CHECK(check_presheaf(one).holds);
  auto e1 = el(one);
  CHECK(e1.total->n_obj() == c->n_obj());
  CHECK(e1.total->n_mor() == c->n_mor());
  CHECK(check_split_opfibration(e1).holds);
  Budget bud{10'000'000, 0};
  CHECK(find_isomorphism_over(identity_functor(c), e1.proj, bud).has_value());

  PresheafOfCats f = collapse_ps(walking_arrow());
  CHECK(check_presheaf(f).holds);
  auto ef = el(f);
  CHECK(ef.total->n_obj() == 3);
  CHECK(ef.total->n_mor() == 5);  // 3 identities + one cross arrow per element
  CHECK(check_split_opfibration(ef).holds);
  CHECK(check_property(MapProperty::kDiscreteOpfibration, ef.proj).holds);

  PresheafOfCats y0 = representable_presheaf(walking_arrow(), 0);
  CHECK(y0.at[0]->n_obj() == 1);
  CHECK(y0.at[1]->n_obj() == 1);
  auto ey = el(y0);
  CHECK(ey.total->n_obj() == 2);
  CHECK(ey.total->n_mor() == 3);
}

TEST_CASE("el preserves and reflects strict pullbacks") {
  CatPtr c = walking_arrow();
  PresheafOfCats one = constant_presheaf(c, terminal_cat(), "1");
  PresheafOfCats f = collapse_ps(c);
  PresheafOfCats b = constant_presheaf(c, discrete_cat(2), "d2");
  PsMorphism fu = to_terminal(f, one);
  PsMorphism gu = to_terminal(b, one);
  CHECK(check_ps_morphism(fu).holds);
  CHECK(check_ps_morphism(gu).holds);

  PsPb pb = ps_pullback(fu, gu);
  CHECK(check_presheaf(pb.p).holds);
  CHECK(pb.p.at[0]->n_obj() == 4);
  CHECK(pb.p.at[1]->n_obj() == 2);
  CHECK(ps_square_pullback(pb.h, pb.k, fu, gu).holds);
  Verdict v = el_preserves_reflects_pullback(pb.h, pb.k, fu, gu);
  CHECK(v.holds);
  CHECK(v.witness["is_pullback"] == true);

  // A commuting square that is not a pullback: apex shrunk to the terminal.
  PresheafOfCats apex1 = constant_presheaf(c, terminal_cat(), "apex1");
  PsMorphism into_f{apex1, f, {}, "x0"};
  into_f.comp.push_back(Functor{apex1.at[0], f.at[0], {0}, {f.at[0]->id_of[0]}, ""});
  into_f.comp.push_back(Functor{apex1.at[1], f.at[1], {0}, {f.at[1]->id_of[0]}, ""});
  PsMorphism into_b{apex1, b, {}, "y0"};
  into_b.comp.push_back(Functor{apex1.at[0], b.at[0], {0}, {b.at[0]->id_of[0]}, ""});
  into_b.comp.push_back(Functor{apex1.at[1], b.at[1], {0}, {b.at[1]->id_of[0]}, ""});
  CHECK(check_ps_morphism(into_f).holds);
  CHECK(check_ps_morphism(into_b).holds);
  CHECK(!ps_square_pullback(into_f, into_b, fu, gu).holds);
  Verdict v2 = el_preserves_reflects_pullback(into_f, into_b, fu, gu);
  CHECK(v2.holds);
  CHECK(v2.witness["is_pullback"] == false);
}

TEST_CASE("sp functor shapes") {
  Budget bud{200'000'000, 0};
  CatPtr pt = terminal_cat();
  CatPtr arr = walking_arrow();

  auto sp1 = sp(arr, pt, bud);
  CHECK(check_presheaf(sp1.ps).holds);
  CHECK(sp1.ps.at[0]->n_obj() == arr->n_obj());
  CHECK(sp1.ps.at[0]->n_mor() == arr->n_mor());
  CHECK(find_isomorphism(sp1.ps.at[0], arr, bud).has_value());

  auto sp2 = sp(arr, arr, bud);
  CHECK(sp2.ps.at[0]->n_obj() == 3);  // Fun([1],[1])
  CHECK(sp2.ps.at[0]->n_mor() == 6);
  CHECK(sp2.ps.at[1]->n_obj() == 2);
  CHECK(sp2.ps.at[1]->n_mor() == 3);

  // sp of the generic fibration is a pointwise discrete opfibration.
  ClassifierConfig cfg;
  cfg.n = 2;
  auto cl = build_classifier(cfg);
  auto sps = sp(cl.s.cat, arr, bud);
  auto spstar = sp(cl.star, arr, bud);
  PsMorphism spp = sp_of(cl.p, spstar, sps);
  CHECK(check_ps_morphism(spp).holds);
  for (const auto& comp : spp.comp)
    CHECK(check_property(MapProperty::kDiscreteOpfibration, comp).holds);
}

TEST_CASE("el is left adjoint to sp") {
  Budget bud{400'000'000, 0};
  CatPtr pt = terminal_cat();
  CatPtr arr = walking_arrow();

  PresheafOfCats f0 = constant_presheaf(pt, discrete_cat(2), "d2");
  CHECK(adjunction_check(pt, arr, f0, bud).holds);

  PresheafOfCats f1 = collapse_ps(arr);
  CHECK(adjunction_check(arr, arr, f1, bud).holds);

  ClassifierConfig cfg;
  cfg.n = 2;
  CHECK(counit_square_at_p(arr, cfg, bud).holds);
}

TEST_CASE("three criteria for a presheaf-level discrete opfibration") {
  Budget bud{400'000'000, 0};
  CatPtr arr = walking_arrow();

  PresheafOfCats f = collapse_ps(arr);
  Verdict vid = dof_criteria(identity_ps_morphism(f), bud);
  CHECK(vid.holds);
  CHECK(vid.witness["is_dof"] == true);

  // Pointwise fibration assembled from the classifier: the swap action on the
  // walking iso, taken constantly in both fibres.
  SetSkeleton s = build_set_skeleton(2);
  CatPtr wiso = walking_iso();
  int swap = s.mor_of_fn(2, 2, {1, 0});
  Functor gswap{wiso, s.cat, {2, 2},
                {s.cat->id_of[2], s.cat->id_of[2], swap, swap}, "gswap"};
  ElData e = gr(gswap, s);
  PresheafOfCats g = constant_presheaf(arr, wiso, "wiso");
  PresheafOfCats t = constant_presheaf(arr, e.total, "tot");
  PsMorphism p{t, g, {e.proj, e.proj}, "p"};
  CHECK(check_ps_morphism(p).holds);
  Verdict vp = dof_criteria(p, bud);
  CHECK(vp.holds);
  CHECK(vp.witness["is_dof"] == true);

  // Perturbed: both components collapsed to a constant functor; every route
  // must reject it.
  Functor crush{e.total, wiso, std::vector<int>(e.total->n_obj(), 0),
                std::vector<int>(e.total->n_mor(), wiso->id_of[0]), "crush"};
  PsMorphism bad{t, g, {crush, crush}, "bad"};
  CHECK(check_ps_morphism(bad).holds);
  Verdict vb = dof_criteria(bad, bud);
  CHECK(vb.holds);
  CHECK(vb.witness["is_dof"] == false);
}

TEST_CASE("three smallness routes for a presheaf-level fibration") {
  Budget bud{400'000'000, 0};
  CatPtr arr = walking_arrow();
  PresheafOfCats one = constant_presheaf(arr, terminal_cat(), "1");

  ClassifierConfig cfg1;
  cfg1.n = 1;
  ClassifierConfig cfg2;
  cfg2.n = 2;

  Verdict v1 = smallness_criteria(identity_ps_morphism(one), cfg1, bud);
  CHECK(v1.holds);
  CHECK(v1.witness["small"] == true);

  // Fibre sizes (1, 2) over [1]: small at bound 2, not at bound 1.
  CatPtr d1 = discrete_cat(1);
  CatPtr d2 = discrete_cat(2);
  PresheafOfCats f;
  f.index = arr;
  f.name = "f12";
  f.at = {d1, d2};
  f.act = {identity_functor(d1), identity_functor(d2),
           Functor{d1, d2, {0}, {d2->id_of[0]}, "pick"}};
  CHECK(check_presheaf(f).holds);
  PsMorphism p = to_terminal(f, one);
  CHECK(dof_criteria(p, bud).holds);

  Verdict v2 = smallness_criteria(p, cfg2, bud);
  CHECK(v2.holds);
  CHECK(v2.witness["small"] == true);

  Verdict v3 = smallness_criteria(p, cfg1, bud);
  CHECK(v3.holds);
  CHECK(v3.witness["small"] == false);
}

TEST_CASE("pointwise cores with their universal property") {
  Budget bud{200'000'000, 0};
  CatPtr arr = walking_arrow();

  PresheafOfCats g = constant_presheaf(arr, walking_iso(), "wiso");
  CorePresheaf cg = core_presheaf(g, bud);
  CHECK(cg.universal.holds);
  CHECK(cg.core.at[0]->n_mor() == walking_iso()->n_mor());

  PresheafOfCats a = constant_presheaf(arr, walking_arrow(), "arr");
  CorePresheaf ca = core_presheaf(a, bud);
  CHECK(ca.universal.holds);
  CHECK(ca.core.at[0]->n_obj() == 2);
  CHECK(ca.core.at[0]->n_mor() == 2);  // discrete: the arrow is not invertible

  PresheafOfCats f = collapse_ps(arr);
  CorePresheaf cf = core_presheaf(f, bud);
  CHECK(cf.universal.holds);
  CHECK(cf.core.at[0]->n_mor() == 2);
}

TEST_CASE("subfunctor fibration over the iso-core") {
  Budget bud{400'000'000, 0};
  ClassifierConfig cfg;
  cfg.n = 2;

  Verdict v1 = sub_fibration_check(terminal_cat(), cfg, bud);
  CHECK(v1.holds);
  bool saw2 = false;
  for (const auto& fb : v1.witness["entries"][0]["fibres"]) {
    if (fb["sizes"] == nlohmann::json::array({0})) CHECK(fb["count"] == 1);
    if (fb["sizes"] == nlohmann::json::array({1})) CHECK(fb["count"] == 2);
    if (fb["sizes"] == nlohmann::json::array({2})) {
      CHECK(fb["count"] == 4);
      saw2 = true;
    }
  }
  CHECK(saw2);

  Verdict v2 = sub_fibration_check(walking_arrow(), cfg, bud);
  CHECK(v2.holds);
  bool saw12 = false;
  for (const auto& fb : v2.witness["entries"][0]["fibres"]) {
    if (fb["sizes"] == nlohmann::json::array({1, 2})) {
      CHECK(fb["count"] == 6);  // pairs (T0, T1) with the image condition
      saw12 = true;
    }
  }
  CHECK(saw12);
}
