#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catv/congruence.hpp"

using namespace catv;

namespace {

// Kernel of the bijective-on-objects collapse of the discrete two-object
// category onto the walking isomorphism: one horizontal arrow per ordered
// pair of objects, no nontrivial squares.
RawDouble kernel_congruence() {
  CatBuilder b0("pair_base");
  int oa = b0.add_object("a"), ob = b0.add_object("b");
  (void)oa;
  (void)ob;
  auto c0 = b0.validate();

  CatBuilder b1("pair_arrows");
  std::vector<std::vector<int>> h(2, std::vector<int>(2));
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      h[x][y] = b1.add_object("h" + c0->objects[x] + c0->objects[y]);
  auto c1 = b1.validate();

  CatBuilder b2("pair_pairs");
  std::vector<int> t;
  std::vector<std::array<int, 3>> tt;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        t.push_back(b2.add_object("t" + std::to_string(x) + std::to_string(y) +
                                  std::to_string(z)));
        tt.push_back({x, y, z});
      }
  auto c2 = b2.validate();

  auto disc_fun = [](const CatPtr& s, const CatPtr& d, std::vector<int> obj) {
    Functor f;
    f.src = s;
    f.dst = d;
    f.obj = std::move(obj);
    f.mor.resize(s->n_mor());
    for (int m = 0; m < s->n_mor(); ++m) f.mor[m] = d->id_of[f.obj[s->mors[m].dom]];
    return f;
  };

  RawDouble d;
  d.c0 = c0;
  d.c1 = c1;
  d.c2 = c2;
  std::vector<int> p0o(4), p1o(4), eo(2), a01(8), a12(8), a02(8);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      p0o[h[x][y]] = x;
      p1o[h[x][y]] = y;
    }
  eo[0] = h[0][0];
  eo[1] = h[1][1];
  for (std::size_t i = 0; i < tt.size(); ++i) {
    a01[t[i]] = h[tt[i][0]][tt[i][1]];
    a12[t[i]] = h[tt[i][1]][tt[i][2]];
    a02[t[i]] = h[tt[i][0]][tt[i][2]];
  }
  d.p0 = disc_fun(c1, c0, p0o);
  d.p1 = disc_fun(c1, c0, p1o);
  d.e = disc_fun(c0, c1, eo);
  d.p01 = disc_fun(c2, c1, a01);
  d.p12 = disc_fun(c2, c1, a12);
  d.p02 = disc_fun(c2, c1, a02);
  return d;
}

}  // namespace

TEST_CASE("validate_double accepts squares and nerves, rejects broken data") {
  auto sq = validate_double(squares_double(corpus_lookup("walking_arrow")));
  CHECK(sq.c0->n_obj() == 2);
  CHECK(sq.c1->n_obj() == 3);   // arrows of [1]
  CHECK(sq.c2->n_obj() == 4);   // composable pairs
  CHECK(sq.c3->n_obj() == 5);   // composable triples in [1]

  CHECK_NOTHROW(validate_double(squares_double(corpus_lookup("z2"))));
  CHECK_NOTHROW(validate_double(kernel_congruence()));

  // Mismatched boundary projections violate a compatibility equation.
  RawDouble bad = squares_double(corpus_lookup("walking_arrow"));
  std::swap(bad.p0, bad.p1);
  CHECK_THROWS_WITH_AS(validate_double(bad), doctest::Contains("EquationViolation"),
                       ValidationError);

  // A proper subcategory of the composable pairs is not the pullback.
  RawDouble pb = squares_double(corpus_lookup("walking_arrow"));
  std::vector<int> keep;
  for (int w = 0; w + 1 < pb.c2->n_obj(); ++w) keep.push_back(w);
  auto sub = full_subcat(pb.c2, keep, "broken_c2");
  pb.c2 = sub.cat;
  for (Functor* f : {&pb.p01, &pb.p12, &pb.p02}) *f = compose_functors(sub.incl, *f);
  CHECK_THROWS_WITH_AS(validate_double(pb), doctest::Contains("NotPullback"), ValidationError);

  // Identity horizontals over a nontrivial groupoid: every equation holds,
  // but the boundary diagonal cannot lift a pair of distinct isos.
  {
    auto wi = corpus_lookup("walking_iso");
    RawDouble d;
    d.c0 = d.c1 = d.c2 = wi;
    d.p0 = d.p1 = d.e = d.p01 = d.p12 = d.p02 = identity_functor(wi);
    CHECK_THROWS_WITH_AS(validate_double(d), doctest::Contains("NotIsofibration"),
                         ValidationError);
  }
}

TEST_CASE("gbo recognition: both routes, on nerves, squares and kernels") {
  auto check_both = [](const DoubleCat& c, bool expect) {
    Verdict a = is_gbo(c, GboRoute::kDirect);
    Verdict b = is_gbo(c, GboRoute::kCharacterization);
    CHECK(a.holds == b.holds);
    CHECK(a.holds == expect);
  };

  check_both(nerve(corpus_lookup("walking_arrow")).dc, true);
  check_both(nerve(corpus_lookup("b2")).dc, true);
  check_both(nerve(corpus_lookup("parallel_pair")).dc, true);
  check_both(validate_double(kernel_congruence()), true);
  check_both(validate_double(squares_double(corpus_lookup("z2"))), true);

  // The squares of [1] fail: the object level is not a groupoid.
  check_both(validate_double(squares_double(corpus_lookup("walking_arrow"))), false);
}

TEST_CASE("reflection maps each iso of the subject to itself") {
  for (const char* name : {"walking_iso", "z2", "walking_arrow", "b2"}) {
    auto n = nerve(corpus_lookup(name));
    auto refl = reflection(n.dc);
    for (int v = 0; v < n.dc.c0->n_mor(); ++v)
      CHECK(refl.r[v] == n.arrow.obj_of[n.core0.mor_of[v]]);
  }
  auto k = validate_double(kernel_congruence());
  auto refl = reflection(k);
  CHECK(refl.r[k.c0->id_of[0]] == k.e.obj[0]);
  CHECK(refl.r[k.c0->id_of[1]] == k.e.obj[1]);
}

TEST_CASE("object of isomorphisms and its pullback criterion") {
  auto n1 = nerve(corpus_lookup("walking_arrow"));
  auto o1 = object_of_isos(n1.dc);
  CHECK(o1.sub.cat->n_obj() == 2);  // only the identity squares of [1]
  CHECK(o1.sub.cat->n_mor() == 2);
  CHECK(o1.pullback_criterion.holds);
  CHECK(check_functor(o1.e_bar).holds);

  auto k = validate_double(kernel_congruence());
  auto ok = object_of_isos(k);
  CHECK(ok.sub.cat->n_obj() == 4);  // every horizontal arrow is invertible
  CHECK(ok.pullback_criterion.holds);

  auto sq = validate_double(squares_double(corpus_lookup("walking_arrow")));
  auto os = object_of_isos(sq);
  CHECK(os.sub.cat->n_obj() == 2);
  CHECK(os.pullback_criterion.holds);
}

TEST_CASE("completeness: three routes agree; nerves complete, kernel not") {
  auto routes = {CompleteRoute::kRBijection, CompleteRoute::kEEquivalence,
                 CompleteRoute::kPullbackSquare};
  for (const char* name : {"walking_arrow", "walking_iso", "parallel_pair", "b2", "z2"}) {
    auto n = nerve(corpus_lookup(name));
    for (auto r : routes) CHECK(is_complete(n.dc, r).holds);
  }
  auto k = validate_double(kernel_congruence());
  for (auto r : routes) CHECK_FALSE(is_complete(k, r).holds);

  // The reflection image covers 2 of the 4 horizontal isomorphisms.
  auto refl = reflection(k);
  auto isos = object_of_isos(k);
  std::set<int> image(refl.r.begin(), refl.r.end());
  int inv = 0;
  for (int h : isos.hinv)
    if (h >= 0) inv++;
  CHECK(image.size() == 2);
  CHECK(inv == 4);

  auto sq = validate_double(squares_double(corpus_lookup("walking_arrow")));
  CHECK_THROWS_WITH_AS(is_complete(sq, CompleteRoute::kRBijection),
                       doctest::Contains("NotGbo"), ValidationError);
}

TEST_CASE("nerve levels match the frozen shapes") {
  auto n1 = nerve(corpus_lookup("walking_arrow"));
  CHECK(n1.dc.c0->n_obj() == 2);
  CHECK(n1.dc.c0->n_mor() == 2);  // discrete
  CHECK(n1.dc.c1->n_obj() == 3);
  CHECK(n1.dc.c1->n_mor() == 3);  // discrete
  CHECK(n1.dc.c2->n_obj() == 4);
  CHECK(n1.dc.c2->n_mor() == 4);  // discrete

  auto nt = nerve(corpus_lookup("terminal"));
  CHECK(nt.dc.c0->n_obj() == 1);
  CHECK(nt.dc.c1->n_obj() == 1);
  CHECK(nt.dc.c2->n_obj() == 1);

  auto ni = nerve(corpus_lookup("walking_iso"));
  CHECK(ni.dc.c1->n_obj() == 4);
  CHECK(ni.dc.c1->n_mor() == 16);  // indiscrete on the four squares

  for (const char* name : {"walking_arrow", "walking_iso", "b2"}) {
    auto n = nerve(corpus_lookup(name));
    CHECK(check_cocone(n.dc, n.taut).holds);
    CHECK(check_property(MapProperty::kBoEpi, n.taut.gamma).holds);
  }
}

TEST_CASE("quotient recovers the subject with a universal cocone") {
  Budget budget{100'000'000, 0};
  auto probes = default_quotient_probes();
  for (const char* name :
       {"terminal", "walking_arrow", "composable_pair", "walking_iso", "discrete_two",
        "parallel_pair", "b2", "z2"}) {
    auto x = corpus_lookup(name);
    auto q = quotient(nerve(x).dc, probes, budget);
    CHECK(q.universality.holds);
    CHECK(find_isomorphism(q.x, x, budget).has_value());
  }

  // The quotient of the full squares double category of a group is the group.
  auto z2 = corpus_lookup("z2");
  auto qs = quotient(validate_double(squares_double(z2)), probes, budget);
  CHECK(qs.universality.holds);
  CHECK(find_isomorphism(qs.x, z2, budget).has_value());

  auto k = validate_double(kernel_congruence());
  CHECK_THROWS_WITH_AS(quotient(k, probes, budget), doctest::Contains("NotComplete"),
                       ValidationError);
}

TEST_CASE("opposition recovers the opposite category") {
  Budget budget{100'000'000, 0};
  auto probes = default_quotient_probes();
  for (const char* name : {"terminal", "walking_arrow", "composable_pair", "walking_iso", "b2"}) {
    auto o = opposition(corpus_lookup(name), probes, budget);
    CHECK(o.checks.holds);
  }
  // Self-dual subjects have isomorphic quotients on both sides.
  auto o = opposition(corpus_lookup("walking_iso"), probes, budget);
  CHECK(find_isomorphism(o.q.x, o.qop.x, budget).has_value());
}

TEST_CASE("internal functors and 2-cells biject with plain ones") {
  Budget budget{100'000'000, 0};
  auto t = corpus_lookup("terminal");
  auto a1 = corpus_lookup("walking_arrow");
  auto wi = corpus_lookup("walking_iso");

  Verdict v1 = nerve_hom_check(t, t, budget);
  CHECK(v1.holds);
  CHECK(v1.witness["functors"] == 1);
  CHECK(v1.witness["internal_functors"] == 1);
  CHECK(v1.witness["two_cells"] == 1);

  Verdict v2 = nerve_hom_check(a1, a1, budget);
  CHECK(v2.holds);
  CHECK(v2.witness["functors"] == 3);
  CHECK(v2.witness["internal_functors"] == 3);

  Verdict v3 = nerve_hom_check(wi, a1, budget);
  CHECK(v3.holds);
  CHECK(v3.witness["functors"] == 2);  // the two constants

  Verdict v4 = nerve_hom_check(wi, wi, budget);
  CHECK(v4.holds);
}
