#include "catv/fincat.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace catv {

// ---- FinCat queries ----

int FinCat::inverse(int f) const { return inv_[f]; }

bool FinCat::is_mono(int f) const {
  int a = mors[f].dom;
  for (int g = 0; g < n_mor(); ++g) {
    if (mors[g].cod != a) continue;
    for (int h = 0; h < n_mor(); ++h) {
      if (mors[h].cod != a || mors[h].dom != mors[g].dom) continue;
      if (g != h && compose(g, f) == compose(h, f)) return false;
    }
  }
  return true;
}

bool FinCat::is_epi(int f) const {
  int b = mors[f].cod;
  for (int g = 0; g < n_mor(); ++g) {
    if (mors[g].dom != b) continue;
    for (int h = 0; h < n_mor(); ++h) {
      if (mors[h].dom != b || mors[h].cod != mors[g].cod) continue;
      if (g != h && compose(f, g) == compose(f, h)) return false;
    }
  }
  return true;
}

std::vector<int> FinCat::hom(int a, int b) const {
  std::vector<int> out;
  for (int f = 0; f < n_mor(); ++f)
    if (mors[f].dom == a && mors[f].cod == b) out.push_back(f);
  return out;
}

bool FinCat::isomorphic_objects(int a, int b) const {
  if (a == b) return true;
  for (int f : hom(a, b))
    if (is_iso(f)) return true;
  return false;
}

bool FinCat::is_groupoid() const {
  for (int f = 0; f < n_mor(); ++f)
    if (!is_iso(f)) return false;
  return true;
}

bool FinCat::is_terminal_object(int t) const {
  for (int a = 0; a < n_obj(); ++a)
    if (hom(a, t).size() != 1) return false;
  return true;
}

// ---- CatBuilder ----

int CatBuilder::add_object(std::string label) {
  if (compose_table_sized_)
    throw ValidationError("BuilderMisuse", "add_object after set_compose");
  int a = cat_.n_obj();
  cat_.objects.push_back(std::move(label));
  Mor id;
  id.name = "id_" + cat_.objects.back();
  id.dom = id.cod = a;
  cat_.mors.push_back(std::move(id));
  cat_.id_of.push_back(cat_.n_mor() - 1);
  return a;
}

int CatBuilder::add_mor(std::string label, int dom, int cod) {
  if (compose_table_sized_)
    throw ValidationError("BuilderMisuse", "add_mor after set_compose");
  if (dom < 0 || dom >= cat_.n_obj() || cod < 0 || cod >= cat_.n_obj())
    throw ValidationError("DanglingReference",
                          "morphism '" + label + "' has out-of-range endpoint");
  Mor m;
  m.name = std::move(label);
  m.dom = dom;
  m.cod = cod;
  cat_.mors.push_back(std::move(m));
  return cat_.n_mor() - 1;
}

void CatBuilder::ensure_table() {
  if (!compose_table_sized_) {
    cat_.comp_.assign(static_cast<std::size_t>(cat_.n_mor()) * cat_.n_mor(), -1);
    compose_table_sized_ = true;
  }
}

void CatBuilder::set_compose(int f, int g, int fg) {
  ensure_table();
  int n = cat_.n_mor();
  if (f < 0 || f >= n || g < 0 || g >= n || fg < 0 || fg >= n)
    throw ValidationError("DanglingReference", "compose entry out of range");
  cat_.comp_[static_cast<std::size_t>(f) * n + g] = fg;
}

CatPtr CatBuilder::validate() {
  ensure_table();
  int n = cat_.n_mor();

  // Unique names (the interchange format keys cells by name).
  {
    std::set<std::string> seen;
    for (auto& m : cat_.mors) {
      while (seen.count(m.name)) m.name += "'";
      seen.insert(m.name);
    }
  }

  auto& comp = cat_.comp_;
  auto at = [&](int f, int g) -> int& { return comp[static_cast<std::size_t>(f) * n + g]; };

  // Identity composites are determined; fill them, reject contradictions.
  for (int f = 0; f < n; ++f) {
    int li = cat_.id_of[cat_.mors[f].dom];
    int ri = cat_.id_of[cat_.mors[f].cod];
    for (auto [a, b, want] : {std::tuple{li, f, f}, std::tuple{f, ri, f}}) {
      int& cell = at(a, b);
      if (cell == -1) cell = want;
      else if (cell != want)
        throw ValidationError("IdentityViolation",
                              "identity law fails at '" + cat_.mors[f].name + "'");
    }
  }

  for (int f = 0; f < n; ++f)
    for (int g = 0; g < n; ++g) {
      int c = at(f, g);
      bool ok = cat_.mors[f].cod == cat_.mors[g].dom;
      if (ok && c == -1)
        throw ValidationError("MissingComposite", "no composite for '" + cat_.mors[f].name +
                                                      "' ; '" + cat_.mors[g].name + "'");
      if (!ok && c != -1)
        throw ValidationError("CompositionBoundary",
                              "composite declared for non-composable pair '" +
                                  cat_.mors[f].name + "' ; '" + cat_.mors[g].name + "'");
      if (c != -1 &&
          (cat_.mors[c].dom != cat_.mors[f].dom || cat_.mors[c].cod != cat_.mors[g].cod))
        throw ValidationError("CompositionBoundary",
                              "composite of '" + cat_.mors[f].name + "' ; '" +
                                  cat_.mors[g].name + "' has wrong boundary");
    }

  for (int f = 0; f < n; ++f) {
    int cf = cat_.mors[f].cod;
    for (int g = 0; g < n; ++g) {
      if (cat_.mors[g].dom != cf) continue;
      int fg = at(f, g);
      int cg = cat_.mors[g].cod;
      for (int h = 0; h < n; ++h) {
        if (cat_.mors[h].dom != cg) continue;
        if (at(fg, h) != at(f, at(g, h)))
          throw ValidationError("AssociativityViolation",
                                "(" + cat_.mors[f].name + ";" + cat_.mors[g].name + ");" +
                                    cat_.mors[h].name + " differs from re-association");
      }
    }
  }

  cat_.inv_.assign(n, -1);
  for (int f = 0; f < n; ++f) {
    if (cat_.inv_[f] != -1) continue;
    for (int g = 0; g < n; ++g) {
      if (cat_.mors[g].dom != cat_.mors[f].cod || cat_.mors[g].cod != cat_.mors[f].dom) continue;
      if (at(f, g) == cat_.id_of[cat_.mors[f].dom] && at(g, f) == cat_.id_of[cat_.mors[g].dom]) {
        cat_.inv_[f] = g;
        cat_.inv_[g] = f;
        break;
      }
    }
  }

  return std::make_shared<FinCat>(std::move(cat_));
}

// ---- Functors and transformations ----

Functor identity_functor(const CatPtr& c) {
  Functor f;
  f.src = f.dst = c;
  f.obj.resize(c->n_obj());
  f.mor.resize(c->n_mor());
  for (int a = 0; a < c->n_obj(); ++a) f.obj[a] = a;
  for (int m = 0; m < c->n_mor(); ++m) f.mor[m] = m;
  f.name = "id";
  return f;
}

Functor compose_functors(const Functor& f, const Functor& g) {
  Functor h;
  h.src = f.src;
  h.dst = g.dst;
  h.obj.resize(f.obj.size());
  h.mor.resize(f.mor.size());
  for (std::size_t a = 0; a < f.obj.size(); ++a) h.obj[a] = g.obj[f.obj[a]];
  for (std::size_t m = 0; m < f.mor.size(); ++m) h.mor[m] = g.mor[f.mor[m]];
  return h;
}

bool same_functor(const Functor& f, const Functor& g) {
  return f.obj == g.obj && f.mor == g.mor;
}

Transformation identity_transformation(const Functor& f) {
  Transformation t;
  t.src = t.dst = f;
  t.comp.resize(f.obj.size());
  for (std::size_t a = 0; a < f.obj.size(); ++a) t.comp[a] = f.dst->id_of[f.obj[a]];
  return t;
}

Transformation vcompose(const Transformation& a, const Transformation& b) {
  Transformation t;
  t.src = a.src;
  t.dst = b.dst;
  t.comp.resize(a.comp.size());
  for (std::size_t x = 0; x < a.comp.size(); ++x)
    t.comp[x] = a.src.dst->compose(a.comp[x], b.comp[x]);
  return t;
}

Transformation whisker(const Functor& h, const Transformation& a, const Functor& k) {
  Transformation t;
  t.src = compose_functors(compose_functors(h, a.src), k);
  t.dst = compose_functors(compose_functors(h, a.dst), k);
  t.comp.resize(h.obj.size());
  for (std::size_t x = 0; x < h.obj.size(); ++x) t.comp[x] = k.mor[a.comp[h.obj[x]]];
  return t;
}

bool same_transformation(const Transformation& a, const Transformation& b) {
  return same_functor(a.src, b.src) && same_functor(a.dst, b.dst) && a.comp == b.comp;
}

Verdict check_functor(const Functor& f) {
  const FinCat& A = *f.src;
  const FinCat& X = *f.dst;
  if (static_cast<int>(f.obj.size()) != A.n_obj() ||
      static_cast<int>(f.mor.size()) != A.n_mor())
    return Verdict::fail({{"reason", "table size mismatch"}});
  for (int a = 0; a < A.n_obj(); ++a)
    if (f.obj[a] < 0 || f.obj[a] >= X.n_obj())
      return Verdict::fail({{"reason", "object image out of range"}, {"object", a}});
  for (int m = 0; m < A.n_mor(); ++m) {
    int i = f.mor[m];
    if (i < 0 || i >= X.n_mor())
      return Verdict::fail({{"reason", "morphism image out of range"}, {"morphism", m}});
    if (X.mors[i].dom != f.obj[A.mors[m].dom] || X.mors[i].cod != f.obj[A.mors[m].cod])
      return Verdict::fail({{"reason", "boundary not preserved"}, {"morphism", A.mors[m].name}});
  }
  for (int a = 0; a < A.n_obj(); ++a)
    if (f.mor[A.id_of[a]] != X.id_of[f.obj[a]])
      return Verdict::fail({{"reason", "identity not preserved"}, {"object", A.objects[a]}});
  for (int m = 0; m < A.n_mor(); ++m)
    for (int k = 0; k < A.n_mor(); ++k) {
      if (!A.composable(m, k)) continue;
      if (f.mor[A.compose(m, k)] != X.compose(f.mor[m], f.mor[k]))
        return Verdict::fail({{"reason", "composition not preserved"},
                              {"first", A.mors[m].name},
                              {"second", A.mors[k].name}});
    }
  return Verdict::ok();
}

Verdict check_transformation(const Transformation& t) {
  if (t.src.src.get() != t.dst.src.get() || t.src.dst.get() != t.dst.dst.get())
    return Verdict::fail({{"reason", "not parallel"}});
  const FinCat& A = *t.src.src;
  const FinCat& X = *t.src.dst;
  if (static_cast<int>(t.comp.size()) != A.n_obj())
    return Verdict::fail({{"reason", "component count mismatch"}});
  for (int a = 0; a < A.n_obj(); ++a) {
    int c = t.comp[a];
    if (c < 0 || c >= X.n_mor() || X.mors[c].dom != t.src.obj[a] ||
        X.mors[c].cod != t.dst.obj[a])
      return Verdict::fail({{"reason", "component boundary"}, {"object", A.objects[a]}});
  }
  for (int m = 0; m < A.n_mor(); ++m) {
    int a = A.mors[m].dom, b = A.mors[m].cod;
    if (X.compose(t.src.mor[m], t.comp[b]) != X.compose(t.comp[a], t.dst.mor[m]))
      return Verdict::fail({{"reason", "naturality"}, {"morphism", A.mors[m].name}});
  }
  return Verdict::ok();
}

// ---- Property checks ----

namespace {

Verdict check_faithful(const Functor& f) {
  const FinCat& A = *f.src;
  for (int m = 0; m < A.n_mor(); ++m)
    for (int k = m + 1; k < A.n_mor(); ++k)
      if (A.mors[m].dom == A.mors[k].dom && A.mors[m].cod == A.mors[k].cod &&
          f.mor[m] == f.mor[k])
        return Verdict::fail({{"reason", "parallel pair identified"},
                              {"first", A.mors[m].name},
                              {"second", A.mors[k].name}});
  return Verdict::ok();
}

Verdict check_full(const Functor& f) {
  const FinCat& A = *f.src;
  const FinCat& X = *f.dst;
  for (int a = 0; a < A.n_obj(); ++a)
    for (int b = 0; b < A.n_obj(); ++b)
      for (int g : X.hom(f.obj[a], f.obj[b])) {
        bool hit = false;
        for (int m : A.hom(a, b))
          if (f.mor[m] == g) { hit = true; break; }
        if (!hit)
          return Verdict::fail({{"reason", "no preimage"},
                                {"from", A.objects[a]},
                                {"to", A.objects[b]},
                                {"target", X.mors[g].name}});
      }
  return Verdict::ok();
}

Verdict check_ess_surjective(const Functor& f) {
  const FinCat& X = *f.dst;
  for (int y = 0; y < X.n_obj(); ++y) {
    bool hit = false;
    for (int a = 0; a < f.src->n_obj() && !hit; ++a)
      if (X.isomorphic_objects(f.obj[a], y)) hit = true;
    if (!hit) return Verdict::fail({{"reason", "object missed"}, {"object", X.objects[y]}});
  }
  return Verdict::ok();
}

Verdict check_isofibration(const Functor& f) {
  const FinCat& A = *f.src;
  const FinCat& X = *f.dst;
  for (int a = 0; a < A.n_obj(); ++a)
    for (int g = 0; g < X.n_mor(); ++g) {
      if (X.mors[g].dom != f.obj[a] || !X.is_iso(g)) continue;
      bool hit = false;
      for (int u = 0; u < A.n_mor(); ++u)
        if (A.mors[u].dom == a && A.is_iso(u) && f.mor[u] == g) { hit = true; break; }
      if (!hit)
        return Verdict::fail({{"reason", "iso lift missing"},
                              {"at", A.objects[a]},
                              {"iso", X.mors[g].name}});
    }
  return Verdict::ok();
}

Verdict check_dof(const Functor& f) {
  const FinCat& A = *f.src;
  const FinCat& X = *f.dst;
  for (int a = 0; a < A.n_obj(); ++a)
    for (int g = 0; g < X.n_mor(); ++g) {
      if (X.mors[g].dom != f.obj[a]) continue;
      int count = 0;
      for (int u = 0; u < A.n_mor(); ++u)
        if (A.mors[u].dom == a && f.mor[u] == g) ++count;
      if (count != 1)
        return Verdict::fail({{"reason", count == 0 ? "no lift" : "multiple lifts"},
                              {"at", A.objects[a]},
                              {"arrow", X.mors[g].name},
                              {"count", count}});
    }
  return Verdict::ok();
}

Verdict check_sof(const Functor& f) {
  Verdict faith = check_faithful(f);
  if (!faith) return faith;
  const FinCat& A = *f.src;
  const FinCat& X = *f.dst;
  for (int a = 0; a < A.n_obj(); ++a)
    for (int g = 0; g < X.n_mor(); ++g) {
      if (X.mors[g].dom != f.obj[a]) continue;
      std::vector<int> lifts;
      for (int u = 0; u < A.n_mor(); ++u)
        if (A.mors[u].dom == a && f.mor[u] == g) lifts.push_back(u);
      if (lifts.empty())
        return Verdict::fail({{"reason", "no lift"}, {"at", A.objects[a]},
                              {"arrow", X.mors[g].name}});
      // Any two lifts must be joined by a unique comparison over an identity.
      for (int u : lifts)
        for (int v : lifts) {
          int z = A.mors[u].cod, w = A.mors[v].cod;
          int count = 0;
          for (int c : A.hom(z, w))
            if (X.is_identity(f.mor[c]) && A.compose(u, c) == v) ++count;
          if (count != 1)
            return Verdict::fail({{"reason", "lift comparison not unique"},
                                  {"at", A.objects[a]},
                                  {"arrow", X.mors[g].name},
                                  {"count", count}});
        }
    }
  return Verdict::ok();
}

Verdict check_mono_functor(const Functor& f) {
  const FinCat& A = *f.src;
  for (int a = 0; a < A.n_obj(); ++a)
    for (int b = a + 1; b < A.n_obj(); ++b)
      if (f.obj[a] == f.obj[b])
        return Verdict::fail({{"reason", "objects identified"},
                              {"first", A.objects[a]}, {"second", A.objects[b]}});
  for (int m = 0; m < A.n_mor(); ++m)
    for (int k = m + 1; k < A.n_mor(); ++k)
      if (f.mor[m] == f.mor[k])
        return Verdict::fail({{"reason", "morphisms identified"},
                              {"first", A.mors[m].name}, {"second", A.mors[k].name}});
  return Verdict::ok();
}

Verdict check_bo_epi(const Functor& f) {
  const FinCat& X = *f.dst;
  std::vector<int> hits(X.n_obj(), 0);
  for (int a = 0; a < f.src->n_obj(); ++a) hits[f.obj[a]]++;
  for (int y = 0; y < X.n_obj(); ++y)
    if (hits[y] != 1)
      return Verdict::fail({{"reason", "object map not bijective"},
                            {"object", X.objects[y]}, {"preimages", hits[y]}});
  return Verdict::ok();
}

}  // namespace

Verdict check_property(MapProperty p, const Functor& f) {
  switch (p) {
    case MapProperty::kFunctor: return check_functor(f);
    case MapProperty::kFaithful: return check_faithful(f);
    case MapProperty::kFull: return check_full(f);
    case MapProperty::kFullyFaithful: return both(check_full(f), check_faithful(f));
    case MapProperty::kEssentiallySurjective: return check_ess_surjective(f);
    case MapProperty::kEquivalence:
      return both(both(check_full(f), check_faithful(f)), check_ess_surjective(f));
    case MapProperty::kIsofibration: return check_isofibration(f);
    case MapProperty::kDiscreteOpfibration: return check_dof(f);
    case MapProperty::kSemiDiscreteOpfibration: return check_sof(f);
    case MapProperty::kMono: return check_mono_functor(f);
    case MapProperty::kBoEpi: return check_bo_epi(f);
    default:
      throw ValidationError("BadProperty", "property applies to transformations only");
  }
}

Verdict check_property(MapProperty p, const Transformation& t) {
  const FinCat& X = *t.src.dst;
  switch (p) {
    case MapProperty::kTransformation: return check_transformation(t);
    case MapProperty::kPointwiseMono:
      for (std::size_t a = 0; a < t.comp.size(); ++a)
        if (!X.is_mono(t.comp[a]))
          return Verdict::fail({{"reason", "component not mono"}, {"object", a}});
      return Verdict::ok();
    case MapProperty::kPointwiseIso:
      for (std::size_t a = 0; a < t.comp.size(); ++a)
        if (!X.is_iso(t.comp[a]))
          return Verdict::fail({{"reason", "component not iso"}, {"object", a}});
      return Verdict::ok();
    default:
      throw ValidationError("BadProperty", "property applies to functors only");
  }
}

const char* property_name(MapProperty p) {
  switch (p) {
    case MapProperty::kFunctor: return "functor";
    case MapProperty::kTransformation: return "transformation";
    case MapProperty::kFaithful: return "faithful";
    case MapProperty::kFull: return "full";
    case MapProperty::kFullyFaithful: return "fully_faithful";
    case MapProperty::kEssentiallySurjective: return "ess_surjective";
    case MapProperty::kEquivalence: return "equivalence";
    case MapProperty::kIsofibration: return "isofibration";
    case MapProperty::kDiscreteOpfibration: return "dof";
    case MapProperty::kSemiDiscreteOpfibration: return "sof";
    case MapProperty::kMono: return "mono";
    case MapProperty::kBoEpi: return "bo_epi";
    case MapProperty::kPointwiseMono: return "pointwise_mono";
    case MapProperty::kPointwiseIso: return "pointwise_iso";
  }
  return "?";
}

std::optional<MapProperty> property_from_name(const std::string& s) {
  for (MapProperty p : {MapProperty::kFunctor, MapProperty::kTransformation,
                        MapProperty::kFaithful, MapProperty::kFull,
                        MapProperty::kFullyFaithful, MapProperty::kEssentiallySurjective,
                        MapProperty::kEquivalence, MapProperty::kIsofibration,
                        MapProperty::kDiscreteOpfibration,
                        MapProperty::kSemiDiscreteOpfibration, MapProperty::kMono,
                        MapProperty::kBoEpi, MapProperty::kPointwiseMono,
                        MapProperty::kPointwiseIso})
    if (s == property_name(p)) return p;
  return std::nullopt;
}

// ---- Enumeration ----

namespace {

// Backtracking over object images then non-identity morphism images, with
// composition constraints checked as soon as all three cells are assigned.
struct FunctorSearch {
  const FinCat& A;
  const FinCat& X;
  Budget& budget;
  std::vector<int> obj, mor;
  std::vector<int> free_mors;
  std::vector<Functor> out;
  const Functor* over_p = nullptr;  // when set, require result ; *over_q == *over_p
  const Functor* over_q = nullptr;
  bool bijective = false;
  bool stop_at_first = false;
  std::vector<int> obj_used, mor_used;

  FunctorSearch(const FinCat& a, const FinCat& x, Budget& b) : A(a), X(x), budget(b) {
    obj.assign(A.n_obj(), -1);
    mor.assign(A.n_mor(), -1);
    for (int m = 0; m < A.n_mor(); ++m)
      if (!A.is_identity(m)) free_mors.push_back(m);
  }

  bool mor_ok(int m, int im) {
    if (X.mors[im].dom != obj[A.mors[m].dom] || X.mors[im].cod != obj[A.mors[m].cod])
      return false;
    if (over_p && over_q->mor[im] != over_p->mor[m]) return false;
    mor[m] = im;
    bool ok = true;
    for (int f = 0; ok && f < A.n_mor(); ++f) {
      if (mor[f] == -1) continue;
      for (int g = 0; ok && g < A.n_mor(); ++g) {
        if (mor[g] == -1 || !A.composable(f, g)) continue;
        int c = A.compose(f, g);
        if (mor[c] != -1 && X.compose(mor[f], mor[g]) != mor[c]) ok = false;
      }
    }
    mor[m] = -1;
    return ok;
  }

  bool assign_mors(std::size_t i) {
    budget.spend(1, "functor enumeration");
    if (i == free_mors.size()) {
      Functor f;
      f.obj = obj;
      f.mor = mor;
      out.push_back(std::move(f));
      return stop_at_first;
    }
    int m = free_mors[i];
    for (int im = 0; im < X.n_mor(); ++im) {
      if (bijective && mor_used[im]) continue;
      if (!mor_ok(m, im)) continue;
      mor[m] = im;
      if (bijective) mor_used[im] = 1;
      bool done = assign_mors(i + 1);
      mor[m] = -1;
      if (bijective) mor_used[im] = 0;
      if (done) return true;
    }
    return false;
  }

  bool assign_objs(int a) {
    budget.spend(1, "functor enumeration");
    if (a == A.n_obj()) {
      for (int o = 0; o < A.n_obj(); ++o) {
        mor[A.id_of[o]] = X.id_of[obj[o]];
        if (bijective) mor_used[X.id_of[obj[o]]] = 1;
      }
      bool done = assign_mors(0);
      for (int o = 0; o < A.n_obj(); ++o) {
        mor[A.id_of[o]] = -1;
        if (bijective) mor_used[X.id_of[obj[o]]] = 0;
      }
      return done;
    }
    for (int y = 0; y < X.n_obj(); ++y) {
      if (bijective && obj_used[y]) continue;
      if (over_p && over_q->obj[y] != over_p->obj[a]) continue;
      if (bijective) {
        // Hom-cardinality profile against already-placed objects.
        bool ok = X.hom(y, y).size() == A.hom(a, a).size();
        for (int b = 0; ok && b < a; ++b)
          ok = X.hom(obj[b], y).size() == A.hom(b, a).size() &&
               X.hom(y, obj[b]).size() == A.hom(a, b).size();
        if (!ok) continue;
      }
      obj[a] = y;
      if (bijective) obj_used[y] = 1;
      bool done = assign_objs(a + 1);
      obj[a] = -1;
      if (bijective) obj_used[y] = 0;
      if (done) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<Functor> enumerate_functors(const CatPtr& src, const CatPtr& dst, Budget& budget) {
  FunctorSearch s(*src, *dst, budget);
  if (src->n_obj() > 0 && dst->n_obj() == 0) return {};
  s.assign_objs(0);
  for (auto& f : s.out) {
    f.src = src;
    f.dst = dst;
  }
  return s.out;
}

std::vector<Transformation> enumerate_transformations(const Functor& f, const Functor& g,
                                                      Budget& budget) {
  const FinCat& A = *f.src;
  const FinCat& X = *f.dst;
  std::vector<Transformation> out;
  std::vector<int> comp(A.n_obj(), -1);
  std::function<void(int)> rec = [&](int a) {
    budget.spend(1, "transformation enumeration");
    if (a == A.n_obj()) {
      Transformation t;
      t.src = f;
      t.dst = g;
      t.comp = comp;
      out.push_back(std::move(t));
      return;
    }
    for (int c : X.hom(f.obj[a], g.obj[a])) {
      bool ok = true;
      for (int m = 0; ok && m < A.n_mor(); ++m) {
        int d = A.mors[m].dom, e = A.mors[m].cod;
        if (d == a && comp[e] != -1 && e != a)
          ok = X.compose(f.mor[m], comp[e]) == X.compose(c, g.mor[m]);
        if (ok && e == a && comp[d] != -1 && d != a)
          ok = X.compose(f.mor[m], c) == X.compose(comp[d], g.mor[m]);
        if (ok && d == a && e == a)
          ok = X.compose(f.mor[m], c) == X.compose(c, g.mor[m]);
      }
      if (!ok) continue;
      comp[a] = c;
      rec(a + 1);
      comp[a] = -1;
    }
  };
  rec(0);
  return out;
}

std::optional<Functor> find_isomorphism(const CatPtr& a, const CatPtr& b, Budget& budget) {
  if (a->n_obj() != b->n_obj() || a->n_mor() != b->n_mor()) return std::nullopt;
  FunctorSearch s(*a, *b, budget);
  s.bijective = true;
  s.stop_at_first = true;
  s.obj_used.assign(b->n_obj(), 0);
  s.mor_used.assign(b->n_mor(), 0);
  s.assign_objs(0);
  if (s.out.empty()) return std::nullopt;
  Functor f = s.out.front();
  f.src = a;
  f.dst = b;
  return f;
}

std::optional<Functor> find_isomorphism_over(const Functor& p, const Functor& q,
                                             Budget& budget) {
  const CatPtr& a = p.src;
  const CatPtr& b = q.src;
  if (a->n_obj() != b->n_obj() || a->n_mor() != b->n_mor()) return std::nullopt;
  FunctorSearch s(*a, *b, budget);
  s.bijective = true;
  s.stop_at_first = true;
  s.over_p = &p;
  s.over_q = &q;
  s.obj_used.assign(b->n_obj(), 0);
  s.mor_used.assign(b->n_mor(), 0);
  s.assign_objs(0);
  if (s.out.empty()) return std::nullopt;
  Functor f = s.out.front();
  f.src = a;
  f.dst = b;
  return f;
}

}  // namespace catv
