#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catv/common.hpp"

namespace catv {

struct Mor {
  std::string name;
  int dom = -1;
  int cod = -1;
};

/// A finite category given by explicit tables. Composition is stored
/// diagrammatically: compose(f, g) is "f then g", defined when cod(f)==dom(g).
/// Structural equality of objects/morphisms is by index; names are labels only.
class FinCat {
 public:
  std::string name;
  std::vector<std::string> objects;
  std::vector<Mor> mors;
  std::vector<int> id_of;  // object index -> identity morphism index

  int n_obj() const { return static_cast<int>(objects.size()); }
  int n_mor() const { return static_cast<int>(mors.size()); }

  int compose(int f, int g) const { return comp_[static_cast<std::size_t>(f) * mors.size() + g]; }
  bool composable(int f, int g) const { return mors[f].cod == mors[g].dom; }

  bool is_identity(int f) const { return id_of[mors[f].dom] == f && mors[f].dom == mors[f].cod; }

  /// Inverse morphism index, or -1 when f is not invertible.
  int inverse(int f) const;
  bool is_iso(int f) const { return inverse(f) >= 0; }
  bool is_mono(int f) const;
  bool is_epi(int f) const;

  std::vector<int> hom(int a, int b) const;

  /// Objects a, b connected by an isomorphism.
  bool isomorphic_objects(int a, int b) const;
  bool is_groupoid() const;
  bool is_terminal_object(int t) const;

  const std::string& mor_name(int f) const { return mors[f].name; }

  friend class CatBuilder;

 private:
  std::vector<int> comp_;  // dense n_mor x n_mor, -1 = not composable
  std::vector<int> inv_;   // morphism -> inverse, -1 if none (filled by validate)
};

using CatPtr = std::shared_ptr<const FinCat>;

/// Accumulates raw tables, then validate() checks identities, totality of
/// composition on composable pairs, and associativity before freezing.
class CatBuilder {
 public:
  explicit CatBuilder(std::string name = "") { cat_.name = std::move(name); }

  int add_object(std::string label);
  /// Identity morphisms are created by add_object; this adds a non-trivial arrow.
  int add_mor(std::string label, int dom, int cod);
  void set_compose(int f, int g, int fg);

  int n_obj() const { return cat_.n_obj(); }
  int n_mor() const { return cat_.n_mor(); }
  int id_of(int a) const { return cat_.id_of[a]; }
  int dom(int f) const { return cat_.mors[f].dom; }
  int cod(int f) const { return cat_.mors[f].cod; }
  int get_compose(int f, int g) const { return cat_.compose(f, g); }

  /// Throws ValidationError on any axiom violation.
  CatPtr validate();

 private:
  FinCat cat_;
  bool compose_table_sized_ = false;
  void ensure_table();
};

struct Functor {
  CatPtr src;
  CatPtr dst;
  std::vector<int> obj;  // src object -> dst object
  std::vector<int> mor;  // src morphism -> dst morphism
  std::string name;

  int operator()(int f) const { return mor[f]; }
  int on_obj(int a) const { return obj[a]; }
};

Functor identity_functor(const CatPtr& c);
Functor compose_functors(const Functor& f, const Functor& g);  // f then g
bool same_functor(const Functor& f, const Functor& g);

/// 2-cell between parallel functors: one component morphism per source object.
struct Transformation {
  Functor src;
  Functor dst;
  std::vector<int> comp;  // src object -> morphism of dst.dst
  std::string name;
};

Transformation identity_transformation(const Functor& f);
/// Vertical composite: a then b (a: F=>G, b: G=>H).
Transformation vcompose(const Transformation& a, const Transformation& b);
/// Whisker a 2-cell with functors on either side: h;a;k.
Transformation whisker(const Functor& h, const Transformation& a, const Functor& k);
bool same_transformation(const Transformation& a, const Transformation& b);

Verdict check_functor(const Functor& f);
Verdict check_transformation(const Transformation& t);

enum class MapProperty {
  kFunctor,
  kTransformation,
  kFaithful,
  kFull,
  kFullyFaithful,
  kEssentiallySurjective,
  kEquivalence,
  kIsofibration,
  kDiscreteOpfibration,
  kSemiDiscreteOpfibration,
  kMono,
  kBoEpi,
  kPointwiseMono,
  kPointwiseIso,
};

Verdict check_property(MapProperty p, const Functor& f);
Verdict check_property(MapProperty p, const Transformation& t);
const char* property_name(MapProperty p);
std::optional<MapProperty> property_from_name(const std::string& s);

/// All functors src -> dst, by backtracking over generators; throws
/// BudgetExceeded when the search would visit more than budget candidates.
std::vector<Functor> enumerate_functors(const CatPtr& src, const CatPtr& dst,
                                        Budget& budget);
std::vector<Transformation> enumerate_transformations(const Functor& f, const Functor& g,
                                                      Budget& budget);

/// Strict isomorphism of categories (bijective on objects and morphisms,
/// preserving all structure). Backtracking with hom-cardinality pruning.
std::optional<Functor> find_isomorphism(const CatPtr& a, const CatPtr& b, Budget& budget);

/// Isomorphism over a base: h with h;q == p (as tables).
std::optional<Functor> find_isomorphism_over(const Functor& p, const Functor& q, Budget& budget);

// ---- Constructions ----

CatPtr build_opposite(const CatPtr& c);
struct ProductData {
  CatPtr cat;
  Functor pr1, pr2;
  std::vector<std::vector<int>> obj_idx;  // [a][b] -> product object
  std::vector<std::vector<int>> mor_idx;  // [f][g] -> product morphism
  int pair_obj(int a, int b) const { return obj_idx[a][b]; }
  int pair_mor(int f, int g) const { return mor_idx[f][g]; }
};
ProductData build_product(const CatPtr& a, const CatPtr& b);

struct CosliceData {
  CatPtr cat;           // c / C
  Functor proj;         // forgetful to C
  std::vector<int> obj_arrow;  // coslice object -> morphism c -> x of C
};
CosliceData build_coslice(const CatPtr& c, int obj);

/// Join C * D: disjoint union plus exactly one arrow from each C-object
/// to each D-object.
struct JoinData {
  CatPtr cat;
  Functor inl, inr;
  std::vector<std::vector<int>> join_arrow;  // [c-obj][d-obj] -> morphism
};
JoinData build_join(const CatPtr& c, const CatPtr& d);

/// Fun(J, X) materialized: the category plus dictionaries back to the
/// functors/transformations its objects and morphisms stand for.
struct FunCatData {
  CatPtr cat;
  std::vector<Functor> obj_fun;
  std::vector<Transformation> mor_nat;
  int find_obj(const Functor& f) const;
  int find_mor(const Transformation& t) const;
};
FunCatData build_functor_category(const CatPtr& j, const CatPtr& x, Budget& budget);

/// Collapse of a semi-discrete opfibration p to a discrete opfibration over
/// the same base: picks one representative per fibrewise class connected over
/// identities, and returns the collapsed fibration with the comparison data.
struct DofCollapse {
  CatPtr total;             // E
  Functor p;                // E -> B, a discrete opfibration
  Functor g;                // E' -> E, an equivalence with g;p == p'
  Functor section;          // f: E -> E' with f;g == id
  Transformation beta;      // g;f => id_{E'}, with beta restricted along g trivial
  std::vector<int> rep_of;  // E' object -> chosen representative E' object
};
DofCollapse dof_collapse(const Functor& p);

// ---- Standard small categories ----

CatPtr terminal_cat();
CatPtr empty_cat();
CatPtr discrete_cat(int n);
CatPtr walking_arrow();          // [1]
CatPtr walking_composable_pair();// [2]
CatPtr walking_iso();
CatPtr parallel_pair();
CatPtr span_cat();               // x <- a -> y
CatPtr cospan_cat();             // x -> c <- y
CatPtr commuting_square_cat();   // [1] x [1]
CatPtr boolean_poset();          // B_2: subsets of a 2-element set
CatPtr cyclic_group_cat(int n);  // one object, Z/n
CatPtr symmetric_group_cat(int n);  // one object, S_n (small n)
CatPtr simplex_cat(int n);       // [n] as a poset

/// Skeleton of finite sets of size <= n: object m is the set {0,...,m-1},
/// morphisms are all functions. Function tables are kept alongside.
struct SetSkeleton {
  CatPtr cat;
  int bound = 0;
  std::vector<std::vector<int>> fn;  // morphism -> function table (size = dom)
  int mor_of_fn(int m, int n, const std::vector<int>& f) const;
 private:
  friend SetSkeleton build_set_skeleton(int n);
  std::vector<std::vector<std::vector<int>>> idx_;  // [m][n][code] -> morphism
};
SetSkeleton build_set_skeleton(int n);

struct NamedCat {
  std::string name;
  CatPtr cat;
};
/// The standard corpus used by the test suites.
std::vector<NamedCat> standard_corpus();
CatPtr corpus_lookup(const std::string& name);

}  // namespace catv
