#pragma once

#include <array>
#include <map>
#include <optional>

#include "catv/fincat.hpp"

namespace catv {

// ---- Pullbacks of categories ----

/// Canonical strict pullback of f: A -> U, g: B -> U: objects and morphisms
/// are the compatible pairs.
struct PullbackData {
  CatPtr apex;
  Functor pr1, pr2;
  std::vector<std::vector<int>> obj_idx;  // [A-obj][B-obj] -> apex obj or -1
  std::vector<std::vector<int>> mor_idx;
  int pair_obj(int a, int b) const { return obj_idx[a][b]; }
  int pair_mor(int f, int g) const { return mor_idx[f][g]; }
};
PullbackData build_pullback(const Functor& f, const Functor& g);

/// Is (h, k) the strict pullback of the cospan (f, g)? Checked by the
/// canonical comparison into the compatible-pairs category being bijective.
Verdict check_strict_pullback(const Functor& h, const Functor& k, const Functor& f,
                              const Functor& g);

// ---- Cotensors with small shapes, built from tables ----

struct ArrowCatData {
  CatPtr cat;  // X^[1]
  Functor d0, d1;        // cat -> X
  Transformation delta;  // d0 => d1, component at object "f" is f itself
  std::vector<int> obj_mor;                  // object -> morphism of X
  std::vector<std::pair<int, int>> mor_pair; // morphism -> (u, v)
  std::vector<int> obj_of;                   // X morphism -> object
  int mor_of(int src_obj, int dst_obj, int u, int v) const;

 private:
  friend ArrowCatData build_arrow_category(const CatPtr& x);
  std::map<std::array<int, 4>, int> mor_lookup_;  // (src obj, dst obj, u, v) -> mor
};
ArrowCatData build_arrow_category(const CatPtr& x);

struct PairCatData {
  CatPtr cat;  // X^[2]: composable pairs, morphisms are triples
  std::vector<std::pair<int, int>> obj_pair;
  std::vector<std::array<int, 3>> mor_triple;
  Functor p01, p12, p02;  // into the arrow category
  int obj_of(int f, int g) const;

 private:
  friend PairCatData build_pair_category(const CatPtr& x, const ArrowCatData& arr);
  std::map<std::pair<int, int>, int> obj_lookup_;
};
PairCatData build_pair_category(const CatPtr& x, const ArrowCatData& arr);

/// Core: same objects, only the invertible morphisms.
struct CoreData {
  CatPtr cat;
  Functor incl;             // core -> X, identity on objects
  std::vector<int> mor_of;  // core morphism -> X morphism
  std::vector<int> core_of; // X morphism -> core morphism or -1
};
CoreData build_core(const CatPtr& x);
/// Restriction of f to cores; f must carry isos to isos (always true).
Functor core_of_functor(const Functor& f, const CoreData& ca, const CoreData& cx);

struct FullSubcatData {
  CatPtr cat;
  Functor incl;
  std::vector<int> obj_of;  // subcat object -> ambient object
  std::vector<int> mor_of;
  std::vector<int> obj_back;  // ambient object -> subcat object or -1
  std::vector<int> mor_back;
};
FullSubcatData full_subcat(const CatPtr& x, const std::vector<int>& objs, std::string name);

/// Mono-object: full subcategory of the arrow category on the monomorphisms.
struct MonData {
  CatPtr cat;
  Functor incl;  // into arr.cat
  Functor d0, d1;
  Transformation delta;
  std::vector<int> obj_mor;  // mon object -> X morphism
};
MonData build_mon_object(const CatPtr& x, const ArrowCatData& arr);

// ---- Limits inside a finite category ----

struct Cone {
  int apex = -1;
  int leg1 = -1;
  int leg2 = -1;
};

bool is_pullback_square(const FinCat& x, int top, int left, int right, int bottom);
bool is_product_cone(const FinCat& x, int leg1, int leg2);
/// Least universal cone in lexicographic (apex, leg1, leg2) order.
std::optional<Cone> chosen_pullback(const FinCat& x, int f, int g);
std::optional<Cone> chosen_product(const FinCat& x, int a, int b);
std::optional<int> chosen_terminal(const FinCat& x);
/// Terminal object plus all binary pullbacks; witness records the choices.
Verdict has_finite_limits(const CatPtr& x);

// ---- Limit sketches (marked pullback squares / products / terminals) ----

struct Sketch {
  std::string name;
  CatPtr shape;
  // (top, left, right, bottom): top,left out of the marked corner,
  // top;right == left;bottom.
  std::vector<std::array<int, 4>> pullback_squares;
  std::vector<std::pair<int, int>> products;  // cone legs out of the marked apex
  std::vector<int> terminals;
};
Verdict validate_sketch(const Sketch& s);
/// Shape [1], one marked square (id, id, f, f): models are the monomorphisms.
Sketch mon_sketch();
bool is_model(const Sketch& s, const Functor& m);

struct SketchCotensorData {
  std::shared_ptr<FunCatData> fun;  // Fun(shape, X)
  CatPtr total;
  Functor to_fun;  // total -> fun->cat
};
enum class SketchRoute { kDirect, kPullbackAssembly };
SketchCotensorData sketch_cotensor(const CatPtr& x, const Sketch& s, SketchRoute route,
                                   Budget& budget);
/// Compare two routes: an isomorphism over Fun(shape, X), matching objects
/// through the functor dictionaries.
Verdict compare_sketch_routes(const SketchCotensorData& a, const SketchCotensorData& b,
                              Budget& budget);

}  // namespace catv
