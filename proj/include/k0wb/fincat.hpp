#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Finite k-linear additive categories presented by indecomposables, Hom
// bases and a composition table over a prime field. Objects are formal
// direct sums of indecomposables; morphisms are block matrices of
// coefficient vectors. The factorization solvers here (weak cokernel,
// factor-through-subcategory, left/right division) are the primitives
// every axiom check reduces to.

namespace k0wb::fincat {

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EnumerationCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense matrix over F_p with the handful of solvers we need.
struct FpMat {
  int rows = 0;
  int cols = 0;
  std::vector<int> a;  // row-major, values 0..p-1

  FpMat() = default;
  FpMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

int fp_rank(FpMat m, int p);
// One solution of M x = b, or nullopt.
std::optional<std::vector<int>> fp_solve(const FpMat& m, const std::vector<int>& b, int p);
// Basis of the nullspace of M (each element a column vector of length cols).
std::vector<std::vector<int>> fp_nullspace(const FpMat& m, int p);

// ---------------------------------------------------------------------------

struct Shift {
  std::vector<int> map;      // indec -> shifted indec, -1 where undefined (window edges)
  std::vector<int> inverse;  // derived
  bool total = true;
};

struct CompKey {
  // left ∘ right where right: a -> b (basis ri) and left: b -> c (basis li)
  int a, b, c, ri, li;
  auto operator<=>(const CompKey&) const = default;
};

struct FinCategory {
  int prime = 2;
  std::vector<std::string> indec_names;
  std::vector<std::vector<int>> hom_dims;          // [src][dst]
  std::map<CompKey, std::vector<int>> comp_table;  // composites of non-identity basis pairs
  std::optional<Shift> shift;
  long enumeration_cap = 1 << 20;

  int n() const { return static_cast<int>(indec_names.size()); }
  int dim(int src, int dst) const { return hom_dims[src][dst]; }
  int indec_index(const std::string& name) const;

  // Composite of basis morphisms (right: a->b index ri, then left: b->c
  // index li), as coefficients over the basis of Hom(a, c). Index 0 of
  // each endomorphism space is the identity; composites with it are
  // implicit and everything else defaults to zero.
  std::vector<int> compose_basis(int a, int b, int c, int ri, int li) const;

  // Load-time semantic validation: associativity, two-sided units,
  // pairwise non-isomorphic indecomposables with local endomorphism
  // algebras. Throws ValidationError with a description on failure.
  void validate() const;
};

// Formal direct sum of indecomposables. Parts are kept in the given
// order (block layout depends on it); multiset comparisons sort copies.
struct Obj {
  std::vector<int> parts;

  Obj() = default;
  explicit Obj(std::vector<int> p) : parts(std::move(p)) {}
  int size() const { return static_cast<int>(parts.size()); }
  bool is_zero() const { return parts.empty(); }
  std::vector<int> sorted_parts() const;
  bool multiset_equal(const Obj& other) const { return sorted_parts() == other.sorted_parts(); }
  auto operator<=>(const Obj&) const = default;
};

Obj direct_sum(const Obj& a, const Obj& b);
std::string obj_to_string(const FinCategory& cat, const Obj& o);

// Morphism as one flat coefficient vector; entry layout is
// (target part, source part, basis index), target-major.
struct Mor {
  Obj src;
  Obj dst;
  std::vector<int> coeffs;

  auto operator<=>(const Mor&) const = default;
};

int hom_dim(const FinCategory& cat, const Obj& a, const Obj& b);
int block_offset(const FinCategory& cat, const Mor& m, int ti, int sj);

Mor zero_mor(const FinCategory& cat, const Obj& a, const Obj& b);
Mor identity_mor(const FinCategory& cat, const Obj& a);
bool is_zero_mor(const Mor& m);
Mor add(const FinCategory& cat, const Mor& f, const Mor& g);
Mor negate(const FinCategory& cat, const Mor& f);
Mor compose(const FinCategory& cat, const Mor& g, const Mor& f);  // g ∘ f
Mor direct_sum(const FinCategory& cat, const Mor& f, const Mor& g);

// Single basis morphism src_indec -> dst_indec (index k) as a Mor.
Mor basis_mor(const FinCategory& cat, int src_indec, int dst_indec, int k);

// The evident isomorphism between two orderings of the same multiset.
Mor permutation_iso(const FinCategory& cat, const Obj& from, const Obj& to);

// Canonical inclusion of component `which` of b into a ⊕ b layouts etc.
Mor inclusion(const FinCategory& cat, const Obj& summand, const Obj& whole, const std::vector<int>& positions);
Mor projection(const FinCategory& cat, const Obj& whole, const Obj& summand, const std::vector<int>& positions);

bool is_isomorphism(const FinCategory& cat, const Mor& f);
// Two-sided inverse of an isomorphism; throws if f is not invertible.
Mor mor_inverse(const FinCategory& cat, const Mor& f);
bool is_section(const FinCategory& cat, const Mor& f);     // has left inverse
bool is_retraction(const FinCategory& cat, const Mor& f);  // has right inverse

// Some t with t ∘ g = h (g and h share a source), or nullopt.
std::optional<Mor> solve_right_factor(const FinCategory& cat, const Mor& g, const Mor& h);
// Some u with f ∘ u = h (f and h share a target), or nullopt.
std::optional<Mor> solve_left_factor(const FinCategory& cat, const Mor& f, const Mor& h);

bool is_weak_cokernel(const FinCategory& cat, const Mor& f, const Mor& g);
bool is_weak_kernel(const FinCategory& cat, const Mor& f, const Mor& g);
// g is a genuine cokernel of f: weak cokernel with unique factorizations.
bool is_cokernel(const FinCategory& cat, const Mor& f, const Mor& g);

// h factors through an object of add{N}; decided by one linear solve
// against the universal map into the sum of all basis morphisms.
bool factors_through(const FinCategory& cat, const Mor& h, const std::vector<int>& sub_indecs);

std::vector<Mor> enumerate_homs(const FinCategory& cat, const Obj& a, const Obj& b);
long hom_space_size(const FinCategory& cat, const Obj& a, const Obj& b);  // p^dim, or -1 if above cap

// All objects with total multiplicity <= bound, the zero object first;
// parts are sorted so each isomorphism class appears once.
std::vector<Obj> universe(const FinCategory& cat, int bound);

std::optional<Obj> shift_obj(const FinCategory& cat, const Obj& o, int steps = 1);
std::optional<Mor> shift_mor(const FinCategory& cat, const Mor& m, int steps = 1);

struct SequenceTriple {
  Obj A;
  Mor f;
  Obj B;
  Mor g;
  Obj C;
  std::optional<Mor> connecting;  // C -> A[1] when present

  auto operator<=>(const SequenceTriple&) const = default;
};

SequenceTriple direct_sum(const FinCategory& cat, const SequenceTriple& s, const SequenceTriple& t);
std::string seq_to_string(const FinCategory& cat, const SequenceTriple& s);
std::string mor_to_string(const FinCategory& cat, const Mor& m);

// Isomorphism-invariant fingerprint of a morphism: per indecomposable
// E, the kernel dimensions of precomposition Hom(dst, E) -> Hom(src, E)
// and postcomposition Hom(E, src) -> Hom(E, dst). Morphisms with
// different profiles cannot be isomorphic; used to prune iso searches.
std::vector<int> mor_profile(const FinCategory& cat, const Mor& m);

// Morphisms u, v are isomorphic when invertible vertical maps complete
// the square v ∘ a = b ∘ u. The search solves the commuting-square
// system and scans the solution space for an invertible pair.
bool mor_isomorphic(const FinCategory& cat, const Mor& u, const Mor& v);
// Same search, returning the witnessing pair (a, b).
std::optional<std::pair<Mor, Mor>> solve_mor_iso(const FinCategory& cat, const Mor& u, const Mor& v);

// Isomorphism of sequence triples: three invertible vertical maps
// making both squares commute. Returns the witnessing triple.
struct TripleIso {
  Mor alpha, beta, gamma;
};
std::optional<TripleIso> solve_triple_iso(const FinCategory& cat, const SequenceTriple& from,
                                          const SequenceTriple& to);

}  // namespace k0wb::fincat
