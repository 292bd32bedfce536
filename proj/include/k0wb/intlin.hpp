#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

// Exact integer matrix algebra: Smith/Hermite reductions, finitely
// presented abelian groups in invariant-factor form, and the lattice
// solvers the Grothendieck-group computations reduce to.
// All arithmetic is on arbitrary-precision integers; nothing rounds.

namespace k0wb::intlin {

using Int = mpz_class;

struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> entries;  // row-major, rows*cols

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c, Int(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  Int& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

  static IntMatrix identity(int n);
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  bool is_zero() const;
  std::vector<Int> row(int r) const;
  std::vector<Int> col(int c) const;
  void append_row(const std::vector<Int>& r);
};

// Stack the rows of b under the rows of a (column counts must agree;
// an empty matrix acts as the neutral element).
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

// Exact determinant by fraction-free (Bareiss) elimination; square input.
Int det(const IntMatrix& a);

struct SmithDecomposition {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // rows x cols, diagonal with divisibility chain
  IntMatrix V;  // cols x cols, unimodular
  std::vector<Int> invariant_factors;  // full diagonal, length min(rows, cols), zeros trail
};

// U*A*V = D. Pivot selection takes the minimal-absolute-value nonzero
// entry of the working submatrix to limit coefficient growth.
SmithDecomposition smith_normal_form(const IntMatrix& a);

// Some x with A*x = b, or nullopt when no integer solution exists.
std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b);

// Basis (as rows) of the integer kernel {x : A*x = 0}.
IntMatrix kernel_lattice(const IntMatrix& a);

// Canonical row-echelon form (Hermite style) of the lattice spanned by
// the rows of `gens`: positive pivots, reduced entries above, zero rows
// dropped. Two row sets span the same lattice iff their forms coincide.
IntMatrix lattice_row_canonical(const IntMatrix& gens);

bool lattice_contains(const IntMatrix& gens, const std::vector<Int>& v);
bool lattice_equal(const IntMatrix& gens_a, const IntMatrix& gens_b);

// Finitely generated abelian group, kept both as a presentation
// (gens, relation rows) and in invariant-factor form. The canonical
// form folds trailing zero factors into free_rank and drops ones, so
// group equality is a plain comparison of (free_rank, torsion).
struct AbGroup {
  long free_rank = 0;
  std::vector<Int> torsion;  // each >= 2, each dividing the next
  int gens = 0;
  IntMatrix relations;  // rows are relations, `gens` columns

  // Coordinate data: canonical coordinates of x in Z^gens are
  // reduce(U*x) where U comes from the Smith form of relations^T.
  IntMatrix transform;     // gens x gens unimodular
  std::vector<Int> diag;   // length gens; factor per slot (1 = killed, 0 = free)

  bool same_invariants(const AbGroup& other) const {
    return free_rank == other.free_rank && torsion == other.torsion;
  }
  bool same_presentation(const AbGroup& other) const {
    return gens == other.gens && lattice_equal(relations, other.relations);
  }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  // Order of the group as an integer, or nullopt when infinite.
  std::optional<Int> order() const;

  // Canonical coordinates (one slot per surviving factor, torsion first).
  std::vector<Int> canonical_coords(const std::vector<Int>& x) const;
  bool element_is_zero(const std::vector<Int>& x) const;
};

AbGroup group_from_presentation(long gens, const IntMatrix& relations);

struct GroupHom {
  AbGroup source;
  AbGroup target;
  IntMatrix matrix;  // target.gens x source.gens, on presentation generators
};

// Build a hom after verifying that the matrix maps the source relation
// lattice into the target relation lattice; throws std::invalid_argument
// (naming the violated relation) otherwise.
GroupHom make_hom(const AbGroup& source, const AbGroup& target, const IntMatrix& matrix);

bool hom_is_well_defined(const IntMatrix& matrix, const AbGroup& source, const AbGroup& target,
                         int* violated_relation = nullptr);
bool hom_is_surjective(const GroupHom& h);
bool hom_is_injective(const GroupHom& h);
bool hom_is_isomorphism(const GroupHom& h);

struct ExactnessVerdict {
  bool ok = false;
  bool composite_zero = false;
  bool surjective = false;
  bool kernel_equals_image = false;
  std::string reason;  // empty when ok
};

// True verdict iff g is surjective, g∘f = 0 and ker g = im f, all
// decided by exact lattice comparison. Requires f.target and g.source
// to be the same presentation (throws std::invalid_argument otherwise).
ExactnessVerdict check_right_exact(const GroupHom& f, const GroupHom& g);

}  // namespace k0wb::intlin
