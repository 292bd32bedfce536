#include "k0wb/intlin.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace k0wb::intlin {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows = static_cast<int>(init.size());
  cols = rows == 0 ? 0 : static_cast<int>(init.begin()->size());
  entries.reserve(static_cast<size_t>(rows) * cols);
  for (const auto& r : init) {
    if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("ragged initializer");
    for (long v : r) entries.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols != other.rows) throw std::invalid_argument("matrix shape mismatch in product");
  IntMatrix p(rows, other.cols);
  for (int r = 0; r < rows; ++r)
    for (int k = 0; k < cols; ++k) {
      const Int& a = at(r, k);
      if (a == 0) continue;
      for (int c = 0; c < other.cols; ++c) p.at(r, c) += a * other.at(k, c);
    }
  return p;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Int& v) { return v == 0; });
}

std::vector<Int> IntMatrix::row(int r) const {
  std::vector<Int> out(cols);
  for (int c = 0; c < cols; ++c) out[c] = at(r, c);
  return out;
}

std::vector<Int> IntMatrix::col(int c) const {
  std::vector<Int> out(rows);
  for (int r = 0; r < rows; ++r) out[r] = at(r, c);
  return out;
}

void IntMatrix::append_row(const std::vector<Int>& r) {
  if (rows == 0 && cols == 0) cols = static_cast<int>(r.size());
  if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("row length mismatch");
  entries.insert(entries.end(), r.begin(), r.end());
  ++rows;
}

IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows == 0) return b;
  if (b.rows == 0) return a;
  if (a.cols != b.cols) throw std::invalid_argument("vstack column mismatch");
  IntMatrix out = a;
  out.entries.insert(out.entries.end(), b.entries.begin(), b.entries.end());
  out.rows += b.rows;
  return out;
}

Int det(const IntMatrix& a) {
  if (a.rows != a.cols) throw std::invalid_argument("det of non-square matrix");
  int n = a.rows;
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      for (int c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(swap, c));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(i, j) = v;
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : Int(-m.at(n - 1, n - 1));
}

namespace {

// Row/column elementary operations tracked in U (left) and V (right).
struct SmithWork {
  IntMatrix d, u, v;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int c = 0; c < d.cols; ++c) std::swap(d.at(a, c), d.at(b, c));
    for (int c = 0; c < u.cols; ++c) std::swap(u.at(a, c), u.at(b, c));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int r = 0; r < d.rows; ++r) std::swap(d.at(r, a), d.at(r, b));
    for (int r = 0; r < v.rows; ++r) std::swap(v.at(r, a), v.at(r, b));
  }
  void add_row(int dst, int src, const Int& q) {  // row_dst += q*row_src
    if (q == 0) return;
    for (int c = 0; c < d.cols; ++c) d.at(dst, c) += q * d.at(src, c);
    for (int c = 0; c < u.cols; ++c) u.at(dst, c) += q * u.at(src, c);
  }
  void add_col(int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int r = 0; r < d.rows; ++r) d.at(r, dst) += q * d.at(r, src);
    for (int r = 0; r < v.rows; ++r) v.at(r, dst) += q * v.at(r, src);
  }
  void negate_row(int r) {
    for (int c = 0; c < d.cols; ++c) d.at(r, c) = -d.at(r, c);
    for (int c = 0; c < u.cols; ++c) u.at(r, c) = -u.at(r, c);
  }
};

Int floordiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithWork w{a, IntMatrix::identity(a.rows), IntMatrix::identity(a.cols)};
  const int n = std::min(a.rows, a.cols);

  for (int t = 0; t < n; ++t) {
    // Minimal-absolute-value nonzero pivot in the trailing submatrix.
    int pr = -1, pc = -1;
    for (int r = t; r < a.rows; ++r)
      for (int c = t; c < a.cols; ++c) {
        const Int& e = w.d.at(r, c);
        if (e == 0) continue;
        if (pr < 0 || mpz_cmpabs(e.get_mpz_t(), w.d.at(pr, pc).get_mpz_t()) < 0) {
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;  // trailing submatrix is zero
    w.swap_rows(t, pr);
    w.swap_cols(t, pc);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int r = t + 1; r < a.rows; ++r) {
        if (w.d.at(r, t) == 0) continue;
        Int q = floordiv(w.d.at(r, t), w.d.at(t, t));
        w.add_row(r, t, -q);
        if (w.d.at(r, t) != 0) {  // remainder strictly smaller: promote it
          w.swap_rows(t, r);
          clean = false;
        }
      }
      for (int c = t + 1; c < a.cols; ++c) {
        if (w.d.at(t, c) == 0) continue;
        Int q = floordiv(w.d.at(t, c), w.d.at(t, t));
        w.add_col(c, t, -q);
        if (w.d.at(t, c) != 0) {
          w.swap_cols(t, c);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility fix-up: fold any non-multiple into the pivot's row.
      for (int r = t + 1; r < a.rows && clean; ++r)
        for (int c = t + 1; c < a.cols && clean; ++c)
          if (w.d.at(r, c) % w.d.at(t, t) != 0) {
            w.add_row(t, r, Int(1));
            clean = false;
          }
    }
    if (w.d.at(t, t) < 0) w.negate_row(t);
  }

  SmithDecomposition out;
  out.U = std::move(w.u);
  out.D = std::move(w.d);
  out.V = std::move(w.v);
  out.invariant_factors.resize(n);
  for (int i = 0; i < n; ++i) out.invariant_factors[i] = out.D.at(i, i);
  return out;
}

std::optional<std::vector<Int>> solve_integer(const IntMatrix& a, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != a.rows) throw std::invalid_argument("solve_integer shape mismatch");
  SmithDecomposition s = smith_normal_form(a);
  // A x = b  <=>  D y = U b with x = V y.
  std::vector<Int> c(a.rows, Int(0));
  for (int r = 0; r < a.rows; ++r)
    for (int k = 0; k < a.rows; ++k) c[r] += s.U.at(r, k) * b[k];
  std::vector<Int> y(a.cols, Int(0));
  const int n = std::min(a.rows, a.cols);
  for (int i = 0; i < a.rows; ++i) {
    const Int d = i < n ? s.D.at(i, i) : Int(0);
    if (d == 0) {
      if (c[i] != 0) return std::nullopt;
    } else {
      if (c[i] % d != 0) return std::nullopt;
      y[i] = c[i] / d;
    }
  }
  std::vector<Int> x(a.cols, Int(0));
  for (int r = 0; r < a.cols; ++r)
    for (int k = 0; k < a.cols; ++k) x[r] += s.V.at(r, k) * y[k];
  return x;
}

IntMatrix kernel_lattice(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  const int n = std::min(a.rows, a.cols);
  IntMatrix out(0, a.cols);
  for (int i = 0; i < a.cols; ++i) {
    if (i < n && s.D.at(i, i) != 0) continue;
    out.append_row(s.V.col(i));
  }
  return out;
}

IntMatrix lattice_row_canonical(const IntMatrix& gens) {
  IntMatrix m = gens;
  int pivot_row = 0;
  std::vector<int> pivot_cols;
  for (int c = 0; c < m.cols && pivot_row < m.rows; ++c) {
    // Euclidean reduction of column c below pivot_row.
    while (true) {
      int best = -1;
      for (int r = pivot_row; r < m.rows; ++r)
        if (m.at(r, c) != 0 && (best < 0 || mpz_cmpabs(m.at(r, c).get_mpz_t(), m.at(best, c).get_mpz_t()) < 0))
          best = r;
      if (best < 0) break;
      for (int k = 0; k < m.cols; ++k) std::swap(m.at(pivot_row, k), m.at(best, k));
      bool all_clear = true;
      for (int r = pivot_row + 1; r < m.rows; ++r) {
        if (m.at(r, c) == 0) continue;
        Int q = floordiv(m.at(r, c), m.at(pivot_row, c));
        for (int k = 0; k < m.cols; ++k) m.at(r, k) -= q * m.at(pivot_row, k);
        if (m.at(r, c) != 0) all_clear = false;
      }
      if (all_clear) break;
    }
    if (m.at(pivot_row, c) == 0) continue;
    if (m.at(pivot_row, c) < 0)
      for (int k = 0; k < m.cols; ++k) m.at(pivot_row, k) = -m.at(pivot_row, k);
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  // Reduce entries above each pivot.
  for (int i = static_cast<int>(pivot_cols.size()) - 1; i >= 0; --i) {
    int c = pivot_cols[i];
    for (int r = 0; r < i; ++r) {
      Int q = floordiv(m.at(r, c), m.at(i, c));
      if (q == 0) continue;
      for (int k = 0; k < m.cols; ++k) m.at(r, k) -= q * m.at(i, k);
    }
  }
  IntMatrix out(0, m.cols);
  for (int r = 0; r < pivot_row; ++r) out.append_row(m.row(r));
  return out;
}

bool lattice_contains(const IntMatrix& gens, const std::vector<Int>& v) {
  if (std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; })) return true;
  IntMatrix cols = gens.transpose();  // columns generate the lattice
  if (cols.cols == 0) return false;
  return solve_integer(cols, v).has_value();
}

bool lattice_equal(const IntMatrix& gens_a, const IntMatrix& gens_b) {
  if (gens_a.cols != gens_b.cols && gens_a.rows != 0 && gens_b.rows != 0) return false;
  return lattice_row_canonical(gens_a) == lattice_row_canonical(gens_b);
}

std::optional<Int> AbGroup::order() const {
  if (free_rank > 0) return std::nullopt;
  Int n = 1;
  for (const Int& t : torsion) n *= t;
  return n;
}

std::vector<Int> AbGroup::canonical_coords(const std::vector<Int>& x) const {
  if (static_cast<int>(x.size()) != gens) throw std::invalid_argument("coordinate length mismatch");
  std::vector<Int> y(gens, Int(0));
  for (int r = 0; r < gens; ++r)
    for (int k = 0; k < gens; ++k) y[r] += transform.at(r, k) * x[k];
  std::vector<Int> out;
  for (int i = 0; i < gens; ++i) {
    if (diag[i] == 1) continue;  // killed generator slot
    if (diag[i] == 0) {
      out.push_back(y[i]);
    } else {
      Int m;
      mpz_fdiv_r(m.get_mpz_t(), y[i].get_mpz_t(), diag[i].get_mpz_t());
      out.push_back(m);
    }
  }
  return out;
}

bool AbGroup::element_is_zero(const std::vector<Int>& x) const {
  auto c = canonical_coords(x);
  return std::all_of(c.begin(), c.end(), [](const Int& v) { return v == 0; });
}

AbGroup group_from_presentation(long gens, const IntMatrix& relations) {
  if (relations.rows > 0 && relations.cols != gens)
    throw std::invalid_argument("relation matrix must have one column per generator");
  AbGroup g;
  g.gens = static_cast<int>(gens);
  g.relations = relations;
  g.relations.cols = static_cast<int>(gens);  // normalize 0-row case

  IntMatrix a = relations.rows == 0 ? IntMatrix(static_cast<int>(gens), 0) : relations.transpose();
  SmithDecomposition s = smith_normal_form(a);
  g.transform = s.U;
  g.diag.assign(gens, Int(0));
  const int n = std::min(a.rows, a.cols);
  for (int i = 0; i < n; ++i) g.diag[i] = s.D.at(i, i);
  for (int i = 0; i < gens; ++i) {
    if (g.diag[i] == 0)
      ++g.free_rank;
    else if (g.diag[i] >= 2)
      g.torsion.push_back(g.diag[i]);
  }
  return g;
}

bool hom_is_well_defined(const IntMatrix& matrix, const AbGroup& source, const AbGroup& target,
                         int* violated_relation) {
  if (matrix.rows != target.gens || matrix.cols != source.gens)
    throw std::invalid_argument("hom matrix shape must be target.gens x source.gens");
  for (int r = 0; r < source.relations.rows; ++r) {
    std::vector<Int> image(target.gens, Int(0));
    for (int i = 0; i < target.gens; ++i)
      for (int j = 0; j < source.gens; ++j) image[i] += matrix.at(i, j) * source.relations.at(r, j);
    if (!lattice_contains(target.relations, image)) {
      if (violated_relation) *violated_relation = r;
      return false;
    }
  }
  return true;
}

GroupHom make_hom(const AbGroup& source, const AbGroup& target, const IntMatrix& matrix) {
  int bad = -1;
  if (!hom_is_well_defined(matrix, source, target, &bad))
    throw std::invalid_argument("assignment does not respect source relation " + std::to_string(bad));
  return GroupHom{source, target, matrix};
}

bool hom_is_surjective(const GroupHom& h) {
  // Columns of the matrix together with the target relations must span Z^target.gens.
  if (h.target.gens == 0) return true;
  IntMatrix span = vstack(h.matrix.transpose(), h.target.relations);
  if (span.rows == 0) return false;
  SmithDecomposition s = smith_normal_form(span);
  int ones = 0;
  for (const Int& f : s.invariant_factors)
    if (f == 1) ++ones;
  return ones == h.target.gens;
}

namespace {

// Generators (rows) of the preimage lattice {v : M v lies in L(target relations)}.
IntMatrix preimage_lattice(const IntMatrix& m, const AbGroup& target) {
  // Kernel of [M | -R^T] projected to the first block of coordinates.
  IntMatrix rt = target.relations.transpose();  // target.gens x numrels
  IntMatrix stacked(m.rows, m.cols + rt.cols);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) stacked.at(r, c) = m.at(r, c);
    for (int c = 0; c < rt.cols; ++c) stacked.at(r, m.cols + c) = -rt.at(r, c);
  }
  IntMatrix ker = kernel_lattice(stacked);
  IntMatrix out(0, m.cols);
  for (int r = 0; r < ker.rows; ++r) {
    std::vector<Int> full = ker.row(r);
    out.append_row(std::vector<Int>(full.begin(), full.begin() + m.cols));
  }
  return out;
}

}  // namespace

bool hom_is_injective(const GroupHom& h) {
  IntMatrix ker = preimage_lattice(h.matrix, h.target);
  IntMatrix combined = vstack(ker, h.source.relations);
  return lattice_equal(combined, h.source.relations);
}

bool hom_is_isomorphism(const GroupHom& h) { return hom_is_surjective(h) && hom_is_injective(h); }

ExactnessVerdict check_right_exact(const GroupHom& f, const GroupHom& g) {
  if (!f.target.same_presentation(g.source))
    throw std::invalid_argument("presentation mismatch: f.target differs from g.source");
  ExactnessVerdict v;

  // g∘f = 0 on every source generator.
  IntMatrix comp = g.matrix * f.matrix;
  v.composite_zero = true;
  for (int j = 0; j < comp.cols && v.composite_zero; ++j)
    if (!lattice_contains(g.target.relations, comp.col(j))) v.composite_zero = false;

  v.surjective = hom_is_surjective(g);

  IntMatrix ker = vstack(preimage_lattice(g.matrix, g.target), g.source.relations);
  IntMatrix img = vstack(f.matrix.transpose(), g.source.relations);
  v.kernel_equals_image = lattice_equal(ker, img);

  v.ok = v.composite_zero && v.surjective && v.kernel_equals_image;
  if (!v.ok) {
    if (!v.composite_zero)
      v.reason = "composite g∘f is nonzero";
    else if (!v.surjective)
      v.reason = "g is not surjective";
    else
      v.reason = "kernel of g differs from image of f";
  }
  return v;
}

}  // namespace k0wb::intlin
