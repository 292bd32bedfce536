#include "k0wb/fincat.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace k0wb::fincat {

// --------------------------------------------------------------------------
// F_p linear algebra

namespace {

int fp_inv(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  int r = 1;
  for (int e = p - 2; e > 0; e >>= 1) {  // p prime
    if (e & 1) r = r * a % p;
    a = a * a % p;
  }
  return r;
}

// Row-reduce in place; returns pivot columns.
std::vector<int> fp_rref(FpMat& m, int p) {
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < m.cols && row < m.rows; ++c) {
    int pr = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, c) % p != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    for (int k = 0; k < m.cols; ++k) std::swap(m.a[static_cast<size_t>(row) * m.cols + k], m.a[static_cast<size_t>(pr) * m.cols + k]);
    int inv = fp_inv(m.at(row, c), p);
    for (int k = 0; k < m.cols; ++k) m.at(row, k) = m.at(row, k) * inv % p;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      int f = m.at(r, c) % p;
      if (f == 0) continue;
      for (int k = 0; k < m.cols; ++k) m.at(r, k) = ((m.at(r, k) - f * m.at(row, k)) % p + p) % p;
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

int fp_rank(FpMat m, int p) { return static_cast<int>(fp_rref(m, p).size()); }

std::optional<std::vector<int>> fp_solve(const FpMat& m, const std::vector<int>& b, int p) {
  FpMat aug(m.rows, m.cols + 1);
  for (int r = 0; r < m.rows; ++r) {
    for (int c = 0; c < m.cols; ++c) aug.at(r, c) = ((m.at(r, c) % p) + p) % p;
    aug.at(r, m.cols) = ((b[r] % p) + p) % p;
  }
  std::vector<int> pivots = fp_rref(aug, p);
  for (int pc : pivots)
    if (pc == m.cols) return std::nullopt;  // inconsistent row
  std::vector<int> x(m.cols, 0);
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(static_cast<int>(i), m.cols);
  return x;
}

std::vector<std::vector<int>> fp_nullspace(const FpMat& m, int p) {
  FpMat r = m;
  for (auto& v : r.a) v = ((v % p) + p) % p;
  std::vector<int> pivots = fp_rref(r, p);
  std::vector<bool> is_pivot(m.cols, false);
  for (int pc : pivots) is_pivot[pc] = true;
  std::vector<std::vector<int>> basis;
  for (int c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::vector<int> v(m.cols, 0);
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = (p - r.at(static_cast<int>(i), c)) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

// --------------------------------------------------------------------------
// Category core

int FinCategory::indec_index(const std::string& name) const {
  for (int i = 0; i < n(); ++i)
    if (indec_names[i] == name) return i;
  throw ValidationError("unknown indecomposable '" + name + "'");
}

std::vector<int> FinCategory::compose_basis(int a, int b, int c, int ri, int li) const {
  std::vector<int> out(hom_dims[a][c], 0);
  if (a == b && ri == 0) {  // precompose with identity
    if (li < static_cast<int>(out.size())) out[li] = 1;
    return out;
  }
  if (b == c && li == 0) {  // postcompose with identity
    if (ri < static_cast<int>(out.size())) out[ri] = 1;
    return out;
  }
  auto it = comp_table.find(CompKey{a, b, c, ri, li});
  if (it != comp_table.end()) {
    out = it->second;
    out.resize(hom_dims[a][c], 0);
  }
  return out;
}

std::vector<int> Obj::sorted_parts() const {
  std::vector<int> s = parts;
  std::sort(s.begin(), s.end());
  return s;
}

Obj direct_sum(const Obj& a, const Obj& b) {
  Obj out = a;
  out.parts.insert(out.parts.end(), b.parts.begin(), b.parts.end());
  return out;
}

std::string obj_to_string(const FinCategory& cat, const Obj& o) {
  if (o.is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < o.parts.size(); ++i) {
    if (i) s += "+";
    s += cat.indec_names[o.parts[i]];
  }
  return s;
}

int hom_dim(const FinCategory& cat, const Obj& a, const Obj& b) {
  int d = 0;
  for (int t : b.parts)
    for (int s : a.parts) d += cat.dim(s, t);
  return d;
}

int block_offset(const FinCategory& cat, const Mor& m, int ti, int sj) {
  int off = 0;
  for (int i = 0; i < ti; ++i)
    for (int s : m.src.parts) off += cat.dim(s, m.dst.parts[i]);
  for (int j = 0; j < sj; ++j) off += cat.dim(m.src.parts[j], m.dst.parts[ti]);
  return off;
}

Mor zero_mor(const FinCategory& cat, const Obj& a, const Obj& b) {
  return Mor{a, b, std::vector<int>(static_cast<size_t>(hom_dim(cat, a, b)), 0)};
}

Mor identity_mor(const FinCategory& cat, const Obj& a) {
  Mor m = zero_mor(cat, a, a);
  for (int i = 0; i < a.size(); ++i) m.coeffs[block_offset(cat, m, i, i)] = 1;  // identity basis index 0
  return m;
}

bool is_zero_mor(const Mor& m) {
  return std::all_of(m.coeffs.begin(), m.coeffs.end(), [](int v) { return v == 0; });
}

Mor add(const FinCategory& cat, const Mor& f, const Mor& g) {
  if (f.src != g.src || f.dst != g.dst) throw ValidationError("morphism addition shape mismatch");
  Mor out = f;
  for (size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] = (out.coeffs[i] + g.coeffs[i]) % cat.prime;
  return out;
}

Mor negate(const FinCategory& cat, const Mor& f) {
  Mor out = f;
  for (auto& c : out.coeffs) c = (cat.prime - c) % cat.prime;
  return out;
}

Mor compose(const FinCategory& cat, const Mor& g, const Mor& f) {
  if (f.dst != g.src) throw ValidationError("composition shape mismatch");
  Mor out = zero_mor(cat, f.src, g.dst);
  const int p = cat.prime;
  for (int ti = 0; ti < g.dst.size(); ++ti) {
    int c_ind = g.dst.parts[ti];
    for (int mj = 0; mj < g.src.size(); ++mj) {
      int b_ind = g.src.parts[mj];
      int goff = block_offset(cat, g, ti, mj);
      int gdim = cat.dim(b_ind, c_ind);
      if (gdim == 0) continue;
      for (int sj = 0; sj < f.src.size(); ++sj) {
        int a_ind = f.src.parts[sj];
        int foff = block_offset(cat, f, mj, sj);
        int fdim = cat.dim(a_ind, b_ind);
        if (fdim == 0) continue;
        int odim = cat.dim(a_ind, c_ind);
        if (odim == 0) continue;
        int ooff = block_offset(cat, out, ti, sj);
        for (int l = 0; l < gdim; ++l) {
          int gl = g.coeffs[goff + l];
          if (gl == 0) continue;
          for (int k = 0; k < fdim; ++k) {
            int fk = f.coeffs[foff + k];
            if (fk == 0) continue;
            std::vector<int> basis = cat.compose_basis(a_ind, b_ind, c_ind, k, l);
            int scale = gl * fk % p;
            for (int r = 0; r < odim; ++r)
              out.coeffs[ooff + r] = (out.coeffs[ooff + r] + scale * basis[r]) % p;
          }
        }
      }
    }
  }
  return out;
}

Mor direct_sum(const FinCategory& cat, const Mor& f, const Mor& g) {
  Obj src = direct_sum(f.src, g.src);
  Obj dst = direct_sum(f.dst, g.dst);
  Mor out = zero_mor(cat, src, dst);
  auto copy_block = [&](const Mor& m, int ti_base, int sj_base) {
    for (int ti = 0; ti < m.dst.size(); ++ti)
      for (int sj = 0; sj < m.src.size(); ++sj) {
        int d = cat.dim(m.src.parts[sj], m.dst.parts[ti]);
        if (d == 0) continue;
        int from = block_offset(cat, m, ti, sj);
        int to = block_offset(cat, out, ti_base + ti, sj_base + sj);
        for (int k = 0; k < d; ++k) out.coeffs[to + k] = m.coeffs[from + k];
      }
  };
  copy_block(f, 0, 0);
  copy_block(g, f.dst.size(), f.src.size());
  return out;
}

Mor basis_mor(const FinCategory& cat, int src_indec, int dst_indec, int k) {
  Mor m = zero_mor(cat, Obj{{src_indec}}, Obj{{dst_indec}});
  m.coeffs[k] = 1;
  return m;
}

Mor permutation_iso(const FinCategory& cat, const Obj& from, const Obj& to) {
  if (!from.multiset_equal(to)) throw ValidationError("permutation_iso between different multisets");
  Mor m = zero_mor(cat, from, to);
  std::vector<bool> used(to.parts.size(), false);
  for (int j = 0; j < from.size(); ++j)
    for (int i = 0; i < to.size(); ++i) {
      if (used[i] || to.parts[i] != from.parts[j]) continue;
      used[i] = true;
      m.coeffs[block_offset(cat, m, i, j)] = 1;
      break;
    }
  return m;
}

Mor inclusion(const FinCategory& cat, const Obj& summand, const Obj& whole, const std::vector<int>& positions) {
  Mor m = zero_mor(cat, summand, whole);
  for (int j = 0; j < summand.size(); ++j) {
    if (whole.parts[positions[j]] != summand.parts[j]) throw ValidationError("inclusion position mismatch");
    m.coeffs[block_offset(cat, m, positions[j], j)] = 1;
  }
  return m;
}

Mor projection(const FinCategory& cat, const Obj& whole, const Obj& summand, const std::vector<int>& positions) {
  Mor m = zero_mor(cat, whole, summand);
  for (int i = 0; i < summand.size(); ++i) {
    if (whole.parts[positions[i]] != summand.parts[i]) throw ValidationError("projection position mismatch");
    m.coeffs[block_offset(cat, m, i, positions[i])] = 1;
  }
  return m;
}

// In a Krull-Schmidt presentation a morphism is invertible iff its
// image modulo the radical is: per indecomposable type, the matrix of
// identity-basis coefficients must be invertible over F_p.
bool is_isomorphism(const FinCategory& cat, const Mor& f) {
  if (!f.src.multiset_equal(f.dst)) return false;
  std::set<int> types(f.src.parts.begin(), f.src.parts.end());
  for (int t : types) {
    std::vector<int> srcs, dsts;
    for (int j = 0; j < f.src.size(); ++j)
      if (f.src.parts[j] == t) srcs.push_back(j);
    for (int i = 0; i < f.dst.size(); ++i)
      if (f.dst.parts[i] == t) dsts.push_back(i);
    FpMat m(static_cast<int>(dsts.size()), static_cast<int>(srcs.size()));
    for (size_t i = 0; i < dsts.size(); ++i)
      for (size_t j = 0; j < srcs.size(); ++j)
        m.at(static_cast<int>(i), static_cast<int>(j)) =
            f.coeffs[block_offset(cat, f, dsts[i], srcs[j])];  // identity component
    if (fp_rank(m, cat.prime) != m.rows) return false;
  }
  return true;
}

Mor mor_inverse(const FinCategory& cat, const Mor& f) {
  auto r = solve_right_factor(cat, f, identity_mor(cat, f.src));
  if (!r || compose(cat, f, *r) != identity_mor(cat, f.dst))
    throw ValidationError("mor_inverse of a non-invertible morphism");
  return *r;
}

namespace {

// Matrix of t |-> t ∘ g as a map Hom(C, E) -> Hom(B, E), for g: B -> C.
FpMat precompose_matrix(const FinCategory& cat, const Mor& g, const Obj& e) {
  int cols = hom_dim(cat, g.dst, e);
  int rows = hom_dim(cat, g.src, e);
  FpMat m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    Mor t = zero_mor(cat, g.dst, e);
    t.coeffs[c] = 1;
    Mor tg = compose(cat, t, g);
    for (int r = 0; r < rows; ++r) m.at(r, c) = tg.coeffs[r];
  }
  return m;
}

// Matrix of u |-> f ∘ u as a map Hom(E, A) -> Hom(E, B), for f: A -> B.
FpMat postcompose_matrix(const FinCategory& cat, const Mor& f, const Obj& e) {
  int cols = hom_dim(cat, e, f.src);
  int rows = hom_dim(cat, e, f.dst);
  FpMat m(rows, cols);
  for (int c = 0; c < cols; ++c) {
    Mor u = zero_mor(cat, e, f.src);
    u.coeffs[c] = 1;
    Mor fu = compose(cat, f, u);
    for (int r = 0; r < rows; ++r) m.at(r, c) = fu.coeffs[r];
  }
  return m;
}

}  // namespace

std::optional<Mor> solve_right_factor(const FinCategory& cat, const Mor& g, const Mor& h) {
  if (g.src != h.src) throw ValidationError("solve_right_factor: sources differ");
  FpMat m = precompose_matrix(cat, g, h.dst);
  auto x = fp_solve(m, h.coeffs, cat.prime);
  if (!x) return std::nullopt;
  return Mor{g.dst, h.dst, *x};
}

std::optional<Mor> solve_left_factor(const FinCategory& cat, const Mor& f, const Mor& h) {
  if (f.dst != h.dst) throw ValidationError("solve_left_factor: targets differ");
  FpMat m = postcompose_matrix(cat, f, h.src);
  auto x = fp_solve(m, h.coeffs, cat.prime);
  if (!x) return std::nullopt;
  return Mor{h.src, f.src, *x};
}

bool is_section(const FinCategory& cat, const Mor& f) {
  return solve_right_factor(cat, f, identity_mor(cat, f.src)).has_value();
}

bool is_retraction(const FinCategory& cat, const Mor& f) {
  return solve_left_factor(cat, f, identity_mor(cat, f.dst)).has_value();
}

bool is_weak_cokernel(const FinCategory& cat, const Mor& f, const Mor& g) {
  if (f.dst != g.src) throw ValidationError("is_weak_cokernel: not composable");
  if (!is_zero_mor(compose(cat, g, f))) return false;
  // Per indecomposable E: image of (- ∘ g) must fill the kernel of (- ∘ f).
  for (int e = 0; e < cat.n(); ++e) {
    Obj eo{{e}};
    FpMat via_g = precompose_matrix(cat, g, eo);
    FpMat via_f = precompose_matrix(cat, f, eo);
    int need = hom_dim(cat, f.dst, eo) - fp_rank(via_f, cat.prime);
    if (fp_rank(via_g, cat.prime) != need) return false;
  }
  return true;
}

bool is_weak_kernel(const FinCategory& cat, const Mor& f, const Mor& g) {
  if (f.dst != g.src) throw ValidationError("is_weak_kernel: not composable");
  if (!is_zero_mor(compose(cat, g, f))) return false;
  for (int e = 0; e < cat.n(); ++e) {
    Obj eo{{e}};
    FpMat via_f = postcompose_matrix(cat, f, eo);
    FpMat via_g = postcompose_matrix(cat, g, eo);
    int need = hom_dim(cat, eo, g.src) - fp_rank(via_g, cat.prime);
    if (fp_rank(via_f, cat.prime) != need) return false;
  }
  return true;
}

bool is_cokernel(const FinCategory& cat, const Mor& f, const Mor& g) {
  if (!is_weak_cokernel(cat, f, g)) return false;
  // Uniqueness of the factoring map: (- ∘ g) must be injective.
  for (int e = 0; e < cat.n(); ++e) {
    Obj eo{{e}};
    FpMat via_g = precompose_matrix(cat, g, eo);
    if (fp_rank(via_g, cat.prime) != hom_dim(cat, g.dst, eo)) return false;
  }
  return true;
}

bool factors_through(const FinCategory& cat, const Mor& h, const std::vector<int>& sub_indecs) {
  if (is_zero_mor(h)) return true;
  // Universal map u: src -> ⊕_i N_i^{dim Hom(src, N_i)} from all basis morphisms.
  std::vector<int> parts;
  for (int ni : sub_indecs) {
    int d = hom_dim(cat, h.src, Obj{{ni}});
    for (int k = 0; k < d; ++k) parts.push_back(ni);
  }
  Obj m0{parts};
  Mor u = zero_mor(cat, h.src, m0);
  int row = 0;
  for (int ni : sub_indecs) {
    Obj nio{{ni}};
    int d = hom_dim(cat, h.src, nio);
    for (int k = 0; k < d; ++k) {
      // k-th basis element of Hom(src, N_i), spread over source parts
      int seen = 0;
      for (int sj = 0; sj < h.src.size(); ++sj) {
        int bd = cat.dim(h.src.parts[sj], ni);
        if (k >= seen && k < seen + bd) {
          u.coeffs[block_offset(cat, u, row, sj) + (k - seen)] = 1;
        }
        seen += bd;
      }
      ++row;
    }
  }
  return solve_right_factor(cat, u, h).has_value();
}

long hom_space_size(const FinCategory& cat, const Obj& a, const Obj& b) {
  int d = hom_dim(cat, a, b);
  double bits = d * std::log2(static_cast<double>(cat.prime));
  if (bits > 62) return -1;
  long out = 1;
  for (int i = 0; i < d; ++i) out *= cat.prime;
  return out;
}

std::vector<Mor> enumerate_homs(const FinCategory& cat, const Obj& a, const Obj& b) {
  long size = hom_space_size(cat, a, b);
  if (size < 0 || size > cat.enumeration_cap)
    throw EnumerationCapExceeded("enumeration infeasible for Hom(" + obj_to_string(cat, a) + ", " +
                                 obj_to_string(cat, b) + ")");
  int d = hom_dim(cat, a, b);
  std::vector<Mor> out;
  out.reserve(static_cast<size_t>(size));
  Mor m = zero_mor(cat, a, b);
  while (true) {
    out.push_back(m);
    int i = 0;
    while (i < d) {
      if (++m.coeffs[i] < cat.prime) break;
      m.coeffs[i] = 0;
      ++i;
    }
    if (i == d) break;
  }
  return out;
}

std::vector<Obj> universe(const FinCategory& cat, int bound) {
  std::vector<Obj> out;
  std::vector<int> cur;
  // multisets as weakly increasing part lists
  auto rec = [&](auto&& self, int min_part, int remaining) -> void {
    out.push_back(Obj{cur});
    if (remaining == 0) return;
    for (int i = min_part; i < cat.n(); ++i) {
      cur.push_back(i);
      self(self, i, remaining - 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, bound);
  return out;
}

std::optional<Obj> shift_obj(const FinCategory& cat, const Obj& o, int steps) {
  if (!cat.shift) return std::nullopt;
  Obj cur = o;
  int dir = steps >= 0 ? 1 : -1;
  for (int s = 0; s < std::abs(steps); ++s) {
    Obj next;
    for (int part : cur.parts) {
      int img = dir > 0 ? cat.shift->map[part] : cat.shift->inverse[part];
      if (img < 0) return std::nullopt;
      next.parts.push_back(img);
    }
    cur = next;
  }
  return cur;
}

std::optional<Mor> shift_mor(const FinCategory& cat, const Mor& m, int steps) {
  auto src = shift_obj(cat, m.src, steps);
  auto dst = shift_obj(cat, m.dst, steps);
  if (!src || !dst) return std::nullopt;
  // Identity transport on coefficients; dimensions must agree.
  Mor out{*src, *dst, m.coeffs};
  if (hom_dim(cat, *src, *dst) != static_cast<int>(m.coeffs.size()))
    throw ValidationError("shift transport dimension mismatch");
  return out;
}

SequenceTriple direct_sum(const FinCategory& cat, const SequenceTriple& s, const SequenceTriple& t) {
  SequenceTriple out;
  out.A = direct_sum(s.A, t.A);
  out.B = direct_sum(s.B, t.B);
  out.C = direct_sum(s.C, t.C);
  out.f = direct_sum(cat, s.f, t.f);
  out.g = direct_sum(cat, s.g, t.g);
  if (s.connecting && t.connecting) out.connecting = direct_sum(cat, *s.connecting, *t.connecting);
  return out;
}

std::string mor_to_string(const FinCategory& cat, const Mor& m) {
  std::ostringstream os;
  os << obj_to_string(cat, m.src) << "->" << obj_to_string(cat, m.dst) << "[";
  for (size_t i = 0; i < m.coeffs.size(); ++i) os << (i ? "," : "") << m.coeffs[i];
  os << "]";
  return os.str();
}

std::string seq_to_string(const FinCategory& cat, const SequenceTriple& s) {
  return obj_to_string(cat, s.A) + " >-> " + obj_to_string(cat, s.B) + " ->> " + obj_to_string(cat, s.C);
}

namespace {

// Scan an affine solution space (particular + span of basis) for a
// vector on which `accept` returns true. Exhaustive with a cap.
template <typename Fn>
bool scan_solutions(const std::vector<int>& particular, const std::vector<std::vector<int>>& basis, int p,
                    long cap, Fn&& accept) {
  double bits = basis.size() * std::log2(static_cast<double>(p));
  if (bits > 62 || static_cast<long>(std::pow(static_cast<double>(p), static_cast<double>(basis.size()))) > cap)
    throw EnumerationCapExceeded("solution-space scan exceeds enumeration cap");
  std::vector<int> mult(basis.size(), 0);
  std::vector<int> cur = particular;
  while (true) {
    if (accept(cur)) return true;
    size_t i = 0;
    while (i < basis.size()) {
      ++mult[i];
      for (size_t k = 0; k < cur.size(); ++k) cur[k] = (cur[k] + basis[i][k]) % p;
      if (mult[i] < p) break;
      mult[i] = 0;
      ++i;
    }
    if (i == basis.size()) break;
    if (basis.empty()) break;
  }
  return false;
}

}  // namespace

std::vector<int> mor_profile(const FinCategory& cat, const Mor& m) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(cat.n()) * 2);
  for (int e = 0; e < cat.n(); ++e) {
    Obj eo{{e}};
    FpMat pre = precompose_matrix(cat, m, eo);
    out.push_back(pre.cols - fp_rank(pre, cat.prime));
    FpMat post = postcompose_matrix(cat, m, eo);
    out.push_back(post.cols - fp_rank(post, cat.prime));
  }
  return out;
}

std::optional<std::pair<Mor, Mor>> solve_mor_iso(const FinCategory& cat, const Mor& u, const Mor& v) {
  if (!u.src.multiset_equal(v.src) || !u.dst.multiset_equal(v.dst)) return std::nullopt;
  if (is_zero_mor(u) != is_zero_mor(v)) return std::nullopt;
  if (u == v) return std::make_pair(identity_mor(cat, u.src), identity_mor(cat, u.dst));
  if (is_zero_mor(u))
    return std::make_pair(permutation_iso(cat, u.src, v.src), permutation_iso(cat, u.dst, v.dst));
  // Unknowns (a, b): v∘a - b∘u = 0 with a: u.src -> v.src, b: u.dst -> v.dst.
  int da = hom_dim(cat, u.src, v.src);
  int db = hom_dim(cat, u.dst, v.dst);
  FpMat va = postcompose_matrix(cat, v, u.src);   // Hom(u.src,v.src) -> Hom(u.src,v.dst)
  FpMat bu = precompose_matrix(cat, u, v.dst);    // Hom(u.dst,v.dst) -> Hom(u.src,v.dst)
  int rows = hom_dim(cat, u.src, v.dst);
  FpMat sys(rows, da + db);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < da; ++c) sys.at(r, c) = va.at(r, c);
    for (int c = 0; c < db; ++c) sys.at(r, da + c) = (cat.prime - bu.at(r, c)) % cat.prime;
  }
  auto basis = fp_nullspace(sys, cat.prime);
  std::optional<std::pair<Mor, Mor>> found;
  std::vector<int> zero(da + db, 0);
  scan_solutions(zero, basis, cat.prime, cat.enumeration_cap, [&](const std::vector<int>& x) {
    Mor a{u.src, v.src, std::vector<int>(x.begin(), x.begin() + da)};
    if (!is_isomorphism(cat, a)) return false;
    Mor b{u.dst, v.dst, std::vector<int>(x.begin() + da, x.end())};
    if (!is_isomorphism(cat, b)) return false;
    found = std::make_pair(a, b);
    return true;
  });
  return found;
}

bool mor_isomorphic(const FinCategory& cat, const Mor& u, const Mor& v) {
  return solve_mor_iso(cat, u, v).has_value();
}

std::optional<TripleIso> solve_triple_iso(const FinCategory& cat, const SequenceTriple& from,
                                          const SequenceTriple& to) {
  if (!from.A.multiset_equal(to.A) || !from.B.multiset_equal(to.B) || !from.C.multiset_equal(to.C))
    return std::nullopt;
  const int p = cat.prime;
  int da = hom_dim(cat, from.A, to.A);
  int db = hom_dim(cat, from.B, to.B);
  int dc = hom_dim(cat, from.C, to.C);
  // Square 1: to.f ∘ alpha - beta ∘ from.f = 0 in Hom(from.A, to.B)
  // Square 2: to.g ∘ beta - gamma ∘ from.g = 0 in Hom(from.B, to.C)
  FpMat fa = postcompose_matrix(cat, to.f, from.A);
  FpMat bf = precompose_matrix(cat, from.f, to.B);
  FpMat gb = postcompose_matrix(cat, to.g, from.B);
  FpMat cg = precompose_matrix(cat, from.g, to.C);
  int r1 = hom_dim(cat, from.A, to.B);
  int r2 = hom_dim(cat, from.B, to.C);
  FpMat sys(r1 + r2, da + db + dc);
  for (int r = 0; r < r1; ++r) {
    for (int c = 0; c < da; ++c) sys.at(r, c) = fa.at(r, c);
    for (int c = 0; c < db; ++c) sys.at(r, da + c) = (p - bf.at(r, c)) % p;
  }
  for (int r = 0; r < r2; ++r) {
    for (int c = 0; c < db; ++c) sys.at(r1 + r, da + c) = gb.at(r, c);
    for (int c = 0; c < dc; ++c) sys.at(r1 + r, da + db + c) = (p - cg.at(r, c)) % p;
  }
  auto basis = fp_nullspace(sys, p);
  std::optional<TripleIso> found;
  std::vector<int> zero(da + db + dc, 0);
  scan_solutions(zero, basis, p, cat.enumeration_cap, [&](const std::vector<int>& x) {
    Mor alpha{from.A, to.A, std::vector<int>(x.begin(), x.begin() + da)};
    if (!is_isomorphism(cat, alpha)) return false;
    Mor beta{from.B, to.B, std::vector<int>(x.begin() + da, x.begin() + da + db)};
    if (!is_isomorphism(cat, beta)) return false;
    Mor gamma{from.C, to.C, std::vector<int>(x.begin() + da + db, x.end())};
    if (!is_isomorphism(cat, gamma)) return false;
    found = TripleIso{alpha, beta, gamma};
    return true;
  });
  return found;
}

// --------------------------------------------------------------------------
// Load-time validation

void FinCategory::validate() const {
  const int nn = n();
  if (static_cast<int>(hom_dims.size()) != nn) throw ValidationError("hom_dims row count mismatch");
  for (const auto& row : hom_dims)
    if (static_cast<int>(row.size()) != nn) throw ValidationError("hom_dims column count mismatch");
  for (int i = 0; i < nn; ++i)
    if (hom_dims[i][i] < 1) throw ValidationError("endomorphism space of '" + indec_names[i] + "' lacks identity");

  for (const auto& [key, value] : comp_table) {
    if (key.a < 0 || key.a >= nn || key.b < 0 || key.b >= nn || key.c < 0 || key.c >= nn)
      throw ValidationError("composition table references unknown indecomposable");
    if (key.ri < 0 || key.ri >= hom_dims[key.a][key.b] || key.li < 0 || key.li >= hom_dims[key.b][key.c])
      throw ValidationError("composition table references unknown basis morphism");
    if (static_cast<int>(value.size()) != hom_dims[key.a][key.c])
      throw ValidationError("composition table result has wrong length");
    // Entries involving identities must match the implicit unit law.
    if ((key.a == key.b && key.ri == 0) || (key.b == key.c && key.li == 0)) {
      std::vector<int> expect(hom_dims[key.a][key.c], 0);
      if (key.a == key.b && key.ri == 0)
        expect[key.li] = 1;
      else
        expect[key.ri] = 1;
      std::vector<int> got = value;
      for (auto& v : got) v = ((v % prime) + prime) % prime;
      if (got != expect) throw ValidationError("composition table contradicts the unit law");
    }
  }

  // Associativity on all basis triples.
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b < nn; ++b) {
      if (hom_dims[a][b] == 0) continue;
      for (int c = 0; c < nn; ++c) {
        if (hom_dims[b][c] == 0) continue;
        for (int d = 0; d < nn; ++d) {
          if (hom_dims[c][d] == 0 || hom_dims[a][d] == 0) continue;
          for (int ri = 0; ri < hom_dims[a][b]; ++ri)
            for (int mi = 0; mi < hom_dims[b][c]; ++mi)
              for (int li = 0; li < hom_dims[c][d]; ++li) {
                std::vector<int> left(hom_dims[a][d], 0), right(hom_dims[a][d], 0);
                std::vector<int> mr = compose_basis(a, b, c, ri, mi);
                for (int k = 0; k < hom_dims[a][c]; ++k) {
                  if (mr[k] == 0) continue;
                  std::vector<int> t = compose_basis(a, c, d, k, li);
                  for (int r = 0; r < hom_dims[a][d]; ++r) left[r] = (left[r] + mr[k] * t[r]) % prime;
                }
                std::vector<int> lm = compose_basis(b, c, d, mi, li);
                for (int k = 0; k < hom_dims[b][d]; ++k) {
                  if (lm[k] == 0) continue;
                  std::vector<int> t = compose_basis(a, b, d, ri, k);
                  for (int r = 0; r < hom_dims[a][d]; ++r) right[r] = (right[r] + lm[k] * t[r]) % prime;
                }
                if (left != right)
                  throw ValidationError("composition not associative at (" + indec_names[a] + "->" +
                                        indec_names[b] + "->" + indec_names[c] + "->" + indec_names[d] + ")");
              }
        }
      }
    }

  // Local endomorphism algebras: non-identity basis span a two-sided
  // nilpotent ideal, each basis endomorphism nilpotent in <= dim steps.
  for (int i = 0; i < nn; ++i) {
    int d = hom_dims[i][i];
    for (int j = 1; j < d; ++j)
      for (int k = 1; k < d; ++k) {
        std::vector<int> prod = compose_basis(i, i, i, j, k);
        if (prod[0] % prime != 0)
          throw ValidationError("endomorphism algebra of '" + indec_names[i] + "' is not local");
      }
    for (int j = 1; j < d; ++j) {
      std::vector<int> cur(d, 0);
      cur[j] = 1;
      bool vanished = false;
      for (int step = 0; step <= d; ++step) {
        std::vector<int> next(d, 0);
        for (int k = 0; k < d; ++k) {
          if (cur[k] == 0) continue;
          std::vector<int> prod = compose_basis(i, i, i, k, j);  // cur_k then e_j... iterate e_j on the left
          for (int r = 0; r < d; ++r) next[r] = (next[r] + cur[k] * prod[r]) % prime;
        }
        cur = next;
        if (std::all_of(cur.begin(), cur.end(), [](int v) { return v == 0; })) {
          vanished = true;
          break;
        }
      }
      if (!vanished)
        throw ValidationError("basis endomorphism " + std::to_string(j) + " of '" + indec_names[i] +
                              "' is not nilpotent");
    }
  }

  // Distinct indecomposables must be non-isomorphic.
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j) {
      if (hom_dims[i][j] == 0 || hom_dims[j][i] == 0) continue;
      Obj oi{{i}}, oj{{j}};
      for (const Mor& f : enumerate_homs(*this, oi, oj))
        for (const Mor& g : enumerate_homs(*this, oj, oi)) {
          if (compose(*this, g, f) == identity_mor(*this, oi) &&
              compose(*this, f, g) == identity_mor(*this, oj))
            throw ValidationError("indecomposables '" + indec_names[i] + "' and '" + indec_names[j] +
                                  "' are isomorphic");
        }
    }

  if (shift) {
    if (static_cast<int>(shift->map.size()) != nn || static_cast<int>(shift->inverse.size()) != nn)
      throw ValidationError("shift map size mismatch");
    for (int i = 0; i < nn; ++i) {
      int img = shift->map[i];
      if (img >= 0) {
        if (shift->inverse[img] != i) throw ValidationError("shift map is not injective");
        for (int j = 0; j < nn; ++j) {
          int jmg = shift->map[j];
          if (jmg >= 0 && hom_dims[i][j] != hom_dims[img][jmg])
            throw ValidationError("shift transport dimension mismatch between '" + indec_names[i] +
                                  "' and '" + indec_names[j] + "'");
        }
      }
    }
  }
}

}  // namespace k0wb::fincat
