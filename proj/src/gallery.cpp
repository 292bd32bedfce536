#include "k0wb/gallery.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace k0wb {

using fincat::FinCategory;
using fincat::Mor;
using fincat::Obj;
using fincat::SequenceTriple;
using fincat::Shift;

const StructureData& Bundle::structure(const std::string& key) const {
  auto it = structures.find(key);
  if (it == structures.end()) throw fincat::ValidationError("bundle has no structure named '" + key + "'");
  return it->second;
}

const std::vector<int>& Bundle::subcategory(const std::string& key) const {
  auto it = subcategories.find(key);
  if (it == subcategories.end()) throw fincat::ValidationError("bundle has no subcategory named '" + key + "'");
  return it->second;
}

void Bundle::validate() const {
  cat.validate();
  auto check_seq = [&](const SequenceTriple& s, const char* what) {
    if (s.f.src != s.A || s.f.dst != s.B || s.g.src != s.B || s.g.dst != s.C)
      throw fincat::ValidationError(std::string(what) + ": sequence endpoints do not match its morphisms");
    if (!fincat::is_weak_cokernel(cat, s.f, s.g))
      throw fincat::ValidationError(std::string(what) + ": stored sequence " + seq_to_string(cat, s) +
                                    " fails the weak-cokernel gate");
    if (flags.bi_directional && !fincat::is_weak_kernel(cat, s.f, s.g))
      throw fincat::ValidationError(std::string(what) + ": stored sequence " + seq_to_string(cat, s) +
                                    " fails the weak-kernel gate in a bi-directional bundle");
    if (s.connecting) {
      auto shifted = fincat::shift_obj(cat, s.A, 1);
      if (!shifted || s.connecting->src != s.C || !s.connecting->dst.multiset_equal(*shifted))
        throw fincat::ValidationError(std::string(what) + ": connecting morphism has wrong endpoints");
    }
  };
  for (const auto& [name, st] : structures) {
    for (const auto& s : st.seq_generators) check_seq(s, name.c_str());
    for (const auto& s : st.seq_probes) check_seq(s, name.c_str());
    for (const auto& w : st.weq.generators)
      if (static_cast<int>(w.coeffs.size()) != fincat::hom_dim(cat, w.src, w.dst))
        throw fincat::ValidationError(name + ": weak-equivalence generator has malformed coefficients");
  }
  for (const auto& [name, subcat] : subcategories)
    for (int i : subcat)
      if (i < 0 || i >= cat.n())
        throw fincat::ValidationError("subcategory '" + name + "' references unknown indecomposable");
}

namespace gallery {

namespace {

Mor arrow(const FinCategory& cat, int src, int dst) { return fincat::basis_mor(cat, src, dst, 0); }

SequenceTriple make_seq(const FinCategory& cat, const Obj& a, const Mor& f, const Obj& b, const Mor& g,
                        const Obj& c) {
  return SequenceTriple{a, f, b, g, c, std::nullopt};
}

}  // namespace

Bundle build_mod_a2() {
  Bundle b;
  b.name = "mod_a2";
  FinCategory& cat = b.cat;
  cat.prime = 2;
  cat.indec_names = {"S2", "P1", "S1"};
  const int S2 = 0, P1 = 1, S1 = 2;
  cat.hom_dims.assign(3, std::vector<int>(3, 0));
  for (int i = 0; i < 3; ++i) cat.hom_dims[i][i] = 1;
  cat.hom_dims[S2][P1] = 1;  // a
  cat.hom_dims[P1][S1] = 1;  // b
  // b∘a lands in Hom(S2, S1) = 0, so the composition table is empty.

  Mor a = arrow(cat, S2, P1);
  Mor bb = arrow(cat, P1, S1);
  SequenceTriple gen = make_seq(cat, Obj{{S2}}, a, Obj{{P1}}, bb, Obj{{S1}});

  StructureData canonical;
  canonical.seq_generators = {gen};
  canonical.weq.kind = WeqSpec::Kind::IsoOnly;
  b.structures["canonical"] = canonical;

  b.subcategories["addS2"] = {S2};
  b.subcategories["addP1S1"] = {P1, S1};
  b.subcategories["zero"] = {};
  b.flags.bi_directional = true;
  b.provenance =
      "mod kA2 for the quiver 1->2; Hom data and structure constants from "
      "two-vertex quiver representation computations";
  return b;
}

Bundle build_paper_example_d() {
  Bundle b;
  b.name = "paper_example_d";
  FinCategory& cat = b.cat;
  cat.prime = 2;
  cat.indec_names = {"2", "3", "2/3", "1/2"};
  const int M2 = 0, M3 = 1, M23 = 2, M12 = 3;
  cat.hom_dims.assign(4, std::vector<int>(4, 0));
  for (int i = 0; i < 4; ++i) cat.hom_dims[i][i] = 1;
  cat.hom_dims[M3][M23] = 1;   // a
  cat.hom_dims[M23][M2] = 1;   // bb
  cat.hom_dims[M23][M12] = 1;  // c
  cat.hom_dims[M2][M12] = 1;   // d
  // d∘b = c; b∘a and c∘a land in zero Hom spaces.
  cat.comp_table[{M23, M2, M12, 0, 0}] = {1};

  Mor a = arrow(cat, M3, M23);
  Mor bb = arrow(cat, M23, M2);
  SequenceTriple gen = make_seq(cat, Obj{{M3}}, a, Obj{{M23}}, bb, Obj{{M2}});

  StructureData canonical;
  canonical.seq_generators = {gen};
  canonical.weq.kind = WeqSpec::Kind::IsoOnly;
  b.structures["canonical"] = canonical;

  b.subcategories["zero"] = {};
  b.provenance =
      "add{2, 3, 2/3, 1/2} inside the bounded derived category of kA3 "
      "(quiver 1->2->3); Hom data from three-vertex quiver representation "
      "computations, Seq_D generated by 3 -> 2/3 -> 2";
  return b;
}

// ---------------------------------------------------------------------------
// Derived window of kA2

namespace {

// Window indecomposables are the AR-quiver chain
//   ... P2[i] --a_i--> P1[i] --b_i--> S1[i] --c_i--> P2[i+1] ...
// with consecutive composites zero and no other nonzero Homs.
struct WindowLayout {
  int radius;
  int index(int type, int level) const {  // type: 0 = P2, 1 = P1, 2 = S1
    return 3 * (level + radius) + type;
  }
  int type_of(int idx) const { return idx % 3; }
  int level_of(int idx) const { return idx / 3 - radius; }
  bool in_window(int level) const { return level >= -radius && level <= radius; }
  // Position on the chain: consecutive positions carry the basis arrow.
  long chain_pos(int type, int level) const { return 3L * level + type; }
};

std::string window_name(int type, int level) {
  static const char* base[3] = {"P2", "P1", "S1"};
  return std::string(base[type]) + "[" + std::to_string(level) + "]";
}

}  // namespace

Bundle build_derived_window_a2(int radius) {
  if (radius < 2) throw fincat::ValidationError("derived window needs radius >= 2");
  Bundle b;
  b.name = "derived_window_a2";
  WindowLayout lay{radius};
  FinCategory& cat = b.cat;
  cat.prime = 2;
  const int n = 3 * (2 * radius + 1);
  cat.indec_names.resize(n);
  for (int level = -radius; level <= radius; ++level)
    for (int type = 0; type < 3; ++type) cat.indec_names[lay.index(type, level)] = window_name(type, level);
  cat.hom_dims.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) cat.hom_dims[i][i] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      long pi = lay.chain_pos(lay.type_of(i), lay.level_of(i));
      long pj = lay.chain_pos(lay.type_of(j), lay.level_of(j));
      if (pj == pi + 1) cat.hom_dims[i][j] = 1;  // the basis arrow
    }
  // Composites of consecutive arrows land in zero Hom spaces: empty table.

  Shift shift;
  shift.map.assign(n, -1);
  shift.inverse.assign(n, -1);
  shift.total = false;
  for (int level = -radius; level < radius; ++level)
    for (int type = 0; type < 3; ++type) {
      shift.map[lay.index(type, level)] = lay.index(type, level + 1);
      shift.inverse[lay.index(type, level + 1)] = lay.index(type, level);
    }
  cat.shift = shift;

  StructureData canonical;
  canonical.weq.kind = WeqSpec::Kind::IsoOnly;
  auto chain_arrow = [&](int from_idx) {  // arrow out of chain position of from_idx
    long pos = lay.chain_pos(lay.type_of(from_idx), lay.level_of(from_idx)) + 1;
    int type = static_cast<int>(((pos % 3) + 3) % 3);
    int level = static_cast<int>((pos - type) / 3);
    return lay.index(type, level);
  };
  // Rotation families (A -> B -> C; connecting C -> A[1]) along the chain.
  for (int level = -radius; level <= radius; ++level)
    for (int type = 0; type < 3; ++type) {
      int ia = lay.index(type, level);
      long pb = lay.chain_pos(type, level) + 1;
      long pc = pb + 1;
      int tb = static_cast<int>(((pb % 3) + 3) % 3), tc = static_cast<int>(((pc % 3) + 3) % 3);
      int lb = static_cast<int>((pb - tb) / 3), lc = static_cast<int>((pc - tc) / 3);
      if (!lay.in_window(lb) || !lay.in_window(lc)) continue;
      int ib = lay.index(tb, lb), ic = lay.index(tc, lc);
      SequenceTriple t =
          make_seq(cat, Obj{{ia}}, arrow(cat, ia, ib), Obj{{ib}}, arrow(cat, ib, ic), Obj{{ic}});
      if (lay.in_window(level + 1)) {
        int ia1 = lay.index(type, level + 1);
        t.connecting = arrow(cat, ic, ia1);  // sign folded away over F_2
      }
      canonical.seq_generators.push_back(t);
    }
  // Identity rotations X -> 0 -> X[1] (connecting the identity) and X -> X -> 0.
  for (int idx = 0; idx < n; ++idx) {
    int level = lay.level_of(idx);
    if (lay.in_window(level + 1)) {
      int idx1 = lay.index(lay.type_of(idx), level + 1);
      SequenceTriple t = make_seq(cat, Obj{{idx}}, fincat::zero_mor(cat, Obj{{idx}}, Obj{}), Obj{},
                                  fincat::zero_mor(cat, Obj{}, Obj{{idx1}}), Obj{{idx1}});
      t.connecting = fincat::identity_mor(cat, Obj{{idx1}});
      canonical.seq_generators.push_back(t);
    }
    SequenceTriple d = make_seq(cat, Obj{{idx}}, fincat::identity_mor(cat, Obj{{idx}}), Obj{{idx}},
                                fincat::zero_mor(cat, Obj{{idx}}, Obj{}), Obj{});
    if (lay.in_window(level + 1))
      d.connecting = fincat::zero_mor(cat, Obj{}, Obj{{lay.index(lay.type_of(idx), level + 1)}});
    canonical.seq_generators.push_back(d);
  }
  b.structures["canonical"] = canonical;

  std::vector<int> addp2;
  for (int level = -radius; level <= radius; ++level) addp2.push_back(lay.index(0, level));
  b.subcategories["addP2"] = addp2;
  b.subcategories["zero"] = {};
  b.flags.triangulated = true;
  b.flags.bi_directional = true;
  b.provenance =
      "window |i| <= " + std::to_string(radius) +
      " of D^b(kA2); Hom data from the AR quiver ZA2, rotation conflation "
      "families with connecting morphisms, shift = index increment; composition "
      "signs follow the rotation convention and vanish over F_2";
  return b;
}

// ---------------------------------------------------------------------------
// Cluster category of A2 via the F-orbit construction

namespace {

struct WindowCell {
  int type;   // 0 = P2, 1 = P1, 2 = S1
  int level;
  auto operator<=>(const WindowCell&) const = default;
};

// F = tau^{-1} ∘ [1] on the AR quiver of D^b(kA2).
WindowCell apply_f(const WindowCell& x, int power) {
  WindowCell cur = x;
  for (int s = 0; s < std::abs(power); ++s) {
    if (power > 0) {
      switch (cur.type) {
        case 0: cur = {2, cur.level + 1}; break;  // F(P2[i]) = S1[i+1]
        case 1: cur = {0, cur.level + 2}; break;  // F(P1[i]) = P2[i+2]
        default: cur = {1, cur.level + 2}; break; // F(S1[i]) = P1[i+2]
      }
    } else {
      switch (cur.type) {
        case 2: cur = {0, cur.level - 1}; break;
        case 0: cur = {1, cur.level - 2}; break;
        default: cur = {2, cur.level - 2}; break;
      }
    }
  }
  return cur;
}

// Basis arrows move with F along the chain: F(a_i) = c_{i+1},
// F(b_i) = a_{i+2}, F(c_i) = b_{i+2}; encoded on (source cell) only
// since each arrow is determined by its source.
WindowCell apply_f_to_arrow_source(const WindowCell& src, int power) { return apply_f(src, power); }

}  // namespace

Bundle build_cluster_a2() {
  // Representatives of the F-orbits, in the pentagon order.
  const std::vector<WindowCell> reps = {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {1, 1}};
  const std::vector<std::string> rep_names = {"P2", "P1", "S1", "P2[1]", "P1[1]"};
  const int radius = 3;

  // Oracle: the orbit partition itself. Every window cell must reach
  // exactly one representative within a few powers of F.
  auto rep_of = [&](const WindowCell& x) -> std::pair<int, int> {  // (rep index, power with F^p(x) = rep)
    for (int p = -3; p <= 3; ++p) {
      WindowCell img = apply_f(x, p);
      for (size_t r = 0; r < reps.size(); ++r)
        if (img == reps[r]) return {static_cast<int>(r), p};
    }
    throw fincat::ValidationError("orbit enumeration failed for a window cell");
  };
  {
    std::set<int> seen;
    for (int level = -1; level <= 1; ++level)
      for (int type = 0; type < 3; ++type) seen.insert(rep_of({type, level}).first);
    if (seen.size() != 5) throw fincat::ValidationError("expected exactly 5 F-orbit representatives");
  }

  Bundle window = build_derived_window_a2(radius);
  const FinCategory& wcat = window.cat;
  WindowLayout lay{radius};

  Bundle b;
  b.name = "cluster_a2";
  FinCategory& cat = b.cat;
  cat.prime = 2;
  cat.indec_names = rep_names;
  const int n = 5;
  cat.hom_dims.assign(n, std::vector<int>(n, 0));

  // Hom_C(X, Y) = sum over e in {-1,0,1} of Hom_window(X, F^e Y),
  // with the omitted summands asserted to vanish where the window can see them.
  struct Realization {
    int twist;
  };
  std::map<std::pair<int, int>, Realization> realization;
  auto wdim = [&](const WindowCell& x, const WindowCell& y) -> int {
    if (!lay.in_window(x.level) || !lay.in_window(y.level))
      throw fincat::ValidationError("cluster orbit computation left the window");
    return wcat.hom_dims[lay.index(x.type, x.level)][lay.index(y.type, y.level)];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int total = 0;
      int twist = 0;
      for (int e = -1; e <= 1; ++e) {
        int d = wdim(reps[i], apply_f(reps[j], e));
        if (d > 0) {
          total += d;
          twist = e;
        }
      }
      for (int e = -3; e <= 3; ++e) {  // truncation check where the window allows
        if (e >= -1 && e <= 1) continue;
        WindowCell img = apply_f(reps[j], e);
        if (!lay.in_window(img.level)) continue;
        if (wdim(reps[i], img) != 0)
          throw fincat::ValidationError("orbit Hom truncation assertion failed");
      }
      if (total > 1) throw fincat::ValidationError("cluster Hom spaces should be at most 1-dimensional");
      cat.hom_dims[i][j] = total;
      if (total > 0) realization[{i, j}] = Realization{twist};
    }

  // Composition table: compose realizations in the window. Each cluster
  // basis morphism is realized by a chain arrow, so composites become
  // composites of consecutive chain arrows, which vanish; verify the
  // chain geometry rather than assuming it.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k) continue;  // identities are implicit
        if (cat.hom_dims[i][j] == 0 || cat.hom_dims[j][k] == 0) continue;
        int ef = realization[{i, j}].twist;
        int eg = realization[{j, k}].twist;
        WindowCell src = reps[i];
        WindowCell mid = apply_f(reps[j], ef);
        WindowCell dst = apply_f(apply_f(reps[k], eg), ef);
        long ps = 3L * src.level + src.type;
        long pm = 3L * mid.level + mid.type;
        long pd = 3L * dst.level + dst.type;
        if (pm != ps + 1 || pd != pm + 1)
          throw fincat::ValidationError("cluster realization left the chain; composite not determined");
        // Consecutive chain arrows compose to zero: no table entry needed.
      }

  // Cluster shift: [1] followed by orbit reduction; a 5-cycle.
  Shift shift;
  shift.map.assign(n, -1);
  shift.inverse.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    WindowCell shifted{reps[i].type, reps[i].level + 1};
    shift.map[i] = rep_of(shifted).first;
  }
  for (int i = 0; i < n; ++i) shift.inverse[shift.map[i]] = i;
  cat.shift = shift;

  // Conflations: images of the window families under orbit reduction.
  auto transport_mor = [&](const WindowCell& src, const WindowCell& dst) -> Mor {
    // The unique chain arrow src -> dst, carried to cluster representatives.
    auto [ri, rp] = rep_of(src);
    auto [rj, jp] = rep_of(dst);
    if (cat.hom_dims[ri][rj] != 1)
      throw fincat::ValidationError("window arrow has no cluster realization");
    return fincat::basis_mor(cat, ri, rj, 0);
  };
  auto rep_obj = [&](const WindowCell& x) { return Obj{{rep_of(x).first}}; };

  StructureData canonical;
  canonical.weq.kind = WeqSpec::Kind::IsoOnly;
  std::set<SequenceTriple> dedup;
  for (int level = -1; level <= 1; ++level)
    for (int type = 0; type < 3; ++type) {
      // Rotation triple starting at chain position of (type, level).
      WindowCell a{type, level};
      long pb = 3L * level + type + 1, pc = pb + 1, pa1 = 3L * (level + 1) + type;
      WindowCell bcell{static_cast<int>(((pb % 3) + 3) % 3), static_cast<int>((pb - ((pb % 3) + 3) % 3) / 3)};
      WindowCell ccell{static_cast<int>(((pc % 3) + 3) % 3), static_cast<int>((pc - ((pc % 3) + 3) % 3) / 3)};
      (void)pa1;
      SequenceTriple t;
      t.A = rep_obj(a);
      t.B = rep_obj(bcell);
      t.C = rep_obj(ccell);
      t.f = transport_mor(a, bcell);
      t.g = transport_mor(bcell, ccell);
      WindowCell a1{type, level + 1};
      t.connecting = transport_mor(ccell, a1);
      if (dedup.insert(t).second) canonical.seq_generators.push_back(t);
    }
  for (int i = 0; i < n; ++i) {
    // X -> 0 -> X[1] with identity connecting, and the split X -> X -> 0.
    int x1 = shift.map[i];
    SequenceTriple t = make_seq(cat, Obj{{i}}, fincat::zero_mor(cat, Obj{{i}}, Obj{}), Obj{},
                                fincat::zero_mor(cat, Obj{}, Obj{{x1}}), Obj{{x1}});
    t.connecting = fincat::identity_mor(cat, Obj{{x1}});
    if (dedup.insert(t).second) canonical.seq_generators.push_back(t);
    SequenceTriple d = make_seq(cat, Obj{{i}}, fincat::identity_mor(cat, Obj{{i}}), Obj{{i}},
                                fincat::zero_mor(cat, Obj{{i}}, Obj{}), Obj{});
    d.connecting = fincat::zero_mor(cat, Obj{}, Obj{{x1}});
    if (dedup.insert(d).second) canonical.seq_generators.push_back(d);
  }
  b.structures["canonical"] = canonical;

  b.subcategories["X"] = {0, 1};  // add{P2, P1}
  b.subcategories["zero"] = {};
  b.flags.triangulated = true;
  b.flags.bi_directional = true;
  b.provenance =
      "cluster category C(A2) as F-orbits of the radius-3 window of D^b(kA2), "
      "F = tau^{-1}[1]; oracle: the orbit enumeration itself, cross-checked by "
      "Hom symmetry and the truncation vanishing assertions";
  return b;
}

// ---------------------------------------------------------------------------

Bundle build_rightexact_structure(const Bundle& base) {
  Bundle b = base;
  b.name = "rightexact_" + base.name;
  const FinCategory& cat = b.cat;
  if (base.name != "mod_a2")
    throw fincat::ValidationError("right-exact structure builder expects the mod_a2 bundle");
  const int S2 = 0, P1 = 1, S1 = 2;

  StructureData re;
  re.weq.kind = WeqSpec::Kind::IsoOnly;
  // (A, f, B, coker f) for every basis morphism.
  Mor a = arrow(cat, S2, P1);
  Mor bb = arrow(cat, P1, S1);
  re.seq_generators.push_back(make_seq(cat, Obj{{S2}}, a, Obj{{P1}}, bb, Obj{{S1}}));
  re.seq_generators.push_back(
      make_seq(cat, Obj{{P1}}, bb, Obj{{S1}}, fincat::zero_mor(cat, Obj{{S1}}, Obj{}), Obj{}));
  for (int i : {S2, P1, S1}) {
    re.seq_generators.push_back(make_seq(cat, Obj{{i}}, fincat::identity_mor(cat, Obj{{i}}), Obj{{i}},
                                         fincat::zero_mor(cat, Obj{{i}}, Obj{}), Obj{}));
    // C -> 0 -> 0 shapes kill every class in K0.
    re.seq_generators.push_back(make_seq(cat, Obj{{i}}, fincat::zero_mor(cat, Obj{{i}}, Obj{}), Obj{},
                                         fincat::zero_mor(cat, Obj{}, Obj{}), Obj{}));
  }
  b.structures.clear();
  b.structures["rightexact"] = re;
  b.flags.bi_directional = false;
  b.provenance =
      "right-exact structure on mod kA2: sequence generators (A, f, B, coker f) "
      "for each basis morphism plus C -> 0 -> 0 shapes; W = Iso";
  return b;
}

Bundle build_rightexact_mod_a2() { return build_rightexact_structure(build_mod_a2()); }

std::vector<std::string> bundle_names() {
  return {"mod_a2", "paper_example_d", "derived_window_a2", "cluster_a2", "rightexact_mod_a2"};
}

Bundle build(const std::string& name, int window_radius) {
  if (name == "mod_a2") return build_mod_a2();
  if (name == "paper_example_d") return build_paper_example_d();
  if (name == "derived_window_a2") return build_derived_window_a2(window_radius);
  if (name == "cluster_a2") return build_cluster_a2();
  if (name == "rightexact_mod_a2") return build_rightexact_mod_a2();
  throw fincat::ValidationError("unknown bundle '" + name + "'");
}

}  // namespace gallery
}  // namespace k0wb
