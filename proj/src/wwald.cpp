#include "k0wb/wwald.hpp"

#include <algorithm>
#include <functional>

namespace k0wb::wwald {

using fincat::compose;
using fincat::direct_sum;
using fincat::identity_mor;
using fincat::is_isomorphism;
using fincat::is_zero_mor;
using fincat::zero_mor;

// ---------------------------------------------------------------------------
// Reports

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.verdict == Verdict::Pass; });
}

const CheckResult* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void Report::add(std::string name, Verdict v, std::string certificate) {
  checks.push_back(CheckResult{std::move(name), v, std::move(certificate)});
}

// ---------------------------------------------------------------------------
// Multiset helpers (sorted int vectors)

namespace {

std::optional<std::vector<int>> multiset_sub(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  size_t i = 0, j = 0;
  while (i < a.size()) {
    if (j < b.size() && a[i] == b[j]) {
      ++i;
      ++j;
    } else if (j < b.size() && b[j] < a[i]) {
      return std::nullopt;
    } else {
      out.push_back(a[i]);
      ++i;
    }
  }
  if (j != b.size()) return std::nullopt;
  return out;
}

std::vector<int> multiset_union(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  return a;
}

bool all_in(const std::vector<int>& parts, const std::vector<int>& allowed) {
  return std::all_of(parts.begin(), parts.end(), [&](int p) {
    return std::find(allowed.begin(), allowed.end(), p) != allowed.end();
  });
}

}  // namespace

Mor sort_mor(const FinCategory& cat, const Mor& m) {
  Obj ss{m.src.sorted_parts()}, sd{m.dst.sorted_parts()};
  if (ss == m.src && sd == m.dst) return m;
  Mor ps = fincat::permutation_iso(cat, m.src, ss);
  Mor pd = fincat::permutation_iso(cat, m.dst, sd);
  return compose(cat, pd, compose(cat, m, fincat::mor_inverse(cat, ps)));
}

SequenceTriple sort_triple(const FinCategory& cat, const SequenceTriple& s) {
  Obj sa{s.A.sorted_parts()}, sb{s.B.sorted_parts()}, sc{s.C.sorted_parts()};
  Mor pa = fincat::permutation_iso(cat, s.A, sa);
  Mor pb = fincat::permutation_iso(cat, s.B, sb);
  Mor pc = fincat::permutation_iso(cat, s.C, sc);
  SequenceTriple out;
  out.A = sa;
  out.B = sb;
  out.C = sc;
  out.f = compose(cat, pb, compose(cat, s.f, fincat::mor_inverse(cat, pa)));
  out.g = compose(cat, pc, compose(cat, s.g, fincat::mor_inverse(cat, pb)));
  if (s.connecting) {
    auto pa_shift = fincat::shift_mor(cat, pa, 1);
    if (pa_shift)
      out.connecting = compose(cat, *pa_shift, compose(cat, *s.connecting, fincat::mor_inverse(cat, pc)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// SeqClass

SeqClass::SeqClass(const FinCategory* cat, std::vector<SequenceTriple> generators, bool include_splits)
    : cat_(cat), generators_(std::move(generators)), include_splits_(include_splits) {}

SequenceTriple SeqClass::assemble(const Decomposition& d) const {
  const FinCategory& cat = *cat_;
  SequenceTriple acc;
  acc.A = Obj{};
  acc.B = Obj{};
  acc.C = Obj{};
  acc.f = zero_mor(cat, acc.A, acc.B);
  acc.g = zero_mor(cat, acc.B, acc.C);
  acc.connecting = zero_mor(cat, Obj{}, Obj{});
  auto append = [&](const SequenceTriple& comp) { acc = direct_sum(cat, acc, comp); };
  for (int gi : d.gens) append(generators_[gi]);
  for (int x : d.left_splits) {
    SequenceTriple l;
    l.A = Obj{{x}};
    l.B = Obj{{x}};
    l.C = Obj{};
    l.f = identity_mor(cat, l.A);
    l.g = zero_mor(cat, l.B, l.C);
    if (auto x1 = fincat::shift_obj(cat, l.A, 1)) l.connecting = zero_mor(cat, Obj{}, *x1);
    append(l);
  }
  for (int y : d.right_splits) {
    SequenceTriple r;
    r.A = Obj{};
    r.B = Obj{{y}};
    r.C = Obj{{y}};
    r.f = zero_mor(cat, r.A, r.B);
    r.g = identity_mor(cat, r.B);
    r.connecting = zero_mor(cat, r.C, Obj{});
    append(r);
  }
  return acc;
}

namespace {

// Enumerate generator multisets (indices weakly increasing) whose
// componentwise sums fit inside the given multisets; delegates the
// leftover handling to `finish`, which may reject. Generators invisible
// to every tracked coordinate are skipped: they never affect the
// queried morphisms and would recurse without bound.
template <typename Fn>
void enumerate_gen_multisets(const std::vector<std::array<std::vector<int>, 3>>& gen_parts,
                             std::array<std::vector<int>, 3> remaining, int which_count,
                             const std::array<bool, 3>& used, std::vector<int>& chosen, size_t from, Fn&& finish) {
  finish(remaining, chosen);
  for (size_t gi = from; gi < gen_parts.size(); ++gi) {
    bool visible = false;
    for (int k = 0; k < 3; ++k)
      if (used[k] && !gen_parts[gi][k].empty()) visible = true;
    if (!visible) continue;
    std::array<std::vector<int>, 3> next = remaining;
    bool fits = true;
    for (int k = 0; k < 3 && fits; ++k) {
      if (!used[k]) continue;
      auto sub = multiset_sub(next[k], gen_parts[gi][k]);
      if (!sub)
        fits = false;
      else
        next[k] = *sub;
    }
    if (!fits) continue;
    chosen.push_back(static_cast<int>(gi));
    enumerate_gen_multisets(gen_parts, next, which_count, used, chosen, gi, finish);
    chosen.pop_back();
  }
  (void)which_count;
}

}  // namespace

void SeqClass::decompositions_abc(const Obj& a, const Obj& b, const Obj& c,
                                  std::vector<Decomposition>& out) const {
  std::vector<std::array<std::vector<int>, 3>> gp;
  for (const auto& g : generators_) gp.push_back({g.A.sorted_parts(), g.B.sorted_parts(), g.C.sorted_parts()});
  std::array<std::vector<int>, 3> rem = {a.sorted_parts(), b.sorted_parts(), c.sorted_parts()};
  std::vector<int> chosen;
  enumerate_gen_multisets(gp, rem, 3, {true, true, true}, chosen, 0,
                          [&](const std::array<std::vector<int>, 3>& left, const std::vector<int>& gens) {
                            // leftovers: A' left splits, C' right splits, B' must equal A' ⊎ C'
                            if (!include_splits_) {
                              if (!left[0].empty() || !left[1].empty() || !left[2].empty()) return;
                              out.push_back(Decomposition{gens, {}, {}});
                              return;
                            }
                            if (left[1] != multiset_union(left[0], left[2])) return;
                            out.push_back(Decomposition{gens, left[0], left[2]});
                          });
}

void SeqClass::decompositions_ab(const Obj& a, const Obj& b, std::vector<Decomposition>& out) const {
  std::vector<std::array<std::vector<int>, 3>> gp;
  for (const auto& g : generators_) gp.push_back({g.A.sorted_parts(), g.B.sorted_parts(), g.C.sorted_parts()});
  std::array<std::vector<int>, 3> rem = {a.sorted_parts(), b.sorted_parts(), std::vector<int>{}};
  std::vector<int> chosen;
  enumerate_gen_multisets(gp, rem, 2, {true, true, false}, chosen, 0,
                          [&](const std::array<std::vector<int>, 3>& left, const std::vector<int>& gens) {
                            if (!include_splits_) {
                              if (!left[0].empty() || !left[1].empty()) return;
                              out.push_back(Decomposition{gens, {}, {}});
                              return;
                            }
                            // left splits consume A' from B; the rest of B becomes right splits
                            auto after = multiset_sub(left[1], left[0]);
                            if (!after) return;
                            out.push_back(Decomposition{gens, left[0], *after});
                          });
}

void SeqClass::decompositions_bc(const Obj& b, const Obj& c, std::vector<Decomposition>& out) const {
  std::vector<std::array<std::vector<int>, 3>> gp;
  for (const auto& g : generators_) gp.push_back({g.A.sorted_parts(), g.B.sorted_parts(), g.C.sorted_parts()});
  std::array<std::vector<int>, 3> rem = {std::vector<int>{}, b.sorted_parts(), c.sorted_parts()};
  std::vector<int> chosen;
  enumerate_gen_multisets(gp, rem, 2, {false, true, true}, chosen, 0,
                          [&](const std::array<std::vector<int>, 3>& left, const std::vector<int>& gens) {
                            if (!include_splits_) {
                              if (!left[1].empty() || !left[2].empty()) return;
                              out.push_back(Decomposition{gens, {}, {}});
                              return;
                            }
                            // right splits consume C' from B; the rest of B becomes left splits
                            auto after = multiset_sub(left[1], left[2]);
                            if (!after) return;
                            out.push_back(Decomposition{gens, *after, left[2]});
                          });
}

const SeqClass::ModelSet& SeqClass::ab_models(const Obj& a, const Obj& b) const {
  auto key = std::make_pair(a.sorted_parts(), b.sorted_parts());
  auto it = ab_cache_.find(key);
  if (it != ab_cache_.end()) return it->second;
  ModelSet set;
  decompositions_ab(a, b, set.decomps);
  for (const auto& d : set.decomps) {
    set.models.push_back(assemble(d));
    set.profiles.push_back(fincat::mor_profile(*cat_, set.models.back().f));
  }
  return ab_cache_.emplace(std::move(key), std::move(set)).first->second;
}

const SeqClass::ModelSet& SeqClass::bc_models(const Obj& b, const Obj& c) const {
  auto key = std::make_pair(b.sorted_parts(), c.sorted_parts());
  auto it = bc_cache_.find(key);
  if (it != bc_cache_.end()) return it->second;
  ModelSet set;
  decompositions_bc(b, c, set.decomps);
  for (const auto& d : set.decomps) {
    set.models.push_back(assemble(d));
    set.profiles.push_back(fincat::mor_profile(*cat_, set.models.back().g));
  }
  return bc_cache_.emplace(std::move(key), std::move(set)).first->second;
}

std::optional<SeqClass::Witness> SeqClass::find_member(const SequenceTriple& query) const {
  const FinCategory& cat = *cat_;
  std::vector<Decomposition> decomps;
  decompositions_abc(query.A, query.B, query.C, decomps);
  std::vector<int> qf = fincat::mor_profile(cat, query.f);
  std::vector<int> qg = fincat::mor_profile(cat, query.g);
  for (const auto& d : decomps) {
    SequenceTriple model = assemble(d);
    if (fincat::mor_profile(cat, model.f) != qf || fincat::mor_profile(cat, model.g) != qg) continue;
    auto iso = fincat::solve_triple_iso(cat, query, model);
    if (!iso) continue;
    Witness w;
    w.model = model;
    w.iso = *iso;
    w.generator_indices = d.gens;
    if (model.connecting) {
      // query connecting = alpha[1]^{-1} ∘ conn_model ∘ gamma
      auto alpha_shift = fincat::shift_mor(cat, w.iso.alpha, 1);
      if (alpha_shift) {
        Mor inv = fincat::mor_inverse(cat, *alpha_shift);
        w.connecting = compose(cat, inv, compose(cat, *model.connecting, w.iso.gamma));
      }
    }
    member_cache_[query] = true;
    return w;
  }
  member_cache_[query] = false;
  return std::nullopt;
}

bool SeqClass::is_member(const SequenceTriple& query) const {
  auto it = member_cache_.find(query);
  if (it != member_cache_.end()) return it->second;
  return find_member(query).has_value();
}

bool SeqClass::is_cofibration(const Mor& u) const {
  const ModelSet& set = ab_models(u.src, u.dst);
  if (set.models.empty()) return false;
  std::vector<int> qp = fincat::mor_profile(*cat_, u);
  for (size_t i = 0; i < set.models.size(); ++i) {
    if (set.profiles[i] != qp) continue;
    if (fincat::mor_isomorphic(*cat_, u, set.models[i].f)) return true;
  }
  return false;
}

bool SeqClass::is_cofibration_with_cone_in(const Mor& u, const std::vector<int>& subcat) const {
  const ModelSet& set = ab_models(u.src, u.dst);
  if (set.models.empty()) return false;
  std::vector<int> qp = fincat::mor_profile(*cat_, u);
  for (size_t i = 0; i < set.models.size(); ++i) {
    if (!all_in(set.models[i].C.parts, subcat)) continue;
    if (set.profiles[i] != qp) continue;
    if (fincat::mor_isomorphic(*cat_, u, set.models[i].f)) return true;
  }
  return false;
}

std::vector<SequenceTriple> SeqClass::completions_of_cofibration(const Mor& u) const {
  const FinCategory& cat = *cat_;
  std::vector<SequenceTriple> out;
  const ModelSet& set = ab_models(u.src, u.dst);
  if (set.models.empty()) return out;
  std::vector<int> qp = fincat::mor_profile(cat, u);
  for (size_t i = 0; i < set.models.size(); ++i) {
    if (set.profiles[i] != qp) continue;
    const SequenceTriple& model = set.models[i];
    auto ab = fincat::solve_mor_iso(cat, u, model.f);
    if (!ab) continue;
    SequenceTriple seq;
    seq.A = u.src;
    seq.f = u;
    seq.B = u.dst;
    seq.g = compose(cat, model.g, ab->second);
    seq.C = model.C;
    if (model.connecting) {
      auto a_shift = fincat::shift_mor(cat, ab->first, 1);
      if (a_shift)
        seq.connecting = compose(cat, fincat::mor_inverse(cat, *a_shift), *model.connecting);
    }
    out.push_back(std::move(seq));
  }
  return out;
}

bool SeqClass::is_fibration(const Mor& g) const {
  const ModelSet& set = bc_models(g.src, g.dst);
  if (set.models.empty()) return false;
  std::vector<int> qp = fincat::mor_profile(*cat_, g);
  for (size_t i = 0; i < set.models.size(); ++i) {
    if (set.profiles[i] != qp) continue;
    if (fincat::mor_isomorphic(*cat_, g, set.models[i].g)) return true;
  }
  return false;
}

bool SeqClass::is_fibration_with_cocone_in(const Mor& g, const std::vector<int>& subcat) const {
  const ModelSet& set = bc_models(g.src, g.dst);
  if (set.models.empty()) return false;
  std::vector<int> qp = fincat::mor_profile(*cat_, g);
  for (size_t i = 0; i < set.models.size(); ++i) {
    if (!all_in(set.models[i].A.parts, subcat)) continue;
    if (set.profiles[i] != qp) continue;
    if (fincat::mor_isomorphic(*cat_, g, set.models[i].g)) return true;
  }
  return false;
}

std::vector<SequenceTriple> SeqClass::completions_of_fibration(const Mor& g) const {
  const FinCategory& cat = *cat_;
  std::vector<SequenceTriple> out;
  const ModelSet& set = bc_models(g.src, g.dst);
  if (set.models.empty()) return out;
  std::vector<int> qp = fincat::mor_profile(cat, g);
  for (size_t i = 0; i < set.models.size(); ++i) {
    if (set.profiles[i] != qp) continue;
    const SequenceTriple& model = set.models[i];
    auto bc = fincat::solve_mor_iso(cat, g, model.g);
    if (!bc) continue;
    SequenceTriple seq;
    seq.A = model.A;
    seq.f = compose(cat, fincat::mor_inverse(cat, bc->first), model.f);
    seq.B = g.src;
    seq.g = g;
    seq.C = g.dst;
    if (model.connecting) seq.connecting = compose(cat, *model.connecting, bc->second);
    out.push_back(std::move(seq));
  }
  return out;
}

std::vector<SequenceTriple> SeqClass::canonical_members(int bound, int max_components) const {
  const FinCategory& cat = *cat_;
  // Component inventory: generators plus (optionally) split pieces.
  std::vector<SequenceTriple> components;
  for (const auto& g : generators_) components.push_back(g);
  if (include_splits_) {
    for (int x = 0; x < cat.n(); ++x) {
      SequenceTriple l;
      l.A = Obj{{x}};
      l.B = Obj{{x}};
      l.C = Obj{};
      l.f = identity_mor(cat, l.A);
      l.g = zero_mor(cat, l.B, l.C);
      components.push_back(l);
      SequenceTriple r;
      r.A = Obj{};
      r.B = Obj{{x}};
      r.C = Obj{{x}};
      r.f = zero_mor(cat, r.A, r.B);
      r.g = identity_mor(cat, r.B);
      components.push_back(r);
    }
  }
  std::vector<SequenceTriple> out;
  SequenceTriple acc;
  acc.A = Obj{};
  acc.B = Obj{};
  acc.C = Obj{};
  acc.f = zero_mor(cat, acc.A, acc.B);
  acc.g = zero_mor(cat, acc.B, acc.C);
  std::function<void(size_t, const SequenceTriple&, int)> rec = [&](size_t from, const SequenceTriple& cur,
                                                                    int comps) {
    out.push_back(sort_triple(cat, cur));
    if (comps == max_components) return;
    for (size_t i = from; i < components.size(); ++i) {
      const SequenceTriple& c = components[i];
      if (cur.A.size() + c.A.size() > bound || cur.B.size() + c.B.size() > bound ||
          cur.C.size() + c.C.size() > bound)
        continue;
      rec(i, direct_sum(cat, cur, c), comps + 1);
    }
  };
  rec(0, acc, 0);
  return out;
}

// ---------------------------------------------------------------------------
// MemberSet

bool MemberSet::contains(const Mor& m) const {
  auto it = by_pair.find({m.src.parts, m.dst.parts});
  if (it == by_pair.end()) return false;
  return it->second.count(m.coeffs) > 0;
}

void MemberSet::insert(const Mor& m) {
  auto& bucket = by_pair[{m.src.parts, m.dst.parts}];
  if (bucket.insert(m.coeffs).second) ++total;
}

std::vector<Mor> MemberSet::between(const Obj& a, const Obj& b) const {
  std::vector<Mor> out;
  auto it = by_pair.find({a.parts, b.parts});
  if (it == by_pair.end()) return out;
  for (const auto& c : it->second) out.push_back(Mor{a, b, c});
  return out;
}

std::vector<Mor> MemberSet::from(const Obj& a) const {
  std::vector<Mor> out;
  for (auto it = by_pair.lower_bound({a.parts, {}}); it != by_pair.end() && it->first.first == a.parts; ++it)
    for (const auto& c : it->second) out.push_back(Mor{a, Obj{it->first.second}, c});
  return out;
}

std::vector<Mor> MemberSet::all() const {
  std::vector<Mor> out;
  for (const auto& [key, coeffs] : by_pair)
    for (const auto& c : coeffs) out.push_back(Mor{Obj{key.first}, Obj{key.second}, c});
  return out;
}

// ---------------------------------------------------------------------------
// MorClass

MorClass MorClass::iso_only(const FinCategory* cat) {
  MorClass m;
  m.cat_ = cat;
  m.spec_.kind = WeqSpec::Kind::IsoOnly;
  return m;
}

MorClass MorClass::generated(const FinCategory* cat, std::vector<Mor> gens, int depth, bool include_isos) {
  MorClass m;
  m.cat_ = cat;
  m.spec_.kind = WeqSpec::Kind::Generated;
  m.spec_.generators = std::move(gens);
  m.spec_.depth = depth;
  m.spec_.include_isos = include_isos;
  return m;
}

MorClass MorClass::predicate_sn(const FinCategory* cat, std::shared_ptr<const SeqClass> conflations,
                                std::vector<int> subcat) {
  MorClass m;
  m.cat_ = cat;
  m.spec_.kind = WeqSpec::Kind::Predicate;
  m.spec_.predicate = "SN";
  m.conflations_ = std::move(conflations);
  m.subcat_ = std::move(subcat);
  return m;
}

const MemberSet& MorClass::members(int bound) const {
  auto it = cache_.find(bound);
  if (it != cache_.end()) return it->second;
  return cache_.emplace(bound, materialize(bound)).first->second;
}

bool MorClass::is_member(const Mor& m, int bound) const { return members(bound).contains(m); }

namespace {

std::vector<Mor> all_isos(const FinCategory& cat, const Obj& x) {
  std::vector<Mor> out;
  for (const Mor& m : fincat::enumerate_homs(cat, x, x))
    if (is_isomorphism(cat, m)) out.push_back(m);
  return out;
}

}  // namespace

MemberSet MorClass::materialize(int bound) const {
  const FinCategory& cat = *cat_;
  std::vector<Obj> uni = fincat::universe(cat, bound);
  MemberSet set;

  if (spec_.kind == WeqSpec::Kind::IsoOnly) {
    for (const Obj& x : uni)
      for (const Mor& m : all_isos(cat, x)) set.insert(m);
    return set;
  }

  if (spec_.kind == WeqSpec::Kind::Predicate) {
    // S_N by the factor-through characterization; evaluated modelwise
    // per (B, C) pair, then matched against each morphism by iso.
    if (!conflations_) throw fincat::ValidationError("predicate morphism class lacks conflation data");
    for (const Obj& b : uni)
      for (const Obj& c : uni) {
        std::vector<SequenceTriple> models;
        {
          std::vector<SeqClass::Decomposition> decomps;
          conflations_->decompositions_bc(b, c, decomps);
          for (const auto& d : decomps) models.push_back(conflations_->assemble(d));
        }
        std::vector<const SequenceTriple*> good;
        for (const auto& m : models) {
          if (!m.connecting) continue;
          if (!fincat::factors_through(cat, m.f, subcat_)) continue;
          if (!fincat::factors_through(cat, *m.connecting, subcat_)) continue;
          good.push_back(&m);
        }
        if (good.empty()) continue;
        for (const Mor& g : fincat::enumerate_homs(cat, b, c))
          for (const SequenceTriple* m : good)
            if (fincat::mor_isomorphic(cat, g, m->g)) {
              set.insert(g);
              break;
            }
      }
    return set;
  }

  // Generated kind: basics are sums of generators with an isomorphism
  // padding, then composition closure up to the declared depth.
  MemberSet basics;
  if (spec_.include_isos)
    for (const Obj& x : uni)
      for (const Mor& m : all_isos(cat, x)) basics.insert(m);
  std::vector<std::array<std::vector<int>, 3>> gp;
  for (const auto& g : spec_.generators)
    gp.push_back({g.src.sorted_parts(), g.dst.sorted_parts(), {}});
  for (const Obj& x : uni)
    for (const Obj& y : uni) {
      // models: generator multisets + identity on the (equal) remainders
      std::vector<Mor> models;
      std::array<std::vector<int>, 3> rem = {x.sorted_parts(), y.sorted_parts(), std::vector<int>{}};
      std::vector<int> chosen;
      enumerate_gen_multisets(gp, rem, 2, {true, true, false}, chosen, 0,
                              [&](const std::array<std::vector<int>, 3>& left, const std::vector<int>& gens) {
                                if (gens.empty()) return;  // pure isomorphisms handled above
                                if (left[0] != left[1]) return;
                                Mor acc = zero_mor(cat, Obj{}, Obj{});
                                for (int gi : gens) acc = direct_sum(cat, acc, spec_.generators[gi]);
                                if (!left[0].empty())
                                  acc = direct_sum(cat, acc, identity_mor(cat, Obj{left[0]}));
                                models.push_back(acc);
                              });
      if (models.empty()) continue;
      for (const Mor& u : fincat::enumerate_homs(cat, x, y)) {
        if (basics.contains(u)) continue;
        for (const Mor& m : models)
          if (fincat::mor_isomorphic(cat, u, m)) {
            basics.insert(u);
            break;
          }
      }
    }

  MemberSet closed = basics;
  std::vector<Mor> frontier = basics.all();
  for (int step = 2; step <= spec_.depth && !frontier.empty(); ++step) {
    std::vector<Mor> next;
    for (const Mor& u : frontier) {
      for (const Mor& v : basics.from(u.dst)) {
        Mor vu = compose(cat, v, u);
        if (!closed.contains(vu)) {
          closed.insert(vu);
          next.push_back(vu);
        }
      }
    }
    frontier = std::move(next);
  }
  return closed;
}

// ---------------------------------------------------------------------------
// Structures

Structure make_structure(const Bundle& bundle, const std::string& name) {
  const StructureData& data = bundle.structure(name);
  Structure s;
  s.cat = &bundle.cat;
  s.name = name;
  s.seq = std::make_shared<SeqClass>(&bundle.cat, data.seq_generators, data.include_splits);
  s.probes = data.seq_probes;
  switch (data.weq.kind) {
    case WeqSpec::Kind::IsoOnly:
      s.weq = MorClass::iso_only(&bundle.cat);
      break;
    case WeqSpec::Kind::Generated:
      s.weq = MorClass::generated(&bundle.cat, data.weq.generators, data.weq.depth, data.weq.include_isos);
      break;
    case WeqSpec::Kind::Predicate: {
      if (data.weq.predicate != "SN")
        throw fincat::ValidationError("unknown weak-equivalence predicate '" + data.weq.predicate + "'");
      s.weq = MorClass::predicate_sn(&bundle.cat, s.seq, bundle.subcategory(data.weq.predicate_subcat));
      break;
    }
  }
  return s;
}

MemberSet enumerate_cofibrations(const Structure& s, int bound) {
  const FinCategory& cat = *s.cat;
  std::vector<Obj> uni = fincat::universe(cat, bound);
  MemberSet out;
  for (const Obj& a : uni)
    for (const Obj& b : uni) {
      const auto& set = s.seq->ab_models(a, b);
      if (set.models.empty()) continue;
      for (const Mor& u : fincat::enumerate_homs(cat, a, b)) {
        std::vector<int> qp = fincat::mor_profile(cat, u);
        for (size_t i = 0; i < set.models.size(); ++i) {
          if (set.profiles[i] != qp) continue;
          if (fincat::mor_isomorphic(cat, u, set.models[i].f)) {
            out.insert(u);
            break;
          }
        }
      }
    }
  return out;
}

MemberSet enumerate_fibrations(const Structure& s, int bound) {
  const FinCategory& cat = *s.cat;
  std::vector<Obj> uni = fincat::universe(cat, bound);
  MemberSet out;
  for (const Obj& b : uni)
    for (const Obj& c : uni) {
      const auto& set = s.seq->bc_models(b, c);
      if (set.models.empty()) continue;
      for (const Mor& g : fincat::enumerate_homs(cat, b, c)) {
        std::vector<int> qp = fincat::mor_profile(cat, g);
        for (size_t i = 0; i < set.models.size(); ++i) {
          if (set.profiles[i] != qp) continue;
          if (fincat::mor_isomorphic(cat, g, set.models[i].g)) {
            out.insert(g);
            break;
          }
        }
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// Axiom checks

namespace {

// Enumerate all t with t∘g = h, calling fn on each; returns false if
// the system is inconsistent (fn never called).
template <typename Fn>
bool for_each_right_factor(const FinCategory& cat, const Mor& g, const Mor& h, Fn&& fn) {
  auto t0 = fincat::solve_right_factor(cat, g, h);
  if (!t0) return false;
  // homogeneous solutions: t with t∘g = 0
  Mor zero_h = zero_mor(cat, g.src, h.dst);
  std::vector<Mor> homogeneous;
  {
    // nullspace of precomposition with g on Hom(g.dst, h.dst)
    int dim = fincat::hom_dim(cat, g.dst, h.dst);
    fincat::FpMat m(fincat::hom_dim(cat, g.src, h.dst), dim);
    for (int c = 0; c < dim; ++c) {
      Mor t = zero_mor(cat, g.dst, h.dst);
      t.coeffs[c] = 1;
      Mor tg = compose(cat, t, g);
      for (size_t r = 0; r < tg.coeffs.size(); ++r) m.at(static_cast<int>(r), c) = tg.coeffs[r];
    }
    for (const auto& v : fincat::fp_nullspace(m, cat.prime)) homogeneous.push_back(Mor{g.dst, h.dst, v});
  }
  // iterate the affine space (assumed small; caller controls sizes)
  std::vector<int> digits(homogeneous.size(), 0);
  Mor cur = *t0;
  while (true) {
    if (fn(cur)) return true;
    size_t i = 0;
    while (i < homogeneous.size()) {
      ++digits[i];
      for (size_t k = 0; k < cur.coeffs.size(); ++k)
        cur.coeffs[k] = (cur.coeffs[k] + homogeneous[i].coeffs[k]) % cat.prime;
      if (digits[i] < cat.prime) break;
      digits[i] = 0;
      ++i;
    }
    if (i == homogeneous.size()) break;
  }
  return true;
}

std::vector<Mor> distinct_cofibration_models(const Structure& s, int bound, int max_components) {
  std::set<Mor> seen;
  std::vector<Mor> out;
  for (const auto& m : s.seq->canonical_members(bound, max_components))
    if (seen.insert(m.f).second) out.push_back(m.f);
  return out;
}

}  // namespace

Report check_axioms(const Structure& s, int bound) {
  const FinCategory& cat = *s.cat;
  Report rep;
  rep.structure = s.name;
  rep.universe_bound = bound;
  rep.prime = cat.prime;
  std::vector<Obj> uni = fincat::universe(cat, bound);
  const MemberSet& weq = s.weq.members(bound);

  // ---- WC0: cofibrations closed under composition, contain isos.
  {
    MemberSet cofibs = enumerate_cofibrations(s, bound);
    Verdict v = Verdict::Pass;
    std::string cert;
    for (const Obj& x : uni) {
      for (const Mor& iso : all_isos(cat, x))
        if (!cofibs.contains(iso)) {
          v = Verdict::Fail;
          cert = "isomorphism not a cofibration: " + fincat::mor_to_string(cat, iso);
          break;
        }
      if (v == Verdict::Fail) break;
    }
    if (v == Verdict::Pass) {
      for (const auto& [key, coeffs] : cofibs.by_pair) {
        Obj mid{key.second};
        for (const auto& ucoef : coeffs) {
          Mor u{Obj{key.first}, mid, ucoef};
          for (const Mor& w : cofibs.from(mid)) {
            Mor wu = compose(cat, w, u);
            if (!cofibs.contains(wu) && !s.seq->is_cofibration(wu)) {
              v = Verdict::Fail;
              cert = "composite of cofibrations is not a cofibration: " + fincat::mor_to_string(cat, u) +
                     " then " + fincat::mor_to_string(cat, w);
              break;
            }
          }
          if (v == Verdict::Fail) break;
        }
        if (v == Verdict::Fail) break;
      }
    }
    rep.add("WC0", v, cert);
  }

  // ---- WC1: split sequences are members, probes are members,
  //           generators are weak cokernel sequences.
  {
    Verdict v = Verdict::Pass;
    std::string cert;
    for (const Obj& x : uni) {
      for (const Obj& y : uni) {
        if (x.size() + y.size() > bound) continue;
        Obj xy = direct_sum(x, y);
        SequenceTriple split;
        split.A = x;
        split.B = xy;
        split.C = y;
        std::vector<int> xpos(x.size()), ypos(y.size());
        for (int i = 0; i < x.size(); ++i) xpos[i] = i;
        for (int i = 0; i < y.size(); ++i) ypos[i] = x.size() + i;
        split.f = fincat::inclusion(cat, x, xy, xpos);
        split.g = fincat::projection(cat, xy, y, ypos);
        if (!s.seq->is_member(split)) {
          v = Verdict::Fail;
          cert = "split sequence not a member: " + fincat::seq_to_string(cat, split);
          break;
        }
      }
      if (v == Verdict::Fail) break;
    }
    if (v == Verdict::Pass)
      for (const auto& probe : s.probes)
        if (!s.seq->is_member(probe)) {
          v = Verdict::Fail;
          cert = "declared sequence not a member: " + fincat::seq_to_string(cat, probe);
          break;
        }
    if (v == Verdict::Pass)
      for (const auto& g : s.seq->generators())
        if (!fincat::is_weak_cokernel(cat, g.f, g.g)) {
          v = Verdict::Fail;
          cert = "generator is not a weak cokernel sequence: " + fincat::seq_to_string(cat, g);
          break;
        }
    rep.add("WC1", v, cert);
  }

  // ---- WC2: for each cofibration model f and enumerated c, some
  //           member sequence starts at (f; -c) with cofibration C-part.
  {
    Verdict v = Verdict::Pass;
    std::string cert;
    std::vector<Mor> fmodels = distinct_cofibration_models(s, bound, 2);
    for (const Mor& f : fmodels) {
      for (const Obj& c_obj : uni) {
        if (f.dst.size() + c_obj.size() > bound) continue;
        long hsz = fincat::hom_space_size(cat, f.src, c_obj);
        if (hsz < 0 || hsz > cat.enumeration_cap) {
          rep.add("WC2", Verdict::Inconclusive,
                  "enumeration infeasible for Hom(" + fincat::obj_to_string(cat, f.src) + ", " +
                      fincat::obj_to_string(cat, c_obj) + ")");
          return rep;
        }
        for (const Mor& c : fincat::enumerate_homs(cat, f.src, c_obj)) {
          // u = (f; -c): A -> B ⊕ C
          Obj bc = direct_sum(f.dst, c_obj);
          Mor u = zero_mor(cat, f.src, bc);
          for (int ti = 0; ti < f.dst.size(); ++ti)
            for (int sj = 0; sj < f.src.size(); ++sj) {
              int d = cat.dim(f.src.parts[sj], f.dst.parts[ti]);
              int from = fincat::block_offset(cat, f, ti, sj);
              int to = fincat::block_offset(cat, u, ti, sj);
              for (int k = 0; k < d; ++k) u.coeffs[to + k] = f.coeffs[from + k];
            }
          Mor negc = fincat::negate(cat, c);
          for (int ti = 0; ti < c_obj.size(); ++ti)
            for (int sj = 0; sj < f.src.size(); ++sj) {
              int d = cat.dim(f.src.parts[sj], c_obj.parts[ti]);
              int from = fincat::block_offset(cat, negc, ti, sj);
              int to = fincat::block_offset(cat, u, f.dst.size() + ti, sj);
              for (int k = 0; k < d; ++k) u.coeffs[to + k] = negc.coeffs[from + k];
            }
          bool ok = false;
          std::vector<int> cpos(c_obj.size());
          for (int i = 0; i < c_obj.size(); ++i) cpos[i] = f.dst.size() + i;
          Mor incl_c = fincat::inclusion(cat, c_obj, bc, cpos);
          for (const SequenceTriple& comp : s.seq->completions_of_cofibration(u)) {
            Mor g_restr = compose(cat, comp.g, incl_c);
            if (s.seq->is_cofibration(g_restr)) {
              ok = true;
              break;
            }
          }
          if (!ok) {
            v = Verdict::Fail;
            cert = "no member sequence with cofibration second part starts at (f;-c) for f = " +
                   fincat::mor_to_string(cat, f) + ", c = " + fincat::mor_to_string(cat, c);
            break;
          }
        }
        if (v == Verdict::Fail) break;
      }
      if (v == Verdict::Fail) break;
    }
    rep.add("WC2", v, cert);
  }

  // ---- WW0: weak equivalences contain isos, closed under composition.
  {
    Verdict v = Verdict::Pass;
    std::string cert;
    for (const Obj& x : uni) {
      for (const Mor& iso : all_isos(cat, x))
        if (!weq.contains(iso)) {
          v = Verdict::Fail;
          cert = "isomorphism not a weak equivalence: " + fincat::mor_to_string(cat, iso);
          break;
        }
      if (v == Verdict::Fail) break;
    }
    if (v == Verdict::Pass) {
      for (const auto& [key, coeffs] : weq.by_pair) {
        Obj mid{key.second};
        for (const auto& ucoef : coeffs) {
          Mor u{Obj{key.first}, mid, ucoef};
          for (const Mor& w : weq.from(mid)) {
            Mor wu = compose(cat, w, u);
            if (!weq.contains(wu)) {
              v = Verdict::Fail;
              cert = "composite of weak equivalences escapes the class: " + fincat::mor_to_string(cat, u) +
                     " then " + fincat::mor_to_string(cat, w) + " gives " + fincat::mor_to_string(cat, wu);
              break;
            }
          }
          if (v == Verdict::Fail) break;
        }
        if (v == Verdict::Fail) break;
      }
    }
    rep.add("WW0", v, cert);
  }

  // ---- WW1': gluing in the cokernel form over canonical member pairs.
  {
    Verdict v = Verdict::Pass;
    std::string cert;
    auto canon = s.seq->canonical_members(bound, 2);
    // index by the A-object
    std::map<std::vector<int>, std::vector<const SequenceTriple*>> by_a;
    for (const auto& m : canon) by_a[m.A.parts].push_back(&m);
    for (const auto& seq1 : canon) {
      for (const Mor& x : weq.from(seq1.A)) {
        auto it = by_a.find(x.dst.parts);
        if (it == by_a.end()) continue;
        for (const SequenceTriple* seq2 : it->second) {
          // y: B1 -> B2 with y f1 = f2 x; then need z in W with z g1 = g2 y
          Mor f2x = compose(cat, seq2->f, x);
          bool failed_here = false;
          for_each_right_factor(cat, seq1.f, f2x, [&](const Mor& y) {
            if (!weq.contains(y)) return false;  // keep scanning y's
            Mor g2y = compose(cat, seq2->g, y);
            bool found_z = false;
            for_each_right_factor(cat, seq1.g, g2y, [&](const Mor& z) {
              if (weq.contains(z)) {
                found_z = true;
                return true;
              }
              return false;
            });
            if (!found_z) {
              failed_here = true;
              cert = "no weak equivalence completes the gluing square: sequences " +
                     fincat::seq_to_string(cat, seq1) + " and " + fincat::seq_to_string(cat, *seq2) +
                     ", x = " + fincat::mor_to_string(cat, x) + ", y = " + fincat::mor_to_string(cat, y);
              return true;  // stop scanning
            }
            return false;
          });
          if (failed_here) {
            v = Verdict::Fail;
            break;
          }
        }
        if (v == Verdict::Fail) break;
      }
      if (v == Verdict::Fail) break;
    }
    rep.add("WW1'", v, cert);
  }

  return rep;
}

CheckResult check_ww1_original(const Structure& s, int bound) {
  const FinCategory& cat = *s.cat;
  std::vector<Obj> uni = fincat::universe(cat, bound);
  const MemberSet& weq = s.weq.members(bound);
  std::vector<Mor> fmodels = distinct_cofibration_models(s, bound, 2);

  // Quantify over cofibrations f1, f2, morphisms c1, c2, and weak
  // equivalences x, y, z closing the left-hand diagram; every pair of
  // completions must then be linked by a weak equivalence w.
  for (const Mor& f1 : fmodels)
    for (const Mor& f2 : fmodels)
      for (const Obj& c1_obj : uni) {
        if (f1.dst.size() + c1_obj.size() > bound) continue;
        for (const Obj& c2_obj : uni) {
          if (f2.dst.size() + c2_obj.size() > bound) continue;
          for (const Mor& x : weq.between(f1.src, f2.src))
            for (const Mor& y : weq.between(f1.dst, f2.dst)) {
              if (compose(cat, y, f1) != compose(cat, f2, x)) continue;
              for (const Mor& c1 : fincat::enumerate_homs(cat, f1.src, c1_obj))
                for (const Mor& z : weq.between(c1_obj, c2_obj)) {
                  Mor c2_needed_src = compose(cat, z, c1);  // z c1 = c2 x must hold for some c2
                  for (const Mor& c2 : fincat::enumerate_homs(cat, f2.src, c2_obj)) {
                    if (compose(cat, c2, x) != c2_needed_src) continue;
                    auto build_u = [&](const Mor& f, const Mor& c) {
                      Obj bc = direct_sum(f.dst, c.dst);
                      Mor u = zero_mor(cat, f.src, bc);
                      for (int ti = 0; ti < f.dst.size(); ++ti)
                        for (int sj = 0; sj < f.src.size(); ++sj) {
                          int d = cat.dim(f.src.parts[sj], f.dst.parts[ti]);
                          int from = fincat::block_offset(cat, f, ti, sj);
                          int to = fincat::block_offset(cat, u, ti, sj);
                          for (int k = 0; k < d; ++k) u.coeffs[to + k] = f.coeffs[from + k];
                        }
                      Mor negc = fincat::negate(cat, c);
                      for (int ti = 0; ti < c.dst.size(); ++ti)
                        for (int sj = 0; sj < f.src.size(); ++sj) {
                          int d = cat.dim(f.src.parts[sj], c.dst.parts[ti]);
                          int from = fincat::block_offset(cat, negc, ti, sj);
                          int to = fincat::block_offset(cat, u, f.dst.size() + ti, sj);
                          for (int k = 0; k < d; ++k) u.coeffs[to + k] = negc.coeffs[from + k];
                        }
                      return u;
                    };
                    Mor u1 = build_u(f1, c1);
                    Mor u2 = build_u(f2, c2);
                    Mor yz = direct_sum(cat, y, z);
                    for (const SequenceTriple& comp1 : s.seq->completions_of_cofibration(u1))
                      for (const SequenceTriple& comp2 : s.seq->completions_of_cofibration(u2)) {
                        Mor rhs = compose(cat, comp2.g, yz);
                        bool found_w = false;
                        for_each_right_factor(cat, comp1.g, rhs, [&](const Mor& w) {
                          // completion cokernels carry model part orders;
                          // conjugate to universe representatives for lookup
                          if (weq.contains(sort_mor(cat, w))) {
                            found_w = true;
                            return true;
                          }
                          return false;
                        });
                        if (!found_w)
                          return CheckResult{"WW1", Verdict::Fail,
                                             "no weak equivalence links the weak pushouts of (" +
                                                 fincat::mor_to_string(cat, f1) + "; -" +
                                                 fincat::mor_to_string(cat, c1) + ") and its image"};
                      }
                  }
                }
            }
        }
      }
  return CheckResult{"WW1", Verdict::Pass, ""};
}

Report check_saturation(const Structure& s, int bound) {
  const FinCategory& cat = *s.cat;
  Report rep;
  rep.structure = s.name;
  rep.universe_bound = bound;
  rep.prime = cat.prime;
  std::vector<Obj> uni = fincat::universe(cat, bound);
  const MemberSet& weq = s.weq.members(bound);

  // (i) f, g in W => gf in W
  for (const auto& [key, coeffs] : weq.by_pair) {
    Obj mid{key.second};
    for (const auto& fcoef : coeffs) {
      Mor f{Obj{key.first}, mid, fcoef};
      for (const Mor& g : weq.from(mid)) {
        Mor gf = compose(cat, g, f);
        if (!weq.contains(gf)) {
          rep.add("saturation", Verdict::Fail,
                  "f and g are weak equivalences but gf is not: f = " + fincat::mor_to_string(cat, f) +
                      ", g = " + fincat::mor_to_string(cat, g));
          return rep;
        }
      }
    }
  }
  // (ii) f, gf in W => g in W
  for (const auto& [key, coeffs] : weq.by_pair) {
    Obj y{key.second};
    for (const auto& fcoef : coeffs) {
      Mor f{Obj{key.first}, y, fcoef};
      for (const Obj& z : uni) {
        long hsz = fincat::hom_space_size(cat, y, z);
        if (hsz < 0 || hsz > cat.enumeration_cap) {
          rep.add("saturation", Verdict::Inconclusive, "enumeration infeasible");
          return rep;
        }
        for (const Mor& g : fincat::enumerate_homs(cat, y, z)) {
          if (!weq.contains(compose(cat, g, f))) continue;
          if (!weq.contains(g)) {
            rep.add("saturation", Verdict::Fail,
                    "f and gf are weak equivalences but g is not: f = " + fincat::mor_to_string(cat, f) +
                        ", g = " + fincat::mor_to_string(cat, g));
            return rep;
          }
        }
      }
    }
  }
  // (iii) g, gf in W => f in W
  for (const auto& [key, coeffs] : weq.by_pair) {
    Obj y{key.first};
    for (const auto& gcoef : coeffs) {
      Mor g{y, Obj{key.second}, gcoef};
      for (const Obj& x : uni) {
        long hsz = fincat::hom_space_size(cat, x, y);
        if (hsz < 0 || hsz > cat.enumeration_cap) {
          rep.add("saturation", Verdict::Inconclusive, "enumeration infeasible");
          return rep;
        }
        for (const Mor& f : fincat::enumerate_homs(cat, x, y)) {
          if (!weq.contains(compose(cat, g, f))) continue;
          if (!weq.contains(f)) {
            rep.add("saturation", Verdict::Fail,
                    "g and gf are weak equivalences but f is not: g = " + fincat::mor_to_string(cat, g) +
                        ", f = " + fincat::mor_to_string(cat, f));
            return rep;
          }
        }
      }
    }
  }
  rep.add("saturation", Verdict::Pass, "2-out-of-3 on all composable pairs meeting the class twice");
  return rep;
}

Report check_extension_axiom(const Structure& s, int bound) {
  const FinCategory& cat = *s.cat;
  Report rep;
  rep.structure = s.name;
  rep.universe_bound = bound;
  rep.prime = cat.prime;
  const MemberSet& weq = s.weq.members(bound);
  auto canon = s.seq->canonical_members(bound, 2);
  std::map<std::vector<int>, std::vector<const SequenceTriple*>> by_a;
  for (const auto& m : canon) by_a[m.A.parts].push_back(&m);

  for (const auto& seq1 : canon) {
    for (const Mor& a : weq.from(seq1.A)) {
      auto it = by_a.find(a.dst.parts);
      if (it == by_a.end()) continue;
      for (const SequenceTriple* seq2 : it->second) {
        for (const Mor& c : weq.between(seq1.C, seq2->C)) {
          // every commuting middle map must be a weak equivalence
          Mor f2a = compose(cat, seq2->f, a);
          Mor cg1 = compose(cat, c, seq1.g);
          bool bad = false;
          Mor bad_b = f2a;
          for_each_right_factor(cat, seq1.f, f2a, [&](const Mor& b) {
            if (compose(cat, seq2->g, b) != cg1) return false;  // not a commuting diagram
            if (!weq.contains(b)) {
              bad = true;
              bad_b = b;
              return true;
            }
            return false;
          });
          if (bad) {
            rep.add("extension", Verdict::Fail,
                    "ends are weak equivalences but the middle is not: sequences " +
                        fincat::seq_to_string(cat, seq1) + " and " + fincat::seq_to_string(cat, *seq2) +
                        ", a = " + fincat::mor_to_string(cat, a) + ", c = " + fincat::mor_to_string(cat, c) +
                        ", b = " + fincat::mor_to_string(cat, bad_b));
            return rep;
          }
        }
      }
    }
  }
  rep.add("extension", Verdict::Pass, "checked over canonical member pairs with weak-equivalence ends");
  return rep;
}

std::vector<int> acyclics(const Structure& s, int bound) {
  const FinCategory& cat = *s.cat;
  const MemberSet& weq = s.weq.members(bound);
  std::vector<int> out;
  for (int i = 0; i < cat.n(); ++i)
    if (weq.contains(zero_mor(cat, Obj{}, Obj{{i}}))) out.push_back(i);
  return out;
}

Structure restrict_to_acyclics(const Structure& s, int bound) {
  const FinCategory& cat = *s.cat;
  std::vector<int> ac = acyclics(s, bound);
  Structure out;
  out.cat = s.cat;
  out.name = s.name + "^W";
  std::vector<SequenceTriple> gens;
  for (const auto& g : s.seq->generators())
    if (all_in(g.A.parts, ac) && all_in(g.B.parts, ac) && all_in(g.C.parts, ac)) gens.push_back(g);
  out.seq = std::make_shared<SeqClass>(s.cat, gens, s.seq->include_splits());
  // The restricted weak equivalences: intersect by object support. For
  // iso-only and generated kinds this is again a class of the same kind.
  switch (s.weq.spec().kind) {
    case WeqSpec::Kind::IsoOnly:
      out.weq = MorClass::iso_only(s.cat);
      break;
    case WeqSpec::Kind::Generated: {
      std::vector<Mor> gens_w;
      for (const Mor& w : s.weq.spec().generators)
        if (all_in(w.src.parts, ac) && all_in(w.dst.parts, ac)) gens_w.push_back(w);
      out.weq = MorClass::generated(s.cat, gens_w, s.weq.spec().depth, s.weq.spec().include_isos);
      break;
    }
    case WeqSpec::Kind::Predicate:
      throw fincat::ValidationError("restriction of predicate weak equivalences is not supported");
  }
  (void)cat;
  return out;
}

DerivedClasses derived_classes(const Structure& s, int bound) {
  const FinCategory& cat = *s.cat;
  const MemberSet& weq = s.weq.members(bound);
  DerivedClasses out;
  MemberSet cofibs = enumerate_cofibrations(s, bound);
  MemberSet fibs = enumerate_fibrations(s, bound);
  std::vector<int> ac = acyclics(s, bound);
  for (const Mor& f : cofibs.all())
    if (weq.contains(f)) {
      out.lac.push_back(f);
      if (fincat::is_section(cat, f)) out.lac_sec.push_back(f);
    }
  for (const Mor& g : fibs.all())
    if (weq.contains(g)) {
      out.rac.push_back(g);
      // in T iff some member sequence ending with g has acyclic first term
      std::vector<SeqClass::Decomposition> decomps;
      s.seq->decompositions_bc(g.src, g.dst, decomps);
      for (const auto& d : decomps) {
        SequenceTriple model = s.seq->assemble(d);
        if (!all_in(model.A.parts, ac)) continue;
        if (fincat::mor_isomorphic(cat, g, model.g)) {
          out.t.push_back(g);
          break;
        }
      }
    }
  return out;
}

bool is_waldhausen(const Structure& s, int bound) {
  const FinCategory& cat = *s.cat;
  for (const auto& m : s.seq->canonical_members(bound, 2))
    if (!fincat::is_cokernel(cat, m.f, m.g)) return false;
  return true;
}

}  // namespace k0wb::wwald
