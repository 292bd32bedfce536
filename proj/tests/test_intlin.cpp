#include <random>

#include "doctest.h"
#include "k0wb/intlin.hpp"
#include "oracles.hpp"

using namespace k0wb::intlin;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int max_dim, int max_abs) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  std::uniform_int_distribution<int> entry(-max_abs, max_abs);
  IntMatrix m(dim(rng), dim(rng));
  for (auto& e : m.entries) e = entry(rng);
  return m;
}

void check_smith_invariants(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  CHECK(s.U * a * s.V == s.D);
  if (a.rows > 0) CHECK(abs(det(s.U)) == 1);
  if (a.cols > 0) CHECK(abs(det(s.V)) == 1);
  // diagonal shape and divisibility chain with trailing zeros
  for (int r = 0; r < s.D.rows; ++r)
    for (int c = 0; c < s.D.cols; ++c)
      if (r != c) CHECK(s.D.at(r, c) == 0);
  for (size_t i = 0; i + 1 < s.invariant_factors.size(); ++i) {
    const Int& a0 = s.invariant_factors[i];
    const Int& a1 = s.invariant_factors[i + 1];
    if (a0 == 0) CHECK(a1 == 0);
    if (a0 != 0 && a1 != 0) CHECK(a1 % a0 == 0);
  }
}

}  // namespace

TEST_CASE("smith normal form: pinned examples") {
  SmithDecomposition id3 = smith_normal_form(IntMatrix::identity(3));
  CHECK(id3.invariant_factors == std::vector<Int>{1, 1, 1});
  CHECK(id3.D == IntMatrix::identity(3));

  SmithDecomposition m = smith_normal_form(IntMatrix{{2, 4}, {6, 8}});
  CHECK(m.invariant_factors == std::vector<Int>{2, 4});

  SmithDecomposition z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.invariant_factors == std::vector<Int>{0, 0});
  CHECK(z.D.is_zero());

  SmithDecomposition e = smith_normal_form(IntMatrix(0, 0));
  CHECK(e.invariant_factors.empty());
}

TEST_CASE("smith normal form: decomposition invariants on random matrices") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) check_smith_invariants(random_matrix(rng, 5, 9));
}

TEST_CASE("smith normal form agrees with gcd-of-minors oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 5);
    CHECK(smith_normal_form(a).invariant_factors == oracles::invariant_factors_by_minors(a));
  }
}

TEST_CASE("product of invariant factors equals |det| for nonsingular square matrices") {
  std::mt19937 rng(99);
  int checked = 0;
  while (checked < 50) {
    IntMatrix a = random_matrix(rng, 4, 6);
    if (a.rows != a.cols) continue;
    Int d = det(a);
    if (d == 0) continue;
    Int prod = 1;
    for (const Int& f : smith_normal_form(a).invariant_factors) prod *= f;
    CHECK(prod == abs(d));
    ++checked;
  }
}

TEST_CASE("solve_integer") {
  auto x = solve_integer(IntMatrix{{2}}, {Int(4)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);

  CHECK_FALSE(solve_integer(IntMatrix{{2}}, {Int(3)}).has_value());

  auto y = solve_integer(IntMatrix{{1, 1}, {0, 2}}, {Int(3), Int(4)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] == 1);
  CHECK((*y)[1] == 2);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix a = random_matrix(rng, 4, 5);
    std::uniform_int_distribution<int> entry(-6, 6);
    std::vector<Int> b(a.rows);
    for (auto& e : b) e = entry(rng);
    auto sol = solve_integer(a, b);
    if (sol.has_value()) {
      for (int r = 0; r < a.rows; ++r) {
        Int acc = 0;
        for (int c = 0; c < a.cols; ++c) acc += a.at(r, c) * (*sol)[c];
        CHECK(acc == b[r]);
      }
    }
  }
}

TEST_CASE("group_from_presentation canonical forms") {
  AbGroup free2 = group_from_presentation(2, IntMatrix(0, 2));
  CHECK(free2.free_rank == 2);
  CHECK(free2.torsion.empty());

  AbGroup g = group_from_presentation(3, IntMatrix{{1, -1, 1}});
  CHECK(g.free_rank == 2);
  CHECK(g.torsion.empty());

  AbGroup z2 = group_from_presentation(1, IntMatrix{{2}});
  CHECK(z2.free_rank == 0);
  CHECK(z2.torsion == std::vector<Int>{2});

  AbGroup mixed = group_from_presentation(3, IntMatrix{{2, 0, 0}, {0, 12, 0}});
  CHECK(mixed.free_rank == 1);
  CHECK(mixed.torsion == std::vector<Int>{2, 12});
}

TEST_CASE("group presentation is invariant under appending row combinations") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> entry(-4, 4);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    int gens = 1 + trial % 4;
    int rels = trial % 3 + 1;
    IntMatrix r(rels, gens);
    for (auto& e : r.entries) e = entry(rng);
    AbGroup g = group_from_presentation(gens, r);

    IntMatrix r2 = r;
    std::vector<Int> extra(gens, Int(0));
    for (int i = 0; i < rels; ++i) {
      Int c = coeff(rng);
      for (int j = 0; j < gens; ++j) extra[j] += c * r.at(i, j);
    }
    r2.append_row(extra);
    AbGroup g2 = group_from_presentation(gens, r2);
    CHECK(g.same_invariants(g2));
  }
}

TEST_CASE("canonical coordinates respect the relations") {
  AbGroup g = group_from_presentation(3, IntMatrix{{1, -1, 1}});
  CHECK(g.element_is_zero({Int(1), Int(-1), Int(1)}));
  CHECK_FALSE(g.element_is_zero({Int(1), Int(0), Int(0)}));

  AbGroup z2 = group_from_presentation(1, IntMatrix{{2}});
  CHECK(z2.element_is_zero({Int(2)}));
  CHECK(z2.element_is_zero({Int(-4)}));
  CHECK_FALSE(z2.element_is_zero({Int(1)}));
}

TEST_CASE("check_right_exact: pinned examples") {
  AbGroup z = group_from_presentation(1, IntMatrix(0, 1));
  AbGroup z_mod2 = group_from_presentation(1, IntMatrix{{2}});

  // Z --0--> Z --id--> Z : exact (kernel of id is 0 = image of 0), but not surjective? id is.
  GroupHom zero = make_hom(z, z, IntMatrix{{0}});
  GroupHom id = make_hom(z, z, IntMatrix{{1}});
  CHECK(check_right_exact(zero, id).ok);

  // Z --*2--> Z --proj--> Z/2 : textbook right exact
  GroupHom mul2 = make_hom(z, z, IntMatrix{{2}});
  GroupHom proj = make_hom(z, z_mod2, IntMatrix{{1}});
  CHECK(check_right_exact(mul2, proj).ok);

  // Z --id--> Z --id--> Z : fails (kernel 0 but image everything... g not with ker=im)
  CHECK_FALSE(check_right_exact(id, id).ok);

  AbGroup z2 = group_from_presentation(2, IntMatrix(0, 2));
  GroupHom incl = make_hom(z, z2, IntMatrix{{1}, {0}});
  GroupHom projection = make_hom(z2, z, IntMatrix{{0, 1}});
  CHECK(check_right_exact(incl, projection).ok);

  CHECK_THROWS_AS(check_right_exact(incl, id), std::invalid_argument);
}

TEST_CASE("hom well-definedness is verified, not assumed") {
  AbGroup z_mod2 = group_from_presentation(1, IntMatrix{{2}});
  AbGroup z = group_from_presentation(1, IntMatrix(0, 1));
  CHECK_THROWS_AS(make_hom(z_mod2, z, IntMatrix{{1}}), std::invalid_argument);
  CHECK_NOTHROW(make_hom(z, z_mod2, IntMatrix{{1}}));
  AbGroup z_mod4 = group_from_presentation(1, IntMatrix{{4}});
  CHECK_NOTHROW(make_hom(z_mod2, z_mod4, IntMatrix{{2}}));
  CHECK_THROWS_AS(make_hom(z_mod2, z_mod4, IntMatrix{{1}}), std::invalid_argument);
}

TEST_CASE("check_right_exact agrees with brute-force oracle on small finite groups") {
  std::mt19937 rng(31337);
  std::vector<std::vector<long>> group_shapes = {{2}, {4}, {2, 2}, {8}, {2, 4}, {3}, {9}, {2, 2, 2}, {6}, {2, 8}, {4, 4}, {3, 3}};
  std::uniform_int_distribution<size_t> pick(0, group_shapes.size() - 1);

  auto as_abgroup = [](const std::vector<long>& moduli) {
    IntMatrix rel(static_cast<int>(moduli.size()), static_cast<int>(moduli.size()));
    for (size_t i = 0; i < moduli.size(); ++i) rel.at(static_cast<int>(i), static_cast<int>(i)) = moduli[i];
    return group_from_presentation(static_cast<long>(moduli.size()), rel);
  };

  int ran = 0;
  for (int trial = 0; trial < 500 && ran < 200; ++trial) {
    oracles::FiniteGroup a{group_shapes[pick(rng)]}, b{group_shapes[pick(rng)]}, c{group_shapes[pick(rng)]};
    if (a.order() > 64 || b.order() > 64 || c.order() > 64) continue;

    // Random well-defined homs: entry (i,j) must be a multiple of m_i / gcd(m_i, n_j).
    auto random_hom = [&](const oracles::FiniteGroup& src, const oracles::FiniteGroup& dst) {
      std::vector<std::vector<long>> m(dst.moduli.size(), std::vector<long>(src.moduli.size(), 0));
      for (size_t i = 0; i < dst.moduli.size(); ++i)
        for (size_t j = 0; j < src.moduli.size(); ++j) {
          long step = dst.moduli[i] / std::gcd(dst.moduli[i], src.moduli[j]);
          long slots = dst.moduli[i] / step;
          std::uniform_int_distribution<long> v(0, slots - 1);
          m[i][j] = step * v(rng);
        }
      return m;
    };
    auto fm = random_hom(a, b);
    auto gm = random_hom(b, c);

    auto to_intmatrix = [](const std::vector<std::vector<long>>& m, int rows, int cols) {
      IntMatrix out(rows, cols);
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = m[i][j];
      return out;
    };
    AbGroup ga = as_abgroup(a.moduli), gb = as_abgroup(b.moduli), gc = as_abgroup(c.moduli);
    GroupHom f = make_hom(ga, gb, to_intmatrix(fm, gb.gens, ga.gens));
    GroupHom g = make_hom(gb, gc, to_intmatrix(gm, gc.gens, gb.gens));

    auto fast = check_right_exact(f, g);
    auto brute = oracles::brute_force_right_exact(a, b, c, fm, gm);
    CHECK(fast.composite_zero == brute.composite_zero);
    CHECK(fast.surjective == brute.surjective);
    CHECK(fast.kernel_equals_image == brute.kernel_equals_image);
    CHECK(fast.ok == brute.ok);
    ++ran;
  }
  CHECK(ran == 200);
}

TEST_CASE("lattice utilities") {
  CHECK(lattice_equal(IntMatrix{{1, 0}, {0, 1}}, IntMatrix{{1, 1}, {0, 1}}));
  CHECK_FALSE(lattice_equal(IntMatrix{{2, 0}, {0, 1}}, IntMatrix{{1, 0}, {0, 1}}));
  CHECK(lattice_contains(IntMatrix{{2, 0}, {0, 3}}, {Int(4), Int(3)}));
  CHECK_FALSE(lattice_contains(IntMatrix{{2, 0}, {0, 3}}, {Int(1), Int(0)}));

  IntMatrix k = kernel_lattice(IntMatrix{{1, 1, 1}});
  CHECK(k.rows == 2);
  for (int r = 0; r < k.rows; ++r) {
    Int acc = k.at(r, 0) + k.at(r, 1) + k.at(r, 2);
    CHECK(acc == 0);
  }
}
