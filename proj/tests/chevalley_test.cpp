#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <stdexcept>
#include <vector>

#include "ck/chevalley.hpp"
#include "ck/rootsys.hpp"

using namespace ck;

namespace {

std::vector<int> all_keys(const RootSystem& rs) {
  std::vector<int> keys;
  for (int i = 0; i < rs.num_positive(); ++i) keys.push_back(root_key(i));
  for (int i = 0; i < rs.num_positive(); ++i) keys.push_back(root_key(i, true));
  return keys;
}

LieElement lie_h(const RootSystem& rs, int i) {
  LieElement x;
  RatVec c(rs.rank(), 0);
  c[i] = 1;
  x.add_cartan(rs.rank(), c, 1);
  return x;
}

}  // namespace

TEST_CASE("structure constant magnitudes are p+1 and antisymmetric") {
  for (const char* t : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "B2xG2"}) {
    const RootSystem rs = build_root_system(t);
    const ChevalleyTable ch(rs);
    const std::vector<int> keys = all_keys(rs);
    for (const int a : keys)
      for (const int b : keys) {
        if (a == -b) {
          CHECK_THROWS_AS(ch.structure_constant(a, b), std::invalid_argument);
          continue;
        }
        const long long n = ch.structure_constant(a, b);
        CHECK(n == -ch.structure_constant(b, a));
        CHECK(n == -ch.structure_constant(-a, -b));
        // Sum of the two signed roots.
        std::vector<int> s(rs.rank());
        for (int k = 0; k < rs.rank(); ++k)
          s[k] = (key_negative(a) ? -1 : 1) * rs.root(key_index(a)).coeffs[k] +
                 (key_negative(b) ? -1 : 1) * rs.root(key_index(b)).coeffs[k];
        if (rs.is_root(s)) {
          const int expect = ch.string_down(a, b) + 1;
          CHECK(n != 0);
          CHECK((n < 0 ? -n : n) == expect);
        } else {
          CHECK(n == 0);
        }
      }
  }
}

TEST_CASE("extraspecial pairs carry the positive sign") {
  for (const char* t : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
    const RootSystem rs = build_root_system(t);
    const ChevalleyTable ch(rs);
    for (int chi = rs.rank(); chi < rs.num_positive(); ++chi) {
      // Minimal r with chi - phi_r a positive root; roots are height-ordered,
      // so r1 is a simple root.
      for (int r = 0; r < rs.num_positive(); ++r) {
        std::vector<int> diff = rs.root(chi).coeffs;
        for (int k = 0; k < rs.rank(); ++k) diff[k] -= rs.root(r).coeffs[k];
        const int s = rs.index_of(diff);
        if (s <= r) continue;
        CHECK(r < rs.rank());
        CHECK(ch.structure_constant(root_key(r), root_key(s)) > 0);
        break;
      }
    }
  }
}

TEST_CASE("Jacobi identity holds on the whole basis") {
  for (const char* t : {"A2", "A3", "B2", "B3", "C3", "G2"}) {
    const RootSystem rs = build_root_system(t);
    const ChevalleyTable ch(rs);
    std::vector<LieElement> basis;
    for (int i = 0; i < rs.rank(); ++i) basis.push_back(lie_h(rs, i));
    for (const int k : all_keys(rs)) basis.push_back(lie_e(k));
    for (const LieElement& x : basis)
      for (const LieElement& y : basis)
        for (const LieElement& z : basis) {
          LieElement sum = ch.bracket(x, ch.bracket(y, z));
          const LieElement t2 = ch.bracket(y, ch.bracket(z, x));
          const LieElement t3 = ch.bracket(z, ch.bracket(x, y));
          if (!t2.cartan.empty() || !sum.cartan.empty() || !t3.cartan.empty()) {
            sum.add_cartan(rs.rank(), t2.cartan.empty() ? RatVec(rs.rank(), 0) : t2.cartan, 1);
            sum.add_cartan(rs.rank(), t3.cartan.empty() ? RatVec(rs.rank(), 0) : t3.cartan, 1);
          }
          for (const auto& [key, c] : t2.parts) sum.add_part(key, c);
          for (const auto& [key, c] : t3.parts) sum.add_part(key, c);
          if (!sum.is_zero()) {
            FAIL_CHECK(("Jacobi fails for " + std::string(t) + ": " + lie_str(rs, x) +
                        " ; " + lie_str(rs, y) + " ; " + lie_str(rs, z)));
            return;
          }
        }
  }
}

TEST_CASE("frozen constants in small rank") {
  const RootSystem a2 = build_root_system("A2");
  const ChevalleyTable cha2(a2);
  const int th = a2.index_of({1, 1});
  CHECK(cha2.structure_constant(root_key(0), root_key(1)) == 1);
  // [e_theta, e_{-alpha_1}] = -e_{alpha_2}, as in the 3x3 matrix model.
  CHECK(cha2.structure_constant(root_key(th), root_key(0, true)) == -1);
  CHECK(cha2.structure_constant(root_key(0), root_key(th, true)) == -1);

  const RootSystem b2 = build_root_system("B2");
  const ChevalleyTable chb2(b2);
  const int ab = b2.index_of({1, 1});
  CHECK(chb2.structure_constant(root_key(0), root_key(1)) == 1);
  CHECK(chb2.string_down(root_key(1), root_key(ab)) == 1);
  long long n = chb2.structure_constant(root_key(1), root_key(ab));
  CHECK((n == 2 || n == -2));

  const RootSystem g2 = build_root_system("G2");
  const ChevalleyTable chg2(g2);
  auto mag = [&](std::vector<int> a, std::vector<int> b) {
    const long long v =
        chg2.structure_constant(root_key(g2.index_of(a)), root_key(g2.index_of(b)));
    return v < 0 ? -v : v;
  };
  CHECK(mag({1, 0}, {0, 1}) == 1);
  CHECK(mag({1, 0}, {1, 1}) == 2);
  CHECK(mag({1, 0}, {2, 1}) == 3);
  CHECK(mag({0, 1}, {3, 1}) == 1);
  CHECK(mag({1, 1}, {2, 1}) == 3);
  CHECK(chg2.string_down(root_key(0), root_key(g2.index_of({2, 1}))) == 2);
}

TEST_CASE("coroots") {
  const RootSystem a2 = build_root_system("A2");
  const ChevalleyTable cha2(a2);
  CHECK(cha2.coroot(a2.index_of({1, 1})) == RatVec{1, 1});
  CHECK(cha2.coroot(0) == RatVec{1, 0});

  const RootSystem b2 = build_root_system("B2");
  CHECK(ChevalleyTable(b2).coroot(b2.index_of({1, 2})) == RatVec{1, 1});

  const RootSystem g2 = build_root_system("G2");
  const ChevalleyTable chg2(g2);
  CHECK(chg2.coroot(g2.index_of({3, 2})) == RatVec{1, 2});
  // <phi, phi^vee> = 2 for every positive root.
  for (int i = 0; i < g2.num_positive(); ++i)
    CHECK(chg2.eval_on_cartan(chg2.coroot(i), root_key(i)) == 2);
}

TEST_CASE("brackets with the Cartan subalgebra") {
  const RootSystem rs = build_root_system("B2");
  const ChevalleyTable ch(rs);
  const int th = rs.index_of({1, 2});
  LieElement h = lie_h(rs, 1);  // alpha_2^vee
  // [h, e_phi] = <phi, alpha_2^vee> e_phi.
  LieElement out = ch.bracket(h, lie_e(root_key(th)));
  REQUIRE(out.parts.size() == 1);
  CHECK(out.parts.at(root_key(th)) == 2);
  out = ch.bracket(lie_e(root_key(th)), h);
  CHECK(out.parts.at(root_key(th)) == -2);
  // [e_phi, e_{-phi}] = phi^vee.
  out = ch.bracket(lie_e(root_key(th)), lie_e(root_key(th, true)));
  CHECK(out.parts.empty());
  CHECK(out.cartan == ch.coroot(th));
  // and the opposite order negates it.
  out = ch.bracket(lie_e(root_key(th, true)), lie_e(root_key(th)));
  CHECK(out.cartan == weight_scale(-1, ch.coroot(th)));
  // [h, h'] = 0.
  CHECK(ch.bracket(h, lie_h(rs, 0)).is_zero());
}

TEST_CASE("ad powers") {
  const RootSystem a2 = build_root_system("A2");
  const ChevalleyTable ch(a2);
  const LieElement e1 = lie_e(root_key(0));
  const LieElement e2 = lie_e(root_key(1));
  LieElement out = ch.ad_pow(e1, e2, 1);
  REQUIRE(out.parts.size() == 1);
  CHECK(out.parts.at(root_key(a2.index_of({1, 1}))) == 1);
  CHECK(ch.ad_pow(e1, e2, 2).is_zero());
  CHECK_THROWS_AS(ch.ad_pow(lie_e(root_key(0, true)), e2, 1), std::invalid_argument);
  LieElement with_h;
  with_h.add_cartan(2, RatVec{1, 0}, 1);
  CHECK_THROWS_AS(ch.ad_pow(with_h, e2, 1), std::invalid_argument);
  // Nilpotency: ad e_{alpha_1} kills e_theta.
  CHECK(ch.ad_pow(e1, lie_e(root_key(a2.index_of({1, 1}))), 1).is_zero());
}

TEST_CASE("tsv dump is deterministic and complete") {
  const RootSystem rs = build_root_system("B2");
  const ChevalleyTable ch(rs);
  std::ostringstream a, b;
  ch.dump_tsv(a);
  ch.dump_tsv(b);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("phi\tpsi\tN\n", 0) == 0);
  // B2 has 8 ordered pairs of positives with root sum; doubled by sign flips
  // and joined by the mixed pairs (phi, -psi), psi != phi.
  int lines = 0;
  for (const char c : a.str())
    if (c == '\n') ++lines;
  CHECK(lines > 16);
}

TEST_CASE("larger tables build with integer constants") {
  for (const char* t : {"D4", "F4", "E6"}) {
    const RootSystem rs = build_root_system(t);
    CHECK_NOTHROW(ChevalleyTable{rs});
  }
}
