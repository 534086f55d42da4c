#include <catch2/catch.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "palperm/group.hpp"

using namespace palperm;
using palperm::testing::all_perms;
using palperm::testing::random_perm;

namespace {

Permutation perm(std::vector<int> images) {
  return Permutation::from_one_line(std::move(images));
}

}  // namespace

TEST_CASE("closure") {
  SECTION("sigma_1 and tau_1 generate all of S_3") {
    const std::vector<Permutation> gens{perm({2, 3, 1}), perm({1, 3, 2})};
    const GroupClosure cl = closure(3, gens);
    CHECK(cl.order() == 6);
    CHECK(cl.elements == all_perms(3));
  }

  SECTION("the identity generates the trivial group") {
    const std::vector<Permutation> gens{Permutation::identity(3)};
    const GroupClosure cl = closure(3, gens);
    CHECK(cl.order() == 1);
    CHECK(cl.elements.front().is_identity());
  }

  SECTION("the four Klein elements close at order 4") {
    const auto k4 = klein_four();
    const GroupClosure cl = closure(4, k4);
    CHECK(cl.order() == 4);
    auto sorted = k4;
    std::sort(sorted.begin(), sorted.end());
    CHECK(cl.elements == sorted);
  }

  SECTION("closed under composition and inverse, contains the identity") {
    const std::vector<Permutation> gens{perm({2, 3, 4, 1}), perm({2, 1, 3, 4})};
    const GroupClosure cl = closure(4, gens);
    CHECK(cl.contains(Permutation::identity(4)));
    for (const auto& g : cl.generators) CHECK(cl.contains(g));
    for (const auto& a : cl.elements) {
      CHECK(cl.contains(inverse(a)));
      for (const auto& b : cl.elements) CHECK(cl.contains(compose(a, b)));
    }
  }

  SECTION("idempotence: closing a closure changes nothing") {
    const std::vector<Permutation> gens{perm({2, 3, 1, 4}), perm({1, 2, 4, 3})};
    const GroupClosure once = closure(4, gens);
    const GroupClosure twice = closure(4, once.elements);
    CHECK(once.elements == twice.elements);
  }

  SECTION("Lagrange sanity: order divides n! for random generator sets") {
    std::mt19937_64 rng(59);
    for (int n = 2; n <= 6; ++n) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<Permutation> gens;
        const int count = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < count; ++i) gens.push_back(random_perm(n, rng));
        const GroupClosure cl = closure(n, gens);
        REQUIRE(factorial(n) % cl.order() == 0);
      }
    }
  }

  SECTION("degree mismatch is rejected") {
    const std::vector<Permutation> gens{perm({2, 1})};
    CHECK_THROWS_AS(closure(3, gens), InputError);
  }
}

TEST_CASE("dihedral generators") {
  SECTION("displayed one-line forms") {
    const auto [s3, t3] = dihedral_generators(3);
    CHECK(s3 == perm({2, 3, 1}));
    CHECK(t3 == perm({1, 3, 2}));
    const auto [s4, t4] = dihedral_generators(4);
    CHECK(s4 == perm({2, 3, 4, 1}));
    CHECK(t4 == perm({1, 4, 3, 2}));
  }

  SECTION("sigma is an n-cycle") {
    const auto [s5, t5] = dihedral_generators(5);
    CHECK(power(s5, 5) == Permutation::identity(5));
    CHECK(power(s5, 4) != Permutation::identity(5));
    CHECK(compose(t5, t5) == Permutation::identity(5));
  }

  CHECK_THROWS_AS(dihedral_generators(2), InputError);
  CHECK_THROWS_AS(dihedral_generators(0), InputError);
}

TEST_CASE("verify_dihedral") {
  SECTION("all checks pass for n in 3..12") {
    for (int n = 3; n <= 12; ++n) {
      const DihedralReport r = verify_dihedral(n);
      CAPTURE(n);
      CHECK(r.order == 2 * static_cast<std::uint64_t>(n));
      CHECK(r.order_ok);
      CHECK(r.relations_ok);
      CHECK(r.sigma_rgspp);
      CHECK(r.tau_lgspp);
      CHECK(r.all_ok());
    }
  }

  SECTION("for n = 3 the dihedral closure is all of S_3") {
    const auto [sigma, tau] = dihedral_generators(3);
    const std::vector<Permutation> gens{sigma, tau};
    CHECK(closure(3, gens).elements == all_perms(3));
  }
}

TEST_CASE("verify_inverse_closure") {
  SECTION("named cases") {
    CHECK(verify_inverse_closure(3, PalinClass::rgspp).holds);
    CHECK(verify_inverse_closure(3, PalinClass::rgspp).counterexamples.empty());
    CHECK(verify_inverse_closure(2, PalinClass::lpp).holds);
    CHECK(verify_inverse_closure(5, PalinClass::lgspp).holds);
  }

  SECTION("lpp, rpp and lgspp closure holds for n in 2..7") {
    for (int n = 2; n <= 7; ++n)
      for (const PalinClass cls :
           {PalinClass::lpp, PalinClass::rpp, PalinClass::lgspp}) {
        const auto r = verify_inverse_closure(n, cls);
        CAPTURE(n, to_string(cls));
        CHECK(r.holds);
        CHECK(r.counterexamples.empty());
      }
  }

  SECTION("rgspp closure fails from n = 4 on, with verified counterexamples") {
    for (int n = 2; n <= 3; ++n)
      CHECK(verify_inverse_closure(n, PalinClass::rgspp).holds);
    for (int n = 4; n <= 7; ++n) {
      const auto r = verify_inverse_closure(n, PalinClass::rgspp);
      CAPTURE(n);
      CHECK_FALSE(r.holds);
      REQUIRE_FALSE(r.counterexamples.empty());
      // every reported counterexample is real: the flag flips and the
      // brute-force oracle agrees with the recognizer on both sides
      for (const auto& p : r.counterexamples) {
        const auto q = inverse(p);
        REQUIRE(classify(p).rgspp != classify(q).rgspp);
        REQUIRE(is_gsp(rpv(p)) == is_gsp_oracle(rpv(p)));
        REQUIRE(is_gsp(rpv(q)) == is_gsp_oracle(rpv(q)));
      }
    }
    const auto r4 = verify_inverse_closure(4, PalinClass::rgspp);
    REQUIRE(r4.counterexamples.size() == 4);
    CHECK(r4.counterexamples.front() == perm({2, 4, 3, 1}));
  }

  SECTION("guards") {
    CHECK_THROWS_AS(verify_inverse_closure(10, PalinClass::lpp), GuardError);
    CHECK_THROWS_AS(verify_inverse_closure(0, PalinClass::lpp), InputError);
  }

  SECTION("class names") {
    CHECK(palin_class_from_string("rgspp") == PalinClass::rgspp);
    CHECK_THROWS_AS(palin_class_from_string("gspp"), InputError);
  }
}

TEST_CASE("klein_four") {
  const auto k4 = klein_four();
  REQUIRE(k4.size() == 4);
  CHECK(k4[0] == perm({1, 2, 3, 4}));
  CHECK(k4[1] == perm({3, 4, 1, 2}));
  CHECK(k4[2] == perm({2, 1, 4, 3}));
  CHECK(k4[3] == perm({4, 3, 2, 1}));

  SECTION("every element is an involution") {
    for (const auto& d : k4)
      CHECK(compose(d, d) == Permutation::identity(4));
  }

  SECTION("the GSP classification separates the three involutions") {
    const auto d1 = classify(k4[1]);
    CHECK((d1.rgspp && !d1.lgspp));
    const auto d2 = classify(k4[2]);
    CHECK((d2.lgspp && !d2.rgspp));
    const auto d3 = classify(k4[3]);
    CHECK(d3.gspp);
  }
}
