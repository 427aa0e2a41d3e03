#include <gtest/gtest.h>

#include "support.hpp"
#include "twuality/errors.hpp"
#include "twuality/group.hpp"

using namespace twuality;
using twtest::Rng;

namespace {

SetSystem sys(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<ElementSet> family;
  for (auto s : sets) family.push_back(ElementSet::of(s));
  return SetSystem(n, family);
}

FlipVector fv(std::initializer_list<Flip> e) { return FlipVector(std::vector<Flip>(e)); }

Perm one_line(std::initializer_list<int> images) {
  const std::vector<int> v(images);
  return Perm::from_one_line(v);
}

} // namespace

TEST(Perm, Construction) {
  EXPECT_TRUE(Perm(4).is_identity());
  EXPECT_THROW(one_line({1, 1}), ValidationError);
  EXPECT_THROW(one_line({0, 1}), ValidationError);
  EXPECT_THROW(Perm::from_cycles(3, {{1, 4}}), ValidationError);
  EXPECT_THROW(Perm::from_cycles(3, {{1, 2}, {2, 3}}), ValidationError);
  const auto c = Perm::from_cycles(3, {{1, 2, 3}});
  EXPECT_EQ(c.one_line(), (std::vector<int>{2, 3, 1}));
  EXPECT_EQ(c.to_cycle_string(), "(1 2 3)");
  EXPECT_EQ(Perm::transposition(3, 1, 3).one_line(), (std::vector<int>{3, 2, 1}));
}

TEST(Perm, CompositionAndInverse) {
  const auto p = one_line({2, 3, 1});
  const auto q = one_line({2, 1, 3});
  EXPECT_EQ((p * q)(1), p(q(1)));
  EXPECT_TRUE((p * p.inverse()).is_identity());
  EXPECT_EQ(all_perms(4).size(), 24u);
  EXPECT_EQ(all_perms(0).size(), 1u);
  EXPECT_EQ(p(ElementSet::of({1, 3})), ElementSet::of({1, 2}));
}

TEST(Perm, Cycles) {
  const auto p = Perm::from_cycles(5, {{3, 5}, {1, 4, 2}});
  const std::vector<std::vector<int>> expected{{1, 4, 2}, {3, 5}};
  EXPECT_EQ(p.cycles(), expected);
}

TEST(FlipVector, Uniform) {
  EXPECT_EQ(fv({Flip::Star, Flip::Star}).uniform_entry(), Flip::Star);
  EXPECT_FALSE(fv({Flip::Identity, Flip::Identity}).uniform_entry().has_value());
  EXPECT_FALSE(fv({Flip::Star, Flip::Plus}).uniform_entry().has_value());
  EXPECT_TRUE(FlipVector::identity(3).is_identity());
}

TEST(VecReindex, Examples) {
  const auto g = fv({Flip::Star, Flip::Plus, Flip::StarBar});
  EXPECT_EQ(vec_reindex(g, Perm(3)), g);
  const auto p = Perm::from_cycles(3, {{1, 2, 3}});
  EXPECT_EQ(vec_reindex(g, p), fv({Flip::StarBar, Flip::Star, Flip::Plus}));
  EXPECT_EQ(vec_reindex(vec_reindex(g, p), p.inverse()), g);
  EXPECT_THROW(vec_reindex(g, Perm(2)), ValidationError);
}

TEST(VecReindex, HomomorphismLaw) {
  Rng rng(31);
  for (int t = 0; t < 500; ++t) {
    const int n = 1 + t % 6;
    const auto g = twtest::random_flip_vector(rng, n);
    const auto p1 = twtest::random_perm(rng, n);
    const auto p2 = twtest::random_perm(rng, n);
    EXPECT_EQ(vec_reindex(vec_reindex(g, p2), p1), vec_reindex(g, p1 * p2));
  }
}

TEST(VecReindex, ActionOfReindexedVector) {
  // Gamma(g pi^-1) applied to D equals applying g_i at pi(i) for every i.
  Rng rng(32);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 5;
    const auto d = twtest::random_system(rng, n);
    const auto g = twtest::random_flip_vector(rng, n);
    const auto p = twtest::random_perm(rng, n);
    SetSystem expected = d;
    for (int i = 1; i <= n; ++i) expected = apply_flip(expected, g.at(i), p(i));
    EXPECT_EQ(apply_vector(d, vec_reindex(g, p)), expected);
  }
}

TEST(SemidirectProduct, Examples) {
  Rng rng(33);
  for (int t = 0; t < 100; ++t) {
    const auto x = twtest::random_element(rng, 1 + t % 6);
    EXPECT_TRUE(sd_mul(x, sd_inv(x)).is_identity());
    EXPECT_TRUE(sd_mul(sd_inv(x), x).is_identity());
    EXPECT_EQ(sd_mul(x, TwualityElement::identity(x.size())), x);
  }
  const TwualityElement a{fv({Flip::Star, Flip::Plus}), Perm(2)};
  const TwualityElement b{fv({Flip::Plus, Flip::Plus}), Perm(2)};
  const auto ab = sd_mul(a, b);
  EXPECT_EQ(ab.gvec, fv({Flip::StarPlus, Flip::Identity}));
  EXPECT_TRUE(ab.perm.is_identity());
  EXPECT_THROW(sd_mul(a, TwualityElement::identity(3)), ValidationError);
}

TEST(SemidirectProduct, InverseFormula) {
  Rng rng(34);
  for (int t = 0; t < 200; ++t) {
    const auto x = twtest::random_element(rng, 1 + t % 6);
    const auto inv = sd_inv(x);
    EXPECT_EQ(inv.perm, x.perm.inverse());
    EXPECT_EQ(inv.gvec, vec_reindex(inverse(x.gvec), x.perm.inverse()));
  }
}

TEST(SemidirectProduct, Associativity) {
  Rng rng(35);
  for (int t = 0; t < 2000; ++t) {
    const int n = 1 + t % 6;
    const auto a = twtest::random_element(rng, n);
    const auto b = twtest::random_element(rng, n);
    const auto c = twtest::random_element(rng, n);
    EXPECT_EQ(sd_mul(sd_mul(a, b), c), sd_mul(a, sd_mul(b, c)));
  }
}

TEST(Act, Examples) {
  const auto d = sys(3, {{3}, {1, 3}, {2, 3}});
  EXPECT_EQ(act({fv({Flip::Star, Flip::Plus, Flip::Plus}), Perm(3)}, d), d);
  EXPECT_EQ(act({FlipVector::identity(2), Perm::transposition(2, 1, 2)}, sys(2, {{}, {1}, {1, 2}})),
            sys(2, {{}, {2}, {1, 2}}));
  EXPECT_EQ(act(TwualityElement::identity(3), d), d);
  EXPECT_THROW(act(TwualityElement::identity(2), d), ValidationError);
}

TEST(Act, ActionLaws) {
  Rng rng(36);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 5;
    const auto d = twtest::random_system(rng, n);
    const auto a = twtest::random_element(rng, n);
    const auto b = twtest::random_element(rng, n);
    EXPECT_EQ(act(sd_mul(a, b), d), act(a, act(b, d)));
    EXPECT_EQ(act(TwualityElement::identity(n), d), d);
  }
}

TEST(Act, IotaActionComposes) {
  Rng rng(37);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 5;
    const auto d = twtest::random_system(rng, n);
    const auto g = twtest::random_flip_vector(rng, n);
    const auto h = twtest::random_flip_vector(rng, n);
    EXPECT_EQ(apply_vector(d, compose(g, h)), apply_vector(apply_vector(d, h), g));
  }
}

TEST(Act, RelabelComposes) {
  Rng rng(38);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 5;
    const auto d = twtest::random_system(rng, n);
    const auto p = twtest::random_perm(rng, n);
    const auto q = twtest::random_perm(rng, n);
    EXPECT_EQ(relabel(d, p * q), relabel(relabel(d, q), p));
  }
}
