#include <gtest/gtest.h>

#include <random>

#include "dlcf/dl.hpp"

namespace dlcf {
namespace {

GroupPtr gl(int n, std::uint64_t q) { return Group::create({Family::GL, n, q}); }
GroupPtr sl(std::uint64_t q) { return Group::create({Family::SL, 2, q}); }

std::size_t identity_index(const GroupPtr& g) {
  if (g->kind() == Group::Kind::SL2) return g->index_of_label("z+1");
  std::vector<GLClass> id;
  for (int b : g->blocks()) id.push_back({GLClassPart{FrobOrbit{1, 0}, Partition::column(b)}});
  return g->index_of(ClassType{id});
}

TEST(ClassFunction, ConstantNorm) {
  for (auto g : {gl(2, 3), gl(3, 2), sl(5)}) EXPECT_EQ(inner_product(ClassFunction::constant(g, 1), ClassFunction::constant(g, 1)), Cyclo(1));
}

TEST(ClassFunction, WrongLengthAndMismatch) {
  EXPECT_THROW(ClassFunction(gl(2, 3), std::vector<Cyclo>(3)), DimensionError);
  EXPECT_THROW(inner_product(ClassFunction(gl(2, 3)), ClassFunction(gl(3, 2))), UsageError);
}

TEST(ClassFunction, NormalizedCommonLevel) {
  const auto g = gl(2, 3);
  const auto f = dl_character(g, TorusType::gl({2}), {1}).normalized();
  const auto l = f[0].level();
  for (const auto& v : f.values()) EXPECT_EQ(v.level(), l);
  EXPECT_EQ(f, dl_character(g, TorusType::gl({2}), {1}));
}

TEST(DlCharacter, Gl2F3Examples) {
  const auto g = gl(2, 3);
  const auto id = identity_index(g);
  EXPECT_EQ(dl_character(g, TorusType::gl({1, 1}), {0, 0})[id], Cyclo(4));
  for (std::uint64_t c = 0; c < 8; ++c) {
    const auto r = dl_character(g, TorusType::gl({2}), {c});
    EXPECT_EQ(r[id], Cyclo(-2));
    // split regular semisimple: eigenvalues 1 and -1
    EXPECT_TRUE(r.at(ClassType{std::vector<GLClass>{{{FrobOrbit{1, 0}, Partition{1}}, {FrobOrbit{1, 1}, Partition{1}}}}}).is_zero());
  }
}

TEST(DlCharacter, DegreeIdentity) {
  for (auto g : {gl(1, 4), gl(2, 2), gl(2, 3), gl(2, 4), gl(2, 5), gl(3, 2), gl(3, 3), gl(4, 2)}) {
    const auto id = identity_index(g);
    const Integer q = static_cast<unsigned long>(g->q());
    for (const auto& t : g->tori()) {
      const Cyclo deg(green_polynomial(Partition::column(g->spec().n), t.concatenated()).eval(q));
      for (const auto& o : g->character_orbits(t)) EXPECT_EQ(dl_character(g, t, o.rep)[id], deg) << g->name() << " " << t.to_string();
    }
  }
}

TEST(DlCharacter, Sl2Degrees) {
  for (std::uint64_t q : {3, 5, 7, 9}) {
    const auto g = sl(q);
    const auto id = identity_index(g);
    for (const auto& o : g->character_orbits(TorusType::split()))
      EXPECT_EQ(dl_character(g, TorusType::split(), o.rep)[id], Cyclo(static_cast<long>(q + 1)));
    for (const auto& o : g->character_orbits(TorusType::coxeter()))
      EXPECT_EQ(dl_character(g, TorusType::coxeter(), o.rep)[id], Cyclo(1 - static_cast<long>(q)));
  }
}

TEST(DlCharacter, TorusGroupIsTheCharacter) {
  const auto g = gl(2, 3);
  const auto t = g->torus_group(TorusType::gl({2}));
  const auto f = dl_character(t, TorusType::gl({2}), {1});
  EXPECT_EQ(f[t->index_of(ClassType{TorusElem{1}})], Cyclo::zeta(8));
  EXPECT_EQ(inner_product(f, f), Cyclo(1));
}

TEST(DlCharacter, RejectsWrongTorus) {
  EXPECT_THROW(dl_character(gl(2, 3), TorusType::gl({2, 1}), {0, 0}), UsageError);
  EXPECT_THROW(dl_character(gl(2, 3), TorusType::split(), {0}), UsageError);
  EXPECT_THROW(dl_character(gl(2, 3), TorusType::gl({1, 1}), {0}), UsageError);
}

TEST(InnerProduct, Gl2F3Examples) {
  const auto g = gl(2, 3);
  const auto rs = dl_character(g, TorusType::gl({1, 1}), {0, 0});
  EXPECT_EQ(inner_product(rs, rs), Cyclo(2));
  for (const auto& a : g->character_orbits(TorusType::gl({1, 1})))
    for (const auto& b : g->character_orbits(TorusType::gl({2})))
      EXPECT_TRUE(inner_product(dl_character(g, TorusType::gl({1, 1}), a.rep), dl_character(g, TorusType::gl({2}), b.rep)).is_zero());
}

// Gram matrix of lines is diagonal with the Weyl stabilizer orders on the diagonal.
TEST(Lines, Orthogonality) {
  for (auto g : {gl(2, 2), gl(2, 3), gl(2, 5), gl(3, 2), gl(3, 3), sl(3), sl(5), sl(7)}) {
    const auto lines = enumerate_lines(g);
    std::vector<ClassFunction> reps;
    for (const auto& l : lines) reps.push_back(l.rep);
    const auto gram = gram_matrix(reps);
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = 0; j < lines.size(); ++j) {
        if (i != j) {
          EXPECT_TRUE(gram.at(i, j).is_zero()) << g->name() << " " << lines[i].line.to_string() << " " << lines[j].line.to_string();
          continue;
        }
        if (lines[i].line.kind == GammaLine::Kind::Cuspidal) continue;
        const auto& l = lines[i].line;
        const auto m = mackey_check(g, l.torus, l.theta, l.torus, l.theta);
        EXPECT_TRUE(m.equal);
        EXPECT_EQ(gram.at(i, i), Cyclo(static_cast<long>(m.rhs)));
      }
  }
}

TEST(Lines, Counts) {
  EXPECT_EQ(enumerate_lines(gl(2, 3)).size(), 8u);
  const auto s = enumerate_lines(sl(5));
  EXPECT_EQ(s.size(), 9u);
  EXPECT_EQ(std::count_if(s.begin(), s.end(), [](const auto& l) { return l.line.kind == GammaLine::Kind::Cuspidal; }), 2);
  EXPECT_EQ(enumerate_lines(gl(3, 2)).size(), 6u);
}

TEST(Lines, UniformSpan) {
  for (auto g : {gl(2, 3), gl(3, 2), gl(2, 4), sl(5), sl(7), sl(9)}) {
    std::vector<ClassFunction> tor;
    for (const auto& l : enumerate_lines(g))
      if (l.line.kind == GammaLine::Kind::Torus) tor.push_back(l.rep);
    const auto expected = g->kind() == Group::Kind::SL2 ? g->class_count() - 2 : g->class_count();
    EXPECT_EQ(function_rank(tor), expected) << g->name();
  }
}

TEST(Lines, GeneralPositionIrreducible) {
  const auto g = gl(2, 5);
  for (const auto& o : g->character_orbits(TorusType::gl({2}))) {
    if (o.size != 2) continue;
    const auto r = dl_character(g, TorusType::gl({2}), o.rep);
    EXPECT_EQ(inner_product(r, r), Cyclo(1));
  }
}

TEST(Psi, Examples) {
  const auto g = gl(2, 3);
  for (const auto& t : theta_lines(*g)) {
    EXPECT_FALSE(t.epsilon);
    EXPECT_EQ(psi(*g, t), dense_stratum(*g));
    EXPECT_TRUE(is_principal_type(*g, t));
  }
  const auto s = sl(5);
  const auto eps = make_theta_line(*s, "U+1", true);
  EXPECT_EQ(psi(*s, eps).to_string(), "UnipCoset(+1)");
  EXPECT_FALSE(is_principal_type(*s, eps));
  EXPECT_EQ(psi(*s, make_theta_line(*s, "U-1", false)).to_string(), "RSS");
  EXPECT_TRUE(is_principal_type(*s, make_theta_line(*s, "z-1", false)));
  EXPECT_THROW(make_theta_line(*s, "z-1", true), UsageError);
  EXPECT_THROW(make_theta_line(*g, theta_lines(*g)[0].geometric_class, true), UsageError);
  EXPECT_EQ(theta_lines(*s).size(), 9u);
}

TEST(Psi, PrincipalIffDense) {
  for (auto g : {gl(3, 2), sl(7)})
    for (const auto& t : theta_lines(*g)) {
      const auto strata = enumerate_strata(*g);
      EXPECT_EQ(is_principal_type(*g, t), stratum_dimension(g->spec(), psi(*g, t)) == strata.front().dimension);
    }
}

TEST(Verify, Decomposition) {
  {
    const auto r = verify_decomposition(gl(2, 3));
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.lines, 8u);
    EXPECT_EQ(r.rank, 8u);
    ASSERT_EQ(r.strata.size(), 1u);
    EXPECT_EQ(r.strata[0].stratum, dense_stratum(*gl(2, 3)));
  }
  {
    const auto r = verify_decomposition(sl(5));
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.lines, 9u);
    EXPECT_EQ(r.classes, 9u);
    std::map<std::string, std::size_t> by;
    for (const auto& s : r.strata) {
      by[s.stratum.to_string()] = s.gamma_lines;
      EXPECT_EQ(s.gamma_lines, s.theta_lines);
    }
    EXPECT_EQ(by, (std::map<std::string, std::size_t>{{"RSS", 7}, {"UnipCoset(+1)", 1}, {"UnipCoset(-1)", 1}}));
  }
  for (auto g : {gl(3, 2), gl(2, 2), gl(2, 5), sl(3), sl(7)}) {
    const auto r = verify_decomposition(g);
    EXPECT_TRUE(r.ok) << g->name() << (r.failures.empty() ? "" : r.failures[0]);
    EXPECT_EQ(r.lines, g->class_count());
  }
}

TEST(Mackey, Examples) {
  const auto g = gl(2, 3);
  for (const auto& a : g->character_orbits(TorusType::gl({1, 1})))
    for (const auto& b : g->character_orbits(TorusType::gl({2}))) {
      const auto m = mackey_check(g, TorusType::gl({1, 1}), a.rep, TorusType::gl({2}), b.rep);
      EXPECT_TRUE(m.equal);
      EXPECT_EQ(m.rhs, 0);
    }
  const auto m = mackey_check(g, TorusType::gl({1, 1}), {0, 0}, TorusType::gl({1, 1}), {0, 0});
  EXPECT_EQ(m.lhs, Cyclo(2));
  EXPECT_EQ(m.rhs, 2);
  const auto h = gl(3, 2);
  const auto c = mackey_check(h, TorusType::gl({3}), {1}, TorusType::gl({3}), {2});
  EXPECT_EQ(c.lhs, Cyclo(1));
  EXPECT_EQ(c.rhs, 1);
  EXPECT_TRUE(c.equal);
}

TEST(Mackey, AllPairsSl2) {
  const auto g = sl(5);
  for (const auto& t1 : g->tori())
    for (const auto& t2 : g->tori())
      for (std::uint64_t a = 0; a < t1.factor_orders(5)[0]; ++a)
        for (std::uint64_t b = 0; b < t2.factor_orders(5)[0]; ++b) EXPECT_TRUE(mackey_check(g, t1, {a}, t2, {b}).equal);
}

TEST(Induction, TorusBaseCaseAndIdentity) {
  const auto g = gl(2, 3);
  for (const auto& t : g->tori()) {
    const auto tg = g->torus_group(t);
    for (const auto& o : tg->character_orbits(t))
      EXPECT_EQ(lusztig_induction(g, tg, dl_character(tg, t, o.rep)), dl_character(g, t, o.rep));
  }
  const auto f = dl_character(g, TorusType::gl({2}), {3});
  EXPECT_EQ(lusztig_induction(g, g, f), f);
  const auto s = sl(5);
  const auto st = s->torus_group(TorusType::coxeter());
  EXPECT_EQ(lusztig_induction(s, st, dl_character(st, TorusType::coxeter(), {2})), dl_character(s, TorusType::coxeter(), {2}));
}

TEST(Induction, Transitivity) {
  for (const auto& [n, q, blocks] : std::vector<std::tuple<int, std::uint64_t, std::vector<int>>>{
           {3, 2, {2, 1}}, {3, 2, {1, 2}}, {3, 2, {1, 1, 1}}, {2, 3, {1, 1}}, {3, 3, {2, 1}}, {4, 2, {2, 2}}, {4, 2, {3, 1}}}) {
    const auto r = transitivity_check(gl(n, q), blocks);
    EXPECT_TRUE(r.ok) << r.chain << " " << (r.failures.empty() ? "" : r.failures[0]);
    EXPECT_GT(r.checked, 0u);
  }
}

TEST(Induction, LeviProductOfTori) {
  // R_{T x T'}^{GL_1 x GL_1} is the character itself, so inducing it to GL_2 gives R_T^G.
  const auto g = gl(2, 3);
  const auto m = g->levi({1, 1});
  for (std::uint64_t a = 0; a < 2; ++a)
    for (std::uint64_t b = 0; b < 2; ++b) {
      const auto f = dl_character(m, TorusType{TorusType::SL2Kind::None, {Partition{1}, Partition{1}}}, {a, b});
      EXPECT_EQ(lusztig_induction(g, m, f), dl_character(g, TorusType::gl({1, 1}), {a, b}));
    }
}

TEST(Induction, Linearity) {
  const auto g = gl(3, 2);
  const auto m = g->levi({2, 1});
  const LusztigInduction ind(g, m);
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  auto random_fn = [&] {
    ClassFunction f(m);
    for (auto& v : f.values()) v = Cyclo(static_cast<long>(d(rng))) + Cyclo(static_cast<long>(d(rng))) * Cyclo::zeta(3);
    return f;
  };
  for (int it = 0; it < 5; ++it) {
    const auto f = random_fn(), h = random_fn();
    const Cyclo a = Cyclo(static_cast<long>(d(rng))) * Cyclo::zeta(7, d(rng)), b = Cyclo::zeta(3) + Cyclo(static_cast<long>(d(rng)));
    EXPECT_EQ(ind(a * f + b * h), a * ind(f) + b * ind(h));
  }
}

TEST(Induction, RejectsNonLevi) {
  const auto g = gl(3, 2);
  EXPECT_THROW(LusztigInduction(g, gl(2, 3)), UsageError);
  EXPECT_THROW(LusztigInduction(g->levi({2, 1}), g->levi({1, 2})), UsageError);
  EXPECT_THROW(lusztig_induction(g, g->levi({2, 1}), ClassFunction(g)), UsageError);
}

TEST(IndicatorExpansion, Gl2F3) {
  const auto g = gl(2, 3);
  for (const auto& c : g->classes()) {
    const auto e = indicator_expansion(g, c.label);
    EXPECT_TRUE(e.geometric);
    EXPECT_TRUE(e.residual_zero);
    EXPECT_TRUE(e.reconstructed);
    EXPECT_EQ(e.torus_rank, 8u);
    EXPECT_EQ(e.augmented_rank, 8u);
  }
}

TEST(IndicatorExpansion, Sl2) {
  for (std::uint64_t q : {3, 5, 7}) {
    const auto g = sl(q);
    for (const auto& [label, idx] : geometric_classes(*g)) {
      const auto e = indicator_expansion(g, label);
      EXPECT_TRUE(e.residual_zero) << label;
      EXPECT_TRUE(e.reconstructed) << label;
    }
  }
  const auto g = sl(5);
  const auto e = indicator_expansion(g, "u+1.1");
  EXPECT_FALSE(e.geometric);
  EXPECT_FALSE(e.residual_zero);
  EXPECT_TRUE(e.reconstructed);
  EXPECT_EQ(e.torus_rank, 7u);
  EXPECT_EQ(e.augmented_rank, 8u);
  ASSERT_EQ(e.cuspidal_coeffs.size(), 1u);
  EXPECT_EQ(e.cuspidal_coeffs[0].line.sign, 1);
  EXPECT_EQ(e.cuspidal_coeffs[0].coeff, Cyclo(Rational(1, 2)));
  EXPECT_THROW(indicator_expansion(g, "bogus"), UsageError);
}

TEST(IndicatorExpansion, Gl3F2AllClasses) {
  const auto g = gl(3, 2);
  for (const auto& c : g->classes()) {
    const auto e = indicator_expansion(g, c.label);
    EXPECT_TRUE(e.residual_zero && e.reconstructed) << c.label;
  }
}

}  // namespace
}  // namespace dlcf
