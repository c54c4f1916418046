#ifndef ANTISUB_CATALOG_HPP
#define ANTISUB_CATALOG_HPP

// Registry of every worked example with the outcomes asserted for it, and the
// batch runner. Claims are data: a wrong assertion shows up as "refuted".

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "antisub/embedded.hpp"
#include "antisub/submersion.hpp"

namespace antisub::catalog {

using Scenario = std::variant<SubmersionScenario, EmbeddedScenario>;

struct Entry {
  std::string id;
  std::string title;
  Scenario scenario;

  const std::vector<Claim>& claims() const {
    return std::visit([](const auto& s) -> const std::vector<Claim>& { return s.claims; }, scenario);
  }
};

// --- building blocks ---------------------------------------------------------

namespace build_helpers {

inline Claim claim(std::string check, bool v) { return {std::move(check), ClaimValue(v), {}}; }
inline Claim claim(std::string check, const char* rational) { return {std::move(check), ClaimValue(parse_scalar(rational)), {}}; }

inline Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }
inline Vector neg_e(std::size_t n, std::size_t i) { return scaled(-1, unit_vector(n, i)); }

inline std::vector<std::vector<std::size_t>> contiguous_blocks(std::size_t count, std::size_t size) {
  std::vector<std::vector<std::size_t>> b(count);
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t s = 0; s < size; ++s) b[k].push_back(k * size + s);
  return b;
}

/// s^1 (+) s^3 with <e0,e0> = <e1,e1> = eps, <e2,e2> = <e3,e3> = 1.
inline MetricLieAlgebra hitchin(const Scalar& eps) {
  const Vector d{eps, eps, Scalar(1), Scalar(1)};
  return MetricLieAlgebra(s3_algebra(true), BilinearForm::diagonal(std::span<const Scalar>(d)));
}

/// J: e0->e1, e1->-e0, e2->e3, e3->-e2.
inline StructureEndo hitchin_J(std::size_t off = 0, std::size_t n = 4, std::string name = "J") {
  return StructureEndo::from_images(std::move(name), StructureKind::complex, n,
                                    {{off + 0, e(n, off + 1)}, {off + 1, neg_e(n, off + 0)},
                                     {off + 2, e(n, off + 3)}, {off + 3, neg_e(n, off + 2)}});
}

/// J-check: e0->e2, e2->-e0, e3->e1, e1->-e3.
inline StructureEndo hitchin_Jcheck() {
  const std::size_t n = 4;
  return StructureEndo::from_images("Jcheck", StructureKind::complex, n,
                                    {{0, e(n, 2)}, {2, neg_e(n, 0)}, {3, e(n, 1)}, {1, neg_e(n, 3)}});
}

/// J-tilde: e0->e2, e2->e0, e1->-e3, e3->-e1.
inline StructureEndo hitchin_Jtilde(std::string name = "Jtilde") {
  const std::size_t n = 4;
  return StructureEndo::from_images(std::move(name), StructureKind::para_complex, n,
                                    {{0, e(n, 2)}, {2, e(n, 0)}, {1, neg_e(n, 3)}, {3, neg_e(n, 1)}});
}

/// Action of `kind` with generators (J1, J2, J1 J2).
inline AlgebraAction action_from_pair(std::string name, AlgebraKind kind, const StructureEndo& j1,
                                      const StructureEndo& j2) {
  const auto table = builtin(kind);
  StructureEndo j3{j1.name + "*" + j2.name, j1.matrix * j2.matrix, generator_kind(table, 3)};
  return AlgebraAction{std::move(name), table, {j1, j2, j3}};
}

/// R (+) sl(2,R) with <f0,f0> = <f1,f1> = -1, <f2,f2> = <f3,f3> = 1.
inline MetricLieAlgebra r_sl2() {
  return MetricLieAlgebra(sl2_algebra(true), BilinearForm::diagonal({-1, -1, 1, 1}));
}

/// sl(2,R) with the metric K/8 = diag(-1, 1, 1).
inline MetricLieAlgebra sl2_killing_eighth() {
  const LieAlgebra a = sl2_algebra(false);
  return MetricLieAlgebra(a, BilinearForm(Scalar(1, 8) * killing_form(a).gram()));
}

/// (s^3)^nu, factor f carrying signs[f] * identity. Labels e1..e3, f1..f3 for
/// nu = 2, otherwise suffixed by factor.
inline MetricLieAlgebra s3_power(const std::vector<int>& signs) {
  std::vector<MetricLieAlgebra> parts;
  for (std::size_t f = 0; f < signs.size(); ++f) {
    const std::string prefix = signs.size() == 2 ? (f == 0 ? "e" : "f") : "e";
    parts.emplace_back(s3_algebra(false, prefix), BilinearForm(Matrix::identity(3)));
  }
  return direct_sum(parts, signs);
}

inline SubmersionScenario scenario(std::string id, std::string title, MetricLieAlgebra mla, Subspace h) {
  return SubmersionScenario{std::move(id), std::move(title), std::move(mla), SubalgebraDecl{std::move(h), true},
                            {}, {}, {}, {}};
}

}  // namespace build_helpers

// --- the registry ------------------------------------------------------------

namespace detail {

using namespace build_helpers;

inline void add_flat(std::vector<Entry>& out) {
  // C^2 = R^4 with coordinates (x1, y1, x2, y2); h = real vectors.
  auto flat_complex = [](std::string id, std::string title) {
    const std::size_t n = 4;
    std::vector<std::string> labels{"x1", "y1", "x2", "y2"};
    auto sc = scenario(id, title, MetricLieAlgebra(LieAlgebra(labels), BilinearForm(Matrix::identity(n))),
                       Subspace::coordinate(n, {0, 2}));
    const auto table = builtin(AlgebraKind::complex);
    sc.structures.push_back({"J", block_left_multiplication(table, 1, contiguous_blocks(2, 2), n), StructureKind::complex});
    sc.claims = {claim("anti_invariant[J]", true), claim("lagrangian[J]", true), claim("integrable[J]", true),
                 claim("compatible[J]", true),     claim("bi_invariant", true),  claim("total_constant_curvature", true),
                 claim("total_curvature_value", "0")};
    return sc;
  };
  {
    auto sc = flat_complex("3.1.1a", "R^4 = C^2, h real, J = multiplication by i");
    out.push_back({sc.id, sc.title, sc});
  }
  {
    auto sc = flat_complex("3.2", "T^4 = R^4/Z^4 = (C/Z[i])^2: same Lie algebra data as 3.1.1a");
    sc.notes.push_back("torus quotient: the lattice does not change the Lie algebra, so the checks coincide with 3.1.1a");
    out.push_back({sc.id, sc.title, sc});
  }
  auto flat_algebra = [](std::string id, std::string title, AlgebraKind kind, std::string act_name) {
    const auto table = builtin(kind);
    const std::size_t d = table.dim(), ell = 2, n = d * ell;
    Vector diag;
    for (std::size_t k = 0; k < ell; ++k)
      for (int s : table.form_signs()) diag.emplace_back(s);
    auto sc = scenario(id, title,
                       MetricLieAlgebra(LieAlgebra::abelian(n), BilinearForm::diagonal(std::span<const Scalar>(diag))),
                       Subspace::coordinate(n, {0, d}));
    sc.actions.push_back(action_from_blocks(act_name, table, contiguous_blocks(ell, d), n));
    sc.claims = {claim("action_relations[" + act_name + "]", true), claim("anti_invariant[" + act_name + "]", true),
                 claim("total_constant_curvature", true), claim("total_curvature_value", "0")};
    return sc;
  };
  {
    auto sc = flat_algebra("3.1.1b", "R^8 = Q^2, h real, quaternion action", AlgebraKind::quaternion, "Q");
    out.push_back({sc.id, sc.title, sc});
  }
  {
    auto sc = flat_algebra("3.1.1c", "R^16 = O^2, h real, octonion action", AlgebraKind::octonion, "O");
    out.push_back({sc.id, sc.title, sc});
  }
  {
    auto sc = flat_algebra("3.1.3", "R^8 = para-Q^2, h real, para-quaternion action", AlgebraKind::para_quaternion, "Qtilde");
    out.push_back({sc.id, sc.title, sc});
  }
  auto flat_para = [](std::string id, std::string title, std::vector<int> eps) {
    // Basis (e1, f1, e2, f2); <e_i,e_i> = -<f_i,f_i> = eps_i; J e_i = f_i, J f_i = e_i.
    const std::size_t ell = eps.size(), n = 2 * ell;
    std::vector<std::string> labels;
    Vector diag;
    std::vector<std::size_t> real;
    for (std::size_t i = 0; i < ell; ++i) {
      labels.push_back("e" + std::to_string(i + 1));
      labels.push_back("f" + std::to_string(i + 1));
      diag.emplace_back(eps[i]);
      diag.emplace_back(-eps[i]);
      real.push_back(2 * i);
    }
    std::vector<Vector> hb;
    for (auto i : real) hb.push_back(e(n, i));
    auto sc = scenario(id, title,
                       MetricLieAlgebra(LieAlgebra(labels), BilinearForm::diagonal(std::span<const Scalar>(diag))),
                       Subspace(n, hb));
    const auto table = builtin(AlgebraKind::para_complex);
    sc.structures.push_back(
        {"Jtilde", block_left_multiplication(table, 1, contiguous_blocks(ell, 2), n), StructureKind::para_complex});
    sc.claims = {claim("anti_invariant[Jtilde]", true), claim("lagrangian[Jtilde]", true),
                 claim("compatible[Jtilde]", true), claim("total_constant_curvature", true),
                 claim("total_curvature_value", "0")};
    return sc;
  };
  {
    auto sc = flat_para("3.1.2", "R^4 = para-C^2, <e,e> = 1, <f,f> = -1, h = span{e_i}", {1, 1});
    out.push_back({sc.id, sc.title, sc});
  }
  {
    auto sc = flat_para("3.1.2.sig", "R^4 = para-C^2 with eps = (1,-1): base of another signature", {1, -1});
    out.push_back({sc.id, sc.title, sc});
  }
}

inline void add_hopf(std::vector<Entry>& out) {
  const std::size_t n = 4;
  // The metric family itself, with h = span{e0, e1}.
  for (int eps : {1, -1, 2, -3}) {
    const std::string id = "S1xS3.eps" + std::to_string(eps);
    auto sc = scenario(id, "S^1 x S^3 with eps = " + std::to_string(eps) + ", h = span{e0,e1}", hitchin(eps),
                       Subspace::coordinate(n, {0, 1}));
    sc.structures = {hitchin_J(), hitchin_Jcheck(), hitchin_Jtilde()};
    sc.claims = {claim("integrable[J]", true), claim("compatible[J]", true), claim("ad_invariant", true),
                 claim("bi_invariant", eps == 1)};
    if (eps == 1) {
      sc.actions.push_back(action_from_pair("Q", AlgebraKind::quaternion, hitchin_J(), hitchin_Jcheck()));
      sc.claims.push_back(claim("action_relations[Q]", true));
      sc.claims.push_back(claim("compatible[Jcheck]", true));
    }
    if (eps == -1) {
      sc.actions.push_back(action_from_pair("Qtilde", AlgebraKind::para_quaternion, hitchin_J(), hitchin_Jtilde()));
      sc.claims.push_back(claim("action_relations[Qtilde]", true));
      sc.claims.push_back(claim("compatible[Jtilde]", true));
    }
    out.push_back({sc.id, sc.title, sc});
  }
  {
    auto sc = scenario("3.3.1a", "Hopf: S^1 x S^3 -> S^2, eps = 1, h = span{e0,e1}, J-check", hitchin(1),
                       Subspace::coordinate(n, {0, 1}));
    sc.structures = {hitchin_Jcheck(), hitchin_J()};
    sc.claims = {claim("anti_invariant[Jcheck]", true),  claim("lagrangian[Jcheck]", true),
                 claim("compatible[Jcheck]", true),      claim("fibers_minimal", true),
                 claim("fibers_totally_geodesic", false), claim("horizontal_integrable", false),
                 claim("base_constant_curvature", true),  claim("base_curvature_value", "1/4")};
    sc.notes.push_back("base curvature: the asserted value 1/4 refers to a sphere of radius 2; the computed value "
                       "depends on the normalisation of e1, e2, e3 and is reported as is");
    out.push_back({sc.id, sc.title, sc});
  }
  {
    auto sc = scenario("3.3.1b", "S^1 x S^3 -> S^2, eps = -1, h = span{e0,e1}, J-tilde", hitchin(-1),
                       Subspace::coordinate(n, {0, 1}));
    sc.structures = {hitchin_Jtilde()};
    sc.claims = {claim("anti_invariant[Jtilde]", true), claim("lagrangian[Jtilde]", true),
                 claim("compatible[Jtilde]", true)};
    out.push_back({sc.id, sc.title, sc});
  }
  struct Base {
    const char* suffix;
    std::size_t vertical;
  };
  for (const Base b : {Base{"S3", 0}, Base{"S1xS3", 1}}) {
    const std::string sfx = std::string(".") + b.suffix;
    const Subspace h = Subspace::coordinate(n, {b.vertical});
    {
      auto sc = scenario("3.3.2a" + sfx, "eps = 2, h = span{e" + std::to_string(b.vertical) + "}, J", hitchin(2), h);
      sc.structures = {hitchin_J()};
      sc.claims = {claim("anti_invariant[J]", true), claim("compatible[J]", true), claim("integrable[J]", true)};
      sc.notes.push_back("eps is arbitrary in the source; eps = 2 is used as a generic value");
      out.push_back({sc.id, sc.title, sc});
    }
    {
      auto sc = scenario("3.3.2b" + sfx, "eps = 1, h = span{e" + std::to_string(b.vertical) + "}, quaternion {J, J-check}",
                         hitchin(1), h);
      sc.actions = {action_from_pair("Q", AlgebraKind::quaternion, hitchin_J(), hitchin_Jcheck())};
      sc.claims = {claim("action_relations[Q]", true), claim("anti_invariant[Q]", true)};
      out.push_back({sc.id, sc.title, sc});
    }
    {
      auto sc = scenario("3.3.2c" + sfx, "eps = -1, h = span{e" + std::to_string(b.vertical) + "}, J-tilde",
                         hitchin(-1), h);
      sc.structures = {hitchin_Jtilde()};
      sc.claims = {claim("anti_invariant[Jtilde]", true), claim("compatible[Jtilde]", true)};
      out.push_back({sc.id, sc.title, sc});
    }
    {
      auto sc = scenario("3.3.2d" + sfx,
                         "eps = -1, h = span{e" + std::to_string(b.vertical) + "}, para-quaternion {J, J-tilde}",
                         hitchin(-1), h);
      sc.actions = {action_from_pair("Qtilde", AlgebraKind::para_quaternion, hitchin_J(), hitchin_Jtilde())};
      sc.claims = {claim("action_relations[Qtilde]", true), claim("anti_invariant[Qtilde]", true)};
      out.push_back({sc.id, sc.title, sc});
    }
  }
}

inline void add_einstein(std::vector<Entry>& out) {
  const std::size_t n = 6;  // e1 e2 e3 f1 f2 f3 -> 0..5
  {
    auto sc = scenario("3.4.1a.i", "S^3 x S^3 round, h = span{e2,f2}, integrable J", s3_power({1, 1}),
                       Subspace::coordinate(n, {1, 4}));
    sc.structures = {StructureEndo::from_images("J", StructureKind::complex, n,
                                                {{0, e(n, 3)}, {3, neg_e(n, 0)}, {1, e(n, 2)}, {2, neg_e(n, 1)},
                                                 {4, e(n, 5)}, {5, neg_e(n, 4)}})};
    sc.claims = {claim("integrable[J]", true),  claim("anti_invariant[J]", true), claim("compatible[J]", true),
                 claim("bi_invariant", true),   claim("einstein", true),          claim("einstein_lambda", "2")};
    out.push_back({sc.id, sc.title, sc});
  }
  auto swap_images = [&](std::string name, StructureKind kind) {
    std::map<std::size_t, Vector> img;
    const int back = kind == StructureKind::complex ? -1 : 1;
    for (std::size_t i = 0; i < 3; ++i) {
      img[i] = e(n, i + 3);
      img[i + 3] = scaled(back, e(n, i));
    }
    return StructureEndo::from_images(std::move(name), kind, n, img);
  };
  {
    auto sc = scenario("3.4.1a.ii", "S^3 x S^3 round, h = span{e1,e2,e3}, J e_i = f_i", s3_power({1, 1}),
                       Subspace::coordinate(n, {0, 1, 2}));
    sc.structures = {swap_images("J", StructureKind::complex)};
    sc.claims = {claim("integrable[J]", false), claim("anti_invariant[J]", true), claim("compatible[J]", true),
                 claim("bi_invariant", true),   claim("einstein", true),          claim("einstein_lambda", "2")};
    out.push_back({sc.id, sc.title, sc});
  }
  {
    auto sc = scenario("3.4.1b.i", "S^3 x S^3 neutral g (+) -g, h = span{e1,f1}", s3_power({1, -1}),
                       Subspace::coordinate(n, {0, 3}));
    sc.structures = {StructureEndo::from_images("Jtilde", StructureKind::para_complex, n,
                                                {{0, e(n, 4)}, {4, e(n, 0)}, {3, e(n, 1)}, {1, e(n, 3)},
                                                 {2, e(n, 5)}, {5, e(n, 2)}})};
    sc.claims = {claim("anti_invariant[Jtilde]", true), claim("compatible[Jtilde]", true), claim("bi_invariant", true)};
    out.push_back({sc.id, sc.title, sc});
  }
  {
    auto sc = scenario("3.4.1b.ii", "S^3 x S^3 neutral g (+) -g, h = span{e1,e2,e3}, J e_i = f_i", s3_power({1, -1}),
                       Subspace::coordinate(n, {0, 1, 2}));
    sc.structures = {swap_images("Jtilde", StructureKind::para_complex)};
    sc.claims = {claim("anti_invariant[Jtilde]", true), claim("compatible[Jtilde]", true), claim("bi_invariant", true)};
    out.push_back({sc.id, sc.title, sc});
  }
  {
    // Q^3 on (s^3)^4: three contiguous quaternion blocks; real slots 0, 4, 8 lie in distinct factors.
    const std::size_t m = 12;
    auto sc = scenario("3.4.2a", "(S^3)^4 round = Q^3, h = real slots {0,4,8}, quaternion action",
                       s3_power({1, 1, 1, 1}), Subspace::coordinate(m, {0, 4, 8}));
    sc.actions = {action_from_blocks("Q", builtin(AlgebraKind::quaternion), contiguous_blocks(3, 4), m)};
    sc.claims = {claim("action_relations[Q]", true), claim("anti_invariant[Q]", true), claim("bi_invariant", true),
                 claim("einstein", true), claim("einstein_lambda", "2")};
    sc.notes.push_back("identification (s^3)^4 = Q^3: blocks {0..3},{4..7},{8..11}, e0 slots span h");
    out.push_back({sc.id, sc.title, sc});
  }
  {
    // para-Q^3 on (s^3)^4 with factor signs (+,+,-,-): each block has slot signs +-(+,+,-,-).
    const std::size_t m = 12;
    const std::vector<std::vector<std::size_t>> blocks{{0, 1, 6, 7}, {3, 4, 8, 9}, {10, 11, 2, 5}};
    auto sc = scenario("3.4.2b", "(S^3)^4 with factor signs (+,+,-,-) = para-Q^3, h = real slots {0,3,10}",
                       s3_power({1, 1, -1, -1}), Subspace::coordinate(m, {0, 3, 10}));
    sc.actions = {action_from_blocks("Qtilde", builtin(AlgebraKind::para_quaternion), blocks, m)};
    sc.claims = {claim("action_relations[Qtilde]", true), claim("anti_invariant[Qtilde]", true),
                 claim("bi_invariant", true)};
    sc.notes.push_back("para-Hermitian action needs neutral signature, so factor metrics are +g,+g,-g,-g; blocks "
                       "{0,1,6,7},{3,4,8,9},{10,11,2,5}");
    out.push_back({sc.id, sc.title, sc});
  }
  {
    const std::size_t m = 24;
    auto sc = scenario("3.4.3", "(S^3)^8 round = O^3, h = real slots {0,8,16}, octonion action",
                       s3_power(std::vector<int>(8, 1)), Subspace::coordinate(m, {0, 8, 16}));
    sc.actions = {action_from_blocks("O", builtin(AlgebraKind::octonion), contiguous_blocks(3, 8), m)};
    sc.claims = {claim("action_relations[O]", true), claim("anti_invariant[O]", true), claim("bi_invariant", true),
                 claim("einstein", true), claim("einstein_lambda", "2")};
    sc.notes.push_back("identification (s^3)^8 = O^3: blocks {0..7},{8..15},{16..23}, e0 slots span h");
    out.push_back({sc.id, sc.title, sc});
  }
}

inline void add_negative(std::vector<Entry>& out) {
  const std::size_t n = 4;  // f0 f1 f2 f3
  auto J = [] { return hitchin_J(0, 4, "J"); };
  auto Jt = [] { return hitchin_Jtilde("Jtilde"); };
  struct Case {
    const char* id;
    std::vector<std::size_t> h;
    bool full;
  };
  for (const Case& c : {Case{"E3.6.1", {0}, true}, Case{"E3.6.2", {1}, true}, Case{"E3.6.3", {2}, true},
                        Case{"E3.6.4", {0, 2}, false}}) {
    std::vector<Vector> hb;
    for (auto i : c.h) hb.push_back(e(n, i));
    std::string hs;
    for (auto i : c.h) hs += (hs.empty() ? "f" : ",f") + std::to_string(i);
    auto sc = scenario(c.id, "R x SL(2,R), h = span{" + hs + "}", r_sl2(), Subspace(n, hb));
    sc.structures = {J(), Jt()};
    sc.claims = {claim("anti_invariant[J]", true), claim("compatible[J]", true), claim("compatible[Jtilde]", true),
                 claim("bi_invariant", true)};
    if (c.full) {
      sc.actions = {action_from_pair("Qtilde", AlgebraKind::para_quaternion, J(), Jt())};
      sc.claims.push_back(claim("anti_invariant[Jtilde]", true));
      sc.claims.push_back(claim("anti_invariant[Qtilde]", true));
      sc.claims.push_back(claim("action_relations[Qtilde]", true));
    } else {
      sc.claims.push_back(claim("base_constant_curvature", true));
      sc.claims.push_back(claim("base_curvature_value", "-1/4"));
      sc.notes.push_back("base curvature: the asserted value -1/4 is compared against the computed constant");
    }
    out.push_back({sc.id, sc.title, sc});
  }
  for (std::size_t i = 1; i <= 3; ++i) {
    const std::string id = "SL2.H" + std::to_string(i);
    auto sc = scenario(id, "SL(2,R)/H" + std::to_string(i) + " with K/8, h = span{f" + std::to_string(i) + "}",
                       sl2_killing_eighth(), Subspace::coordinate(3, {i - 1}));
    sc.claims = {claim("bi_invariant", true), claim("base_constant_curvature", true),
                 claim("base_curvature_value", "-1/4")};
    sc.notes.push_back("base curvature: the asserted value -1/4 is compared against the computed constant");
    out.push_back({sc.id, sc.title, sc});
  }
}

inline void add_embedded(std::vector<Entry>& out) {
  const char* circle_titles[] = {"S^1 x S^5, H on the S^1 factor", "S^1 x S^5, H by complex multiplication on S^5",
                                 "S^1 x pseudo-S^5, H on the S^1 factor",
                                 "S^1 x pseudo-S^5, H by complex multiplication"};
  for (int c = 1; c <= 4; ++c) {
    auto sc = make_circle_action_scenario(c, 3);
    sc.id = "E4.1." + std::to_string(c);
    sc.title = circle_titles[c - 1];
    sc.claims = {claim("anti_invariant", true)};
    out.push_back({sc.id, sc.title, sc});
  }
  for (int c = 1; c <= 2; ++c) {
    auto sc = make_torus_action_scenario(c, 2);
    sc.id = "Ex4.3." + std::to_string(c);
    sc.title = c == 1 ? "S^1 x S^7, H = S^1 x S^1, units j,k" : "S^1 x pseudo-S^7 (4 timelike), H = S^1 x S^1, units j,k";
    sc.claims = {claim("anti_invariant", true)};
    out.push_back({sc.id, sc.title, sc});
  }
}

inline const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> out;
    add_flat(out);
    add_hopf(out);
    add_einstein(out);
    add_negative(out);
    add_embedded(out);
    return out;
  }();
  return entries;
}

}  // namespace detail

inline std::vector<std::string> list() {
  std::vector<std::string> ids;
  for (const auto& e : detail::registry()) ids.push_back(e.id);
  return ids;
}

inline const Entry& get(std::string_view id) {
  for (const auto& e : detail::registry())
    if (e.id == id) return e;
  throw UnknownId("unknown example id '" + std::string(id) + "'");
}

inline VerificationReport verify(const Scenario& sc, const EmbeddedOptions& opt = {}) {
  return std::visit(
      [&](const auto& s) -> VerificationReport {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SubmersionScenario>) return verify_scenario(s);
        else return verify_embedded(s, opt);
      },
      sc);
}

inline VerificationReport verify(std::string_view id, const EmbeddedOptions& opt = {}) {
  return verify(get(id).scenario, opt);
}

/// Worker count from ANTISUB_THREADS (default 1).
inline unsigned thread_budget() {
  if (const char* env = std::getenv("ANTISUB_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

/// Verifies the given ids (all entries when empty); reports are sorted by id.
inline std::vector<VerificationReport> verify_many(std::vector<std::string> ids, const EmbeddedOptions& opt = {},
                                                   unsigned threads = thread_budget()) {
  if (ids.empty()) ids = list();
  std::sort(ids.begin(), ids.end());
  std::vector<VerificationReport> reports(ids.size());
  auto one = [&](std::size_t i) {
    try {
      reports[i] = verify(ids[i], opt);
    } catch (const std::exception& e) {
      reports[i].id = ids[i];
      reports[i].checks.push_back({"entry", std::nullopt, std::nullopt, Status::error, e.what()});
    }
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < ids.size(); ++i) one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> workers;
    for (unsigned t = 0; t < threads; ++t)
      workers.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i = next++; i < ids.size(); i = next++) one(i);
      }));
    for (auto& w : workers) w.get();
  }
  return reports;
}

inline std::vector<VerificationReport> verify_all(const EmbeddedOptions& opt = {}) { return verify_many({}, opt); }

}  // namespace antisub::catalog

#endif  // ANTISUB_CATALOG_HPP
