// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pdt/bounded_search.hpp"
#include "pdt/divisor.hpp"
#include "pdt/error.hpp"
#include "pdt/psigma_ideal.hpp"
#include "support.hpp"

namespace {

using namespace pdt;
using test::e;
using test::vec;
using test::X;
using Indices = std::vector<std::size_t>;

// Collects failed expectations for one criterion.
struct Report {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

std::string str(const ZxVector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

Bounds defaults(const AffineSemimodule& s) { return default_bounds(s.generators()); }

DivisorContext affine(const AffineSemimodule& s) { return DivisorContext(Fan::single(s), defaults(s)); }

DivisorContext projective(std::size_t n) {
  const auto pts = test::simplex_points(n);
  return DivisorContext(projective_fan(pts, n), default_bounds(pts));
}

std::vector<Indices> face_sets(const FaceEnumeration& fe) {
  std::vector<Indices> out;
  for (const auto& f : fe.faces) out.push_back(f.indices);
  return out;
}

void face_counts(Report& r) {
  const std::vector<std::pair<AffineSemimodule, std::vector<Indices>>> cases{
      {test::line(), {{}, {0, 1}}},
      {test::plane(), {{}, {0}, {0, 1, 2}, {2}}},
      {test::space(), {{}, {0}, {0, 1}, {0, 1, 2, 3}, {0, 2}, {1}, {1, 2}, {2}}},
  };
  for (const auto& [s, expected] : cases) {
    const auto fe = enumerate_faces(s, defaults(s));
    r.expect(fe.complete(), "unresolved subsets");
    r.expect(fe.faces.size() == expected.size(), "face count " + std::to_string(fe.faces.size()));
    r.expect(face_sets(fe) == expected, "face subsets differ");
    for (const auto& f : fe.faces) {
      if (f.witness) r.expect(verify_face_witness(s, f.indices, *f.witness), "witness fails");
    }
  }
}

void normal_vectors(Report& r) {
  const auto p = test::plane();
  const auto pf = facets(p, defaults(p));
  r.expect(pf.size() == 2, "2D facet count");
  if (pf.size() == 2) {
    r.expect(standard_normal_vector(p, pf[0]).values == vec({0, 1, 2}), "2D first normal");
    r.expect(standard_normal_vector(p, pf[1]).values == vec({2, 1, 0}), "2D second normal");
  }
  const auto s = test::space();
  const auto sf = facets(s, defaults(s));
  r.expect(sf.size() == 3, "3D facet count");
  for (const auto& f : sf) {
    const auto v = standard_normal_vector(s, f).values;
    for (std::size_t i = 0; i < 3; ++i) {
      const bool in = std::find(f.indices.begin(), f.indices.end(), i) != f.indices.end();
      r.expect(v[i] == (in ? ZxPoly() : X + 2), "3D normal " + str(v));
    }
    r.expect(v[3] == ZxPoly(1), "3D normal last " + str(v));
  }
  const auto ctx = projective(2);
  r.expect(ctx.prime_count() == 3, "P2 prime count");
  if (ctx.prime_count() == 3) {
    r.expect(ctx.functional(2, vec({1, 0})) == ZxPoly(-1), "phi3(e1)");
    r.expect(ctx.functional(2, vec({0, 1})) == ZxPoly(-1), "phi3(e2)");
  }
}

void class_modules(Report& r) {
  for (std::size_t n = 1; n <= 3; ++n) {
    r.expect(class_module(affine(test::orthant(n))).shape() == "0", "Cl(A^" + std::to_string(n) + ")");
  }
  r.expect(class_module(affine(test::plane())).shape() == "Z[x]/(2)", "Cl of the 2D example");
  r.expect(class_module(affine(test::space())).shape() == "Z[x]/(x+2) ⊕ Z[x]/(x+2)", "Cl of the 3D example");
  r.expect(class_module(projective(2)).shape() == "free^1", "Cl(P2)");
  r.expect(class_module(projective(3)).shape() == "free^1", "Cl(P3)");
}

void picard(Report& r) {
  for (const auto& s : {test::orthant(1), test::orthant(2), test::orthant(3), test::plane(), test::space(), test::line(),
                        test::unsaturated()}) {
    r.expect(pic_module(affine(s)).shape() == "0", "single-cone Pic");
  }
  r.expect(pic_module(projective(1)).shape() == "free^1", "Pic(P1)");
  r.expect(pic_module(projective(2)).shape() == "free^1", "Pic(P2)");
}

void smoothness(Report& r) {
  std::vector<std::pair<std::string, DivisorContext>> smooth;
  for (std::size_t n = 1; n <= 3; ++n) {
    smooth.emplace_back("A^" + std::to_string(n), affine(test::orthant(n)));
    smooth.emplace_back("P^" + std::to_string(n), projective(n));
  }
  for (const auto& [name, ctx] : smooth) {
    const auto v = is_smooth_variety(ctx);
    r.expect(v.verdict.is_yes(), name + " not smooth: " + v.verdict.reason);
    r.expect(v.shapes_agree == std::optional<bool>(true), name + " shapes disagree");
  }
  const auto bad = is_smooth_variety(affine(test::plane()));
  r.expect(bad.verdict.is_no(), "2D example smooth");
  r.expect(bad.shapes_agree == std::optional<bool>(false), "2D example shapes agree");
  const auto sp = is_smooth_variety(affine(test::space()));
  r.expect(!sp.verdict.is_unknown() && sp.shapes_agree == std::optional<bool>(sp.verdict.is_yes()),
           "3D example: fan side and shapes disagree");
}

void toric_ideals(Report& r) {
  const auto h = toric_ideal_from_points(test::plane_gens(), 2);
  r.expect(lattice_equal(h.support, Lattice(3, {vec({1, -2, 1})})), "support lattice");
  r.expect(h.generators.size() == 1, "generator count");
  if (h.generators.size() == 1) {
    const Binomial& b = h.generators[0];
    const bool direct = b.plus.exponents() == vec({1, 0, 1}) && b.minus.exponents() == vec({0, 2, 0});
    const bool swapped = b.minus.exponents() == vec({1, 0, 1}) && b.plus.exponents() == vec({0, 2, 0});
    r.expect(direct || swapped, "binomial y1y3 - y2^2");
  }
  test::Rng rng(91);
  for (int k = 0; k < 100; ++k) {
    std::vector<ZxVector> cols;
    const std::size_t rows = static_cast<std::size_t>(rng.integer(1, 3));
    for (int j = 0; j < 4; ++j) cols.push_back(rng.vector(rows, 2, 5));
    r.expect(is_toric(syzygy_basis(cols, rows)), "syzygy lattice not toric");
  }
  for (const auto& s : {test::plane(), test::space(), test::unsaturated()}) {
    r.expect(is_toric(s.syz()), "example syzygy lattice not toric");
  }
}

void rank_law(Report& r) {
  test::Rng rng(92);
  for (int k = 0; k < 250; ++k) {
    const std::size_t rows = static_cast<std::size_t>(rng.integer(1, 3));
    const std::size_t cols = static_cast<std::size_t>(rng.integer(1, 4));
    ZxMatrix u(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) u.at(i, j) = rng.poly(2, 5);
    }
    if (cols > 1 && k % 3 == 0) {
      for (std::size_t i = 0; i < rows; ++i) u.at(i, cols - 1) = (X + 1) * u.at(i, 0);
    }
    const Lattice syz = syzygy_basis(u);
    const std::size_t ru = rank_qx(u);
    r.expect(ru == test::rank_by_evaluation(u.column_list(), rows), "rank(U) differs from oracle");
    r.expect(rank_qx(syz.generators(), cols) + ru == cols, "rank(Syz) + rank(U) != cols");
    for (const auto& z : syz.generators()) r.expect(is_zero(u * z), "syzygy does not annihilate");
    const Lattice l(rows, u.column_list());
    const Lattice s1 = saturate(l);
    r.expect(lattice_equal(saturate(s1), s1), "saturate not idempotent");
  }
}

void homogeneity(Report& r) {
  const auto h = is_homogeneous(test::plane_gens(), 2);
  r.expect(h.homogeneous, "2D example not homogeneous");
  r.expect(h.witness && h.witness->first == vec({1, 0}) && h.witness->second == X, "witness ((1,0), x)");
  r.expect(!is_homogeneous(test::simplex_points(2), 2).homogeneous, "{0,e1,e2} homogeneous");
  r.expect(sigma_dimension(test::plane_gens(), 2, false) == 2, "affine sigma-dimension");
  r.expect(sigma_dimension(test::plane_gens(), 2, true) == 1, "projective homogeneous sigma-dimension");
  r.expect(sigma_dimension(test::simplex_points(2), 2, true) == 2, "projective sigma-dimension of {0,e1,e2}");
}

void fan_checks(Report& r) {
  const auto pts = test::simplex_points(2);
  const Fan f = projective_fan(pts, 2);
  const Bounds b = default_bounds(pts);
  const auto c = check_fan(f, b);
  r.expect(c.verdict.is_yes() && c.same_md, "check_fan: " + c.verdict.reason);
  r.expect(c.pairs.size() == 3 && c.triples.size() == 1, "pair/triple count");
  for (const auto& p : c.pairs) r.expect(p.verdict.is_yes(), "pair check");
  for (const auto& t : c.triples) r.expect(t.verdict.is_yes(), "triple check");
  const auto fc = classify_faces(f, b);
  using Members = std::vector<std::pair<std::size_t, Indices>>;
  std::vector<Members> got;
  for (std::size_t id : fc.by_corank.at(1)) {
    Members m;
    for (const auto& fm : fc.classes[id].members) m.emplace_back(fm.cone, fm.face.indices);
    got.push_back(m);
  }
  // Facets numbered cone by cone: F1,F2 in S_1, F3,F4 in S_2, F5,F6 in S_3.
  const std::vector<Members> expected{{{0, {0}}, {1, {0}}}, {{0, {1}}, {2, {0}}}, {{1, {1}}, {2, {1}}}};
  r.expect(got == expected, "corank-1 classes differ from F1~F3, F2~F5, F4~F6");
}

void cartier(Report& r) {
  const auto a = affine(test::plane());
  const auto d12 = is_cartier(a, WeilDivisor{{ZxPoly(1), ZxPoly(1)}});
  r.expect(d12.verdict.is_yes(), "D1+D2 not Cartier");
  r.expect(d12.data && d12.data->characters.size() == 1 && d12.data->characters[0] == vec({X, 2}),
           "global character is not u2");
  r.expect(div_character(a, vec({X, 2})) == WeilDivisor{{ZxPoly(1), ZxPoly(1)}}, "div(u2) != D1+D2");
  r.expect(is_cartier(a, WeilDivisor{{ZxPoly(1), ZxPoly()}}).verdict.is_no(), "D1 alone not rejected");

  test::Rng rng(93);
  const auto s = test::plane();
  for (int k = 0; k < 100; ++k) {
    const ZxVector u = combine(s.generators(), rng.vector(3, 2, 5), 2);
    const ZxVector v = combine(s.generators(), rng.vector(3, 2, 5), 2);
    const ZxPoly g = rng.poly(2, 5);
    r.expect(div_character(a, u + v) == div_character(a, u) + div_character(a, v), "additivity");
    r.expect(div_character(a, scale(g, u)) == g * div_character(a, u), "Z[x]-linearity");
    const auto nv = a.primes()[0].normal;
    r.expect(valuation(s, nv, SupportedElement::character(u + v)) ==
                 valuation(s, nv, SupportedElement::character(u)) + valuation(s, nv, SupportedElement::character(v)),
             "valuation of a product");
  }
}

void excision(Report& r) {
  const auto ctx = projective(2);
  const auto cl = class_module(ctx);
  r.expect(cl.shape() == "free^1", "Cl(P2)");
  // D3 lives away from the chart S_1.
  const WeilDivisor d3{{ZxPoly(), ZxPoly(), ZxPoly(1)}};
  const auto restricted = restrict_divisor(ctx, 0, d3);
  r.expect(restricted.divisor.is_zero(), "D3 restricts to a nonzero divisor");
  r.expect(class_module(restricted.chart).shape() == "0", "Cl(chart) != 0");
  // Surjectivity: every chart prime is the restriction of a prime of the fan.
  for (std::size_t k = 0; k < restricted.chart.prime_count(); ++k) {
    bool hit = false;
    for (std::size_t j = 0; j < ctx.prime_count(); ++j) {
      WeilDivisor d{ZxVector(ctx.prime_count())};
      d.coeffs[j] = ZxPoly(1);
      const auto img = restrict_divisor(ctx, 0, d).divisor;
      hit = hit || (img.coeffs.size() > k && img.coeffs[k] == ZxPoly(1) &&
                    std::count_if(img.coeffs.begin(), img.coeffs.end(), [](const ZxPoly& c) { return !c.is_zero(); }) == 1);
    }
    r.expect(hit, "chart prime not hit");
  }
  // Kernel: Cl(P2) modulo the class of D3 is zero.
  ZxMatrix rel = cl.relations().transposed();
  rel.append_row(d3.coeffs);
  const ModulePresentation quotient(rel.transposed());
  r.expect(quotient.shape() == "0", "Cl(P2)/<D3> = " + quotient.shape());
  r.expect(quotient.replay() == quotient.reduced(), "replay differs");
}

void counterexample(Report& r) {
  const auto s = test::unsaturated();
  std::vector<Indices> flagged;
  for (const auto& rep : face_saturation_check(s, defaults(s))) {
    if (!rep.violation) continue;
    flagged.push_back(rep.face.indices);
    r.expect(rep.example && s.md().contains(*rep.example) && !s.sub_md(rep.face.indices).contains(*rep.example),
             "violation example does not check out");
  }
  r.expect(flagged == std::vector<Indices>{{0}}, "flagged faces differ from {(2,0)}");
}

// Every decision on every example, run under the given bounds.
std::vector<Verdict> all_verdicts(const Bounds* forced) {
  std::vector<Verdict> out;
  const std::vector<AffineSemimodule> examples{test::line(), test::plane(), test::space(), test::unsaturated(),
                                               test::orthant(2), test::orthant(3)};
  for (const auto& s : examples) {
    const Bounds b = forced ? *forced : defaults(s);
    for (std::size_t mask = 0; mask < (std::size_t{1} << s.size()); ++mask) {
      Indices idx;
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (mask & (std::size_t{1} << i)) idx.push_back(i);
      }
      out.push_back(is_face(s, idx, b).verdict);
    }
    for (const auto& g : s.generators()) {
      out.push_back(sm_member(s, g + g, b).verdict);
      out.push_back(sm_member(s, -g, b).verdict);
    }
    out.push_back(is_pointed(s, b).verdict);
  }
  const auto p = test::plane();
  const Bounds bp = forced ? *forced : defaults(p);
  out.push_back(sm_member(p, vec({2 * X, 4}), bp).verdict);
  out.push_back(sm_member(p, vec({2, 2}), bp).verdict);
  out.push_back(check_morphism(p, p, p.generators(), bp).verdict);
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto pts = test::simplex_points(n);
    const Fan f = projective_fan(pts, n);
    out.push_back(check_fan(f, forced ? *forced : default_bounds(pts)).verdict);
  }
  const GluedSemimodule g = glued(test::orthant(2), {e(2, 0)});
  out.push_back(glued_member(g, vec({-3, 1}), forced ? *forced : Bounds{2, 12}).verdict);
  out.push_back(glued_member(g, vec({0, -1}), forced ? *forced : Bounds{2, 12}).verdict);
  return out;
}

void honesty(Report& r) {
  const auto reference = all_verdicts(nullptr);
  std::size_t unknown = 0;
  for (const auto& v : reference) unknown += v.is_unknown() ? 1 : 0;
  r.expect(unknown == 0, std::to_string(unknown) + " Unknown verdicts under default bounds");

  // Divisor-level examples under default bounds.
  for (const auto& ctx : {affine(test::plane()), affine(test::space()), projective(2), projective(3)}) {
    r.expect(!is_smooth_variety(ctx).verdict.is_unknown(), "smoothness Unknown");
    r.expect(!is_cartier(ctx, WeilDivisor{ZxVector(ctx.prime_count(), ZxPoly(1))}).verdict.is_unknown(),
             "Cartier Unknown");
  }

  for (const Bounds starved : {Bounds{0, 0}, Bounds{0, 1}, Bounds{1, 0}}) {
    const auto got = all_verdicts(&starved);
    for (std::size_t k = 0; k < got.size(); ++k) {
      if (got[k].is_unknown()) continue;
      r.expect(got[k].kind == reference[k].kind, "starved verdict " + std::to_string(k) + " flips to " +
                                                       std::string(to_string(got[k].kind)));
    }
    // Certificates reported under starved bounds must lie inside them.
    const auto p = test::plane();
    const auto m = sm_member(p, vec({2 * X, 4}), starved);
    if (m.verdict.is_yes()) r.expect(within_bounds(*m.coefficients, starved), "certificate outside bounds");
    r.expect(!m.verdict.is_no(), "member reported No");
    const auto fe = enumerate_faces(p, starved);
    for (const auto& f : fe.faces) {
      if (f.witness && f.indices.size() < p.size()) {
        r.expect(verify_face_witness(p, f.indices, *f.witness), "starved face witness invalid");
      }
    }
    try {
      classify_faces(Fan::single(p), starved);
      r.expect(fe.complete(), "classification ran on incomplete faces");
    } catch (const Error& err) {
      r.expect(err.kind() == ErrorKind::UnresolvedFaces, std::string("unexpected error ") + err.what());
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Report&)>>> criteria{
      {"face counts 2/4/8 with listed subsets", face_counts},
      {"standard normal vectors", normal_vectors},
      {"class module shapes", class_modules},
      {"Picard modules", picard},
      {"smoothness and Cl/Pic agreement", smoothness},
      {"toric ideal of the 2D example", toric_ideals},
      {"rank law on random matrices", rank_law},
      {"homogeneity and sigma-dimension", homogeneity},
      {"projective plane fan and face classes", fan_checks},
      {"Cartier divisors and div homomorphism", cartier},
      {"excision on the projective plane", excision},
      {"face-saturation counterexample", counterexample},
      {"solver honesty", honesty},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Report r;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(r);
    } catch (const std::exception& ex) {
      r.failures.push_back(std::string("exception: ") + ex.what());
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool ok = r.failures.empty() && ms < 10000;
    if (ms >= 10000) r.failures.push_back("took longer than 10 s");
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << " [" << (k + 1) << "] " << criteria[k].first << " (" << static_cast<long>(ms)
              << " ms)";
    if (!ok) std::cout << ": " << r.failures.front() << (r.failures.size() > 1 ? " (+more)" : "");
    std::cout << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
