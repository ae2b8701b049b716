// Acceptance suite: one numbered check per shipped guarantee, each runnable
// on its own (argv[1] = number) or all together (no arguments / "all").
// Prints one PASS/FAIL line per check; exit status 0 iff everything ran green.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/helpers.hpp"
#include "tnncomb/matrix.hpp"
#include "tnncomb/minor_ineq.hpp"
#include "tnncomb/partitions.hpp"
#include "tnncomb/planar_network.hpp"
#include "tnncomb/poly.hpp"
#include "tnncomb/realroots.hpp"
#include "tnncomb/symfunc.hpp"

using namespace tnn;
using namespace tnn::testing;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

SymFn schur(const std::vector<std::pair<std::string, std::string>>& terms) {
  SymFn f(Basis::s);
  for (const auto& [parts, coeff] : terms) f.add_term(Partition::parse(parts), parse_rat(coeff));
  return f;
}

// 1. the printed 2x2 minor of the running path matrix
Check c01() {
  Check c;
  c.require(minor_det(example_path_matrix(), IndexSet({1, 2}), IndexSet({1, 3})) == 8,
            "minor ({1,2},{1,3}) != 8");
  return c;
}

// 2. exhaustive TNN scan of the path matrix
Check c02() {
  Check c;
  auto r = is_totally_nonnegative(example_path_matrix());
  c.require(r.ok, "a minor came out negative");
  c.require(r.pairs_checked == 69, "expected 69 nonempty index pairs for a 4x4 scan");
  c.require(minor_det(example_path_matrix(), IndexSet(), IndexSet()) == 1, "empty minor != 1");
  c.note("69 nonempty pairs + empty minor");
  return c;
}

// 3. A^2 = B as matrices and as concatenated networks
Check c03() {
  Check c;
  Matrix a = ones_lower_matrix(), b = ones_lower_squared();
  c.require(a * a == b, "A^2 != B");
  PlanarNetwork ga = network_from_tnn(a);
  c.require(weight_matrix(ga) == a, "network for A is off");
  c.require(weight_matrix(concatenate(ga, ga)) == b, "concatenated network is not B");
  return c;
}

// 4. disjoint path families match minors on random networks
Check c04() {
  Check c;
  auto rng = make_rng(1004);
  int networks = 0;
  long pairs = 0;
  while (networks < 200) {
    int n = 1 + static_cast<int>(rng() % 3);
    PlanarNetwork g = random_layered_network(rng, n, 12);
    if (!validate(g).ok) {
      c.require(false, "generator produced an invalid network");
      return c;
    }
    Matrix w = weight_matrix(g);
    for (int k = 0; k <= n; ++k)
      for (const auto& I : subsets_lex(n, k))
        for (const auto& J : subsets_lex(n, k)) {
          ++pairs;
          if (minor_det(w, I, J) != disjoint_family_weight(g, I, J)) {
            c.require(false, "minor != family weight on network " + std::to_string(networks));
            return c;
          }
        }
    ++networks;
  }
  c.note(std::to_string(networks) + " networks, " + std::to_string(pairs) + " index pairs");
  return c;
}

// 5. factorization round trip with nonnegative parameters
Check c05() {
  Check c;
  auto rng = make_rng(1005);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Matrix m = weight_matrix(random_tnn_network(rng, n, 4));
    NevilleFactorization f = neville_factorize(m);
    if (f.product() != m) {
      c.require(false, "factor product differs from the input");
      return c;
    }
    for (const auto& lf : f.lowers) c.require(sgn(lf.c) >= 0, "negative lower parameter");
    for (const auto& uf : f.uppers) c.require(sgn(uf.c) >= 0, "negative upper parameter");
    for (const auto& d : f.diag) c.require(sgn(d) > 0, "nonpositive diagonal");
    if (!c.ok) return c;
  }
  c.note("100 matrices, exact round trip");
  return c;
}

// 6. explicit Vandermonde factorization at x = (1,2,3,4)
Check c06() {
  Check c;
  std::vector<Rat> xs{Rat(1), Rat(2), Rat(3), Rat(4)};
  Matrix v = vandermonde_matrix(xs);
  auto factors = vandermonde_explicit_factors(xs);
  Matrix prod = factors[0];
  for (size_t k = 1; k < factors.size(); ++k) prod = prod * factors[k];
  c.require(prod == v, "seven-factor product != V");
  c.require(factors[3](3, 3) == 6, "D(4,4) != 6");
  c.require(is_totally_positive(v).ok, "V not totally positive");
  c.require(is_totally_positive(v * v.transpose()).ok, "V V^T not totally positive");
  return c;
}

// 7. the six classical expansions among e4, h4, p4
Check c07() {
  Check c;
  auto expect = [&](Basis from, Basis to,
                    const std::vector<std::pair<std::string, std::string>>& terms) {
    SymFn want(to);
    for (const auto& [parts, coeff] : terms) want.add_term(Partition::parse(parts), parse_rat(coeff));
    return convert(SymFn::basis_element(from, Partition({4})), to) == want;
  };
  c.require(expect(Basis::e, Basis::h,
                   {{"4", "-1"}, {"3,1", "2"}, {"2,2", "1"}, {"2,1,1", "-3"}, {"1,1,1,1", "1"}}),
            "e4 in h off");
  c.require(expect(Basis::e, Basis::p,
                   {{"4", "-1/4"}, {"3,1", "1/3"}, {"2,2", "1/8"}, {"2,1,1", "-1/4"}, {"1,1,1,1", "1/24"}}),
            "e4 in p off");
  c.require(expect(Basis::h, Basis::e,
                   {{"4", "-1"}, {"3,1", "2"}, {"2,2", "1"}, {"2,1,1", "-3"}, {"1,1,1,1", "1"}}),
            "h4 in e off");
  c.require(expect(Basis::h, Basis::p,
                   {{"4", "1/4"}, {"3,1", "1/3"}, {"2,2", "1/8"}, {"2,1,1", "1/4"}, {"1,1,1,1", "1/24"}}),
            "h4 in p off");
  c.require(expect(Basis::p, Basis::e,
                   {{"4", "-4"}, {"3,1", "4"}, {"2,2", "2"}, {"2,1,1", "-4"}, {"1,1,1,1", "1"}}),
            "p4 in e off");
  c.require(expect(Basis::p, Basis::h,
                   {{"4", "4"}, {"3,1", "-4"}, {"2,2", "-2"}, {"2,1,1", "4"}, {"1,1,1,1", "-1"}}),
            "p4 in h off");
  return c;
}

// 8. Schur expansions of e4, h4, p4 against the recorded goldens
Check c08() {
  Check c;
  c.require(convert(SymFn::basis_element(Basis::e, Partition({4})), Basis::s) ==
                schur({{"1,1,1,1", "1"}}),
            "e4 != s[1,1,1,1]");
  c.require(convert(SymFn::basis_element(Basis::h, Partition({4})), Basis::s) == schur({{"4", "1"}}),
            "h4 != s[4]");
  SymFn p4 = convert(SymFn::basis_element(Basis::p, Partition({4})), Basis::s);
  SymFn golden = schur({{"4", "1"}, {"3,1", "-1"}, {"2,2", "1"}, {"2,1,1", "-1"}});
  if (p4 != golden) {
    c.require(false,
              "recorded golden 's4 - s31 + s22 - s211' is not an identity in the ring; the hook "
              "expansion gives " +
                  p4.str() + " (erratum; see notes)");
  }
  return c;
}

// 9. the eight-term product expansion of s[3,1]*s[2,1]
Check c09() {
  Check c;
  LRCoefficients got = lr_multiply(Partition({3, 1}), Partition({2, 1}));
  LRCoefficients want{{Partition({5, 2}), 1},    {Partition({5, 1, 1}), 1},
                      {Partition({4, 3}), 1},    {Partition({4, 2, 1}), 2},
                      {Partition({4, 1, 1, 1}), 1}, {Partition({3, 3, 1}), 1},
                      {Partition({3, 2, 2}), 1}, {Partition({3, 2, 1, 1}), 1}};
  c.require(got == want, "product expansion differs");
  c.note("8 terms, multiplicity 2 at s[4,2,1]");
  return c;
}

// 10. slides on the six staircase tableaux and the resulting skew expansion
Check c10() {
  Check c;
  auto ts = enumerate_syt(SkewShape::parse("3,2,1/2,1"));
  c.require(ts.size() == 6, "expected 6 standard fillings");
  if (!c.ok) return c;
  std::vector<std::string> want{"1\n2\n3\n", "1 3\n2\n", "1 2\n3\n", "1 2\n3\n", "1 3\n2\n",
                                "1 2 3\n"};
  for (size_t k = 0; k < ts.size(); ++k)
    c.require(jeu_de_taquin(ts[k]).str() == want[k], "slide image " + std::to_string(k + 1) + " off");
  c.require(skew_schur_expand(SkewShape::parse("3,2,1/2,1")) ==
                schur({{"3", "1"}, {"2,1", "2"}, {"1,1,1", "1"}}),
            "skew expansion != s3 + 2 s21 + s111");
  return c;
}

// 11. slide results are independent of the corner order, exhaustively
Check c11() {
  Check c;
  long shapes = 0, tableaux = 0;
  std::function<std::set<Tableau>(const Tableau&, std::map<Tableau, std::set<Tableau>>&)> all_orders =
      [&](const Tableau& t, std::map<Tableau, std::set<Tableau>>& memo) -> std::set<Tableau> {
    if (t.shape().inner.empty()) return {t};
    auto it = memo.find(t);
    if (it != memo.end()) return it->second;
    std::set<Tableau> results;
    for (const auto& corner : inner_corners(t)) {
      auto sub = all_orders(jdt_slide(t, corner), memo);
      results.insert(sub.begin(), sub.end());
    }
    memo.emplace(t, results);
    return results;
  };
  for (const auto& outer : partitions_in_box(6, 6)) {
    if (outer.empty()) continue;
    for (const auto& inner : partitions_in_box(6, 6)) {
      if (!outer.contains(inner)) continue;
      int cells = outer.sum() - inner.sum();
      if (cells < 1 || cells > 6) continue;
      ++shapes;
      for (const auto& t : enumerate_syt(SkewShape(outer, inner))) {
        ++tableaux;
        std::map<Tableau, std::set<Tableau>> memo;
        auto results = all_orders(t, memo);
        if (results.size() != 1 || !(*results.begin() == jeu_de_taquin(t))) {
          c.require(false, "corner orders disagree on shape " + t.shape().str());
          return c;
        }
      }
    }
  }
  c.note(std::to_string(shapes) + " shapes, " + std::to_string(tableaux) + " tableaux");
  return c;
}

// 12. product coefficients equal skew-expansion coefficients up to degree 8
Check c12() {
  Check c;
  long checked = 0;
  for (int n = 1; n <= 8; ++n)
    for (const auto& nu : partitions_of(n))
      for (int m = 0; m <= n; ++m)
        for (const auto& mu : partitions_of(m)) {
          if (!nu.contains(mu)) continue;
          SymFn skew = skew_schur_expand(SkewShape(nu, mu));
          for (const auto& lam : partitions_of(n - m)) {
            long direct = 0;
            auto lr = lr_multiply(lam, mu);
            if (auto it = lr.find(nu); it != lr.end()) direct = it->second;
            ++checked;
            if (skew.coefficient(lam) != Rat(direct)) {
              c.require(false, "coefficient mismatch at nu=" + nu.str() + " mu=" + mu.str() +
                                   " lambda=" + lam.str());
              return c;
            }
          }
        }
  c.note(std::to_string(checked) + " coefficients compared");
  return c;
}

// 13. the three printed positive differences
Check c13() {
  Check c;
  c.require(schur_positive_difference(1) ==
                schur({{"6", "1"}, {"5,1", "2"}, {"4,2", "1"}, {"4,1,1", "1"}}),
            "difference at i=1 off");
  c.require(schur_positive_difference(2) == schur({{"8,1", "1"},
                                                   {"7,2", "2"},
                                                   {"7,1,1", "1"},
                                                   {"6,3", "1"},
                                                   {"6,2,1", "2"},
                                                   {"5,4", "1"},
                                                   {"5,3,1", "1"},
                                                   {"5,2,2", "1"}}),
            "difference at i=2 off");
  c.require(schur_positive_difference(3) == schur({{"10,2", "1"},
                                                   {"9,3", "2"},
                                                   {"9,2,1", "1"},
                                                   {"8,4", "1"},
                                                   {"8,3,1", "2"},
                                                   {"8,2,2", "1"},
                                                   {"7,5", "1"},
                                                   {"7,4,1", "1"},
                                                   {"7,3,2", "2"},
                                                   {"6,6", "1"},
                                                   {"6,5,1", "1"},
                                                   {"6,4,2", "1"},
                                                   {"6,3,3", "1"}}),
            "difference at i=3 off");
  for (int i = 1; i <= 3; ++i)
    c.require(is_schur_positive(schur_positive_difference(i)).positive,
              "difference not Schur positive at i=" + std::to_string(i));
  return c;
}

// 14. the order-3 poset, criterion equivalence, and sampled soundness
Check c14() {
  Check c;
  Poset p3 = poset(3);
  c.require(p3.nodes.size() == 4, "order-3 poset should have 4 products");
  c.require(p3.relations.size() == 5, "order-3 poset should have 5 inequalities");
  c.require(p3.cover_edges.size() == 4, "order-3 poset should have 4 covers");
  bool printed_ineq = false;
  for (const auto& [a, b] : p3.relations)
    if (p3.nodes[static_cast<size_t>(a)].I == IndexSet({1}) &&
        p3.nodes[static_cast<size_t>(b)].I == IndexSet({1, 3}))
      printed_ineq = true;
  c.require(printed_ineq, "D{1}D{2,3} <= D{1,3}D{2} missing");

  for (int n = 1; n <= 6; ++n) {
    Poset a = poset(n, Method::TL);
    Poset b = poset(n, Method::Lattice);
    if (!(a.nodes.size() == b.nodes.size() && a.relations == b.relations)) {
      c.require(false, "criteria disagree at order " + std::to_string(n));
      return c;
    }
  }

  auto rng = make_rng(1014);
  long samples = 0;
  for (int n = 2; n <= 4; ++n) {
    Poset p = poset(n);
    for (int trial = 0; trial < 500; ++trial) {
      Matrix m = random_tnn_matrix(rng, n, 4);
      ++samples;
      for (const auto& [a, b] : p.relations)
        if (!verify_inequality_on(m, p.nodes[static_cast<size_t>(a)],
                                  p.nodes[static_cast<size_t>(b)])) {
          c.require(false, "inequality failed on a sample at order " + std::to_string(n));
          return c;
        }
    }
  }
  c.note("criteria identical through order 6; " + std::to_string(samples) + " sampled matrices");
  return c;
}

// 15. real-rootedness verdicts on the three reference polynomials
Check c15() {
  Check c;
  Poly ok = Poly::parse("1,6,5,1");
  c.require(certify_real_distinct(ok).certified, "1+6z+5z^2+z^3 not certified");
  c.require(sturm_real_root_count(ok) == 3, "1+6z+5z^2+z^3 should have 3 real roots");

  auto r = toeplitz_refute(Poly::parse("1,1,1"), 4);
  c.require(r.refuted, "1+z+z^2 not refuted");
  c.require(r.I == IndexSet({1, 2, 3}) && r.J == IndexSet({2, 3, 4}) && r.witness_value == -1,
            "witness minor differs from rows {1,2,3}, cols {2,3,4} = -1");

  c.require(!certify_real_distinct(Poly::parse("1,2,1")).certified,
            "(1+z)^2 must not certify distinctness");
  return c;
}

// 16. characteristic polynomials of random TNN matrices are real rooted
Check c16() {
  Check c;
  auto rng = make_rng(1016);
  int squarefree = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 3);
    Matrix m = weight_matrix(random_tnn_network(rng, n, 4));
    Poly cp = char_poly(m);
    if (real_root_count_with_multiplicity(cp) != n) {
      c.require(false, "complex eigenvalue detected at trial " + std::to_string(trial));
      return c;
    }
    if (poly_gcd(cp, cp.derivative()).degree() == 0) {
      ++squarefree;
      if (sturm_real_root_count(cp) != n) {
        c.require(false, "distinct-root count off at trial " + std::to_string(trial));
        return c;
      }
    }
  }
  c.note("200 matrices real-rooted with multiplicity; " + std::to_string(squarefree) +
         " squarefree cases counted distinct");
  return c;
}

struct Criterion {
  int id;
  const char* title;
  Check (*run)();
};

const Criterion kCriteria[] = {
    {1, "minor ({1,2},{1,3}) of the path matrix equals 8", c01},
    {2, "exhaustive TNN scan of the path matrix", c02},
    {3, "A^2 = B for matrices and concatenated networks", c03},
    {4, "minors equal disjoint-family weights on 200 random networks", c04},
    {5, "factorization round trip on 100 random TNN matrices", c05},
    {6, "explicit Vandermonde factorization and total positivity", c06},
    {7, "six expansions among e4, h4, p4", c07},
    {8, "Schur goldens for e4, h4, p4", c08},
    {9, "s[3,1]*s[2,1] product expansion", c09},
    {10, "staircase slide images and skew expansion", c10},
    {11, "slide confluence for all shapes with up to 6 cells", c11},
    {12, "product vs skew coefficients through degree 8", c12},
    {13, "positive differences i = 1, 2, 3", c13},
    {14, "minor-product poset, criterion equivalence, sampled soundness", c14},
    {15, "real-rootedness verdicts on reference polynomials", c15},
    {16, "characteristic polynomials of random TNN matrices are real rooted", c16},
};

bool run_one(const Criterion& cr) {
  auto start = std::chrono::steady_clock::now();
  Check c;
  try {
    c = cr.run();
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail = std::string("exception: ") + e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count();
  std::printf("[%2d] %-66s %s (%lld ms)%s%s\n", cr.id, cr.title, c.ok ? "PASS" : "FAIL",
              static_cast<long long>(ms), c.detail.empty() ? "" : " -- ", c.detail.c_str());
  std::fflush(stdout);
  return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
  bool all_ok = true;
  if (argc > 1 && std::string(argv[1]) != "all") {
    int id = std::atoi(argv[1]);
    for (const auto& cr : kCriteria)
      if (cr.id == id) return run_one(cr) ? 0 : 1;
    std::fprintf(stderr, "unknown criterion %s\n", argv[1]);
    return 2;
  }
  for (const auto& cr : kCriteria) all_ok = run_one(cr) && all_ok;
  return all_ok ? 0 : 1;
}
