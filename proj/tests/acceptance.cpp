// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "support/fixtures.hpp"

using namespace semibrace;

namespace {

struct Outcome {
  bool        ok = true;
  std::string detail;

  void fail(std::string const& what) {
    if (ok) {
      detail = what;
    }
    ok = false;
  }
};

struct Criterion {
  int                      id;
  std::string              name;
  double                   budget_seconds;
  std::function<Outcome()> run;
};

oracle::Solution compose(oracle::Solution const& a, oracle::Solution const& b) {
  auto out = a;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      auto [u, v] = a[x][y];
      out[x][y]   = b[u][v];
    }
  }
  return out;
}

bool abelian_on(oracle::Table const& dot, std::set<int> const& S) {
  for (int x : S) {
    for (int y : S) {
      if (dot[x][y] != dot[y][x]) {
        return false;
      }
    }
  }
  return true;
}

// The order 6 example built directly: xi^k <-> (k mod 3, k div 3),
// (x,y)(z,w) = (x, y+w), and o the cyclic group of order 6.
void c6_tables(oracle::Table& dot, oracle::Table& circ) {
  dot.assign(6, std::vector<int>(6));
  circ.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      int x = a % 3, y = a / 3, w = b / 3;
      dot[a][b]  = x + 3 * ((y + w) % 2);
      circ[a][b] = (a + b) % 6;
    }
  }
}

// map : product index -> element of B. Checks injectivity, image == target,
// and that both operations are carried over.
bool product_map_is_isomorphism(LeftSemiBrace const&    P,
                                oracle::Table const&    dot,
                                oracle::Table const&    circ,
                                std::vector<int> const& map,
                                std::set<int> const&    target) {
  std::set<int> image(map.begin(), map.end());
  if (image.size() != map.size() || image != target) {
    return false;
  }
  auto pd = fixtures::dot(P), pc = fixtures::circ(P);
  for (std::size_t p = 0; p < map.size(); ++p) {
    for (std::size_t q = 0; q < map.size(); ++q) {
      if (map[pd[p][q]] != dot[map[p]][map[q]] || map[pc[p][q]] != circ[map[p]][map[q]]) {
        return false;
      }
    }
  }
  return true;
}

std::vector<Criterion> criteria() {
  std::vector<Criterion> out;

  out.push_back({1, "C6 example", 1.0, [] {
    Outcome       o;
    oracle::Table dot, circ;
    c6_tables(dot, circ);
    auto B = example_c6();
    if (fixtures::dot(B) != dot || fixtures::circ(B) != circ) {
      o.fail("tables differ from the direct construction");
    }
    if (!oracle::is_semibrace(dot, circ) || !verify_left_semibrace(B.dot_table(), B.circ_group().table()).ok()) {
      o.fail("not a left semi-brace");
    }
    if (is_rho_antihomomorphism(B).holds || oracle::rho_antihom(dot, circ)) {
      o.fail("rho reported anti-homomorphic");
    }
    auto ids = corners(B).idempotents_B;
    if (fixtures::as_set(ids) != std::set<int>{0, 1, 2} || oracle::idempotents(dot) != std::set<int>{0, 1, 2}) {
      o.fail("idempotents are not {xi^0, xi, xi^2}");
    }
    if (is_circ_subgroup(B, ids) || circ[1][1] != 2 || circ[1][2] != 3) {
      o.fail("E(B) is o-closed");
    }
    if (o.ok) {
      o.detail = "idempotents {0,1,2}, 1 o 2 = 3 outside E(B)";
    }
    return o;
  }});

  out.push_back({2, "YBE over product and zero corpus", 30.0, [] {
    Outcome o;
    auto    all = fixtures::corpus();
    for (auto const& [name, B] : all) {
      auto s = solution_from_semibrace(B);
      if (!verify_ybe(s).holds) {
        o.fail(name + ": verify_ybe false");
      }
      if (!oracle::braid(oracle::solution(fixtures::dot(B), fixtures::circ(B)))) {
        o.fail(name + ": oracle braid relation fails");
      }
    }
    if (o.ok) {
      o.detail = std::to_string(all.size()) + " instances";
    }
    return o;
  }});

  out.push_back({3, "power laws r^3 = r and r^2 = r", 30.0, [] {
    Outcome o;
    int     cubic = 0, square = 0;
    for (auto const& [name, B] : fixtures::corpus()) {
      auto dot = fixtures::dot(B), circ = fixtures::circ(B);
      auto c   = oracle::corners(dot, int(B.one()));
      auto r   = oracle::solution(dot, circ);
      auto r2  = compose(r, r);
      auto p   = power_properties(solution_from_semibrace(B));
      if (abelian_on(dot, c.G)) {
        ++cubic;
        if (compose(r2, r) != r || !p.cubic_r3) {
          o.fail(name + ": r^3 != r");
        }
      }
      if (c.G.size() == 1) {
        ++square;
        if (r2 != r || !p.idempotent_r2) {
          o.fail(name + ": r^2 != r");
        }
      }
    }
    if (o.ok) {
      o.detail = std::to_string(cubic) + " abelian, " + std::to_string(square) + " trivial G";
    }
    return o;
  }});

  out.push_back({4, "right zero structure monoid", 5.0, [] {
    Outcome o;
    for (std::size_t k = 1; k <= 3; ++k) {
      auto E   = zero_semibrace(cyclic_group(k), ZeroSide::right);
      auto rep = right_zero_monoid_check(E, 6);
      if (!rep.ok()) {
        o.fail("|E| = " + std::to_string(k) + ": model map not a bijection");
      }
      auto r = oracle::solution(fixtures::dot(E), fixtures::circ(E));
      for (std::size_t n = 1; n <= 6; ++n) {
        if (rep.degrees[n - 1].classes != k || oracle::word_classes(r, int(n)).size() != k) {
          o.fail("|E| = " + std::to_string(k) + ", degree " + std::to_string(n));
        }
      }
    }
    o.detail = o.ok ? "d_n = |E| for n <= 6" : o.detail;
    return o;
  }});

  out.push_back({5, "trivial brace on C2 growth", 5.0, [] {
    Outcome o;
    auto    B   = trivial_brace(cyclic_group(2));
    auto    rep = growth_series(presentation(solution_from_semibrace(B)), 10);
    for (std::size_t n = 0; n <= 10; ++n) {
      if (rep.per_degree[n] != n + 1) {
        o.fail("d_" + std::to_string(n) + " = " + std::to_string(rep.per_degree[n]));
      }
    }
    // independent counts from the oracle up to degree 6
    auto r = oracle::solution(fixtures::dot(B), fixtures::circ(B));
    for (int n = 0; n <= 6; ++n) {
      if (oracle::word_classes(r, n).size() != std::size_t(n + 1)) {
        o.fail("oracle d_" + std::to_string(n));
      }
    }
    if (rep.m != 5 || !rep.gk_estimate || *rep.gk_estimate < 1.8 || *rep.gk_estimate > 2.2) {
      o.fail("gk_estimate outside [1.8, 2.2]");
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "gk_estimate %.4f (m = 5), cumulative doubling %.4f",
                  rep.gk_estimate.value_or(0), rep.cumulative_doubling.value_or(0));
    if (o.ok) {
      o.detail = buf;
    } else {
      o.detail += "; " + std::string(buf);
    }
    return o;
  }});

  out.push_back({6, "graded normal form and interchange", 60.0, [] {
    Outcome o;
    auto B   = product_semibrace(trivial_brace(cyclic_group(2)), cyclic_group(2), cyclic_group(2));
    auto rep = verify_graded_decomposition(B, 5);
    auto c   = oracle::corners(fixtures::dot(B), int(B.one()));
    auto r   = oracle::solution(fixtures::dot(B), fixtures::circ(B));
    for (auto const& d : rep.degrees) {
      std::size_t bound = c.R.size() * c.K.size();
      for (std::size_t k = 2; k < d.degree; ++k) {
        bound *= c.G.size();
      }
      if (!d.covered) {
        o.fail("degree " + std::to_string(d.degree) + ": class without normal form");
      }
      if (d.bound != bound || d.classes > bound) {
        o.fail("degree " + std::to_string(d.degree) + ": bound");
      }
      if (d.degree <= 4 && oracle::word_classes(r, int(d.degree)).size() != d.classes) {
        o.fail("degree " + std::to_string(d.degree) + ": class count differs from oracle");
      }
    }
    if (rep.degrees.size() != 4 || !rep.ok()) {
      o.fail("graded report not ok");
    }
    if (!verify_interchange(B).ok()) {
      o.fail("interchange");
    }
    if (o.ok) {
      o.detail = "d_5 = " + std::to_string(rep.degrees.back().classes) + " <= "
                 + std::to_string(rep.degrees.back().bound);
    }
    return o;
  }});

  out.push_back({7, "decomposition round trip", 30.0, [] {
    Outcome o;
    int     count = 0;
    for (auto const& [name, B] : fixtures::corpus()) {
      auto dot = fixtures::dot(B), circ = fixtures::circ(B);
      if (!oracle::rho_antihom(dot, circ)) {
        continue;
      }
      ++count;
      auto dec = decompose(B);
      auto P   = matched_product(dec.data);
      auto const& Ke = dec.K.elements;
      auto const& Re = dec.R.elements;
      std::vector<int> map(P.size());
      for (std::size_t p = 0; p < P.size(); ++p) {
        map[p] = dot[Ke[p / Re.size()]][Re[p % Re.size()]];
      }
      std::set<int> all;
      for (int x = 0; x < int(B.size()); ++x) {
        all.insert(x);
      }
      if (!product_map_is_isomorphism(P, dot, circ, map, all)) {
        o.fail(name + ": K x E(R) -> B");
      }
      auto Q = matched_product(dec.inner.data);
      auto const& Ge = dec.inner.G.elements;
      auto const& Ee = dec.inner.E.elements;
      std::vector<int> inner(Q.size());
      for (std::size_t p = 0; p < Q.size(); ++p) {
        inner[p] = dot[Ee[p % Ee.size()]][Ge[p / Ee.size()]];
      }
      auto c = oracle::corners(dot, int(B.one()));
      if (!product_map_is_isomorphism(Q, dot, circ, inner, c.K)) {
        o.fail(name + ": G x E(K) -> K");
      }
    }
    if (o.ok) {
      o.detail = std::to_string(count) + " instances";
    }
    return o;
  }});

  out.push_back({8, "socle ideal and quotient", 30.0, [] {
    Outcome o;
    int     count = 0;
    for (auto const& [name, B] : fixtures::corpus()) {
      auto dot = fixtures::dot(B), circ = fixtures::circ(B);
      if (!oracle::rho_antihom(dot, circ)) {
        continue;
      }
      ++count;
      auto soc = socle(B);
      std::set<int> expected;
      int one = int(B.one());
      for (int x = 0; x < int(B.size()); ++x) {
        bool in = true;
        for (int b = 0; b < int(B.size()); ++b) {
          in = in && oracle::lambda(dot, circ, x, b) == oracle::lambda(dot, circ, one, b)
               && oracle::rho(dot, circ, x, b) == oracle::rho(dot, circ, one, b);
        }
        if (in) {
          expected.insert(x);
        }
      }
      if (fixtures::as_set(soc) != expected) {
        o.fail(name + ": socle differs from its definition");
      }
      if (!is_ideal(B, soc).is_ideal()) {
        o.fail(name + ": socle not an ideal");
      }
      if (B.size() <= kIdealCap) {
        auto ideals = oracle::ideals(dot, circ);
        if (std::find(ideals.begin(), ideals.end(), expected) == ideals.end()) {
          o.fail(name + ": socle not among oracle ideals");
        }
      }
      auto q = quotient(B, soc);
      if (!oracle::is_semibrace(fixtures::dot(q.brace), fixtures::circ(q.brace))) {
        o.fail(name + ": quotient not a semi-brace");
      }
      std::set<int> ker;
      for (std::size_t x = 0; x < B.size(); ++x) {
        if (q.projection.map[x] == q.projection.map[B.one()]) {
          ker.insert(int(x));
        }
      }
      if (ker != expected || kernel(q.projection) != soc) {
        o.fail(name + ": kernel differs from the socle");
      }
    }
    if (o.ok) {
      o.detail = std::to_string(count) + " instances";
    }
    return o;
  }});

  out.push_back({9, "structural invariants", 30.0, [] {
    Outcome o;
    int     count = 0;
    for (auto const& [name, B] : fixtures::corpus()) {
      ++count;
      auto dot = fixtures::dot(B), circ = fixtures::circ(B);
      int  n   = int(B.size());
      int  one = int(B.one());
      auto c   = oracle::corners(dot, one);
      auto r   = oracle::solution(dot, circ);
      auto ids = oracle::idempotents(dot);
      std::set<int> e_R;
      for (int x : c.R) {
        if (ids.count(x)) {
          e_R.insert(x);
        }
      }
      auto L = [&](int a, int b) { return oracle::lambda(dot, circ, a, b); };
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (int(lambda(B, a, b)) != L(a, b) || int(rho(B, a, b)) != oracle::rho(dot, circ, a, b)) {
            o.fail(name + ": lambda/rho differ from the definitions");
          }
          if (dot[a][b] != dot[dot[a][one]][b]) {
            o.fail(name + ": ab != a1b");
          }
          if (!c.R.count(L(a, b)) || !c.K.count(oracle::rho(dot, circ, a, b))) {
            o.fail(name + ": corner containment");
          }
          if (ids.count(b) && !e_R.count(L(a, b))) {
            o.fail(name + ": lambda_a(E(B)) not in E(1B)");
          }
          auto [u, v] = r[a][b];
          if (circ[u][v] != circ[a][b]) {
            o.fail(name + ": u o v != x o y");
          }
          for (int x = 0; x < n; ++x) {
            if (L(circ[a][b], x) != L(a, L(b, x))) {
              o.fail(name + ": lambda not a homomorphism of (B, o)");
            }
            if (L(a, dot[b][x]) != dot[L(a, b)][L(a, x)]) {
              o.fail(name + ": lambda_a not an endomorphism of (B, .)");
            }
          }
        }
      }
    }
    if (o.ok) {
      o.detail = std::to_string(count) + " instances";
    }
    return o;
  }});

  return out;
}

}  // namespace

int main() {
  int failures = 0;
  for (auto const& c : criteria()) {
    auto    start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.fail("over budget " + std::to_string(c.budget_seconds) + " s");
    }
    std::printf("%s %d %s (%.3f s): %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                o.detail.c_str());
    failures += o.ok ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
