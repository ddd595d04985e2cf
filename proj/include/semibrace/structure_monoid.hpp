#pragma once

// The structure monoid M(r) = < X | xy = uv whenever r(x,y) = (u,v) >.
// Relations preserve length, so M(r) is graded by word length; the degree-d
// component is computed as the connected components of X^d under one-step
// rewrites at any position, via union-find over the n^d words.

#include <cmath>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "semibrace.hpp"
#include "ybe.hpp"

namespace semibrace {

inline constexpr std::size_t kDefaultWordCap = 1'000'000;

struct Relation {
  Elem x, y, u, v;  // xy = uv
  friend bool operator==(Relation const&, Relation const&) = default;
};

class QuadraticPresentation {
 public:
  QuadraticPresentation() = default;
  QuadraticPresentation(std::size_t n, std::vector<Relation> relations)
      : _n(n), _relations(std::move(relations)), _rewrite(n * n) {
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        _rewrite[x * n + y] = {x, y};
      }
    }
    for (auto const& r : _relations) {
      if (r.x >= n || r.y >= n || r.u >= n || r.v >= n) {
        throw Error(ErrorKind::validation, "RangeError", "relation letter outside alphabet");
      }
      _rewrite[r.x * n + r.y] = {r.u, r.v};
    }
  }

  std::size_t generators() const noexcept { return _n; }
  std::vector<Relation> const& relations() const noexcept { return _relations; }
  Pair rewrite(Elem x, Elem y) const noexcept { return _rewrite[x * _n + y]; }

 private:
  std::size_t           _n = 1;
  std::vector<Relation> _relations;
  std::vector<Pair>     _rewrite{{0, 0}};
};

/// One relation xy = uv per pair with r(x, y) != (x, y).
inline QuadraticPresentation presentation(SetSolution const& s) {
  std::vector<Relation> rels;
  for (Elem x = 0; x < s.size(); ++x) {
    for (Elem y = 0; y < s.size(); ++y) {
      auto [u, v] = s(x, y);
      if (Pair{u, v} != Pair{x, y}) {
        rels.push_back({x, y, u, v});
      }
    }
  }
  return QuadraticPresentation(s.size(), std::move(rels));
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : _parent(n), _size(n, 1) {
    std::iota(_parent.begin(), _parent.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x          = _parent[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return;
    }
    if (_size[a] < _size[b]) {
      std::swap(a, b);
    }
    _parent[b] = a;
    _size[a] += _size[b];
  }

 private:
  std::vector<std::size_t> _parent;
  std::vector<std::size_t> _size;
};

inline std::size_t checked_power(std::size_t n, std::size_t d, std::size_t cap) {
  std::size_t p = 1;
  for (std::size_t k = 0; k < d; ++k) {
    if (p > cap / std::max<std::size_t>(n, 1)) {
      throw Error(ErrorKind::cap, "CapExceeded",
                  std::to_string(n) + "^" + std::to_string(d) + " words exceed the cap of "
                      + std::to_string(cap));
    }
    p *= n;
  }
  if (p > cap) {
    throw Error(ErrorKind::cap, "CapExceeded",
                std::to_string(n) + "^" + std::to_string(d) + " words exceed the cap of "
                    + std::to_string(cap));
  }
  return p;
}

}  // namespace detail

enum class Traversal { forward, reverse };

struct DegreeOptions {
  std::size_t word_cap  = kDefaultWordCap;
  Traversal   traversal = Traversal::forward;
};

/// Equivalence classes of words of one length. Words are coded base n with
/// the first letter most significant, so numeric order is lexicographic order.
struct DegreeClasses {
  std::size_t                    degree     = 0;
  std::size_t                    generators = 1;
  std::vector<std::uint32_t>     class_of;         // word code -> class id
  std::vector<std::vector<Elem>> representatives;  // class id -> least word
  std::vector<std::size_t>       class_sizes;

  std::size_t count() const noexcept { return representatives.size(); }
  std::size_t words() const noexcept { return class_of.size(); }

  std::vector<Elem> decode(std::size_t code) const {
    std::vector<Elem> w(degree);
    for (std::size_t k = degree; k-- > 0;) {
      w[k] = static_cast<Elem>(code % generators);
      code /= generators;
    }
    return w;
  }

  std::size_t encode(std::vector<Elem> const& w) const {
    std::size_t code = 0;
    for (Elem x : w) {
      code = code * generators + x;
    }
    return code;
  }
};

inline DegreeClasses degree_classes(QuadraticPresentation const& p,
                                    std::size_t                  degree,
                                    DegreeOptions const&         opts = {}) {
  std::size_t const n     = p.generators();
  std::size_t const total = detail::checked_power(n, degree, opts.word_cap);
  detail::UnionFind uf(total);

  std::vector<std::size_t> place(degree);  // n^(degree-1-k)
  for (std::size_t k = degree, w = 1; k-- > 0; w *= n) {
    place[k] = w;
  }
  auto visit = [&](std::size_t code) {
    for (std::size_t k = 0; k + 1 < degree; ++k) {
      Elem x      = static_cast<Elem>((code / place[k]) % n);
      Elem y      = static_cast<Elem>((code / place[k + 1]) % n);
      auto [u, v] = p.rewrite(x, y);
      if (u != x || v != y) {
        std::size_t other = code - x * place[k] - y * place[k + 1] + u * place[k] + v * place[k + 1];
        uf.unite(code, other);
      }
    }
  };
  if (opts.traversal == Traversal::forward) {
    for (std::size_t c = 0; c < total; ++c) {
      visit(c);
    }
  } else {
    for (std::size_t c = total; c-- > 0;) {
      visit(c);
    }
  }

  DegreeClasses out;
  out.degree     = degree;
  out.generators = n;
  out.class_of.resize(total);
  constexpr std::uint32_t  unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> id_of_root(total, unset);
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t root = uf.find(c);
    if (id_of_root[root] == unset) {
      id_of_root[root] = static_cast<std::uint32_t>(out.representatives.size());
      out.representatives.push_back(out.decode(c));
      out.class_sizes.push_back(0);
    }
    out.class_of[c] = id_of_root[root];
    ++out.class_sizes[id_of_root[root]];
  }
  return out;
}

/// True when the o-product of the letters is constant on every class.
inline bool circ_product_invariant(LeftSemiBrace const& B, DegreeClasses const& dc) {
  constexpr Elem    unset = static_cast<Elem>(-1);
  std::vector<Elem> value(dc.count(), unset);
  for (std::size_t c = 0; c < dc.words(); ++c) {
    Elem prod = B.one();
    for (Elem x : dc.decode(c)) {
      prod = B.circ(prod, x);
    }
    auto& v = value[dc.class_of[c]];
    if (v == unset) {
      v = prod;
    } else if (v != prod) {
      return false;
    }
  }
  return true;
}

struct GrowthReport {
  std::vector<std::size_t> per_degree;  // d_0 .. d_max
  std::vector<std::size_t> cumulative;  // c_k = d_0 + ... + d_k
  /// 1 + log2(d_{2m} / d_m): the exponent of the graded counts plus one.
  std::optional<double> gk_estimate;
  /// log2(c_{2m} / c_m), the doubling ratio of cumulative counts.
  std::optional<double> cumulative_doubling;
  std::size_t           m = 0;
  std::string           method;
};

/// Graded counts d_0..d_max and a GK dimension estimate from degrees m, 2m
/// with m = max_degree / 2. The estimate is numerical, not an exact dimension.
inline GrowthReport growth_series(QuadraticPresentation const& p,
                                  std::size_t                  max_degree,
                                  DegreeOptions const&         opts = {}) {
  for (std::size_t d = 0; d <= max_degree; ++d) {
    detail::checked_power(p.generators(), d, opts.word_cap);
  }
  GrowthReport rep;
  std::size_t  running = 0;
  for (std::size_t d = 0; d <= max_degree; ++d) {
    rep.per_degree.push_back(degree_classes(p, d, opts).count());
    running += rep.per_degree.back();
    rep.cumulative.push_back(running);
  }
  rep.m = max_degree / 2;
  if (rep.m >= 1) {
    auto const m = rep.m;
    rep.gk_estimate = 1.0 + std::log2(static_cast<double>(rep.per_degree[2 * m])
                                      / static_cast<double>(rep.per_degree[m]));
    rep.cumulative_doubling = std::log2(static_cast<double>(rep.cumulative[2 * m])
                                        / static_cast<double>(rep.cumulative[m]));
    rep.method = "graded-doubling 1+log2(d_" + std::to_string(2 * m) + "/d_" + std::to_string(m)
                 + ")";
  } else {
    rep.method = "none (max degree below 2)";
  }
  return rep;
}

/// Rows "degree,count,cumulative" with a header line.
inline void write_growth_csv(std::ostream& os, GrowthReport const& rep) {
  os << "degree,count,cumulative\n";
  for (std::size_t d = 0; d < rep.per_degree.size(); ++d) {
    os << d << ',' << rep.per_degree[d] << ',' << rep.cumulative[d] << '\n';
  }
}

struct GradedDegreeReport {
  std::size_t degree        = 0;
  std::size_t classes       = 0;
  std::size_t bound         = 0;  // |1B| |1B1|^(n-2) |B1|
  bool        covered       = true;
  bool        within_bound  = true;
  bool        circ_invariant = true;
};

struct GradedReport {
  std::vector<GradedDegreeReport> degrees;
  bool ok() const {
    return std::all_of(degrees.begin(), degrees.end(), [](auto const& d) {
      return d.covered && d.within_bound && d.circ_invariant;
    });
  }
};

/// For each degree 2..max_degree, checks that every class of M(r_B) contains
/// a word x_1..x_n with x_1 in 1B, x_2..x_{n-1} in 1B1 and x_n in B1, and
/// that the class count is within |1B| |1B1|^(n-2) |B1|.
inline GradedReport verify_graded_decomposition(LeftSemiBrace const& B,
                                                std::size_t          max_degree,
                                                DegreeOptions const& opts = {}) {
  require_rho_antihomomorphism(B);
  auto const cd = corners(B);
  auto const p  = presentation(solution_from_semibrace(B));
  GradedReport rep;
  for (std::size_t d = 2; d <= max_degree; ++d) {
    auto const dc = degree_classes(p, d, opts);
    GradedDegreeReport r;
    r.degree  = d;
    r.classes = dc.count();
    r.bound   = cd.R.count() * cd.K.count();
    for (std::size_t k = 2; k < d; ++k) {
      r.bound *= cd.G.count();
    }
    r.within_bound = r.classes <= r.bound;
    std::vector<char> has_normal(dc.count(), 0);
    for (std::size_t c = 0; c < dc.words(); ++c) {
      if (has_normal[dc.class_of[c]]) {
        continue;
      }
      auto w = dc.decode(c);
      bool normal = cd.R.contains(w.front()) && cd.K.contains(w.back());
      for (std::size_t k = 1; normal && k + 1 < d; ++k) {
        normal = cd.G.contains(w[k]);
      }
      if (normal) {
        has_normal[dc.class_of[c]] = 1;
      }
    }
    r.covered        = std::all_of(has_normal.begin(), has_normal.end(), [](char c) { return c; });
    r.circ_invariant = circ_product_invariant(B, dc);
    rep.degrees.push_back(r);
  }
  return rep;
}

struct InterchangeReport {
  bool g_k_equals_k_g   = false;  // (1B1)*(B1) = (B1)*(1B1)
  bool r_g_equals_g_r   = false;  // (1B)*(1B1) = (1B1)*(1B)
  bool first_witness    = true;   // r(fs, t) = (g, eh)
  bool second_witness   = true;   // r(t, sf) = (ge, h)
  std::vector<Elem> first_counterexample;   // (g, h, e)
  std::vector<Elem> second_counterexample;  // (g, h, e)

  bool ok() const { return g_k_equals_k_g && r_g_equals_g_r && first_witness && second_witness; }
};

/// Compares the degree-2 class sets generated by 1B1 x B1 and B1 x 1B1 (and
/// by 1B x 1B1 and 1B1 x 1B), and checks the explicit rewrites that realize
/// the interchange.
///
/// For g, h in 1B1 and e in E(B1), with g^-1 the inverse in (1B1, .):
///   f = (g o e) g^-1,  s = g lambda_g(h) g^-1,  t = lambda_{((g o (eh)) g^-1)'}(g)
///   and r(fs, t) = (g, eh).
/// For g, h in 1B1 and e in E(1B):
///   t = (rho_{(ge)'}(h'))',  s = lambda_{t'}(g),  f = lambda_{t'}(e)
///   and r(t, sf) = (ge, h).
inline InterchangeReport verify_interchange(LeftSemiBrace const& B) {
  require_rho_antihomomorphism(B);
  auto const cd  = corners(B);
  auto const sol = solution_from_semibrace(B);
  auto const dc  = degree_classes(presentation(sol), 2);
  std::size_t const n = B.size();

  auto class_set = [&](SubsetMask const& first, SubsetMask const& second) {
    std::vector<char> hit(dc.count(), 0);
    for (Elem x : first.members()) {
      for (Elem y : second.members()) {
        hit[dc.class_of[x * n + y]] = 1;
      }
    }
    return hit;
  };
  InterchangeReport rep;
  rep.g_k_equals_k_g = class_set(cd.G, cd.K) == class_set(cd.K, cd.G);
  rep.r_g_equals_g_r = class_set(cd.R, cd.G) == class_set(cd.G, cd.R);

  auto const& rs = cd.rees;
  std::vector<Elem> ginv(n, 0);
  for (Elem k = 0; k < rs.group_elements.size(); ++k) {
    ginv[rs.group_elements[k]] = rs.group_elements[rs.group.inverse(k)];
  }
  for (Elem g : cd.G.members()) {
    for (Elem h : cd.G.members()) {
      for (Elem e : cd.idempotents_K.members()) {
        Elem f  = B.dot(B.circ(g, e), ginv[g]);
        Elem s  = B.dot(B.dot(g, lambda(B, g, h)), ginv[g]);
        Elem eh = B.dot(e, h);
        Elem t  = lambda(B, B.inv(B.dot(B.circ(g, eh), ginv[g])), g);
        if (sol(B.dot(f, s), t) != Pair{g, eh} && rep.first_witness) {
          rep.first_witness        = false;
          rep.first_counterexample = {g, h, e};
        }
      }
      for (Elem e : cd.idempotents_R.members()) {
        Elem ge = B.dot(g, e);
        Elem t  = B.inv(rho(B, B.inv(ge), B.inv(h)));
        Elem s  = lambda(B, B.inv(t), g);
        Elem f  = lambda(B, B.inv(t), e);
        if (sol(t, B.dot(s, f)) != Pair{ge, h} && rep.second_witness) {
          rep.second_witness        = false;
          rep.second_counterexample = {g, h, e};
        }
      }
    }
  }
  return rep;
}

struct ZeroMonoidDegree {
  std::size_t degree      = 0;
  std::size_t classes     = 0;
  bool        well_defined = true;  // o-product constant on each class
  bool        bijective    = true;  // classes <-> E x {degree}
};

struct ZeroMonoidReport {
  ZeroSide                      side = ZeroSide::right;
  std::vector<ZeroMonoidDegree> degrees;
  bool                          multiplicative = true;

  bool ok() const {
    return multiplicative && std::all_of(degrees.begin(), degrees.end(), [](auto const& d) {
             return d.well_defined && d.bijective;
           });
  }
};

/// For a left or right zero semi-brace E, checks the model
///   class of f_1 ... f_n  ->  (f_1 o ... o f_n, n)
/// is a well-defined bijection onto E x {n} for every 1 <= n <= max_degree,
/// and that concatenation maps to (f o g, k + l) on a deterministic sample.
inline ZeroMonoidReport right_zero_monoid_check(LeftSemiBrace const& E,
                                                std::size_t          max_degree,
                                                DegreeOptions const& opts = {}) {
  std::size_t const n     = E.size();
  bool              right = true, left = true;
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      right = right && E.dot(x, y) == y;
      left  = left && E.dot(x, y) == x;
    }
  }
  if (!right && !left) {
    throw Error(ErrorKind::hypothesis, "NotZeroSemibrace",
                "dot is neither a left nor a right zero semigroup");
  }
  ZeroMonoidReport rep;
  rep.side      = right ? ZeroSide::right : ZeroSide::left;
  auto const p  = presentation(solution_from_semibrace(E));

  auto product = [&](std::vector<Elem> const& w) {
    Elem v = E.one();
    for (Elem x : w) {
      v = E.circ(v, x);
    }
    return v;
  };
  std::vector<DegreeClasses>     classes(max_degree + 1);
  std::vector<std::vector<Elem>> model(max_degree + 1);  // class id -> o-product
  for (std::size_t d = 1; d <= max_degree; ++d) {
    classes[d] = degree_classes(p, d, opts);
    auto const&      dc = classes[d];
    ZeroMonoidDegree r;
    r.degree  = d;
    r.classes = dc.count();
    constexpr Elem unset = static_cast<Elem>(-1);
    model[d].assign(dc.count(), unset);
    for (std::size_t c = 0; c < dc.words(); ++c) {
      Elem v  = product(dc.decode(c));
      auto& m = model[d][dc.class_of[c]];
      if (m == unset) {
        m = v;
      } else if (m != v) {
        r.well_defined = false;
      }
    }
    std::vector<char> hit(n, 0);
    for (Elem v : model[d]) {
      if (v == unset || hit[v]) {
        r.bijective = false;
      } else {
        hit[v] = 1;
      }
    }
    r.bijective = r.bijective && dc.count() == n;
    rep.degrees.push_back(r);
  }
  for (std::size_t a = 1; a < max_degree; ++a) {
    for (std::size_t b = 1; a + b <= max_degree; ++b) {
      auto const& da     = classes[a];
      auto const& db     = classes[b];
      std::size_t step_a = std::max<std::size_t>(1, da.words() / 7);
      std::size_t step_b = std::max<std::size_t>(1, db.words() / 5);
      for (std::size_t u = 0; u < da.words(); u += step_a) {
        for (std::size_t v = 0; v < db.words(); v += step_b) {
          auto w = da.decode(u);
          auto wb = db.decode(v);
          w.insert(w.end(), wb.begin(), wb.end());
          Elem expected = E.circ(model[a][da.class_of[u]], model[b][db.class_of[v]]);
          Elem got      = model[a + b][classes[a + b].class_of[classes[a + b].encode(w)]];
          if (expected != got) {
            rep.multiplicative = false;
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace semibrace
