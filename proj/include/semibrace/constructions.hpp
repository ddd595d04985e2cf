#pragma once

// Ways to build left semi-braces: matched products, component-wise products
// on Rees semigroups, zero semi-braces, the order-6 example on Z3 x Z2,
// the matched-product decomposition of a semi-brace with rho an
// anti-homomorphism, and enumeration of all compatible group structures on a
// given semigroup.

#include <functional>
#include <string>
#include <vector>

#include "semibrace.hpp"

namespace semibrace {

using Permutation = std::vector<Elem>;

/// Data for a matched product B x S.
/// delta[a] is a permutation of S (a right action of (B, o));
/// sigma[x] is a permutation of B (a left action of (S, o)).
struct MatchedData {
  LeftSemiBrace            B;
  LeftSemiBrace            S;
  std::vector<Permutation> delta;
  std::vector<Permutation> sigma;
};

/// Outcome of one law in a verification report.
struct LawCheck {
  std::string       name;
  bool              holds = true;
  std::vector<Elem> witness;
};

struct MatchedReport {
  std::vector<LawCheck> checks;
  // informational, not part of valid()
  bool sigma_automorphisms = true;

  bool valid() const {
    return std::all_of(checks.begin(), checks.end(), [](LawCheck const& c) { return c.holds; });
  }
  LawCheck const* first_failure() const {
    for (auto const& c : checks) {
      if (!c.holds) {
        return &c;
      }
    }
    return nullptr;
  }
};

namespace detail {

inline bool is_permutation_of(Permutation const& p, std::size_t n) {
  if (p.size() != n) {
    return false;
  }
  std::vector<char> seen(n, 0);
  for (Elem x : p) {
    if (x >= n || seen[x]) {
      return false;
    }
    seen[x] = 1;
  }
  return true;
}

// Appends one named law to a report, with the witness returned by `fn`.
class LawRunner {
 public:
  explicit LawRunner(MatchedReport& report) : _report(report) {}

  void check(std::string name, std::function<std::optional<std::vector<Elem>>()> const& fn) {
    LawCheck c{std::move(name), true, {}};
    if (auto w = fn()) {
      c.holds   = false;
      c.witness = *w;
    }
    _report.checks.push_back(std::move(c));
  }

 private:
  MatchedReport& _report;
};

}  // namespace detail

/// Checks the action laws, the automorphism property of delta, and
/// conditions 1-5 of a matched product, in that order. Never throws.
///
///   1. sigma_x(a o b) = sigma_x(a) o sigma_{delta_a(x)}(b)
///   2. sigma_x(1) = 1
///   3. delta_a(x o y) = delta_{sigma_y(a)}(x) o delta_a(y)
///   4. delta_a(1) = 1
///   5. (delta_a((xy)'))' = (delta_a(x'))' (delta_a(y'))'
inline MatchedReport verify_matched_data(MatchedData const& d) {
  MatchedReport     report;
  detail::LawRunner run(report);
  auto const&       B  = d.B;
  auto const&       S  = d.S;
  std::size_t const nb = B.size();
  std::size_t const ns = S.size();

  bool shapes = d.delta.size() == nb && d.sigma.size() == ns;
  for (std::size_t a = 0; shapes && a < nb; ++a) {
    shapes = detail::is_permutation_of(d.delta[a], ns);
  }
  for (std::size_t x = 0; shapes && x < ns; ++x) {
    shapes = detail::is_permutation_of(d.sigma[x], nb);
  }
  report.checks.push_back({"bijections", shapes, {}});
  if (!shapes) {
    report.sigma_automorphisms = false;
    return report;
  }
  auto delta = [&](Elem a, Elem x) { return d.delta[a][x]; };
  auto sigma = [&](Elem x, Elem a) { return d.sigma[x][a]; };
  using W    = std::optional<std::vector<Elem>>;

  run.check("delta right action", [&]() -> W {
    for (Elem x = 0; x < ns; ++x) {
      if (delta(B.one(), x) != x) {
        return std::vector<Elem>{B.one(), B.one(), x};
      }
    }
    for (Elem a = 0; a < nb; ++a) {
      for (Elem b = 0; b < nb; ++b) {
        for (Elem x = 0; x < ns; ++x) {
          if (delta(B.circ(a, b), x) != delta(b, delta(a, x))) {
            return std::vector<Elem>{a, b, x};
          }
        }
      }
    }
    return std::nullopt;
  });
  run.check("sigma left action", [&]() -> W {
    for (Elem a = 0; a < nb; ++a) {
      if (sigma(S.one(), a) != a) {
        return std::vector<Elem>{S.one(), S.one(), a};
      }
    }
    for (Elem x = 0; x < ns; ++x) {
      for (Elem y = 0; y < ns; ++y) {
        for (Elem a = 0; a < nb; ++a) {
          if (sigma(S.circ(x, y), a) != sigma(x, sigma(y, a))) {
            return std::vector<Elem>{x, y, a};
          }
        }
      }
    }
    return std::nullopt;
  });
  run.check("delta automorphisms of (S, .)", [&]() -> W {
    for (Elem a = 0; a < nb; ++a) {
      for (Elem x = 0; x < ns; ++x) {
        for (Elem y = 0; y < ns; ++y) {
          if (delta(a, S.dot(x, y)) != S.dot(delta(a, x), delta(a, y))) {
            return std::vector<Elem>{a, x, y};
          }
        }
      }
    }
    return std::nullopt;
  });
  run.check("condition 1", [&]() -> W {
    for (Elem x = 0; x < ns; ++x) {
      for (Elem a = 0; a < nb; ++a) {
        for (Elem b = 0; b < nb; ++b) {
          if (sigma(x, B.circ(a, b)) != B.circ(sigma(x, a), sigma(delta(a, x), b))) {
            return std::vector<Elem>{x, a, b};
          }
        }
      }
    }
    return std::nullopt;
  });
  run.check("condition 2", [&]() -> W {
    for (Elem x = 0; x < ns; ++x) {
      if (sigma(x, B.one()) != B.one()) {
        return std::vector<Elem>{x};
      }
    }
    return std::nullopt;
  });
  run.check("condition 3", [&]() -> W {
    for (Elem a = 0; a < nb; ++a) {
      for (Elem x = 0; x < ns; ++x) {
        for (Elem y = 0; y < ns; ++y) {
          if (delta(a, S.circ(x, y)) != S.circ(delta(sigma(y, a), x), delta(a, y))) {
            return std::vector<Elem>{a, x, y};
          }
        }
      }
    }
    return std::nullopt;
  });
  run.check("condition 4", [&]() -> W {
    for (Elem a = 0; a < nb; ++a) {
      if (delta(a, S.one()) != S.one()) {
        return std::vector<Elem>{a};
      }
    }
    return std::nullopt;
  });
  run.check("condition 5", [&]() -> W {
    for (Elem a = 0; a < nb; ++a) {
      for (Elem x = 0; x < ns; ++x) {
        for (Elem y = 0; y < ns; ++y) {
          Elem lhs = S.inv(delta(a, S.inv(S.dot(x, y))));
          Elem rhs = S.dot(S.inv(delta(a, S.inv(x))), S.inv(delta(a, S.inv(y))));
          if (lhs != rhs) {
            return std::vector<Elem>{a, x, y};
          }
        }
      }
    }
    return std::nullopt;
  });
  for (Elem x = 0; x < ns && report.sigma_automorphisms; ++x) {
    for (Elem a = 0; a < nb && report.sigma_automorphisms; ++a) {
      for (Elem b = 0; b < nb; ++b) {
        if (sigma(x, B.dot(a, b)) != B.dot(sigma(x, a), sigma(x, b))) {
          report.sigma_automorphisms = false;
          break;
        }
      }
    }
  }
  return report;
}

/// The matched product on B x S; the pair (a, x) has index a * |S| + x.
///   (a,x)(b,y)   = (ab, xy)
///   (a,x) o (b,y) = (a o sigma_{(delta_a(x'))'}(b),  x o (delta_{(sigma_{x'}(a))'}(y'))')
inline LeftSemiBrace matched_product(MatchedData const& d) {
  auto report = verify_matched_data(d);
  if (!report.valid()) {
    auto const* f = report.first_failure();
    throw Error(ErrorKind::validation, "InvalidMatchedData",
                f->name + " fails at " + format_elems(f->witness));
  }
  auto const&       B  = d.B;
  auto const&       S  = d.S;
  std::size_t const ns = S.size();
  std::size_t const n  = B.size() * ns;
  auto dot = OpTable::tabulate(n, [&](Elem p, Elem q) {
    return B.dot(p / ns, q / ns) * ns + S.dot(p % ns, q % ns);
  });
  auto circ = OpTable::tabulate(n, [&](Elem p, Elem q) {
    Elem a = p / ns, x = p % ns, b = q / ns, y = q % ns;
    Elem first  = B.circ(a, d.sigma[S.inv(d.delta[a][S.inv(x)])][b]);
    Elem second = S.circ(x, S.inv(d.delta[B.inv(d.sigma[S.inv(x)][a])][S.inv(y)]));
    return first * ns + second;
  });
  auto out = verify_left_semibrace(dot, circ);
  if (!out) {
    throw Error(ErrorKind::internal, "InternalInconsistency",
                "matched product is not a left semi-brace: " + out.failure().to_string());
  }
  return std::move(out).value();
}

/// Semi-brace on M(G, I, J, identity sandwich) with component-wise o.
/// `g` must be a skew brace (its dot a group). Index of (g,i,j) is
/// (g * |I| + i) * |J| + j.
inline LeftSemiBrace product_semibrace(LeftSemiBrace const& g,
                                       GroupTable const&    rows,
                                       GroupTable const&    cols,
                                       std::size_t          cap = kDefaultSizeCap) {
  auto dot_group = verify_group(g.dot_table());
  if (!dot_group) {
    throw Error(ErrorKind::hypothesis, "NotASkewBrace", "G must have a group as dot");
  }
  auto const& dg      = dot_group.value();
  std::size_t const m = rows.size(), k = cols.size();
  auto [dot, rs] = rees_semigroup(dg, m, k, identity_sandwich(dg, m, k), cap);
  auto circ = OpTable::tabulate(dot.size(), [&, &rs = rs](Elem x, Elem y) {
    auto cx = rs.coords[x], cy = rs.coords[y];
    return rs.at(g.circ(cx.g, cy.g), rows(cx.i, cy.i), cols(cx.j, cy.j));
  });
  auto out = verify_left_semibrace(dot, circ);
  if (!out) {
    throw Error(ErrorKind::internal, "InternalInconsistency",
                "product semi-brace fails verification: " + out.failure().to_string());
  }
  return std::move(out).value();
}

enum class ZeroSide { left, right };

/// dot is xy = x (left) or xy = y (right); circ is the group.
inline LeftSemiBrace zero_semibrace(GroupTable const& h, ZeroSide side) {
  auto dot = OpTable::tabulate(h.size(), [side](Elem x, Elem y) {
    return side == ZeroSide::left ? x : y;
  });
  return make_semibrace(dot, h.table());
}

/// Right semi-brace identity (bc) o a = ((b a') o a)(c o a) on all triples.
inline bool is_right_semibrace(LeftSemiBrace const& B) {
  std::size_t const n = B.size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (B.circ(B.dot(b, c), a)
            != B.dot(B.circ(B.dot(b, B.inv(a)), a), B.circ(c, a))) {
          return false;
        }
      }
    }
  }
  return true;
}

/// Z3 x Z2 with (x,y)(z,w) = (x, y+w) and o transported from the cyclic group
/// of order 6 along (i,j) -> xi^{i+3j}. Element k is xi^k = (k mod 3, k div 3).
inline LeftSemiBrace example_c6() {
  auto dot = OpTable::tabulate(6, [](Elem a, Elem b) {
    Elem x = a % 3, y = a / 3, w = b / 3;
    return x + 3 * ((y + w) % 2);
  });
  auto circ = OpTable::tabulate(6, [](Elem a, Elem b) { return (a + b) % 6; });
  return make_semibrace(dot, circ);
}

/// Inner level: B1 as a matched product of 1B1 and E(B1).
struct InnerDecomposition {
  SubSemiBrace  G;
  SubSemiBrace  E;
  MatchedData   data;
  MatchedReport report;
  bool          isomorphism_verified = false;  // (g, e) -> e . g
};

/// Outer level: B as a matched product of K = B1 and R = E(1B).
struct Decomposition {
  SubSemiBrace       K;
  SubSemiBrace       R;
  MatchedData        data;
  MatchedReport      report;
  bool               isomorphism_verified = false;  // (k, r) -> k . r
  InnerDecomposition inner;
};

namespace detail {

inline std::vector<Elem> local_index(SubSemiBrace const& s, std::size_t n) {
  std::vector<Elem> idx(n, static_cast<Elem>(-1));
  for (Elem k = 0; k < s.elements.size(); ++k) {
    idx[s.elements[k]] = k;
  }
  return idx;
}

// Checks that (p, q) -> phi(first(p), second(q)) is a semi-brace isomorphism
// from the product (indexed a * |S| + x) onto B.
inline bool check_product_isomorphism(LeftSemiBrace const&            product,
                                      LeftSemiBrace const&            B,
                                      std::size_t                     ns,
                                      std::function<Elem(Elem, Elem)> phi) {
  std::size_t const n = product.size();
  if (n != B.size()) {
    return false;
  }
  std::vector<Elem> map(n);
  std::vector<char> hit(n, 0);
  for (Elem p = 0; p < n; ++p) {
    map[p] = phi(p / ns, p % ns);
    if (map[p] >= n || hit[map[p]]) {
      return false;
    }
    hit[map[p]] = 1;
  }
  for (Elem p = 0; p < n; ++p) {
    for (Elem q = 0; q < n; ++q) {
      if (map[product.dot(p, q)] != B.dot(map[p], map[q])
          || map[product.circ(p, q)] != B.circ(map[p], map[q])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// Decomposes B (rho an anti-homomorphism) as (1B1 x E(B1)) x E(1B).
///
/// Outer actions, with bars the inverses of (B, o):
///   delta_k(r) = (lambda_{k'}(r'))'   for k in B1,    r in E(1B)
///   sigma_r(k) = (rho_{r'}(k'))'      for r in E(1B), k in B1
/// Inner actions on B1:
///   sigma_e(g) = lambda_e(g)          for e in E(B1), g in 1B1
///   delta_g(e) = rho_g(e)
/// Both isomorphisms are verified elementwise on both operations.
inline Decomposition decompose(LeftSemiBrace const& B) {
  require_rho_antihomomorphism(B);
  auto const        cd = corners(B);
  std::size_t const n  = B.size();

  Decomposition out{subsemibrace(B, cd.K), subsemibrace(B, cd.idempotents_R), {}, {}, false, {}};
  auto const kidx = detail::local_index(out.K, n);
  auto const ridx = detail::local_index(out.R, n);
  auto const& Ke  = out.K.elements;
  auto const& Re  = out.R.elements;

  std::vector<Permutation> delta(Ke.size(), Permutation(Re.size()));
  std::vector<Permutation> sigma(Re.size(), Permutation(Ke.size()));
  for (Elem k = 0; k < Ke.size(); ++k) {
    for (Elem r = 0; r < Re.size(); ++r) {
      Elem v      = B.inv(lambda(B, B.inv(Ke[k]), B.inv(Re[r])));
      delta[k][r] = ridx[v];
      Elem w      = B.inv(rho(B, B.inv(Re[r]), B.inv(Ke[k])));
      sigma[r][k] = kidx[w];
      if (delta[k][r] == static_cast<Elem>(-1) || sigma[r][k] == static_cast<Elem>(-1)) {
        throw Error(ErrorKind::internal, "InternalInconsistency",
                    "decomposition actions leave their factor");
      }
    }
  }
  out.data   = MatchedData{out.K.brace, out.R.brace, std::move(delta), std::move(sigma)};
  out.report = verify_matched_data(out.data);
  if (out.report.valid()) {
    auto product = matched_product(out.data);
    out.isomorphism_verified = detail::check_product_isomorphism(
        product, B, Re.size(), [&](Elem k, Elem r) { return B.dot(Ke[k], Re[r]); });
  }

  // Inner level on K = B1.
  auto& in         = out.inner;
  in.G             = subsemibrace(B, cd.G);
  in.E             = subsemibrace(B, cd.idempotents_K);
  auto const gidx  = detail::local_index(in.G, n);
  auto const eidx  = detail::local_index(in.E, n);
  auto const& Ge   = in.G.elements;
  auto const& Ee   = in.E.elements;
  std::vector<Permutation> delta2(Ge.size(), Permutation(Ee.size()));
  std::vector<Permutation> sigma2(Ee.size(), Permutation(Ge.size()));
  for (Elem g = 0; g < Ge.size(); ++g) {
    for (Elem e = 0; e < Ee.size(); ++e) {
      delta2[g][e] = eidx[rho(B, Ge[g], Ee[e])];
      sigma2[e][g] = gidx[lambda(B, Ee[e], Ge[g])];
      if (delta2[g][e] == static_cast<Elem>(-1) || sigma2[e][g] == static_cast<Elem>(-1)) {
        throw Error(ErrorKind::internal, "InternalInconsistency",
                    "inner decomposition actions leave their factor");
      }
    }
  }
  in.data   = MatchedData{in.G.brace, in.E.brace, std::move(delta2), std::move(sigma2)};
  in.report = verify_matched_data(in.data);
  if (in.report.valid()) {
    auto product = matched_product(in.data);
    in.isomorphism_verified = detail::check_product_isomorphism(
        product, out.K.brace, Ee.size(),
        [&](Elem g, Elem e) { return kidx[B.dot(Ee[e], Ge[g])]; });
  }
  return out;
}

/// Default cap on the carrier size for enumerate_circ.
inline constexpr std::size_t kEnumerateCap = 8;

/// Every group structure on the carrier of `dot` that makes it a left
/// semi-brace. Circ tables are deduplicated by equality, not up to
/// isomorphism, and returned in lexicographic table order.
inline std::vector<LeftSemiBrace> enumerate_circ(OpTable const& dot,
                                                 std::size_t    cap = kEnumerateCap) {
  if (dot.size() > cap) {
    throw Error(ErrorKind::cap, "CapExceeded",
                "enumeration limited to " + std::to_string(cap) + " elements");
  }
  if (auto rep = verify_semigroup(dot, 1); !rep.valid) {
    throw Error(ErrorKind::validation, "DotNotSemigroup", "dot table is not associative");
  }
  std::vector<LeftSemiBrace> out;
  for (auto const& g : all_group_tables(dot.size())) {
    if (auto sb = verify_left_semibrace(dot, g.table(), 1)) {
      out.push_back(std::move(sb).value());
    }
  }
  return out;
}

/// Groups the structures into isomorphism classes; returns one representative
/// index per class.
inline std::vector<std::size_t> isomorphism_class_representatives(
    std::vector<LeftSemiBrace> const& list) {
  std::vector<std::size_t> reps;
  for (std::size_t k = 0; k < list.size(); ++k) {
    bool fresh = true;
    for (std::size_t r : reps) {
      if (semibraces_isomorphic(list[k], list[r])) {
        fresh = false;
        break;
      }
    }
    if (fresh) {
      reps.push_back(k);
    }
  }
  return reps;
}

}  // namespace semibrace
