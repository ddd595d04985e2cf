#pragma once

// Ideals of completely simple left semi-braces with rho an anti-homomorphism,
// the socle, quotients by the congruence x ~ y <=> y' o x in I, morphisms and
// kernels.

#include <set>
#include <string>
#include <vector>

#include "semibrace.hpp"

namespace semibrace {

struct IdealReport {
  bool nonempty            = false;
  bool dot_closed          = false;
  bool normal_in_group     = false;  // (1) I n 1B1 normal subgroup of (1B1, .)
  bool normal_in_circ      = false;  // (2) (I, o) normal subgroup of (B, o)
  bool rho_stable          = false;  // (3) rho_b(I) in I for b in 1B
  bool lambda_stable       = false;  // (4) lambda_a(I) in I for a in B1

  bool is_ideal() const {
    return nonempty && dot_closed && normal_in_group && normal_in_circ && rho_stable
           && lambda_stable;
  }
};

namespace detail {

inline bool dot_closed(LeftSemiBrace const& B, SubsetMask const& s) {
  for (Elem a : s.members()) {
    for (Elem b : s.members()) {
      if (!s.contains(B.dot(a, b))) {
        return false;
      }
    }
  }
  return true;
}

inline bool normal_circ_subgroup(LeftSemiBrace const& B, SubsetMask const& s) {
  if (!is_circ_subgroup(B, s)) {
    return false;
  }
  for (Elem b = 0; b < B.size(); ++b) {
    for (Elem x : s.members()) {
      if (!s.contains(B.circ(B.circ(b, x), B.inv(b)))) {
        return false;
      }
    }
  }
  return true;
}

// (I n G, .) is a normal subgroup of (G, .), G = 1B1 a group under dot.
inline bool normal_dot_subgroup(LeftSemiBrace const& B,
                                CornerData const&    cd,
                                SubsetMask const&    s) {
  auto const& rs  = cd.rees;
  auto const  sub = s.intersect(cd.G);
  Elem const  one = B.one();
  if (!sub.contains(one)) {
    return false;
  }
  // dot-inverse of g in G via the group table of the Rees structure
  std::vector<Elem> ginv(B.size(), 0);
  for (Elem k = 0; k < rs.group_elements.size(); ++k) {
    ginv[rs.group_elements[k]] = rs.group_elements[rs.group.inverse(k)];
  }
  for (Elem x : sub.members()) {
    if (!sub.contains(ginv[x])) {
      return false;
    }
    for (Elem y : sub.members()) {
      if (!sub.contains(B.dot(x, y))) {
        return false;
      }
    }
    for (Elem g : cd.G.members()) {
      if (!sub.contains(B.dot(B.dot(g, x), ginv[g]))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

/// Evaluates every ideal condition, plus nonemptiness and dot-closure.
inline IdealReport is_ideal(LeftSemiBrace const& B, CornerData const& cd, SubsetMask const& I) {
  require_rho_antihomomorphism(B);
  IdealReport rep;
  rep.nonempty        = !I.empty();
  rep.dot_closed      = detail::dot_closed(B, I);
  rep.normal_in_group = detail::normal_dot_subgroup(B, cd, I);
  rep.normal_in_circ  = detail::normal_circ_subgroup(B, I);
  rep.rho_stable      = true;
  rep.lambda_stable   = true;
  for (Elem x : I.members()) {
    for (Elem b : cd.R.members()) {
      rep.rho_stable = rep.rho_stable && I.contains(rho(B, b, x));
    }
    for (Elem a : cd.K.members()) {
      rep.lambda_stable = rep.lambda_stable && I.contains(lambda(B, a, x));
    }
  }
  return rep;
}

inline IdealReport is_ideal(LeftSemiBrace const& B, SubsetMask const& I) {
  require_rho_antihomomorphism(B);
  return is_ideal(B, corners(B), I);
}

/// Soc(B) = { x | lambda_x = lambda_1 and rho_x = rho_1 }.
///
/// When rho is an anti-homomorphism, also asserts Soc(B) lies in 1B1 and that
/// the membership test "x'o(1b) = x'b and x o (b1) = bx for all b" selects
/// the same set.
inline SubsetMask socle(LeftSemiBrace const& B) {
  std::size_t const n   = B.size();
  Elem const        one = B.one();
  auto const        lt  = lambda_table(B);
  auto const        rt  = rho_table(B);
  SubsetMask        soc(n);
  for (Elem x = 0; x < n; ++x) {
    bool in = true;
    for (Elem b = 0; b < n && in; ++b) {
      in = lt(x, b) == lt(one, b) && rt(x, b) == rt(one, b);
    }
    if (in) {
      soc.insert(x);
    }
  }
  if (is_rho_antihomomorphism(B).holds) {
    SubsetMask alt(n);
    for (Elem x = 0; x < n; ++x) {
      bool in = true;
      for (Elem b = 0; b < n && in; ++b) {
        in = B.circ(B.inv(x), B.dot(one, b)) == B.dot(B.inv(x), b)
             && B.circ(x, B.dot(b, one)) == B.dot(b, x);
      }
      if (in) {
        alt.insert(x);
      }
    }
    auto const cd = corners(B);
    if (!(alt == soc) || !soc.is_subset_of(cd.G)) {
      throw Error(ErrorKind::internal, "InternalInconsistency",
                  "socle characterizations disagree");
    }
  }
  return soc;
}

/// { x in 1B1 | x o y = xy = yx for all y in 1B1 }
inline SubsetMask group_component_socle(LeftSemiBrace const& B, CornerData const& cd) {
  SubsetMask out(B.size());
  for (Elem x : cd.G.members()) {
    bool in = true;
    for (Elem y : cd.G.members()) {
      in = in && B.circ(x, y) == B.dot(x, y) && B.dot(x, y) == B.dot(y, x);
    }
    if (in) {
      out.insert(x);
    }
  }
  return out;
}

/// A map between semi-braces, given by an array of target indices.
struct Morphism {
  LeftSemiBrace     source;
  LeftSemiBrace     target;
  std::vector<Elem> map;
};

struct MorphismReport {
  bool              valid = true;
  std::vector<Elem> witness;  // (a, b) where a pair fails
  std::string       operation;
};

inline MorphismReport verify_morphism(Morphism const& f) {
  MorphismReport rep;
  if (f.map.size() != f.source.size()) {
    return {false, {}, "map size"};
  }
  for (Elem x : f.map) {
    if (x >= f.target.size()) {
      return {false, {x}, "range"};
    }
  }
  auto const& S = f.source;
  auto const& T = f.target;
  for (Elem a = 0; a < S.size(); ++a) {
    for (Elem b = 0; b < S.size(); ++b) {
      if (f.map[S.dot(a, b)] != T.dot(f.map[a], f.map[b])) {
        return {false, {a, b}, "dot"};
      }
      if (f.map[S.circ(a, b)] != T.circ(f.map[a], f.map[b])) {
        return {false, {a, b}, "circ"};
      }
    }
  }
  return rep;
}

/// Preimage of the identity of (target, o). When the source has rho an
/// anti-homomorphism the kernel is asserted to be an ideal.
inline SubsetMask kernel(Morphism const& f) {
  if (auto rep = verify_morphism(f); !rep.valid) {
    throw Error(ErrorKind::validation, "NotAMorphism",
                rep.operation + " not preserved at " + format_elems(rep.witness));
  }
  SubsetMask ker(f.source.size());
  for (Elem x = 0; x < f.source.size(); ++x) {
    if (f.map[x] == f.target.one()) {
      ker.insert(x);
    }
  }
  if (is_rho_antihomomorphism(f.source).holds && !is_ideal(f.source, ker).is_ideal()) {
    throw Error(ErrorKind::internal, "InternalInconsistency", "kernel is not an ideal");
  }
  return ker;
}

struct Quotient {
  LeftSemiBrace     brace;
  Morphism          projection;
  std::vector<Elem> representatives;  // class index -> least member
};

/// B / I for an ideal I. Classes are indexed by increasing least member; both
/// induced operations are checked against every pair of representatives.
inline Quotient quotient(LeftSemiBrace const& B, SubsetMask const& I) {
  if (I.universe() != B.size()) {
    throw Error(ErrorKind::validation, "SchemaError", "ideal mask has the wrong universe");
  }
  if (!is_ideal(B, I).is_ideal()) {
    throw Error(ErrorKind::validation, "NotAnIdeal", "subset " + format_elems(I.members())
                                                          + " is not an ideal");
  }
  std::size_t const n = B.size();
  constexpr Elem    unset = static_cast<Elem>(-1);
  std::vector<Elem> cls(n, unset);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (cls[x] != unset) {
      continue;
    }
    Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem y = x; y < n; ++y) {
      if (I.contains(B.circ(B.inv(x), y))) {  // y ~ x
        if (cls[y] != unset) {
          throw Error(ErrorKind::internal, "CongruenceBroken",
                      "relation is not an equivalence at " + std::to_string(y));
        }
        cls[y] = id;
      }
    }
  }
  std::size_t const m = reps.size();
  std::vector<Elem> dot(m * m, unset), circ(m * m, unset);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem const cell = cls[a] * m + cls[b];
      Elem const d    = cls[B.dot(a, b)];
      Elem const c    = cls[B.circ(a, b)];
      if ((dot[cell] != unset && dot[cell] != d) || (circ[cell] != unset && circ[cell] != c)) {
        throw Error(ErrorKind::internal, "CongruenceBroken",
                    "operation not well defined at " + format_elems({a, b}));
      }
      dot[cell]  = d;
      circ[cell] = c;
    }
  }
  auto q = verify_left_semibrace(OpTable(m, dot), OpTable(m, circ));
  if (!q) {
    throw Error(ErrorKind::internal, "InternalInconsistency",
                "quotient is not a left semi-brace: " + q.failure().to_string());
  }
  Quotient out{q.value(), Morphism{B, q.value(), cls}, reps};
  return out;
}

/// Subgroups of (B, o), found by closing under one extra generator at a time.
inline std::vector<SubsetMask> circ_subgroups(LeftSemiBrace const& B) {
  auto const&                   g = B.circ_group();
  std::set<std::vector<Elem>>   seen;
  std::vector<std::vector<Elem>> frontier{{g.identity()}};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::vector<Elem>> next;
    for (auto const& h : frontier) {
      for (Elem x = 0; x < g.size(); ++x) {
        if (std::binary_search(h.begin(), h.end(), x)) {
          continue;
        }
        auto gens = h;
        gens.push_back(x);
        auto sub = generated_subgroup(g, gens);
        if (seen.insert(sub).second) {
          next.push_back(std::move(sub));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<SubsetMask> out;
  for (auto const& s : seen) {
    out.emplace_back(B.size(), s);
  }
  return out;
}

inline constexpr std::size_t kIdealCap = 12;

/// All ideals, ordered by size and then by members.
inline std::vector<SubsetMask> all_ideals(LeftSemiBrace const& B, std::size_t cap = kIdealCap) {
  require_rho_antihomomorphism(B);
  if (B.size() > cap) {
    throw Error(ErrorKind::cap, "CapExceeded",
                "ideal enumeration limited to " + std::to_string(cap) + " elements");
  }
  auto const              cd = corners(B);
  std::vector<SubsetMask> out;
  for (auto const& h : circ_subgroups(B)) {
    if (detail::normal_circ_subgroup(B, h) && is_ideal(B, cd, h).is_ideal()) {
      out.push_back(h);
    }
  }
  std::sort(out.begin(), out.end(), [](SubsetMask const& x, SubsetMask const& y) {
    if (x.count() != y.count()) {
      return x.count() < y.count();
    }
    return x.members() < y.members();
  });
  return out;
}

}  // namespace semibrace
