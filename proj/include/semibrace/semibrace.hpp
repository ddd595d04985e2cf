#pragma once

// Left semi-braces (B, ., o): (B, .) a semigroup, (B, o) a group, and
//   a o (b . c) = (a o b) . (a o (a' . c))      for all a, b, c,
// where a' is the inverse of a in (B, o). Also the lambda and rho maps,
// the rho anti-homomorphism test, and the corner sets B1, 1B, 1B1.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "op_table.hpp"
#include "rees.hpp"

namespace semibrace {

class LeftSemiBrace {
 public:
  LeftSemiBrace() = default;

  std::size_t size() const noexcept { return _dot.size(); }

  Elem dot(Elem a, Elem b) const noexcept { return _dot(a, b); }
  Elem circ(Elem a, Elem b) const noexcept { return _circ(a, b); }
  /// Inverse in (B, o).
  Elem inv(Elem a) const noexcept { return _circ.inverse(a); }
  /// Identity of (B, o).
  Elem one() const noexcept { return _circ.identity(); }

  OpTable const& dot_table() const noexcept { return _dot; }
  GroupTable const& circ_group() const noexcept { return _circ; }

  friend bool operator==(LeftSemiBrace const& x, LeftSemiBrace const& y) {
    return x._dot == y._dot && x._circ == y._circ;
  }

  friend Checked<LeftSemiBrace> verify_left_semibrace(OpTable const&, OpTable const&, std::size_t);

 private:
  LeftSemiBrace(OpTable dot, GroupTable circ) : _dot(std::move(dot)), _circ(std::move(circ)) {}

  OpTable    _dot;
  GroupTable _circ;
};

/// Checks that `dot` is a semigroup, `circ` a group, and the semi-brace
/// identity on all n^3 triples. The failure witness is the first violation;
/// the detail lists up to `limit` of them.
inline Checked<LeftSemiBrace> verify_left_semibrace(OpTable const& dot,
                                                    OpTable const& circ,
                                                    std::size_t limit = 10) {
  if (dot.size() != circ.size()) {
    return Failure{"SizeMismatch", {},
                   "dot has " + std::to_string(dot.size()) + " elements, circ has "
                       + std::to_string(circ.size())};
  }
  if (auto rep = verify_semigroup(dot, limit); !rep.valid) {
    auto const& v = rep.violations.front();
    return Failure{"DotNotSemigroup", {v[0], v[1], v[2]}, "(xy)z != x(yz)"};
  }
  auto grp = verify_group(circ);
  if (!grp) {
    return Failure{"CircNotGroup", grp.failure().witness, grp.failure().to_string()};
  }
  GroupTable const& g = grp.value();
  std::size_t const n = dot.size();
  std::vector<Triple> bad;
  std::size_t         total = 0;
  for (Elem a = 0; a < n; ++a) {
    Elem const abar = g.inverse(a);
    for (Elem b = 0; b < n; ++b) {
      Elem const ab = g(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (g(a, dot(b, c)) != dot(ab, g(a, dot(abar, c)))) {
          ++total;
          if (bad.size() < limit) {
            bad.push_back({a, b, c});
          }
        }
      }
    }
  }
  if (!bad.empty()) {
    std::string detail = std::to_string(total) + " violating triple(s)";
    for (auto const& t : bad) {
      detail += " (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + ","
                + std::to_string(t[2]) + ")";
    }
    return Failure{"IdentityFails", {bad[0][0], bad[0][1], bad[0][2]}, detail};
  }
  return LeftSemiBrace(dot, g);
}

inline LeftSemiBrace make_semibrace(OpTable const& dot, OpTable const& circ) {
  return verify_left_semibrace(dot, circ).value();
}

/// lambda_a(b) = a o (a' . b)
inline Elem lambda(LeftSemiBrace const& B, Elem a, Elem b) {
  return B.circ(a, B.dot(B.inv(a), b));
}

/// rho_a(b) = (b' . a)' o a
inline Elem rho(LeftSemiBrace const& B, Elem a, Elem b) {
  return B.circ(B.inv(B.dot(B.inv(b), a)), a);
}

/// Table L with L(a, b) = lambda_a(b).
inline OpTable lambda_table(LeftSemiBrace const& B) {
  return OpTable::tabulate(B.size(), [&](Elem a, Elem b) { return lambda(B, a, b); });
}

/// Table P with P(a, b) = rho_a(b).
inline OpTable rho_table(LeftSemiBrace const& B) {
  return OpTable::tabulate(B.size(), [&](Elem a, Elem b) { return rho(B, a, b); });
}

struct AntihomReport {
  bool                  holds = true;
  std::optional<Triple> witness;  // (a, b, c) with c(a o 1b) != c(a o b)
};

/// Tests whether rho: (B, o) -> Map(B, B) is an anti-homomorphism.
///
/// Primary test: c . (a o (1 . b)) == c . (a o b) for all a, b, c.
/// Cross-check: rho_{a o b} == rho_b rho_a pointwise. The two are equivalent,
/// so disagreement throws an internal error.
inline AntihomReport is_rho_antihomomorphism(LeftSemiBrace const& B) {
  std::size_t const n   = B.size();
  Elem const        one = B.one();
  AntihomReport     primary;
  for (Elem a = 0; a < n && primary.holds; ++a) {
    for (Elem b = 0; b < n && primary.holds; ++b) {
      Elem const lhs = B.circ(a, B.dot(one, b));
      Elem const rhs = B.circ(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (B.dot(c, lhs) != B.dot(c, rhs)) {
          primary = {false, Triple{a, b, c}};
          break;
        }
      }
    }
  }
  auto const rt     = rho_table(B);
  bool       direct = true;
  for (Elem a = 0; a < n && direct; ++a) {
    for (Elem b = 0; b < n && direct; ++b) {
      Elem const ab = B.circ(a, b);
      for (Elem x = 0; x < n; ++x) {
        if (rt(ab, x) != rt(b, rt(a, x))) {
          direct = false;
          break;
        }
      }
    }
  }
  if (direct != primary.holds) {
    throw Error(ErrorKind::internal, "InternalInconsistency",
                "rho anti-homomorphism tests disagree");
  }
  return primary;
}

inline void require_rho_antihomomorphism(LeftSemiBrace const& B) {
  if (auto rep = is_rho_antihomomorphism(B); !rep.holds) {
    auto const& w = *rep.witness;
    throw Error(ErrorKind::hypothesis, "RhoNotAntihomomorphism",
                "c(a o 1b) != c(a o b) at (a,b,c) = (" + std::to_string(w[0]) + ","
                    + std::to_string(w[1]) + "," + std::to_string(w[2]) + ")");
  }
}

/// True when (B, .) is a group. In that case the skew brace identity
/// a o (bc) = (a o b) a^-1 (a o c) is asserted on every triple.
inline bool is_skew_brace(LeftSemiBrace const& B) {
  auto dot_group = verify_group(B.dot_table());
  if (!dot_group) {
    return false;
  }
  GroupTable const& d = dot_group.value();
  std::size_t const n = B.size();
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (B.circ(a, d(b, c)) != d(d(B.circ(a, b), d.inverse(a)), B.circ(a, c))) {
          throw Error(ErrorKind::internal, "InternalInconsistency",
                      "skew brace identity fails on a semi-brace with group dot");
        }
      }
    }
  }
  return true;
}

/// Corner sets of a completely simple left semi-brace, with Rees coordinates
/// based at 1 = identity of (B, o).
struct CornerData {
  SubsetMask        K;  // B1
  SubsetMask        R;  // 1B
  SubsetMask        G;  // 1B1
  SubsetMask        idempotents_B;
  SubsetMask        idempotents_K;
  SubsetMask        idempotents_R;
  ReesStructure     rees;
  std::vector<Elem> component_of;  // b = (g,i,j) -> carrier index of (g,1,1)
};

inline bool is_circ_subgroup(LeftSemiBrace const& B, SubsetMask const& s) {
  if (!s.contains(B.one())) {
    return false;
  }
  for (Elem a : s.members()) {
    if (!s.contains(B.inv(a))) {
      return false;
    }
    for (Elem b : s.members()) {
      if (!s.contains(B.circ(a, b))) {
        return false;
      }
    }
  }
  return true;
}

inline CornerData corners(LeftSemiBrace const& B) {
  auto rs = rees_decompose(B.dot_table(), B.one());
  if (!rs) {
    throw Error(ErrorKind::hypothesis, "NotCompletelySimple", rs.failure().to_string());
  }
  std::size_t const n   = B.size();
  Elem const        one = B.one();
  CornerData        cd;
  cd.K             = SubsetMask(n);
  cd.R             = SubsetMask(n);
  cd.G             = SubsetMask(n);
  cd.idempotents_B = SubsetMask(n);
  cd.idempotents_K = SubsetMask(n);
  cd.idempotents_R = SubsetMask(n);
  for (Elem b = 0; b < n; ++b) {
    cd.K.insert(B.dot(b, one));
    cd.R.insert(B.dot(one, b));
    cd.G.insert(B.dot(B.dot(one, b), one));
  }
  for (Elem b = 0; b < n; ++b) {
    if (B.dot(b, b) == b) {
      cd.idempotents_B.insert(b);
      if (cd.K.contains(b)) {
        cd.idempotents_K.insert(b);
      }
      if (cd.R.contains(b)) {
        cd.idempotents_R.insert(b);
      }
    }
  }
  cd.rees = std::move(rs).value();
  cd.component_of.resize(n);
  for (Elem b = 0; b < n; ++b) {
    cd.component_of[b] = cd.rees.group_elements[cd.rees.coords[b].g];
    if (cd.component_of[b] != B.dot(B.dot(one, b), one)) {
      throw Error(ErrorKind::internal, "InternalInconsistency",
                  "group component disagrees with 1b1");
    }
  }
  if (!(cd.G == cd.K.intersect(cd.R)) || !cd.G.contains(one)) {
    throw Error(ErrorKind::internal, "InternalInconsistency", "1B1 differs from B1 n 1B");
  }
  if (!is_circ_subgroup(B, cd.K) || !is_circ_subgroup(B, cd.R)) {
    throw Error(ErrorKind::internal, "InternalInconsistency",
                "B1 or 1B is not a subgroup of (B, o)");
  }
  return cd;
}

struct GroupIdempotentSplit {
  Elem g;  // in 1B1
  Elem e;  // in E(B1)
};

/// The unique factorization b = g o e with g in 1B1 and e an idempotent of
/// B1, for b in B1. Uniqueness is checked by exhaustive search.
inline GroupIdempotentSplit idempotent_decomposition(LeftSemiBrace const& B,
                                                     CornerData const& cd,
                                                     Elem b) {
  require_rho_antihomomorphism(B);
  if (!cd.K.contains(b)) {
    throw Error(ErrorKind::validation, "NotInK", std::to_string(b) + " is not in B1");
  }
  std::optional<GroupIdempotentSplit> found;
  for (Elem g : cd.G.members()) {
    for (Elem e : cd.idempotents_K.members()) {
      if (B.circ(g, e) == b) {
        if (found) {
          throw Error(ErrorKind::internal, "InternalInconsistency",
                      "factorization g o e is not unique");
        }
        found = GroupIdempotentSplit{g, e};
      }
    }
  }
  if (!found || found->g != cd.component_of[b]) {
    throw Error(ErrorKind::internal, "InternalInconsistency",
                "no factorization matching the group component of " + std::to_string(b));
  }
  return *found;
}

inline GroupIdempotentSplit idempotent_decomposition(LeftSemiBrace const& B, Elem b) {
  require_rho_antihomomorphism(B);
  return idempotent_decomposition(B, corners(B), b);
}

/// A subset closed under both operations, as a semi-brace in its own right.
struct SubSemiBrace {
  LeftSemiBrace     brace;
  std::vector<Elem> elements;  // local index -> carrier index of the parent
};

inline SubSemiBrace subsemibrace(LeftSemiBrace const& B, SubsetMask const& s) {
  auto members = s.members();
  auto dot     = B.dot_table().restrict_to(members);
  auto circ    = B.circ_group().table().restrict_to(members);
  auto sb      = verify_left_semibrace(dot, circ);
  if (!sb) {
    throw Error(ErrorKind::validation, "NotASubsemibrace", sb.failure().to_string());
  }
  return {std::move(sb).value(), std::move(members)};
}

/// A bijection A -> B respecting both operations, if one exists.
inline std::optional<std::vector<Elem>> find_semibrace_isomorphism(LeftSemiBrace const& A,
                                                                   LeftSemiBrace const& B) {
  if (A.size() != B.size()) {
    return std::nullopt;
  }
  if (idempotents(A.dot_table()).size() != idempotents(B.dot_table()).size()) {
    return std::nullopt;
  }
  std::optional<std::vector<Elem>> found;
  for_each_group_isomorphism(A.circ_group(), B.circ_group(), [&](std::vector<Elem> const& m) {
    for (Elem x = 0; x < A.size(); ++x) {
      for (Elem y = 0; y < A.size(); ++y) {
        if (m[A.dot(x, y)] != B.dot(m[x], m[y])) {
          return false;
        }
      }
    }
    found = m;
    return true;
  });
  return found;
}

inline bool semibraces_isomorphic(LeftSemiBrace const& A, LeftSemiBrace const& B) {
  return find_semibrace_isomorphism(A, B).has_value();
}

/// Trivial skew brace on a group: dot = circ.
inline LeftSemiBrace trivial_brace(GroupTable const& g) {
  return make_semibrace(g.table(), g.table());
}

}  // namespace semibrace
