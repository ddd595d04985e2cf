#pragma once

// Cayley tables of finite magmas, semigroup and group verification, a small
// catalog of abstract groups, and group isomorphism search.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "types.hpp"

namespace semibrace {

/// Hard cap for brute-force isomorphism searches.
inline constexpr std::size_t kIsomorphismCap = 24;

using Triple = std::array<Elem, 3>;

/// An n x n multiplication table over carrier indices 0..n-1.
class OpTable {
 public:
  OpTable() : _n(1), _entries{0} {}

  OpTable(std::size_t n, std::vector<Elem> entries)
      : _n(n), _entries(std::move(entries)) {
    if (_n == 0) {
      throw Error(ErrorKind::validation, "SchemaError", "carrier must be nonempty");
    }
    if (_entries.size() != _n * _n) {
      throw Error(ErrorKind::validation, "SchemaError",
                  "expected " + std::to_string(_n * _n) + " entries, got "
                      + std::to_string(_entries.size()));
    }
    for (std::size_t k = 0; k < _entries.size(); ++k) {
      if (_entries[k] >= _n) {
        throw Error(ErrorKind::validation, "RangeError",
                    "entry (" + std::to_string(k / _n) + "," + std::to_string(k % _n)
                        + ") = " + std::to_string(_entries[k]) + " is not below "
                        + std::to_string(_n));
      }
    }
  }

  /// Builds a table from rows; every row must have n entries.
  static OpTable from_rows(std::vector<std::vector<Elem>> const& rows) {
    std::vector<Elem> flat;
    for (auto const& row : rows) {
      if (row.size() != rows.size()) {
        throw Error(ErrorKind::validation, "SchemaError", "table is not square");
      }
      flat.insert(flat.end(), row.begin(), row.end());
    }
    return OpTable(rows.size(), std::move(flat));
  }

  template <typename F>
  static OpTable tabulate(std::size_t n, F&& f) {
    std::vector<Elem> flat(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        flat[a * n + b] = static_cast<Elem>(f(a, b));
      }
    }
    return OpTable(n, std::move(flat));
  }

  std::size_t size() const noexcept { return _n; }

  Elem operator()(Elem a, Elem b) const noexcept { return _entries[a * _n + b]; }

  std::vector<Elem> const& entries() const noexcept { return _entries; }

  std::vector<std::vector<Elem>> rows() const {
    std::vector<std::vector<Elem>> out(_n);
    for (std::size_t a = 0; a < _n; ++a) {
      out[a].assign(_entries.begin() + a * _n, _entries.begin() + (a + 1) * _n);
    }
    return out;
  }

  /// Table transported along a bijection `perm` (old index -> new index).
  OpTable relabel(std::vector<Elem> const& perm) const {
    std::vector<Elem> flat(_n * _n);
    for (Elem a = 0; a < _n; ++a) {
      for (Elem b = 0; b < _n; ++b) {
        flat[perm[a] * _n + perm[b]] = perm[(*this)(a, b)];
      }
    }
    return OpTable(_n, std::move(flat));
  }

  /// Restriction to `members` (which must be closed), reindexed in the given order.
  OpTable restrict_to(std::vector<Elem> const& members) const {
    std::vector<Elem> index(_n, static_cast<Elem>(-1));
    for (Elem k = 0; k < members.size(); ++k) {
      index[members[k]] = k;
    }
    return tabulate(members.size(), [&](Elem a, Elem b) {
      Elem v = index[(*this)(members[a], members[b])];
      if (v == static_cast<Elem>(-1)) {
        throw Error(ErrorKind::validation, "NotClosed",
                    "subset is not closed: " + std::to_string(members[a]) + "*"
                        + std::to_string(members[b]));
      }
      return v;
    });
  }

  friend bool operator==(OpTable const&, OpTable const&) = default;
  friend auto operator<=>(OpTable const& x, OpTable const& y) {
    return x._entries <=> y._entries;
  }

 private:
  std::size_t       _n;
  std::vector<Elem> _entries;
};

inline bool is_idempotent(OpTable const& t, Elem x) { return t(x, x) == x; }

inline std::vector<Elem> idempotents(OpTable const& t) {
  std::vector<Elem> out;
  for (Elem x = 0; x < t.size(); ++x) {
    if (is_idempotent(t, x)) {
      out.push_back(x);
    }
  }
  return out;
}

struct SemigroupReport {
  bool                valid = true;
  std::vector<Triple> violations;
};

/// Exhaustive associativity check; records at most `limit` violating triples.
inline SemigroupReport verify_semigroup(OpTable const& t, std::size_t limit = 10) {
  SemigroupReport report;
  std::size_t const n = t.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      Elem const xy = t(x, y);
      for (Elem z = 0; z < n; ++z) {
        if (t(xy, z) != t(x, t(y, z))) {
          report.valid = false;
          if (report.violations.size() < limit) {
            report.violations.push_back({x, y, z});
          } else {
            return report;
          }
        }
      }
    }
  }
  return report;
}

/// A verified group table with its identity and inverse map.
class GroupTable {
 public:
  GroupTable() : _op(), _identity(0), _inverses{0} {}

  OpTable const& table() const noexcept { return _op; }
  std::size_t size() const noexcept { return _op.size(); }
  Elem identity() const noexcept { return _identity; }
  Elem inverse(Elem x) const noexcept { return _inverses[x]; }
  std::vector<Elem> const& inverses() const noexcept { return _inverses; }
  Elem operator()(Elem a, Elem b) const noexcept { return _op(a, b); }

  /// Order of x as a group element.
  std::size_t order(Elem x) const {
    std::size_t k = 1;
    for (Elem y = x; y != _identity; y = _op(y, x)) {
      ++k;
    }
    return k;
  }

  bool is_abelian() const {
    for (Elem a = 0; a < size(); ++a) {
      for (Elem b = a + 1; b < size(); ++b) {
        if (_op(a, b) != _op(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  friend bool operator==(GroupTable const& x, GroupTable const& y) { return x._op == y._op; }

  friend Checked<GroupTable> verify_group(OpTable const& t);

 private:
  GroupTable(OpTable op, Elem identity, std::vector<Elem> inverses)
      : _op(std::move(op)), _identity(identity), _inverses(std::move(inverses)) {}

  OpTable           _op;
  Elem              _identity;
  std::vector<Elem> _inverses;
};

/// Locates a two-sided identity and inverses, then checks associativity.
inline Checked<GroupTable> verify_group(OpTable const& t) {
  std::size_t const n = t.size();
  std::optional<Elem> identity;
  for (Elem e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) {
      ok = t(e, x) == x && t(x, e) == x;
    }
    if (ok) {
      identity = e;
    }
  }
  if (!identity) {
    return Failure{"NoIdentity", {}, "no two-sided identity"};
  }
  std::vector<Elem> inverses(n);
  for (Elem x = 0; x < n; ++x) {
    bool found = false;
    for (Elem y = 0; y < n && !found; ++y) {
      if (t(x, y) == *identity && t(y, x) == *identity) {
        inverses[x] = y;
        found       = true;
      }
    }
    if (!found) {
      return Failure{"NoInverse", {x}, "element has no two-sided inverse"};
    }
  }
  auto assoc = verify_semigroup(t, 1);
  if (!assoc.valid) {
    auto const& v = assoc.violations.front();
    return Failure{"NotAssociative", {v[0], v[1], v[2]}, "(xy)z != x(yz)"};
  }
  return GroupTable(t, *identity, std::move(inverses));
}

inline GroupTable make_group(OpTable const& t) { return verify_group(t).value(); }

// Small groups. Elements are numbered so that 0 is the identity.

inline GroupTable trivial_group() { return make_group(OpTable(1, {0})); }

inline GroupTable cyclic_group(std::size_t n) {
  return make_group(OpTable::tabulate(n, [n](Elem a, Elem b) { return (a + b) % n; }));
}

/// Direct product; the pair (g, h) has index g * |H| + h.
inline GroupTable direct_product(GroupTable const& g, GroupTable const& h) {
  std::size_t const m = h.size();
  return make_group(OpTable::tabulate(g.size() * m, [&](Elem a, Elem b) {
    return g(a / m, b / m) * m + h(a % m, b % m);
  }));
}

/// Dihedral group of order 2k: index r + k*s stands for rot^r refl^s.
inline GroupTable dihedral_group(std::size_t k) {
  return make_group(OpTable::tabulate(2 * k, [k](Elem a, Elem b) {
    std::size_t r1 = a % k, s1 = a / k, r2 = b % k, s2 = b / k;
    std::size_t r = s1 ? (r1 + k - r2) % k : (r1 + r2) % k;
    return r + k * ((s1 + s2) % 2);
  }));
}

/// Quaternion group: index 4*s + t is (-1)^s * {1, i, j, k}[t].
inline GroupTable quaternion_group() {
  // unit products among {1,i,j,k}: sign and result
  static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return make_group(OpTable::tabulate(8, [](Elem a, Elem b) {
    int s = (a / 4 + b / 4 + sign[a % 4][b % 4]) % 2;
    return static_cast<Elem>(4 * s + unit[a % 4][b % 4]);
  }));
}

/// Symmetric group on three letters (same as the dihedral group of order 6).
inline GroupTable symmetric_group_3() { return dihedral_group(3); }

/// Named groups of orders 1 to 8, one per isomorphism class.
inline std::vector<std::pair<std::string, GroupTable>> const& group_catalog() {
  static auto const catalog = [] {
    std::vector<std::pair<std::string, GroupTable>> c;
    for (std::size_t n = 1; n <= 8; ++n) {
      c.emplace_back("C" + std::to_string(n), cyclic_group(n));
      if (n == 4) {
        c.emplace_back("C2xC2", direct_product(cyclic_group(2), cyclic_group(2)));
      } else if (n == 6) {
        c.emplace_back("S3", symmetric_group_3());
      } else if (n == 8) {
        c.emplace_back("C4xC2", direct_product(cyclic_group(4), cyclic_group(2)));
        c.emplace_back("C2xC2xC2", direct_product(direct_product(cyclic_group(2), cyclic_group(2)),
                                                  cyclic_group(2)));
        c.emplace_back("D4", dihedral_group(4));
        c.emplace_back("Q8", quaternion_group());
      }
    }
    return c;
  }();
  return catalog;
}

inline GroupTable group_by_name(std::string const& name) {
  for (auto const& [key, g] : group_catalog()) {
    if (key == name) {
      return g;
    }
  }
  throw Error(ErrorKind::validation, "UnknownGroup", "no catalog group named '" + name + "'");
}

/// Every group table on the carrier {0..n-1}: all relabelings of every
/// catalog group of order n, deduplicated and sorted.
inline std::vector<GroupTable> all_group_tables(std::size_t n) {
  if (n == 0 || n > 8) {
    throw Error(ErrorKind::cap, "CapExceeded",
                "group catalog covers orders 1..8, requested " + std::to_string(n));
  }
  std::set<OpTable> seen;
  for (auto const& [name, g] : group_catalog()) {
    if (g.size() != n) {
      continue;
    }
    std::vector<Elem> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      seen.insert(g.table().relabel(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  std::vector<GroupTable> out;
  out.reserve(seen.size());
  for (auto const& t : seen) {
    out.push_back(make_group(t));
  }
  return out;
}

/// Subgroup generated by `gens`.
inline std::vector<Elem> generated_subgroup(GroupTable const& g, std::vector<Elem> const& gens) {
  std::vector<char> in(g.size(), 0);
  std::vector<Elem> out{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (Elem s : gens) {
      Elem y = g(out[k], s);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A small generating set: greedily adds an element of largest order outside
/// the current subgroup.
inline std::vector<Elem> generating_set(GroupTable const& g) {
  std::vector<Elem> gens;
  std::vector<Elem> current{g.identity()};
  while (current.size() < g.size()) {
    Elem best = 0;
    std::size_t best_order = 0;
    for (Elem x = 0; x < g.size(); ++x) {
      if (!std::binary_search(current.begin(), current.end(), x) && g.order(x) > best_order) {
        best       = x;
        best_order = g.order(x);
      }
    }
    gens.push_back(best);
    current = generated_subgroup(g, gens);
  }
  return gens;
}

/// Calls `visit(map)` for each group isomorphism a -> b until it returns true.
/// Returns whether some call returned true.
inline bool for_each_group_isomorphism(GroupTable const& a,
                                       GroupTable const& b,
                                       std::function<bool(std::vector<Elem> const&)> const& visit) {
  std::size_t const n = a.size();
  if (n != b.size()) {
    return false;
  }
  if (n > kIsomorphismCap) {
    throw Error(ErrorKind::cap, "CapExceeded",
                "isomorphism search limited to " + std::to_string(kIsomorphismCap) + " elements");
  }
  std::vector<std::size_t> profile_a, profile_b;
  for (Elem x = 0; x < n; ++x) {
    profile_a.push_back(a.order(x));
    profile_b.push_back(b.order(x));
  }
  auto sorted_a = profile_a, sorted_b = profile_b;
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());
  if (sorted_a != sorted_b) {
    return false;
  }
  auto const gens = generating_set(a);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (Elem y = 0; y < n; ++y) {
      if (profile_b[y] == profile_a[gens[k]]) {
        candidates[k].push_back(y);
      }
    }
  }
  std::vector<Elem> images(gens.size());
  constexpr Elem unset = static_cast<Elem>(-1);

  // Extends generator images to a full map by walking the Cayley graph.
  auto extend = [&](std::vector<Elem>& map) {
    map.assign(n, unset);
    std::vector<char> used(n, 0);
    map[a.identity()]  = b.identity();
    used[b.identity()] = 1;
    std::vector<Elem> queue{a.identity()};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Elem x = queue[q];
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Elem y  = a(x, gens[k]);
        Elem fy = b(map[x], images[k]);
        if (map[y] == unset) {
          if (used[fy]) {
            return false;
          }
          map[y]   = fy;
          used[fy] = 1;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (map[a(x, y)] != b(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  };

  std::vector<Elem> map;
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == gens.size()) {
      return extend(map) && visit(map);
    }
    for (Elem y : candidates[k]) {
      images[k] = y;
      if (search(k + 1)) {
        return true;
      }
    }
    return false;
  };
  return search(0);
}

inline std::optional<std::vector<Elem>> find_group_isomorphism(GroupTable const& a,
                                                               GroupTable const& b) {
  std::optional<std::vector<Elem>> found;
  for_each_group_isomorphism(a, b, [&](std::vector<Elem> const& m) {
    found = m;
    return true;
  });
  return found;
}

inline bool groups_isomorphic(GroupTable const& a, GroupTable const& b) {
  return find_group_isomorphism(a, b).has_value();
}

/// Name of the catalog group isomorphic to g, or "order-n group" if none.
inline std::string identify_group(GroupTable const& g) {
  for (auto const& [name, h] : group_catalog()) {
    if (h.size() == g.size() && groups_isomorphic(g, h)) {
      return name;
    }
  }
  return "order-" + std::to_string(g.size()) + " group";
}

}  // namespace semibrace
