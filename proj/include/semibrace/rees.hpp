#pragma once

// Rees matrix semigroups M(G, I, J, P) with product
//   (g,i,j)(h,k,l) = (g p_{jk} h, i, l)
// and the decomposition of a finite completely simple semigroup into that form.

#include <optional>
#include <string>
#include <vector>

#include "op_table.hpp"

namespace semibrace {

/// Upper bound on the carrier size produced by table constructions.
inline constexpr std::size_t kDefaultSizeCap = 4096;

/// Rees coordinates, 0-based. Printed 1-based by the report layer.
struct ReesCoord {
  Elem g = 0;
  Elem i = 0;
  Elem j = 0;
  friend bool operator==(ReesCoord const&, ReesCoord const&) = default;
};

struct ReesStructure {
  GroupTable             group;
  std::size_t            rows = 1;
  std::size_t            cols = 1;
  std::vector<Elem>      sandwich;  // cols x rows, entry p_{jk} at j * rows + k
  std::vector<ReesCoord> coords;    // carrier index -> (g, i, j)
  std::vector<Elem>      element_at;  // (g * rows + i) * cols + j -> carrier index
  bool                   normalized = true;

  // Carrier indices of (g,1,1), (1,i,1) and (1,1,j); index 0 is the base idempotent.
  std::vector<Elem> group_elements;
  std::vector<Elem> row_idempotents;
  std::vector<Elem> col_idempotents;

  Elem p(std::size_t j, std::size_t k) const { return sandwich[j * rows + k]; }

  Elem at(Elem g, Elem i, Elem j) const { return element_at[(g * rows + i) * cols + j]; }

  ReesCoord product(ReesCoord x, ReesCoord y) const {
    return {group(group(x.g, p(x.j, y.i)), y.g), x.i, y.j};
  }
};

/// Cayley table of M(G, rows, cols, P) together with its coordinates.
/// Element (g, i, j) receives index (g * rows + i) * cols + j.
inline std::pair<OpTable, ReesStructure> rees_semigroup(GroupTable const& g,
                                                        std::size_t rows,
                                                        std::size_t cols,
                                                        std::vector<Elem> const& sandwich,
                                                        std::size_t cap = kDefaultSizeCap) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorKind::validation, "SchemaError", "index sets must be nonempty");
  }
  if (sandwich.size() != rows * cols) {
    throw Error(ErrorKind::validation, "SchemaError",
                "sandwich must be cols x rows = " + std::to_string(cols * rows) + " entries");
  }
  for (Elem e : sandwich) {
    if (e >= g.size()) {
      throw Error(ErrorKind::validation, "RangeError", "sandwich entry outside the group");
    }
  }
  std::size_t const n = g.size() * rows * cols;
  if (n > cap) {
    throw Error(ErrorKind::cap, "CapExceeded",
                "Rees semigroup of size " + std::to_string(n) + " exceeds cap "
                    + std::to_string(cap));
  }
  ReesStructure rs;
  rs.group    = g;
  rs.rows     = rows;
  rs.cols     = cols;
  rs.sandwich = sandwich;
  rs.coords.resize(n);
  rs.element_at.resize(n);
  for (Elem x = 0; x < n; ++x) {
    rs.coords[x]     = {static_cast<Elem>(x / cols / rows), static_cast<Elem>((x / cols) % rows),
                        static_cast<Elem>(x % cols)};
    rs.element_at[x] = x;
  }
  rs.normalized = std::all_of(sandwich.begin(), sandwich.end(),
                              [&](Elem e) { return e == g.identity(); });
  auto table = OpTable::tabulate(n, [&](Elem x, Elem y) {
    ReesCoord c = rs.product(rs.coords[x], rs.coords[y]);
    return rs.at(c.g, c.i, c.j);
  });
  // identity first, then the rest in index order
  rs.group_elements.push_back(rs.at(g.identity(), 0, 0));
  for (Elem h = 0; h < g.size(); ++h) {
    if (h != g.identity()) {
      rs.group_elements.push_back(rs.at(h, 0, 0));
    }
  }
  for (Elem i = 0; i < rows; ++i) {
    rs.row_idempotents.push_back(rs.at(g.identity(), i, 0));
  }
  for (Elem j = 0; j < cols; ++j) {
    rs.col_idempotents.push_back(rs.at(g.identity(), 0, j));
  }
  return {std::move(table), std::move(rs)};
}

/// All-identity sandwich of shape cols x rows.
inline std::vector<Elem> identity_sandwich(GroupTable const& g, std::size_t rows, std::size_t cols) {
  return std::vector<Elem>(rows * cols, g.identity());
}

/// Decomposes a finite semigroup as a Rees matrix semigroup over the maximal
/// subgroup eSe, where e is `base` or else the least idempotent.
///
/// Coordinates are normalized at e: e = (1,1,1), the first row and column of
/// the sandwich are the identity, row index i names the idempotent (1,i,1) of
/// Se and column index j the idempotent (1,1,j) of eS. Rows and columns other
/// than the first are ordered by carrier index. Failures: NotASemigroup,
/// NotSimple(b), NoPrimitiveIdempotent.
inline Checked<ReesStructure> rees_decompose(OpTable const& t,
                                             std::optional<Elem> base = std::nullopt) {
  std::size_t const n = t.size();
  if (auto rep = verify_semigroup(t, 1); !rep.valid) {
    auto const& v = rep.violations.front();
    return Failure{"NotASemigroup", {v[0], v[1], v[2]}, "(xy)z != x(yz)"};
  }
  // S b S = (S b) S
  for (Elem b = 0; b < n; ++b) {
    std::vector<char> sb(n, 0), sbs(n, 0);
    for (Elem x = 0; x < n; ++x) {
      sb[t(x, b)] = 1;
    }
    std::size_t hit = 0;
    for (Elem u = 0; u < n; ++u) {
      if (!sb[u]) {
        continue;
      }
      for (Elem y = 0; y < n; ++y) {
        Elem v = t(u, y);
        if (!sbs[v]) {
          sbs[v] = 1;
          ++hit;
        }
      }
    }
    if (hit != n) {
      return Failure{"NotSimple", {b}, "SbS is a proper subset of S"};
    }
  }
  Elem e;
  if (base) {
    if (*base >= n || !is_idempotent(t, *base)) {
      return Failure{"NoPrimitiveIdempotent", {}, "requested base point is not idempotent"};
    }
    e = *base;
  } else {
    auto idem = idempotents(t);
    if (idem.empty()) {
      return Failure{"NoPrimitiveIdempotent", {}, "semigroup has no idempotent"};
    }
    e = idem.front();
  }

  // eSe, listed with e first
  std::vector<char> in_g(n, 0);
  for (Elem x = 0; x < n; ++x) {
    in_g[t(t(e, x), e)] = 1;
  }
  std::vector<Elem> gelems{e};
  for (Elem x = 0; x < n; ++x) {
    if (in_g[x] && x != e) {
      gelems.push_back(x);
    }
  }
  std::vector<Elem> gindex(n, static_cast<Elem>(-1));
  for (Elem k = 0; k < gelems.size(); ++k) {
    gindex[gelems[k]] = k;
  }
  auto gtable = verify_group(t.restrict_to(gelems));
  if (!gtable || gtable.value().identity() != 0) {
    return Failure{"NoPrimitiveIdempotent", {e}, "eSe is not a group with identity e"};
  }
  GroupTable const& grp = gtable.value();

  auto collect = [&](auto&& in_set) {
    std::vector<Elem> out{e};
    for (Elem x = 0; x < n; ++x) {
      if (x != e && is_idempotent(t, x) && in_set(x)) {
        out.push_back(x);
      }
    }
    return out;
  };
  auto in_se = [&](Elem x) { return t(x, e) == x; };
  auto in_es = [&](Elem x) { return t(e, x) == x; };
  auto rows = collect(in_se);
  auto cols = collect(in_es);

  ReesStructure rs;
  rs.group           = grp;
  rs.rows            = rows.size();
  rs.cols            = cols.size();
  rs.group_elements  = gelems;
  rs.row_idempotents = rows;
  rs.col_idempotents = cols;
  if (grp.size() * rows.size() * cols.size() != n) {
    return Failure{"NoPrimitiveIdempotent", {e},
                   "|G||I||J| = " + std::to_string(grp.size() * rows.size() * cols.size())
                       + " differs from " + std::to_string(n)};
  }
  rs.coords.resize(n);
  rs.element_at.assign(n, static_cast<Elem>(-1));
  auto position = [](std::vector<Elem> const& v, Elem x) -> std::optional<Elem> {
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) {
      return std::nullopt;
    }
    return static_cast<Elem>(it - v.begin());
  };
  for (Elem x = 0; x < n; ++x) {
    Elem g    = t(t(e, x), e);
    Elem ginv = gelems[grp.inverse(gindex[g])];
    auto i    = position(rows, t(t(x, e), ginv));
    auto j    = position(cols, t(t(ginv, e), x));
    if (!i || !j) {
      return Failure{"NoPrimitiveIdempotent", {x}, "element has no Rees coordinates"};
    }
    ReesCoord c{gindex[g], *i, *j};
    Elem flat = (c.g * rs.rows + c.i) * rs.cols + c.j;
    if (rs.element_at[flat] != static_cast<Elem>(-1)) {
      return Failure{"NoPrimitiveIdempotent", {x, rs.element_at[flat]},
                     "two elements share Rees coordinates"};
    }
    rs.coords[x]        = c;
    rs.element_at[flat] = x;
  }
  rs.sandwich.resize(rs.rows * rs.cols);
  for (Elem j = 0; j < rs.cols; ++j) {
    for (Elem k = 0; k < rs.rows; ++k) {
      Elem p = t(cols[j], rows[k]);
      if (!in_g[p]) {
        return Failure{"NoPrimitiveIdempotent", {cols[j], rows[k]}, "sandwich entry not in eSe"};
      }
      rs.sandwich[j * rs.rows + k] = gindex[p];
    }
  }
  rs.normalized = std::all_of(rs.sandwich.begin(), rs.sandwich.end(),
                              [&](Elem p) { return p == grp.identity(); });
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (rs.coords[t(x, y)] != rs.product(rs.coords[x], rs.coords[y])) {
        return Failure{"NoPrimitiveIdempotent", {x, y}, "Rees product law fails"};
      }
    }
  }
  return rs;
}

}  // namespace semibrace
