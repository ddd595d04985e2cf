#pragma once

#include <string>
#include <vector>

#include <semibrace.hpp>

#include "oracles.hpp"

namespace fixtures {

using namespace semibrace;

inline oracle::Table table(OpTable const& t) {
  oracle::Table out(t.size(), std::vector<int>(t.size()));
  for (Elem a = 0; a < t.size(); ++a) {
    for (Elem b = 0; b < t.size(); ++b) {
      out[a][b] = static_cast<int>(t(a, b));
    }
  }
  return out;
}

inline oracle::Table dot(LeftSemiBrace const& B) { return table(B.dot_table()); }
inline oracle::Table circ(LeftSemiBrace const& B) { return table(B.circ_group().table()); }

inline OpTable op(oracle::Table const& t) {
  std::vector<std::vector<Elem>> rows;
  for (auto const& r : t) {
    rows.emplace_back(r.begin(), r.end());
  }
  return OpTable::from_rows(rows);
}

inline std::set<int> as_set(SubsetMask const& s) {
  std::set<int> out;
  for (Elem x : s.members()) {
    out.insert(static_cast<int>(x));
  }
  return out;
}

struct Instance {
  std::string   name;
  LeftSemiBrace B;
};

inline LeftSemiBrace trivial_brace_of(std::string const& group) {
  return trivial_brace(group_by_name(group));
}

/// product_semibrace over trivial braces G and index groups I, J in {C1, C2, C3}.
inline std::vector<Instance> product_corpus() {
  std::vector<Instance> out;
  for (char const* g : {"C1", "C2", "C3"}) {
    for (char const* i : {"C1", "C2", "C3"}) {
      for (char const* j : {"C1", "C2", "C3"}) {
        out.push_back({std::string("product(") + g + "," + i + "," + j + ")",
                       product_semibrace(trivial_brace_of(g), group_by_name(i), group_by_name(j))});
      }
    }
  }
  return out;
}

/// Every circ structure on the left and right zero semigroups of size 1..4.
inline std::vector<Instance> zero_corpus() {
  std::vector<Instance> out;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto side : {ZeroSide::left, ZeroSide::right}) {
      auto dot = OpTable::tabulate(n, [side](Elem x, Elem y) {
        return side == ZeroSide::left ? x : y;
      });
      auto hits = enumerate_circ(dot);
      for (std::size_t k = 0; k < hits.size(); ++k) {
        out.push_back({std::string(side == ZeroSide::left ? "left" : "right") + "-zero(n="
                           + std::to_string(n) + ",#" + std::to_string(k) + ")",
                       hits[k]});
      }
    }
  }
  return out;
}

inline std::vector<Instance> corpus() {
  auto out  = product_corpus();
  auto more = zero_corpus();
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

}  // namespace fixtures
