// Copyright 2026 the tglet authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TGLET_MOTIF_HPP
#define TGLET_MOTIF_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "tglet/common.hpp"

namespace tglet {

/// Edge orbit of a connected {2,3,4}-node graphlet: the position the counted
/// edge occupies inside the graphlet, up to automorphism.
enum class Orbit : std::uint8_t {
  edge = 0,
  path3 = 1,     // wedge; both wedge edges are equivalent
  triangle = 2,
  path4_edge = 3,
  path4_center = 4,
  star4 = 5,
  cycle4 = 6,
  tailed_tri_tail = 7,    // the pendant edge of a tailed triangle
  tailed_tri_center = 8,  // the triangle edge opposite the tail
  tailed_tri_edge = 9,    // a triangle edge incident to the tailed node
  chordal_edge = 10,      // one of the four cycle edges of a chordal cycle
  chordal_center = 11,    // the chord
  clique4 = 12,
};

inline constexpr int kNumOrbits = 13;

/// Graphlet class with the edge position abstracted away.
enum class Graphlet : std::uint8_t {
  edge = 0,
  path3 = 1,
  triangle = 2,
  path4 = 3,
  star4 = 4,
  cycle4 = 5,
  tailed_tri = 6,
  chordal_cycle = 7,
  clique4 = 8,
};

inline constexpr int kNumGraphlets = 9;

inline constexpr int orbit_nodes(Orbit g) {
  const auto v = static_cast<int>(g);
  return v == 0 ? 2 : (v <= 2 ? 3 : 4);
}

inline constexpr int orbit_edge_count(Orbit g) {
  constexpr std::array<int, kNumOrbits> kEdges = {1, 2, 3, 3, 3, 3, 4,
                                                  4, 4, 4, 5, 5, 6};
  return kEdges[static_cast<int>(g)];
}

inline constexpr std::string_view orbit_name(Orbit g) {
  constexpr std::array<std::string_view, kNumOrbits> kNames = {
      "edge",
      "3-path",
      "triangle",
      "4-path-edge",
      "4-path-center",
      "4-star",
      "4-cycle",
      "tailed-tri-tail-edge",
      "tailed-tri-center",
      "tailed-tri-tri-edge",
      "chordal-cycle-edge",
      "chordal-cycle-center",
      "4-clique",
  };
  return kNames[static_cast<int>(g)];
}

inline constexpr Graphlet orbit_graphlet(Orbit g) {
  constexpr std::array<Graphlet, kNumOrbits> kMap = {
      Graphlet::edge,       Graphlet::path3,         Graphlet::triangle,
      Graphlet::path4,      Graphlet::path4,         Graphlet::star4,
      Graphlet::cycle4,     Graphlet::tailed_tri,    Graphlet::tailed_tri,
      Graphlet::tailed_tri, Graphlet::chordal_cycle, Graphlet::chordal_cycle,
      Graphlet::clique4,
  };
  return kMap[static_cast<int>(g)];
}

inline constexpr int graphlet_nodes(Graphlet h) {
  const auto v = static_cast<int>(h);
  return v == 0 ? 2 : (v <= 2 ? 3 : 4);
}

inline constexpr int graphlet_edge_count(Graphlet h) {
  constexpr std::array<int, kNumGraphlets> kEdges = {1, 2, 3, 3, 3, 4, 4, 5, 6};
  return kEdges[static_cast<int>(h)];
}

inline constexpr std::string_view graphlet_name(Graphlet h) {
  constexpr std::array<std::string_view, kNumGraphlets> kNames = {
      "edge",    "3-path",         "triangle",      "4-path", "4-star",
      "4-cycle", "tailed-triangle", "chordal-cycle", "4-clique",
  };
  return kNames[static_cast<int>(h)];
}

// Key layout: [8-bit class id][4 x 12-bit type fields], types sorted
// ascending, unused trailing fields zero. Numeric order on the packed value
// is (class, lexicographic sorted types), which every output format relies on.
inline constexpr int kTypeBits = 12;
inline constexpr type_id kMaxTypeId = (1u << kTypeBits) - 1;  // 4095

/// Canonical id of a typed orbit: (orbit, multiset of node types).
struct MotifKey {
  std::uint64_t value = 0;
  friend constexpr auto operator<=>(const MotifKey&, const MotifKey&) = default;
};

/// Canonical id of a typed graphlet: (graphlet class, multiset of node types).
struct GraphletKey {
  std::uint64_t value = 0;
  friend constexpr auto operator<=>(const GraphletKey&,
                                    const GraphletKey&) = default;
};

namespace detail {

inline constexpr std::uint64_t pack_key(std::uint8_t cls,
                                        std::array<type_id, 4> t, int k) {
  // sort the first k entries ascending; k <= 4
  for (int a = 1; a < k; ++a)
    for (int b = a; b > 0 && t[b - 1] > t[b]; --b) std::swap(t[b - 1], t[b]);
  return (static_cast<std::uint64_t>(cls) << 48) |
         (static_cast<std::uint64_t>(t[0]) << 36) |
         (static_cast<std::uint64_t>(t[1]) << 24) |
         (static_cast<std::uint64_t>(t[2]) << 12) |
         static_cast<std::uint64_t>(t[3]);
}

inline void check_type(type_id t) {
  if (t == 0 || t > kMaxTypeId)
    throw std::invalid_argument("type id out of range 1..4095: " +
                                std::to_string(t));
}

}  // namespace detail

inline MotifKey encode(Orbit g, type_id t1, type_id t2) {
  detail::check_type(t1);
  detail::check_type(t2);
  if (orbit_nodes(g) != 2)
    throw std::invalid_argument("orbit expects a different type count");
  return {detail::pack_key(static_cast<std::uint8_t>(g), {t1, t2, 0, 0}, 2)};
}

inline MotifKey encode(Orbit g, type_id t1, type_id t2, type_id t3) {
  detail::check_type(t1);
  detail::check_type(t2);
  detail::check_type(t3);
  if (orbit_nodes(g) != 3)
    throw std::invalid_argument("orbit expects a different type count");
  return {detail::pack_key(static_cast<std::uint8_t>(g), {t1, t2, t3, 0}, 3)};
}

inline MotifKey encode(Orbit g, type_id t1, type_id t2, type_id t3,
                       type_id t4) {
  detail::check_type(t1);
  detail::check_type(t2);
  detail::check_type(t3);
  detail::check_type(t4);
  if (orbit_nodes(g) != 4)
    throw std::invalid_argument("orbit expects a different type count");
  return {detail::pack_key(static_cast<std::uint8_t>(g), {t1, t2, t3, t4}, 4)};
}

inline MotifKey encode(Orbit g, std::span<const type_id> types) {
  const int k = orbit_nodes(g);
  if (static_cast<int>(types.size()) != k)
    throw std::invalid_argument("expected " + std::to_string(k) +
                                " types, got " + std::to_string(types.size()));
  std::array<type_id, 4> t = {0, 0, 0, 0};
  for (int a = 0; a < k; ++a) {
    detail::check_type(types[a]);
    t[a] = types[a];
  }
  return {detail::pack_key(static_cast<std::uint8_t>(g), t, k)};
}

inline GraphletKey encode_graphlet(Graphlet h, std::span<const type_id> types) {
  const int k = graphlet_nodes(h);
  if (static_cast<int>(types.size()) != k)
    throw std::invalid_argument("expected " + std::to_string(k) +
                                " types, got " + std::to_string(types.size()));
  std::array<type_id, 4> t = {0, 0, 0, 0};
  for (int a = 0; a < k; ++a) {
    detail::check_type(types[a]);
    t[a] = types[a];
  }
  return {detail::pack_key(static_cast<std::uint8_t>(h), t, k)};
}

/// Re-tags an orbit key with its graphlet class; the type fields carry over.
inline GraphletKey to_graphlet_key(MotifKey key) {
  const auto g = static_cast<Orbit>(key.value >> 48);
  const auto h = orbit_graphlet(g);
  return {(static_cast<std::uint64_t>(h) << 48) |
          (key.value & ((std::uint64_t{1} << 48) - 1))};
}

/// Decoded form of a key: class id plus the sorted type multiset.
struct MotifDesc {
  Orbit orbit = Orbit::edge;
  int num_nodes = 0;
  int num_edges = 0;
  std::array<type_id, 4> types = {0, 0, 0, 0};

  std::span<const type_id> type_span() const {
    return {types.data(), static_cast<std::size_t>(num_nodes)};
  }
};

inline MotifDesc decode(MotifKey key) {
  const std::uint64_t cls = key.value >> 48;
  if (cls >= kNumOrbits) throw std::invalid_argument("malformed motif key");
  MotifDesc d;
  d.orbit = static_cast<Orbit>(cls);
  d.num_nodes = orbit_nodes(d.orbit);
  d.num_edges = orbit_edge_count(d.orbit);
  d.types = {static_cast<type_id>((key.value >> 36) & kMaxTypeId),
             static_cast<type_id>((key.value >> 24) & kMaxTypeId),
             static_cast<type_id>((key.value >> 12) & kMaxTypeId),
             static_cast<type_id>(key.value & kMaxTypeId)};
  for (int a = 0; a < 4; ++a) {
    if (a < d.num_nodes) {
      if (d.types[a] == 0) throw std::invalid_argument("malformed motif key");
      if (a > 0 && d.types[a - 1] > d.types[a])
        throw std::invalid_argument("malformed motif key");
    } else if (d.types[a] != 0) {
      throw std::invalid_argument("malformed motif key");
    }
  }
  return d;
}

struct GraphletDesc {
  Graphlet graphlet = Graphlet::edge;
  int num_nodes = 0;
  int num_edges = 0;
  std::array<type_id, 4> types = {0, 0, 0, 0};

  std::span<const type_id> type_span() const {
    return {types.data(), static_cast<std::size_t>(num_nodes)};
  }
};

inline GraphletDesc decode_graphlet(GraphletKey key) {
  const std::uint64_t cls = key.value >> 48;
  if (cls >= kNumGraphlets)
    throw std::invalid_argument("malformed graphlet key");
  GraphletDesc d;
  d.graphlet = static_cast<Graphlet>(cls);
  d.num_nodes = graphlet_nodes(d.graphlet);
  d.num_edges = graphlet_edge_count(d.graphlet);
  d.types = {static_cast<type_id>((key.value >> 36) & kMaxTypeId),
             static_cast<type_id>((key.value >> 24) & kMaxTypeId),
             static_cast<type_id>((key.value >> 12) & kMaxTypeId),
             static_cast<type_id>(key.value & kMaxTypeId)};
  for (int a = 0; a < d.num_nodes; ++a)
    if (d.types[a] == 0) throw std::invalid_argument("malformed graphlet key");
  return d;
}

inline std::string format_type_multiset(std::span<const type_id> types) {
  std::string s = "{";
  for (std::size_t a = 0; a < types.size(); ++a) {
    if (a) s += ',';
    s += std::to_string(types[a]);
  }
  s += '}';
  return s;
}

/// "4-clique, k=4, |E|=6, types {1,1,2,2}" — the lookup-table description.
inline std::string describe(MotifKey key) {
  const MotifDesc d = decode(key);
  std::string s{orbit_name(d.orbit)};
  s += ", k=" + std::to_string(d.num_nodes);
  s += ", |E|=" + std::to_string(d.num_edges);
  s += ", types " + format_type_multiset(d.type_span());
  return s;
}

inline std::string describe(GraphletKey key) {
  const GraphletDesc d = decode_graphlet(key);
  std::string s{graphlet_name(d.graphlet)};
  s += ", k=" + std::to_string(d.num_nodes);
  s += ", |E|=" + std::to_string(d.num_edges);
  s += ", types " + format_type_multiset(d.type_span());
  return s;
}

/// Decimal id g*10^4 + t1*10^3 + t2*10^2 + t3*10 + t4 for graphs with fewer
/// than 10 types. Types are taken in the given order (the caller picks the
/// convention) and missing trailing positions are 0.
inline std::uint64_t paper_decimal_hash(Orbit g,
                                        std::span<const type_id> types) {
  if (types.size() > 4)
    throw std::invalid_argument("at most 4 type positions");
  std::uint64_t v = static_cast<std::uint64_t>(g) * 10000;
  std::uint64_t place = 1000;
  for (type_id t : types) {
    if (t > 9)
      throw std::invalid_argument(
          "type id " + std::to_string(t) +
          " needs the wide decimal form (paper_decimal_hash_wide)");
    v += t * place;
    place /= 10;
  }
  return v;
}

/// Wide variant g*10^8 + t1*10^6 + t2*10^4 + t3*10^2 + t4 for up to 99 types.
inline std::uint64_t paper_decimal_hash_wide(Orbit g,
                                             std::span<const type_id> types) {
  if (types.size() > 4)
    throw std::invalid_argument("at most 4 type positions");
  std::uint64_t v = static_cast<std::uint64_t>(g) * 100000000;
  std::uint64_t place = 1000000;
  for (type_id t : types) {
    if (t > 99) throw std::invalid_argument("type id exceeds 2 decimal digits");
    v += t * place;
    place /= 100;
  }
  return v;
}

}  // namespace tglet

template <>
struct std::hash<tglet::MotifKey> {
  std::size_t operator()(const tglet::MotifKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.value);
  }
};

template <>
struct std::hash<tglet::GraphletKey> {
  std::size_t operator()(const tglet::GraphletKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.value);
  }
};

#endif  // TGLET_MOTIF_HPP
