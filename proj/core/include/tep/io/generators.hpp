#pragma once

#include <cstdint>

#include "tep/market/types.hpp"

namespace tep::io {

// Canonical two-zone system: node 0 carries the net import demand curve
// p = 80 - (4/3) q out to 60 MW, node 1 the net export supply curve
// p = 20 + (2/3) q out to 90 MW, as bid ladders of the given width priced at
// the midpoint of each step (so ladder sums reproduce the curve integrals
// exactly at integer capacities). One line 0->1 with no existing capacity,
// fixed cost 200, variable cost 10 and capacity menu {3, 6, ..., 30}.
// The step must divide 30.
market::Instance generate_two_node(double step);

// Garver six-node system: lines 1-6 exist, lines 7 (2-6) and 8 (4-6) are new.
// Topology data (reactance, existing capacity, variable cost) comes from the
// transcription table in garver_topology.hpp. Each of nodes 1-5 receives
// per_node demand and per_node supply bids per period, node 6 per_node supply
// bids only; prices are N(50, 10), quantities U(0, 0.5) MW, drawn in bid
// order (price then quantity) from the portable Rng seeded here.
market::Instance generate_garver(std::uint64_t seed, int per_node);

}  // namespace tep::io
