#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "tba/fdgen.hpp"

namespace tba {

using NodeId = std::string;
using LinkId = std::string;

// Dense internal indices. Externally everything is addressed by id; the
// index <-> id mapping is fixed at construction and recorded in outputs.
using NodeIndex = int;
using LinkIndex = int;

struct Link {
  LinkId id;
  NodeId tail;
  NodeId head;
  double length_km = 0.0;
  LinkParams params;
};

class Network {
 public:
  // Validates endpoints and id uniqueness, then builds the incidence sets.
  // Throws StructuralError naming the offending link on a dangling endpoint
  // or a duplicate id.
  static Network build(std::vector<NodeId> nodes, std::vector<Link> links);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }

  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }
  const Link& link(LinkIndex a) const { return links_[a]; }

  NodeIndex node_index(const NodeId& id) const;  // throws StructuralError
  LinkIndex link_index(const LinkId& id) const;  // throws StructuralError
  bool has_link(const LinkId& id) const;

  NodeIndex tail_of(LinkIndex a) const { return tail_[a]; }
  NodeIndex head_of(LinkIndex a) const { return head_[a]; }

  // Inbound links (ending at n) and outbound links (departing from n).
  const std::vector<LinkIndex>& in_links(NodeIndex n) const { return in_[n]; }
  const std::vector<LinkIndex>& out_links(NodeIndex n) const { return out_[n]; }

 private:
  std::vector<NodeId> nodes_;
  std::vector<Link> links_;
  std::vector<NodeIndex> tail_, head_;
  std::vector<std::vector<LinkIndex>> in_, out_;
  std::unordered_map<NodeId, NodeIndex> node_by_id_;
  std::unordered_map<LinkId, LinkIndex> link_by_id_;
};

struct DemandEntry {
  NodeId origin;
  NodeId destination;
  double demand = 0.0;  // veh/hr
};

// Origin-destination demand rates. Entries with origin == destination are
// dropped at load time; negative demands are rejected.
class DemandTable {
 public:
  static DemandTable from_entries(const std::vector<DemandEntry>& entries);

  const std::vector<DemandEntry>& entries() const { return entries_; }
  double total() const { return total_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<DemandEntry> entries_;
  double total_ = 0.0;
};

// One unit of routable demand: a single origin with one or more destinations.
struct Commodity {
  NodeId origin;
  std::vector<std::pair<NodeId, double>> destinations;  // (dest, veh/hr)
  double total = 0.0;
};

enum class CommodityMode {
  by_origin,  // one commodity per distinct origin (default)
  by_od,      // one commodity per OD pair, for disaggregate reporting
};

// Groups demand into commodities. Total demand is preserved exactly. The
// objectives depend only on aggregate link flows, so merging OD pairs that
// share an origin leaves the feasible aggregate-flow set unchanged while
// shrinking the variable count.
std::vector<Commodity> aggregate_by_origin(
    const DemandTable& demands, CommodityMode mode = CommodityMode::by_origin);

// Per-commodity and aggregate link flows (veh/hr). Aggregates are the exact
// per-link sums of the commodity flows, so the linking identity holds by
// construction; conservation and bound compliance are checked separately.
struct FlowPattern {
  std::vector<LinkId> link_ids;                      // network link order
  std::vector<std::vector<double>> commodity_flows;  // [commodity][link]
  std::vector<double> aggregate;                     // [link]

  static FlowPattern from_commodity_flows(
      const Network& net, std::vector<std::vector<double>> flows);

  double aggregate_of(const Network& net, const LinkId& id) const;
};

// Binary flow-state indicator per link: 1 = uncongested, 0 = congested.
class StateVector {
 public:
  static StateVector all_uncongested(const Network& net);
  // Links listed in `congested` get state 0, all others 1. Unknown ids throw.
  static StateVector from_congested_set(const Network& net,
                                        const std::vector<LinkId>& congested);

  bool uncongested(LinkIndex a) const { return states_[a] != 0; }
  void set_congested(LinkIndex a) { states_[a] = 0; }
  int congested_count() const;
  std::vector<LinkIndex> congested_links() const;  // ascending link index
  int size() const { return static_cast<int>(states_.size()); }

  bool operator==(const StateVector& other) const = default;

 private:
  std::vector<std::uint8_t> states_;
};

// Net outflow minus supply at every node for one commodity:
//   residual(n) = sum(out flows) - sum(in flows) - supply(n)
// with supply(origin) = +total demand and supply(destination) = -demand.
// A feasible flow has all residuals zero. Diagnostic only; flows must be
// given for every link.
std::vector<double> conservation_residual(const Network& net,
                                          const Commodity& commodity,
                                          const std::vector<double>& flows);

}  // namespace tba
