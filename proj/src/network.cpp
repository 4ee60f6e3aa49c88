#include "civicroute/network.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <sstream>
#include <vector>

#include "civicroute/errors.hpp"
#include "civicroute/textio.hpp"

namespace civicroute {

void validate_wear_params(const WearParams& params) {
  if (!(params.epsilon > 0.0) || !(params.epsilon < 1.0)) {
    throw ConfigError("wear.epsilon must lie strictly inside (0, 1)");
  }
  if (!(params.quality_floor > 0.0) || !(params.quality_floor < 1.0)) {
    throw ConfigError("wear.quality_floor must lie strictly inside (0, 1)");
  }
  if (!(params.wear_coefficient_j > 0.0) || !std::isfinite(params.wear_coefficient_j)) {
    throw ConfigError("wear.wear_coefficient_j must be a positive number");
  }
}

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::EmptyNetwork: return "EmptyNetwork";
    case ViolationKind::NonDenseNodeIds: return "NonDenseNodeIds";
    case ViolationKind::NonFinitePosition: return "NonFinitePosition";
    case ViolationKind::NonDenseSegmentIds: return "NonDenseSegmentIds";
    case ViolationKind::UnknownNode: return "UnknownNode";
    case ViolationKind::SelfLoop: return "SelfLoop";
    case ViolationKind::NonPositiveLength: return "NonPositiveLength";
    case ViolationKind::NonPositiveTravelTime: return "NonPositiveTravelTime";
    case ViolationKind::QualityOutOfRange: return "QualityOutOfRange";
    case ViolationKind::NotStronglyConnected: return "NotStronglyConnected";
  }
  return "Unknown";
}

RoadNetwork::RoadNetwork(std::vector<Node> nodes, std::vector<Segment> segments)
    : nodes_(std::move(nodes)), segments_(std::move(segments)) {
  outgoing_.resize(nodes_.size());
  incoming_.resize(nodes_.size());
  for (const Segment& s : segments_) {
    if (s.from < nodes_.size() && s.to < nodes_.size()) {
      outgoing_[s.from].push_back(s.id);
      incoming_[s.to].push_back(s.id);
    }
  }
  traversals_.assign(segments_.size(), 0);
  repairs_.assign(segments_.size(), 0);
}

const Node& RoadNetwork::node(NodeId id) const {
  if (id >= nodes_.size()) {
    throw ConfigError("unknown node id " + std::to_string(id));
  }
  return nodes_[id];
}

const Segment& RoadNetwork::segment(SegmentId id) const {
  if (id >= segments_.size()) {
    throw ConfigError("unknown segment id " + std::to_string(id));
  }
  return segments_[id];
}

std::span<const SegmentId> RoadNetwork::outgoing(NodeId id) const {
  if (id >= nodes_.size()) {
    throw ConfigError("unknown node id " + std::to_string(id));
  }
  return outgoing_[id];
}

std::span<const SegmentId> RoadNetwork::incoming(NodeId id) const {
  if (id >= nodes_.size()) {
    throw ConfigError("unknown node id " + std::to_string(id));
  }
  return incoming_[id];
}

TraversalOutcome RoadNetwork::apply_traversal(SegmentId id, const WearParams& params) {
  validate_wear_params(params);
  if (id >= segments_.size()) {
    throw ConfigError("unknown segment id " + std::to_string(id));
  }
  Segment& s = segments_[id];
  double next = s.quality * (1.0 - params.epsilon);
  const bool repaired = next < params.quality_floor;
  if (repaired) {
    next = 1.0;
    ++repairs_[id];
  }
  s.quality = next;
  ++traversals_[id];
  return {next, repaired};
}

std::uint64_t RoadNetwork::traversal_count(SegmentId id) const {
  if (id >= segments_.size()) {
    throw ConfigError("unknown segment id " + std::to_string(id));
  }
  return traversals_[id];
}

std::uint64_t RoadNetwork::repair_count(SegmentId id) const {
  if (id >= segments_.size()) {
    throw ConfigError("unknown segment id " + std::to_string(id));
  }
  return repairs_[id];
}

std::uint64_t RoadNetwork::total_repairs() const {
  std::uint64_t total = 0;
  for (std::uint64_t r : repairs_) {
    total += r;
  }
  return total;
}

namespace {

// Nodes reachable from `start` along the given adjacency view.
std::size_t count_reachable(const RoadNetwork& net, NodeId start, bool forward) {
  std::vector<char> seen(net.nodes().size(), 0);
  std::deque<NodeId> queue{start};
  seen[start] = 1;
  std::size_t count = 1;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    const auto segs = forward ? net.outgoing(u) : net.incoming(u);
    for (SegmentId sid : segs) {
      const Segment& s = net.segment(sid);
      const NodeId v = forward ? s.to : s.from;
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        queue.push_back(v);
      }
    }
  }
  return count;
}

}  // namespace

std::vector<Violation> RoadNetwork::validate() const {
  std::vector<Violation> out;
  if (nodes_.empty()) {
    out.push_back({ViolationKind::EmptyNetwork, "network has no nodes"});
    return out;
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    if (n.id != i) {
      out.push_back({ViolationKind::NonDenseNodeIds,
                     "node at index " + std::to_string(i) + " has id " + std::to_string(n.id)});
    }
    if (!std::isfinite(n.position.x) || !std::isfinite(n.position.y)) {
      out.push_back({ViolationKind::NonFinitePosition, "node " + std::to_string(n.id)});
    }
  }

  bool structure_ok = true;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const Segment& s = segments_[i];
    const std::string label = "segment " + std::to_string(s.id);
    if (s.id != i) {
      out.push_back({ViolationKind::NonDenseSegmentIds,
                     "segment at index " + std::to_string(i) + " has id " + std::to_string(s.id)});
      structure_ok = false;
    }
    if (s.from >= nodes_.size() || s.to >= nodes_.size()) {
      out.push_back({ViolationKind::UnknownNode, label + " references a missing node"});
      structure_ok = false;
      continue;
    }
    if (s.from == s.to) {
      out.push_back({ViolationKind::SelfLoop, label + " starts and ends at node " + std::to_string(s.from)});
    }
    if (!(s.length_m > 0.0) || !std::isfinite(s.length_m)) {
      out.push_back({ViolationKind::NonPositiveLength, label + " has length " + format_double(s.length_m)});
    }
    if (!(s.base_time_s > 0.0) || !std::isfinite(s.base_time_s)) {
      out.push_back(
          {ViolationKind::NonPositiveTravelTime, label + " has base time " + format_double(s.base_time_s)});
    }
    if (!(s.quality > 0.0) || !(s.quality <= 1.0)) {
      out.push_back({ViolationKind::QualityOutOfRange, label + " has quality " + format_double(s.quality)});
    }
  }

  if (structure_ok) {
    const std::size_t n = nodes_.size();
    if (count_reachable(*this, 0, true) != n || count_reachable(*this, 0, false) != n) {
      out.push_back({ViolationKind::NotStronglyConnected, "graph is not strongly connected"});
    }
  }
  return out;
}

double segment_quality_series(double q0, double epsilon, std::uint64_t n) {
  return q0 * std::pow(1.0 - epsilon, static_cast<double>(n));
}

namespace {

struct Row {
  std::vector<std::string> tokens;
  int line;
};

std::vector<Row> tokenize_rows(std::string_view text) {
  std::vector<Row> rows;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    Row row{{}, line_no};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
        ++i;
      }
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
        ++i;
      }
      if (i > start) {
        row.tokens.emplace_back(line.substr(start, i - start));
      }
    }
    if (!row.tokens.empty()) {
      rows.push_back(std::move(row));
    }
    if (eol == std::string_view::npos) {
      break;
    }
    pos = eol + 1;
  }
  return rows;
}

double parse_number(const std::string& token, const std::string& source, int line) {
  double v = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size() || !std::isfinite(v)) {
    throw ParseError(source, line, 1, "invalid number '" + token + "'");
  }
  return v;
}

std::uint32_t parse_id(const std::string& token, const std::string& source, int line) {
  std::uint32_t v = 0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
    throw ParseError(source, line, 1, "invalid id '" + token + "'");
  }
  return v;
}

const std::vector<std::string> kNodeHeader = {"id", "x", "y"};
const std::vector<std::string> kSegmentHeader = {"id", "from", "to", "length_m", "base_time_s", "quality"};

}  // namespace

RoadNetwork parse_network(std::string_view text, const std::string& source_name) {
  enum class Section { None, Nodes, Segments };
  Section section = Section::None;
  bool header_seen = false;
  bool nodes_section_seen = false;
  bool segments_section_seen = false;
  std::vector<Node> nodes;
  std::vector<Segment> segments;

  for (const Row& row : tokenize_rows(text)) {
    if (row.tokens.size() == 1 && row.tokens[0].front() == '[') {
      const std::string& tag = row.tokens[0];
      if (tag == "[nodes]") {
        section = Section::Nodes;
        nodes_section_seen = true;
      } else if (tag == "[segments]") {
        section = Section::Segments;
        segments_section_seen = true;
      } else {
        throw ParseError(source_name, row.line, 1, "unknown section " + tag);
      }
      header_seen = false;
      continue;
    }
    switch (section) {
      case Section::None:
        throw ParseError(source_name, row.line, 1, "data before any [nodes]/[segments] section");
      case Section::Nodes: {
        if (!header_seen) {
          if (row.tokens != kNodeHeader) {
            throw ParseError(source_name, row.line, 1, "node header must be exactly 'id x y'");
          }
          header_seen = true;
          continue;
        }
        if (row.tokens.size() != 3) {
          throw ParseError(source_name, row.line, 1, "node rows take exactly 3 fields: id x y");
        }
        const std::uint32_t id = parse_id(row.tokens[0], source_name, row.line);
        if (id != nodes.size()) {
          throw ParseError(source_name, row.line, 1,
                           "node ids must be dense and ascending from 0 (expected " +
                               std::to_string(nodes.size()) + ", got " + std::to_string(id) + ")");
        }
        nodes.push_back({id,
                         {parse_number(row.tokens[1], source_name, row.line),
                          parse_number(row.tokens[2], source_name, row.line)}});
        break;
      }
      case Section::Segments: {
        if (!header_seen) {
          if (row.tokens != kSegmentHeader) {
            throw ParseError(source_name, row.line, 1,
                             "segment header must be exactly 'id from to length_m base_time_s quality'");
          }
          header_seen = true;
          continue;
        }
        if (row.tokens.size() != 6) {
          throw ParseError(source_name, row.line, 1,
                           "segment rows take exactly 6 fields: id from to length_m base_time_s quality");
        }
        const std::uint32_t id = parse_id(row.tokens[0], source_name, row.line);
        if (id != segments.size()) {
          throw ParseError(source_name, row.line, 1,
                           "segment ids must be dense and ascending from 0 (expected " +
                               std::to_string(segments.size()) + ", got " + std::to_string(id) + ")");
        }
        segments.push_back({id, parse_id(row.tokens[1], source_name, row.line),
                            parse_id(row.tokens[2], source_name, row.line),
                            parse_number(row.tokens[3], source_name, row.line),
                            parse_number(row.tokens[4], source_name, row.line),
                            parse_number(row.tokens[5], source_name, row.line)});
        break;
      }
    }
  }

  if (!nodes_section_seen) {
    throw ParseError(source_name, 1, 1, "missing [nodes] section");
  }
  if (!segments_section_seen) {
    throw ParseError(source_name, 1, 1, "missing [segments] section");
  }
  return RoadNetwork(std::move(nodes), std::move(segments));
}

RoadNetwork load_network(const std::string& path) {
  RoadNetwork net = parse_network(read_file(path), path);
  const std::vector<Violation> violations = net.validate();
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "invalid network in " << path << ":";
    for (const Violation& v : violations) {
      msg << "\n  " << to_string(v.kind) << ": " << v.detail;
    }
    throw ConfigError(msg.str());
  }
  return net;
}

std::string format_network(const RoadNetwork& network) {
  std::string out = "[nodes]\nid x y\n";
  for (const Node& n : network.nodes()) {
    out += std::to_string(n.id) + " " + format_double(n.position.x) + " " + format_double(n.position.y) + "\n";
  }
  out += "\n[segments]\nid from to length_m base_time_s quality\n";
  for (const Segment& s : network.segments()) {
    out += std::to_string(s.id) + " " + std::to_string(s.from) + " " + std::to_string(s.to) + " " +
           format_double(s.length_m) + " " + format_double(s.base_time_s) + " " + format_double(s.quality) +
           "\n";
  }
  return out;
}

void save_network(const RoadNetwork& network, const std::string& path) {
  write_file(path, format_network(network));
}

}  // namespace civicroute
