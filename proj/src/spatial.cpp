#include "civicroute/spatial.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "civicroute/rng.hpp"
#include "civicroute/textio.hpp"

namespace civicroute {

const char* to_string(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::Housing: return "housing";
    case DistributionKind::GoodFood: return "good_food";
    case DistributionKind::BadFood: return "bad_food";
    case DistributionKind::Population: return "population";
  }
  return "unknown";
}

SpatialDistribution::SpatialDistribution(DistributionKind kind, std::vector<WeightedPoint> points)
    : kind_(kind), points_(std::move(points)), total_weight_(0.0) {
  const std::string label = to_string(kind_);
  if (points_.empty()) {
    throw ConfigError(label + " distribution has no points");
  }
  for (const WeightedPoint& p : points_) {
    if (!std::isfinite(p.position.x) || !std::isfinite(p.position.y)) {
      throw ConfigError(label + " distribution has a non-finite position");
    }
    if (!(p.weight >= 0.0) || !std::isfinite(p.weight)) {
      throw ConfigError(label + " distribution has a negative or non-finite weight");
    }
    total_weight_ += p.weight;
  }
  if (!(total_weight_ > 0.0)) {
    throw ConfigError(label + " distribution has zero total weight");
  }
}

SpatialDistribution SpatialDistribution::with_point(WeightedPoint extra) const {
  std::vector<WeightedPoint> pts = points_;
  pts.push_back(extra);
  return SpatialDistribution(kind_, std::move(pts));
}

NodeId snap_to_node(const RoadNetwork& network, Vec2 position) {
  const auto& nodes = network.nodes();
  if (nodes.empty()) {
    throw ConfigError("cannot snap to an empty network");
  }
  NodeId best = nodes[0].id;
  double best_d2 = squared_distance(position, nodes[0].position);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const double d2 = squared_distance(position, nodes[i].position);
    if (d2 < best_d2) {  // strict: ties keep the smaller id
      best_d2 = d2;
      best = nodes[i].id;
    }
  }
  return best;
}

SpatialDistribution generate_uniform_in_bounds(DistributionKind kind, const Bounds& bounds,
                                               std::uint32_t count, std::uint64_t seed) {
  if (!bounds.ordered()) {
    throw ConfigError("generator bounds must satisfy x0 < x1 and y0 < y1");
  }
  if (count < 1) {
    throw ConfigError("generator count must be at least 1");
  }
  RngStream stream = RngStream::substream(seed, 0x756E6966ull, 0);  // "unif"
  std::vector<WeightedPoint> pts;
  pts.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const double x = stream.uniform(bounds.x0, bounds.x1);
    const double y = stream.uniform(bounds.y0, bounds.y1);
    pts.push_back({{x, y}, 1.0});
  }
  return SpatialDistribution(kind, std::move(pts));
}

SpatialDistribution generate_gaussian_cluster(DistributionKind kind, Vec2 center, double sigma,
                                              std::uint32_t count, std::uint64_t seed) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ConfigError("gaussian cluster sigma must be a positive number");
  }
  if (count < 1) {
    throw ConfigError("generator count must be at least 1");
  }
  RngStream stream = RngStream::substream(seed, 0x67617573ull, 0);  // "gaus"
  std::vector<WeightedPoint> pts;
  pts.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const double x = center.x + sigma * stream.gaussian();
    const double y = center.y + sigma * stream.gaussian();
    pts.push_back({{x, y}, 1.0});
  }
  return SpatialDistribution(kind, std::move(pts));
}

SpatialDistribution generate_at_nodes(DistributionKind kind, const RoadNetwork& network) {
  std::vector<WeightedPoint> pts;
  pts.reserve(network.nodes().size());
  for (const Node& n : network.nodes()) {
    pts.push_back({n.position, 1.0});
  }
  return SpatialDistribution(kind, std::move(pts));
}

namespace {

double parse_number(const std::string& token, const std::string& source, int line) {
  double v = 0.0;
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size() || !std::isfinite(v)) {
    throw ParseError(source, line, 1, "invalid number '" + token + "'");
  }
  return v;
}

}  // namespace

SpatialDistribution parse_distribution(std::string_view text, const std::string& source_name,
                                       DistributionKind kind, const std::string& section) {
  const std::string wanted = "[distribution." + section + "]";
  bool in_section = false;
  bool found = false;
  bool header_seen = false;
  std::vector<WeightedPoint> pts;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string line(text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos));
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) {
      line.resize(hash);
    }
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    if (!tokens.empty()) {
      if (tokens.size() == 1 && tokens[0].front() == '[') {
        in_section = tokens[0] == wanted;
        if (in_section) {
          found = true;
          header_seen = false;
        }
      } else if (in_section) {
        if (!header_seen) {
          if (tokens != std::vector<std::string>{"x", "y", "weight"}) {
            throw ParseError(source_name, line_no, 1, "distribution header must be exactly 'x y weight'");
          }
          header_seen = true;
        } else {
          if (tokens.size() != 3) {
            throw ParseError(source_name, line_no, 1, "distribution rows take exactly 3 fields: x y weight");
          }
          pts.push_back({{parse_number(tokens[0], source_name, line_no),
                          parse_number(tokens[1], source_name, line_no)},
                         parse_number(tokens[2], source_name, line_no)});
        }
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }

  if (!found) {
    throw ConfigError(source_name + ": no " + wanted + " section");
  }
  return SpatialDistribution(kind, std::move(pts));
}

SpatialDistribution load_distribution(const std::string& path, DistributionKind kind,
                                      const std::string& section) {
  return parse_distribution(read_file(path), path, kind, section);
}

}  // namespace civicroute
