#include "wsn/sim/topology.hpp"

#include <charconv>
#include <cstdlib>

namespace wsn {

namespace {

// Normalizes an unordered pair so (a, b) and (b, a) hit the same link.
void canonical(NodeId& a, NodeId& b) {
  if (b < a) std::swap(a, b);
}

}  // namespace

std::size_t Topology::index_of(NodeId a, NodeId b) const {
  canonical(a, b);
  for (std::size_t i = 0; i < links_.size(); ++i)
    if (links_[i].a == a && links_[i].b == b) return i;
  return links_.size();
}

ErrorCode Topology::add_link(NodeId a, NodeId b, std::uint32_t latency_ms, double drop_prob,
                             std::uint8_t quality) {
  if (!has_node(a) || !has_node(b) || a == b) return ErrorCode::InvalidArgument;
  if (drop_prob < 0.0 || drop_prob > 1.0) return ErrorCode::InvalidArgument;
  canonical(a, b);
  if (index_of(a, b) != links_.size()) return ErrorCode::InvalidArgument;
  links_.push_back(Link{a, b, latency_ms, drop_prob, quality});
  adjacency_dirty_ = true;
  return ErrorCode::Ok;
}

ErrorCode Topology::remove_link(NodeId a, NodeId b) {
  std::size_t i = index_of(a, b);
  if (i == links_.size()) return ErrorCode::NotRegistered;
  links_.erase(links_.begin() + static_cast<std::ptrdiff_t>(i));
  adjacency_dirty_ = true;
  return ErrorCode::Ok;
}

const Topology::Link* Topology::find_link(NodeId a, NodeId b) const {
  std::size_t i = index_of(a, b);
  return i == links_.size() ? nullptr : &links_[i];
}

ErrorCode Topology::link_quality(NodeId a, NodeId b, std::uint8_t& out) const {
  const Link* l = find_link(a, b);
  if (!l) return ErrorCode::InvalidArgument;
  out = l->quality;
  return ErrorCode::Ok;
}

const std::vector<NodeId>& Topology::neighbors(NodeId n) const {
  if (adjacency_dirty_) rebuild_adjacency();
  static const std::vector<NodeId> kEmpty;
  if (!has_node(n)) return kEmpty;
  return adjacency_[n.value];
}

void Topology::rebuild_adjacency() const {
  adjacency_.assign(node_count_, {});
  for (const Link& l : links_) {
    adjacency_[l.a.value].push_back(l.b);
    adjacency_[l.b.value].push_back(l.a);
  }
  for (auto& nbrs : adjacency_) {
    for (std::size_t i = 1; i < nbrs.size(); ++i) {
      NodeId key = nbrs[i];
      std::size_t j = i;
      while (j > 0 && key < nbrs[j - 1]) {
        nbrs[j] = nbrs[j - 1];
        --j;
      }
      nbrs[j] = key;
    }
  }
  adjacency_dirty_ = false;
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 0;

  // Next non-blank, non-comment line; empty view plus false at end.
  bool next_line(std::string_view& out) {
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view raw = text.substr(pos, eol - pos);
      pos = eol + 1;
      ++line;
      if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
        raw = raw.substr(0, hash);
      std::size_t begin = raw.find_first_not_of(" \t\r");
      if (begin == std::string_view::npos) continue;
      std::size_t end = raw.find_last_not_of(" \t\r");
      out = raw.substr(begin, end - begin + 1);
      return true;
    }
    return false;
  }
};

bool split_fields(std::string_view line, std::vector<std::string_view>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return !out.empty();
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_double(std::string_view s, double& out) {
  std::string buf(s);
  char* end = nullptr;
  out = std::strtod(buf.c_str(), &end);
  return end == buf.c_str() + buf.size();
}

}  // namespace

ErrorCode load_topology(std::string_view text, Topology& out, ParseError& err) {
  Cursor cur{text};
  std::string_view line;
  std::vector<std::string_view> fields;

  if (!cur.next_line(line)) {
    err = {cur.line, "missing node-count line"};
    return ErrorCode::InvalidArgument;
  }
  std::uint64_t n = 0;
  if (!split_fields(line, fields) || fields.size() != 1 || !parse_u64(fields[0], n)) {
    err = {cur.line, "node-count line must be a single integer"};
    return ErrorCode::InvalidArgument;
  }
  Topology topo(n);

  while (cur.next_line(line)) {
    split_fields(line, fields);
    if (fields.size() < 2 || fields.size() > 5) {
      err = {cur.line, "expected: u v [latency_ms] [drop_prob] [quality]"};
      return ErrorCode::InvalidArgument;
    }
    std::uint64_t u = 0, v = 0, latency = 1, quality = 255;
    double drop = 0.0;
    if (!parse_u64(fields[0], u) || !parse_u64(fields[1], v)) {
      err = {cur.line, "endpoints must be integers"};
      return ErrorCode::InvalidArgument;
    }
    if (fields.size() >= 3 && !parse_u64(fields[2], latency)) {
      err = {cur.line, "latency_ms must be a non-negative integer"};
      return ErrorCode::InvalidArgument;
    }
    if (fields.size() >= 4 && (!parse_double(fields[3], drop) || drop < 0.0 || drop > 1.0)) {
      err = {cur.line, "drop_prob must be in [0,1]"};
      return ErrorCode::InvalidArgument;
    }
    if (fields.size() >= 5 && (!parse_u64(fields[4], quality) || quality > 255)) {
      err = {cur.line, "quality must be in [0,255]"};
      return ErrorCode::InvalidArgument;
    }
    if (u >= n || v >= n) {
      err = {cur.line, "link endpoint is not a declared node"};
      return ErrorCode::InvalidArgument;
    }
    if (u == v) {
      err = {cur.line, "self-loop"};
      return ErrorCode::InvalidArgument;
    }
    if (latency > 0xFFFFFFFFull) {
      err = {cur.line, "latency_ms out of range"};
      return ErrorCode::InvalidArgument;
    }
    ErrorCode e = topo.add_link(NodeId{u}, NodeId{v}, static_cast<std::uint32_t>(latency), drop,
                                static_cast<std::uint8_t>(quality));
    if (!ok(e)) {
      err = {cur.line, "duplicate link"};
      return ErrorCode::InvalidArgument;
    }
  }

  out = std::move(topo);
  err = {};
  return ErrorCode::Ok;
}

}  // namespace wsn
