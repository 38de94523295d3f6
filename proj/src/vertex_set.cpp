#include "tourn/vertex_set.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

#include "tourn/errors.hpp"

namespace tourn {

VertexSet::VertexSet(std::initializer_list<Vertex> items)
    : VertexSet(std::vector<Vertex>(items)) {}

VertexSet::VertexSet(std::vector<Vertex> items) : items_(std::move(items)) {
  std::ranges::sort(items_);
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  if (!items_.empty() && items_.front() < 0) {
    throw InputError("negative vertex " + std::to_string(items_.front()));
  }
}

VertexSet VertexSet::range(Vertex first, Vertex last) {
  VertexSet s;
  for (Vertex v = first; v < last; ++v) s.items_.push_back(v);
  return s;
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
  VertexSet s;
  while (mask != 0) {
    s.items_.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::ranges::binary_search(items_, v);
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = items_.begin(), b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::ranges::includes(other.items_, items_);
}

bool VertexSet::within(int n) const { return items_.empty() || items_.back() < n; }

VertexSet VertexSet::complement(int n) const {
  VertexSet s;
  for (Vertex v = 0; v < n; ++v)
    if (!contains(v)) s.items_.push_back(v);
  return s;
}

std::uint64_t VertexSet::mask() const {
  std::uint64_t m = 0;
  for (Vertex v : items_) {
    if (v >= 64) throw InputError("vertex " + std::to_string(v) + " does not fit a 64-bit mask");
    m |= std::uint64_t{1} << v;
  }
  return m;
}

bool shortlex_less(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string format_vertex_set(const VertexSet& set) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : set) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace

VertexSet parse_vertex_set(std::string_view text) {
  auto body = trim(text);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
    throw InputError("malformed vertex set '" + std::string(text) + "'");
  }
  body = trim(body.substr(1, body.size() - 2));
  std::vector<Vertex> items;
  while (!body.empty()) {
    auto comma = body.find(',');
    auto token = trim(body.substr(0, comma));
    Vertex v = -1;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || v < 0) {
      throw InputError("malformed vertex '" + std::string(token) + "' in set '" +
                       std::string(text) + "'");
    }
    items.push_back(v);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (trim(body).empty()) throw InputError("trailing comma in set '" + std::string(text) + "'");
  }
  return VertexSet(std::move(items));
}

}  // namespace tourn
