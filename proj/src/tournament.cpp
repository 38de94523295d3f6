#include "tourn/tournament.hpp"

#include <charconv>

namespace tourn {

namespace {

void require_vertex(const Tournament& t, Vertex v, std::string_view what) {
  if (v < 0 || v >= t.order()) {
    throw InputError(std::string(what) + ": vertex " + std::to_string(v) + " outside 0.." +
                     std::to_string(t.order() - 1));
  }
}

}  // namespace

Tournament::Tournament(int n) : n_(n) {
  if (n < 0) throw InputError("negative tournament order " + std::to_string(n));
  auto pairs = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  bits_.assign((pairs + 63) / 64, 0);
}

std::vector<int> Tournament::scores() const {
  std::vector<int> s(static_cast<std::size_t>(n_), 0);
  for (Vertex i = 0; i < n_; ++i)
    for (Vertex j = i + 1; j < n_; ++j) ++s[static_cast<std::size_t>(arc(i, j) ? i : j)];
  return s;
}

Tournament transitive(int n) {
  return Tournament::from_relation(n, [](Vertex, Vertex) { return true; });
}

Tournament reverse_pairs(const Tournament& t, const PairFamily& pairs) {
  for (auto p : pairs.pairs()) require_vertex(t, p.hi, "reverse_pairs");
  return Tournament::from_relation(
      t.order(), [&](Vertex i, Vertex j) { return t.arc(i, j) != pairs.contains(i, j); });
}

Tournament dual(const Tournament& t) {
  return Tournament::from_relation(t.order(), [&](Vertex i, Vertex j) { return t.arc(j, i); });
}

InducedTournament subtournament(const Tournament& t, const VertexSet& subset) {
  if (!subset.within(t.order())) require_vertex(t, subset.back(), "subtournament");
  std::vector<Vertex> rank_map(subset.begin(), subset.end());
  auto sub = Tournament::from_relation(static_cast<int>(rank_map.size()), [&](Vertex i, Vertex j) {
    return t.arc(rank_map[static_cast<std::size_t>(i)], rank_map[static_cast<std::size_t>(j)]);
  });
  return {std::move(sub), std::move(rank_map)};
}

Tournament remove_vertex(const Tournament& t, Vertex v) {
  require_vertex(t, v, "remove_vertex");
  auto keep = VertexSet{v}.complement(t.order());
  return subtournament(t, keep).tournament;
}

Tournament relabel(const Tournament& t, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != t.order()) {
    throw InputError("relabel: permutation of size " + std::to_string(perm.size()) +
                     " for order " + std::to_string(t.order()));
  }
  if (VertexSet(std::vector<Vertex>(perm.begin(), perm.end())) != t.vertices()) {
    throw InputError("relabel: not a permutation of the vertex set");
  }
  return Tournament::from_relation(t.order(), [&](Vertex i, Vertex j) {
    return t.arc(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
  });
}

std::string format_tournament(const Tournament& t) {
  std::string out = std::to_string(t.order());
  out += '\n';
  for (Vertex i = 0; i < t.order(); ++i)
    for (Vertex j = i + 1; j < t.order(); ++j) out += t.arc(i, j) ? '1' : '0';
  out += '\n';
  return out;
}

Tournament parse_tournament(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  while (!lines.empty() && lines.back().empty() && lines.size() > 2) lines.pop_back();
  if (lines.empty() || lines.front().empty()) throw InputError("tournament text: missing order line");

  int n = -1;
  auto first = lines.front();
  auto [ptr, ec] = std::from_chars(first.data(), first.data() + first.size(), n);
  if (ec != std::errc{} || ptr != first.data() + first.size() || n < 0) {
    throw InputError("tournament text: malformed order '" + std::string(first) + "'");
  }
  if (lines.size() > 2) throw InputError("tournament text: unexpected content after arc line");
  std::string_view bits = lines.size() == 2 ? lines[1] : std::string_view{};
  auto expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  if (bits.size() != expected) {
    throw InputError("tournament text: expected " + std::to_string(expected) +
                     " arc characters for order " + std::to_string(n) + ", got " +
                     std::to_string(bits.size()));
  }
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw InputError(std::string("tournament text: invalid arc character '") + c + "'");
    }
  }
  std::size_t k = 0;
  return Tournament::from_relation(n, [&](Vertex, Vertex) { return bits[k++] == '1'; });
}

std::string to_dot(const Tournament& t) {
  std::string out = "digraph tournament {\n";
  for (Vertex v = 0; v < t.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (Vertex i = 0; i < t.order(); ++i) {
    for (Vertex j = i + 1; j < t.order(); ++j) {
      auto [from, to] = t.arc(i, j) ? std::pair{i, j} : std::pair{j, i};
      out += "  " + std::to_string(from) + " -> " + std::to_string(to) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace tourn
