#include "tourn/pair_family.hpp"

#include <algorithm>
#include <charconv>

#include "tourn/errors.hpp"

namespace tourn {

namespace {

std::string pair_text(Vertex a, Vertex b) {
  return std::to_string(a) + "-" + std::to_string(b);
}

}  // namespace

PairFamily::PairFamily(int ambient, std::vector<Pair> pairs)
    : ambient_(ambient), pairs_(std::move(pairs)) {
  if (ambient_ < 0) throw InputError("negative ambient size " + std::to_string(ambient_));
  for (auto& p : pairs_) {
    if (p.lo > p.hi) std::swap(p.lo, p.hi);
    if (p.lo == p.hi) throw InputError("loop pair " + pair_text(p.lo, p.hi));
    if (p.lo < 0 || p.hi >= ambient_) {
      throw InputError("pair " + pair_text(p.lo, p.hi) + " outside 0.." +
                       std::to_string(ambient_ - 1));
    }
  }
  std::ranges::sort(pairs_);
  if (auto dup = std::ranges::adjacent_find(pairs_); dup != pairs_.end()) {
    throw InputError("duplicate pair " + pair_text(dup->lo, dup->hi));
  }
}

PairFamily::PairFamily(int ambient, std::initializer_list<std::pair<Vertex, Vertex>> pairs)
    : PairFamily(ambient, [&] {
        std::vector<Pair> v;
        for (auto [a, b] : pairs) v.push_back({a, b});
        return v;
      }()) {}

bool PairFamily::contains(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  return std::ranges::binary_search(pairs_, Pair{a, b});
}

PairFamily PairFamily::mirrored() const {
  std::vector<Pair> m;
  m.reserve(pairs_.size());
  for (auto p : pairs_) m.push_back({ambient_ - 1 - p.hi, ambient_ - 1 - p.lo});
  return PairFamily(ambient_, std::move(m));
}

std::string format_pairs(const PairFamily& family) {
  std::string out;
  for (auto p : family.pairs()) {
    if (!out.empty()) out += ',';
    out += pair_text(p.lo, p.hi);
  }
  return out;
}

PairFamily parse_pairs(std::string_view text, int ambient) {
  std::vector<Pair> pairs;
  Vertex top = -1;
  std::string_view rest = text;
  while (!rest.empty() && (rest.back() == '\n' || rest.back() == '\r' || rest.back() == ' '))
    rest.remove_suffix(1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    auto token = rest.substr(0, comma);
    auto dash = token.find('-');
    Vertex a = -1, b = -1;
    bool ok = dash != std::string_view::npos && dash > 0 && dash + 1 < token.size();
    if (ok) {
      auto [pa, ea] = std::from_chars(token.data(), token.data() + dash, a);
      auto [pb, eb] = std::from_chars(token.data() + dash + 1, token.data() + token.size(), b);
      ok = ea == std::errc{} && eb == std::errc{} && pa == token.data() + dash &&
           pb == token.data() + token.size() && a >= 0 && a < b;
    }
    if (!ok) throw InputError("malformed pair token '" + std::string(token) + "'");
    pairs.push_back({a, b});
    top = std::max(top, b);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
    if (rest.empty()) throw InputError("trailing comma in pair list '" + std::string(text) + "'");
  }
  return PairFamily(ambient < 0 ? top + 1 : ambient, std::move(pairs));
}

}  // namespace tourn
