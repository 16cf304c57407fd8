#pragma once

// Finite truncations of subsets A of Z+ and the two window conditions
//   (i)  every m in [0, N] splits as m = k + a, k in [0, R], a in A
//   (ii) every window [m, m+R], m in [0, N-R], meets A
// which are equivalent whenever 0 is a member. Sets always contain 0.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semiflow {

class WindowedSet {
 public:
  // Elements may arrive unsorted / with duplicates; kept as a strictly
  // increasing list. Requires 0 in the set and all elements in [0, horizon].
  WindowedSet(std::vector<long long> elements, long long horizon)
      : elements_(std::move(elements)), horizon_(horizon) {
    if (horizon_ < 0) throw std::invalid_argument("WindowedSet: negative horizon");
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()),
                    elements_.end());
    if (elements_.empty() || elements_.front() != 0)
      throw std::invalid_argument("WindowedSet: 0 must be a member");
    if (elements_.back() > horizon_)
      throw std::invalid_argument("WindowedSet: element beyond horizon");
  }

  const std::vector<long long>& elements() const { return elements_; }
  long long horizon() const { return horizon_; }

  bool contains(long long v) const {
    return std::binary_search(elements_.begin(), elements_.end(), v);
  }

  // Dense bit representation, bit i = membership of i; horizon+1 bits.
  std::vector<std::uint64_t> mask() const {
    std::vector<std::uint64_t> w(static_cast<std::size_t>(horizon_ / 64 + 1), 0);
    for (long long e : elements_)
      w[static_cast<std::size_t>(e >> 6)] |= (std::uint64_t{1} << (e & 63));
    return w;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(elements_[i]);
    }
    return s;
  }

 private:
  std::vector<long long> elements_;
  long long horizon_;
};

struct WindowRadius {
  long long value = 0;
};

namespace detail {

// In-place left shift by one bit over the word vector.
inline void shl1(std::vector<std::uint64_t>& w) {
  std::uint64_t carry = 0;
  for (auto& x : w) {
    std::uint64_t nc = x >> 63;
    x = (x << 1) | carry;
    carry = nc;
  }
}

inline void shr1(std::vector<std::uint64_t>& w) {
  std::uint64_t carry = 0;
  for (std::size_t i = w.size(); i-- > 0;) {
    std::uint64_t nc = w[i] & 1;
    w[i] = (w[i] >> 1) | (carry << 63);
    carry = nc;
  }
}

// True iff bits [0, hi] are all set.
inline bool all_set_upto(const std::vector<std::uint64_t>& w, long long hi) {
  if (hi < 0) return true;
  std::size_t full = static_cast<std::size_t>(hi / 64);
  for (std::size_t i = 0; i < full; ++i)
    if (w[i] != ~std::uint64_t{0}) return false;
  int rem = static_cast<int>(hi % 64);
  std::uint64_t need =
      rem == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (rem + 1)) - 1);
  return (w[full] & need) == need;
}

inline void require_radius(const WindowedSet& a, WindowRadius r) {
  if (r.value < 0)
    throw std::invalid_argument("WindowRadius: negative value");
  if (r.value > a.horizon())
    throw std::invalid_argument("WindowRadius: exceeds set horizon");
}

}  // namespace detail

// Condition (i): [0, N] is covered by {0..R} + A.
inline bool covers_by_window(const WindowedSet& a, WindowRadius r) {
  detail::require_radius(a, r);
  auto cur = a.mask();
  std::vector<std::uint64_t> acc(cur.size(), 0);
  for (long long k = 0; k <= r.value; ++k) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] |= cur[i];
    detail::shl1(cur);
  }
  return detail::all_set_upto(acc, a.horizon());
}

// Condition (ii): every window [m, m+R] with m in [0, N-R] meets A.
inline bool window_hits(const WindowedSet& a, WindowRadius r) {
  detail::require_radius(a, r);
  auto cur = a.mask();
  std::vector<std::uint64_t> acc(cur.size(), 0);
  for (long long k = 0; k <= r.value; ++k) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] |= cur[i];
    detail::shr1(cur);
  }
  return detail::all_set_upto(acc, a.horizon() - r.value);
}

// Smallest R with window_hits(a, R): max gap over consecutive elements,
// counting a final gap to horizon+1, minus one. A = {0} gives R = horizon.
inline WindowRadius min_window(const WindowedSet& a) {
  long long max_gap = 0;
  const auto& e = a.elements();
  for (std::size_t i = 1; i < e.size(); ++i)
    max_gap = std::max(max_gap, e[i] - e[i - 1]);
  max_gap = std::max(max_gap, a.horizon() + 1 - e.back());
  return WindowRadius{max_gap - 1};
}

// The two conditions agree at every truncation; returned as a checkable fact.
inline bool lemma_equivalence(const WindowedSet& a, WindowRadius r) {
  return covers_by_window(a, r) == window_hits(a, r);
}

// Set pattern grammar: comma-separated items, each "v" or "lo..hi" or
// "lo..hi:step"; the token N stands for the horizon (which must then be
// supplied). "0,4..N:2" = 0 plus every even from 4 to the horizon.
inline WindowedSet parse_windowed_set(std::string_view pattern,
                                      std::optional<long long> horizon = {}) {
  auto bad = [&](const std::string& why) {
    throw std::invalid_argument("set pattern '" + std::string(pattern) +
                                "': " + why);
  };
  auto parse_bound = [&](std::string_view tok) -> long long {
    if (tok == "N") {
      if (!horizon) bad("token N used but no horizon given");
      return *horizon;
    }
    if (tok.empty()) bad("empty number");
    long long v = 0;
    for (char c : tok) {
      if (c < '0' || c > '9') bad("bad number '" + std::string(tok) + "'");
      if (v > 100000000) bad("value too large");
      v = v * 10 + (c - '0');
    }
    return v;
  };

  std::vector<long long> elems;
  std::size_t pos = 0;
  while (pos <= pattern.size()) {
    auto comma = pattern.find(',', pos);
    std::string_view item = pattern.substr(
        pos, comma == std::string_view::npos ? pattern.size() - pos
                                             : comma - pos);
    if (item.empty()) bad("empty item");
    auto dots = item.find("..");
    if (dots == std::string_view::npos) {
      elems.push_back(parse_bound(item));
    } else {
      long long lo = parse_bound(item.substr(0, dots));
      std::string_view rest = item.substr(dots + 2);
      long long step = 1;
      auto colon = rest.find(':');
      if (colon != std::string_view::npos) {
        step = parse_bound(rest.substr(colon + 1));
        if (step <= 0) bad("step must be positive");
        rest = rest.substr(0, colon);
      }
      long long hi = parse_bound(rest);
      for (long long v = lo; v <= hi; v += step) elems.push_back(v);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  long long h = horizon        ? *horizon
                : elems.empty() ? 0
                                : *std::max_element(elems.begin(), elems.end());
  return WindowedSet(std::move(elems), h);
}

}  // namespace semiflow
