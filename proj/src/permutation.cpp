#include "rotmaps/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rotmaps {

namespace {

void require_same_order(const Permutation& p, const Permutation& q, const char* what) {
  if (p.order() != q.order()) {
    std::ostringstream msg;
    msg << what << ": order mismatch (" << p.order() << " vs " << q.order() << ")";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

Permutation::Permutation(std::size_t n) : images_(n) {
  std::iota(images_.begin(), images_.end(), Corner{1});
}

Permutation Permutation::from_images(std::vector<Corner> images) {
  std::vector<bool> seen(images.size(), false);
  for (Corner c : images) {
    if (c < 1 || c > images.size())
      throw std::invalid_argument("permutation image " + std::to_string(c) + " out of range");
    if (seen[c - 1])
      throw std::invalid_argument("permutation image " + std::to_string(c) + " repeated");
    seen[c - 1] = true;
  }
  return Permutation(std::move(images), Unchecked{});
}

Permutation Permutation::from_cycles(const CycleForm& form, std::size_t n) {
  std::vector<Corner> images(n);
  std::iota(images.begin(), images.end(), Corner{1});
  std::vector<bool> used(n, false);
  for (const Cycle& cycle : form.cycles) {
    if (cycle.empty()) throw std::invalid_argument("empty cycle");
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Corner c = cycle[i];
      if (c < 1 || c > n)
        throw std::invalid_argument("corner " + std::to_string(c) + " out of range 1.." +
                                    std::to_string(n));
      if (used[c - 1]) throw std::invalid_argument("corner " + std::to_string(c) + " repeated");
      used[c - 1] = true;
      images[c - 1] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_order(p, q, "compose");
  std::vector<Corner> r(p.order());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = q.images_[p.images_[i] - 1];
  return Permutation(std::move(r), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<Corner> r(p.order());
  for (std::size_t i = 0; i < r.size(); ++i) r[p.images_[i] - 1] = static_cast<Corner>(i + 1);
  return Permutation(std::move(r), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& p, const Permutation& q) {
  require_same_order(p, q, "conjugate");
  // (c^Q)^(P^Q) = (c^P)^Q
  std::vector<Corner> r(p.order());
  for (std::size_t i = 0; i < r.size(); ++i) r[q.images_[i] - 1] = q.images_[p.images_[i] - 1];
  return Permutation(std::move(r), Permutation::Unchecked{});
}

Permutation transposition(Corner a, Corner b, std::size_t n) {
  if (a == b) throw std::invalid_argument("transposition needs two distinct corners");
  return Permutation::from_cycles(CycleForm{{{a, b}}}, n);
}

CycleForm cycles(const Permutation& p) {
  CycleForm form;
  std::vector<bool> seen(p.order(), false);
  for (Corner start = 1; start <= p.order(); ++start) {
    if (seen[start - 1]) continue;
    Cycle cycle;
    for (Corner c = start; !seen[c - 1]; c = p(c)) {
      seen[c - 1] = true;
      cycle.push_back(c);
    }
    form.cycles.push_back(std::move(cycle));
  }
  return form;
}

std::size_t cycle_count(const Permutation& p) {
  std::size_t count = 0;
  std::vector<bool> seen(p.order(), false);
  for (Corner start = 1; start <= p.order(); ++start) {
    if (seen[start - 1]) continue;
    ++count;
    for (Corner c = start; !seen[c - 1]; c = p(c)) seen[c - 1] = true;
  }
  return count;
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
  std::vector<std::size_t> lengths;
  for (const Cycle& c : cycles(p).cycles) lengths.push_back(c.size());
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

bool is_involution(const Permutation& p) {
  for (Corner c = 1; c <= p.order(); ++c)
    if (p(p(c)) != c) return false;
  return true;
}

bool is_matching(const Permutation& p) {
  if (p.order() % 2 != 0) return false;
  for (Corner c = 1; c <= p.order(); ++c)
    if (p(c) == c || p(p(c)) != c) return false;
  return true;
}

std::string to_string(const Permutation& p) {
  std::string out;
  for (const Cycle& cycle : cycles(p).cycles) {
    if (cycle.size() == 1) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_cycles(std::string_view text, std::size_t n) {
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> void {
    throw std::invalid_argument("cycle notation at offset " + std::to_string(pos) + ": " + why);
  };
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> Corner {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a corner number");
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (value > n) fail("corner out of range 1.." + std::to_string(n));
      ++pos;
    }
    if (value == 0) fail("corner 0 out of range 1.." + std::to_string(n));
    return static_cast<Corner>(value);
  };

  CycleForm form;
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    skip_space();
    Cycle cycle;
    if (pos < text.size() && text[pos] == ')') {
      // "()" is accepted as an empty cycle
      ++pos;
      skip_space();
      continue;
    }
    cycle.push_back(read_int());
    for (;;) {
      bool had_sep = false;
      if (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
        skip_space();
        had_sep = true;
      }
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_space();
        had_sep = true;
      }
      if (pos < text.size() && text[pos] == ')') break;
      if (pos >= text.size()) fail("unterminated cycle");
      if (!had_sep) fail("expected separator");
      cycle.push_back(read_int());
    }
    ++pos;
    form.cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(form, n);
}

std::vector<Transposition> cycle_to_transpositions(std::span<const Corner> cycle) {
  std::vector<Transposition> out;
  for (std::size_t k = cycle.size(); k >= 2; --k) out.emplace_back(cycle[k - 1], cycle[k - 2]);
  return out;
}

Permutation compose_transpositions(std::span<const Transposition> ts, std::size_t n) {
  Permutation result(n);
  for (const auto& [a, b] : ts) result = compose(result, transposition(a, b, n));
  return result;
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Corner> images(n);
  std::iota(images.begin(), images.end(), Corner{1});
  // Fisher-Yates on raw engine output so results do not depend on the
  // standard library's distribution implementation.
  for (std::size_t i = n; i > 1; --i) std::swap(images[i - 1], images[rng() % i]);
  return Permutation::from_images(std::move(images));
}

Permutation random_matching(std::size_t n, std::mt19937_64& rng) {
  if (n % 2 != 0) throw std::invalid_argument("matching needs an even order");
  Permutation shuffled = random_permutation(n, rng);
  std::vector<Corner> images(n);
  for (std::size_t i = 0; i < n; i += 2) {
    Corner a = shuffled.images()[i];
    Corner b = shuffled.images()[i + 1];
    images[a - 1] = b;
    images[b - 1] = a;
  }
  return Permutation::from_images(std::move(images));
}

}  // namespace rotmaps
