#include "demigod/coords.hpp"

#include <array>

namespace demigod::coord {
namespace {

constexpr int choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool is_slice_edge(std::uint8_t e) { return e >= FR; }

}  // namespace

int perm_rank(const std::uint8_t* p, int n) {
  int r = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j) smaller += p[j] < p[i];
    r = r * (n - i) + smaller;
  }
  return r;
}

void perm_unrank(int rank, std::uint8_t* p, int n) {
  std::array<int, 12> digit{};
  for (int i = n - 1; i >= 0; --i) {
    digit[i] = rank % (n - i);
    rank /= n - i;
  }
  std::array<std::uint8_t, 12> pool{};
  for (int i = 0; i < n; ++i) pool[i] = static_cast<std::uint8_t>(i);
  int left = n;
  for (int i = 0; i < n; ++i) {
    p[i] = pool[digit[i]];
    for (int j = digit[i]; j + 1 < left; ++j) pool[j] = pool[j + 1];
    --left;
  }
}

int twist(const CubieState& c) {
  int r = 0;
  for (int i = 0; i < kCornerCount - 1; ++i) r = 3 * r + c.corner_ori[i];
  return r;
}

void set_twist(CubieState& c, int twist) {
  int sum = 0;
  for (int i = kCornerCount - 2; i >= 0; --i) {
    c.corner_ori[i] = static_cast<std::uint8_t>(twist % 3);
    sum += twist % 3;
    twist /= 3;
  }
  c.corner_ori[kCornerCount - 1] = static_cast<std::uint8_t>((3 - sum % 3) % 3);
}

int flip(const CubieState& c) {
  int r = 0;
  for (int i = 0; i < kEdgeCount - 1; ++i) r = 2 * r + c.edge_ori[i];
  return r;
}

void set_flip(CubieState& c, int flip) {
  int sum = 0;
  for (int i = kEdgeCount - 2; i >= 0; --i) {
    c.edge_ori[i] = static_cast<std::uint8_t>(flip & 1);
    sum += flip & 1;
    flip >>= 1;
  }
  c.edge_ori[kEdgeCount - 1] = static_cast<std::uint8_t>(sum & 1);
}

int slice_sorted(const CubieState& c) {
  int a = 0, x = 0;
  std::array<std::uint8_t, 4> order{};
  for (int j = kEdgeCount - 1; j >= 0; --j) {
    if (is_slice_edge(c.edge_perm[j])) {
      a += choose(11 - j, x + 1);
      order[3 - x] = static_cast<std::uint8_t>(c.edge_perm[j] - FR);
      ++x;
    }
  }
  return 24 * a + perm_rank(order.data(), 4);
}

void set_slice_sorted(CubieState& c, int idx) {
  int a = idx / 24;
  std::array<std::uint8_t, 4> order{};
  perm_unrank(idx % 24, order.data(), 4);
  std::array<bool, kEdgeCount> is_slice{};
  for (int j = 0, x = 4; j < kEdgeCount; ++j) {
    if (x > 0 && a - choose(11 - j, x) >= 0) {
      a -= choose(11 - j, x);
      is_slice[j] = true;
      --x;
    }
  }
  for (int j = 0, k = 0, other = 0; j < kEdgeCount; ++j) {
    c.edge_perm[j] = static_cast<std::uint8_t>(is_slice[j] ? FR + order[k++] : other++);
  }
}

int corners(const CubieState& c) { return perm_rank(c.corner_perm.data(), kCornerCount); }

void set_corners(CubieState& c, int idx) { perm_unrank(idx, c.corner_perm.data(), kCornerCount); }

int ud_edges(const CubieState& c) { return perm_rank(c.edge_perm.data(), 8); }

void set_ud_edges(CubieState& c, int idx) {
  perm_unrank(idx, c.edge_perm.data(), 8);
  for (int i = 8; i < kEdgeCount; ++i) c.edge_perm[i] = static_cast<std::uint8_t>(i);
}

}  // namespace demigod::coord
