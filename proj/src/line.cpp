#include "mstsp/line.hpp"

#include <stdexcept>
#include <string>

namespace mstsp {

LineOrder line_odd(int n) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("line_odd needs odd n >= 3, got " + std::to_string(n));
  }
  const int k = n / 2;
  LineOrder line{n, {}};
  line.order.reserve(n);
  for (int a = 1; a <= k; ++a) {
    line.order.push_back(a);
    line.order.push_back(k + 1 + a);
  }
  line.order.push_back(k + 1);
  return line;
}

LineOrder line_even(int n) {
  if (n < 4 || n % 2 != 0) {
    throw std::invalid_argument("line_even needs even n >= 4, got " + std::to_string(n));
  }
  const int k = n / 2;
  LineOrder line{n, {}};
  line.order.reserve(n);
  if (k % 2 == 0) {
    // 1, k+2, 3, k+4, ..., k-1, n | k, n-1, ..., k+3, 2 | k+1
    for (int a = 1; a <= k - 1; a += 2) {
      line.order.push_back(a);
      line.order.push_back(a + k + 1);
    }
    for (int low = k, high = n - 1; low >= 2; low -= 2, high -= 2) {
      line.order.push_back(low);
      if (high >= k + 3) line.order.push_back(high);
    }
    line.order.push_back(k + 1);
  } else {
    // 1, k+2, 3, k+4, ..., n-1 | k, n | k-1, n-2, ..., k+3, 2 | k+1
    for (int a = 1; a <= k - 2; a += 2) {
      line.order.push_back(a);
      line.order.push_back(a + k + 1);
    }
    line.order.push_back(k);
    line.order.push_back(n);
    for (int low = k - 1, high = n - 2; low >= 2; low -= 2, high -= 2) {
      line.order.push_back(low);
      if (high >= k + 3) line.order.push_back(high);
    }
    line.order.push_back(k + 1);
  }
  return line;
}

LineOrder line_order(int n) {
  return n % 2 == 0 ? line_even(n) : line_odd(n);
}

int line_next(int n, int j) {
  if (n < 3) {
    throw std::invalid_argument("line_next needs n >= 3, got " + std::to_string(n));
  }
  if (j < 1 || j > n) {
    throw std::invalid_argument("column " + std::to_string(j) + " out of range 1.." +
                                std::to_string(n));
  }
  const int k = n / 2;
  if (n % 2 != 0) {
    return j <= k ? j + k + 1 : j - k;
  }
  if (k % 2 == 0) {
    if (j == k + 1 || j == n) return j - k;
    if (j <= k) return j % 2 != 0 ? j + k + 1 : j + k - 1;
    return j % 2 != 0 ? j - (k + 1) : j - (k - 1);
  }
  if (j == k) return j + k;
  if (j == k + 1) return j - k;
  if (j < k) return j % 2 != 0 ? j + k + 1 : j + k - 1;
  return j % 2 == 0 ? j - (k + 1) : j - (k - 1);
}

}  // namespace mstsp
