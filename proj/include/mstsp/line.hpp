#pragma once

#include <vector>

namespace mstsp {

/// Cyclic visiting order for n points on a line, encoded as a permutation
/// of the column indices 1..n.
struct LineOrder {
  int n = 0;
  std::vector<int> order;
};

/// Max-min order for odd n >= 3: 1, k+2, 2, k+3, ..., n, k+1 with
/// k = (n-1)/2. Every cyclic gap is k or k+1.
LineOrder line_odd(int n);

/// Max-min order for even n >= 4 with k = n/2. Gaps alternate k-1 and
/// k+1, with k inserted at the line's endpoints and at the two center
/// points; the interleaving depends on the parity of k.
LineOrder line_even(int n);

/// Dispatches on the parity of n.
LineOrder line_order(int n);

/// Successor of column j in the cyclic order above, as a closed-form case
/// table. Agrees pointwise with consecutive pairs of line_odd/line_even.
int line_next(int n, int j);

}  // namespace mstsp
