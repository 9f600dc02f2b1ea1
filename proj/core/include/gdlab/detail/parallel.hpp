#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <thread>
#include <vector>

namespace gdlab::detail {

/// Number of chunks a range is cut into. Fixed so that results (including
/// floating-point sums) do not depend on how many threads ran them.
inline constexpr int kReduceChunks = 64;

/// Splits [lo, hi] into kReduceChunks contiguous pieces, evaluates
/// body(piece_lo, piece_hi) for each, and sums the results in piece order.
template <class T, class Body>
T chunked_reduce(std::int64_t lo, std::int64_t hi, T init, Body body) {
  if (hi < lo) return init;
  const std::int64_t span = hi - lo + 1;
  const std::int64_t chunks = std::min<std::int64_t>(kReduceChunks, span);
  std::vector<std::pair<std::int64_t, std::int64_t>> pieces;
  pieces.reserve(static_cast<std::size_t>(chunks));
  for (std::int64_t k = 0; k < chunks; ++k) {
    pieces.emplace_back(lo + span * k / chunks, lo + span * (k + 1) / chunks - 1);
  }

  std::vector<T> partial(pieces.size(), T{});
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (workers == 1) {
    for (std::size_t k = 0; k < pieces.size(); ++k) partial[k] = body(pieces[k].first, pieces[k].second);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t k = w; k < pieces.size(); k += workers) {
          partial[k] = body(pieces[k].first, pieces[k].second);
        }
      }));
    }
    for (auto& j : jobs) j.get();
  }
  for (const auto& p : partial) init += p;
  return init;
}

}  // namespace gdlab::detail
