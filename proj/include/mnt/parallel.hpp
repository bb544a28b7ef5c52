#ifndef MNT_PARALLEL_HPP
#define MNT_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace mnt {

/// Number of slices for_each_slice uses for `count` items and `jobs` workers.
inline std::size_t slice_count(std::size_t count, int jobs) {
  return std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count));
}

/// Calls work(begin, end, slot) on contiguous slices of [0, count), one
/// thread per slice. Slices are fixed by (count, jobs), so callers that write
/// into per-slot buffers and concatenate them get a jobs-independent order.
template <typename Work>
void for_each_slice(std::size_t count, int jobs, Work work) {
  const std::size_t slices = slice_count(count, jobs);
  if (slices == 1) {
    work(std::size_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(slices);
  for (std::size_t s = 0; s < slices; ++s) {
    threads.emplace_back(work, count * s / slices, count * (s + 1) / slices, s);
  }
  for (auto& t : threads) t.join();
}

}  // namespace mnt

#endif  // MNT_PARALLEL_HPP
