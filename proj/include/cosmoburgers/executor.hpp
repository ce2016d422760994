#pragma once

#include <cstddef>
#include <functional>
#include <memory>

namespace cosmoburgers {

/// Runs index-range loops on a fixed number of worker threads.
///
/// Work is split into ranges whose results are written to disjoint outputs,
/// so the numbers produced never depend on the thread count.
class Executor {
 public:
  explicit Executor(int threads = 1);
  ~Executor();
  Executor(Executor&&) noexcept;
  Executor& operator=(Executor&&) noexcept;

  int threads() const { return threads_; }

  /// Calls body(begin, end) over a partition of [0, n).
  void for_ranges(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& body) const;

 private:
  int threads_;
  struct Arena;
  std::unique_ptr<Arena> arena_;
};

/// Shared single-threaded executor.
const Executor& serial_executor();

}  // namespace cosmoburgers
