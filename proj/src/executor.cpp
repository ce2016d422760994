#include "cosmoburgers/executor.hpp"

#include <algorithm>

#include <tbb/blocked_range.h>
#include <tbb/info.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

namespace cosmoburgers {

struct Executor::Arena {
  explicit Arena(int threads)
      : arena(std::min(threads, tbb::info::default_concurrency())) {}
  tbb::task_arena arena;
};

Executor::Executor(int threads) : threads_(std::max(1, threads)) {
  if (threads_ > 1) arena_ = std::make_unique<Arena>(threads_);
}

Executor::~Executor() = default;
Executor::Executor(Executor&&) noexcept = default;
Executor& Executor::operator=(Executor&&) noexcept = default;

void Executor::for_ranges(
    std::size_t n,
    const std::function<void(std::size_t, std::size_t)>& body) const {
  if (n == 0) return;
  if (!arena_) {
    body(0, n);
    return;
  }
  arena_->arena.execute([&] {
    tbb::parallel_for(tbb::blocked_range<std::size_t>(0, n),
                      [&](const tbb::blocked_range<std::size_t>& r) {
                        body(r.begin(), r.end());
                      });
  });
}

const Executor& serial_executor() {
  static const Executor executor(1);
  return executor;
}

}  // namespace cosmoburgers
