/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace orcount
{
    /**
     * Runs work(i) for every i in [0, tasks) on up to `workers` threads, tasks
     * claimed in increasing order. The first exception thrown by any task is
     * rethrown once every thread has stopped.
     */
    template <typename Work_>
    auto parallel_for(std::size_t tasks, int workers, Work_ && work) -> void
    {
        std::size_t threads = std::min<std::size_t>(std::max(workers, 1), tasks);
        if (threads <= 1) {
            for (std::size_t i = 0; i < tasks; ++i)
                work(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;

        auto body = [&] {
            while (! failed.load()) {
                std::size_t i = next.fetch_add(1);
                if (i >= tasks)
                    return;
                try {
                    work(i);
                }
                catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (! error)
                        error = std::current_exception();
                    failed = true;
                }
            }
        };

        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back(body);
        for (auto & t : pool)
            t.join();
        if (error)
            std::rethrow_exception(error);
    }
}
