#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "bchden/bch.hpp"
#include "bchden/errors.hpp"

namespace bchden {

std::string to_string(Backend backend)
{
    switch (backend) {
    case Backend::Series:
        return "series";
    case Backend::WordDp:
        return "per-word-dp";
    case Backend::Both:
        return "both";
    }
    return "unknown";
}

Backend parse_backend(const std::string& name)
{
    if (name == "series")
        return Backend::Series;
    if (name == "per-word-dp" || name == "dp")
        return Backend::WordDp;
    if (name == "both")
        return Backend::Both;
    throw std::invalid_argument("unknown backend '" + name + "'");
}

namespace {

DegreeTable scan_word_dp(std::size_t n, unsigned alphabet, const ScanOptions& options)
{
    DegreeTable table(n, alphabet);
    const std::uint64_t total = table.size();
    const unsigned workers =
        static_cast<unsigned>(std::clamp<std::uint64_t>(options.workers, 1, std::max<std::uint64_t>(total, 1)));

    std::atomic<std::uint64_t> done{0};
    std::mutex progress_mutex;
    constexpr std::uint64_t progress_step = 1024;

    // Contiguous blocks; each index is written by exactly one worker.
    auto run = [&](unsigned w) {
        WordCoefficientEvaluator evaluate(n, alphabet);
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        for (std::uint64_t i = begin; i < end; ++i) {
            table[i] = evaluate(Word::unpack(i, n, alphabet));
            const auto finished = done.fetch_add(1, std::memory_order_relaxed) + 1;
            if (options.progress && (finished % progress_step == 0 || finished == total)) {
                std::lock_guard lock(progress_mutex);
                options.progress(finished, total);
            }
        }
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
    }
    return table;
}

DegreeTable scan_series(std::size_t n, unsigned alphabet, const ScanOptions& options)
{
    auto series = bch_series(alphabet, n, options.series_budget);
    if (options.progress)
        options.progress(series.table(n).size(), series.table(n).size());
    return std::move(series.table(n));
}

} // namespace

DegreeTable degree_coefficients(std::size_t n, unsigned alphabet, const ScanOptions& options)
{
    if (n < 1)
        throw std::invalid_argument("degree_coefficients: degree must be >= 1");
    if (alphabet < 2)
        throw std::invalid_argument("degree_coefficients: alphabet size must be >= 2");
    if (n > options.max_degree)
        throw BudgetExceeded("degree " + std::to_string(n) + " exceeds the scan budget of " +
                             std::to_string(options.max_degree));

    switch (options.backend) {
    case Backend::Series:
        return scan_series(n, alphabet, options);
    case Backend::WordDp:
        return scan_word_dp(n, alphabet, options);
    case Backend::Both: {
        auto dense = scan_series(n, alphabet, options);
        auto dp = scan_word_dp(n, alphabet, options);
        for (std::uint64_t i = 0; i < dense.size(); ++i)
            if (dense[i] != dp[i])
                throw CorrectnessViolation("backend mismatch at word " +
                                           Word::unpack(i, n, alphabet).to_string(alphabet) +
                                           ": series " + dense[i].get_str() + ", dp " +
                                           dp[i].get_str());
        return dp;
    }
    }
    throw std::invalid_argument("degree_coefficients: unknown backend");
}

} // namespace bchden
