#include "fujimoto/minor_scan.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <random>
#include <set>
#include <thread>

#include "fujimoto/combinations.hpp"
#include "fujimoto/combinatorics.hpp"
#include "fujimoto/parallel.hpp"

namespace fujimoto {

std::vector<int> unrank_combination(std::uint64_t rank, int n, int k) {
    std::vector<int> c;
    c.reserve(static_cast<std::size_t>(k));
    int x = 0;
    for (int i = 0; i < k; ++i) {
        // Skip blocks of subsets whose i-th element is x.
        while (true) {
            const std::uint64_t block = binomial_u64(static_cast<unsigned>(n - x - 1),
                                                     static_cast<unsigned>(k - i - 1));
            if (rank < block) {
                break;
            }
            rank -= block;
            ++x;
        }
        c.push_back(x++);
    }
    return c;
}

std::uint64_t rank_combination(const std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    std::uint64_t rank = 0;
    int x = 0;
    for (int i = 0; i < k; ++i) {
        for (; x < c[i]; ++x) {
            rank += binomial_u64(static_cast<unsigned>(n - x - 1), static_cast<unsigned>(k - i - 1));
        }
        ++x;
    }
    return rank;
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("FUJIMOTO_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::string mode_name(const ScanMode& mode) { return mode.is_sampled() ? "sampled" : "exhaustive"; }

namespace {

/// Integer lift of the scanned matrix: row r is scaled by the lcm of its
/// denominators, so det(rows S) = det_int(S) / prod_{r in S} scale[r].
class SubsetEvaluator {
public:
    explicit SubsetEvaluator(const ExactMatrix& m) : n_(m.cols()), scales_(m.rows()) {
        big_.resize(m.rows() * n_);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            scales_[r] = detail::row_denominator_lcm(m.row(r));
            if (scales_[r] != 1) {
                integral_ = false;
            }
            for (std::size_t c = 0; c < n_; ++c) {
                const auto& q = m(r, c).raw();
                BigInt v = q.get_num() * (scales_[r] / q.get_den());
                if (!v.fits_slong_p()) {
                    small_ok_ = false;
                }
                big_[r * n_ + c] = std::move(v);
            }
        }
        if (small_ok_) {
            small_.resize(big_.size());
            std::transform(big_.begin(), big_.end(), small_.begin(),
                           [](const BigInt& v) { return v.get_si(); });
        }
    }

    bool integral() const { return integral_; }

    BigInt scale(const std::vector<int>& rows) const {
        BigInt s = 1;
        for (int r : rows) {
            if (scales_[r] != 1) {
                s *= scales_[r];
            }
        }
        return s;
    }

    /// Integer determinant of the lifted rows. Rows with a single nonzero in
    /// the remaining columns are expanded first (Laplace along that row).
    BigInt det_int(const std::vector<int>& rows) const {
        const std::size_t n = n_;
        auto& row_alive = buf_.row_alive;
        auto& col_alive = buf_.col_alive;
        auto& nnz = buf_.nnz;
        row_alive.assign(n, 1);
        col_alive.assign(n, 1);
        nnz.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t c = 0; c < n; ++c) {
                if (!is_zero(rows[i], c)) {
                    ++nnz[i];
                }
            }
            if (nnz[i] == 0) {
                return 0;
            }
        }

        int sign = 1;
        BigInt factor = 1;
        std::size_t alive = n;
        bool progress = true;
        while (progress && alive > 1) {
            progress = false;
            for (std::size_t i = 0; i < n && alive > 1; ++i) {
                if (!row_alive[i] || nnz[i] != 1) {
                    continue;
                }
                std::size_t col = 0;
                std::size_t col_pos = 0;
                std::size_t pos = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (!col_alive[c]) {
                        continue;
                    }
                    if (!is_zero(rows[i], c)) {
                        col = c;
                        col_pos = pos;
                    }
                    ++pos;
                }
                std::size_t row_pos = 0;
                for (std::size_t r = 0; r < i; ++r) {
                    row_pos += row_alive[r];
                }
                if ((row_pos + col_pos) % 2 == 1) {
                    sign = -sign;
                }
                const BigInt& pivot = big_[static_cast<std::size_t>(rows[i]) * n + col];
                if (pivot == -1) {
                    sign = -sign;
                } else if (pivot != 1) {
                    factor *= pivot;
                }
                row_alive[i] = 0;
                col_alive[col] = 0;
                --alive;
                for (std::size_t r = 0; r < n; ++r) {
                    if (row_alive[r] && !is_zero(rows[r], col)) {
                        if (--nnz[r] == 0) {
                            return 0;
                        }
                    }
                }
                progress = true;
            }
        }

        std::vector<std::size_t> rr, cc;
        for (std::size_t i = 0; i < n; ++i) {
            if (row_alive[i]) rr.push_back(static_cast<std::size_t>(rows[i]));
            if (col_alive[i]) cc.push_back(i);
        }
        const std::size_t k = rr.size();
        BigInt core;
        bool done = false;
        if (small_ok_) {
            auto& a = buf_.small;
            a.resize(k * k);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) {
                    a[i * k + j] = small_[rr[i] * n + cc[j]];
                }
            }
            if (auto d = detail::bareiss_int128(a, k)) {
                core = detail::to_bigint(*d);
                done = true;
            }
        }
        if (!done) {
            std::vector<BigInt> a(k * k);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t j = 0; j < k; ++j) {
                    a[i * k + j] = big_[rr[i] * n + cc[j]];
                }
            }
            core = detail::bareiss_bigint(std::move(a), k);
        }
        core *= factor;
        return sign < 0 ? BigInt(-core) : core;
    }

private:
    bool is_zero(int row, std::size_t col) const {
        const std::size_t idx = static_cast<std::size_t>(row) * n_ + col;
        return small_ok_ ? small_[idx] == 0 : big_[idx] == 0;
    }

    struct Buffers {
        std::vector<char> row_alive, col_alive;
        std::vector<std::size_t> nnz;
        std::vector<std::int64_t> small;
    };

    std::size_t n_;
    std::vector<BigInt> scales_;
    std::vector<BigInt> big_;
    std::vector<std::int64_t> small_;
    bool small_ok_ = true;
    bool integral_ = true;
    static thread_local Buffers buf_;
};

thread_local SubsetEvaluator::Buffers SubsetEvaluator::buf_;

struct ChunkResult {
    std::vector<ScanFailure> failures;
    std::optional<Rational> min_abs;
    std::uint64_t checked = 0;
};

class ChunkAccumulator {
public:
    ChunkAccumulator(const SubsetEvaluator& ev, ChunkResult& out) : ev_(ev), out_(out) {}

    void visit(const std::vector<int>& rows) {
        BigInt d = ev_.det_int(rows);
        ++out_.checked;
        if (d == 0) {
            std::vector<int> one_based(rows.begin(), rows.end());
            for (int& r : one_based) ++r;
            out_.failures.push_back({std::move(one_based), Rational(0)});
            return;
        }
        if (ev_.integral()) {
            d = abs(d);
            if (!min_int_ || d < *min_int_) {
                min_int_ = std::move(d);
            }
            return;
        }
        Rational v = abs(Rational(d, ev_.scale(rows)));
        if (!out_.min_abs || v < *out_.min_abs) {
            out_.min_abs = std::move(v);
        }
    }

    void finish() {
        if (min_int_) {
            out_.min_abs = Rational(*min_int_);
        }
    }

private:
    const SubsetEvaluator& ev_;
    ChunkResult& out_;
    std::optional<BigInt> min_int_;
};

} // namespace

std::vector<std::vector<int>> sample_subsets(int n, int k, std::uint64_t seed, std::uint64_t count) {
    std::mt19937_64 rng(seed);
    std::set<std::vector<int>> seen;
    // Floyd's algorithm: one uniform k-subset per draw.
    auto draw = [&] {
        std::set<int> s;
        for (int j = n - k; j < n; ++j) {
            std::uniform_int_distribution<int> pick(0, j);
            const int v = pick(rng);
            if (!s.insert(v).second) {
                s.insert(j);
            }
        }
        return std::vector<int>(s.begin(), s.end());
    };
    while (seen.size() < count) {
        seen.insert(draw());
    }
    return {seen.begin(), seen.end()};
}

GeneralPositionReport maximal_minor_scan(const ExactMatrix& m, const ScanMode& mode,
                                         const ScanOptions& options) {
    if (m.rows() < m.cols() || m.cols() == 0) {
        throw PreconditionError("maximal_minor_scan needs rows >= cols >= 1");
    }
    const auto start = std::chrono::steady_clock::now();
    const int n = static_cast<int>(m.rows());
    const int k = static_cast<int>(m.cols());
    const unsigned threads = options.threads ? options.threads : default_thread_count();

    GeneralPositionReport report;
    report.mode = mode;
    report.total_subsets = binomial(n, k);

    const SubsetEvaluator evaluator(m);
    std::vector<ChunkResult> results;

    const bool sample = mode.is_sampled() && report.total_subsets > BigInt(static_cast<unsigned long>(mode.count));
    if (sample) {
        const auto subsets = sample_subsets(n, k, mode.seed, mode.count);
        const std::size_t chunk = 4096;
        const std::size_t chunks = (subsets.size() + chunk - 1) / chunk;
        results.resize(chunks);
        parallel_for(chunks, threads, [&](std::size_t c) {
            ChunkAccumulator acc(evaluator, results[c]);
            const std::size_t end = std::min(subsets.size(), (c + 1) * chunk);
            for (std::size_t i = c * chunk; i < end; ++i) {
                acc.visit(subsets[i]);
            }
            acc.finish();
        });
    } else {
        if (!report.total_subsets.fits_ulong_p()) {
            throw BudgetError("exhaustive scan over " + report.total_subsets.get_str() + " subsets");
        }
        const std::uint64_t total = report.total_subsets.get_ui();
        const std::uint64_t chunk = std::max<std::uint64_t>(1024, total / (64ULL * threads) + 1);
        const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
        results.resize(chunks);
        parallel_for(chunks, threads, [&](std::size_t c) {
            ChunkAccumulator acc(evaluator, results[c]);
            const std::uint64_t begin = c * chunk;
            const std::uint64_t end = std::min(total, begin + chunk);
            std::vector<int> rows = unrank_combination(begin, n, k);
            for (std::uint64_t r = begin; r < end; ++r) {
                acc.visit(rows);
                next_combination(rows, n);
            }
            acc.finish();
        });
    }

    for (auto& r : results) {
        report.checked_subsets += r.checked;
        for (auto& f : r.failures) {
            report.failures.push_back(std::move(f));
        }
        if (r.min_abs && (!report.min_abs_nonzero_det || *r.min_abs < *report.min_abs_nonzero_det)) {
            report.min_abs_nonzero_det = r.min_abs;
        }
    }
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::json to_json(const GeneralPositionReport& report) {
    nlohmann::json j;
    if (report.total_subsets.fits_ulong_p()) {
        j["total_subsets"] = report.total_subsets.get_ui();
    } else {
        j["total_subsets"] = report.total_subsets.get_str();
    }
    j["checked_subsets"] = report.checked_subsets;
    j["mode"] = mode_name(report.mode);
    if (report.mode.is_sampled()) {
        j["seed"] = report.mode.seed;
        j["sample_count"] = report.mode.count;
    }
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& f : report.failures) {
        failures.push_back({{"rows", f.rows}, {"det", f.det.to_string()}});
    }
    j["failures"] = std::move(failures);
    j["min_abs_nonzero_det"] =
        report.min_abs_nonzero_det ? nlohmann::json(report.min_abs_nonzero_det->to_string()) : nlohmann::json();
    j["elapsed_ms"] = report.elapsed_ms;
    return j;
}

} // namespace fujimoto
