#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace bookdraw {

/// SplitMix64 finalizer. Used to seed Rng and to derive child seeds.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Mixes a master seed with a path of integers into an independent seed.
/// The result depends on every component and on their order.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> path) noexcept;

/**
 * @brief xoshiro256** generator, seeded through SplitMix64.
 *
 * All random decisions in the library go through this class. The bounded
 * integer and real draws are implemented here rather than with <random>
 * distributions so that streams are identical across standard libraries.
 */
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }

    result_type operator()() noexcept { return next(); }
    std::uint64_t next() noexcept;

    /// Uniform integer in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) noexcept;

    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() noexcept;

    bool bernoulli(double p) noexcept { return uniform01() < p; }

    /// Independent child stream; advances this generator by one draw.
    Rng split() noexcept;

    template <typename T>
    void shuffle(std::span<T> items) noexcept {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

    template <typename T>
    void shuffle(std::vector<T>& items) noexcept {
        shuffle(std::span<T>(items));
    }

private:
    std::uint64_t s_[4];
};

/// Random permutation of 0..n-1.
std::vector<int> random_permutation(int n, Rng& rng);

/**
 * Picks uniformly among the candidates that tie for the best key.
 *
 * Feed candidates one at a time; `offer` returns true when the candidate
 * becomes the current pick. Reservoir sampling over the tied set keeps the
 * choice uniform without materializing it.
 */
template <typename Key>
class TieBreaker {
public:
    explicit TieBreaker(Rng& rng) : rng_(rng) {}

    /// `better(a, b)` is true when key a is strictly preferred over b.
    template <typename Better>
    bool offer(const Key& key, Better better) {
        if (count_ == 0 || better(key, best_)) {
            best_ = key;
            count_ = 1;
            return true;
        }
        if (better(best_, key)) return false;
        ++count_;
        return rng_.below(count_) == 0;
    }

    bool empty() const noexcept { return count_ == 0; }
    const Key& best() const noexcept { return best_; }

private:
    Rng& rng_;
    Key best_{};
    std::uint64_t count_ = 0;
};

}  // namespace bookdraw
