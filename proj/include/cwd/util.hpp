#ifndef CWD_UTIL_HPP
#define CWD_UTIL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cwd {

// Fixed-seed PRNG (splitmix64). Identical streams across platforms; the
// reproducibility contract of the generator and CLI depends on this, so we
// do not go through <random> distributions.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound)
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("next_below(0)");
        // Lemire's multiply-shift rejection method.
        std::uint64_t x = next_u64();
        unsigned __int128 m = (unsigned __int128)x * bound;
        std::uint64_t lo = (std::uint64_t)m;
        if (lo < bound) {
            std::uint64_t t = -bound % bound;
            while (lo < t) {
                x = next_u64();
                m = (unsigned __int128)x * bound;
                lo = (std::uint64_t)m;
            }
        }
        return (std::uint64_t)(m >> 64);
    }

    int next_int(int lo, int hi) {  // inclusive range
        return lo + (int)next_below((std::uint64_t)(hi - lo + 1));
    }

    bool next_bool(double p) {  // true with probability ~p
        return (double)next_u64() / 18446744073709551616.0 < p;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = (std::size_t)next_below(i);
            std::swap(v[i - 1], v[j]);
        }
    }
};

// Dynamic bitset sized at construction; adjacency rows and candidate sets in
// the detectors are these.
struct Bitset {
    std::vector<std::uint64_t> w;
    int nbits = 0;

    Bitset() = default;
    explicit Bitset(int n) : w((n + 63) / 64, 0), nbits(n) {}

    void set(int i) { w[i >> 6] |= 1ULL << (i & 63); }
    void reset(int i) { w[i >> 6] &= ~(1ULL << (i & 63)); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1ULL; }

    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }

    bool any() const {
        for (auto x : w)
            if (x) return true;
        return false;
    }

    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }

    int count_and(const Bitset& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w.size(); ++i) c += __builtin_popcountll(w[i] & o.w[i]);
        return c;
    }

    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= o.w[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
        return *this;
    }
    Bitset& and_not(const Bitset& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
        return *this;
    }

    int first() const {  // -1 if empty
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i]) return (int)(i * 64 + __builtin_ctzll(w[i]));
        return -1;
    }

    int next_after(int i) const {  // first bit > i, -1 if none
        ++i;
        if (i >= nbits) return -1;
        std::size_t k = (std::size_t)(i >> 6);
        std::uint64_t cur = w[k] & (~0ULL << (i & 63));
        while (true) {
            if (cur) return (int)(k * 64 + __builtin_ctzll(cur));
            if (++k >= w.size()) return -1;
            cur = w[k];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int v = first(); v != -1; v = next_after(v)) f(v);
    }

    bool operator==(const Bitset& o) const { return nbits == o.nbits && w == o.w; }
};

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace cwd

#endif
