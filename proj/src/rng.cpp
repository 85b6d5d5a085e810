#include "tl/rng.hpp"

#include "tl/hash.hpp"

#include <stdexcept>

namespace tl {

Rng make_stream(std::uint64_t seed, std::int64_t topic_id, std::string_view purpose) {
    std::uint64_t s = splitmix64(seed);
    s = splitmix64(s ^ static_cast<std::uint64_t>(topic_id));
    s = splitmix64(s ^ fnv1a64(purpose));
    return Rng(s);
}

std::uint64_t bounded_uniform(Rng& rng, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("bounded_uniform: n must be >= 1");
    if (n == 1) return 0;
    // reject the tail so the modulus is unbiased
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n + 1) % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x > limit);
    return x % n;
}

double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::size_t> sample_without_replacement(std::size_t pool, std::size_t k, Rng& rng) {
    if (k > pool) k = pool;
    std::vector<std::size_t> indices(pool);
    for (std::size_t i = 0; i < pool; ++i) indices[i] = i;
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(bounded_uniform(rng, pool - i));
        std::swap(indices[i], indices[j]);
        out.push_back(indices[i]);
    }
    return out;
}

} // namespace tl
