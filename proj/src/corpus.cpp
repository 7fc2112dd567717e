#include "sgh/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace sgh {

namespace {

using Pair = SignedGraph::Pair;
using Key = std::tuple<std::vector<Pair>, std::vector<Pair>, std::vector<int>>;

Key canonical_key(int n, const std::set<Pair>& pos, const std::set<Pair>& neg,
                  const std::set<int>& half) {
    std::vector<int> sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 1);
    std::optional<Key> best;
    do {
        const auto image = [&](int v) { return sigma[static_cast<std::size_t>(v) - 1]; };
        std::vector<Pair> p2, n2;
        std::vector<int> h2;
        for (const auto& [a, b] : pos)
            p2.emplace_back(std::min(image(a), image(b)), std::max(image(a), image(b)));
        for (const auto& [a, b] : neg)
            n2.emplace_back(std::min(image(a), image(b)), std::max(image(a), image(b)));
        for (int v : half) h2.push_back(image(v));
        std::sort(p2.begin(), p2.end());
        std::sort(n2.begin(), n2.end());
        std::sort(h2.begin(), h2.end());
        Key key{std::move(p2), std::move(n2), std::move(h2)};
        if (!best || key < *best) best = std::move(key);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return *best;
}

}  // namespace

std::vector<SignedGraph> exhaustive_corpus(int n) {
    if (n < 1 || n > 4)
        throw std::invalid_argument("exhaustive_corpus: n must be between 1 and 4");
    std::vector<Pair> pairlist;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) pairlist.emplace_back(i, j);

    std::set<Key> seen;
    std::vector<SignedGraph> out;
    // odometer over the per-pair states: 0 absent, 1 positive, 2 negative, 3 both
    std::vector<int> state(pairlist.size(), 0);
    const int half_limit = 1 << n;
    while (true) {
        for (int mask = 0; mask < half_limit; ++mask) {
            std::set<Pair> pos, neg;
            std::set<int> half;
            for (std::size_t t = 0; t < pairlist.size(); ++t) {
                if (state[t] & 1) pos.insert(pairlist[t]);
                if (state[t] & 2) neg.insert(pairlist[t]);
            }
            for (int v = 1; v <= n; ++v)
                if ((mask >> (v - 1)) & 1) half.insert(v);
            if (pos.empty() && neg.empty() && half.empty()) continue;
            Key key = canonical_key(n, pos, neg, half);
            if (seen.contains(key)) continue;
            const auto& [kp, kn, kh] = key;
            out.emplace_back(n, std::set<Pair>(kp.begin(), kp.end()),
                             std::set<Pair>(kn.begin(), kn.end()),
                             std::set<int>(kh.begin(), kh.end()));
            seen.insert(std::move(key));
        }
        std::size_t k = 0;
        while (k < state.size() && state[k] == 3) state[k++] = 0;
        if (k == state.size()) break;
        ++state[k];
    }
    return out;
}

std::uint64_t Lcg::next_u64() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_;
}

double Lcg::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::vector<SignedGraph> random_corpus(int n, int count, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_corpus: n must be positive");
    if (count < 0) throw std::invalid_argument("random_corpus: count must be nonnegative");
    Lcg rng(seed);
    std::vector<SignedGraph> out;
    out.reserve(static_cast<std::size_t>(count));
    while (out.size() < static_cast<std::size_t>(count)) {
        std::set<Pair> pos, neg;
        std::set<int> half;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                const double r = rng.next_unit();
                if (r < 0.3)
                    pos.emplace(i, j);
                else if (r < 0.6)
                    neg.emplace(i, j);
            }
        for (int v = 1; v <= n; ++v)
            if (rng.next_unit() < 0.35) half.insert(v);
        if (pos.empty() && neg.empty() && half.empty()) continue;
        out.emplace_back(n, std::move(pos), std::move(neg), std::move(half));
    }
    return out;
}

}  // namespace sgh
