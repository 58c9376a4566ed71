#pragma once

// Generators for small finite ordered metric spaces and self-maps, used by
// the property suites. Everything is driven by an explicit seed.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "jungck/mapping.hpp"
#include "jungck/spaces.hpp"

namespace jungck::testing {

using Rng = std::mt19937_64;

/// Random partial order on n points: a random DAG over a random
/// permutation, closed transitively. Returns the strict pairs.
inline std::vector<FiniteSpace::OrderPair> random_order(Rng& rng, std::size_t n, double edge_p = 0.4) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::bernoulli_distribution edge(edge_p);
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge(rng)) rel[perm[i]][perm[j]] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rel[i][k] && rel[k][j]) rel[i][j] = 1;
    std::vector<FiniteSpace::OrderPair> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (rel[i][j]) out.emplace_back(i, j);
    return out;
}

inline std::vector<std::string> labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
    return out;
}

/// Distinct integer positions on the line (so the metric is |a - b|) with a
/// random partial order.
inline OrderedMetricSpace random_finite_space(Rng& rng, std::size_t n) {
    std::vector<double> values(n);
    std::vector<int> pool(4 * n + 4);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    for (std::size_t i = 0; i < n; ++i) values[i] = pool[i];
    return FiniteSpace::on_line(labels(n), values, random_order(rng, n));
}

inline SelfMap random_table(Rng& rng, std::size_t n) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    SelfMap::Table t(n);
    for (auto& v : t) v = pick(rng);
    return SelfMap::table(std::move(t));
}

/// Map that sends every point to one of few targets, which makes contraction
/// inequalities hold often enough for the property suites to see verified
/// certificates.
inline SelfMap collapsing_table(Rng& rng, std::size_t n) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    const std::size_t a = pick(rng);
    const std::size_t b = pick(rng);
    std::bernoulli_distribution coin(0.8);
    SelfMap::Table t(n);
    for (auto& v : t) v = coin(rng) ? a : b;
    return SelfMap::table(std::move(t));
}

inline MappingPair random_pair(Rng& rng, std::size_t n) {
    MappingPair pair;
    std::bernoulli_distribution coin(0.5);
    pair.T = coin(rng) ? collapsing_table(rng, n) : random_table(rng, n);
    if (coin(rng)) {
        pair.S = SelfMap::identity();
    } else if (coin(rng)) {
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        pair.S = SelfMap::table(std::move(perm));
    } else {
        pair.S = random_table(rng, n);
    }
    return pair;
}

/// Every reflexive, antisymmetric, transitive relation on n points (n <= 4).
inline std::vector<std::vector<FiniteSpace::OrderPair>> all_partial_orders(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) slots.emplace_back(i, j);
    std::vector<std::vector<FiniteSpace::OrderPair>> out;
    const std::size_t total = std::size_t{1} << slots.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
        std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
        for (std::size_t i = 0; i < n; ++i) rel[i][i] = 1;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (mask >> s & 1) rel[slots[s].first][slots[s].second] = 1;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                if (i != j && rel[i][j] && rel[j][i]) ok = false;
                for (std::size_t k = 0; k < n && ok; ++k)
                    if (rel[i][j] && rel[j][k] && !rel[i][k]) ok = false;
            }
        if (!ok) continue;
        std::vector<FiniteSpace::OrderPair> pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j && rel[i][j]) pairs.emplace_back(i, j);
        out.push_back(std::move(pairs));
    }
    return out;
}

}  // namespace jungck::testing
