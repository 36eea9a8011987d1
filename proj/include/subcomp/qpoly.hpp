#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>

#include "subcomp/graph.hpp"
#include "subcomp/poly.hpp"

namespace subcomp {

// Q(G;x,y) = sum over vertex subsets X of x^|X| y^{k(G[X])}: x tracks the
// subset size, y the number of components of the induced subgraph.

enum class q_method { definition, recurrence };
enum class pivot_rule { max_degree, min_label };

struct q_stats {
    std::uint64_t subsets = 0; // definition: subsets enumerated
    std::uint64_t memo_hits = 0;
    std::uint64_t memo_misses = 0;
    int max_depth = 0;
};

struct q_result {
    bipoly poly;
    q_method method = q_method::definition;
    q_stats stats;
};

// Memoization table keyed by exact canonical form. Any two inserts under the
// same key carry equal values, so replacement semantics never matter.
class memo_table {
  public:
    static constexpr std::size_t default_capacity = std::size_t{1} << 22;

    explicit memo_table(std::size_t capacity = default_capacity) : capacity_(capacity) {}

    const bipoly* find(const std::string& key) const {
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : &it->second;
    }

    void insert(const std::string& key, bipoly value) {
        if (map_.size() >= capacity_)
            throw resource_limit_error("memo capacity " + std::to_string(capacity_) + " exhausted");
        map_.emplace(key, std::move(value));
    }

    std::size_t size() const { return map_.size(); }
    std::size_t capacity() const { return capacity_; }

  private:
    std::unordered_map<std::string, bipoly> map_;
    std::size_t capacity_;
};

constexpr int default_subset_order_bound = 24;

// Q by the defining sum over all 2^n vertex subsets.
q_result q_by_definition(const graph& g, int order_bound = default_subset_order_bound);

// Q by the vertex elimination recurrence
//     Q(G) = Q(G-v) + x(y-1) Q(G-N[v]) + x Q(G/v)
// with disjoint-union factorization at every node, a closed form for complete
// graphs, and memoization under canonical keys.
q_result q_by_recurrence(const graph& g, memo_table& memo,
                         pivot_rule rule = pivot_rule::max_degree);

// Closed form Q(K_n) = 1 + sum_i C(n,i) x^i y.
bipoly q_complete(int n);

// Definition for order <= 15, recurrence with a fresh memo above.
bipoly q_auto(const graph& g);

bool q_equivalent(const graph& a, const graph& b);

} // namespace subcomp
