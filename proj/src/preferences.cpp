#include "mstcover/preferences.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace mstcover {

Preference::Preference(std::vector<int> ranks) : ranks_(std::move(ranks)) {
    for (size_t i = 0; i < ranks_.size(); ++i) {
        if (ranks_[i] < 1) {
            throw std::invalid_argument("rank of edge " + std::to_string(i) + " must be positive");
        }
    }
    // Dense renumbering: map the distinct input ranks, in order, to 1..kappa.
    std::vector<int> distinct = ranks_;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    classes_.resize(distinct.size());
    for (size_t i = 0; i < ranks_.size(); ++i) {
        auto it = std::lower_bound(distinct.begin(), distinct.end(), ranks_[i]);
        int dense = static_cast<int>(it - distinct.begin()) + 1;
        ranks_[i] = dense;
        classes_[static_cast<size_t>(dense - 1)].push_back(static_cast<EdgeId>(i));
    }
}

const std::vector<EdgeId>& Preference::equivalence_class(int j) const {
    if (j < 1 || j > class_count()) {
        throw std::invalid_argument("equivalence class index out of range");
    }
    return classes_[static_cast<size_t>(j - 1)];
}

Profile::Profile(std::vector<Preference> prefs) : prefs_(std::move(prefs)) {
    if (prefs_.empty()) {
        throw std::invalid_argument("profile needs at least one agent");
    }
    for (const Preference& p : prefs_) {
        if (p.edge_count() != prefs_.front().edge_count()) {
            throw std::invalid_argument("all agents must rank the same edge list");
        }
    }
}

WeightFunction::WeightFunction(std::vector<double> v) : values(std::move(v)) {
    for (size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i]) || values[i] < 0.0) {
            throw std::invalid_argument("weight of edge " + std::to_string(i) +
                                        " must be finite and non-negative");
        }
    }
}

bool is_consistent(const WeightFunction& w, const Preference& pref) {
    if (pref.edge_count() != w.edge_count()) {
        throw std::invalid_argument("preference and weights disagree on edge count");
    }
    // Group edges by rank; weights must be constant within a class and
    // strictly increasing from one class to the next.
    double prev_class_weight = -1.0;
    for (int j = 1; j <= pref.class_count(); ++j) {
        const std::vector<EdgeId>& cls = pref.equivalence_class(j);
        double weight = w(cls.front());
        for (EdgeId e : cls) {
            if (w(e) != weight) {
                return false;
            }
        }
        if (j > 1 && weight <= prev_class_weight) {
            return false;
        }
        prev_class_weight = weight;
    }
    return true;
}

Preference lex_aggregate(const Profile& profile) {
    int m = profile.edge_count();
    std::vector<EdgeId> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    auto vector_less = [&](EdgeId a, EdgeId b) {
        for (const Preference& p : profile.agents()) {
            if (p.rank(a) != p.rank(b)) {
                return p.rank(a) < p.rank(b);
            }
        }
        return false;
    };
    std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
        return vector_less(a, b) || (!vector_less(b, a) && a < b);
    });
    std::vector<int> ranks(static_cast<size_t>(m), 0);
    int current = 0;
    for (size_t pos = 0; pos < order.size(); ++pos) {
        if (pos == 0 || vector_less(order[pos - 1], order[pos])) {
            ++current;
        }
        ranks[static_cast<size_t>(order[pos])] = current;
    }
    return Preference(ranks);
}

Preference degrade(const Preference& pref, const EdgeSet& favored) {
    std::vector<bool> in(static_cast<size_t>(pref.edge_count()), false);
    for (EdgeId e : favored) {
        if (e < 0 || e >= pref.edge_count()) {
            throw std::invalid_argument("favored edge id out of range");
        }
        in[static_cast<size_t>(e)] = true;
    }
    // Rank 2r-1 for favored edges of class r, 2r for the rest: favored
    // edges move strictly ahead of their former peers only.
    std::vector<int> ranks(static_cast<size_t>(pref.edge_count()));
    for (int e = 0; e < pref.edge_count(); ++e) {
        ranks[static_cast<size_t>(e)] = 2 * pref.rank(e) - (in[static_cast<size_t>(e)] ? 1 : 0);
    }
    return Preference(ranks);
}

} // namespace mstcover
