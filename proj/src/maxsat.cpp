#include "mwc/maxsat.hpp"

#include <algorithm>
#include <cassert>

namespace mwc {

bool SoftSetSystem::set_contains(std::size_t j, VertexId v) const {
    const auto& m = sets[j].members;
    return std::find(m.begin(), m.end(), v) != m.end();
}

bool SoftSetSystem::set_conflicts(std::size_t j, VertexId v) const {
    for (VertexId u : sets[j].members)
        if (g->is_adjacent(u, v)) return true;
    return false;
}

void SoftSetSystem::add_member(std::size_t j, VertexId v, Weight contrib) {
    sets[j].members.push_back(v);
    sets[j].contribs.push_back(contrib);
    assert(contrib <= sets[j].max_contrib);
}

std::size_t SoftSetSystem::add_set(VertexId v, Weight contrib) {
    sets.push_back(SoftSet{{v}, {contrib}, contrib});
    ub += contrib;
    return sets.size() - 1;
}

Weight SoftSetSystem::total_contribution(VertexId v) const {
    Weight total = 0;
    for (const auto& s : sets)
        for (std::size_t i = 0; i < s.members.size(); ++i)
            if (s.members[i] == v) total += s.contribs[i];
    return total;
}

BinaryFilterResult binary_maxsat_filter(const WeightedGraph& g,
                                        const std::vector<VertexId>& candidates,
                                        const ColorPartition& partition, Weight gap) {
    (void)candidates;
    BinaryFilterResult res;
    SoftSetSystem& sys = res.system;
    sys.g = &g;
    sys.gap = gap;

    // phase 1: admit whole color classes while the running bound fits
    std::vector<VertexId> leftover;
    for (std::size_t j = 0; j < partition.classes.size(); ++j) {
        if (sys.ub + partition.class_max[j] <= gap) {
            SoftSet s;
            s.max_contrib = partition.class_max[j];
            for (VertexId v : partition.classes[j]) {
                s.members.push_back(v);
                s.contribs.push_back(g.weight(v));
            }
            sys.sets.push_back(std::move(s));
            sys.ub += partition.class_max[j];
        } else {
            leftover.insert(leftover.end(), partition.classes[j].begin(),
                            partition.classes[j].end());
        }
    }

    // phase 2: absorb leftover vertices individually
    for (VertexId v : leftover) {
        std::vector<std::size_t> compatible;
        for (std::size_t j = 0; j < sys.sets.size(); ++j)
            if (!sys.set_conflicts(j, v)) compatible.push_back(j);
        if (compatible.empty()) {
            if (sys.ub + g.weight(v) <= gap) {
                sys.add_set(v, g.weight(v));
            } else {
                res.branching.push_back(v);
            }
            continue;
        }
        Weight remaining = g.weight(v);
        std::vector<std::pair<std::size_t, Weight>> splits;
        for (std::size_t j : compatible) {
            if (remaining == 0) break;
            Weight amount = std::min(remaining, sys.sets[j].max_contrib);
            splits.emplace_back(j, amount);
            remaining -= amount;
        }
        if (remaining > 0 && sys.ub + remaining > gap) {
            res.branching.push_back(v); // splitting undone: v stays branching
            continue;
        }
        for (auto [j, amount] : splits) sys.add_member(j, v, amount);
        if (remaining > 0) sys.add_set(v, remaining);
    }
    return res;
}

VertexReasoning begin_reasoning(SoftSetSystem& sys, VertexId v) {
    VertexReasoning r;
    r.v = v;
    Weight remaining = sys.g->weight(v);
    for (std::size_t j = 0; j < sys.sets.size() && remaining > 0; ++j) {
        if (sys.set_contains(j, v) || sys.set_conflicts(j, v)) continue;
        Weight amount = std::min(remaining, sys.sets[j].max_contrib);
        sys.add_member(j, v, amount);
        r.splits.emplace_back(j, amount);
        remaining -= amount;
    }
    r.residual = remaining;
    r.budget = remaining;
    r.avail.resize(sys.sets.size());
    for (std::size_t j = 0; j < sys.sets.size(); ++j) r.avail[j] = sys.sets[j].max_contrib;
    return r;
}

bool ordered_maxsat_reasoning(SoftSetSystem& sys, VertexReasoning& r) {
    if (r.filtered_check(sys)) return true;
    const WeightedGraph& g = *sys.g;
    std::vector<char> consumed(sys.sets.size(), 0);

    for (std::size_t j = 0; j < sys.sets.size() && r.budget > 0; ++j) {
        if (consumed[j] || r.avail[j] <= 0 || sys.set_contains(j, r.v)) continue;
        // U_j must hold exactly one neighbor of v
        VertexId u = 0;
        int count = 0;
        for (VertexId m : sys.sets[j].members) {
            if (g.is_adjacent(m, r.v)) {
                u = m;
                if (++count > 1) break;
            }
        }
        if (count != 1) continue;
        for (std::size_t q = 0; q < sys.sets.size(); ++q) {
            if (q == j || consumed[q] || r.avail[q] <= 0 || sys.set_contains(q, r.v)) continue;
            // split vertices belong to several sets, so D_q holding u itself
            // would be satisfied by u directly and cannot be conflicting
            bool blocked = false;
            for (VertexId m : sys.sets[q].members) {
                if (m == u || (g.is_adjacent(m, r.v) && g.is_adjacent(m, u))) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) continue;
            // {{v}, U_j, D_q} is conflicting
            Weight beta = std::min({r.budget, r.avail[j], r.avail[q]});
            r.avail[j] -= beta;
            r.avail[q] -= beta;
            r.budget -= beta;
            consumed[j] = consumed[q] = 1;
            if (r.filtered_check(sys)) return true;
            break;
        }
    }
    return r.filtered_check(sys);
}

namespace {

struct ClauseState {
    std::vector<VertexId> lits;
    bool satisfied = false;
    bool active = false;
};

} // namespace

Weight unit_propagation_conflicts(SoftSetSystem& sys, VertexReasoning& r) {
    const WeightedGraph& g = *sys.g;
    Weight total_relief = 0;

    while (r.budget > 0 && !r.filtered_check(sys)) {
        // rebuild clause states against current availabilities
        std::vector<ClauseState> clauses(sys.sets.size());
        for (std::size_t j = 0; j < sys.sets.size(); ++j) {
            if (r.avail[j] <= 0) continue;
            clauses[j].active = true;
            clauses[j].satisfied = sys.set_contains(j, r.v);
            clauses[j].lits = sys.sets[j].members;
        }
        std::vector<std::size_t> chain; // sets whose unit literal was forced

        // returns the emptied clause on conflict
        auto delete_incompatible = [&](VertexId x) -> std::ptrdiff_t {
            for (std::size_t k = 0; k < clauses.size(); ++k) {
                auto& c = clauses[k];
                if (!c.active || c.satisfied) continue;
                if (std::find(c.lits.begin(), c.lits.end(), x) != c.lits.end()) {
                    c.satisfied = true;
                    continue;
                }
                std::erase_if(c.lits, [&](VertexId m) { return !g.is_adjacent(m, x); });
                if (c.lits.empty()) return static_cast<std::ptrdiff_t>(k);
            }
            return -1;
        };

        std::ptrdiff_t emptied = delete_incompatible(r.v);
        while (emptied < 0) {
            // strongest clause first: the lowest-index unit clause
            std::ptrdiff_t unit = -1;
            for (std::size_t k = 0; k < clauses.size(); ++k) {
                const auto& c = clauses[k];
                if (c.active && !c.satisfied && c.lits.size() == 1) {
                    unit = static_cast<std::ptrdiff_t>(k);
                    break;
                }
            }
            if (unit < 0) break;
            auto& c = clauses[static_cast<std::size_t>(unit)];
            c.satisfied = true;
            chain.push_back(static_cast<std::size_t>(unit));
            emptied = delete_incompatible(c.lits.front());
        }
        if (emptied < 0) break; // no conflict, propagation exhausted

        Weight beta = r.budget;
        beta = std::min(beta, r.avail[static_cast<std::size_t>(emptied)]);
        for (std::size_t j : chain) beta = std::min(beta, r.avail[j]);
        r.avail[static_cast<std::size_t>(emptied)] -= beta;
        for (std::size_t j : chain) r.avail[j] -= beta;
        r.budget -= beta;
        total_relief += beta;
    }
    return total_relief;
}

void commit_reasoning(SoftSetSystem& sys, VertexReasoning& r) {
    if (r.residual > 0) sys.add_set(r.v, r.residual);
}

void undo_reasoning(SoftSetSystem& sys, VertexReasoning& r) {
    for (auto it = r.splits.rbegin(); it != r.splits.rend(); ++it) {
        auto& s = sys.sets[it->first];
        assert(!s.members.empty() && s.members.back() == r.v);
        s.members.pop_back();
        s.contribs.pop_back();
    }
    r.splits.clear();
}

} // namespace mwc
