#include "cutcx/shelling.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>

#include "cutcx/parallel.hpp"

namespace cutcx {

std::size_t ShellingReport::spanning_count() const
{
    return static_cast<std::size_t>(std::count(spanning.begin(), spanning.end(), true));
}

namespace {

/// F_r ∩ F_j = F_j \ {λ} for a single λ, on equal-size facets.
inline bool meets_in_ridge(VertexSet a, VertexSet b) { return (a & b).size() + 1 == b.size(); }

void check_permutation(const SimplicialComplex& c, const std::vector<VertexSet>& order)
{
    if (order.size() != c.facet_count())
        throw std::invalid_argument("shelling order has " + std::to_string(order.size()) + " entries, complex has " +
                                    std::to_string(c.facet_count()) + " facets");
    std::vector<VertexSet> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.facets())
        throw std::invalid_argument("shelling order is not a permutation of the facets");
}

}  // namespace

ShellingReport verify_shelling(const SimplicialComplex& c, const std::vector<VertexSet>& order, unsigned jobs)
{
    if (!is_pure(c))
        throw std::invalid_argument("verify_shelling: complex is not pure");
    check_permutation(c, order);

    const std::size_t t = order.size();
    ShellingReport report;
    report.order = order;
    report.removable.assign(t, VertexSet{});
    report.spanning.assign(t, false);

    std::vector<std::optional<std::size_t>> first_failure(t);
    std::vector<std::size_t> failures(t, 0);

    parallel_for(t, jobs, [&](std::size_t j) {
        const VertexSet fj = order[j];
        VertexSet removable;
        for (std::size_t r = 0; r < j; ++r)
            if (meets_in_ridge(order[r], fj))
                removable = removable | (fj - order[r]);
        report.removable[j] = removable;
        for (std::size_t i = 0; i < j; ++i)
            if (removable.is_subset_of(order[i])) {
                if (!first_failure[j])
                    first_failure[j] = i;
                ++failures[j];
            }
        report.spanning[j] = j > 0 && removable == fj;
    });

    for (std::size_t j = 0; j < t; ++j) {
        report.failure_count += failures[j];
        if (first_failure[j] && !report.witness)
            report.witness = ShellingWitness{*first_failure[j] + 1, j + 1};
    }
    report.valid = !report.witness.has_value();
    return report;
}

std::vector<VertexSet> spanning_facets(const ShellingReport& report)
{
    if (!report.valid)
        throw std::logic_error("spanning_facets: the order is not a shelling");
    std::vector<VertexSet> out;
    for (std::size_t j = 0; j < report.order.size(); ++j)
        if (report.spanning[j])
            out.push_back(report.order[j]);
    return out;
}

namespace {

class ShellingSearch {
public:
    ShellingSearch(const std::vector<VertexSet>& facets, std::size_t budget)
        : facets_(facets), budget_(budget), placed_bits_((facets.size() + 63) / 64, 0)
    {
    }

    ShellingSearchResult run()
    {
        ShellingSearchResult result;
        if (facets_.size() <= 1) {
            result.status = ShellingSearchStatus::found;
            result.order = facets_;
            return result;
        }
        const bool ok = extend();
        result.nodes = nodes_;
        if (ok) {
            result.status = ShellingSearchStatus::found;
            std::vector<VertexSet> order;
            for (std::size_t i : placed_)
                order.push_back(facets_[i]);
            result.order = std::move(order);
        } else {
            result.status = exhausted_budget_ ? ShellingSearchStatus::budget_exceeded
                                              : ShellingSearchStatus::not_shellable;
        }
        return result;
    }

private:
    struct StateHash {
        std::size_t operator()(const std::vector<std::uint64_t>& v) const noexcept
        {
            std::size_t h = 0;
            for (std::uint64_t w : v)
                h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            return h;
        }
    };

    bool is_placed(std::size_t i) const { return (placed_bits_[i / 64] >> (i % 64)) & 1u; }
    void toggle(std::size_t i) { placed_bits_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    bool extend()
    {
        if (placed_.size() == facets_.size())
            return true;
        if (dead_.contains(placed_bits_))
            return false;
        if (++nodes_ > budget_) {
            exhausted_budget_ = true;
            return false;
        }

        struct Candidate {
            std::size_t index;
            int removable_size;
        };
        std::vector<Candidate> candidates;
        for (std::size_t k = 0; k < facets_.size(); ++k) {
            if (is_placed(k))
                continue;
            const VertexSet f = facets_[k];
            if (placed_.empty()) {
                candidates.push_back({k, 0});
                continue;
            }
            VertexSet removable;
            for (std::size_t r : placed_)
                if (meets_in_ridge(facets_[r], f))
                    removable = removable | (f - facets_[r]);
            const bool addable = std::none_of(placed_.begin(), placed_.end(),
                                              [&](std::size_t i) { return removable.is_subset_of(facets_[i]); });
            if (addable)
                candidates.push_back({k, removable.size()});
        }
        std::stable_sort(candidates.begin(), candidates.end(),
                         [](const Candidate& a, const Candidate& b) { return a.removable_size > b.removable_size; });

        for (const Candidate& cand : candidates) {
            placed_.push_back(cand.index);
            toggle(cand.index);
            if (extend())
                return true;
            toggle(cand.index);
            placed_.pop_back();
            if (exhausted_budget_)
                return false;
        }
        dead_.insert(placed_bits_);
        return false;
    }

    const std::vector<VertexSet>& facets_;
    std::size_t budget_;
    std::size_t nodes_ = 0;
    bool exhausted_budget_ = false;
    std::vector<std::size_t> placed_;
    std::vector<std::uint64_t> placed_bits_;
    std::unordered_set<std::vector<std::uint64_t>, StateHash> dead_;
};

}  // namespace

ShellingSearchResult find_shelling(const SimplicialComplex& c, std::size_t node_budget)
{
    if (!is_pure(c))
        throw std::invalid_argument("find_shelling: complex is not pure");
    return ShellingSearch(c.facets(), node_budget).run();
}

}  // namespace cutcx
