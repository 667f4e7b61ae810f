// Resembling sequences and the bad-sequence search.

#include "finmem/wqo.hh"
#include "finmem/error.hh"

#include <algorithm>

namespace finmem::wqo {

bool counts_leq(const CountMap& f, const CountMap& g) {
    return std::all_of(f.begin(), f.end(), [&g](const auto& kv) {
        const auto it = g.find(kv.first);
        return kv.second <= (it == g.end() ? 0 : it->second);
    });
}

std::optional<std::pair<std::size_t, std::size_t>> first_good_pair(const Sequence& seq, std::size_t limit) {
    const std::size_t n = std::min(limit, seq.size());
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (seq[i].q == seq[j].q && counts_leq(seq[i].f, seq[j].f)) { return std::pair{ i, j }; }
        }
    }
    return std::nullopt;
}

bool is_extendable(const Sequence& seq, std::size_t n) { return first_good_pair(seq, n).has_value(); }

bool is_resembling(const Sequence& seq, std::size_t s_count) {
    const std::uint64_t full = (std::uint64_t{ 1 } << s_count) - 1;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (!seq[i].q.subset_of(StateSet(full))) { return false; }
        for (const auto& [q, v] : seq[i].f) {
            if (q.empty() || !q.subset_of(StateSet(full)) || v > i) { return false; }
        }
    }
    return true;
}

namespace {

using Vec = std::vector<Natural>;

bool vec_leq(const Vec& a, const Vec& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) { return false; }
    }
    return true;
}

class BadSearch {
public:
    BadSearch(std::size_t s_count, const SearchOptions& options)
        : options_(options), q_count_(std::size_t{ 1 } << s_count), dim_(q_count_ - 1) {}

    void run() { extend(); }

    BadSequenceWitness witness() const {
        BadSequenceWitness w{ {}, best_.size(), nodes_ };
        for (const auto& [q, f] : best_) {
            ResemblingEntry e{ StateSet(q), {} };
            for (std::size_t k = 0; k < dim_; ++k) {
                if (f[k] != 0) { e.f.emplace(StateSet(k + 1), f[k]); }
            }
            w.entries.push_back(std::move(e));
        }
        return w;
    }

private:
    /// Count vectors legal at the current position for state set q, ascending lexicographically.
    std::vector<Vec> candidates(std::uint64_t q) {
        const Natural top = options_.zero_counts ? 0 : current_.size();
        std::vector<const Vec*> earlier;
        for (const auto& [eq, ef] : current_) {
            if (eq == q) { earlier.push_back(&ef); }
        }
        if (options_.pruning && earlier.empty()) { return { Vec(dim_, top) }; }
        std::vector<Vec> legal;
        Vec f(dim_, 0);
        while (true) {
            charge();
            if (std::none_of(earlier.begin(), earlier.end(), [&f](const Vec* g) { return vec_leq(*g, f); })) {
                legal.push_back(f);
            }
            std::size_t k = dim_;
            while (k > 0 && f[k - 1] == top) { f[--k] = 0; }
            if (k == 0) { break; }
            ++f[k - 1];
        }
        if (!options_.pruning) { return legal; }
        std::vector<Vec> maximal;
        for (const auto& f1 : legal) {
            const bool dominated = std::any_of(legal.begin(), legal.end(), [&f1](const Vec& f2) {
                return f1 != f2 && vec_leq(f1, f2);
            });
            if (!dominated) { maximal.push_back(f1); }
        }
        return maximal;
    }

    void charge() {
        if (++nodes_ > options_.budget) { throw BudgetExceeded("search budget exhausted"); }
    }

    void extend() {
        charge();
        if (current_.size() > best_.size()) { best_ = current_; }
        if (options_.depth_cap && current_.size() >= *options_.depth_cap) { return; }
        for (std::uint64_t q = 0; q < q_count_; ++q) {
            if (current_.empty() && options_.symmetry && (q & (q + 1)) != 0) { continue; }
            for (auto& f : candidates(q)) {
                current_.emplace_back(q, std::move(f));
                extend();
                current_.pop_back();
            }
        }
    }

    SearchOptions options_;
    std::uint64_t q_count_;
    std::size_t dim_;
    std::vector<std::pair<std::uint64_t, Vec>> current_;
    std::vector<std::pair<std::uint64_t, Vec>> best_;
    std::uint64_t nodes_ = 0;
};

} // namespace

BadSequenceWitness longest_bad(std::size_t s_count, const SearchOptions& options) {
    if (s_count == 0 || s_count > 6) { throw PreconditionViolated("state count must be between 1 and 6"); }
    BadSearch search(s_count, options);
    search.run();
    return search.witness();
}

std::size_t compute_n(std::size_t s_count, const SearchOptions& options) { return longest_bad(s_count, options).length + 1; }

std::optional<std::pair<std::size_t, std::size_t>> dickson_pair(const std::vector<std::vector<Natural>>& vectors) {
    // Only the minimal elements seen so far can be below a later vector.
    std::vector<const Vec*> minimal;
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        const Vec& v = vectors[j];
        const bool covered = std::any_of(minimal.begin(), minimal.end(), [&v](const Vec* m) {
            return m->size() == v.size() && vec_leq(*m, v);
        });
        if (covered) {
            for (std::size_t i = 0;; ++i) {
                if (vectors[i].size() == v.size() && vec_leq(vectors[i], v)) { return std::pair{ i, j }; }
            }
        }
        std::erase_if(minimal, [&v](const Vec* m) { return m->size() == v.size() && vec_leq(v, *m); });
        minimal.push_back(&v);
    }
    return std::nullopt;
}

} // namespace finmem::wqo
