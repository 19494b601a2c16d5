#include "bartomo/exact.hpp"

#include <algorithm>
#include <format>
#include <numeric>
#include <queue>
#include <random>

#include "bartomo/errors.hpp"
#include "line_counts.hpp"

namespace bartomo {

namespace {

struct Candidate {
    Orientation orientation;
    int i, j;  // canonical anchor
};

class Search {
public:
    Search(const Region& region, const BarSpec& spec, const ProjectionPair* projections,
           const SolveOptions& options, std::mt19937_64* rng)
        : region_(region), spec_(spec), rng_(rng) {
        const Geometry& g = region.geometry();
        a_ = g.a;
        b_ = g.b;
        torus_ = g.shape == Shape::torus;
        h_ = spec.h;
        v_ = spec.v;
        if (h_ < 1 || v_ < 1) throw InputError("bar lengths must be at least 1");
        if (region.cell_count() > options.cell_budget)
            throw BudgetError(std::format("region has {} cells, over the {}-cell search budget",
                                          region.cell_count(), options.cell_budget));

        free_.assign(static_cast<size_t>(a_) * b_, 0);
        col_cells_.assign(a_, 0);
        row_cells_.assign(b_, 0);
        for (int j = 0; j < b_; ++j)
            for (int i = 0; i < a_; ++i)
                if (region.contains(i, j)) {
                    free_[idx(i, j)] = 1;
                    ++col_cells_[i];
                    ++row_cells_[j];
                }

        constrained_ = projections != nullptr;
        if (constrained_) {
            if (static_cast<int>(projections->m.size()) != a_ ||
                static_cast<int>(projections->n.size()) != b_)
                throw InputError(std::format("projection lengths ({},{}) do not match grid {}x{}",
                                             projections->m.size(), projections->n.size(), a_, b_));
            m_rem_ = projections->m;
            n_rem_ = projections->n;
            for (int x : m_rem_)
                if (x < 0) throw InputError("negative entry in m");
            for (int x : n_rem_)
                if (x < 0) throw InputError("negative entry in n");
            root_feasible_ = root_checks();
        }
    }

    // Runs the search, collecting up to `limit` tilings.
    std::vector<Tiling> run(std::size_t limit) {
        results_.clear();
        limit_ = limit;
        if (limit_ == 0 || !root_feasible_) return std::move(results_);
        stack_.clear();
        dfs(0);
        return std::move(results_);
    }

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(j) * a_ + i; }

    bool root_checks() {
        long long cells = region_.cell_count();
        long long need = 0;
        for (int i = 0; i < a_; ++i) {
            need += static_cast<long long>(v_) * m_rem_[i];
            if (static_cast<long long>(v_) * m_rem_[i] > col_cells_[i]) return false;
        }
        for (int j = 0; j < b_; ++j) {
            need += static_cast<long long>(h_) * n_rem_[j];
            if (static_cast<long long>(h_) * n_rem_[j] > row_cells_[j]) return false;
        }
        if (need != cells) return false;  // area identity

        // On a fully covered rectangle the per-line anchor counts are forced,
        // so they both certify infeasibility up front and bound placements.
        if (!torus_ && region_.is_full()) {
            c_exact_ = detail::anchor_counts(a_, b_, h_, v_, m_rem_);
            d_exact_ = detail::anchor_counts(b_, a_, v_, h_, n_rem_);
            long long total_h = 0, total_v = 0;
            for (int i = 0; i < a_; ++i) {
                if (c_exact_[i] < 0) return false;
                if (c_exact_[i] > 0 && i + h_ > a_) return false;
                total_h += c_exact_[i];
            }
            for (int j = 0; j < b_; ++j) {
                if (d_exact_[j] < 0) return false;
                if (d_exact_[j] > 0 && j + v_ > b_) return false;
                total_v += d_exact_[j];
            }
            if (total_h != std::accumulate(n_rem_.begin(), n_rem_.end(), 0LL)) return false;
            if (total_v != std::accumulate(m_rem_.begin(), m_rem_.end(), 0LL)) return false;
            anchored_prune_ = true;
            hor_anchored_.assign(a_, 0);
            vert_anchored_.assign(b_, 0);
        }
        return true;
    }

    int next_free(int from) const {
        int end = a_ * b_;
        while (from < end && !free_[from]) ++from;
        return from == end ? -1 : from;
    }

    void collect_candidates(int ci, int rj, std::vector<Candidate>& out) const {
        out.clear();
        if (!torus_) {
            if (ci + h_ <= a_) out.push_back({Orientation::horizontal, ci, rj});
            if (rj + v_ <= b_) out.push_back({Orientation::vertical, ci, rj});
            return;
        }
        // All wrap anchors whose bar covers (ci, rj). When the bar spans the
        // whole row/column every anchor yields the same set; keep anchor 0.
        if (h_ == a_) {
            out.push_back({Orientation::horizontal, 0, rj});
        } else if (h_ < a_) {
            for (int t = 0; t < h_; ++t) out.push_back({Orientation::horizontal, (ci - t + a_) % a_, rj});
        }
        if (v_ == b_) {
            out.push_back({Orientation::vertical, ci, 0});
        } else if (v_ < b_) {
            for (int s = 0; s < v_; ++s) out.push_back({Orientation::vertical, ci, (rj - s + b_) % b_});
        }
    }

    bool cells_free(const Candidate& c) const {
        int len = c.orientation == Orientation::horizontal ? h_ : v_;
        for (int k = 0; k < len; ++k) {
            int i = c.orientation == Orientation::horizontal ? c.i + k : c.i;
            int j = c.orientation == Orientation::vertical ? c.j + k : c.j;
            if (torus_) {
                i %= a_;
                j %= b_;
            }
            if (!free_[idx(i, j)]) return false;
        }
        return true;
    }

    // Attempts the placement including the line-budget pruning; returns false
    // with no state change when it cannot be part of any completion.
    bool place(const Candidate& c) {
        if (constrained_) {
            if (c.orientation == Orientation::vertical && m_rem_[c.i] == 0) return false;
            if (c.orientation == Orientation::horizontal && n_rem_[c.j] == 0) return false;
            if (anchored_prune_) {
                if (c.orientation == Orientation::horizontal && hor_anchored_[c.i] >= c_exact_[c.i])
                    return false;
                if (c.orientation == Orientation::vertical && vert_anchored_[c.j] >= d_exact_[c.j])
                    return false;
            }
        }
        apply(c, -1);
        if (constrained_ && !lines_viable(c)) {
            apply(c, +1);
            return false;
        }
        return true;
    }

    void unplace(const Candidate& c) { apply(c, +1); }

    void apply(const Candidate& c, int dir) {
        int len = c.orientation == Orientation::horizontal ? h_ : v_;
        for (int k = 0; k < len; ++k) {
            int i = c.orientation == Orientation::horizontal ? c.i + k : c.i;
            int j = c.orientation == Orientation::vertical ? c.j + k : c.j;
            if (torus_) {
                i %= a_;
                j %= b_;
            }
            free_[idx(i, j)] = dir > 0;
            col_cells_[i] += dir;
            row_cells_[j] += dir;
        }
        if (constrained_) {
            if (c.orientation == Orientation::vertical)
                m_rem_[c.i] += dir;
            else
                n_rem_[c.j] += dir;
            if (anchored_prune_) {
                if (c.orientation == Orientation::horizontal)
                    hor_anchored_[c.i] -= dir;
                else
                    vert_anchored_[c.j] -= dir;
            }
        }
    }

    // Each line must keep enough free cells for its outstanding vertical or
    // horizontal bars. Only lines touched by the placement can have changed.
    bool lines_viable(const Candidate& c) const {
        int len = c.orientation == Orientation::horizontal ? h_ : v_;
        for (int k = 0; k < len; ++k) {
            int i = c.orientation == Orientation::horizontal ? (torus_ ? (c.i + k) % a_ : c.i + k) : c.i;
            int j = c.orientation == Orientation::vertical ? (torus_ ? (c.j + k) % b_ : c.j + k) : c.j;
            if (col_cells_[i] < static_cast<long long>(v_) * m_rem_[i]) return false;
            if (row_cells_[j] < static_cast<long long>(h_) * n_rem_[j]) return false;
        }
        return true;
    }

    // Returns true when the limit has been reached and the search should stop.
    bool dfs(int from, std::size_t depth = 0) {
        from = next_free(from);
        if (from < 0) {
            record();
            return results_.size() >= limit_;
        }
        if (depth >= pool_.size()) pool_.emplace_back();
        std::vector<Candidate>& cands = pool_[depth];
        collect_candidates(from % a_, from / a_, cands);
        if (rng_) std::shuffle(cands.begin(), cands.end(), *rng_);
        for (const Candidate& c : cands) {
            if (!cells_free(c)) continue;
            if (!place(c)) continue;
            stack_.push_back({c.orientation, {c.i, c.j}});
            bool done = dfs(from, depth + 1);
            stack_.pop_back();
            unplace(c);
            if (done) return true;
        }
        return false;
    }

    void record() {
        Tiling t{spec_, region_, stack_};
        std::sort(t.bars.begin(), t.bars.end());
        results_.push_back(std::move(t));
    }

    Region region_;
    BarSpec spec_;
    int a_ = 0, b_ = 0, h_ = 1, v_ = 1;
    bool torus_ = false;
    bool constrained_ = false;
    bool root_feasible_ = true;
    bool anchored_prune_ = false;
    std::vector<std::uint8_t> free_;
    std::vector<int> col_cells_, row_cells_;
    std::vector<int> m_rem_, n_rem_;
    std::vector<long long> c_exact_, d_exact_;
    std::vector<int> hor_anchored_, vert_anchored_;
    std::vector<Bar> stack_;
    std::vector<std::vector<Candidate>> pool_;  // per-depth candidate buffers
    std::vector<Tiling> results_;
    std::size_t limit_ = 0;
    std::mt19937_64* rng_ = nullptr;
};

}  // namespace

std::optional<Tiling> solve_exact(const Instance& instance, const SolveOptions& options) {
    Search search(instance.region, instance.spec, &instance.projections, options, nullptr);
    std::vector<Tiling> found = search.run(1);
    if (found.empty()) return std::nullopt;
    return std::move(found.front());
}

std::vector<Tiling> enumerate_exact(const Instance& instance, std::size_t limit,
                                    const SolveOptions& options) {
    Search search(instance.region, instance.spec, &instance.projections, options, nullptr);
    return search.run(limit);
}

std::vector<Tiling> enumerate_tilings(const Region& region, const BarSpec& spec,
                                      std::size_t limit, const SolveOptions& options) {
    Search search(region, spec, nullptr, options, nullptr);
    return search.run(limit);
}

bool is_cycle(const Region& region) {
    if (region.cell_count() == 0) return false;
    const Geometry& g = region.geometry();
    std::vector<Cell> cells = region.cells();

    auto neighbors = [&](Cell c) {
        std::vector<Cell> out;
        const int di[4] = {1, -1, 0, 0};
        const int dj[4] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
            int i = c.i + di[k];
            int j = c.j + dj[k];
            if (g.shape == Shape::torus) {
                i = (i + g.a) % g.a;
                j = (j + g.b) % g.b;
            }
            if (i == c.i && j == c.j) continue;
            if (region.contains(i, j)) out.push_back({i, j});
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };

    for (const Cell& c : cells)
        if (neighbors(c).size() != 2) return false;

    // Connectivity.
    std::vector<std::uint8_t> seen(static_cast<size_t>(g.a) * g.b, 0);
    std::queue<Cell> queue;
    queue.push(cells.front());
    seen[static_cast<size_t>(cells.front().j) * g.a + cells.front().i] = 1;
    int reached = 0;
    while (!queue.empty()) {
        Cell c = queue.front();
        queue.pop();
        ++reached;
        for (const Cell& nb : neighbors(c)) {
            std::uint8_t& flag = seen[static_cast<size_t>(nb.j) * g.a + nb.i];
            if (!flag) {
                flag = 1;
                queue.push(nb);
            }
        }
    }
    return reached == region.cell_count();
}

SampledInstance sample_feasible_instance(const Region& region, const BarSpec& spec,
                                         std::uint64_t seed, const SolveOptions& options) {
    long long cells = region.cell_count();
    bool representable = false;
    for (long long y = 0; y * spec.v <= cells && !representable; ++y)
        representable = (cells - y * spec.v) % spec.h == 0;
    if (!representable)
        throw GenerationError(std::format(
            "{} cells cannot be written as x*{} + y*{}; no bar cover exists", cells, spec.h, spec.v));

    std::mt19937_64 rng(seed);
    Search search(region, spec, nullptr, options, &rng);
    std::vector<Tiling> found = search.run(1);
    if (found.empty())
        throw GenerationError("region admits no bar tiling; retries exhausted");

    Tiling witness = std::move(found.front());
    Instance instance{region, spec, projections_of(witness)};
    return {std::move(instance), std::move(witness)};
}

SampledInstance sample_feasible_instance(const Geometry& geometry, const BarSpec& spec,
                                         std::uint64_t seed, const SolveOptions& options) {
    return sample_feasible_instance(Region::full(geometry), spec, seed, options);
}

}  // namespace bartomo
