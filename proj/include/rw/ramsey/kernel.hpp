#pragma once
// Backtracking kernel shared by every monochromatic-configuration search.
//
// Cells 0..n-1 are colored in order. A configuration ("edge") is a list of
// groups of cells; it is present in a coloring when every group is
// monochromatic (different groups may use different colors). Each edge is
// checked when its largest cell gets a color, and a color that would
// complete an edge is barred. Colors are interchangeable in every family we
// build, so a cell may only open the next unused color.

#include "rw/common.hpp"

#include <span>

namespace rw {

class Hypergraph {
public:
    explicit Hypergraph(int cells = 0) : n_(cells) {}

    int cells() const { return n_; }
    std::size_t edge_count() const { return emax_.size(); }

    /// Groups with fewer than two distinct cells are kept (they are always
    /// monochromatic) so that an edge made only of singletons is always present.
    void add_edge(const std::vector<std::vector<int>>& groups) {
        int mx = -1;
        for (const auto& g : groups) {
            std::vector<int> s(g);
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            for (int c : s) {
                if (c < 0 || c >= n_) throw std::logic_error("hypergraph: cell out of range");
                cell_.push_back(c);
            }
            if (!s.empty()) mx = std::max(mx, s.back());
            gstart_.push_back(static_cast<int>(cell_.size()));
        }
        estart_.push_back(static_cast<int>(gstart_.size()) - 1);
        emax_.push_back(mx);
        finalized_ = false;
    }
    void add_group(std::vector<int> g) { add_edge({std::move(g)}); }

    void finalize() {
        if (finalized_) return;
        bstart_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (int m : emax_)
            if (m >= 0) ++bstart_[m + 1];
        for (int i = 0; i < n_; ++i) bstart_[i + 1] += bstart_[i];
        byidx_.assign(bstart_[n_], 0);
        std::vector<int> fill(bstart_.begin(), bstart_.end() - 1);
        for (std::size_t e = 0; e < emax_.size(); ++e)
            if (emax_[e] >= 0) byidx_[fill[emax_[e]]++] = static_cast<int>(e);
        finalized_ = true;
    }

    /// Edges whose largest cell is `cell`.
    std::span<const int> edges_at(int cell) const {
        return std::span<const int>(byidx_.data() + bstart_[cell], byidx_.data() + bstart_[cell + 1]);
    }

    /// Present iff every group is monochromatic under `col` (cells all assigned).
    bool present(int e, const std::vector<int>& col) const {
        for (int g = estart_[e]; g < estart_[e + 1]; ++g) {
            int b = gstart_[g], t = gstart_[g + 1];
            if (t - b < 2) continue;
            int c0 = col[cell_[b]];
            for (int i = b + 1; i < t; ++i)
                if (col[cell_[i]] != c0) return false;
        }
        return true;
    }

    /// Index of the first present edge, or -1.
    long first_present(const std::vector<int>& col) const {
        for (std::size_t e = 0; e < emax_.size(); ++e)
            if (present(static_cast<int>(e), col)) return static_cast<long>(e);
        return -1;
    }

    std::vector<std::vector<int>> edge_groups(int e) const {
        std::vector<std::vector<int>> out;
        for (int g = estart_[e]; g < estart_[e + 1]; ++g)
            out.emplace_back(cell_.begin() + gstart_[g], cell_.begin() + gstart_[g + 1]);
        return out;
    }

private:
    int n_;
    std::vector<int> cell_;
    std::vector<int> gstart_{0};
    std::vector<int> estart_{0};
    std::vector<int> emax_;
    std::vector<int> bstart_, byidx_;
    bool finalized_ = false;
};

struct KernelResult {
    SearchStatus status = SearchStatus::exhausted;
    std::vector<int> coloring;  // colors 1..r when found
    u64 nodes = 0;
};

/// Depth-first search for an r-coloring of the cells in which no edge is
/// present. found = such a coloring exists (returned, lexicographically
/// least among canonical colorings); exhausted = none exists.
inline KernelResult avoid_search(Hypergraph& h, int r, Budget& budget, bool symmetry = true) {
    h.finalize();
    KernelResult out;
    int n = h.cells();
    if (r < 1) throw InputError("search: need at least one color");
    std::vector<int> col(static_cast<std::size_t>(n), 0);
    std::vector<int> maxused(static_cast<std::size_t>(n) + 1, 0);
    u64 start = budget.used();
    auto allowed = [&](int i, int c) {
        col[i] = c;
        for (int e : h.edges_at(i))
            if (h.present(e, col)) {
                col[i] = 0;
                return false;
            }
        return true;
    };
    int i = 0;
    while (true) {
        if (i == n) {
            out.status = SearchStatus::found;
            out.coloring = col;
            break;
        }
        int lim = symmetry ? std::min(r, maxused[i] + 1) : r;
        int c = col[i] + 1;
        col[i] = 0;
        bool placed = false;
        for (; c <= lim; ++c) {
            if (!budget.spend()) {
                out.status = SearchStatus::budget;
                out.nodes = budget.used() - start;
                return out;
            }
            if (allowed(i, c)) {
                placed = true;
                break;
            }
        }
        if (placed) {
            maxused[i + 1] = std::max(maxused[i], c);
            ++i;
            if (i < n) col[i] = 0;
        } else {
            if (i == 0) {
                out.status = SearchStatus::exhausted;
                break;
            }
            --i;  // retry cell i with its next color
        }
    }
    out.nodes = budget.used() - start;
    return out;
}

}  // namespace rw
