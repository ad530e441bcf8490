#include "ghtk/correspondence.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

namespace ghtk {

Relation::Relation(std::size_t nx, std::size_t ny, std::vector<IndexPair> pairs)
    : nx_(nx), ny_(ny), pairs_(std::move(pairs)) {
    if (pairs_.empty()) fail("EmptyRelation", "a relation must contain a pair");
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    for (const auto& [i, j] : pairs_)
        if (i >= nx_ || j >= ny_)
            fail("IndexOutOfRange", "relation pair (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") out of range");
}

bool is_correspondence(const Relation& sigma) {
    std::vector<char> cx(sigma.nx(), 0), cy(sigma.ny(), 0);
    for (const auto& [i, j] : sigma.pairs()) {
        cx[i] = 1;
        cy[j] = 1;
    }
    return std::find(cx.begin(), cx.end(), 0) == cx.end() &&
           std::find(cy.begin(), cy.end(), 0) == cy.end();
}

Correspondence::Correspondence(Relation rel) : Relation(std::move(rel)) {
    if (!is_correspondence(*this))
        fail("NotACorrespondence", "relation does not project onto both sides");
}

Correspondence Correspondence::identity(std::size_t n) {
    std::vector<IndexPair> pairs(n);
    for (std::uint32_t i = 0; i < n; ++i) pairs[i] = {i, i};
    return Correspondence(n, n, std::move(pairs));
}

Correspondence Correspondence::full(std::size_t nx, std::size_t ny) {
    std::vector<IndexPair> pairs;
    pairs.reserve(nx * ny);
    for (std::uint32_t i = 0; i < nx; ++i)
        for (std::uint32_t j = 0; j < ny; ++j) pairs.push_back({i, j});
    return Correspondence(nx, ny, std::move(pairs));
}

double distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  const Relation& sigma) {
    if (sigma.nx() != x.size() || sigma.ny() != y.size())
        fail("SizeMismatch", "relation sizes do not match the spaces");
    const auto& pairs = sigma.pairs();
    double dis = 0.0;
    for (std::size_t a = 0; a < pairs.size(); ++a)
        for (std::size_t b = a + 1; b < pairs.size(); ++b) {
            const double dx = x(pairs[a].first, pairs[b].first);
            const double dy = y(pairs[a].second, pairs[b].second);
            dis = std::max(dis, std::abs(dx - dy));
        }
    return dis;
}

namespace {

struct Degrees {
    std::vector<std::uint32_t> row;  // #R(x)
    std::vector<std::uint32_t> col;  // #R^{-1}(y)
};

Degrees degrees(const Relation& r) {
    Degrees d{std::vector<std::uint32_t>(r.nx(), 0),
              std::vector<std::uint32_t>(r.ny(), 0)};
    for (const auto& [i, j] : r.pairs()) {
        ++d.row[i];
        ++d.col[j];
    }
    return d;
}

}  // namespace

bool is_irreducible(const Correspondence& r) {
    const Degrees d = degrees(r);
    for (const auto& [i, j] : r.pairs())
        if (d.row[i] > 1 && d.col[j] > 1) return false;
    return true;
}

BlockDecomposition::BlockDecomposition(std::size_t nx, std::size_t ny,
                                       std::vector<Block> blocks)
    : nx_(nx), ny_(ny), blocks_(std::move(blocks)) {
    std::vector<IndexSet> xparts, yparts;
    xparts.reserve(blocks_.size());
    yparts.reserve(blocks_.size());
    for (const auto& b : blocks_) {
        if (std::min(b.xs.size(), b.ys.size()) != 1)
            fail("InvalidBlock", "every block needs a singleton side");
        xparts.push_back(b.xs);
        yparts.push_back(b.ys);
    }
    PartitionOf(nx_, xparts);  // validates disjointness and coverage
    PartitionOf(ny_, yparts);
}

Correspondence BlockDecomposition::induced() const {
    std::vector<IndexPair> pairs;
    for (const auto& b : blocks_)
        for (std::size_t i : b.xs)
            for (std::size_t j : b.ys)
                pairs.push_back({static_cast<std::uint32_t>(i),
                                 static_cast<std::uint32_t>(j)});
    return Correspondence(nx_, ny_, std::move(pairs));
}

BlockDecomposition decompose_blocks(const Correspondence& r) {
    if (!is_irreducible(r))
        fail("NotIrreducible", "only irreducible correspondences decompose");
    std::vector<IndexSet> image(r.nx()), preimage(r.ny());
    for (const auto& [i, j] : r.pairs()) {
        image[i].push_back(j);
        preimage[j].push_back(i);
    }
    std::vector<char> done_x(r.nx(), 0);
    std::vector<Block> blocks;
    for (std::size_t x = 0; x < r.nx(); ++x) {
        if (done_x[x]) continue;
        const std::size_t y = image[x].front();
        Block b{preimage[y], image[x]};  // R^{-1}(y) x R(x), Prop-3 block
        for (std::size_t i : b.xs) done_x[i] = 1;
        blocks.push_back(std::move(b));
    }
    return BlockDecomposition(r.nx(), r.ny(), std::move(blocks));
}

Correspondence reduce_to_irreducible(const Correspondence& r) {
    Degrees d = degrees(r);
    std::vector<std::vector<char>> present(r.nx(), std::vector<char>(r.ny(), 0));
    for (const auto& [i, j] : r.pairs()) present[i][j] = 1;

    auto removable = [&](std::size_t i, std::size_t j) {
        return d.row[i] > 1 && d.col[j] > 1;
    };
    auto remove = [&](std::size_t i, std::size_t j) {
        present[i][j] = 0;
        --d.row[i];
        --d.col[j];
    };

    // One ascending pass. Each pair first sheds its removable row and column
    // mates (keeping the earlier pair alive), and is dropped itself only when
    // that was not enough. Afterwards every surviving pair has a singleton
    // row or column, which later removals cannot undo.
    for (const auto& [x, y] : r.pairs()) {
        if (!present[x][y]) continue;
        for (std::uint32_t j = 0; j < r.ny() && d.row[x] > 1; ++j)
            if (j != y && present[x][j] && removable(x, j)) remove(x, j);
        for (std::uint32_t i = 0; i < r.nx() && d.col[y] > 1; ++i)
            if (i != x && present[i][y] && removable(i, y)) remove(i, y);
        if (removable(x, y)) remove(x, y);
    }

    std::vector<IndexPair> kept;
    for (const auto& [i, j] : r.pairs())
        if (present[i][j]) kept.push_back({i, j});
    return Correspondence(r.nx(), r.ny(), std::move(kept));
}

namespace {

struct Enumerator {
    std::size_t nx;
    std::size_t ny;
    const std::function<bool(const BlockDecomposition&)>& visit;

    std::vector<Block> blocks;
    std::vector<std::size_t> extensible;  // blocks with a singleton X side
    std::uint64_t used_x = 0;

    bool run() { return descend(0); }

    // Assigns Y-indices in increasing order. Each y either joins an existing
    // singleton-X block, opens a new singleton/singleton block on an unused x,
    // or becomes the singleton side of a block over >= 2 unused x's.
    bool descend(std::uint32_t y) {
        const std::size_t used = static_cast<std::size_t>(std::popcount(used_x));
        if (y == ny) {
            if (used != nx) return true;
            return visit(BlockDecomposition(nx, ny, blocks));
        }
        if (used == nx && extensible.empty()) return true;  // dead branch

        for (std::size_t bi : extensible) {
            blocks[bi].ys.push_back(y);
            if (!descend(y + 1)) return false;
            blocks[bi].ys.pop_back();
        }

        IndexSet unused;
        for (std::uint32_t x = 0; x < nx; ++x)
            if (!(used_x >> x & 1)) unused.push_back(x);

        for (std::size_t x : unused) {
            used_x |= std::uint64_t{1} << x;
            blocks.push_back(Block{{x}, {y}});
            extensible.push_back(blocks.size() - 1);
            if (!descend(y + 1)) return false;
            extensible.pop_back();
            blocks.pop_back();
            used_x &= ~(std::uint64_t{1} << x);
        }

        for (std::uint64_t mask = 3; mask < (std::uint64_t{1} << unused.size());
             ++mask) {
            if (std::popcount(mask) < 2) continue;
            Block b{{}, {y}};
            for (std::size_t k = 0; k < unused.size(); ++k)
                if (mask >> k & 1) {
                    b.xs.push_back(unused[k]);
                    used_x |= std::uint64_t{1} << unused[k];
                }
            blocks.push_back(std::move(b));
            if (!descend(y + 1)) return false;
            for (std::size_t x : blocks.back().xs)
                used_x &= ~(std::uint64_t{1} << x);
            blocks.pop_back();
        }
        return true;
    }
};

}  // namespace

bool for_each_irreducible(std::size_t nx, std::size_t ny,
                          const std::function<bool(const BlockDecomposition&)>& visit) {
    if (nx == 0 || ny == 0) fail("EmptyMatrix", "sizes must be >= 1");
    if (nx > 64) fail("TooLarge", "enumeration supports nx <= 64");
    Enumerator e{nx, ny, visit};
    return e.run();
}

std::vector<BlockDecomposition> enumerate_irreducible(std::size_t nx,
                                                      std::size_t ny) {
    std::vector<BlockDecomposition> out;
    for_each_irreducible(nx, ny, [&](const BlockDecomposition& b) {
        out.push_back(b);
        return true;
    });
    return out;
}

std::size_t count_irreducible(std::size_t nx, std::size_t ny) {
    std::size_t count = 0;
    for_each_irreducible(nx, ny, [&](const BlockDecomposition&) {
        ++count;
        return true;
    });
    return count;
}

double block_distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                        const BlockDecomposition& b) {
    if (b.nx() != x.size() || b.ny() != y.size())
        fail("SizeMismatch", "decomposition sizes do not match the spaces");
    const auto& blocks = b.blocks();
    double dis = 0.0;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i; j < blocks.size(); ++j) {
            const BlockRange rx = block_distances(x, blocks[i].xs, blocks[j].xs);
            const BlockRange ry = block_distances(y, blocks[i].ys, blocks[j].ys);
            dis = std::max(dis, std::max(rx.sup - ry.inf, ry.sup - rx.inf));
        }
    return dis;
}

}  // namespace ghtk
