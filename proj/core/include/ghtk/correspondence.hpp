#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "ghtk/metric_space.hpp"

namespace ghtk {

using IndexPair = std::pair<std::uint32_t, std::uint32_t>;

/// A nonempty subset of {0..nx-1} x {0..ny-1}, stored as a sorted pair list.
class Relation {
public:
    Relation(std::size_t nx, std::size_t ny, std::vector<IndexPair> pairs);

    std::size_t nx() const noexcept { return nx_; }
    std::size_t ny() const noexcept { return ny_; }
    const std::vector<IndexPair>& pairs() const noexcept { return pairs_; }

    bool operator==(const Relation& other) const = default;

private:
    std::size_t nx_;
    std::size_t ny_;
    std::vector<IndexPair> pairs_;  // sorted lexicographically, deduplicated
};

/// true iff both projections of the relation are surjective.
bool is_correspondence(const Relation& sigma);

/// A relation with full projections (a surjective multivalued map both ways).
class Correspondence : public Relation {
public:
    explicit Correspondence(Relation rel);
    Correspondence(std::size_t nx, std::size_t ny, std::vector<IndexPair> pairs)
        : Correspondence(Relation(nx, ny, std::move(pairs))) {}

    static Correspondence identity(std::size_t n);
    static Correspondence full(std::size_t nx, std::size_t ny);
};

/// dis(sigma): max over pairs of pairs of |d_X(x,x') - d_Y(y,y')|.
double distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                  const Relation& sigma);

/// true iff every pair of R has a singleton image or pre-image, i.e. R is
/// inclusion-minimal among correspondences.
bool is_irreducible(const Correspondence& r);

struct Block {
    IndexSet xs;
    IndexSet ys;
};

/// An irreducible correspondence stored as matched partition blocks: the
/// X-blocks partition X, the Y-blocks partition Y, every block has a
/// singleton side, and the union of X_i x Y_i is the correspondence.
class BlockDecomposition {
public:
    BlockDecomposition(std::size_t nx, std::size_t ny, std::vector<Block> blocks);

    std::size_t nx() const noexcept { return nx_; }
    std::size_t ny() const noexcept { return ny_; }
    const std::vector<Block>& blocks() const noexcept { return blocks_; }

    Correspondence induced() const;

private:
    std::size_t nx_;
    std::size_t ny_;
    std::vector<Block> blocks_;
};

/// The unique block decomposition of an irreducible correspondence,
/// blocks ordered by smallest X index. Throws NotIrreducible.
BlockDecomposition decompose_blocks(const Correspondence& r);

/// A deterministic irreducible sub-correspondence of R. Pairs are
/// processed in ascending order; each pair sheds its removable row and
/// column mates first and is dropped itself only if still reducible, so
/// small pairs survive when possible (full 2x2 reduces to the identity).
Correspondence reduce_to_irreducible(const Correspondence& r);

/// Visits every irreducible correspondence between index sets of the given
/// sizes exactly once, in the canonical enumeration order. The visitor
/// returns false to stop early; the function returns false if stopped.
bool for_each_irreducible(std::size_t nx, std::size_t ny,
                          const std::function<bool(const BlockDecomposition&)>& visit);

/// Eager form of the enumeration; intended for small sizes.
std::vector<BlockDecomposition> enumerate_irreducible(std::size_t nx, std::size_t ny);

std::size_t count_irreducible(std::size_t nx, std::size_t ny);

/// dis R from the block decomposition:
/// sup over i,j of { |X_iX_j|' - |Y_iY_j|, |Y_iY_j|' - |X_iX_j| }.
/// Equals distortion() of the induced pair set.
double block_distortion(const FiniteMetricSpace& x, const FiniteMetricSpace& y,
                        const BlockDecomposition& b);

}  // namespace ghtk
