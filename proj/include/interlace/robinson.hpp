#pragma once

#include <optional>
#include <string>
#include <vector>

#include "interlace/lattice2d.hpp"

namespace interlace {

// SW: the L-bend sits in the tile's south-west corner, arms extending north
// and east. The other three are the same shape rotated.
enum class CornerMark : std::uint8_t { blank = 0, sw, se, nw, ne };

// Labels ".", "SW", "SE", "NW", "NE"; symbol ids follow CornerMark order.
const Alphabet& robinson_alphabet();
Symbol to_symbol(CornerMark m);
CornerMark to_mark(Symbol s);
CornerMark to_mark(const Cell& c);
std::string to_string(CornerMark m);

// 2x2 periodic tiling of decorated cross tiles. (0, 0) holds SW; the other
// three cells are the unique assignment found by search_robinson_assignments.
PeriodicTiling2D robinson_A();
PeriodicTiling2D robinson_blank();

// Every assignment of {SE, NW, NE} to (1,0), (0,1), (1,1) (with SW at the
// origin) whose limit patch of `radius` passes verify_hierarchy up to
// `max_level`.
std::vector<PeriodicTiling2D> search_robinson_assignments(Index radius = 31, int max_level = 2);

// B(∩A∩B)^rounds on [-radius, radius]^2; nullopt means the limit.
Patch2D generate_robinson(Index radius, std::optional<int> rounds = std::nullopt);
Patch2D generate_robinson_with(const PeriodicTiling2D& a, Index radius, std::optional<int> rounds = std::nullopt);

// Level-k cross positions: (2^k (2a+1), 2^k (2b+1)) inside the window.
std::vector<Index2> cross_positions(int level, Interval xs, Interval ys);

// Order of the four quadruple corners: lower-left, lower-right, upper-left, upper-right.
enum class Chirality { inward, outward };
std::string to_string(Chirality c);

struct HierarchyViolation {
    Index2 position;
    CornerMark expected;
    CornerMark found;
};

struct HierarchyReport {
    // centers[k]: quadruple centers checked at level k.
    std::vector<std::vector<Index2>> centers;
    std::vector<HierarchyViolation> violations;
    Chirality chirality = Chirality::inward;

    bool ok() const { return violations.empty(); }
};

// Checks every level-k quadruple (k <= max_level) around centers
// (2^(k+2) m + 2^(k+1), 2^(k+2) n + 2^(k+1)) whose corners lie in the patch:
// the corners must carry the four distinct marks in one global chirality.
// Cells with v2(x) != v2(y) must be blank.
HierarchyReport verify_hierarchy(const Patch2D& patch, int max_level);

}  // namespace interlace
