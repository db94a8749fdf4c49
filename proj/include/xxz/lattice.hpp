#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace xxz {

/// A point of Z^3. The level l(x) = x1+x2+x3 is the signed distance of its
/// plane from the origin along the 111 axis.
struct Site {
    int x1 = 0, x2 = 0, x3 = 0;

    int level() const { return x1 + x2 + x3; }

    friend bool operator==(const Site&, const Site&) = default;
    friend auto operator<=>(const Site&, const Site&) = default;

    Site operator+(const Site& o) const { return {x1 + o.x1, x2 + o.x2, x3 + o.x3}; }
    Site operator-(const Site& o) const { return {x1 - o.x1, x2 - o.x2, x3 - o.x3}; }
};

struct SiteHash {
    std::size_t operator()(const Site& s) const {
        // three ints folded into one 64-bit key
        std::uint64_t h = static_cast<std::uint32_t>(s.x1);
        h = h * 0x9e3779b97f4a7c15ull + static_cast<std::uint32_t>(s.x2);
        h = h * 0x9e3779b97f4a7c15ull + static_cast<std::uint32_t>(s.x3);
        return static_cast<std::size_t>(h ^ (h >> 32));
    }
};

/// Oriented bond: |a-b| = 1 and level(b) = level(a)+1.
struct Bond {
    Site a, b;
    friend bool operator==(const Bond&, const Bond&) = default;
};

/// k-th vertex of the infinite stick through the origin, l(vertex) = k.
/// The stick advances one unit step per level, cycling e1, e2, e3.
Site stick_site(int k);

/// Rescaled transverse coordinates (y1, y2) of a site, perpendicular to the
/// 111 axis, with linear scale R. Invariant under x -> x + (1,1,1).
std::pair<double, double> transverse(const Site& s, double R);

/// Cylindrical volume: base Gamma in the l(x)=0 plane, extended by the finite
/// stick of length L+1. |sites| = (L+1)*A, planes of constant level each hold
/// A sites.
class Volume {
public:
    static Volume stick(int L);
    static Volume cylinder(std::vector<Site> base, int L);

    int length() const { return L_; }
    int area() const { return static_cast<int>(base_.size()); }
    long size() const { return static_cast<long>(sites_.size()); }

    const std::vector<Site>& base() const { return base_; }
    const std::vector<Site>& sites() const { return sites_; }
    const std::vector<Bond>& bonds() const { return bonds_; }

    std::vector<int> levels() const;
    std::vector<Site> plane(int l) const;
    std::vector<Volume> sticks() const;
    std::vector<Bond> bonds_at_level(int l) const;

    bool contains(const Site& s) const { return index_.count(s) != 0; }
    long site_index(const Site& s) const;
    bool contains_volume(const Volume& sub) const;

private:
    Volume() = default;
    int L_ = 0;
    std::vector<Site> base_;
    std::vector<Site> sites_;  // ordered by (level, base index)
    std::vector<Bond> bonds_;  // ordered by (site order, e1,e2,e3)
    std::unordered_map<Site, long, SiteHash> index_;
};

/// All level-0 sites whose transverse coordinates at scale R lie in the
/// closed unit disk. A_R grows like pi R^2 / sqrt(3).
std::vector<Site> disk_base(double R);

/// The three-site base {0, e1-e2, e1-e3}.
std::vector<Site> triangle_base();

/// A level-0 base with exactly A sites, filled row by row from a square block.
std::vector<Site> block_base(int A);

/// Circumradius of the Voronoi cell of the projected (unit-scale) triangular
/// lattice, computed from the cell geometry. Equals sqrt(2/3).
double voronoi_cell_radius();

/// Area of the fundamental cell of the projected lattice (= sqrt(3)).
double lattice_cell_area();

// plain text format, one site per line "x1 x2 x3"
void save_sites(std::ostream& os, const std::vector<Site>& sites);
std::vector<Site> load_sites(std::istream& is);

}  // namespace xxz
