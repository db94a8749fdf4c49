#include "xxz/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace xxz {

Site stick_site(int k) {
    // k = 3m + r, r in {0,1,2} (floor division); partial steps are e1, e1+e2
    int m = (k >= 0) ? k / 3 : -((-k + 2) / 3);
    int r = k - 3 * m;
    Site s{m, m, m};
    if (r >= 1) s.x1 += 1;
    if (r >= 2) s.x2 += 1;
    return s;
}

std::pair<double, double> transverse(const Site& s, double R) {
    // integer numerators first so the (1,1,1)-translation invariance is exact
    int n1 = 2 * s.x1 - s.x2 - s.x3;
    int n2 = s.x2 - s.x3;
    return {n1 / (std::sqrt(6.0) * R), n2 / (std::sqrt(2.0) * R)};
}

Volume Volume::stick(int L) { return cylinder({Site{0, 0, 0}}, L); }

Volume Volume::cylinder(std::vector<Site> base, int L) {
    if (L < 0 || L % 2 != 0)
        throw std::invalid_argument("Volume: length L must be even and non-negative");
    if (base.empty()) throw std::invalid_argument("Volume: empty base");
    for (const Site& g : base)
        if (g.level() != 0)
            throw std::invalid_argument("Volume: base site off the l(x)=0 plane");
    std::set<Site> uniq(base.begin(), base.end());
    if (uniq.size() != base.size())
        throw std::invalid_argument("Volume: duplicate base site");

    Volume v;
    v.L_ = L;
    v.base_ = std::move(base);
    v.sites_.reserve(static_cast<std::size_t>(L + 1) * v.base_.size());
    for (int l = -L / 2; l <= L / 2; ++l) {
        Site step = stick_site(l);
        for (const Site& g : v.base_) v.sites_.push_back(g + step);
    }
    for (long i = 0; i < static_cast<long>(v.sites_.size()); ++i)
        v.index_.emplace(v.sites_[i], i);
    if (v.index_.size() != v.sites_.size())
        throw std::invalid_argument("Volume: overlapping sticks");

    static const Site kSteps[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (const Site& x : v.sites_)
        for (const Site& e : kSteps) {
            Site y = x + e;
            if (v.index_.count(y)) v.bonds_.push_back({x, y});
        }
    return v;
}

std::vector<int> Volume::levels() const {
    std::vector<int> out;
    out.reserve(sites_.size());
    for (const Site& s : sites_) out.push_back(s.level());
    return out;
}

std::vector<Site> Volume::plane(int l) const {
    if (l < -L_ / 2 || l > L_ / 2) throw std::out_of_range("Volume::plane: level out of range");
    long off = static_cast<long>(l + L_ / 2) * area();
    return {sites_.begin() + off, sites_.begin() + off + area()};
}

std::vector<Volume> Volume::sticks() const {
    std::vector<Volume> out;
    out.reserve(base_.size());
    for (const Site& g : base_) out.push_back(cylinder({g}, L_));
    return out;
}

std::vector<Bond> Volume::bonds_at_level(int l) const {
    if (l < -L_ / 2 || l > L_ / 2 - 1)
        throw std::out_of_range("Volume::bonds_at_level: level out of range");
    std::vector<Bond> out;
    for (const Bond& b : bonds_)
        if (b.a.level() == l) out.push_back(b);
    return out;
}

long Volume::site_index(const Site& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) throw std::out_of_range("Volume::site_index: site not in volume");
    return it->second;
}

bool Volume::contains_volume(const Volume& sub) const {
    for (const Site& s : sub.sites())
        if (!contains(s)) return false;
    return true;
}

std::vector<Site> disk_base(double R) {
    if (!(R > 0)) throw std::invalid_argument("disk_base: R must be positive");
    // level-0 sites (a, b, -a-b); y1^2+y2^2 <= 1 becomes 3a^2 + (a+2b)^2 <= 2R^2
    double rr = 2.0 * R * R;
    int amax = static_cast<int>(std::floor(std::sqrt(rr / 3.0)));
    std::vector<Site> out;
    for (int a = -amax; a <= amax; ++a) {
        double rem = rr - 3.0 * static_cast<double>(a) * a;
        if (rem < 0) continue;
        double w = std::sqrt(rem);
        int blo = static_cast<int>(std::ceil((-w - a) / 2.0 - 1e-12));
        int bhi = static_cast<int>(std::floor((w - a) / 2.0 + 1e-12));
        for (int b = blo; b <= bhi; ++b) {
            double m = 3.0 * a * a + static_cast<double>(a + 2 * b) * (a + 2 * b);
            if (m <= rr) out.push_back({a, b, -a - b});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Site> triangle_base() {
    return {Site{0, 0, 0}, Site{1, -1, 0}, Site{1, 0, -1}};
}

std::vector<Site> block_base(int A) {
    if (A <= 0) throw std::invalid_argument("block_base: A must be positive");
    int w = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(A))));
    std::vector<Site> out;
    out.reserve(A);
    for (int b = 0; static_cast<int>(out.size()) < A; ++b)
        for (int a = 0; a < w && static_cast<int>(out.size()) < A; ++a)
            out.push_back({a, b, -a - b});
    return out;
}

double voronoi_cell_radius() {
    // circumcenter of the lattice triangle {0, v1, v2} where v1, v2 are the
    // projections of e1-e2 and e1-e3 (unit scale, neighbor distance sqrt(2))
    auto [p1x, p1y] = transverse(Site{1, -1, 0}, 1.0);
    auto [p2x, p2y] = transverse(Site{1, 0, -1}, 1.0);
    // solve |c|^2 = |c-p1|^2 = |c-p2|^2
    double d1 = 0.5 * (p1x * p1x + p1y * p1y);
    double d2 = 0.5 * (p2x * p2x + p2y * p2y);
    double det = p1x * p2y - p1y * p2x;
    double cx = (d1 * p2y - d2 * p1y) / det;
    double cy = (p1x * d2 - p2x * d1) / det;
    return std::sqrt(cx * cx + cy * cy);
}

double lattice_cell_area() {
    auto [p1x, p1y] = transverse(Site{1, -1, 0}, 1.0);
    auto [p2x, p2y] = transverse(Site{1, 0, -1}, 1.0);
    return std::abs(p1x * p2y - p1y * p2x);
}

void save_sites(std::ostream& os, const std::vector<Site>& sites) {
    for (const Site& s : sites) os << s.x1 << ' ' << s.x2 << ' ' << s.x3 << '\n';
}

std::vector<Site> load_sites(std::istream& is) {
    std::vector<Site> out;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        Site s;
        if (!(ls >> s.x1 >> s.x2 >> s.x3)) throw std::runtime_error("load_sites: bad line: " + line);
        out.push_back(s);
    }
    return out;
}

}  // namespace xxz
