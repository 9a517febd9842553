#include "taquin/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace taquin {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("partition must have at least one part");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(const std::string& text) { return Partition(parse_int_list(text)); }

int Partition::sum() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

bool Partition::is_strict() const {
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] >= parts[i - 1]) return false;
    return true;
}

std::string Partition::to_string() const { return join_ints(parts); }

Poset Poset::from_covers(int n, std::vector<std::pair<int, int>> covers,
                         std::vector<std::string> names,
                         std::vector<std::pair<int, int>> coords) {
    if (n <= 0) throw std::invalid_argument("poset size must be positive");
    if (!names.empty() && static_cast<int>(names.size()) != n)
        throw std::invalid_argument("names must be empty or have one entry per element");
    if (!coords.empty() && static_cast<int>(coords.size()) != n)
        throw std::invalid_argument("coords must be empty or have one entry per element");

    std::sort(covers.begin(), covers.end());
    for (std::size_t i = 0; i < covers.size(); ++i) {
        auto [a, b] = covers[i];
        if (a < 0 || a >= n || b < 0 || b >= n) {
            std::ostringstream msg;
            msg << "cover (" << a << "," << b << ") references an id outside 0.." << n - 1;
            throw std::invalid_argument(msg.str());
        }
        if (a == b) throw std::invalid_argument("cover relates an element to itself");
        if (i > 0 && covers[i] == covers[i - 1]) {
            std::ostringstream msg;
            msg << "duplicate cover pair (" << a << "," << b << ")";
            throw std::invalid_argument(msg.str());
        }
    }

    Poset p;
    p.n_ = n;
    p.covers_ = std::move(covers);
    p.names_ = std::move(names);
    p.coords_ = std::move(coords);
    p.lower_.assign(n, {});
    p.upper_.assign(n, {});
    for (auto [a, b] : p.covers_) {
        p.lower_[b].push_back(a);
        p.upper_[a].push_back(b);
    }

    // Transitive closure of the cover digraph.
    p.less_.assign(n, std::vector<char>(n, 0));
    for (auto [a, b] : p.covers_) p.less_[a][b] = 1;
    for (int k = 0; k < n; ++k)
        for (int a = 0; a < n; ++a)
            if (p.less_[a][k])
                for (int b = 0; b < n; ++b)
                    if (p.less_[k][b]) p.less_[a][b] = 1;

    for (int v = 0; v < n; ++v)
        if (p.less_[v][v]) throw std::invalid_argument("cycle detected in cover relation");

    for (auto [a, b] : p.covers_)
        for (int c = 0; c < n; ++c)
            if (p.less_[a][c] && p.less_[c][b]) {
                std::ostringstream msg;
                msg << "redundant cover (" << a << "," << b << "): implied via " << c;
                throw std::invalid_argument(msg.str());
            }

    return p;
}

std::string Poset::display_name(int v) const {
    if (has_names()) return names_[v];
    return "e" + std::to_string(v);
}

std::optional<int> Poset::element_at(int row, int col) const {
    for (int v = 0; v < n_; ++v)
        if (coords_[v] == std::make_pair(row, col)) return v;
    return std::nullopt;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (lower_[v].empty()) out.push_back(v);
    return out;
}

std::vector<int> Poset::maximal_elements() const {
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (upper_[v].empty()) out.push_back(v);
    return out;
}

int Poset::down_set_size(int v) const {
    int count = 0;
    for (int y = 0; y < n_; ++y)
        if (leq(y, v)) ++count;
    return count;
}

int Poset::longest_chain() const {
    Labeling order = default_linear_extension(*this);
    std::vector<int> by_rank(n_);
    for (int v = 0; v < n_; ++v) by_rank[order[v] - 1] = v;
    std::vector<int> len(n_, 1);
    int best = 0;
    for (int v : by_rank) {
        for (int u : lower_[v]) len[v] = std::max(len[v], len[u] + 1);
        best = std::max(best, len[v]);
    }
    return best;
}

std::vector<std::pair<int, int>> Poset::incomparable_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b = a + 1; b < n_; ++b)
            if (incomparable(a, b)) out.emplace_back(a, b);
    return out;
}

namespace {

std::string box_name(int row, int col) {
    return "B_{" + std::to_string(row) + "," + std::to_string(col) + "}";
}

// Grid poset on a set of diagram cells: the cell to the right and the cell
// below are both covered by (i.e. smaller than) the current cell.
Poset poset_from_cells(std::vector<std::pair<int, int>> cells) {
    std::sort(cells.begin(), cells.end());
    std::map<std::pair<int, int>, int> id;
    for (std::size_t v = 0; v < cells.size(); ++v) id[cells[v]] = static_cast<int>(v);

    const int n = static_cast<int>(cells.size());
    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < cells.size(); ++v) {
        auto [row, col] = cells[v];
        names.push_back(box_name(row, col));
        if (auto it = id.find({row, col + 1}); it != id.end())
            covers.emplace_back(it->second, static_cast<int>(v));
        if (auto it = id.find({row + 1, col}); it != id.end())
            covers.emplace_back(it->second, static_cast<int>(v));
    }
    return Poset::from_covers(n, std::move(covers), std::move(names), std::move(cells));
}

}  // namespace

Poset young(const Partition& shape) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < shape.rows(); ++i)
        for (int j = 0; j < shape.parts[i]; ++j) cells.emplace_back(i + 1, j + 1);
    return poset_from_cells(std::move(cells));
}

Poset shifted_young(const Partition& shape) {
    if (!shape.is_strict())
        throw std::invalid_argument("shifted shape requires a strictly decreasing partition");
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < shape.rows(); ++i)
        for (int j = 0; j < shape.parts[i]; ++j) cells.emplace_back(i + 1, i + 1 + j);
    return poset_from_cells(std::move(cells));
}

Poset double_tailed_diamond(int m, int n) {
    if (m < 2 || n < 2) throw std::invalid_argument("double-tailed diamond requires m, n >= 2");
    std::vector<std::pair<int, int>> cells;
    for (int j = 1; j <= m; ++j) cells.emplace_back(1, j);
    for (int j = m - 1; j <= m + n - 2; ++j) cells.emplace_back(2, j);
    return poset_from_cells(std::move(cells));
}

Poset inset(int k, const Partition& shape) {
    if (k < 2) throw std::invalid_argument("inset requires k >= 2");
    if (shape.rows() != k)
        throw std::invalid_argument("inset requires the shape to have exactly k parts");
    // Cells of the shape sit at columns >= 1; the k-1 added first-row boxes at
    // columns 2-k..0 and the added second-row box at column 0.
    std::vector<std::pair<int, int>> cells;
    for (int j = 2 - k; j <= 0; ++j) cells.emplace_back(1, j);
    cells.emplace_back(2, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 1; j <= shape.parts[i]; ++j) cells.emplace_back(i + 1, j);
    return poset_from_cells(std::move(cells));
}

Poset add_maximum(const Poset& p) {
    const int n = p.size();
    std::vector<std::pair<int, int>> covers = p.covers();
    for (int v : p.maximal_elements()) covers.emplace_back(v, n);
    std::vector<std::string> names;
    if (p.has_names()) {
        for (int v = 0; v < n; ++v) names.push_back(p.name(v));
        names.push_back("max");
    }
    return Poset::from_covers(n + 1, std::move(covers), std::move(names));
}

Interval interval(const Poset& p, int w, int z) {
    if (w < 0 || w >= p.size() || z < 0 || z >= p.size())
        throw std::invalid_argument("interval endpoints out of range");
    if (!p.leq(w, z)) throw std::invalid_argument("interval requires w <= z");
    std::vector<int> members;
    for (int y = 0; y < p.size(); ++y)
        if (p.leq(w, y) && p.leq(y, z)) members.push_back(y);

    std::vector<int> local(p.size(), -1);
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);

    // An interval preserves betweenness, so the induced covers are exactly the
    // parent covers with both endpoints inside.
    std::vector<std::pair<int, int>> covers;
    for (auto [a, b] : p.covers())
        if (local[a] >= 0 && local[b] >= 0) covers.emplace_back(local[a], local[b]);

    std::vector<std::string> names;
    if (p.has_names())
        for (int y : members) names.push_back(p.name(y));

    Interval result;
    result.poset = Poset::from_covers(static_cast<int>(members.size()), std::move(covers), std::move(names));
    result.to_parent = std::move(members);
    return result;
}

std::optional<std::pair<int, int>> classify_double_tailed(const Poset& p) {
    auto pairs = p.incomparable_pairs();
    if (pairs.size() != 1) return std::nullopt;
    const int l = pairs[0].first;
    int above = 0, below = 0;
    for (int c = 0; c < p.size(); ++c) {
        if (p.less(l, c)) ++above;
        if (p.less(c, l)) ++below;
    }
    const int m = above + 1, n = below + 1;
    if (m < 2 || n < 2 || m + n != p.size()) return std::nullopt;
    return std::make_pair(m, n);
}

bool is_dual_linear_extension(const Poset& p, const Labeling& iota) {
    if (static_cast<int>(iota.size()) != p.size() || !is_permutation_one_line(iota)) return false;
    for (auto [a, b] : p.covers())
        if (iota[a] <= iota[b]) return false;
    return true;
}

bool is_linear_extension(const Poset& p, const Labeling& sigma) {
    if (static_cast<int>(sigma.size()) != p.size() || !is_permutation_one_line(sigma)) return false;
    for (auto [a, b] : p.covers())
        if (sigma[a] >= sigma[b]) return false;
    return true;
}

namespace {

Labeling greedy_linear_extension(const Poset& p, bool prefer_small_id) {
    const int n = p.size();
    std::vector<int> pending(n);
    std::vector<char> placed(n, 0);
    for (int v = 0; v < n; ++v) pending[v] = static_cast<int>(p.lower_covers(v).size());
    Labeling sigma(n, 0);
    for (int next = 1; next <= n; ++next) {
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[v] || pending[v] != 0) continue;
            if (pick < 0 || (prefer_small_id ? v < pick : v > pick)) pick = v;
        }
        placed[pick] = 1;
        sigma[pick] = next;
        for (int u : p.upper_covers(pick)) --pending[u];
    }
    return sigma;
}

}  // namespace

Labeling default_linear_extension(const Poset& p) { return greedy_linear_extension(p, true); }
Labeling alternate_linear_extension(const Poset& p) { return greedy_linear_extension(p, false); }

void for_each_dual_linear_extension(const Poset& p, const std::function<bool(const Labeling&)>& visit) {
    const int n = p.size();
    Labeling iota(n, 0);
    std::vector<int> pending(n);
    std::vector<char> assigned(n, 0);
    for (int v = 0; v < n; ++v) pending[v] = static_cast<int>(p.lower_covers(v).size());

    // Label n goes to a minimal element, then n-1 to a minimal element of the
    // rest, and so on; candidates are tried in increasing id order.
    std::function<bool(int)> place = [&](int label) -> bool {
        if (label == 0) return visit(iota);
        for (int v = 0; v < n; ++v) {
            if (assigned[v] || pending[v] != 0) continue;
            assigned[v] = 1;
            iota[v] = label;
            for (int u : p.upper_covers(v)) --pending[u];
            bool keep_going = place(label - 1);
            for (int u : p.upper_covers(v)) ++pending[u];
            assigned[v] = 0;
            if (!keep_going) return false;
        }
        return true;
    };
    place(n);
}

std::vector<Labeling> all_dual_linear_extensions(const Poset& p) {
    std::vector<Labeling> out;
    for_each_dual_linear_extension(p, [&](const Labeling& iota) {
        out.push_back(iota);
        return true;
    });
    return out;
}

BigInt count_dual_linear_extensions(const Poset& p) {
    BigInt count = 0;
    for_each_dual_linear_extension(p, [&](const Labeling&) {
        ++count;
        return true;
    });
    return count;
}

}  // namespace taquin
