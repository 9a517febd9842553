#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taquin/common.hpp"

namespace taquin {

// Integer partition: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);
    static Partition parse(const std::string& text);  // "3,3,2,1"

    int rows() const { return static_cast<int>(parts.size()); }
    int sum() const;
    bool is_strict() const;
    std::string to_string() const;
};

// Finite poset on elements {0..n-1} given by its cover relation (a,b): a is
// covered by b, i.e. a < b with nothing in between. Construction validates
// acyclicity and that the covers form a transitive reduction.
class Poset {
public:
    Poset() = default;

    static Poset from_covers(int n, std::vector<std::pair<int, int>> covers,
                             std::vector<std::string> names = {},
                             std::vector<std::pair<int, int>> coords = {});

    int size() const { return n_; }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const std::vector<int>& lower_covers(int v) const { return lower_[v]; }
    const std::vector<int>& upper_covers(int v) const { return upper_[v]; }

    bool less(int a, int b) const { return less_[a][b] != 0; }
    bool leq(int a, int b) const { return a == b || less(a, b); }
    bool incomparable(int a, int b) const { return a != b && !less(a, b) && !less(b, a); }

    bool has_names() const { return !names_.empty(); }
    const std::string& name(int v) const { return names_[v]; }
    std::string display_name(int v) const;  // name(v) or "e<v>"

    // Box coordinates (row, col) attached by the diagram families; empty otherwise.
    bool has_coords() const { return !coords_.empty(); }
    std::pair<int, int> coord(int v) const { return coords_[v]; }
    std::optional<int> element_at(int row, int col) const;

    std::vector<int> minimal_elements() const;
    std::vector<int> maximal_elements() const;
    int down_set_size(int v) const;  // #{y : y <= v}
    int longest_chain() const;       // number of elements on a longest chain
    std::vector<std::pair<int, int>> incomparable_pairs() const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> covers_;
    std::vector<std::string> names_;
    std::vector<std::pair<int, int>> coords_;
    std::vector<std::vector<int>> lower_, upper_;
    std::vector<std::vector<char>> less_;  // less_[a][b]: a < b
};

// Diagram families. Orientation throughout: the top-left diagram cell is the
// poset maximum, so standard fillings coincide with dual linear extensions.
Poset young(const Partition& shape);
Poset shifted_young(const Partition& shape);           // requires strict shape
Poset double_tailed_diamond(int m, int n);             // m, n >= 2
Poset inset(int k, const Partition& shape);            // k >= 2, shape has k parts
Poset add_maximum(const Poset& p);

// Induced subposet {y : w <= y <= z} with ids remapped; to_parent maps back.
struct Interval {
    Poset poset;
    std::vector<int> to_parent;
};
Interval interval(const Poset& p, int w, int z);

// Recognizes double-tailed diamonds structurally: exactly one incomparable
// pair with chains of m-1 elements above and n-1 below. Returns (m, n).
std::optional<std::pair<int, int>> classify_double_tailed(const Poset& p);

bool is_dual_linear_extension(const Poset& p, const Labeling& iota);
bool is_linear_extension(const Poset& p, const Labeling& sigma);

// Some linear extension (minimal elements first, smallest id first).
Labeling default_linear_extension(const Poset& p);
// A second deterministic linear extension (largest id first among candidates).
Labeling alternate_linear_extension(const Poset& p);

// Enumerates every dual linear extension exactly once, in the deterministic
// order given by assigning labels n, n-1, ..., 1 to minimal remaining
// elements, candidates tried in increasing id order. The visitor returns
// false to stop early.
void for_each_dual_linear_extension(const Poset& p, const std::function<bool(const Labeling&)>& visit);
std::vector<Labeling> all_dual_linear_extensions(const Poset& p);
BigInt count_dual_linear_extensions(const Poset& p);

}  // namespace taquin
