#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace pbe {

// Sorted, duplicate-free set of small integer ids. The tag keeps vertex sets
// and clique-index sets from being mixed up.
template <class Tag>
class IdSet {
public:
    using value_type = int;
    using const_iterator = std::vector<int>::const_iterator;

    IdSet() = default;
    IdSet(std::initializer_list<int> ids) : ids_(ids) { normalize(); }
    explicit IdSet(std::vector<int> ids) : ids_(std::move(ids)) { normalize(); }

    bool contains(int id) const { return std::binary_search(ids_.begin(), ids_.end(), id); }

    void insert(int id) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        if (it == ids_.end() || *it != id) ids_.insert(it, id);
    }

    void erase(int id) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        if (it != ids_.end() && *it == id) ids_.erase(it);
    }

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    int front() const { return ids_.front(); }
    int back() const { return ids_.back(); }
    const_iterator begin() const { return ids_.begin(); }
    const_iterator end() const { return ids_.end(); }
    const std::vector<int>& ids() const { return ids_; }

    // Lexicographic over the sorted member lists.
    friend auto operator<=>(const IdSet&, const IdSet&) = default;
    friend bool operator==(const IdSet&, const IdSet&) = default;

private:
    void normalize() {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    std::vector<int> ids_;
};

template <class Tag>
IdSet<Tag> set_union(const IdSet<Tag>& a, const IdSet<Tag>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return IdSet<Tag>(std::move(out));
}

template <class Tag>
IdSet<Tag> set_intersection(const IdSet<Tag>& a, const IdSet<Tag>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return IdSet<Tag>(std::move(out));
}

template <class Tag>
IdSet<Tag> set_difference(const IdSet<Tag>& a, const IdSet<Tag>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return IdSet<Tag>(std::move(out));
}

template <class Tag>
bool is_subset(const IdSet<Tag>& a, const IdSet<Tag>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

template <class Tag>
bool intersects(const IdSet<Tag>& a, const IdSet<Tag>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return true;
        if (*i < *j) ++i; else ++j;
    }
    return false;
}

template <class Tag>
std::string to_string(const IdSet<Tag>& s) {
    std::string out = "{";
    for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) out += ",";
        out += std::to_string(*it);
    }
    return out + "}";
}

using VertexSet = IdSet<struct VertexTag>;
// Clique indices are 0-based internally; reports add one.
using CliqueSet = IdSet<struct CliqueTag>;

}  // namespace pbe
