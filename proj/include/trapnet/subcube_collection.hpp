#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "trapnet/core.hpp"

namespace trapnet {

/// A duplicate-free set of subcubes of B^n, kept sorted.
class SubcubeCollection {
public:
    explicit SubcubeCollection(int n = 1) : n_(n) { check_dimension(n); }
    SubcubeCollection(int n, std::vector<Subcube> members) : n_(n), members_(std::move(members)) {
        check_dimension(n);
        for (const auto& m : members_) require_same_dimension(n_, m.n());
        normalize();
    }
    SubcubeCollection(int n, std::initializer_list<Subcube> members)
        : SubcubeCollection(n, std::vector<Subcube>(members)) {}

    /// Parses star notation: one subcube per line, '#' comments and blank lines skipped.
    static SubcubeCollection parse(int n, std::string_view text) {
        std::vector<Subcube> members;
        std::size_t pos = 0;
        int line_no = 0;
        while (pos <= text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(pos, end - pos);
            ++line_no;
            pos = end + 1;
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
                line.remove_suffix(1);
            while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
            if (line.empty()) continue;
            if (static_cast<int>(line.size()) != n)
                throw std::invalid_argument("line " + std::to_string(line_no) + ": expected width " +
                                            std::to_string(n));
            members.push_back(Subcube::parse(line));
        }
        return SubcubeCollection(n, std::move(members));
    }

    [[nodiscard]] int n() const { return n_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] const std::vector<Subcube>& members() const { return members_; }
    [[nodiscard]] auto begin() const { return members_.begin(); }
    [[nodiscard]] auto end() const { return members_.end(); }

    [[nodiscard]] bool contains(const Subcube& cube) const {
        return std::binary_search(members_.begin(), members_.end(), cube);
    }

    void insert(const Subcube& cube) {
        require_same_dimension(n_, cube.n());
        auto it = std::lower_bound(members_.begin(), members_.end(), cube);
        if (it == members_.end() || *it != cube) members_.insert(it, cube);
    }

    [[nodiscard]] std::string str() const {
        std::string out;
        for (const auto& m : members_) out += m.str() + "\n";
        return out;
    }

    friend bool operator==(const SubcubeCollection&, const SubcubeCollection&) = default;

private:
    void normalize() {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    int n_;
    std::vector<Subcube> members_;
};

}  // namespace trapnet
