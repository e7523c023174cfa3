#ifndef SSMTHOM_PARTITION_HPP
#define SSMTHOM_PARTITION_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssmthom {

// Integer partition with positive parts stored weakly decreasing. The empty
// partition is the canonical key for the degree-l symbol s_0 (= s_emptyset).
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p <= 0) throw std::invalid_argument("Partition: parts must be positive");
        std::sort(parts_.rbegin(), parts_.rend());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t length() const { return parts_.size(); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // Canonical ordering: by weight, then lexicographically on the decreasing
    // part tuple. Within one weight this puts (1,1,..,1) first and (w) last,
    // matching the order the s-symbols are listed in.
    friend bool operator<(const Partition& a, const Partition& b) {
        int wa = a.weight(), wb = b.weight();
        if (wa != wb) return wa < wb;
        return a.parts_ < b.parts_;
    }
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

    // Digit string used in symbol names: () -> "0", (2,1) -> "21". Parts of
    // ten or more are dot-separated to stay unambiguous.
    std::string digits() const {
        if (parts_.empty()) return "0";
        bool wide = std::any_of(parts_.begin(), parts_.end(), [](int p) { return p > 9; });
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (wide && i > 0) s += ".";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

private:
    std::vector<int> parts_;
};

// All partitions of weight 0..max_weight in canonical order.
std::vector<Partition> partitions_up_to(int max_weight);

}  // namespace ssmthom

#endif
