#ifndef RIESZKIT_PARTITION_HPP
#define RIESZKIT_PARTITION_HPP

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rieszkit {

/// Non-increasing tuple of nonnegative integers. Trailing zeros are kept out
/// of the canonical form; part(i) reads as zero past the end.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be non-increasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }

    static Partition parse(const std::string& csv) {
        std::vector<int> parts;
        std::stringstream ss(csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            parts.push_back(std::stoi(tok));
        }
        return Partition(parts);
    }

    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < length() ? parts_[i] : 0; }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    std::vector<int> padded(int m) const {
        std::vector<int> out(m, 0);
        for (int i = 0; i < m && i < length(); ++i) out[i] = parts_[i];
        return out;
    }

    /// Elementwise sum (the weight addition used by the gamma identities).
    friend Partition operator+(const Partition& a, const Partition& b) {
        std::vector<int> out(std::max(a.length(), b.length()));
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = a.part(static_cast<int>(i)) + b.part(static_cast<int>(i));
        return Partition(out);
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    std::string to_string() const {
        std::string out = "(";
        for (int i = 0; i < length(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts_[i]);
        }
        return out + ")";
    }

  private:
    std::vector<int> parts_;
};

/// All partitions of t into at most max_parts parts, reverse-lexicographic
/// ((t) first, the flattest shape last).
inline std::vector<Partition> enumerate_partitions(int t, int max_parts) {
    if (t < 0) throw std::invalid_argument("partition weight must be nonnegative");
    if (max_parts < 1) throw std::invalid_argument("max_parts must be positive");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_parts) return;
        for (int next = std::min(remaining, cap); next >= 1; --next) {
            cur.push_back(next);
            self(self, remaining - next, next);
            cur.pop_back();
        }
    };
    rec(rec, t, t);
    return out;
}

/// Dominance order for partitions of equal weight: a <= b iff every prefix
/// sum of a is bounded by that of b.
inline bool dominated_by(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    const int n = std::max(a.length(), b.length());
    for (int i = 0; i < n; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

} // namespace rieszkit

#endif
