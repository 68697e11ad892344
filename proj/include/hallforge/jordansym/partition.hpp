#pragma once

#include <string>
#include <vector>

namespace hallforge::jordansym {

/// Weakly decreasing positive parts. The empty partition is the zero module.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless the parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    /// Sorts arbitrary positive parts and drops zeros.
    static Partition from_parts(std::vector<int> parts);
    /// "2,1", "(2,1)" or "" / "0" for the empty partition.
    static Partition parse(const std::string& text);
    /// From multiplicities: counts[i] copies of the part i+1.
    static Partition from_multiplicities(const std::vector<int>& counts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    /// m_i: the number of parts equal to i, for i >= 1.
    int multiplicity(int i) const;
    /// counts[i] = m_{i+1}, of length max(largest, min_len).
    std::vector<int> multiplicities(int min_len = 0) const;
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// n(lambda) = sum_i (i - 1) lambda_i.
long n_of_lambda(const Partition& lambda);

/// The partition (1^r).
Partition column(int r);

/// All partitions of n, parts in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

} // namespace hallforge::jordansym
