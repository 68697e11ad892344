#include "hallforge/jordansym/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace hallforge::jordansym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_parts(std::vector<int> parts)
{
    std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '(' && c != ')')
            s += c;
    if (s.empty() || s == "0")
        return {};
    std::vector<int> parts;
    size_t start = 0;
    while (true) {
        size_t comma = s.find(',', start);
        std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("malformed partition '" + text + "'");
        parts.push_back(std::stoi(tok));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return Partition(std::move(parts));
}

Partition Partition::from_multiplicities(const std::vector<int>& counts)
{
    std::vector<int> parts;
    for (int i = static_cast<int>(counts.size()) - 1; i >= 0; --i)
        for (int k = 0; k < counts[i]; ++k)
            parts.push_back(i + 1);
    return Partition(std::move(parts));
}

int Partition::size() const
{
    int s = 0;
    for (int x : parts_)
        s += x;
    return s;
}

int Partition::multiplicity(int i) const
{
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
}

std::vector<int> Partition::multiplicities(int min_len) const
{
    std::vector<int> out(static_cast<size_t>(std::max(largest(), min_len)), 0);
    for (int x : parts_)
        ++out[x - 1];
    return out;
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

long n_of_lambda(const Partition& lambda)
{
    long n = 0;
    for (int i = 0; i < lambda.length(); ++i)
        n += static_cast<long>(i) * lambda.parts()[i];
    return n;
}

Partition column(int r) { return Partition(std::vector<int>(static_cast<size_t>(r), 1)); }

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int max_part) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, max_part); k >= 1; --k) {
            cur.push_back(k);
            self(self, rest - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

} // namespace hallforge::jordansym
