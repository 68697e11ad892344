#include "hallforge/hallcore/category.hpp"

namespace hallforge::hallcore {

QuiverCategory::QuiverCategory(std::string name, repfield::IndecomposableTable table)
    : name_(std::move(name)), table_(std::move(table)), domain_{Rational(table_.spec().p)}
{
    for (int v = 0; v < table_.spec().num_vertices(); ++v) {
        int found = -1;
        for (int i = 0; i < table_.size(); ++i) {
            const auto& d = table_.entry(i).dim;
            int total = 0;
            for (int x : d)
                total += x;
            if (total == 1 && d[v] == 1)
                found = i;
        }
        if (found < 0)
            throw std::invalid_argument("indecomposable table lacks the simple at vertex " + table_.spec().vertices[v]);
        simple_.push_back(found);
    }
}

Rational QuiverCategory::aut(const Multiplicities& m) const { return Rational(table_.aut_order(m)); }

std::vector<SubquotientTerm<Rational>> QuiverCategory::subquotients(const Multiplicities& k) const
{
    repfield::SubquotientCensus c = repfield::census(table_, table_.realize(k));
    std::vector<SubquotientTerm<Rational>> out;
    for (const auto& [key, n] : c.counts)
        out.push_back({key.first, key.second, Rational(n)});
    return out;
}

} // namespace hallforge::hallcore
