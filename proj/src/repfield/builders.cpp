#include "hallforge/repfield/builders.hpp"

#include <stdexcept>

namespace hallforge::repfield {

namespace {

// Thin module: 1-dimensional on the support, every arrow inside the support acts by 1.
Indecomposable thin(const QuiverSpec& spec, const std::string& label, const std::vector<int>& support)
{
    Indecomposable e;
    e.label = label;
    e.dim.assign(static_cast<size_t>(spec.num_vertices()), 0);
    for (int v : support)
        e.dim[v] = 1;
    e.rep.dims = e.dim;
    for (const auto& a : spec.arrows) {
        FpMatrix m(e.dim[a.target], e.dim[a.source]);
        if (e.dim[a.target] && e.dim[a.source])
            m(0, 0) = 1;
        e.rep.maps.push_back(m);
    }
    return e;
}

} // namespace

IndecomposableTable single_vertex(int p)
{
    QuiverSpec spec;
    spec.vertices = {"0"};
    spec.p = p;
    return IndecomposableTable(spec, {thin(spec, "k", {0})});
}

IndecomposableTable type_a(int n, int p)
{
    if (n < 1)
        throw std::invalid_argument("type_a: n must be positive");
    QuiverSpec spec;
    spec.p = p;
    // Vertex named k sits at position n-1-k.
    for (int k = n - 1; k >= 0; --k)
        spec.vertices.push_back(std::to_string(k));
    auto pos = [n](int k) { return n - 1 - k; };
    for (int k = n - 1; k >= 1; --k)
        spec.arrows.push_back({pos(k), pos(k - 1), "a" + std::to_string(k) + std::to_string(k - 1)});
    std::vector<Indecomposable> entries;
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
            std::string label;
            std::vector<int> support;
            for (int v = k; v >= j; --v) {
                label += std::to_string(v);
                support.push_back(pos(v));
            }
            entries.push_back(thin(spec, (j == k ? "S_" : "E_") + label, support));
        }
    return IndecomposableTable(spec, std::move(entries));
}

IndecomposableTable comm_square(int p)
{
    QuiverSpec spec;
    spec.p = p;
    spec.vertices = {"1", "2", "3", "4"};
    spec.arrows = {{0, 1, "a12"}, {0, 2, "a13"}, {1, 3, "a24"}, {2, 3, "a34"}};
    spec.relations = {{{1, {1, 3}}, {-1, {0, 2}}}};
    const std::vector<std::pair<std::string, std::vector<int>>> supports = {
        {"E_4", {3}},         {"E_24", {1, 3}},   {"E_34", {2, 3}}, {"E_234", {1, 2, 3}},
        {"E_3", {2}},         {"E_2", {1}},       {"E_1234", {0, 1, 2, 3}},
        {"E_123", {0, 1, 2}}, {"E_12", {0, 1}},   {"E_13", {0, 2}}, {"E_1", {0}}};
    std::vector<Indecomposable> entries;
    for (const auto& [label, sup] : supports)
        entries.push_back(thin(spec, label, sup));
    return IndecomposableTable(spec, std::move(entries));
}

namespace {

FpMatrix matrix_from_json(const nlohmann::json& j, int rows, int cols, int p)
{
    std::vector<int> flat;
    if (!j.is_array())
        throw std::invalid_argument("matrix must be an array");
    for (const auto& row : j) {
        if (row.is_array())
            for (const auto& x : row)
                flat.push_back(x.get<int>());
        else
            flat.push_back(row.get<int>());
    }
    if (flat.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols))
        throw std::invalid_argument("matrix has " + std::to_string(flat.size()) + " entries, expected " +
                                    std::to_string(rows * cols));
    return FpMatrix(rows, cols, std::move(flat), p);
}

} // namespace

IndecomposableTable table_from_json(const nlohmann::json& j)
{
    const auto& q = j.at("quiver");
    QuiverSpec spec;
    spec.p = j.at("p").get<int>();
    for (const auto& v : q.at("vertices"))
        spec.vertices.push_back(v.is_string() ? v.get<std::string>() : std::to_string(v.get<int>()));
    auto vertex = [&](const nlohmann::json& v) {
        return spec.vertex_index(v.is_string() ? v.get<std::string>() : std::to_string(v.get<int>()));
    };
    for (const auto& a : q.value("arrows", nlohmann::json::array()))
        spec.arrows.push_back({vertex(a.at(0)), vertex(a.at(1)), a.at(2).get<std::string>()});
    for (const auto& rel : q.value("relations", nlohmann::json::array())) {
        Relation r;
        for (const auto& term : rel) {
            PathTerm t;
            t.coefficient = term.at(0).get<int>();
            for (const auto& lab : term.at(1))
                t.path.push_back(spec.arrow_index(lab.get<std::string>()));
            r.push_back(std::move(t));
        }
        spec.relations.push_back(std::move(r));
    }
    spec.validate();

    std::vector<Indecomposable> entries;
    for (const auto& e : j.at("indecomposables")) {
        Indecomposable x;
        x.label = e.at("label").get<std::string>();
        x.dim.assign(static_cast<size_t>(spec.num_vertices()), 0);
        for (const auto& [v, d] : e.at("dim").items())
            x.dim[spec.vertex_index(v)] = d.get<int>();
        x.rep.dims = x.dim;
        const auto mats = e.value("matrices", nlohmann::json::object());
        for (const auto& a : spec.arrows) {
            const int r = x.dim[a.target], c = x.dim[a.source];
            if (mats.contains(a.label))
                x.rep.maps.push_back(matrix_from_json(mats.at(a.label), r, c, spec.p));
            else
                x.rep.maps.emplace_back(r, c);
        }
        entries.push_back(std::move(x));
    }
    return IndecomposableTable(std::move(spec), std::move(entries));
}

nlohmann::json table_to_json(const IndecomposableTable& t)
{
    const QuiverSpec& spec = t.spec();
    nlohmann::json q;
    q["vertices"] = spec.vertices;
    q["arrows"] = nlohmann::json::array();
    for (const auto& a : spec.arrows)
        q["arrows"].push_back({spec.vertices[a.source], spec.vertices[a.target], a.label});
    q["relations"] = nlohmann::json::array();
    for (const auto& rel : spec.relations) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& term : rel) {
            std::vector<std::string> labels;
            for (int a : term.path)
                labels.push_back(spec.arrows[a].label);
            r.push_back({term.coefficient, labels});
        }
        q["relations"].push_back(r);
    }
    nlohmann::json out;
    out["quiver"] = q;
    out["p"] = spec.p;
    out["indecomposables"] = nlohmann::json::array();
    for (int i = 0; i < t.size(); ++i) {
        const auto& e = t.entry(i);
        nlohmann::json dim = nlohmann::json::object();
        for (int v = 0; v < spec.num_vertices(); ++v)
            dim[spec.vertices[v]] = e.dim[v];
        nlohmann::json mats = nlohmann::json::object();
        for (size_t a = 0; a < spec.arrows.size(); ++a) {
            const FpMatrix& m = e.rep.maps[a];
            if (m.rows == 0 || m.cols == 0)
                continue;
            nlohmann::json rows = nlohmann::json::array();
            for (int r = 0; r < m.rows; ++r) {
                std::vector<int> row(m.a.begin() + static_cast<long>(r) * m.cols,
                                     m.a.begin() + static_cast<long>(r + 1) * m.cols);
                rows.push_back(row);
            }
            mats[spec.arrows[a].label] = rows;
        }
        out["indecomposables"].push_back({{"label", e.label}, {"dim", dim}, {"matrices", mats}});
    }
    return out;
}

} // namespace hallforge::repfield
