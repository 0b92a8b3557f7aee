#include "vweyl/json_io.hpp"

#include <fstream>

namespace vwio {

using clifford::Algebra;
using clifford::AlgebraPtr;
using clifford::Multivector;
using exactform::QVector;
using exactform::RatMat;
using exactform::Rational;

json rational_json(const Rational& r) { return r.str(); }

Rational rational_from(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) throw parse_error("expected rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

json gram_json(const RatMat& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RatMat gram_from(const json& j) {
    if (!j.is_array()) throw parse_error("expected matrix array");
    const std::size_t n = j.size();
    RatMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n)
            throw parse_error("gram matrix must be square");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = rational_from(j[i][k]);
    }
    return m;
}

json space_json(const exactform::QuadSpace& s) {
    return json{{"dim", s.dim()}, {"gram", gram_json(s.gram())}};
}

exactform::SpacePtr space_from(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("gram"))
        throw parse_error("space: expected {dim, gram}");
    RatMat g = gram_from(j.at("gram"));
    if (j.at("dim").get<std::size_t>() != g.rows())
        throw parse_error("space: dim does not match gram");
    try {
        return exactform::QuadSpace::create(std::move(g));
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
}

json terms_json(const Multivector& x) {
    json obj = json::object();
    for (const auto& [mask, c] : x.terms())
        obj[clifford::blade_key(mask)] = rational_json(c);
    return obj;
}

Multivector terms_from(const json& j, const AlgebraPtr& alg) {
    if (!j.is_object()) throw parse_error("terms: expected object");
    clifford::TermMap t;
    for (const auto& [key, val] : j.items()) {
        clifford::BladeMask m;
        try {
            m = clifford::blade_from_key(key, alg->dim());
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what());
        }
        if (t.count(m)) throw parse_error("terms: duplicate blade " + key);
        t.emplace(m, rational_from(val));
    }
    return Multivector::from_terms(alg, std::move(t));
}

json multivector_json(const Multivector& x) {
    return json{{"space", space_json(x.algebra()->space())}, {"terms", terms_json(x)}};
}

Multivector multivector_from(const json& j) {
    if (!j.is_object() || !j.contains("space") || !j.contains("terms"))
        throw parse_error("multivector: expected {space, terms}");
    AlgebraPtr alg = Algebra::create(space_from(j.at("space")));
    return terms_from(j.at("terms"), alg);
}

json cliffmat_json(const vahlen::CliffMat2& m) {
    return json{{"space", space_json(m.algebra()->space())},
                {"a", terms_json(m.a)},
                {"b", terms_json(m.b)},
                {"c", terms_json(m.c)},
                {"d", terms_json(m.d)}};
}

vahlen::CliffMat2 cliffmat_from(const json& j) {
    if (!j.is_object() || !j.contains("space"))
        throw parse_error("cliffmat: expected {space, a, b, c, d}");
    AlgebraPtr alg = Algebra::create(space_from(j.at("space")));
    for (const char* key : {"a", "b", "c", "d"})
        if (!j.contains(key)) throw parse_error("cliffmat: missing entry " + std::string(key));
    return vahlen::CliffMat2(terms_from(j.at("a"), alg), terms_from(j.at("b"), alg),
                             terms_from(j.at("c"), alg), terms_from(j.at("d"), alg));
}

json cartan_json(const cartan::CartanMatrix& c, const std::vector<std::string>& labels) {
    json entries = json::array();
    for (std::size_t i = 0; i < c.rank(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < c.rank(); ++j) row.push_back(c(i, j));
        entries.push_back(std::move(row));
    }
    return json{{"labels", labels}, {"entries", entries}};
}

cartan::CartanMatrix cartan_from(const json& j) {
    if (!j.is_object() || !j.contains("entries"))
        throw parse_error("cartan: expected {labels, entries}");
    const json& e = j.at("entries");
    cartan::IntMat m(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i].is_array() || e[i].size() != e.size())
            throw parse_error("cartan: entries must be square");
        for (const auto& v : e[i]) m[i].push_back(v.get<long long>());
    }
    try {
        return cartan::CartanMatrix(std::move(m));
    } catch (const std::invalid_argument& ex) {
        throw parse_error(ex.what());
    }
}

json qvector_json(const QVector& v) {
    json arr = json::array();
    for (const auto& c : v) arr.push_back(rational_json(c));
    return arr;
}

QVector qvector_from(const json& j) {
    if (!j.is_array()) throw parse_error("vector: expected array");
    QVector v;
    for (const auto& c : j) v.push_back(rational_from(c));
    return v;
}

json extension_json(const cartan::ExtensionSpec& ext) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < ext.total_rank(); ++i)
        labels.push_back(cartan::ExtensionSpec::label(i));
    json roots = json::array();
    for (const auto& r : ext.simple_roots) roots.push_back(qvector_json(r));
    json theta = json::array();
    for (auto t : ext.theta) theta.push_back(t);
    return json{{"type", std::string(1, cartan::finite_type_char(ext.type))},
                {"rank", ext.rank},
                {"cartan", cartan_json(ext.cpp, labels)},
                {"gram", space_json(*ext.W)},
                {"simple_roots", roots},
                {"theta", theta},
                {"m", ext.m}};
}

json matrix_json(const RatMat& m) { return gram_json(m); }

RatMat matrix_from(const json& j) {
    if (!j.is_array() || j.empty()) throw parse_error("matrix: expected array");
    const std::size_t rows = j.size();
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    RatMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw parse_error("matrix: ragged rows");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from(j[i][k]);
    }
    return m;
}

json report_json(const paravector::Report& r) {
    json checks = json::object();
    for (const auto& c : r.checks) {
        json entry = json{{"pass", c.pass}};
        if (!c.witness.empty()) entry["witness"] = c.witness;
        checks[c.name] = std::move(entry);
    }
    return json{{"title", r.title}, {"checks", checks}, {"all_pass", r.all_pass()}};
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return j;
}

void save_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace vwio
