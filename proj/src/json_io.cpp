#include "thickset/json_io.hpp"

namespace thickset::io {

json int_to_json(const Int& v) {
    if (v.fits_slong_p())
        return static_cast<std::int64_t>(v.get_si());
    return v.get_str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer() || j.is_number_unsigned())
        return Int(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw JsonFormatError("'" + j.get<std::string>() + "' is not a decimal integer");
        }
    }
    throw JsonFormatError("expected an integer (number or decimal string)");
}

json matrix_to_json(const IntMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMatrix matrix_from_json(const json& j) {
    if (!j.is_array())
        throw JsonFormatError("matrix must be an array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw JsonFormatError("matrix rows must be arrays of equal length");
        for (std::size_t k = 0; k < cols; ++k)
            m(i, k) = int_from_json(row.at(k));
    }
    return m;
}

namespace {

int degree_from_key(const std::string& key) {
    try {
        std::size_t used = 0;
        int degree = std::stoi(key, &used);
        if (used != key.size())
            throw std::invalid_argument(key);
        return degree;
    } catch (const std::exception&) {
        throw JsonFormatError("degree key '" + key + "' is not an integer");
    }
}

}  // namespace

json complex_to_json(const PerfectComplexZ& c) {
    json ranks = json::object();
    for (const auto& [degree, r] : c.ranks())
        ranks[std::to_string(degree)] = r;
    json diffs = json::object();
    for (const auto& [degree, d] : c.differentials())
        diffs[std::to_string(degree)] = matrix_to_json(d);
    return json{{"ranks", std::move(ranks)}, {"differentials", std::move(diffs)}};
}

PerfectComplexZ complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("ranks"))
        throw JsonFormatError("complex needs a 'ranks' object");
    std::map<int, std::size_t> ranks;
    for (const auto& [key, value] : j.at("ranks").items()) {
        if (!value.is_number_unsigned() && !value.is_number_integer())
            throw JsonFormatError("rank at degree " + key + " must be a nonnegative integer");
        const auto r = value.get<std::int64_t>();
        if (r < 0)
            throw JsonFormatError("rank at degree " + key + " must be >= 0");
        ranks[degree_from_key(key)] = static_cast<std::size_t>(r);
    }
    std::map<int, IntMatrix> diffs;
    if (j.contains("differentials"))
        for (const auto& [key, value] : j.at("differentials").items())
            diffs[degree_from_key(key)] = matrix_from_json(value);
    return PerfectComplexZ(std::move(ranks), std::move(diffs));
}

FinitePrimePoset load_poset(const json& j) {
    if (!j.is_object() || !j.contains("elements") || !j.at("elements").is_array())
        throw JsonFormatError("poset needs an 'elements' array");
    std::vector<std::string> elements;
    for (const auto& e : j.at("elements")) {
        if (!e.is_string())
            throw JsonFormatError("poset elements must be strings");
        elements.push_back(e.get<std::string>());
    }
    std::vector<std::pair<std::string, std::string>> relations;
    if (j.contains("relations"))
        for (const auto& r : j.at("relations")) {
            if (!r.is_array() || r.size() != 2 || !r.at(0).is_string() || !r.at(1).is_string())
                throw JsonFormatError("each relation must be a pair of element names");
            relations.emplace_back(r.at(0).get<std::string>(), r.at(1).get<std::string>());
        }
    return FinitePrimePoset(std::move(elements), relations);
}

PosetFile poset_from_json(const json& j) {
    PosetFile file;
    file.poset = std::make_shared<FinitePrimePoset>(load_poset(j));
    if (j.contains("cone_point")) {
        if (!j.at("cone_point").is_string())
            throw JsonFormatError("'cone_point' must be an element name");
        file.cone_point = j.at("cone_point").get<std::string>();
        auto g = file.poset->greatest();
        if (!file.poset->has_element(*file.cone_point))
            throw JsonFormatError("cone_point '" + *file.cone_point + "' is not an element");
        if (!g || file.poset->elements()[*g] != *file.cone_point)
            throw JsonFormatError("cone_point '" + *file.cone_point +
                                  "' is not the greatest element");
    }
    return file;
}

json support_to_json(const ThickSupport& s) {
    if (s.model().is_spec_z()) {
        if (s.is_whole())
            return json{{"whole", true}};
        json primes = json::array();
        for (const Int& p : s.primes())
            primes.push_back(int_to_json(p));
        return json{{"primes", std::move(primes)}};
    }
    json points = json::array();
    for (const auto& name : s.points())
        points.push_back(name);
    return json{{"points", std::move(points)}};
}

ThickSupport support_from_json(const ModelRef& model, const json& j) {
    if (model.is_spec_z()) {
        if (j.is_string() && j.get<std::string>() == "whole")
            return ThickSupport::whole(model);
        if (j.is_object() && j.value("whole", false))
            return ThickSupport::whole(model);
        const json& arr = j.is_object() && j.contains("primes") ? j.at("primes") : j;
        if (!arr.is_array())
            throw JsonFormatError("Spec Z support must be \"whole\" or a list of primes");
        std::set<Int> primes;
        for (const auto& p : arr)
            primes.insert(int_from_json(p));
        return ThickSupport::closed_points(std::move(primes));
    }
    const json& arr = j.is_object() && j.contains("points") ? j.at("points") : j;
    if (!arr.is_array())
        throw JsonFormatError("finite-model support must be a list of point names");
    std::set<std::string> points;
    for (const auto& p : arr) {
        if (!p.is_string())
            throw JsonFormatError("support points must be element names");
        points.insert(p.get<std::string>());
    }
    return ThickSupport::of_points(model, points);
}

json decomposition_to_json(const KSDecomposition& d) {
    json components = json::array();
    for (const auto& component : d.components)
        components.push_back(support_to_json(component));
    return json{{"components", std::move(components)}};
}

json group_to_json(const FgAbGroup& g) {
    json torsion = json::array();
    for (const Int& d : g.torsion)
        torsion.push_back(int_to_json(d));
    return json{{"free_rank", g.free_rank}, {"torsion", std::move(torsion)}};
}

json homology_to_json(const HomologyProfile& h) {
    json out = json::object();
    for (const auto& [degree, g] : h)
        out[std::to_string(degree)] = group_to_json(g);
    return out;
}

json k0_to_json(const K0Class& k) {
    json out = json::object();
    out["ambient"] = support_to_json(k.ambient);
    if (k.generic_rank)
        out["generic_rank"] = *k.generic_rank;
    else {
        json lengths = json::object();
        for (const auto& [p, len] : k.torsion_lengths)
            lengths[p.get_str()] = len;
        out["torsion_lengths"] = std::move(lengths);
    }
    return out;
}

json split_to_json(const SplitResult& r) {
    json out = json::array();
    for (const auto& piece : r.pieces) {
        json entry = json::object();
        if (piece.component.is_whole()) {
            entry["whole"] = true;
        } else {
            json primes = json::array();
            for (const Int& p : piece.component.primes())
                primes.push_back(int_to_json(p));
            entry["primes"] = std::move(primes);
        }
        entry["complex"] = complex_to_json(piece.piece);
        out.push_back(std::move(entry));
    }
    return out;
}

json spectra_to_json(const SpectraThick& t) {
    if (t.is_whole())
        return json{{"whole", true}};
    json heights = json::object();
    for (const auto& [p, n] : t.heights())
        heights[std::to_string(p)] = n;
    return json{{"heights", std::move(heights)}};
}

SpectraThick spectra_from_json(const json& j) {
    if (!j.is_object())
        throw JsonFormatError("spectra subcategory must be an object");
    if (j.value("whole", false))
        return SpectraThick::whole();
    std::map<std::int64_t, int> heights;
    if (j.contains("heights"))
        for (const auto& [key, value] : j.at("heights").items()) {
            if (!value.is_number_integer() && !value.is_number_unsigned())
                throw JsonFormatError("height at prime " + key + " must be an integer");
            std::int64_t p;
            try {
                std::size_t used = 0;
                p = std::stoll(key, &used);
                if (used != key.size())
                    throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw JsonFormatError("height key '" + key + "' is not an integer");
            }
            heights[p] = value.get<int>();
        }
    return SpectraThick::torsion(std::move(heights));
}

}  // namespace thickset::io
