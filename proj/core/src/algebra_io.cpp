#include "mdlie/algebra_io.hpp"

#include <json.hpp>

#include <set>
#include <utility>

namespace mdlie {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw AlgebraFormatError(msg); }

void reject_unknown_fields(const ordered_json& obj, const std::set<std::string>& allowed,
                           const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) fail("unknown field \"" + it.key() + "\" in " + where);
}

std::size_t read_index(const ordered_json& obj, const char* key, std::size_t dim) {
    if (!obj.contains(key)) fail(std::string("bracket entry missing \"") + key + "\"");
    const auto& v = obj.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 1)
        fail(std::string("bracket index \"") + key + "\" must be a positive integer");
    auto idx = v.get<long long>();
    if (static_cast<std::size_t>(idx) > dim)
        fail(std::string("bracket index \"") + key + "\" exceeds dim");
    return static_cast<std::size_t>(idx);
}

}  // namespace

std::variant<LieAlgebra, JacobiViolation> read_algebra_json(const std::string& text) {
    ordered_json doc = ordered_json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail("input is not valid JSON");
    if (!doc.is_object()) fail("top-level JSON value must be an object");
    reject_unknown_fields(doc, {"dim", "basis", "brackets"}, "algebra document");

    if (!doc.contains("dim") || !doc.at("dim").is_number_integer() ||
        doc.at("dim").get<long long>() < 1)
        fail("\"dim\" must be a positive integer");
    auto dim = static_cast<std::size_t>(doc.at("dim").get<long long>());

    std::vector<std::string> labels;
    if (doc.contains("basis")) {
        const auto& basis = doc.at("basis");
        if (!basis.is_array()) fail("\"basis\" must be an array of strings");
        for (const auto& item : basis) {
            if (!item.is_string()) fail("\"basis\" must be an array of strings");
            labels.push_back(item.get<std::string>());
        }
        if (labels.size() != dim) fail("\"basis\" length must equal dim");
    }

    BracketTable table;
    if (doc.contains("brackets")) {
        const auto& brackets = doc.at("brackets");
        if (!brackets.is_array()) fail("\"brackets\" must be an array");
        for (const auto& entry : brackets) {
            if (!entry.is_object()) fail("each bracket entry must be an object");
            reject_unknown_fields(entry, {"i", "j", "out"}, "bracket entry");
            std::size_t i = read_index(entry, "i", dim);
            std::size_t j = read_index(entry, "j", dim);
            if (i >= j) fail("bracket entry requires i < j");
            if (!entry.contains("out") || !entry.at("out").is_object())
                fail("bracket entry requires an \"out\" object");

            std::vector<Rational> out(dim);
            for (auto it = entry.at("out").begin(); it != entry.at("out").end(); ++it) {
                long long k = 0;
                try {
                    std::size_t used = 0;
                    k = std::stoll(it.key(), &used);
                    if (used != it.key().size()) fail("\"out\" key is not an index");
                } catch (const AlgebraFormatError&) {
                    throw;
                } catch (...) {
                    fail("\"out\" key is not an index");
                }
                if (k < 1 || static_cast<std::size_t>(k) > dim)
                    fail("\"out\" index out of range");
                if (!it.value().is_string()) fail("coefficients must be rational strings");
                auto coeff = Rational::parse(it.value().get<std::string>());
                if (!coeff) fail("unparseable coefficient \"" +
                                 it.value().get<std::string>() + "\"");
                out[static_cast<std::size_t>(k) - 1] = *coeff;
            }

            auto key = std::make_pair(i - 1, j - 1);
            if (table.count(key)) fail("duplicate bracket pair");
            table[key] = std::move(out);
        }
    }

    return LieAlgebra::validated(dim, std::move(table), std::move(labels));
}

std::string write_algebra_json(const LieAlgebra& g) {
    ordered_json doc;
    doc["dim"] = g.dim();
    doc["basis"] = g.basis_labels();
    ordered_json brackets = ordered_json::array();
    for (const auto& [key, out] : g.table()) {
        ordered_json entry;
        entry["i"] = key.first + 1;
        entry["j"] = key.second + 1;
        ordered_json coeffs = ordered_json::object();
        for (std::size_t k = 0; k < out.size(); ++k)
            if (!out[k].is_zero()) coeffs[std::to_string(k + 1)] = out[k].str();
        entry["out"] = std::move(coeffs);
        brackets.push_back(std::move(entry));
    }
    doc["brackets"] = std::move(brackets);
    return doc.dump(2) + "\n";
}

}  // namespace mdlie
