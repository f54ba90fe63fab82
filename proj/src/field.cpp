#include "recon/field.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "recon/errors.hpp"
#include "recon/mesh.hpp"

namespace recon {

std::vector<int> SampleSet::ids() const {
    std::vector<int> out;
    out.reserve(entries.size());
    for (const auto& [v, _] : entries) out.push_back(v);
    return out;
}

void SampleSet::validate(const Mesh& mesh) const {
    if (entries.empty()) throw InputError("sample set is empty");
    for (const auto& [v, f] : entries) {
        if (v < 0 || v >= mesh.vertexCount())
            throw InputError("sample vertex " + std::to_string(v) +
                             " not in mesh (0.." +
                             std::to_string(mesh.vertexCount() - 1) + ")");
        if (!std::isfinite(f))
            throw InputError("sample value at vertex " + std::to_string(v) +
                             " is not finite");
    }
}

double LevelSequence::value(int index_1based) const {
    if (index_1based < 1 || index_1based > count())
        throw InputError("level index " + std::to_string(index_1based) +
                         " outside 1.." + std::to_string(count()));
    return levels[index_1based - 1];
}

void LevelSequence::validate() const {
    if (levels.empty()) throw InputError("level sequence is empty");
    if (!(spacing > 0.0)) throw InputError("level spacing must be positive");
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (!(levels[i - 1] < levels[i]))
            throw InputError("levels are not strictly increasing at index " +
                             std::to_string(i));
}

double ScalarField::at(int id) const {
    auto it = values.find(id);
    if (it == values.end())
        throw InputError("field has no value for index " + std::to_string(id));
    return it->second;
}

namespace {

std::map<int, double> parse_index_value_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open CSV file: " + path);
    std::map<int, double> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        // trim
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": expected 'index,value'");
        try {
            int idx = std::stoi(line.substr(0, comma));
            double val = std::stod(line.substr(comma + 1));
            if (idx < 0)
                throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": negative index");
            if (!out.emplace(idx, val).second)
                throw ParseError(path + ":" + std::to_string(lineno) +
                                 ": duplicate index " + std::to_string(idx));
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError(path + ":" + std::to_string(lineno) +
                             ": malformed 'index,value' line");
        }
    }
    return out;
}

} // namespace

SampleSet load_samples_csv(const std::string& path,
                           const Mesh* validate_against) {
    SampleSet s;
    s.entries = parse_index_value_csv(path);
    if (s.entries.empty()) throw ParseError(path + ": no samples");
    if (validate_against) s.validate(*validate_against);
    return s;
}

ScalarField load_field_csv(const std::string& path,
                           ScalarField::Domain domain) {
    ScalarField f;
    f.domain = domain;
    f.values = parse_index_value_csv(path);
    return f;
}

} // namespace recon
