#pragma once

#include <fstream>
#include <set>
#include <string>

#include <json.hpp>

#include "codeclean/lattice.hpp"

namespace codeclean {

inline nlohmann::json spec_to_json(const CodeSpec& spec) {
    nlohmann::json j;
    j["name"] = spec.name;
    j["dimension"] = spec.lattice.dimension;
    j["dims"] = spec.lattice.dims;
    j["boundary"] = spec.lattice.boundary == Boundary::open ? "open" : "periodic";
    j["qubits"] = spec.qubit_coords;
    nlohmann::json gg = nlohmann::json::array();
    for (const auto& g : spec.gauge_generators) gg.push_back(format_pauli(spec, g));
    j["gauge_generators"] = gg;
    if (spec.has_stabilizer_list) {
        nlohmann::json sg = nlohmann::json::array();
        for (const auto& s : spec.stabilizer_generators) sg.push_back(format_pauli(spec, s));
        j["stabilizer_generators"] = sg;
    }
    j["css"] = spec.css;
    return j;
}

inline CodeSpec spec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("code spec: top level must be a JSON object");
    static const std::set<std::string> known = {"name",   "dimension",        "dims",
                                               "boundary", "qubits",           "gauge_generators",
                                               "stabilizer_generators", "css"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key())) throw parse_error("code spec: unknown field '" + it.key() + "'");
    for (const char* req : {"name", "dimension", "dims", "boundary", "qubits", "gauge_generators", "css"})
        if (!j.contains(req)) throw parse_error(std::string("code spec: missing field '") + req + "'");

    CodeSpec s;
    try {
        s.name = j.at("name").get<std::string>();
        s.lattice.dimension = j.at("dimension").get<int>();
        s.lattice.dims = j.at("dims").get<std::vector<int>>();
        std::string b = j.at("boundary").get<std::string>();
        if (b == "open")
            s.lattice.boundary = Boundary::open;
        else if (b == "periodic")
            s.lattice.boundary = Boundary::periodic;
        else
            throw parse_error("code spec: boundary must be \"open\" or \"periodic\"");
        s.qubit_coords = j.at("qubits").get<std::vector<std::vector<int>>>();
        s.css = j.at("css").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("code spec: ") + e.what());
    }
    s.finalize();

    auto parse_list = [&](const nlohmann::json& arr, const char* kind) {
        if (!arr.is_array()) throw parse_error(std::string("code spec: ") + kind + " must be an array");
        std::vector<PauliWord> out;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_string())
                throw parse_error(std::string("code spec: ") + kind + "[" + std::to_string(i) +
                                  "] must be a Pauli string");
            try {
                out.push_back(parse_pauli(s, arr[i].get<std::string>()));
            } catch (const validation_error& e) {
                throw validation_error(std::string("code spec: ") + kind + "[" + std::to_string(i) +
                                       "]: " + e.what());
            } catch (const parse_error& e) {
                throw parse_error(std::string("code spec: ") + kind + "[" + std::to_string(i) +
                                  "]: " + e.what());
            }
        }
        return out;
    };
    s.gauge_generators = parse_list(j.at("gauge_generators"), "gauge_generators");
    if (j.contains("stabilizer_generators")) {
        s.stabilizer_generators = parse_list(j.at("stabilizer_generators"), "stabilizer_generators");
        s.has_stabilizer_list = true;
    }
    validate(s);
    return s;
}

inline void save_spec(const CodeSpec& spec, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw parse_error("cannot open '" + path + "' for writing");
    os << spec_to_json(spec).dump(2) << '\n';
}

inline CodeSpec load_spec(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw parse_error("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("'" + path + "': " + e.what());
    }
    return spec_from_json(j);
}

}  // namespace codeclean
